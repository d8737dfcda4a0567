#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "p3hull/permutation.hpp"

namespace p3hull {

enum class CampaignFamily { GP, Surgery, GN1Spectrum, GGP };

// Batch verification of the closed-form results against exhaustive search
// and simulation over a range of instances.
struct CampaignConfig {
    CampaignFamily family = CampaignFamily::GP;
    int n_min = 3;
    int n_max = 10;
    // Unset = every valid k for each n.
    std::optional<int> fixed_k;
    // Subset of: main, hull-formula, components, dan-time, full-time,
    // surgery, ggp-bounds, min-ggp.
    std::vector<std::string> checks;
    std::string output_path;
    int parallelism = 1;
    // When false the ms column is written as 0 so reports are byte-stable.
    bool timing = true;
    // Random subsets per graph for the main check once 2n > 16.
    int random_subsets = 10000;
    std::uint64_t seed = 20240615;
};

struct ReportRow {
    std::string theorem;
    std::string family;
    int n = 0;
    std::string k_or_perm;
    std::string expected;
    std::string observed;
    bool pass = false;
    double ms = 0.0;
};

struct CampaignReport {
    std::vector<ReportRow> rows;

    bool all_pass() const;
};

CampaignFamily parse_campaign_family(std::string_view name);
std::string campaign_family_name(CampaignFamily family);

// Checks allowed for a family.
std::vector<std::string> checks_for(CampaignFamily family);

// "a..b" or a single integer.
std::pair<int, int> parse_n_range(std::string_view text);

// key=value lines (family, n, k, checks, out, parallelism, timing, seed,
// random_subsets); '#' starts a comment. Throws ParseError.
CampaignConfig parse_config_file(std::string_view text);

// Throws InvalidParams for empty/unknown/mismatched checks or a bad range,
// ExceedsCapacity when the range exceeds the family's cap.
void validate(const CampaignConfig& config);

CampaignReport run_campaign(const CampaignConfig& config);

// Header: theorem,family,n,k_or_perm,expected,observed,pass,ms
std::string report_to_csv(const CampaignReport& report, bool timing = true);
nlohmann::json report_to_json(const CampaignReport& report, bool timing = true);

// Fixed-point-free permutations of {0..n-1} with all cycles >= 3: for each
// cycle type, contiguous blocks, a round-robin interleave and two seeded
// random relabelings, deduplicated, in a fixed order.
std::vector<Permutation> ggp_corpus(int n);

}  // namespace p3hull
