#include "p3hull/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <charconv>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "p3hull/combinations.hpp"
#include "p3hull/constructions.hpp"
#include "p3hull/decycling.hpp"
#include "p3hull/error.hpp"
#include "p3hull/graph.hpp"
#include "p3hull/infection.hpp"
#include "p3hull/search.hpp"

namespace p3hull {

namespace {

using Clock = std::chrono::steady_clock;

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

int parse_int(std::string_view text, const char* what) {
    const std::string t = trim(text);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size())
        throw ParseError(std::string("expected an integer for ") + what + ", got '" + t + "'");
    return value;
}

std::vector<std::string> split_list(std::string_view text) {
    std::vector<std::string> out;
    std::string token;
    for (char ch : text) {
        if (ch == ',') {
            if (auto t = trim(token); !t.empty()) out.push_back(t);
            token.clear();
        } else {
            token += ch;
        }
    }
    if (auto t = trim(token); !t.empty()) out.push_back(t);
    return out;
}

std::string set_text(const std::vector<int>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
    return out + "}";
}

bool wants(const CampaignConfig& config, const std::string& check) {
    return std::find(config.checks.begin(), config.checks.end(), check) != config.checks.end();
}

class ReportBuilder {
public:
    ReportBuilder(CampaignReport& report, std::string family) : report_(report), family_(std::move(family)) {}

    // Times fill(row) and appends the row.
    void add(const std::string& theorem, int n, const std::string& k_or_perm,
             const std::function<void(ReportRow&)>& fill) {
        ReportRow row{theorem, family_, n, k_or_perm, {}, {}, false, 0.0};
        const auto started = Clock::now();
        fill(row);
        row.ms = std::chrono::duration<double, std::milli>(Clock::now() - started).count();
        report_.rows.push_back(std::move(row));
    }

private:
    CampaignReport& report_;
    std::string family_;
};

SearchOptions search_options(const CampaignConfig& config) {
    SearchOptions options;
    options.parallelism = config.parallelism;
    return options;
}

// Hull-set and decycling-set tests disagree on how many subsets.
std::uint64_t equivalence_discrepancies(const Graph& g, const CampaignConfig& config, std::uint64_t& checked) {
    const int v = g.vertex_count();
    std::uint64_t bad = 0;
    const auto check = [&](const VertexSet& s) {
        ++checked;
        if (is_hull_set(g, s) != is_decycling_set(g, s)) ++bad;
    };
    if (v <= 16) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << v); ++mask)
            check(VertexSet::from_mask(static_cast<std::size_t>(v), mask));
        return bad;
    }
    std::mt19937_64 rng(config.seed + static_cast<std::uint64_t>(g.family().n) * 131 +
                        static_cast<std::uint64_t>(g.family().k));
    std::vector<Vertex> order(static_cast<std::size_t>(v));
    std::iota(order.begin(), order.end(), 0);
    for (int trial = 0; trial < config.random_subsets; ++trial) {
        // Uniform size, then a uniform subset of that size.
        const int size = static_cast<int>(rng() % static_cast<std::uint64_t>(v + 1));
        std::shuffle(order.begin(), order.end(), rng);
        check(VertexSet::from_indices(static_cast<std::size_t>(v), std::span(order).first(static_cast<std::size_t>(size))));
    }
    return bad;
}

void run_gp(const CampaignConfig& config, CampaignReport& report) {
    ReportBuilder rows(report, "gp");
    for (int n = config.n_min; n <= config.n_max; ++n) {
        for (int k = 1; 2 * k < n; ++k) {
            if (config.fixed_k && *config.fixed_k != k) continue;
            const Graph g = build_generalized_petersen(n, k);
            const std::string ks = std::to_string(k);
            const int formula = predicted_hull_number_gp(n, k);

            if (wants(config, "main")) {
                rows.add("main", n, ks, [&](ReportRow& row) {
                    std::uint64_t checked = 0;
                    const auto bad = equivalence_discrepancies(g, config, checked);
                    row.expected = "0";
                    row.observed = std::to_string(bad);
                    row.pass = bad == 0;
                });
                rows.add("main-optimum", n, ks, [&](ReportRow& row) {
                    const auto hull = min_hull_number(g, search_options(config));
                    const auto decycle = min_decycling_number(g, search_options(config));
                    const bool cross = is_decycling_set(g, hull.witness) && is_hull_set(g, decycle.witness);
                    row.expected = std::to_string(hull.optimum);
                    row.observed = std::to_string(decycle.optimum);
                    row.pass = hull.optimum == decycle.optimum && cross && hull.certified && decycle.certified;
                });
            }
            if (wants(config, "hull-formula")) {
                rows.add("hull-formula", n, ks, [&](ReportRow& row) {
                    const auto result = min_hull_number(g, search_options(config));
                    row.expected = std::to_string(formula);
                    row.observed = std::to_string(result.optimum);
                    row.pass = result.optimum == formula && result.certified;
                });
                rows.add("infecting-set", n, ks, [&](ReportRow& row) {
                    row.expected = std::to_string(formula);
                    try {
                        const auto s = canonical_infecting_set(n, k);
                        row.observed = std::to_string(s.count());
                        row.pass = static_cast<int>(s.count()) == formula && is_hull_set(g, s);
                    } catch (const ConstructionFailed&) {
                        row.observed = "not-infecting";
                    }
                });
            }
            if (wants(config, "dan-time")) {
                rows.add("dan-time", n, ks, [&](ReportRow& row) {
                    const int predicted = predicted_infecting_time(n, k);
                    row.expected = std::to_string(predicted);
                    try {
                        const auto time = infecting_time(g, canonical_infecting_set(n, k));
                        row.observed = time ? std::to_string(*time) : "not-infecting";
                        row.pass = time == predicted;
                    } catch (const ConstructionFailed&) {
                        row.observed = "not-infecting";
                    }
                });
            }
            if (wants(config, "components")) {
                std::vector<VertexSet> sets;
                std::uint64_t violations = 0;
                std::uint64_t time_mismatches = 0;
                rows.add("components", n, ks, [&](ReportRow& row) {
                    EnumerateOptions options;
                    options.parallelism = config.parallelism;
                    sets = enumerate_min_hull_sets(g, min_hull_number(g, search_options(config)).optimum, options);
                    for (const auto& s : sets) {
                        const auto profile = forest_profile(g, s);
                        const int c = profile.component_count;
                        const int pairs = profile.removed_adjacent_pairs;
                        bool ok = c == 1 || c == 2;
                        if (n % 2 == 1) ok = ok && c == 1;
                        else ok = ok && ((c == 2) == (pairs == 0)) && ((c == 1) == (pairs == 1));
                        if (!ok) ++violations;
                        if (infecting_time(g, s) != diameter_to_time(profile.max_diameter)) ++time_mismatches;
                    }
                    row.expected = "0";
                    row.observed = std::to_string(violations);
                    row.pass = violations == 0 && !sets.empty();
                });
                rows.add("diam-lemma", n, ks, [&](ReportRow& row) {
                    row.expected = "0";
                    row.observed = std::to_string(time_mismatches);
                    row.pass = time_mismatches == 0 && !sets.empty();
                });
            }
        }
    }
}

void run_spectrum(const CampaignConfig& config, CampaignReport& report) {
    ReportBuilder rows(report, "gn1-spectrum");
    for (int n = config.n_min; n <= config.n_max; ++n) {
        rows.add("full-time", n, "1", [&](ReportRow& row) {
            const auto predicted = predicted_diameter_set_gn1(n);
            const auto spectrum = diameter_spectrum_gn1(n, config.parallelism);
            row.expected = set_text(predicted);
            row.observed = set_text(spectrum.diameters);
            row.pass = predicted == spectrum.diameters;
        });
    }
}

void run_surgery(const CampaignConfig& config, CampaignReport& report) {
    ReportBuilder rows(report, "surgery");
    for (int n = config.n_min; n <= config.n_max; ++n) {
        for (int k = 1; 2 * k < n; ++k) {
            if (config.fixed_k && *config.fixed_k != k) continue;
            const Graph g = build_surgery(n, k);
            const std::string ks = std::to_string(k);
            const int predicted = predicted_hull_surgery(n, k);
            rows.add("surgery", n, ks, [&](ReportRow& row) {
                const auto result = min_hull_number(g, search_options(config));
                row.expected = std::to_string(predicted);
                row.observed = std::to_string(result.optimum);
                row.pass = result.optimum == predicted && result.certified;
            });
            rows.add("surgery-set", n, ks, [&](ReportRow& row) {
                row.expected = std::to_string(predicted);
                try {
                    const auto s = surgery_infecting_set(n, k);
                    row.observed = std::to_string(s.count());
                    row.pass = static_cast<int>(s.count()) == predicted && is_hull_set(g, s);
                } catch (const ConstructionFailed&) {
                    row.observed = "not-infecting";
                }
            });
        }
    }
}

void run_ggp(const CampaignConfig& config, CampaignReport& report) {
    ReportBuilder rows(report, "ggp");
    for (int n = config.n_min; n <= config.n_max; ++n) {
        for (const auto& perm : ggp_corpus(n)) {
            const Graph g = build_ggp(perm);
            const std::string tag = render(perm);
            const auto bounds = ggp_hull_bounds(perm);
            std::optional<SearchResult> result;
            const auto optimum = [&] {
                if (!result) result = min_hull_number(g, search_options(config));
                return result->optimum;
            };
            if (wants(config, "ggp-bounds")) {
                rows.add("ggp-bounds", n, tag, [&](ReportRow& row) {
                    const int opt = optimum();
                    row.expected = bounds.exact ? std::to_string(*bounds.exact)
                                                : std::to_string(bounds.lower) + ".." + std::to_string(bounds.upper);
                    row.observed = std::to_string(opt);
                    row.pass = bounds.lower <= opt && opt <= bounds.upper && (!bounds.exact || opt == *bounds.exact) &&
                               result->certified;
                });
            }
            if (wants(config, "min-ggp")) {
                const auto start = ggp_path_condition(perm);
                if (!start) continue;
                rows.add("min-ggp", n, tag, [&](ReportRow& row) {
                    const int target = (n + 2) / 2;
                    const int opt = optimum();
                    row.expected = std::to_string(target);
                    try {
                        const auto s = ggp_infecting_set(perm, *start);
                        row.observed = std::to_string(opt) + "/" + std::to_string(s.count());
                        row.pass = opt == target && static_cast<int>(s.count()) == target && is_hull_set(g, s);
                    } catch (const ConstructionFailed&) {
                        row.observed = std::to_string(opt) + "/not-infecting";
                    }
                });
            }
        }
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string format_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

// Partitions of n into parts >= 3, parts non-increasing.
void partitions(int remaining, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 3; --part) {
        current.push_back(part);
        partitions(remaining - part, part, current, out);
        current.pop_back();
    }
}

std::vector<std::vector<int>> contiguous_cycles(const std::vector<int>& parts) {
    std::vector<std::vector<int>> cycles;
    int next = 0;
    for (int part : parts) {
        std::vector<int> cycle(static_cast<std::size_t>(part));
        std::iota(cycle.begin(), cycle.end(), next);
        next += part;
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

std::vector<std::vector<int>> interleaved_cycles(const std::vector<int>& parts, int n) {
    std::vector<std::vector<int>> cycles(parts.size());
    std::size_t slot = 0;
    for (int i = 0; i < n; ++i) {
        while (static_cast<int>(cycles[slot].size()) == parts[slot]) slot = (slot + 1) % parts.size();
        cycles[slot].push_back(i);
        slot = (slot + 1) % parts.size();
    }
    return cycles;
}

}  // namespace

bool CampaignReport::all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
}

CampaignFamily parse_campaign_family(std::string_view name) {
    if (name == "gp") return CampaignFamily::GP;
    if (name == "surgery") return CampaignFamily::Surgery;
    if (name == "gn1-spectrum") return CampaignFamily::GN1Spectrum;
    if (name == "ggp") return CampaignFamily::GGP;
    throw InvalidParams("unknown campaign family '" + std::string(name) + "'");
}

std::string campaign_family_name(CampaignFamily family) {
    switch (family) {
        case CampaignFamily::GP:
            return "gp";
        case CampaignFamily::Surgery:
            return "surgery";
        case CampaignFamily::GN1Spectrum:
            return "gn1-spectrum";
        case CampaignFamily::GGP:
            return "ggp";
    }
    return "gp";
}

std::vector<std::string> checks_for(CampaignFamily family) {
    switch (family) {
        case CampaignFamily::GP:
            return {"main", "hull-formula", "components", "dan-time"};
        case CampaignFamily::Surgery:
            return {"surgery"};
        case CampaignFamily::GN1Spectrum:
            return {"full-time"};
        case CampaignFamily::GGP:
            return {"ggp-bounds", "min-ggp"};
    }
    return {};
}

std::pair<int, int> parse_n_range(std::string_view text) {
    const std::string t = trim(text);
    const auto dots = t.find("..");
    if (dots == std::string::npos) {
        const int n = parse_int(t, "n");
        return {n, n};
    }
    return {parse_int(std::string_view(t).substr(0, dots), "n range start"),
            parse_int(std::string_view(t).substr(dots + 2), "n range end")};
}

CampaignConfig parse_config_file(std::string_view text) {
    CampaignConfig config;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) throw ParseError("config line " + std::to_string(line_no) + ": expected key=value");
        const std::string key = trim(std::string_view(body).substr(0, eq));
        const std::string value = trim(std::string_view(body).substr(eq + 1));
        if (key == "family") {
            config.family = parse_campaign_family(value);
        } else if (key == "n") {
            std::tie(config.n_min, config.n_max) = parse_n_range(value);
        } else if (key == "k") {
            if (value == "all") config.fixed_k.reset();
            else config.fixed_k = parse_int(value, "k");
        } else if (key == "checks") {
            config.checks = split_list(value);
        } else if (key == "out") {
            config.output_path = value;
        } else if (key == "parallelism") {
            config.parallelism = parse_int(value, "parallelism");
        } else if (key == "timing") {
            if (value != "on" && value != "off") throw ParseError("timing must be on or off");
            config.timing = value == "on";
        } else if (key == "seed") {
            config.seed = static_cast<std::uint64_t>(parse_int(value, "seed"));
        } else if (key == "random_subsets") {
            config.random_subsets = parse_int(value, "random_subsets");
        } else {
            throw ParseError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
    return config;
}

void validate(const CampaignConfig& config) {
    if (config.checks.empty()) throw InvalidParams("no checks selected");
    const auto allowed = checks_for(config.family);
    for (const auto& check : config.checks)
        if (std::find(allowed.begin(), allowed.end(), check) == allowed.end())
            throw InvalidParams("check '" + check + "' does not apply to family " +
                                campaign_family_name(config.family));
    if (config.n_min < 3 || config.n_min > config.n_max)
        throw InvalidParams("n range must satisfy 3 <= start <= end");
    if (config.parallelism < 1) throw InvalidParams("parallelism must be at least 1");

    const int cap = default_search_cap();
    int vertices = 0;
    switch (config.family) {
        case CampaignFamily::GP:
        case CampaignFamily::GGP:
            vertices = 2 * config.n_max;
            break;
        case CampaignFamily::Surgery:
            vertices = 4 * config.n_max;
            break;
        case CampaignFamily::GN1Spectrum:
            if (config.n_max > kMaxSpectrumN)
                throw ExceedsCapacity("gn1-spectrum is capped at n = " + std::to_string(kMaxSpectrumN));
            break;
    }
    if (vertices > cap)
        throw ExceedsCapacity("n = " + std::to_string(config.n_max) + " needs " + std::to_string(vertices) +
                              " vertices; the search cap is " + std::to_string(cap));
}

CampaignReport run_campaign(const CampaignConfig& config) {
    validate(config);
    CampaignReport report;
    switch (config.family) {
        case CampaignFamily::GP:
            run_gp(config, report);
            break;
        case CampaignFamily::Surgery:
            run_surgery(config, report);
            break;
        case CampaignFamily::GN1Spectrum:
            run_spectrum(config, report);
            break;
        case CampaignFamily::GGP:
            run_ggp(config, report);
            break;
    }
    return report;
}

std::string report_to_csv(const CampaignReport& report, bool timing) {
    std::string out = "theorem,family,n,k_or_perm,expected,observed,pass,ms\n";
    for (const auto& r : report.rows) {
        out += csv_field(r.theorem) + ',' + csv_field(r.family) + ',' + std::to_string(r.n) + ',' +
               csv_field(r.k_or_perm) + ',' + csv_field(r.expected) + ',' + csv_field(r.observed) + ',' +
               (r.pass ? "true" : "false") + ',' + format_ms(timing ? r.ms : 0.0) + '\n';
    }
    return out;
}

nlohmann::json report_to_json(const CampaignReport& report, bool timing) {
    auto rows = nlohmann::json::array();
    for (const auto& r : report.rows)
        rows.push_back({{"theorem", r.theorem},
                        {"family", r.family},
                        {"n", r.n},
                        {"k_or_perm", r.k_or_perm},
                        {"expected", r.expected},
                        {"observed", r.observed},
                        {"pass", r.pass},
                        {"ms", timing ? r.ms : 0.0}});
    return {{"rows", rows}, {"all_pass", report.all_pass()}};
}

std::vector<Permutation> ggp_corpus(int n) {
    std::vector<std::vector<int>> types;
    std::vector<int> current;
    partitions(n, n, current, types);

    std::vector<Permutation> corpus;
    std::set<std::vector<int>> seen;
    const auto add = [&](const std::vector<std::vector<int>>& cycles) {
        auto perm = Permutation::from_cycles(n, cycles);
        if (seen.insert(perm.image()).second) corpus.push_back(std::move(perm));
    };
    for (std::size_t t = 0; t < types.size(); ++t) {
        const auto& parts = types[t];
        const auto base = contiguous_cycles(parts);
        add(base);
        add(interleaved_cycles(parts, n));
        for (int r = 0; r < 2; ++r) {
            std::mt19937 rng(static_cast<std::uint32_t>(n * 1000 + static_cast<int>(t) * 10 + r));
            std::vector<int> relabel(static_cast<std::size_t>(n));
            std::iota(relabel.begin(), relabel.end(), 0);
            std::shuffle(relabel.begin(), relabel.end(), rng);
            auto cycles = base;
            for (auto& cycle : cycles)
                for (int& x : cycle) x = relabel[static_cast<std::size_t>(x)];
            add(cycles);
        }
    }
    return corpus;
}

}  // namespace p3hull
