#include <doctest.h>

#include <algorithm>
#include <set>

#include "p3hull/campaign.hpp"
#include "p3hull/error.hpp"

using namespace p3hull;

TEST_CASE("n ranges") {
    CHECK(parse_n_range("3..10") == std::pair{3, 10});
    CHECK(parse_n_range("7") == std::pair{7, 7});
    CHECK_THROWS_AS(parse_n_range("3-10"), ParseError);
    CHECK_THROWS_AS(parse_n_range("a..b"), ParseError);
}

TEST_CASE("config file parsing") {
    const auto config = parse_config_file(
        "# nightly\n"
        "family = surgery\n"
        "n = 4..6   # inclusive\n"
        "k = 1\n"
        "checks = surgery, main\n"
        "parallelism = 2\n"
        "timing = off\n"
        "\n");
    CHECK(config.family == CampaignFamily::Surgery);
    CHECK(config.n_min == 4);
    CHECK(config.n_max == 6);
    CHECK(config.fixed_k == 1);
    CHECK(config.checks == std::vector<std::string>{"surgery", "main"});
    CHECK(config.parallelism == 2);
    CHECK_FALSE(config.timing);

    CHECK_THROWS_AS(parse_config_file("family gp\n"), ParseError);
    CHECK_THROWS_AS(parse_config_file("colour = red\n"), ParseError);
    CHECK_THROWS_AS(parse_config_file("timing = maybe\n"), ParseError);
    CHECK_THROWS_AS(parse_config_file("family = cube\n"), InvalidParams);
}

TEST_CASE("config validation") {
    CampaignConfig config;
    CHECK_THROWS_AS(validate(config), InvalidParams);
    config.checks = {"surgery"};
    CHECK_THROWS_AS(validate(config), InvalidParams);
    config.checks = {"hull-formula"};
    config.n_min = 8;
    config.n_max = 5;
    CHECK_THROWS_AS(validate(config), InvalidParams);
    config.n_min = 3;
    config.n_max = 17;
    CHECK_THROWS_AS(validate(config), ExceedsCapacity);
    config.n_max = 16;
    CHECK_NOTHROW(validate(config));

    CampaignConfig spectrum{.family = CampaignFamily::GN1Spectrum, .n_min = 4, .n_max = 13, .checks = {"full-time"}};
    CHECK_THROWS_AS(validate(spectrum), ExceedsCapacity);
}

TEST_CASE("small gp campaign passes every row") {
    CampaignConfig config{.family = CampaignFamily::GP,
                          .n_min = 3,
                          .n_max = 7,
                          .checks = {"main", "hull-formula", "components", "dan-time"},
                          .timing = false};
    const auto report = run_campaign(config);
    CHECK(report.all_pass());
    // one row per check per (n, k): (3,1) (4,1) (5,1..2) (6,1..2) (7,1..3)
    CHECK(report.rows.size() >= 4 * 9);
    for (const auto& row : report.rows) CHECK(row.family == "gp");
}

TEST_CASE("reports are byte-identical across runs") {
    CampaignConfig config{.family = CampaignFamily::GP,
                          .n_min = 5,
                          .n_max = 8,
                          .checks = {"hull-formula", "dan-time"},
                          .parallelism = 2,
                          .timing = false};
    const auto a = report_to_csv(run_campaign(config), false);
    const auto b = report_to_csv(run_campaign(config), false);
    CHECK(a == b);
    CHECK(a.rfind("theorem,family,n,k_or_perm,expected,observed,pass,ms\n", 0) == 0);
    CHECK(a.find("hull-formula,gp,5,2,3,3,true,0") != std::string::npos);

    const auto doc = report_to_json(run_campaign(config), false);
    CHECK(doc.dump() == report_to_json(run_campaign(config), false).dump());
}

TEST_CASE("failing rows are reported, not hidden") {
    CampaignConfig config{.family = CampaignFamily::GN1Spectrum, .n_min = 5, .n_max = 6, .checks = {"full-time"}};
    const auto report = run_campaign(config);
    REQUIRE(report.rows.size() == 2);
    CHECK(report.rows[0].pass);
    CHECK(report.rows[0].observed == "{5}");
    CHECK_FALSE(report.rows[1].pass);
    CHECK(report.rows[1].expected == "{3 4 6 7}");
    CHECK(report.rows[1].observed == "{2 3 4 6 7}");
    CHECK_FALSE(report.all_pass());
}

TEST_CASE("generalized corpus") {
    std::size_t total = 0;
    bool has_spread_triangles = false;
    for (int n = 3; n <= 10; ++n) {
        const auto corpus = ggp_corpus(n);
        CHECK_FALSE(corpus.empty());
        std::set<std::vector<int>> distinct;
        for (const auto& perm : corpus) {
            CHECK(perm.size() == n);
            distinct.insert(perm.image());
            for (const auto& c : perm.cycles()) CHECK(c.size() >= 3);
            if (render(perm) == "(0 3 6)(1 4 7)(2 5 8)") has_spread_triangles = true;
        }
        CHECK(distinct.size() == corpus.size());
        total += corpus.size();
    }
    CHECK(total >= 30);
    CHECK(has_spread_triangles);
    CHECK(ggp_corpus(9) == ggp_corpus(9));
}
