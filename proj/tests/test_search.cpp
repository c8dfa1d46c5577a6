#include <doctest.h>

#include "atgrs/search.hpp"
#include "support.hpp"

using namespace atgrs;
using namespace testsup;

namespace {

json base_config() {
    return json{
        {"field", {{"p", 11}}},
        {"n", 8},
        {"k", 7},
        {"alpha", {1, 2, 3, 5, 6, 8, 9, 10}},
    };
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("empty support reduces to the plain code") {
    json j = base_config();
    j["support"] = json::array();
    SearchConfig cfg = SearchConfig::parse(j);
    RunReport rep = run_search(cfg);
    CHECK(rep.candidates == 1);
    REQUIRE(rep.hits.size() == 1);
    CHECK(rep.hits[0].report.mds);
    CHECK(rep.hits[0].report.novelty == NoveltyClass::known_pattern);
}

TEST_CASE("exhaustive sweep finds the worked k=7 column") {
    json j = base_config();
    j["support"] = json::array({json::array({4, 1}), json::array({5, 1}), json::array({6, 1})});
    SearchConfig cfg = SearchConfig::parse(j);
    RunReport rep = run_search(cfg);
    CHECK(rep.candidates == 1000);  // 10^3 value assignments
    bool found = false;
    for (const auto& h : rep.hits)
        found |= (h.eta == std::vector<std::vector<std::uint32_t>>{{0}, {0}, {0}, {0}, {4}, {6}, {10}});
    CHECK(found);
    for (const auto& h : rep.hits) CHECK(h.report.mds);
}

TEST_CASE("parallel evaluation preserves the hit order") {
    json j = base_config();
    j["k"] = 5;
    j["support"] = json::array({json::array({1, 2}), json::array({2, 2}), json::array({2, 3})});
    SearchConfig cfg = SearchConfig::parse(j);
    RunReport seq = run_search(cfg, 1);
    RunReport par = run_search(cfg, 4);
    REQUIRE(seq.hits.size() == par.hits.size());
    for (std::size_t i = 0; i < seq.hits.size(); ++i) CHECK(seq.hits[i].eta == par.hits[i].eta);
}

TEST_CASE("novelty filter") {
    json j = base_config();
    j["k"] = 6;
    j["support"] = json::array({json::array({0, 1}), json::array({1, 2})});
    j["novelty"] = json::array({"condition-i"});
    SearchConfig cfg = SearchConfig::parse(j);
    RunReport rep = run_search(cfg);
    CHECK(!rep.hits.empty());
    for (const auto& h : rep.hits) CHECK(h.report.novelty == NoveltyClass::condition_i);
}

TEST_CASE("random mode replays bit-identically") {
    json j = base_config();
    j["k"] = 5;
    j["mode"] = "random";
    j["samples"] = 50;
    j["seed"] = 12345;
    j["max_weight"] = 4;
    SearchConfig cfg = SearchConfig::parse(j);
    RunReport a = run_search(cfg);
    RunReport b = run_search(cfg);
    CHECK(a.candidates == b.candidates);
    REQUIRE(a.hits.size() == b.hits.size());
    for (std::size_t i = 0; i < a.hits.size(); ++i) {
        CHECK(a.hits[i].eta == b.hits[i].eta);
        CHECK(a.hits[i].report.failing_subsets == b.hits[i].report.failing_subsets);
    }
    CHECK(a.seed == 12345);
    CHECK(run_report_to_json(a)["hits"] == run_report_to_json(b)["hits"]);
}

TEST_CASE("weight-bound exhaustive sweep stays within the cap") {
    json j = base_config();
    j["k"] = 6;
    j["max_weight"] = 1;  // 1 + 12 * 10 candidates
    SearchConfig cfg = SearchConfig::parse(j);
    RunReport rep = run_search(cfg);
    CHECK(rep.candidates == 121);

    json big = base_config();
    big["k"] = 4;
    big["max_weight"] = 16;
    CHECK_THROWS_AS((void)run_search(SearchConfig::parse(big)), Error);

    json wide = base_config();
    wide["k"] = 4;
    wide["support"] = json::array();
    for (int r = 0; r < 4; ++r)
        for (int c = 1; c <= 4; ++c) wide["support"].push_back(json::array({r, c}));
    CHECK_THROWS_AS((void)run_search(SearchConfig::parse(wide)), Error);
}

TEST_CASE("config validation") {
    json j = base_config();
    j["support"] = json::array({json::array({7, 1})});
    CHECK_THROWS_AS((void)SearchConfig::parse(j), Error);  // row out of range for k=7

    json j2 = base_config();
    j2["mode"] = "random";
    CHECK_THROWS_AS((void)SearchConfig::parse(j2), Error);  // samples missing

    json j3 = base_config();
    j3["mode"] = "sideways";
    CHECK_THROWS_AS((void)SearchConfig::parse(j3), Error);
}

}  // TEST_SUITE
