#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "atgrs/io.hpp"
#include "atgrs/tgrs.hpp"

namespace atgrs {

enum class SearchMode { exhaustive, random_sample };

/// Twist-matrix search over a fixed (field, n, k, alpha, v) template.
/// Candidates either fill a fixed support pattern (positions given as
/// [row, col] with 0-based hook row and 1-based twist column, values swept
/// over 1..q-1) or, in weight mode, any placement of at most max_weight
/// nonzero entries.
struct SearchConfig {
    Field field;
    int n = 0;
    int k = 0;
    std::vector<Elt> alpha;
    std::vector<Elt> v;
    std::vector<std::pair<int, int>> support;  // row-major sorted
    std::optional<int> max_weight;             // weight mode when support absent
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t samples = 0;  // random mode
    std::uint64_t seed = 0;
    std::set<NoveltyClass> novelty_filter;  // empty = keep everything

    static SearchConfig parse(const json& j);
};

struct SearchHit {
    std::vector<std::vector<std::uint32_t>> eta;  // k rows, n-k entries
    MdsReport report;
};

struct RunReport {
    std::vector<std::string> command;
    std::vector<SearchHit> hits;
    std::uint64_t candidates = 0;
    std::optional<std::uint64_t> seed;
    double duration_ms = 0.0;  // diagnostics only; never part of the emitted report
};

/// Enumerates candidates in deterministic order (exhaustive: odometer over
/// the support positions, last position fastest; random: seed order),
/// keeps the MDS ones that pass the novelty filter.
/// Throws search_space_too_large when an exhaustive sweep would exceed 10^7
/// candidates.
RunReport run_search(const SearchConfig& cfg, int jobs = 1);

json run_report_to_json(const RunReport& r);
std::string run_report_to_text(const RunReport& r);

}  // namespace atgrs
