#include "atgrs/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

namespace atgrs {

SearchConfig SearchConfig::parse(const json& j) {
    SearchConfig cfg;
    if (!j.is_object()) fail(errc::invalid_argument, "search config must be a JSON object");
    if (!j.contains("field")) fail(errc::invalid_argument, "missing field \"field\"");
    cfg.field = parse_field(j.at("field"));
    if (!j.contains("n") || !j.contains("k")) fail(errc::invalid_argument, "missing \"n\" or \"k\"");
    cfg.n = j.at("n").get<int>();
    cfg.k = j.at("k").get<int>();
    if (!j.contains("alpha")) fail(errc::invalid_argument, "missing field \"alpha\"");
    cfg.alpha = parse_elt_list(*cfg.field, j.at("alpha"), "alpha");
    if (j.contains("v") && !j.at("v").is_null())
        cfg.v = parse_elt_list(*cfg.field, j.at("v"), "v");

    if (j.contains("support") && !j.at("support").is_null()) {
        for (const auto& pos : j.at("support")) {
            if (!pos.is_array() || pos.size() != 2)
                fail(errc::invalid_argument, "\"support\" entries must be [row, col] pairs");
            int r = pos.at(0).get<int>(), c = pos.at(1).get<int>();
            if (r < 0 || r >= cfg.k || c < 1 || c > cfg.n - cfg.k)
                fail(errc::invalid_argument, "\"support\" position (" + std::to_string(r) + ", " +
                                                 std::to_string(c) + ") outside the twist matrix");
            cfg.support.emplace_back(r, c);
        }
        std::sort(cfg.support.begin(), cfg.support.end());
        cfg.support.erase(std::unique(cfg.support.begin(), cfg.support.end()), cfg.support.end());
    }
    if (j.contains("max_weight") && !j.at("max_weight").is_null()) {
        if (!cfg.support.empty())
            fail(errc::invalid_argument, "give either \"support\" or \"max_weight\", not both");
        cfg.max_weight = j.at("max_weight").get<int>();
        if (*cfg.max_weight < 1 || *cfg.max_weight > cfg.k * (cfg.n - cfg.k))
            fail(errc::invalid_argument, "\"max_weight\" outside [1, k*(n-k)]");
    }

    std::string mode = j.value("mode", std::string("exhaustive"));
    if (mode == "exhaustive") cfg.mode = SearchMode::exhaustive;
    else if (mode == "random") cfg.mode = SearchMode::random_sample;
    else fail(errc::invalid_argument, "\"mode\" must be \"exhaustive\" or \"random\"");

    cfg.samples = j.value("samples", std::uint64_t{0});
    cfg.seed = j.value("seed", std::uint64_t{0});
    if (cfg.mode == SearchMode::random_sample && cfg.samples == 0)
        fail(errc::invalid_argument, "random mode needs \"samples\" > 0");

    if (j.contains("novelty") && !j.at("novelty").is_null()) {
        for (const auto& s : j.at("novelty")) {
            std::string name = s.get<std::string>();
            if (name == "known-pattern") cfg.novelty_filter.insert(NoveltyClass::known_pattern);
            else if (name == "condition-i") cfg.novelty_filter.insert(NoveltyClass::condition_i);
            else if (name == "condition-ii") cfg.novelty_filter.insert(NoveltyClass::condition_ii);
            else if (name == "neither") cfg.novelty_filter.insert(NoveltyClass::neither);
            else fail(errc::invalid_argument, "unknown novelty class \"" + name + "\"");
        }
    }
    return cfg;
}

namespace {

std::vector<std::vector<std::uint32_t>> eta_rows(const TwistMatrix& t) {
    std::vector<std::vector<std::uint32_t>> rows(static_cast<std::size_t>(t.k()));
    for (int m = 0; m < t.k(); ++m) {
        rows[static_cast<std::size_t>(m)].resize(static_cast<std::size_t>(t.twists()));
        for (int j = 1; j <= t.twists(); ++j)
            rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(j - 1)] = t.entry(m, j).value();
    }
    return rows;
}

struct Candidate {
    std::vector<std::pair<int, int>> positions;
    std::vector<std::uint32_t> values;  // parallel to positions, each in [1, q-1]
};

TwistMatrix to_twist(const SearchConfig& cfg, const Candidate& c) {
    TwistMatrix t(*cfg.field, cfg.k, cfg.n - cfg.k);
    for (std::size_t i = 0; i < c.positions.size(); ++i)
        t.set(c.positions[i].first, c.positions[i].second, cfg.field->elt(c.values[i]));
    return t;
}

// Evaluates a block of candidates, preserving order.
void evaluate_block(const SearchConfig& cfg, const std::vector<Candidate>& block, int jobs,
                    RunReport& out) {
    std::vector<std::optional<SearchHit>> results(block.size());
    auto eval_one = [&](std::size_t i) {
        CodeSpec spec = CodeSpec::make(cfg.field, cfg.n, cfg.k, cfg.alpha, cfg.v,
                                       to_twist(cfg, block[i]));
        MdsReport rep = is_mds(spec, MdsMethod::criterion, false, 1);
        if (!rep.mds) return;
        if (!cfg.novelty_filter.empty() && !cfg.novelty_filter.count(rep.novelty)) return;
        results[i] = SearchHit{eta_rows(spec.twist), std::move(rep)};
    };
    if (jobs > 1 && block.size() > 1) {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::exception_ptr err;
        std::mutex err_mu;
        int workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), block.size()));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                try {
                    for (std::size_t i; (i = next.fetch_add(1)) < block.size();) eval_one(i);
                } catch (...) {
                    std::scoped_lock lk(err_mu);
                    if (!err) err = std::current_exception();
                }
            });
        for (auto& t : pool) t.join();
        if (err) std::rethrow_exception(err);
    } else {
        for (std::size_t i = 0; i < block.size(); ++i) eval_one(i);
    }
    for (auto& r : results)
        if (r) out.hits.push_back(std::move(*r));
    out.candidates += block.size();
}

constexpr std::uint64_t kExhaustiveCap = 10'000'000;

}  // namespace

RunReport run_search(const SearchConfig& cfg, int jobs) {
    auto t0 = std::chrono::steady_clock::now();
    RunReport out;

    // validate the template once (zero twist)
    CodeSpec::make(cfg.field, cfg.n, cfg.k, cfg.alpha, cfg.v, TwistMatrix(*cfg.field, cfg.k, cfg.n - cfg.k));

    const std::uint64_t q = cfg.field->q();
    const std::size_t block_size = 4096;
    std::vector<Candidate> block;

    auto flush = [&] {
        if (!block.empty()) {
            evaluate_block(cfg, block, jobs, out);
            block.clear();
        }
    };

    if (cfg.mode == SearchMode::exhaustive) {
        if (cfg.max_weight) {
            // all position subsets of size 0..max_weight, values swept per subset
            std::vector<std::pair<int, int>> all_pos;
            for (int r = 0; r < cfg.k; ++r)
                for (int c = 1; c <= cfg.n - cfg.k; ++c) all_pos.emplace_back(r, c);
            const int npos = static_cast<int>(all_pos.size());
            std::uint64_t total = 1;  // the zero twist
            for (int w = 1; w <= *cfg.max_weight; ++w) {
                std::uint64_t combos = binomial_saturating(static_cast<std::uint64_t>(npos),
                                                           static_cast<std::uint64_t>(w));
                std::uint64_t vals = 1;
                for (int i = 0; i < w && vals <= kExhaustiveCap; ++i) vals *= (q - 1);
                if (combos > kExhaustiveCap || vals > kExhaustiveCap ||
                    (total += combos * vals) > kExhaustiveCap)
                    fail(errc::search_space_too_large, "exhaustive weight sweep exceeds 10^7 candidates");
            }
            block.push_back(Candidate{});  // zero twist first
            for (int w = 1; w <= *cfg.max_weight; ++w) {
                std::vector<int> sel = first_subset(w);
                do {
                    Candidate c;
                    for (int i : sel) c.positions.push_back(all_pos[static_cast<std::size_t>(i)]);
                    c.values.assign(static_cast<std::size_t>(w), 1);
                    while (true) {
                        block.push_back(c);
                        if (block.size() >= block_size) flush();
                        // odometer, last position fastest
                        int i = w - 1;
                        while (i >= 0 && c.values[static_cast<std::size_t>(i)] == q - 1) {
                            c.values[static_cast<std::size_t>(i)] = 1;
                            --i;
                        }
                        if (i < 0) break;
                        ++c.values[static_cast<std::size_t>(i)];
                    }
                } while (next_subset(sel, npos));
            }
            flush();
        } else {
            const std::size_t w = cfg.support.size();
            std::uint64_t total = 1;
            for (std::size_t i = 0; i < w; ++i) {
                total *= (q - 1);
                if (total > kExhaustiveCap)
                    fail(errc::search_space_too_large,
                         "(q-1)^|support| exceeds 10^7; narrow the support or use random mode");
            }
            Candidate c{cfg.support, std::vector<std::uint32_t>(w, 1)};
            if (w == 0) {
                block.push_back(c);
            } else {
                while (true) {
                    block.push_back(c);
                    if (block.size() >= block_size) flush();
                    std::size_t i = w;
                    while (i > 0 && c.values[i - 1] == q - 1) c.values[--i] = 1;
                    if (i == 0) break;
                    ++c.values[i - 1];
                }
            }
            flush();
        }
    } else {
        out.seed = cfg.seed;
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<std::uint64_t> val(1, q - 1);
        std::vector<std::pair<int, int>> all_pos;
        if (cfg.support.empty()) {
            for (int r = 0; r < cfg.k; ++r)
                for (int c = 1; c <= cfg.n - cfg.k; ++c) all_pos.emplace_back(r, c);
        }
        const int maxw = cfg.max_weight ? *cfg.max_weight : 1;
        for (std::uint64_t s = 0; s < cfg.samples; ++s) {
            Candidate c;
            if (!cfg.support.empty()) {
                c.positions = cfg.support;
            } else {
                std::uniform_int_distribution<int> wdist(1, maxw);
                int w = wdist(rng);
                std::vector<std::pair<int, int>> pool = all_pos;
                std::shuffle(pool.begin(), pool.end(), rng);
                c.positions.assign(pool.begin(), pool.begin() + w);
                std::sort(c.positions.begin(), c.positions.end());
            }
            for (std::size_t i = 0; i < c.positions.size(); ++i)
                c.values.push_back(static_cast<std::uint32_t>(val(rng)));
            block.push_back(std::move(c));
            if (block.size() >= block_size) flush();
        }
        flush();
    }

    out.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

json run_report_to_json(const RunReport& r) {
    json j;
    j["command"] = r.command;
    j["candidates"] = r.candidates;
    if (r.seed) j["seed"] = *r.seed;
    json hits = json::array();
    for (const auto& h : r.hits) {
        json hit;
        hit["eta"] = h.eta;
        hit["report"] = report_to_json(h.report);
        hits.push_back(std::move(hit));
    }
    j["hits"] = std::move(hits);
    return j;
}

std::string run_report_to_text(const RunReport& r) {
    std::ostringstream os;
    os << "candidates: " << r.candidates << "\n";
    if (r.seed) os << "seed: " << *r.seed << "\n";
    os << "hits: " << r.hits.size() << "\n";
    for (const auto& h : r.hits) {
        os << "eta:\n";
        for (const auto& row : h.eta) {
            os << " ";
            for (auto v : row) os << " " << v;
            os << "\n";
        }
        os << "novelty: " << novelty_name(h.report.novelty) << "\n";
    }
    return os.str();
}

}  // namespace atgrs
