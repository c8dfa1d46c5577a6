#pragma once

// Shared helpers for the unit and acceptance suites.

#include <random>
#include <vector>

#include "atgrs/tgrs.hpp"

namespace testsup {

using namespace atgrs;

inline std::vector<Elt> elts(const Field& f, std::initializer_list<std::uint64_t> vs) {
    std::vector<Elt> out;
    for (auto v : vs) out.push_back(f->elt(v));
    return out;
}

inline std::vector<Elt> random_distinct(const Field& f, std::size_t n, std::mt19937_64& rng,
                                        bool allow_zero = true) {
    std::vector<std::uint64_t> pool;
    for (std::uint64_t v = allow_zero ? 0 : 1; v < f->q(); ++v) pool.push_back(v);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Elt> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(f->elt(pool[i]));
    return out;
}

inline TwistMatrix twist_from_rows(const Field& f, int k, int w,
                                   const std::vector<std::vector<std::uint64_t>>& rows) {
    TwistMatrix t(*f, k, w);
    for (int m = 0; m < k; ++m)
        for (int j = 1; j <= w; ++j)
            t.set(m, j, f->elt(rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(j - 1)]));
    return t;
}

inline TwistMatrix single_twist(const Field& f, int k, int w, int row, int col, Elt value) {
    TwistMatrix t(*f, k, w);
    t.set(row, col, value);
    return t;
}

inline TwistMatrix random_twist(const Field& f, int k, int w, std::mt19937_64& rng, bool dense) {
    TwistMatrix t(*f, k, w);
    std::uniform_int_distribution<std::uint64_t> val(0, f->q() - 1);
    for (int m = 0; m < k; ++m)
        for (int j = 1; j <= w; ++j) {
            if (!dense && rng() % 4 != 0) continue;  // sparse: ~1/4 fill
            t.set(m, j, f->elt(val(rng)));
        }
    return t;
}

// The worked GF(11) table: alpha and one twist matrix per dimension.
inline Field gf11() { return make_field(11); }

inline std::vector<Elt> example_alpha(const Field& f) {
    return elts(f, {1, 2, 3, 5, 6, 8, 9, 10});
}

inline std::vector<std::vector<std::uint64_t>> example_eta(int k) {
    switch (k) {
        case 3: return {{0, 0, 0, 1, 10}, {0, 0, 0, 0, 7}, {0, 0, 0, 0, 0}};
        case 4: return {{0, 0, 0, 4}, {0, 0, 0, 7}, {0, 0, 0, 3}, {0, 0, 2, 6}};
        case 5: return {{0, 0, 0}, {0, 10, 0}, {0, 9, 8}, {0, 0, 0}, {0, 0, 0}};
        case 6: return {{7, 1}, {4, 3}, {0, 0}, {0, 0}, {0, 0}, {0, 0}};
        case 7: return {{0}, {0}, {0}, {0}, {4}, {6}, {10}};
    }
    return {};
}

inline CodeSpec example_spec(const Field& f, int k) {
    auto alpha = example_alpha(f);
    return CodeSpec::make(f, 8, k, alpha, {}, twist_from_rows(f, k, 8 - k, example_eta(k)));
}

// Minimum distance by enumerating every nonzero codeword; the independent
// oracle for the MDS verdict on small codes.
inline int min_distance_exhaustive(const CodeSpec& spec) {
    const Field& f = spec.field;
    Mat g = generator_matrix(spec);
    std::vector<std::uint64_t> msg(static_cast<std::size_t>(spec.k), 0);
    int best = spec.n + 1;
    while (true) {
        // odometer over messages
        std::size_t i = 0;
        while (i < msg.size() && msg[i] + 1 == f->q()) msg[i++] = 0;
        if (i == msg.size()) break;
        ++msg[i];
        int weight = 0;
        for (int j = 0; j < spec.n; ++j) {
            Elt acc = f->zero();
            for (int m = 0; m < spec.k; ++m)
                acc += f->elt(msg[static_cast<std::size_t>(m)]) * g.at(static_cast<std::size_t>(m), static_cast<std::size_t>(j));
            if (!acc.is_zero()) ++weight;
        }
        best = std::min(best, weight);
    }
    return best;
}

}  // namespace testsup
