#include <doctest.h>

#include <random>

#include "atgrs/wseq.hpp"

using namespace atgrs;

namespace {

std::vector<Elt> elts(const Field& f, std::initializer_list<std::uint64_t> vs) {
    std::vector<Elt> out;
    for (auto v : vs) out.push_back(f->elt(v));
    return out;
}

std::vector<Elt> random_points(const Field& f, std::size_t n, std::mt19937_64& rng, bool allow_zero) {
    std::vector<std::uint64_t> pool;
    for (std::uint64_t v = allow_zero ? 0 : 1; v < f->q(); ++v) pool.push_back(v);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Elt> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(f->elt(pool[i]));
    return out;
}

}  // namespace

TEST_SUITE("wseq") {

TEST_CASE("initial block") {
    Field F = make_field(11);
    auto alpha = elts(F, {1, 2, 3, 5, 6, 8, 9, 10});
    const long n = static_cast<long>(alpha.size());
    for (long t = 0; t <= n - 2; ++t) CHECK(wseq_direct(*F, alpha, t).is_zero());
    CHECK(wseq_direct(*F, alpha, n - 1) == F->one());
}

TEST_CASE("register window matches the direct sum") {
    std::mt19937_64 rng(11);
    for (Field F : {make_field(11), make_field(13), make_field(2, 4)}) {
        for (int it = 0; it < 20; ++it) {
            std::size_t n = 1 + rng() % 6;
            auto alpha = random_points(F, n, rng, true);
            bool has_zero = false;
            for (auto& a : alpha) has_zero |= a.is_zero();
            long lo = has_zero ? 0 : -static_cast<long>(2 * n);
            WSeq w(*F, alpha, lo, static_cast<long>(3 * n));
            for (long t = lo; t <= static_cast<long>(3 * n); ++t)
                CHECK(w.at(t) == wseq_direct(*F, alpha, t));
        }
    }
}

TEST_CASE("frozen values over GF(11)") {
    Field F = make_field(11);
    // alpha = (1,2,3): G = x^3 + 5x^2 + 5, so w_3 = -5*w_2 = 6, w_4 = -5*6 = 3
    auto alpha = elts(F, {1, 2, 3});
    WSeq w(*F, alpha, 0, 6);
    CHECK(w.gpoly().coeffs() == elts(F, {5, 0, 5, 1}));
    CHECK(w.at(2) == F->one());
    CHECK(w.at(3) == F->elt(6));
    CHECK(w.at(4) == F->elt(3));
    CHECK(wseq_direct(*F, alpha, 3) == F->elt(6));

    // 8-point set: w_{-1} = -1/c_8 with c_8 = 9
    auto big = elts(F, {1, 2, 3, 5, 6, 8, 9, 10});
    Poly g = poly_from_roots(*F, big);
    CHECK(g.coeff(0) == F->elt(9));
    CHECK(wseq_direct(*F, big, -1) == -inv(F->elt(9)));
    CHECK(wseq_direct(*F, big, -1) == F->elt(6));
    WSeq wb(*F, big, -1, 7);
    CHECK(wb.at(-1) == F->elt(6));
}

TEST_CASE("single point gives the geometric sequence") {
    Field F = make_field(7);
    auto alpha = elts(F, {3});
    WSeq w(*F, alpha, -3, 6);
    for (long t = -3; t <= 6; ++t) CHECK(w.at(t) == pow(F->elt(3), t));
}

TEST_CASE("dropping a zero point shifts the sequence") {
    // with 0 among the points, w'_t over the others equals w_{t+1}
    std::mt19937_64 rng(23);
    Field F = make_field(13);
    for (int it = 0; it < 20; ++it) {
        std::size_t n = 2 + rng() % 5;
        auto alpha = random_points(F, n - 1, rng, false);
        alpha.push_back(F->zero());
        std::vector<Elt> rest(alpha.begin(), alpha.end() - 1);
        for (long t = 0; t <= static_cast<long>(2 * n); ++t)
            CHECK(wseq_direct(*F, rest, t) == wseq_direct(*F, alpha, t + 1));
    }
}

TEST_CASE("negative indices demand nonzero points") {
    Field F = make_field(11);
    auto alpha = elts(F, {0, 1, 2});
    CHECK_THROWS_AS((void)wseq_direct(*F, alpha, -1), Error);
    CHECK_THROWS_AS(WSeq(*F, alpha, -2, 3), Error);
    WSeq ok(*F, alpha, 0, 5);  // forward only is fine
    CHECK(ok.at(2) == F->one());
    CHECK_THROWS_AS((void)ok.at(9), Error);
}

}  // TEST_SUITE
