#include <doctest.h>

#include <random>

#include "atgrs/toeplitz.hpp"
#include "atgrs/poly.hpp"
#include "atgrs/wseq.hpp"

using namespace atgrs;

namespace {

std::vector<Elt> elts(const Field& f, std::initializer_list<std::uint64_t> vs) {
    std::vector<Elt> out;
    for (auto v : vs) out.push_back(f->elt(v));
    return out;
}

std::vector<Elt> random_points(const Field& f, std::size_t n, std::mt19937_64& rng, bool nonzero) {
    std::vector<std::uint64_t> pool;
    for (std::uint64_t v = nonzero ? 1 : 0; v < f->q(); ++v) pool.push_back(v);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Elt> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(f->elt(pool[i]));
    return out;
}

// col = (1, c_1, ..., c_n) read from the monic polynomial over alpha
std::vector<Elt> unit_col(const Field& f, std::span<const Elt> alpha) {
    Poly g = poly_from_roots(*f, alpha);
    std::vector<Elt> col;
    for (int j = g.degree(); j >= 0; --j) col.push_back(g.coeff(j));
    return col;
}

bool constant_diagonals(const Mat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > i && !m.at(i, j).is_zero()) return false;
            if (i > 0 && j > 0 && m.at(i, j) != m.at(i - 1, j - 1)) return false;
        }
    return true;
}

}  // namespace

TEST_SUITE("toeplitz") {

TEST_CASE("lower triangular layout") {
    Field F = make_field(11);
    CHECK(toeplitz_lower(*F, elts(F, {1}), 3).is_identity());

    Mat t = toeplitz_lower(*F, elts(F, {1, 5}), 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            std::uint64_t want = i == j ? 1 : (i == j + 1 ? 5 : 0);
            CHECK(t.at(i, j).value() == want);
        }

    Mat t3 = toeplitz_lower(*F, elts(F, {1, 4, 9}), 3);
    CHECK(t3.at(2, 0) == F->elt(9));
    CHECK(t3.at(2, 1) == F->elt(4));
    CHECK(constant_diagonals(t3));
}

TEST_CASE("unit diagonal inverse via the w register") {
    Field F = make_field(11);
    auto alpha = elts(F, {1, 2, 3});
    auto col = unit_col(F, alpha);

    for (std::size_t size : {std::size_t{1}, std::size_t{3}, std::size_t{6}}) {
        Mat t = toeplitz_lower(*F, col, size);
        Mat ti = toeplitz_inverse_unit(*F, col, size, alpha);
        CHECK((t * ti).is_identity());
        CHECK((ti * t).is_identity());
        CHECK(constant_diagonals(ti));
        CHECK(ti == gaussian_inverse(t));
    }

    // col = (1) belongs to G(x) = x, i.e. the single point 0; the padded
    // matrix is the identity at any size
    CHECK(toeplitz_inverse_unit(*F, elts(F, {1}), 4, elts(F, {0})).is_identity());

    CHECK_THROWS_AS((void)toeplitz_inverse_unit(*F, elts(F, {2, 1}), 3, alpha), Error);
    CHECK_THROWS_AS((void)toeplitz_inverse_unit(*F, col, 3, elts(F, {1, 1})), Error);
}

TEST_CASE("random sizes against the elimination oracle") {
    std::mt19937_64 rng(29);
    for (Field F : {make_field(13), make_field(2, 4)}) {
        for (int it = 0; it < 15; ++it) {
            std::size_t n = 1 + rng() % 5;
            auto alpha = random_points(F, n, rng, false);
            auto col = unit_col(F, alpha);
            for (std::size_t size : {n, 2 * n}) {
                Mat t = toeplitz_lower(*F, col, size);
                Mat ti = toeplitz_inverse_unit(*F, col, size, alpha);
                CHECK((t * ti).is_identity());
                CHECK(ti == gaussian_inverse(t));
            }
        }
    }
}

TEST_CASE("reversed coefficients") {
    Field F = make_field(11);
    auto alpha = elts(F, {1, 2, 3});
    Poly g = poly_from_roots(*F, alpha);
    std::vector<Elt> col;  // c_n, c_{n-1}, ..., c_1
    for (int j = 0; j < g.degree(); ++j) col.push_back(g.coeff(j));

    Mat t = toeplitz_lower(*F, col, 3);
    Mat ti = toeplitz_inverse_reversed(*F, col, alpha);
    CHECK((t * ti).is_identity());
    CHECK(ti == gaussian_inverse(t));

    // entries are -w_{-1}, ..., -w_{-n} down the first column
    WSeq w(*F, alpha, -3, 0);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(ti.at(i, 0) == -w.at(-1 - static_cast<long>(i)));

    // scalar case: T(c_1) with c_1 = -a
    auto single = elts(F, {4});
    Poly gs = poly_from_roots(*F, single);
    std::vector<Elt> cs{gs.coeff(0)};
    Mat si = toeplitz_inverse_reversed(*F, cs, single);
    CHECK((toeplitz_lower(*F, cs, 1) * si).is_identity());

    CHECK_THROWS_AS((void)toeplitz_inverse_reversed(*F, col, elts(F, {0, 1, 2})), Error);
}

TEST_CASE("random reversed instances") {
    std::mt19937_64 rng(31);
    Field F = make_field(13);
    for (int it = 0; it < 20; ++it) {
        std::size_t n = 1 + rng() % 6;
        auto alpha = random_points(F, n, rng, true);
        Poly g = poly_from_roots(*F, alpha);
        std::vector<Elt> col;
        for (int j = 0; j < static_cast<int>(n); ++j) col.push_back(g.coeff(j));
        Mat t = toeplitz_lower(*F, col, n);
        Mat ti = toeplitz_inverse_reversed(*F, col, alpha);
        CHECK((t * ti).is_identity());
        CHECK(ti == gaussian_inverse(t));
        CHECK(constant_diagonals(ti));
    }
}

}  // TEST_SUITE
