#include <doctest.h>

#include "atgrs/toeplitz.hpp"
#include "support.hpp"

using namespace atgrs;
using namespace testsup;

namespace {

bool orthogonal(const Mat& h, const Mat& g) {
    Mat prod = h * g.transpose();
    for (std::size_t i = 0; i < prod.rows(); ++i)
        for (std::size_t j = 0; j < prod.cols(); ++j)
            if (!prod.at(i, j).is_zero()) return false;
    return true;
}

}  // namespace

TEST_SUITE("parity") {

TEST_CASE("parity check annihilates the twisted generator at l = k-1") {
    std::mt19937_64 rng(83);
    for (Field F : {gf11(), make_field(13)}) {
        for (int it = 0; it < 8; ++it) {
            int n = 5 + static_cast<int>(rng() % 4);
            int k = 3 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 3));
            auto alpha = random_distinct(F, static_cast<std::size_t>(n), rng, false);
            std::vector<Elt> v;
            for (int i = 0; i < n; ++i) v.push_back(F->elt(1 + rng() % (F->q() - 1)));
            Elt eta = F->elt(1 + rng() % (F->q() - 1));

            Mat g = zhang_generator(*F, k, eta, alpha, v);

            // sweep l: orthogonality singles out l = k-1
            for (int l = 0; l <= k - 1; ++l) {
                Mat h = parity_check_zhang(*F, n, k, l, eta, alpha, v);
                CHECK(h.rows() == static_cast<std::size_t>(n - k));
                CHECK(orthogonal(h, g) == (l == k - 1));
                if (l == k - 1) CHECK(mat_rank(h) == static_cast<std::size_t>(n - k));
            }
        }
    }
}

TEST_CASE("solved coefficient vector is the Toeplitz inverse first column") {
    // the b_j solving T(w_{n-1}, ..., w_{n+s-2}) b = e_1 are (1, c_1, ..., c_{s-1})
    std::mt19937_64 rng(89);
    Field F = make_field(13);
    for (int it = 0; it < 10; ++it) {
        std::size_t n = 3 + rng() % 5;
        auto alpha = random_distinct(F, n, rng, false);
        Poly g = poly_from_roots(*F, alpha);
        std::size_t s = 1 + rng() % n;

        WSeq w(*F, alpha, static_cast<long>(n) - 1, static_cast<long>(n + s) - 2);
        std::vector<Elt> wcol;
        for (std::size_t i = 0; i < s; ++i) wcol.push_back(w.at(static_cast<long>(n - 1 + i)));
        Mat t = toeplitz_lower(*F, wcol, s);
        Mat ti = gaussian_inverse(t);
        for (std::size_t j = 0; j < s; ++j)
            CHECK(ti.at(j, 0) == g.coeff(static_cast<int>(n - j)));  // c_j
    }
}

TEST_CASE("constant term identity") {
    // w_{-1} = -1/c_n, so the solved constant -1/(eta w_{-1}) equals c_n/eta
    std::mt19937_64 rng(97);
    Field F = gf11();
    for (int it = 0; it < 10; ++it) {
        std::size_t n = 3 + rng() % 5;
        auto alpha = random_distinct(F, n, rng, false);
        Poly g = poly_from_roots(*F, alpha);
        Elt cn = g.coeff(0);
        CHECK(wseq_direct(*F, alpha, -1) == -inv(cn));
        Elt eta = F->elt(1 + rng() % 10);
        Elt b = -(F->one() / (eta * wseq_direct(*F, alpha, -1)));
        CHECK(b == cn / eta);
    }
}

TEST_CASE("input validation") {
    Field F = gf11();
    auto alpha = example_alpha(F);
    std::vector<Elt> v(8, F->one());
    CHECK_THROWS_AS((void)parity_check_zhang(*F, 8, 4, 3, F->zero(), alpha, v), Error);
    CHECK_THROWS_AS((void)parity_check_zhang(*F, 8, 4, 4, F->elt(2), alpha, v), Error);
    auto with_zero = elts(F, {0, 1, 2, 3, 4, 5, 6, 7});
    CHECK_THROWS_AS((void)parity_check_zhang(*F, 8, 4, 3, F->elt(2), with_zero, v), Error);
}

}  // TEST_SUITE
