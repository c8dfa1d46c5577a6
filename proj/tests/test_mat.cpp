#include <doctest.h>

#include <random>

#include "atgrs/mat.hpp"
#include "atgrs/vandermonde.hpp"

using namespace atgrs;

TEST_SUITE("mat") {

TEST_CASE("determinant basics") {
    Field F = make_field(11);
    Mat id = Mat::identity(*F, 4);
    CHECK(det(id) == F->one());
    CHECK(gaussian_inverse(id) == id);

    Mat rep(*F, 2, 2);
    rep.at(0, 0) = F->elt(3);
    rep.at(0, 1) = F->elt(7);
    rep.at(1, 0) = F->elt(3);
    rep.at(1, 1) = F->elt(7);
    CHECK(det(rep).is_zero());
    CHECK_THROWS_AS((void)gaussian_inverse(rep), Error);

    Mat rect(*F, 2, 3);
    CHECK_THROWS_AS((void)det(rect), Error);
    CHECK_THROWS_AS((void)gaussian_inverse(rect), Error);
}

TEST_CASE("vandermonde determinant equals the pair-difference product") {
    Field F = make_field(13);
    std::mt19937_64 rng(3);
    for (int it = 0; it < 50; ++it) {
        std::vector<std::uint64_t> pool(13);
        for (std::uint64_t i = 0; i < 13; ++i) pool[i] = i;
        std::shuffle(pool.begin(), pool.end(), rng);
        std::size_t n = 1 + rng() % 6;
        std::vector<Elt> alpha;
        for (std::size_t i = 0; i < n; ++i) alpha.push_back(F->elt(pool[i]));
        Mat v = vandermonde(*F, alpha, n);
        Elt prod = F->one();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) prod *= alpha[j] - alpha[i];
        CHECK(det(v) == prod);
    }
}

TEST_CASE("inverse times original is the identity") {
    Field F = make_field(2, 4);
    std::mt19937_64 rng(5);
    for (int it = 0; it < 30;) {
        std::size_t n = 1 + rng() % 5;
        Mat m(*F, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = F->elt(rng() % 16);
        if (det(m).is_zero()) continue;
        Mat mi = gaussian_inverse(m);
        CHECK((m * mi).is_identity());
        CHECK((mi * m).is_identity());
        ++it;
    }
}

TEST_CASE("rank") {
    Field F = make_field(7);
    Mat m(*F, 3, 4);
    m.at(0, 0) = F->elt(1);
    m.at(1, 1) = F->elt(2);
    m.at(2, 0) = F->elt(3);  // row 2 = 3 * row 0
    m.at(2, 1) = F->elt(6);  // ... plus 3 * row 1
    CHECK(mat_rank(m) == 2);
    CHECK(mat_rank(Mat::identity(*F, 5)) == 5);
    CHECK(mat_rank(Mat(*F, 2, 2)) == 0);
}

}  // TEST_SUITE
