#include <doctest.h>

#include "atgrs/poly.hpp"

using namespace atgrs;

namespace {

std::vector<Elt> elts(const Field& f, std::initializer_list<std::uint64_t> vs) {
    std::vector<Elt> out;
    for (auto v : vs) out.push_back(f->elt(v));
    return out;
}

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("from roots") {
    Field F = make_field(11);
    // (x-1)(x-2) = x^2 - 3x + 2 = x^2 + 8x + 2
    Poly g = poly_from_roots(*F, elts(F, {1, 2}));
    CHECK(g.degree() == 2);
    CHECK(g.coeff(0) == F->elt(2));
    CHECK(g.coeff(1) == F->elt(8));
    CHECK(g.coeff(2) == F->elt(1));

    Poly x = poly_from_roots(*F, elts(F, {0}));
    CHECK(x.degree() == 1);
    CHECK(x.coeff(0) == F->elt(0));
    CHECK(x.coeff(1) == F->elt(1));

    Field F7 = make_field(7);
    Poly h = poly_from_roots(*F7, elts(F7, {1, 2, 3}));
    CHECK(h.coeffs() == std::vector<Elt>{F7->elt(1), F7->elt(4), F7->elt(1), F7->elt(1)});
    for (auto r : {1, 2, 3}) CHECK(h.eval(F7->elt(static_cast<std::uint64_t>(r))).is_zero());

    CHECK_THROWS_AS(poly_from_roots(*F, elts(F, {3, 3})), Error);
}

TEST_CASE("eval and derivative") {
    Field F = make_field(11);
    Poly g(*F, elts(F, {2, 8, 1}));  // x^2 + 8x + 2
    CHECK(g.eval(F->elt(3)) == F->elt(2));  // 9 + 24 + 2 = 35 = 2 (mod 11)
    Poly gp = poly_derivative(g);
    CHECK(gp.coeffs() == elts(F, {8, 2}));  // 2x + 8

    Field F2 = make_field(2);
    Poly sq(*F2, elts(F2, {0, 0, 1}));  // x^2
    CHECK(poly_derivative(sq).is_zero());

    Poly zero(*F);
    CHECK(zero.degree() == -1);
    CHECK(zero.eval(F->elt(5)).is_zero());
    CHECK(poly_derivative(zero).is_zero());
}

TEST_CASE("canonical trimming") {
    Field F = make_field(5);
    Poly p(*F, elts(F, {1, 2, 0, 0}));
    CHECK(p.degree() == 1);
    Poly allzero(*F, elts(F, {0, 0}));
    CHECK(allzero.is_zero());
}

TEST_CASE("u weights") {
    Field F7 = make_field(7);
    auto u = u_weights(*F7, elts(F7, {1, 2}));
    CHECK(u == elts(F7, {6, 1}));  // G' = 2x + 4: inv(6), inv(1)

    Field F = make_field(11);
    auto single = u_weights(*F, elts(F, {4}));
    CHECK(single == elts(F, {1}));

    // sum u_i alpha_i^{n-1} = 1 on the 8-point set
    auto alpha = elts(F, {1, 2, 3, 5, 6, 8, 9, 10});
    auto uu = u_weights(*F, alpha);
    Elt acc = F->zero();
    for (std::size_t i = 0; i < alpha.size(); ++i) acc += uu[i] * pow(alpha[i], 7);
    CHECK(acc == F->one());
}

}  // TEST_SUITE
