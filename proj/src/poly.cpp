#include "atgrs/poly.hpp"

#include <algorithm>

namespace atgrs {

bool Poly::operator==(const Poly& o) const {
    if (f_ != o.f_) fail(errc::field_mismatch, "comparing polynomials over different fields");
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i].value() != o.c_[i].value()) return false;
    return true;
}

void require_distinct(std::span<const Elt> alpha) {
    for (std::size_t i = 0; i < alpha.size(); ++i)
        for (std::size_t j = i + 1; j < alpha.size(); ++j)
            if (alpha[i] == alpha[j])
                fail(errc::duplicate_roots, "evaluation points are not pairwise distinct");
}

Poly poly_from_roots(const FieldCtx& f, std::span<const Elt> alpha) {
    require_distinct(alpha);
    std::vector<Elt> g{f.one()};
    for (const Elt& a : alpha) {
        f.check_same(a);
        std::vector<Elt> next(g.size() + 1, f.zero());
        for (std::size_t i = 0; i < g.size(); ++i) {
            next[i + 1] += g[i];
            next[i] -= g[i] * a;
        }
        g = std::move(next);
    }
    return Poly(f, std::move(g));
}

Poly poly_derivative(const Poly& f) {
    const FieldCtx& F = f.field();
    std::vector<Elt> d;
    d.reserve(static_cast<std::size_t>(std::max(f.degree(), 0)));
    for (int i = 1; i <= f.degree(); ++i) {
        // i acts through the prime subfield, so exponents divisible by the
        // characteristic drop out
        Elt scale = F.elt(static_cast<std::uint64_t>(i) % F.p());
        d.push_back(f.coeff(i) * scale);
    }
    return Poly(F, std::move(d));
}

std::vector<Elt> u_weights(const FieldCtx& f, std::span<const Elt> alpha) {
    Poly g = poly_from_roots(f, alpha);
    Poly gp = poly_derivative(g);
    std::vector<Elt> u;
    u.reserve(alpha.size());
    for (const Elt& a : alpha) u.push_back(inv(gp.eval(a)));
    return u;
}

}  // namespace atgrs
