#include "atgrs/vandermonde.hpp"

#include <algorithm>

#include "atgrs/toeplitz.hpp"

namespace atgrs {

namespace {

void require_nonzero(std::span<const Elt> alpha) {
    for (const Elt& a : alpha)
        if (a.is_zero())
            fail(errc::zero_evaluation_point, "closed-form Vandermonde inverse needs nonzero points");
}

}  // namespace

Mat vandermonde(const FieldCtx& f, std::span<const Elt> alpha, std::size_t ncols) {
    if (ncols < 1) fail(errc::invalid_argument, "vandermonde needs at least one column");
    Mat v(f, alpha.size(), ncols);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        Elt acc = f.one();
        for (std::size_t j = 0; j < ncols; ++j) {
            v.at(i, j) = acc;
            acc *= alpha[i];
        }
    }
    return v;
}

Mat vandermonde_inverse_explicit(const FieldCtx& f, std::span<const Elt> alpha) {
    require_distinct(alpha);
    require_nonzero(alpha);
    const std::size_t n = alpha.size();
    Poly g = poly_from_roots(f, alpha);
    std::vector<Elt> u = u_weights(f, alpha);
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Elt ainv = inv(alpha[i]);
        Elt scale = -(u[i] * ainv);   // -(u_i / alpha_i^{h+1}) built up per row
        Elt gh = f.zero();            // G_h(alpha_i), extended one degree at a time
        Elt apow = f.one();           // alpha_i^h
        for (std::size_t h = 0; h < n; ++h) {
            gh += g.coeff(static_cast<int>(h)) * apow;
            m.at(h, i) = scale * gh;
            scale *= ainv;
            apow *= alpha[i];
        }
    }
    return m;
}

Mat vandermonde_inverse_factored(const FieldCtx& f, std::span<const Elt> alpha) {
    require_distinct(alpha);
    require_nonzero(alpha);
    const std::size_t n = alpha.size();
    Poly g = poly_from_roots(f, alpha);
    std::vector<Elt> u = u_weights(f, alpha);

    std::vector<Elt> dcol(g.coeffs().begin(), g.coeffs().begin() + static_cast<long>(n));
    Mat t = toeplitz_lower(f, dcol, n);

    Mat recip(f, n, n);  // entry (i, j) = alpha_j^{-(i+1)}
    for (std::size_t j = 0; j < n; ++j) {
        Elt ainv = inv(alpha[j]);
        Elt acc = ainv;
        for (std::size_t i = 0; i < n; ++i) {
            recip.at(i, j) = acc;
            acc *= ainv;
        }
    }

    Mat prod = t * recip;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) prod.at(i, j) = -(prod.at(i, j) * u[j]);
    return prod;
}

Elt bordered_vandermonde_ratio(const FieldCtx& f, std::span<const Elt> alpha, long t) {
    require_distinct(alpha);
    if (t < 0)
        for (const Elt& a : alpha)
            if (a.is_zero()) fail(errc::zero_root_negative_power, "negative power of a zero point");
    const std::size_t n = alpha.size();
    Mat m(f, n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Elt acc = f.one();
        for (std::size_t r = 0; r + 1 < n; ++r) {
            m.at(r, j) = acc;
            acc *= alpha[j];
        }
        m.at(n - 1, j) = pow(alpha[j], t);
    }
    Elt delta = f.one();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) delta *= alpha[j] - alpha[i];
    return det(m) / delta;
}

}  // namespace atgrs
