#pragma once

#include <span>

#include "atgrs/mat.hpp"
#include "atgrs/poly.hpp"

namespace atgrs {

/// |alpha| x ncols matrix with entry (i, j) = alpha_i^j: one row per point,
/// powers 0..ncols-1 across the columns.
Mat vandermonde(const FieldCtx& f, std::span<const Elt> alpha, std::size_t ncols);

/// Closed-form inverse of the square Vandermonde on distinct nonzero points:
/// column i holds -(u_i / alpha_i^{h+1}) G_h(alpha_i) for h = 0..n-1, where
/// G_h keeps the coefficients of G up to degree h.
/// Throws: zero_evaluation_point, duplicate_roots.
Mat vandermonde_inverse_explicit(const FieldCtx& f, std::span<const Elt> alpha);

/// Same matrix assembled from the factorization
/// -T(d_0,...,d_{n-1}) * [alpha_j^{-i}] * diag(u).
Mat vandermonde_inverse_factored(const FieldCtx& f, std::span<const Elt> alpha);

/// det(rows 1, alpha, ..., alpha^{n-2}, alpha^t) / prod_{i<j}(alpha_j - alpha_i),
/// which equals w_t. Kept as a determinant computation on purpose: it is the
/// cross-check route for the w sequence.
/// Throws: zero_root_negative_power (t < 0 with 0 among the points).
Elt bordered_vandermonde_ratio(const FieldCtx& f, std::span<const Elt> alpha, long t);

}  // namespace atgrs
