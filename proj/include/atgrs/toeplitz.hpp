#pragma once

#include <span>

#include "atgrs/mat.hpp"

namespace atgrs {

/// Lower-triangular Toeplitz matrix T(col): entry (i, j) = col[i - j] for
/// i >= j, with col zero-padded past its length so any size is allowed.
Mat toeplitz_lower(const FieldCtx& f, std::span<const Elt> col, std::size_t size);

/// Inverse of T(1, c_1, c_2, ...) where the c_i continue the monic
/// polynomial G(x) = prod (x - alpha_i) written from the leading coefficient
/// down (c_i = 0 past degree). The inverse is again lower Toeplitz with
/// first column w_{n-1}, w_n, ..., w_{n-2+size}, filled by running the
/// w recurrence of the alpha set; size is arbitrary.
/// Throws: leading_not_one, duplicate_roots.
Mat toeplitz_inverse_unit(const FieldCtx& f, std::span<const Elt> col, std::size_t size,
                          std::span<const Elt> alpha);

/// Inverse of the reversed-coefficient Toeplitz T(c_n, c_{n-1}, ..., c_1),
/// which equals -T(w_{-1}, w_{-2}, ..., w_{-n}); needs all points nonzero.
/// Throws: zero_root_negative_power, duplicate_roots.
Mat toeplitz_inverse_reversed(const FieldCtx& f, std::span<const Elt> col,
                              std::span<const Elt> alpha);

}  // namespace atgrs
