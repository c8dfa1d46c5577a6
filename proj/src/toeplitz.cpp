#include "atgrs/toeplitz.hpp"

#include "atgrs/poly.hpp"
#include "atgrs/wseq.hpp"

namespace atgrs {

Mat toeplitz_lower(const FieldCtx& f, std::span<const Elt> col, std::size_t size) {
    if (size < 1) fail(errc::invalid_argument, "toeplitz size must be >= 1");
    Mat m(f, size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (i - j < col.size()) m.at(i, j) = col[i - j];
    return m;
}

Mat toeplitz_inverse_unit(const FieldCtx& f, std::span<const Elt> col, std::size_t size,
                          std::span<const Elt> alpha) {
    if (col.empty() || col[0] != f.one())
        fail(errc::leading_not_one, "unit-diagonal Toeplitz inverse needs col[0] = 1");
    require_distinct(alpha);
    const long n = static_cast<long>(alpha.size());
    WSeq w(f, alpha, n - 1, n - 2 + static_cast<long>(size));
    std::vector<Elt> first;
    first.reserve(size);
    for (std::size_t i = 0; i < size; ++i) first.push_back(w.at(n - 1 + static_cast<long>(i)));
    return toeplitz_lower(f, first, size);
}

Mat toeplitz_inverse_reversed(const FieldCtx& f, std::span<const Elt> col,
                              std::span<const Elt> alpha) {
    require_distinct(alpha);
    const long n = static_cast<long>(alpha.size());
    if (col.size() != alpha.size())
        fail(errc::length_mismatch, "reversed Toeplitz needs one diagonal per point");
    WSeq w(f, alpha, -n, -1);  // rejects zero points
    std::vector<Elt> first;
    first.reserve(alpha.size());
    for (long i = 1; i <= n; ++i) first.push_back(-w.at(-i));
    return toeplitz_lower(f, first, alpha.size());
}

}  // namespace atgrs
