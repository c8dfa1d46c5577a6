#include "atgrs/wseq.hpp"

#include <algorithm>

namespace atgrs {

namespace {

bool contains_zero(std::span<const Elt> alpha) {
    return std::any_of(alpha.begin(), alpha.end(), [](const Elt& a) { return a.is_zero(); });
}

}  // namespace

WSeq::WSeq(const FieldCtx& f, std::span<const Elt> alpha, long lo, long hi)
    : f_(&f), alpha_(alpha.begin(), alpha.end()), g_(poly_from_roots(f, alpha)),
      u_(u_weights(f, alpha)), lo_(lo) {
    if (alpha_.empty()) fail(errc::invalid_argument, "w sequence needs at least one point");
    if (lo > hi) fail(errc::invalid_argument, "window bounds out of order");
    if (lo < 0 && contains_zero(alpha))
        fail(errc::zero_root_negative_power, "negative w indices need all points nonzero");

    const long n = static_cast<long>(alpha_.size());
    // fill the hull [min(lo,0), max(hi,n-1)] from the base block [0, n-1]
    const long hull_lo = std::min(lo, 0L);
    const long hull_hi = std::max(hi, n - 1);
    std::vector<Elt> hull(static_cast<std::size_t>(hull_hi - hull_lo + 1), f.zero());
    auto ref = [&](long t) -> Elt& { return hull[static_cast<std::size_t>(t - hull_lo)]; };

    ref(n - 1) = f.one();  // w_0..w_{n-2} already zero
    // forward: w_t = -(d_{n-1} w_{t-1} + ... + d_0 w_{t-n})
    for (long t = n; t <= hull_hi; ++t) {
        Elt acc = f.zero();
        for (long j = 0; j < n; ++j) acc += g_.coeff(static_cast<int>(j)) * ref(t - n + j);
        ref(t) = -acc;
    }
    // backward: w_{t-n} = -(w_t + d_{n-1} w_{t-1} + ... + d_1 w_{t-n+1}) / d_0
    if (hull_lo < 0) {
        Elt d0inv = inv(g_.coeff(0));
        for (long t = n - 1; t - n >= hull_lo; --t) {
            Elt acc = ref(t);
            for (long j = 1; j < n; ++j) acc += g_.coeff(static_cast<int>(j)) * ref(t - n + j);
            ref(t - n) = -(acc * d0inv);
        }
    }
    win_.assign(hull.begin() + (lo - hull_lo), hull.begin() + (hi - hull_lo + 1));
}

Elt wseq_direct(const FieldCtx& f, std::span<const Elt> alpha, long t) {
    if (t < 0 && contains_zero(alpha))
        fail(errc::zero_root_negative_power, "negative power of a zero evaluation point");
    std::vector<Elt> u = u_weights(f, alpha);
    Elt acc = f.zero();
    for (std::size_t i = 0; i < alpha.size(); ++i) acc += u[i] * pow(alpha[i], t);
    return acc;
}

}  // namespace atgrs
