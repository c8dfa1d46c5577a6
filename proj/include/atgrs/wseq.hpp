#pragma once

#include <span>
#include <vector>

#include "atgrs/poly.hpp"

namespace atgrs {

/// The sequence w_t = sum_i u_i alpha_i^t attached to a set of distinct
/// evaluation points, where u_i = 1/G'(alpha_i) and G = prod (x - alpha_i).
/// With n = |alpha| it starts w_0 = ... = w_{n-2} = 0, w_{n-1} = 1 and obeys
/// the order-n recurrence w_t = -(d_{n-1} w_{t-1} + ... + d_0 w_{t-n}) built
/// from G's coefficients, so a window over any index range can be filled by
/// running the recurrence as a shift register, forward or backward.
/// Backward extension divides by d_0 and therefore needs 0 not in alpha.
class WSeq {
  public:
    /// Builds the window [lo, hi] (inclusive).
    WSeq(const FieldCtx& f, std::span<const Elt> alpha, long lo, long hi);

    const FieldCtx& field() const { return *f_; }
    const Poly& gpoly() const { return g_; }
    std::span<const Elt> u() const { return u_; }
    std::span<const Elt> alpha() const { return alpha_; }
    long lo() const { return lo_; }
    long hi() const { return lo_ + static_cast<long>(win_.size()) - 1; }

    /// Cached value; throws IndexOutOfRange outside the window.
    Elt at(long t) const {
        if (t < lo() || t > hi()) fail(errc::index_out_of_range, "w index outside cached window");
        return win_[static_cast<std::size_t>(t - lo_)];
    }

  private:
    const FieldCtx* f_;
    std::vector<Elt> alpha_;
    Poly g_;
    std::vector<Elt> u_;
    long lo_;
    std::vector<Elt> win_;
};

/// w_t evaluated by the defining sum; the independent route against the
/// shift-register window.
Elt wseq_direct(const FieldCtx& f, std::span<const Elt> alpha, long t);

inline WSeq wseq_lfsr(const FieldCtx& f, std::span<const Elt> alpha, long lo, long hi) {
    return WSeq(f, alpha, lo, hi);
}

}  // namespace atgrs
