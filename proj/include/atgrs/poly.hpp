#pragma once

#include <span>
#include <vector>

#include "atgrs/field.hpp"

namespace atgrs {

/// Dense polynomial, coefficients ascending by degree, trailing zeros
/// trimmed. The zero polynomial stores no coefficients and has degree -1.
class Poly {
  public:
    explicit Poly(const FieldCtx& f) : f_(&f) {}
    Poly(const FieldCtx& f, std::vector<Elt> coeffs) : f_(&f), c_(std::move(coeffs)) {
        for (const auto& c : c_) f_->check_same(c);
        trim();
    }

    const FieldCtx& field() const { return *f_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == f_->one(); }

    /// Coefficient of x^i; zero outside the stored range.
    Elt coeff(int i) const {
        if (i < 0 || i > degree()) return f_->zero();
        return c_[static_cast<std::size_t>(i)];
    }

    const std::vector<Elt>& coeffs() const { return c_; }

    Elt eval(Elt x) const {
        f_->check_same(x);
        Elt acc = f_->zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    bool operator==(const Poly& o) const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    const FieldCtx* f_;
    std::vector<Elt> c_;
};

/// Monic product of (x - alpha_i). Throws DuplicateRoots on repeats.
Poly poly_from_roots(const FieldCtx& f, std::span<const Elt> alpha);

Poly poly_derivative(const Poly& f);

inline Elt poly_eval(const Poly& f, Elt x) { return f.eval(x); }

/// Lagrange normalizers u_i = 1 / G'(alpha_i) for G = prod (x - alpha_i).
std::vector<Elt> u_weights(const FieldCtx& f, std::span<const Elt> alpha);

void require_distinct(std::span<const Elt> alpha);

}  // namespace atgrs
