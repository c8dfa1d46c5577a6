#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "atgrs/error.hpp"

namespace atgrs {

class FieldCtx;
using Field = std::shared_ptr<const FieldCtx>;

/// One element of a finite field, stored as its canonical integer in [0, q).
/// For extension fields the integer is the base-p encoding of the coefficient
/// vector (coefficient of x^i in the p^i digit). Elements keep a non-owning
/// pointer to their field; the context must outlive them.
class Elt {
  public:
    Elt() : f_(nullptr), v_(0) {}
    Elt(const FieldCtx* f, std::uint32_t v) : f_(f), v_(v) {}

    std::uint32_t value() const { return v_; }
    const FieldCtx& field() const { return *f_; }
    bool is_zero() const { return v_ == 0; }

    Elt operator+(Elt o) const;
    Elt operator-(Elt o) const;
    Elt operator*(Elt o) const;
    Elt operator/(Elt o) const;
    Elt operator-() const;
    Elt& operator+=(Elt o) { return *this = *this + o; }
    Elt& operator-=(Elt o) { return *this = *this - o; }
    Elt& operator*=(Elt o) { return *this = *this * o; }

    bool operator==(Elt o) const;
    bool operator!=(Elt o) const { return !(*this == o); }

  private:
    const FieldCtx* f_;
    std::uint32_t v_;
};

/// Immutable description of GF(p^m) with exact element arithmetic.
/// Construct through make_field(); contexts are freely shareable across
/// threads, every operation is a pure function.
class FieldCtx {
  public:
    static constexpr std::uint64_t kMaxOrder = 1u << 20;

    std::uint64_t p() const { return p_; }
    unsigned m() const { return m_; }
    std::uint64_t q() const { return q_; }

    /// Modulus digits, ascending degree, including the leading 1.
    /// Empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Elt elt(std::uint64_t v) const {
        if (v >= q_) fail(errc::invalid_argument, "element " + std::to_string(v) + " out of range for field of order " + std::to_string(q_));
        return Elt(this, static_cast<std::uint32_t>(v));
    }
    Elt zero() const { return Elt(this, 0); }
    Elt one() const { return Elt(this, 1); }

    std::string name() const;  // "GF(11)", "GF(2^4)"

    // Raw canonical-value arithmetic. Elt operators forward here.
    std::uint32_t add_v(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub_v(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg_v(std::uint32_t a) const;
    std::uint32_t mul_v(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv_v(std::uint32_t a) const;
    std::uint32_t pow_v(std::uint32_t a, long long e) const;

    Elt inv(Elt a) const { check_same(a); return Elt(this, inv_v(a.value())); }
    Elt pow(Elt a, long long e) const { check_same(a); return Elt(this, pow_v(a.value(), e)); }

    void check_same(Elt a) const {
        if (&a.field() != this) fail(errc::field_mismatch, "element belongs to a different field");
    }

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

  private:
    friend Field make_field(std::uint64_t, unsigned, const std::optional<std::vector<std::uint32_t>>&);
    FieldCtx() = default;

    std::vector<std::uint32_t> decode(std::uint32_t v) const;
    std::uint32_t encode(const std::vector<std::uint32_t>& digits) const;
    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;
    void build_tables();

    std::uint64_t p_ = 0;
    unsigned m_ = 1;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    // Discrete log tables for extension fields of order <= 2^16; same
    // semantics as the schoolbook path, used only as an accelerator.
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

/// Builds GF(p^m). When m > 1 and no modulus is given, picks the monic
/// irreducible of degree m with the smallest canonical encoding.
/// Throws: not_prime, not_irreducible, order_too_large.
Field make_field(std::uint64_t p, unsigned m = 1,
                 const std::optional<std::vector<std::uint32_t>>& modulus = std::nullopt);

inline Elt pow(Elt a, long long e) { return a.field().pow(a, e); }
inline Elt inv(Elt a) { return a.field().inv(a); }

}  // namespace atgrs
