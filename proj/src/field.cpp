#include "atgrs/field.hpp"

#include <algorithm>
#include <numeric>

namespace atgrs {

const char* errc_name(errc c) {
    switch (c) {
        case errc::not_prime: return "NotPrime";
        case errc::not_irreducible: return "NotIrreducible";
        case errc::order_too_large: return "OrderTooLarge";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::duplicate_roots: return "DuplicateRoots";
        case errc::zero_root_negative_power: return "ZeroRootNegativePower";
        case errc::zero_evaluation_point: return "ZeroEvaluationPoint";
        case errc::singular: return "Singular";
        case errc::not_square: return "NotSquare";
        case errc::leading_not_one: return "LeadingNotOne";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::method_disagreement: return "MethodDisagreement";
        case errc::not_single_twist: return "NotSingleTwist";
        case errc::zero_twist: return "ZeroTwist";
        case errc::search_space_too_large: return "SearchSpaceTooLarge";
        case errc::invalid_argument: return "InvalidArgument";
    }
    return "Error";
}

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over GF(p) as coefficient vectors (ascending, trimmed),
// used only while constructing a field context.
using ZpPoly = std::vector<std::uint32_t>;

void trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZpPoly mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    // reduce by monic f
    const std::size_t df = f.size() - 1;
    for (std::size_t i = r.size(); i-- > df;) {
        std::uint32_t c = r[i];
        if (c == 0) continue;
        r[i] = 0;
        for (std::size_t j = 0; j < df; ++j) {
            std::uint64_t sub = static_cast<std::uint64_t>(c) * f[j] % p;
            r[i - df + j] = static_cast<std::uint32_t>((r[i - df + j] + p - sub) % p);
        }
    }
    trim(r);
    return r;
}

ZpPoly powmod(ZpPoly base, std::uint64_t e, const ZpPoly& f, std::uint64_t p) {
    ZpPoly r{1};
    while (e) {
        if (e & 1) r = mulmod(r, base, f, p);
        base = mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

ZpPoly poly_gcd(ZpPoly a, ZpPoly b, std::uint64_t p) {
    auto inv_mod = [p](std::uint64_t x) {
        // p prime, x != 0
        std::uint64_t r = 1, e = p - 2, base = x % p;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        std::uint64_t lead_inv = inv_mod(b.back());
        while (a.size() >= b.size()) {
            std::uint64_t c = a.back() * lead_inv % p;
            if (c != 0) {
                std::size_t shift = a.size() - b.size();
                for (std::size_t j = 0; j < b.size(); ++j) {
                    std::uint64_t sub = c * b[j] % p;
                    a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - sub) % p);
                }
            }
            a.pop_back();
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible(const ZpPoly& f, std::uint64_t p) {
    const std::size_t m = f.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    if (m <= 3) {
        // degree 2 or 3 over GF(p): reducible iff it has a root
        for (std::uint64_t a = 0; a < p; ++a) {
            std::uint64_t acc = 0;
            for (std::size_t i = f.size(); i-- > 0;) acc = (acc * a + f[i]) % p;
            if (acc == 0) return false;
        }
        return true;
    }
    // f has no irreducible factor of degree <= m/2 iff
    // gcd(x^{p^i} - x, f) = 1 for i = 1 .. m/2.
    ZpPoly xp{0, 1};
    for (std::size_t i = 1; i <= m / 2; ++i) {
        xp = powmod(xp, p, f, p);  // now x^{p^i} mod f
        ZpPoly diff = xp;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
        trim(diff);
        ZpPoly g = poly_gcd(diff, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

std::vector<std::uint32_t> FieldCtx::decode(std::uint32_t v) const {
    std::vector<std::uint32_t> d(m_);
    for (unsigned i = 0; i < m_; ++i) {
        d[i] = static_cast<std::uint32_t>(v % p_);
        v = static_cast<std::uint32_t>(v / p_);
    }
    return d;
}

std::uint32_t FieldCtx::encode(const std::vector<std::uint32_t>& digits) const {
    std::uint64_t v = 0;
    for (std::size_t i = digits.size(); i-- > 0;) v = v * p_ + digits[i];
    return static_cast<std::uint32_t>(v);
}

std::uint32_t FieldCtx::add_v(std::uint32_t a, std::uint32_t b) const {
    if (m_ == 1) {
        std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }
    if (p_ == 2) return a ^ b;
    auto da = decode(a), db = decode(b);
    for (unsigned i = 0; i < m_; ++i) {
        da[i] += db[i];
        if (da[i] >= p_) da[i] -= static_cast<std::uint32_t>(p_);
    }
    return encode(da);
}

std::uint32_t FieldCtx::neg_v(std::uint32_t a) const {
    if (m_ == 1) return a == 0 ? 0 : static_cast<std::uint32_t>(p_ - a);
    if (p_ == 2) return a;
    auto d = decode(a);
    for (auto& x : d)
        if (x != 0) x = static_cast<std::uint32_t>(p_) - x;
    return encode(d);
}

std::uint32_t FieldCtx::sub_v(std::uint32_t a, std::uint32_t b) const {
    if (m_ == 1) {
        return a >= b ? a - b : static_cast<std::uint32_t>(a + p_ - b);
    }
    if (p_ == 2) return a ^ b;
    return add_v(a, neg_v(b));
}

std::uint32_t FieldCtx::mul_slow(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    auto da = decode(a), db = decode(b);
    std::vector<std::uint64_t> r(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < m_; ++j) r[i + j] += static_cast<std::uint64_t>(da[i]) * db[j];
    }
    for (auto& x : r) x %= p_;
    for (std::size_t i = r.size(); i-- > m_;) {
        std::uint64_t c = r[i];
        if (c == 0) continue;
        r[i] = 0;
        for (unsigned j = 0; j < m_; ++j) {
            std::uint64_t sub = c * modulus_[j] % p_;
            r[i - m_ + j] = (r[i - m_ + j] + p_ - sub) % p_;
        }
    }
    std::vector<std::uint32_t> digits(m_);
    for (unsigned i = 0; i < m_; ++i) digits[i] = static_cast<std::uint32_t>(r[i]);
    return encode(digits);
}

std::uint32_t FieldCtx::mul_v(std::uint32_t a, std::uint32_t b) const {
    if (m_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) return exp_[log_[a] + log_[b]];
    return mul_slow(a, b);
}

std::uint32_t FieldCtx::inv_v(std::uint32_t a) const {
    if (a == 0) fail(errc::division_by_zero, "inverse of zero in " + name());
    if (m_ == 1) {
        // extended Euclid on (a, p)
        std::int64_t t = 0, newt = 1, r = static_cast<std::int64_t>(p_), newr = a;
        while (newr != 0) {
            std::int64_t qq = r / newr;
            t = std::exchange(newt, t - qq * newt);
            r = std::exchange(newr, r - qq * newr);
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return static_cast<std::uint32_t>(t);
    }
    if (!exp_.empty()) return exp_[q_ - 1 - log_[a]];
    return pow_v(a, static_cast<long long>(q_) - 2);
}

std::uint32_t FieldCtx::pow_v(std::uint32_t a, long long e) const {
    if (e < 0) {
        if (a == 0) fail(errc::division_by_zero, "zero to a negative power");
        a = inv_v(a);
        // a != 0, so a^(q-1) = 1; reduce the magnitude mod q-1
        std::uint64_t r = static_cast<std::uint64_t>(-(e + 1)) + 1;
        e = static_cast<long long>(r % (q_ - 1));
    }
    if (a == 0) return e == 0 ? 1 : 0;
    std::uint64_t ue = static_cast<std::uint64_t>(e) % (q_ - 1);
    std::uint32_t r = 1, base = a;
    while (ue) {
        if (ue & 1) r = mul_v(r, base);
        base = mul_v(base, base);
        ue >>= 1;
    }
    return r;
}

void FieldCtx::build_tables() {
    // factor q-1
    std::vector<std::uint64_t> primes;
    std::uint64_t r = q_ - 1;
    for (std::uint64_t d = 2; d * d <= r; ++d) {
        if (r % d == 0) {
            primes.push_back(d);
            while (r % d == 0) r /= d;
        }
    }
    if (r > 1) primes.push_back(r);

    auto pow_slow = [this](std::uint32_t a, std::uint64_t e) {
        std::uint32_t acc = 1, base = a;
        while (e) {
            if (e & 1) acc = mul_slow(acc, base);
            base = mul_slow(base, base);
            e >>= 1;
        }
        return acc;
    };

    std::uint32_t g = 0;
    for (std::uint32_t cand = 2; cand < q_; ++cand) {
        bool ok = true;
        for (std::uint64_t pr : primes)
            if (pow_slow(cand, (q_ - 1) / pr) == 1) { ok = false; break; }
        if (ok) { g = cand; break; }
    }

    exp_.resize(2 * (q_ - 1));
    log_.assign(q_, 0);
    std::uint32_t cur = 1;
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = cur;
        exp_[i + q_ - 1] = cur;
        log_[cur] = static_cast<std::uint32_t>(i);
        cur = mul_slow(cur, g);
    }
}

std::string FieldCtx::name() const {
    if (m_ == 1) return "GF(" + std::to_string(p_) + ")";
    return "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + ")";
}

Field make_field(std::uint64_t p, unsigned m,
                 const std::optional<std::vector<std::uint32_t>>& modulus) {
    if (!is_prime(p)) fail(errc::not_prime, std::to_string(p) + " is not prime");
    if (m < 1) fail(errc::invalid_argument, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > FieldCtx::kMaxOrder) fail(errc::order_too_large, "field order exceeds 2^20");
    }

    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->m_ = m;
    ctx->q_ = q;

    if (m > 1) {
        if (modulus) {
            ZpPoly f = *modulus;
            if (f.size() != m + 1 || f.back() != 1)
                fail(errc::not_irreducible, "modulus must be monic of degree " + std::to_string(m));
            for (auto c : f)
                if (c >= p) fail(errc::invalid_argument, "modulus coefficient out of range");
            if (!is_irreducible(f, p))
                fail(errc::not_irreducible, "modulus is not irreducible over GF(" + std::to_string(p) + ")");
            ctx->modulus_ = f;
        } else {
            // smallest canonical encoding among monic irreducibles of degree m
            ZpPoly f(m + 1, 0);
            f[m] = 1;
            bool found = false;
            for (std::uint64_t lower = 0; lower < q; ++lower) {
                std::uint64_t v = lower;
                for (unsigned i = 0; i < m; ++i) {
                    f[i] = static_cast<std::uint32_t>(v % p);
                    v /= p;
                }
                if (is_irreducible(f, p)) { found = true; break; }
            }
            if (!found) fail(errc::not_irreducible, "no irreducible polynomial found");  // cannot happen
            ctx->modulus_ = f;
        }
        if (q <= (1u << 16)) ctx->build_tables();
    } else if (modulus && !modulus->empty()) {
        fail(errc::invalid_argument, "modulus given for a prime field");
    }
    return ctx;
}

Elt Elt::operator+(Elt o) const { field().check_same(o); return Elt(f_, f_->add_v(v_, o.v_)); }
Elt Elt::operator-(Elt o) const { field().check_same(o); return Elt(f_, f_->sub_v(v_, o.v_)); }
Elt Elt::operator*(Elt o) const { field().check_same(o); return Elt(f_, f_->mul_v(v_, o.v_)); }
Elt Elt::operator/(Elt o) const { field().check_same(o); return Elt(f_, f_->mul_v(v_, f_->inv_v(o.v_))); }
Elt Elt::operator-() const { return Elt(f_, f_->neg_v(v_)); }

bool Elt::operator==(Elt o) const {
    if (f_ != o.f_) fail(errc::field_mismatch, "comparing elements of different fields");
    return v_ == o.v_;
}

}  // namespace atgrs
