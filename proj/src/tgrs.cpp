#include "atgrs/tgrs.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>

namespace atgrs {

const char* mds_method_name(MdsMethod m) {
    switch (m) {
        case MdsMethod::criterion: return "criterion";
        case MdsMethod::brute_force: return "brute-force";
        case MdsMethod::both: return "both";
    }
    return "?";
}

const char* novelty_name(NoveltyClass c) {
    switch (c) {
        case NoveltyClass::known_pattern: return "known-pattern";
        case NoveltyClass::condition_i: return "condition-i";
        case NoveltyClass::condition_ii: return "condition-ii";
        case NoveltyClass::neither: return "neither";
    }
    return "?";
}

std::vector<std::pair<int, int>> TwistMatrix::support() const {
    std::vector<std::pair<int, int>> s;
    for (int m = 0; m < k(); ++m)
        for (int j = 1; j <= twists(); ++j)
            if (!entry(m, j).is_zero()) s.emplace_back(m, j);
    return s;
}

CodeSpec CodeSpec::make(Field field, int n, int k, std::vector<Elt> alpha,
                        std::vector<Elt> v, TwistMatrix twist) {
    if (k < 3) fail(errc::invalid_argument, "k must be >= 3");
    if (k >= n) fail(errc::invalid_argument, "k must be < n");
    if (static_cast<std::uint64_t>(n) > field->q())
        fail(errc::invalid_argument, "n exceeds the field order");
    if (alpha.size() != static_cast<std::size_t>(n))
        fail(errc::invalid_argument, "alpha must list n evaluation points");
    for (const Elt& a : alpha) field->check_same(a);
    for (std::size_t i = 0; i < alpha.size(); ++i)
        for (std::size_t j = i + 1; j < alpha.size(); ++j)
            if (alpha[i] == alpha[j]) fail(errc::invalid_argument, "alpha not distinct");
    if (v.empty()) v.assign(static_cast<std::size_t>(n), field->one());
    if (v.size() != static_cast<std::size_t>(n))
        fail(errc::invalid_argument, "v must list n column multipliers");
    for (std::size_t i = 0; i < v.size(); ++i) {
        field->check_same(v[i]);
        if (v[i].is_zero())
            fail(errc::invalid_argument, "v[" + std::to_string(i) + "] must be nonzero");
    }
    if (twist.k() != k || twist.twists() != n - k)
        fail(errc::invalid_argument, "eta must be a k x (n-k) matrix");
    return CodeSpec{std::move(field), n, k, std::move(alpha), std::move(v), std::move(twist)};
}

Mat generator_matrix(const CodeSpec& spec) {
    const FieldCtx& f = spec.ctx();
    const int n = spec.n, k = spec.k;
    Mat g(f, static_cast<std::size_t>(k), static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        // powers alpha_j^0 .. alpha_j^{n-1}
        std::vector<Elt> p(static_cast<std::size_t>(n), f.one());
        for (int e = 1; e < n; ++e) p[static_cast<std::size_t>(e)] = p[static_cast<std::size_t>(e - 1)] * spec.alpha[static_cast<std::size_t>(j)];
        for (int m = 0; m < k; ++m) {
            Elt acc = p[static_cast<std::size_t>(m)];
            for (int i = 1; i <= n - k; ++i)
                acc += spec.twist.entry(m, i) * p[static_cast<std::size_t>(k - 1 + i)];
            g.at(static_cast<std::size_t>(m), static_cast<std::size_t>(j)) = acc * spec.v[static_cast<std::size_t>(j)];
        }
    }
    return g;
}

std::vector<Elt> encode(const CodeSpec& spec, std::span<const Elt> message) {
    if (message.size() != static_cast<std::size_t>(spec.k))
        fail(errc::length_mismatch, "message length must equal k");
    const FieldCtx& f = spec.ctx();
    // assemble the twisted polynomial: sum f_m x^m + sum f_m eta_{m,i} x^{k-1+i}
    std::vector<Elt> coeffs(static_cast<std::size_t>(spec.n), f.zero());
    for (int m = 0; m < spec.k; ++m) {
        coeffs[static_cast<std::size_t>(m)] += message[static_cast<std::size_t>(m)];
        for (int i = 1; i <= spec.n - spec.k; ++i)
            coeffs[static_cast<std::size_t>(spec.k - 1 + i)] += message[static_cast<std::size_t>(m)] * spec.twist.entry(m, i);
    }
    Poly fx(f, std::move(coeffs));
    std::vector<Elt> out;
    out.reserve(static_cast<std::size_t>(spec.n));
    for (int j = 0; j < spec.n; ++j)
        out.push_back(spec.v[static_cast<std::size_t>(j)] * fx.eval(spec.alpha[static_cast<std::size_t>(j)]));
    return out;
}

SubsetCtx subset_context(const CodeSpec& spec, std::span<const int> subset0) {
    const FieldCtx& f = spec.ctx();
    const int k = spec.k;
    if (subset0.size() != static_cast<std::size_t>(k))
        fail(errc::invalid_argument, "subset size must equal k");
    std::vector<Elt> pts;
    pts.reserve(subset0.size());
    for (int i : subset0) {
        if (i < 0 || i >= spec.n) fail(errc::index_out_of_range, "subset index out of range");
        pts.push_back(spec.alpha[static_cast<std::size_t>(i)]);
    }
    Poly g = poly_from_roots(f, pts);
    std::vector<Elt> d = g.coeffs();  // d_j = coeff of x^j, length k+1

    Mat companion(f, static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    for (int i = 0; i + 1 < k; ++i) companion.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1)) = f.one();
    for (int j = 0; j < k; ++j)
        companion.at(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(j)) = -d[static_cast<std::size_t>(j)];

    WSeq w(f, pts, 0, spec.n - 2 + k);
    return SubsetCtx{std::vector<int>(subset0.begin(), subset0.end()), std::move(g), std::move(d),
                     std::move(companion), std::move(w)};
}

namespace {

// a_{m,t}^l for l = t .. n-k+t-1, as a dense vector indexed by l-t.
std::vector<Elt> a_coeffs(const CodeSpec& spec, const SubsetCtx& sc, int m, int t) {
    const FieldCtx& f = spec.ctx();
    const int w = spec.n - spec.k;
    if (m < 0 || m >= spec.k || t < 1 || t > spec.k)
        fail(errc::index_out_of_range, "g entry indices must satisfy 0 <= m < k, 1 <= t <= k");
    std::vector<Elt> a(static_cast<std::size_t>(w), f.zero());
    for (int l = t; l <= w + t - 1; ++l) {
        Elt acc = f.zero();
        int ilo = std::max(1, l - (t - 1));
        int ihi = std::min(w, l);
        for (int i = ilo; i <= ihi; ++i)
            acc += spec.twist.entry(m, i) * sc.d[static_cast<std::size_t>(l - i)];
        a[static_cast<std::size_t>(l - t)] = acc;
    }
    return a;
}

}  // namespace

Elt g_entry_companion(const CodeSpec& spec, const SubsetCtx& sc, int m, int t) {
    const FieldCtx& f = spec.ctx();
    std::vector<Elt> a = a_coeffs(spec, sc, m, t);
    // Horner on the companion matrix
    const std::size_t k = static_cast<std::size_t>(spec.k);
    Mat acc(f, k, k);
    for (std::size_t i = 0; i < k; ++i) acc.at(i, i) = a.back();
    for (std::size_t idx = a.size() - 1; idx-- > 0;) {
        acc = acc * sc.companion;
        for (std::size_t i = 0; i < k; ++i) acc.at(i, i) += a[idx];
    }
    return -acc.at(k - 1, k - 1);
}

Elt g_entry_wsum(const CodeSpec& spec, const SubsetCtx& sc, int m, int t) {
    const FieldCtx& f = spec.ctx();
    std::vector<Elt> a = a_coeffs(spec, sc, m, t);
    Elt acc = f.zero();
    const int k = spec.k;
    for (int l = t; l <= spec.n - k + t - 1; ++l)
        acc += a[static_cast<std::size_t>(l - t)] * sc.w.at(k - 1 - t + l);
    return -acc;
}

Elt criterion_det(const CodeSpec& spec, const SubsetCtx& sc) {
    const FieldCtx& f = spec.ctx();
    const std::size_t k = static_cast<std::size_t>(spec.k);
    Mat b = Mat::identity(f, k);
    for (int m = 0; m < spec.k; ++m)
        for (int t = 1; t <= spec.k; ++t)
            b.at(static_cast<std::size_t>(m), static_cast<std::size_t>(t - 1)) +=
                g_entry_wsum(spec, sc, m, t);
    return det(b);
}

std::vector<int> first_subset(int k) {
    std::vector<int> s(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i;
    return s;
}

bool next_subset(std::vector<int>& s, int n) {
    const int k = static_cast<int>(s.size());
    int i = k - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++s[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    constexpr std::uint64_t kSat = ~0ull;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        std::uint64_t num = n - k + i;
        if (r > kSat / num) return kSat;
        r = r * num / i;
    }
    return r;
}

std::vector<int> unrank_subset(int n, int k, std::uint64_t rank) {
    std::vector<int> s;
    s.reserve(static_cast<std::size_t>(k));
    int next = 0;
    for (int slot = 0; slot < k; ++slot) {
        for (int v = next; v < n; ++v) {
            std::uint64_t block = binomial_saturating(static_cast<std::uint64_t>(n - 1 - v),
                                                      static_cast<std::uint64_t>(k - 1 - slot));
            if (rank < block) {
                s.push_back(v);
                next = v + 1;
                break;
            }
            rank -= block;
        }
    }
    return s;
}

namespace {

struct SubsetOutcome {
    bool fails = false;
};

// Evaluates one subset under the requested method; throws on disagreement.
bool subset_fails(const CodeSpec& spec, const Mat& gen, MdsMethod method,
                  std::span<const int> subset) {
    bool crit_fail = false, brute_fail = false;
    if (method != MdsMethod::brute_force) {
        SubsetCtx sc = subset_context(spec, subset);
        crit_fail = criterion_det(spec, sc).is_zero();
    }
    if (method != MdsMethod::criterion)
        brute_fail = det(gen.select_columns(subset)).is_zero();
    if (method == MdsMethod::both && crit_fail != brute_fail) {
        std::string s;
        for (int i : subset) s += std::to_string(i + 1) + " ";
        fail(errc::method_disagreement, "criterion and brute force differ on subset { " + s + "}");
    }
    return method == MdsMethod::brute_force ? brute_fail : crit_fail;
}

std::vector<int> to_one_based(std::span<const int> s) {
    std::vector<int> r(s.begin(), s.end());
    for (int& x : r) ++x;
    return r;
}

}  // namespace

MdsReport is_mds(const CodeSpec& spec, MdsMethod method, bool full_report, int jobs) {
    MdsReport report;
    report.method = method;
    report.novelty = classify_novelty(spec.twist);

    Mat gen = method == MdsMethod::criterion ? Mat(spec.ctx(), 1, 1) : generator_matrix(spec);

    const std::uint64_t total = binomial_saturating(static_cast<std::uint64_t>(spec.n),
                                                    static_cast<std::uint64_t>(spec.k));
    if (jobs > 1 && total != ~0ull && total > 1) {
        // rank-chunked scan; merged output matches the sequential order
        const int workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), total));
        std::vector<std::vector<std::vector<int>>> found(static_cast<std::size_t>(workers));
        std::atomic<std::uint64_t> best_fail_rank{~0ull};
        std::vector<std::thread> pool;
        std::exception_ptr first_error;
        std::mutex err_mu;
        for (int wi = 0; wi < workers; ++wi) {
            pool.emplace_back([&, wi] {
                try {
                    std::uint64_t lo = total * static_cast<std::uint64_t>(wi) / static_cast<std::uint64_t>(workers);
                    std::uint64_t hi = total * static_cast<std::uint64_t>(wi + 1) / static_cast<std::uint64_t>(workers);
                    if (lo >= hi) return;
                    std::vector<int> s = unrank_subset(spec.n, spec.k, lo);
                    for (std::uint64_t r = lo; r < hi; ++r) {
                        if (!full_report && best_fail_rank.load(std::memory_order_relaxed) < r) break;
                        if (subset_fails(spec, gen, method, s)) {
                            found[static_cast<std::size_t>(wi)].push_back(to_one_based(s));
                            if (!full_report) {
                                std::uint64_t cur = best_fail_rank.load();
                                while (r < cur && !best_fail_rank.compare_exchange_weak(cur, r)) {}
                                break;
                            }
                        }
                        next_subset(s, spec.n);
                    }
                } catch (...) {
                    std::scoped_lock lk(err_mu);
                    if (!first_error) first_error = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        if (first_error) std::rethrow_exception(first_error);
        for (auto& part : found)
            for (auto& s : part) report.failing_subsets.push_back(std::move(s));
        std::sort(report.failing_subsets.begin(), report.failing_subsets.end());
        if (!full_report && report.failing_subsets.size() > 1)
            report.failing_subsets.resize(1);
    } else {
        std::vector<int> s = first_subset(spec.k);
        do {
            if (subset_fails(spec, gen, method, s)) {
                report.failing_subsets.push_back(to_one_based(s));
                if (!full_report) break;
            }
        } while (next_subset(s, spec.n));
    }

    report.mds = report.failing_subsets.empty();
    return report;
}

bool special_case_mds(const CodeSpec& spec, int hook, int twistpos) {
    const FieldCtx& f = spec.ctx();
    const int k = spec.k;
    auto sup = spec.twist.support();
    if (sup.size() != 1 || sup[0].first != hook || sup[0].second != twistpos + 1)
        fail(errc::not_single_twist,
             "twist matrix must have exactly one nonzero entry at the named (hook, twist) position");
    Elt eta = spec.twist.entry(hook, twistpos + 1);
    const int h = hook, t = twistpos;

    std::vector<int> s = first_subset(k);
    do {
        SubsetCtx sc = subset_context(spec, s);
        Elt acc = f.zero();
        for (int i = 0; i <= t; ++i) acc += sc.c(k - h + t - i) * sc.w.at(k - 1 + i);
        if (eta * acc == f.one()) return false;
    } while (next_subset(s, spec.n));
    return true;
}

NoveltyClass classify_novelty(const TwistMatrix& twist) {
    const int k = twist.k();
    auto sup = twist.support();
    std::set<int> rows, cols;
    for (auto [r, c] : sup) {
        rows.insert(r);
        cols.insert(c);
    }
    const int rw = static_cast<int>(rows.size());
    const int cw = static_cast<int>(cols.size());

    auto in_bottom_block = [&](std::pair<int, int> pos) {
        return (pos.first == k - 2 || pos.first == k - 1) && (pos.second == 1 || pos.second == 2);
    };
    const bool within_block = std::all_of(sup.begin(), sup.end(), in_bottom_block);

    if (rw == 2 && !within_block) return NoveltyClass::condition_i;
    if (rw > 2 && rw + cw < 2 * static_cast<int>(sup.size())) return NoveltyClass::condition_ii;

    // known support shapes: the catalogue this construction generalizes
    if (sup.empty()) return NoveltyClass::known_pattern;             // plain GRS
    if (sup.size() == 1) return NoveltyClass::known_pattern;         // single twist anywhere
    if (rw == 1) return NoveltyClass::known_pattern;                 // one hook, several twists
    if (within_block) return NoveltyClass::known_pattern;            // bottom-left 2x2 block
    if (rw == static_cast<int>(sup.size()) && cw == static_cast<int>(sup.size()))
        return NoveltyClass::known_pattern;                          // one per row and column
    {
        // diagonal band eta_{k-l,1}, eta_{k-l+1,2}, ..., eta_{k-1,l}
        const int l = static_cast<int>(sup.size());
        if (l <= k) {
            bool band = true;
            for (auto [r, c] : sup) band = band && (r - (k - l) == c - 1);
            if (band) return NoveltyClass::known_pattern;
        }
    }
    return NoveltyClass::neither;
}

Mat zhang_generator(const FieldCtx& f, int k, Elt eta, std::span<const Elt> alpha,
                    std::span<const Elt> v) {
    const int n = static_cast<int>(alpha.size());
    if (v.size() != alpha.size()) fail(errc::length_mismatch, "v must match alpha in length");
    Mat g(f, static_cast<std::size_t>(k), static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        Elt a = alpha[static_cast<std::size_t>(j)];
        Elt acc = f.one();
        for (int m = 0; m + 1 < k; ++m) {
            g.at(static_cast<std::size_t>(m), static_cast<std::size_t>(j)) = v[static_cast<std::size_t>(j)] * acc;
            acc *= a;
        }
        Elt last = acc + eta * pow(a, static_cast<long long>(f.q()) - 2);
        g.at(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(j)) = v[static_cast<std::size_t>(j)] * last;
    }
    return g;
}

Mat parity_check_zhang(const FieldCtx& f, int n, int k, int l, Elt eta,
                       std::span<const Elt> alpha, std::span<const Elt> v) {
    if (static_cast<int>(alpha.size()) != n) fail(errc::length_mismatch, "alpha must list n points");
    if (v.size() != alpha.size()) fail(errc::length_mismatch, "v must match alpha in length");
    if (k < 1 || k >= n) fail(errc::invalid_argument, "need 1 <= k < n");
    if (l < 0 || l > k - 1) fail(errc::index_out_of_range, "l must lie in [0, k-1]");
    if (eta.is_zero()) fail(errc::zero_twist, "eta must be nonzero");
    require_distinct(alpha);
    for (const Elt& a : alpha)
        if (a.is_zero()) fail(errc::zero_evaluation_point, "points must be nonzero");
    for (const Elt& x : v)
        if (x.is_zero()) fail(errc::invalid_argument, "v entries must be nonzero");

    Poly g = poly_from_roots(f, alpha);
    std::vector<Elt> u = u_weights(f, alpha);
    auto c = [&](int j) { return g.coeff(n - j); };  // c_j = coeff of x^{n-j}

    // f(x) = x^{n-l-1} + c_1 x^{n-l-2} + ... + c_{k-l-1} x^{n-k} + b,
    // with b fixed by orthogonality against the twisted row:
    // b = -w_{n-1} / (eta w_{-1}).
    Elt w_m1 = wseq_direct(f, alpha, -1);
    Elt b = -(f.one() / (eta * w_m1));
    std::vector<Elt> fc(static_cast<std::size_t>(n - l), f.zero());  // degree n-l-1
    for (int j = 0; j <= k - l - 1; ++j) fc[static_cast<std::size_t>(n - l - 1 - j)] = c(j);
    fc[0] += b;
    Poly fx(f, std::move(fc));

    const std::size_t rows = static_cast<std::size_t>(n - k);
    Mat h(f, rows, static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Elt base = u[static_cast<std::size_t>(i)] / v[static_cast<std::size_t>(i)];
        h.at(0, static_cast<std::size_t>(i)) = base * fx.eval(alpha[static_cast<std::size_t>(i)]);
        Elt acc = base * alpha[static_cast<std::size_t>(i)];
        for (std::size_t r = 1; r < rows; ++r) {
            h.at(r, static_cast<std::size_t>(i)) = acc;
            acc *= alpha[static_cast<std::size_t>(i)];
        }
    }
    return h;
}

}  // namespace atgrs
