#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "atgrs/mat.hpp"
#include "atgrs/poly.hpp"
#include "atgrs/wseq.hpp"

namespace atgrs {

/// The k x (n-k) twist matrix attached to an arbitrary-twist GRS code.
/// Entry (m, j) adds eta_{m,j} x^{k-1+j} to the basis monomial x^m, so rows
/// are hook positions (0-based) and columns are twist offsets (1-based, the
/// customary indexing for eta_{m,j}).
class TwistMatrix {
  public:
    TwistMatrix(const FieldCtx& f, int k, int w) : eta_(f, static_cast<std::size_t>(k), static_cast<std::size_t>(w)) {}
    explicit TwistMatrix(Mat eta) : eta_(std::move(eta)) {}

    int k() const { return static_cast<int>(eta_.rows()); }
    int twists() const { return static_cast<int>(eta_.cols()); }

    /// eta_{m,j}, j 1-based.
    Elt entry(int m, int j) const { return eta_.at(static_cast<std::size_t>(m), static_cast<std::size_t>(j - 1)); }
    void set(int m, int j, Elt v) { eta_.at(static_cast<std::size_t>(m), static_cast<std::size_t>(j - 1)) = v; }

    const Mat& matrix() const { return eta_; }

    /// Nonzero positions as (row 0-based, column 1-based), row-major order.
    std::vector<std::pair<int, int>> support() const;

  private:
    Mat eta_;
};

/// Full description of an arbitrary-twist GRS code: q, n, k, evaluation
/// points, column multipliers and the twist matrix.
struct CodeSpec {
    Field field;
    int n = 0;
    int k = 0;
    std::vector<Elt> alpha;
    std::vector<Elt> v;
    TwistMatrix twist;

    /// Validates every structural invariant (3 <= k < n <= q, distinct
    /// alpha, nonzero v, twist shape); error messages name the bad field.
    static CodeSpec make(Field field, int n, int k, std::vector<Elt> alpha,
                         std::vector<Elt> v, TwistMatrix twist);

    const FieldCtx& ctx() const { return *field; }
};

/// Per-subset working state for the MDS criterion: G(x) over the chosen
/// points, its coefficients both ways, the companion matrix of G, and a
/// window of the subset's w sequence.
struct SubsetCtx {
    std::vector<int> index;  // 0-based positions into alpha, ascending
    Poly gpoly;              // monic, degree k
    std::vector<Elt> d;      // d_j = coefficient of x^j, size k+1
    Mat companion;           // k x k, superdiagonal ones, last row -c_k..-c_1
    WSeq w;                  // window [0, n-2+k]

    /// c_j = coefficient of x^{k-j}; zero outside 0..k.
    Elt c(int j) const {
        int k = gpoly.degree();
        if (j < 0 || j > k) return gpoly.field().zero();
        return d[static_cast<std::size_t>(k - j)];
    }
};

enum class MdsMethod { criterion, brute_force, both };
const char* mds_method_name(MdsMethod m);

enum class NoveltyClass { known_pattern, condition_i, condition_ii, neither };
const char* novelty_name(NoveltyClass c);

struct MdsReport {
    bool mds = false;
    MdsMethod method = MdsMethod::criterion;
    std::vector<std::vector<int>> failing_subsets;  // 1-based point indices
    NoveltyClass novelty = NoveltyClass::neither;
};

/// k x n generator (I_k | A(eta)) V_n(alpha) diag(v); entry (m, j) is
/// v_j (alpha_j^m + sum_i eta_{m,i} alpha_j^{k-1+i}).
Mat generator_matrix(const CodeSpec& spec);

/// Codeword of a length-k message; evaluates the twisted polynomial at each
/// point (equivalently, message times generator).
std::vector<Elt> encode(const CodeSpec& spec, std::span<const Elt> message);

SubsetCtx subset_context(const CodeSpec& spec, std::span<const int> subset0);

/// g_{m,t} via the companion matrix: -(F_{m,t}(A_I))[k-1][k-1] where
/// F_{m,t}(x) = sum_{l=t}^{n-k+t-1} a_{m,t}^l x^{l-t} and
/// a_{m,t}^l = sum_{i+j=l} eta_{m,i} d_j (1 <= i <= n-k, 0 <= j <= t-1).
Elt g_entry_companion(const CodeSpec& spec, const SubsetCtx& sc, int m, int t);

/// The same g_{m,t} through the w sequence:
/// -sum_{l=t}^{n-k+t-1} a_{m,t}^l w_{k-1-t+l}.
Elt g_entry_wsum(const CodeSpec& spec, const SubsetCtx& sc, int m, int t);

/// det(I_k + [g_{m,t}]), the per-subset criterion value; the code is MDS
/// iff this is nonzero for every k-subset.
Elt criterion_det(const CodeSpec& spec, const SubsetCtx& sc);

/// Runs the chosen method over all k-subsets in lexicographic order.
/// Stops at the first failing subset unless full_report is set. Method
/// `both` runs criterion and minor extraction side by side and throws
/// MethodDisagreement if they ever differ.
MdsReport is_mds(const CodeSpec& spec, MdsMethod method = MdsMethod::criterion,
                 bool full_report = false, int jobs = 1);

/// Single-twist shortcut: with the only nonzero entry at row `hook`,
/// column `twistpos`+1, the code is MDS iff for every subset
/// eta * sum_{i=0}^{t} c_{k-h+t-i} w_{k-1+i} != 1.
/// Throws NotSingleTwist when the twist matrix has a different shape.
bool special_case_mds(const CodeSpec& spec, int hook, int twistpos);

/// Classifies a twist matrix against the catalogue of previously known
/// support shapes; condition-i / condition-ii mark supports that certify a
/// genuinely new construction.
NoveltyClass classify_novelty(const TwistMatrix& twist);

/// Generator of the single-twist code with hook k-1 and twist exponent
/// q-2 (so alpha^{q-2} = alpha^{-1} on nonzero points).
Mat zhang_generator(const FieldCtx& f, int k, Elt eta, std::span<const Elt> alpha,
                    std::span<const Elt> v);

/// Parity-check matrix of that code: first row (u_i / v_i) f(alpha_i) with
/// f(x) = x^{n-l-1} + c_1 x^{n-l-2} + ... + c_{k-l-1} x^{n-k} + b,
/// b = -w_{n-1} / (eta w_{-1}), then the GRS rows (u_i alpha_i / v_i) alpha_i^j
/// for j = 0..n-k-2.
/// Throws: zero_evaluation_point, zero_twist, duplicate_roots.
Mat parity_check_zhang(const FieldCtx& f, int n, int k, int l, Elt eta,
                       std::span<const Elt> alpha, std::span<const Elt> v);

/// Lexicographic k-subset enumeration over {0..n-1}.
std::vector<int> first_subset(int k);
bool next_subset(std::vector<int>& s, int n);
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k);
std::vector<int> unrank_subset(int n, int k, std::uint64_t rank);

}  // namespace atgrs
