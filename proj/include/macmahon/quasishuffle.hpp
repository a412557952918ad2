#ifndef MACMAHON_QUASISHUFFLE_HPP
#define MACMAHON_QUASISHUFFLE_HPP

#include "macmahon/partition.hpp"
#include "macmahon/linalg.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

namespace macmahon {

/// Formal finite rational linear combination of words.  Words never merge
/// unless identical; zero-coefficient terms are dropped on the spot.  The
/// empty word is the multiplicative unit (its series is the constant 1).
class LinComb {
public:
    using Map = std::map<Vec, Rational, VecOrder>;

    LinComb() = default;
    static LinComb single(Vec w, Rational c = Rational(1));

    void add(const Vec& w, const Rational& c);
    Rational coeff(const Vec& w) const;
    const Map& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    LinComb& operator+=(const LinComb& o);
    LinComb& operator-=(const LinComb& o);
    friend LinComb operator+(LinComb a, const LinComb& b) { a += b; return a; }
    friend LinComb operator-(LinComb a, const LinComb& b) { a -= b; return a; }
    friend LinComb operator*(const Rational& c, const LinComb& l);
    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

    int max_word_weight() const;
    int max_filtration() const;
    std::string str() const;

private:
    Map terms_;
};

/// z_i ⋄ z_j for letters i, j >= 1: a combination of single letters with
/// top coefficient i!j!/(i+j+1)! on z_{i+j+1} and Bernoulli-weighted lower
/// terms.  Symmetric in i and j; for odd i, j only odd letters survive.
LinComb diamond(int i, int j);

/// ⋄-product over a list of letters (associative, so the fold order is
/// immaterial).
LinComb diamond_fold(const std::vector<int>& letters);

/// Recursive quasi-shuffle product on words with letters >= 1:
///   xw * yv = x(w * yv) + y(xw * v) + (x ⋄ y)(w * v),  1 * w = w * 1 = w.
/// Memoized; safe to call concurrently.
LinComb quasi_shuffle(const Vec& w, const Vec& v);

/// Linear extension of the generating series map: word -> u_series(word),
/// empty word -> 1.
QSeries u_of_lincomb(const LinComb& l, int truncation);

/// Orbit sum over all permutations of vec, as a LinComb with the stabilizer
/// multiplicities (so its series is the full symmetric-group trace).
LinComb sym_orbit(const Vec& vec);

/// Symmetrized series: sum of u_series over all permutations of vec.
/// Requires every entry odd and >= 1; the result is quasimodular of mixed
/// weight <= weight + length.
QSeries sym_u(const Vec& vec, int truncation);

/// Set-partition expansion of the same symmetrization:
///   sum over partitions B of (-1)^{a-|B|} prod (|β|-1)! * prod_β U(⋄_β).
/// Must agree with sym_u exactly.
QSeries hoffman_sym(const Vec& vec, int truncation);

struct ConvolutionReduction {
    LinComb comb;
    int max_word_weight = 0;
    // Set when some output word exceeds |α|+|β|+a+b-1 by weight alone (the
    // filtered bound weight+length <= |α|+|β|+a+b is always enforced).
    bool weight_bound_flag = false;
};

/// Rational coefficients c_w with sum_{i+j=n} M_α(i) M_β(j) = sum c_w M_w(n),
/// obtained as quasi_shuffle(α, β).  Letters must be >= 1.
ConvolutionReduction convolution_reduce(const Vec& alpha, const Vec& beta);

struct NoRepresentation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The span of all words (zero entries allowed) with weight+length <= bound,
/// together with the verified kernel of the series map on it.  Canonical
/// representatives are unique: kernel leading coordinates are forced to zero.
class WordSpan {
public:
    static std::shared_ptr<const WordSpan> get(int bound);

    int bound() const { return bound_; }
    const std::vector<Vec>& candidates() const { return cands_; }
    int solve_rows() const { return rows_; }
    int kernel_dimension() const { return static_cast<int>(kernel_.size()); }

    LinComb canonicalize(LinComb l) const;
    /// Exact coefficients with target = sum c_w U_w on rows 1..solve_rows(),
    /// returned in canonical form; nullopt when no combination exists.
    std::optional<LinComb> solve_series(const QSeries& target) const;

private:
    explicit WordSpan(int bound);
    int bound_ = 0;
    int rows_ = 0;
    std::vector<Vec> cands_;
    std::vector<LinComb> kernel_;      // RREF rows of the kernel
    std::vector<Vec> kernel_leads_;    // leading word of each kernel row
};

/// Rational coefficients with n M_α(n) = sum c_w M_w(n), solved exactly over
/// the candidate words of weight+length <= |α| + length(α) + 2 and verified
/// to verify_truncation.  Throws NoRepresentation if the solve fails (that
/// would contradict the differential-closure theorem and signals a bug).
LinComb times_n_reduce(const Vec& alpha, int verify_truncation);

/// Reduces sum_terms p(n)-weighted M-words to a single constant-coefficient
/// combination by iterating times_n_reduce, canonicalized at the combined
/// filtration bound and verified against the series to verify_truncation.
LinComb reduce_polynomial_terms(
    const std::vector<std::pair<std::vector<Rational>, Vec>>& terms,
    int verify_truncation);

} // namespace macmahon

#endif
