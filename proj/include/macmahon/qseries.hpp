#ifndef MACMAHON_QSERIES_HPP
#define MACMAHON_QSERIES_HPP

#include "macmahon/rational.hpp"

#include <string>
#include <vector>

namespace macmahon {

/// Truncated formal power series c_0 + c_1 q + ... + c_N q^N over Rational.
///
/// Values are immutable in spirit: operations return new series.  Binary
/// operations reconcile mismatched truncations to the minimum; every series
/// here is a prefix of a well-defined infinite series, so dropping the tail
/// is always sound.
class QSeries {
public:
    explicit QSeries(int truncation);
    QSeries(int truncation, std::vector<Rational> coeffs);
    static QSeries constant(const Rational& c, int truncation);

    int truncation() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int n) const;
    void set_coeff(int n, Rational v);
    const std::vector<Rational>& coeffs() const { return c_; }

    QSeries truncated(int n) const;
    bool is_zero() const;

    // D = q d/dq, applied `power` times: q^n -> n^power q^n.  The constant
    // term survives only at power 0.
    QSeries derivative(int power = 1) const;
    // sum_j p_j D^j, i.e. the n-th coefficient picks up the factor p(n).
    QSeries poly_in_d(const std::vector<Rational>& poly) const;

    friend QSeries operator+(const QSeries& f, const QSeries& g);
    friend QSeries operator-(const QSeries& f, const QSeries& g);
    friend QSeries operator*(const QSeries& f, const QSeries& g);
    friend QSeries operator*(const Rational& c, const QSeries& f);
    QSeries operator-() const;

    // Strict equality: same truncation and identical coefficients.
    friend bool operator==(const QSeries& f, const QSeries& g);
    friend bool operator!=(const QSeries& f, const QSeries& g) { return !(f == g); }

    std::string str() const;

private:
    std::vector<Rational> c_;
};

/// Smallest index where f and g disagree on their common range, or -1 when
/// they agree up to min(truncation).
int first_mismatch(const QSeries& f, const QSeries& g);

/// True when f and g agree coefficientwise up to min(truncation).
bool agree(const QSeries& f, const QSeries& g);

} // namespace macmahon

#endif
