#include "macmahon/qseries.hpp"

#include <sstream>
#include <stdexcept>

namespace macmahon {

QSeries::QSeries(int truncation) {
    if (truncation < 0) throw std::invalid_argument("negative truncation");
    c_.assign(static_cast<std::size_t>(truncation) + 1, Rational());
}

QSeries::QSeries(int truncation, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (truncation < 0 || c_.size() != static_cast<std::size_t>(truncation) + 1)
        throw std::invalid_argument("coefficient count does not match truncation");
}

QSeries QSeries::constant(const Rational& c, int truncation) {
    QSeries s(truncation);
    s.c_[0] = c;
    return s;
}

const Rational& QSeries::coeff(int n) const {
    if (n < 0 || n > truncation()) throw std::out_of_range("coefficient index out of range");
    return c_[static_cast<std::size_t>(n)];
}

void QSeries::set_coeff(int n, Rational v) {
    if (n < 0 || n > truncation()) throw std::out_of_range("coefficient index out of range");
    c_[static_cast<std::size_t>(n)] = std::move(v);
}

QSeries QSeries::truncated(int n) const {
    if (n >= truncation()) return *this;
    if (n < 0) throw std::invalid_argument("negative truncation");
    return QSeries(n, std::vector<Rational>(c_.begin(), c_.begin() + n + 1));
}

bool QSeries::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

QSeries QSeries::derivative(int power) const {
    if (power < 0) throw std::invalid_argument("negative derivative power");
    if (power == 0) return *this;
    QSeries out(truncation());
    Int np;
    for (int n = 1; n <= truncation(); ++n) {
        mpz_ui_pow_ui(np.get_mpz_t(), static_cast<unsigned long>(n),
                      static_cast<unsigned long>(power));
        out.c_[static_cast<std::size_t>(n)] = Rational(np) * c_[static_cast<std::size_t>(n)];
    }
    return out;
}

QSeries QSeries::poly_in_d(const std::vector<Rational>& poly) const {
    QSeries out(truncation());
    for (int n = 0; n <= truncation(); ++n) {
        if (c_[static_cast<std::size_t>(n)].is_zero()) continue;
        // Horner evaluation of p(n).
        Rational pn;
        for (auto it = poly.rbegin(); it != poly.rend(); ++it) pn = pn * Rational(n) + *it;
        out.c_[static_cast<std::size_t>(n)] = pn * c_[static_cast<std::size_t>(n)];
    }
    return out;
}

QSeries operator+(const QSeries& f, const QSeries& g) {
    const int n = std::min(f.truncation(), g.truncation());
    QSeries out(n);
    for (int i = 0; i <= n; ++i) out.c_[i] = f.c_[i] + g.c_[i];
    return out;
}

QSeries operator-(const QSeries& f, const QSeries& g) {
    const int n = std::min(f.truncation(), g.truncation());
    QSeries out(n);
    for (int i = 0; i <= n; ++i) out.c_[i] = f.c_[i] - g.c_[i];
    return out;
}

QSeries operator*(const QSeries& f, const QSeries& g) {
    const int n = std::min(f.truncation(), g.truncation());
    QSeries out(n);
    for (int i = 0; i <= n; ++i) {
        if (f.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (g.c_[j].is_zero()) continue;
            out.c_[i + j] += f.c_[i] * g.c_[j];
        }
    }
    return out;
}

QSeries operator*(const Rational& c, const QSeries& f) {
    QSeries out(f.truncation());
    if (c.is_zero()) return out;
    for (int i = 0; i <= f.truncation(); ++i) out.c_[i] = c * f.c_[i];
    return out;
}

QSeries QSeries::operator-() const { return Rational(-1) * *this; }

bool operator==(const QSeries& f, const QSeries& g) {
    return f.c_ == g.c_;
}

int first_mismatch(const QSeries& f, const QSeries& g) {
    const int n = std::min(f.truncation(), g.truncation());
    for (int i = 0; i <= n; ++i)
        if (f.coeff(i) != g.coeff(i)) return i;
    return -1;
}

bool agree(const QSeries& f, const QSeries& g) { return first_mismatch(f, g) == -1; }

std::string QSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= truncation(); ++n) {
        if (c_[n].is_zero()) continue;
        if (!first) os << " + ";
        os << c_[n].str();
        if (n > 0) os << "*q^" << n;
        first = false;
    }
    if (first) os << "0";
    os << " + O(q^" << truncation() + 1 << ")";
    return os.str();
}

} // namespace macmahon
