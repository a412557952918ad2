#include "macmahon/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace macmahon {

Rational::Rational(long long n) : v_(Int(std::to_string(n))) {}

Rational::Rational(const Int& num, const Int& den) : v_(num, den) {
    if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Int(num), Int(den)) {}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    const std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto check = [](const std::string& s) {
        if (s.empty()) throw std::invalid_argument("malformed rational literal");
        for (std::size_t i = 0; i < s.size(); ++i) {
            const char c = s[i];
            if (c == '-' && i == 0 && s.size() > 1) continue;
            if (c < '0' || c > '9') throw std::invalid_argument("malformed rational literal: " + s);
        }
    };
    check(num);
    check(den);
    return Rational(Int(num), Int(den));
}

Int Rational::to_integer() const {
    if (!is_integer()) throw std::domain_error("rational " + str() + " is not an integer");
    return numerator();
}

std::string Rational::str() const {
    if (is_integer()) return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

} // namespace macmahon
