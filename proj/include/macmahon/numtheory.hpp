#ifndef MACMAHON_NUMTHEORY_HPP
#define MACMAHON_NUMTHEORY_HPP

#include "macmahon/rational.hpp"

#include <cstdint>
#include <vector>

namespace macmahon {

/// Deterministic primality by trial division.  Intended for desk-scale n
/// (a few thousand); no probabilistic shortcuts.
bool is_prime(std::int64_t n);

/// flags[n] == 1 iff n is prime, for 0 <= n <= limit.
std::vector<unsigned char> prime_flags(int limit);

/// sigma(power, n) = sum of d^power over the divisors d of n.  Rejects n <= 0.
Int sigma(int power, std::int64_t n);

Int binomial(unsigned long n, unsigned long k);

/// Bernoulli number B_k, convention B_1 = -1/2.  Only even-index values and
/// B_1-free combinations reach the quasi-shuffle structure constants, so the
/// sign convention is inert downstream.
const Rational& bernoulli(int k);

/// Eulerian polynomial P_k: x P_k(x) / (1-x)^{k+1} = sum_{m>=1} m^k x^m.
/// Coefficients are nonnegative integers summing to k! for k >= 1.
struct EulerianPolynomial {
    int degree;               // the index k
    std::vector<Int> coeffs;  // ascending powers of x
    Int coefficient_sum() const;
};

const EulerianPolynomial& eulerian(int k);

} // namespace macmahon

#endif
