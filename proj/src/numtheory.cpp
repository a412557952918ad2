#include "macmahon/numtheory.hpp"

#include <mutex>
#include <stdexcept>

namespace macmahon {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<unsigned char> prime_flags(int limit) {
    if (limit < 0) throw std::invalid_argument("negative sieve limit");
    std::vector<unsigned char> flags(static_cast<std::size_t>(limit) + 1, 1);
    flags[0] = 0;
    if (limit >= 1) flags[1] = 0;
    for (int p = 2; static_cast<std::int64_t>(p) * p <= limit; ++p)
        if (flags[p])
            for (int m = p * p; m <= limit; m += p) flags[m] = 0;
    return flags;
}

Int sigma(int power, std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("sigma requires n >= 1");
    if (power < 0) throw std::invalid_argument("sigma requires power >= 0");
    Int total = 0;
    Int dp;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d),
                      static_cast<unsigned long>(power));
        total += dp;
        const std::int64_t e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(e),
                          static_cast<unsigned long>(power));
            total += dp;
        }
    }
    return total;
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

namespace {
std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache;  // bernoulli_cache[k] = B_k

std::mutex eulerian_mutex;
std::vector<EulerianPolynomial> eulerian_cache;
} // namespace

const Rational& bernoulli(int k) {
    if (k < 0) throw std::invalid_argument("bernoulli requires k >= 0");
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    if (bernoulli_cache.empty()) bernoulli_cache.push_back(Rational(1));
    // sum_{j=0}^{k} C(k+1, j) B_j = 0 for k >= 1.
    while (static_cast<int>(bernoulli_cache.size()) <= k) {
        const int m = static_cast<int>(bernoulli_cache.size());
        Rational acc;
        for (int j = 0; j < m; ++j)
            acc += Rational(binomial(static_cast<unsigned long>(m) + 1,
                                     static_cast<unsigned long>(j))) *
                   bernoulli_cache[static_cast<std::size_t>(j)];
        bernoulli_cache.push_back(-acc / Rational(Int(m + 1)));
    }
    return bernoulli_cache[static_cast<std::size_t>(k)];
}

Int EulerianPolynomial::coefficient_sum() const {
    Int s = 0;
    for (const auto& c : coeffs) s += c;
    return s;
}

const EulerianPolynomial& eulerian(int k) {
    if (k < 0) throw std::invalid_argument("eulerian requires k >= 0");
    std::lock_guard<std::mutex> lock(eulerian_mutex);
    if (eulerian_cache.empty()) eulerian_cache.push_back({0, {Int(1)}});
    // A(m, j) = (j+1) A(m-1, j) + (m-j) A(m-1, j-1); P_m has coefficients
    // A(m, 0..m-1), so P_3 = x^2 + 4x + 1 and P_4 = x^3 + 11x^2 + 11x + 1.
    while (static_cast<int>(eulerian_cache.size()) <= k) {
        const int m = static_cast<int>(eulerian_cache.size());
        const auto& prev = eulerian_cache.back().coeffs;
        std::vector<Int> cur(static_cast<std::size_t>(m), Int(0));
        for (std::size_t j = 0; j < cur.size(); ++j) {
            Int v = 0;
            if (j < prev.size()) v += Int(static_cast<long>(j + 1)) * prev[j];
            if (j >= 1 && j - 1 < prev.size())
                v += Int(static_cast<long>(m) - static_cast<long>(j)) * prev[j - 1];
            cur[j] = v;
        }
        while (cur.size() > 1 && sgn(cur.back()) == 0) cur.pop_back();
        eulerian_cache.push_back({m, std::move(cur)});
    }
    return eulerian_cache[static_cast<std::size_t>(k)];
}

} // namespace macmahon
