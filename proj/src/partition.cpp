#include "macmahon/partition.hpp"

#include "macmahon/numtheory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace macmahon {

int weight(const Vec& v) {
    int w = 0;
    for (int e : v) w += e;
    return w;
}

int filtration(const Vec& v) { return weight(v) + static_cast<int>(v.size()); }

std::string vec_str(const Vec& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    return os.str();
}

Vec parse_vec(const std::string& text) {
    Vec out;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        std::size_t pos = 0;
        int value;
        try {
            value = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed vector entry '" + tok + "'");
        }
        if (pos != tok.size()) throw std::invalid_argument("malformed vector entry '" + tok + "'");
        out.push_back(value);
    }
    if (out.empty()) throw std::invalid_argument("empty vector");
    return out;
}

bool VecOrder::operator()(const Vec& a, const Vec& b) const {
    const int fa = filtration(a), fb = filtration(b);
    if (fa != fb) return fa < fb;
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

PartVector::PartVector(Vec entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("vector must have length >= 1");
    for (int e : entries_)
        if (e < 0) throw std::invalid_argument("vector entries must be >= 0");
}

PartVector PartVector::parse(const std::string& text) { return PartVector(parse_vec(text)); }

namespace {

// Walks every decomposition of n into exactly `slots` distinct part sizes,
// sizes ascending, and hands the multiplicity list (in ascending-size order)
// to the callback.  Lexicographic in the size tuple, so deterministic.
template <typename F>
void for_each_decomposition(std::int64_t n, int slots, std::vector<std::int64_t>& mults,
                            std::int64_t min_size, F&& fn) {
    const int depth = static_cast<int>(mults.size());
    if (depth == slots) {
        if (n == 0) fn(mults);
        return;
    }
    const int rest = slots - depth - 1;
    for (std::int64_t s = min_size;; ++s) {
        // Remaining sizes are > s, so the cheapest completion uses one copy
        // each of s+1, ..., s+rest.
        const std::int64_t future = static_cast<std::int64_t>(rest) * s +
                                    static_cast<std::int64_t>(rest) * (rest + 1) / 2;
        if (s + future > n) break;
        for (std::int64_t m = 1; m * s + future <= n; ++m) {
            mults.push_back(m);
            for_each_decomposition(n - m * s, slots, mults, s + 1, fn);
            mults.pop_back();
        }
    }
}

using int128 = __int128;

int128 checked_pow(std::int64_t base, int exp) {
    int128 r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= base;
        if (r > (int128(1) << 100)) throw std::overflow_error("oracle value out of range");
    }
    return r;
}

Int int128_to_int(int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    Int hi(static_cast<unsigned long>(u >> 64));
    Int out = (hi << 64) + Int(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
    return neg ? -out : out;
}

void check_oracle_args(const Vec& vec, std::int64_t n) {
    if (vec.empty()) throw std::invalid_argument("vector must have length >= 1");
    for (int e : vec)
        if (e < 0) throw std::invalid_argument("vector entries must be >= 0");
    if (n <= 0) throw std::invalid_argument("oracle requires n >= 1");
}

} // namespace

Int brute_m(const Vec& vec, std::int64_t n) {
    check_oracle_args(vec, n);
    const int a = static_cast<int>(vec.size());
    Int total = 0;
    std::vector<std::int64_t> mults;
    for_each_decomposition(n, a, mults, 1, [&](const std::vector<std::int64_t>& m) {
        // m[i] belongs to the i-th smallest size; vec pairs from the top.
        int128 prod = 1;
        for (int i = 0; i < a; ++i) prod *= checked_pow(m[i], vec[static_cast<std::size_t>(a - 1 - i)]);
        total += int128_to_int(prod);
    });
    return total;
}

Int brute_n(const Vec& vec, std::int64_t n) {
    check_oracle_args(vec, n);
    const int a = static_cast<int>(vec.size());
    Int total = 0;
    std::vector<std::int64_t> mults;
    for_each_decomposition(n, a, mults, 1, [&](const std::vector<std::int64_t>& m) {
        Int prod = 1;
        for (int i = 0; i < a; ++i) {
            const int v = vec[static_cast<std::size_t>(a - 1 - i)];
            prod *= binomial(static_cast<unsigned long>(m[i] + v - 1), static_cast<unsigned long>(v));
        }
        total += prod;
    });
    return total;
}

namespace {

std::mutex u_mutex;
std::map<Vec, std::shared_ptr<const std::vector<Int>>> u_cache;

// dp sweep: sizes s = N..1; dp[j] collects chains of j sizes with smallest
// element s, pairing the new smallest size with entry vec[j-1] (so vec[0]
// ends up on the largest size).
std::vector<Int> compute_u(const Vec& vec, int n) {
    const int a = static_cast<int>(vec.size());
    const std::size_t len = static_cast<std::size_t>(n) + 1;
    std::vector<std::vector<Int>> dp(static_cast<std::size_t>(a) + 1,
                                     std::vector<Int>(len, Int(0)));
    dp[0][0] = 1;
    // Minimal degree of dp[j] is the sum of the j smallest admissible sizes;
    // tracked to skip zero blocks.
    std::vector<int> min_deg(static_cast<std::size_t>(a) + 1, n + 1);
    min_deg[0] = 0;

    Int mv;
    for (int s = n; s >= 1; --s) {
        for (int j = a; j >= 1; --j) {
            if (min_deg[j - 1] + s > n) continue;
            const int v = vec[static_cast<std::size_t>(j - 1)];
            const auto& tail = dp[static_cast<std::size_t>(j - 1)];
            auto& acc = dp[static_cast<std::size_t>(j)];
            for (std::int64_t m = 1; m * s <= n; ++m) {
                const int base = static_cast<int>(m) * s;
                if (base + min_deg[j - 1] > n) break;
                mpz_ui_pow_ui(mv.get_mpz_t(), static_cast<unsigned long>(m),
                              static_cast<unsigned long>(v));
                for (int t = min_deg[j - 1]; base + t <= n; ++t) {
                    const Int& c = tail[static_cast<std::size_t>(t)];
                    if (sgn(c) == 0) continue;
                    acc[static_cast<std::size_t>(base + t)] += mv * c;
                }
            }
            if (min_deg[j] > s + min_deg[j - 1]) min_deg[j] = s + min_deg[j - 1];
        }
    }
    return std::move(dp[static_cast<std::size_t>(a)]);
}

} // namespace

std::shared_ptr<const std::vector<Int>> u_coeffs(const Vec& vec, int truncation) {
    if (truncation < 0) throw std::invalid_argument("negative truncation");
    check_oracle_args(vec, 1);
    {
        std::lock_guard<std::mutex> lock(u_mutex);
        auto it = u_cache.find(vec);
        if (it != u_cache.end() && static_cast<int>(it->second->size()) > truncation)
            return it->second;
    }
    auto fresh = std::make_shared<const std::vector<Int>>(compute_u(vec, truncation));
    std::lock_guard<std::mutex> lock(u_mutex);
    auto& slot = u_cache[vec];
    if (!slot || slot->size() < fresh->size()) slot = fresh;
    return slot;
}

QSeries u_series(const Vec& vec, int truncation) {
    auto c = u_coeffs(vec, truncation);
    QSeries out(truncation);
    for (int i = 0; i <= truncation; ++i) out.set_coeff(i, Rational((*c)[static_cast<std::size_t>(i)]));
    return out;
}

QSeries macmahon_u(int a, int truncation) {
    if (a < 1) throw std::invalid_argument("macmahon_u requires a >= 1");
    return u_series(Vec(static_cast<std::size_t>(a), 1), truncation);
}

} // namespace macmahon
