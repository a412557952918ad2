#include "macmahon/detectors.hpp"

#include "macmahon/numtheory.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

namespace macmahon {

int PolyDetector::max_degree() const {
    int d = 0;
    for (const auto& p : polys)
        for (std::size_t j = 0; j < p.size(); ++j)
            if (sgn(p[j]) != 0) d = std::max(d, static_cast<int>(j));
    return d;
}

LinComb ConstDetector::as_lincomb() const {
    LinComb l;
    for (const auto& [w, c] : terms) l.add(w, Rational(c));
    return l;
}

QSeries eval_poly_detector(const PolyDetector& det, int truncation) {
    QSeries out(truncation);
    for (std::size_t a = 0; a < det.polys.size(); ++a) {
        if (det.polys[a].empty()) continue;
        std::vector<Rational> p;
        p.reserve(det.polys[a].size());
        for (const auto& c : det.polys[a]) p.emplace_back(c);
        out = out + macmahon_u(static_cast<int>(a) + 1, truncation).poly_in_d(p);
    }
    return out;
}

QSeries eval_const_detector(const ConstDetector& det, int truncation) {
    return u_of_lincomb(det.as_lincomb(), truncation);
}

namespace {

PolyDetector make_poly(std::vector<std::vector<long long>> polys, std::string origin) {
    PolyDetector d;
    for (auto& p : polys) {
        std::vector<Int> q;
        q.reserve(p.size());
        for (long long c : p) q.push_back(Int(std::to_string(c)));
        d.polys.push_back(std::move(q));
    }
    d.origin = std::move(origin);
    return d;
}

} // namespace

const std::array<PolyDetector, 5>& table1_rows() {
    static const std::array<PolyDetector, 5> rows = {
        make_poly({{2, -3, 1}, {-8}}, "table1-row-1"),
        make_poly({{-8, 18, -13, 3}, {212, -120, 12}, {-960}}, "table1-row-2"),
        make_poly({{170, -447, 423, -171, 25},
                   {-14990, 12900, -3554, 300},
                   {214080, -60480, 2400},
                   {-725760}},
                  "table1-row-3"),
        make_poly({{-2670, 8097, -9323, 5073, -1303, 126},
                   {695490, -737100, 288014, -48900, 3024},
                   {-23496480, 10644480, -1510080, 60480},
                   {218453760, -36288000, 725760},
                   {-580608000}},
                  "table1-row-4"),
        make_poly({{-746500, 2903750, -4575760, 3726801, -1651959, 377959, -33049, -1542, 300},
                   {1585493500, -2210467000, 1239098170, -351366300, 50637162, -2799900, -91008,
                    12000},
                   {-236150560800, 161101416000, -42370071840, 5133219840, -236343840, -3548160,
                    432000},
                   {8555162112000, -3123876672000, 396192142080, -17599680000, -72817920,
                    12096000},
                   {-112944125952000, 21310248960000, -1056513024000, 0, 193536000},
                   {604436152320000, -46495088640000},
                   {-1115882127360000}},
                  "table1-row-5"),
    };
    return rows;
}

QSeries table1_h_combination(int row, int truncation) {
    switch (row) {
        case 1: return Rational(6) * h_series(6, truncation);
        case 2: return Rational(36) * h_series(8, truncation);
        case 3: return Rational(90) * h_series(10, truncation);
        case 4: return Rational(90) * h_series(12, truncation);
        case 5: {
            const QSeries h14 = h_series(14, truncation);
            return Rational(30) * (h14.derivative(2) + h14 + h_series(16, truncation));
        }
        default: throw std::invalid_argument("table row must be 1..5");
    }
}

namespace {

// Runs fn(0..count-1) on up to `jobs` threads; results land in order.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int t = 0; t < std::min(jobs, count); ++t)
        pool.emplace_back([&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::string prime_table_hash(int limit) {
    const auto flags = prime_flags(limit);
    std::string s(flags.begin(), flags.end());
    for (auto& c : s) c += '0';
    return fnv1a_hex(s);
}

} // namespace

Certificate certify_series(const std::string& label, const QSeries& series, int truncation) {
    Certificate cert;
    cert.label = label;
    cert.range = truncation;
    cert.prime_table_hash = prime_table_hash(truncation);
    const auto verdict = is_prime_detecting(series.truncated(truncation));
    cert.verified = verdict.detecting;
    cert.witness = verdict.witness;
    if (cert.verified) {
        const auto flags = prime_flags(truncation);
        for (int n = 4; n <= truncation; ++n) {
            if (flags[static_cast<std::size_t>(n)]) continue;
            cert.composite_values.emplace_back(n, series.coeff(n).to_integer());
        }
    }
    return cert;
}

std::vector<Certificate> verify_table1(int truncation, int jobs) {
    if (truncation < 30) throw std::invalid_argument("table verification requires truncation >= 30");
    std::vector<Certificate> certs(5);
    parallel_for(5, jobs, [&](int i) {
        const int row = i + 1;
        const QSeries e = eval_poly_detector(table1_rows()[static_cast<std::size_t>(i)], truncation);
        const QSeries h = table1_h_combination(row, truncation);
        for (int n = 1; n <= truncation; ++n)
            if (e.coeff(n) != h.coeff(n)) throw Table1Mismatch(row, n);
        Certificate cert = certify_series("table1-row-" + std::to_string(row), e, truncation);
        if (!cert.verified)
            throw VerificationFailure("table row " + std::to_string(row) +
                                          " is not prime-detecting at q^" +
                                          std::to_string(cert.witness),
                                      cert.witness);
        certs[static_cast<std::size_t>(i)] = std::move(cert);
    });
    return certs;
}

namespace {

ConstDetector make_const(std::vector<std::pair<Vec, long long>> terms, std::string origin) {
    ConstDetector d;
    for (auto& [w, c] : terms) {
        d.terms.emplace(w, Int(std::to_string(c)));
        d.max_weight = std::max(d.max_weight, weight(w));
    }
    d.origin = std::move(origin);
    d.requested_weight = d.max_weight;
    return d;
}

} // namespace

const ConstDetector& psi1() {
    static const ConstDetector d = make_const(
        {{{2, 2}, 63},
         {{3, 0}, -12},
         {{3, 1}, -39},
         {{1, 3}, -12},
         {{1, 1, 1}, 80},
         {{2, 0, 1}, -12},
         {{2, 1, 0}, 12},
         {{3, 0, 0}, 12}},
        "psi1");
    return d;
}

const ConstDetector& psi2() {
    static const ConstDetector d = make_const(
        {{{1}, 14},
         {{2}, -15},
         {{3}, -2},
         {{4}, 3},
         {{2, 0}, 30},
         {{3, 0}, -72},
         {{2, 1}, -36},
         {{4, 0}, -6},
         {{3, 1}, -12},
         {{2, 1, 0}, 72},
         {{3, 0, 0}, 72}},
        "psi2");
    return d;
}

QSeries psi3_series(int truncation) {
    const QSeries u1 = u_series({1}, truncation);
    const QSeries u3 = u_series({3}, truncation);
    const QSeries u5 = u_series({5}, truncation);
    QSeries out = Rational(10) * u1 - Rational(17) * u3 + Rational(7) * u5;
    out = out + Rational(12) * (u1 * (u1 - Rational(10) * u3));
    out = out + Rational(96) * (u1 * u1 * u1);
    return out;
}

Certificate verify_psi(int which, int truncation) {
    if (truncation < 30) throw std::invalid_argument("psi verification requires truncation >= 30");
    QSeries series(0);
    std::string label = "psi" + std::to_string(which);
    switch (which) {
        case 1: series = eval_const_detector(psi1(), truncation); break;
        case 2: {
            series = eval_const_detector(psi2(), truncation);
            const QSeries scaled = Rational(36, 11) * eval_const_detector(psi1(), truncation);
            const int bad = first_mismatch(series, scaled);
            if (bad >= 0)
                throw VerificationFailure("psi2 != (36/11) psi1 at q^" + std::to_string(bad), bad);
            break;
        }
        case 3: {
            series = psi3_series(truncation);
            const QSeries p2 = eval_const_detector(psi2(), truncation);
            const int bad = first_mismatch(series, p2);
            if (bad >= 0)
                throw VerificationFailure("psi3 != psi2 at q^" + std::to_string(bad), bad);
            break;
        }
        default: throw std::invalid_argument("psi index must be 1, 2 or 3");
    }
    Certificate cert = certify_series(label, series, truncation);
    if (!cert.verified)
        throw VerificationFailure(label + " is not prime-detecting at q^" +
                                      std::to_string(cert.witness),
                                  cert.witness);
    return cert;
}

namespace {

// Odd-part multisets (stored descending) with weight + length <= bound.
void enumerate_odd_multisets(int bound, int max_part, Vec& cur, std::vector<Vec>& out) {
    if (!cur.empty()) out.push_back(cur);
    const int used = filtration(cur);
    for (int v = std::min(max_part, bound - used - 1); v >= 1; v -= 2) {
        cur.push_back(v);
        enumerate_odd_multisets(bound, v, cur, out);
        cur.pop_back();
    }
}

// Primitive-integer scaling; sign chosen so the underlying series stays
// nonnegative (nonnegativity is what the detector certifies, and the raw
// orientation depends on the solve).
std::map<Vec, Int, VecOrder> normalize_terms(const LinComb& l, int sign) {
    Int den_lcm = 1, num_gcd = 0;
    for (const auto& [w, c] : l.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
    }
    std::map<Vec, Int, VecOrder> out;
    if (sgn(num_gcd) == 0) return out;
    for (const auto& [w, c] : l.terms()) {
        Int v = (c.numerator() / num_gcd) * (den_lcm / c.denominator());
        out.emplace(w, sign < 0 ? Int(-v) : v);
    }
    return out;
}

} // namespace

std::vector<ConstDetector> search_const_detectors(int d, int truncation, int jobs) {
    if (d < 4) throw std::invalid_argument("search requires weight bound d >= 4");
    int k = d + 4;
    if (k % 2 != 0) ++k;

    std::vector<Vec> gens;
    {
        Vec cur;
        enumerate_odd_multisets(k, k - 1, cur, gens);
        std::sort(gens.begin(), gens.end(), VecOrder());
    }
    const int cols = static_cast<int>(gens.size()) + 1;
    const int work = cols + 20;

    std::vector<QSeries> gen_series;
    gen_series.reserve(static_cast<std::size_t>(cols));
    gen_series.push_back(QSeries::constant(Rational(1), work));
    for (const auto& g : gens) gen_series.push_back(sym_u(g, work));

    const LabeledBasis targets = detecting_basis(k, work);

    QMat a(static_cast<std::size_t>(work) + 1, QRow(static_cast<std::size_t>(cols)));
    QMat rhs;
    for (int r = 0; r <= work; ++r)
        for (int c = 0; c < cols; ++c)
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                gen_series[static_cast<std::size_t>(c)].coeff(r);
    for (const auto& [e, s] : targets) {
        QRow col(static_cast<std::size_t>(work) + 1);
        for (int r = 0; r <= work; ++r) col[static_cast<std::size_t>(r)] = s.coeff(r);
        rhs.push_back(std::move(col));
    }
    const auto solutions = solve_many(a, rhs);

    std::vector<ConstDetector> out(targets.size());
    parallel_for(static_cast<int>(targets.size()), jobs, [&](int t) {
        const auto& sol = solutions[static_cast<std::size_t>(t)];
        if (!sol)
            throw SpanDeficiency("symmetrized span does not contain " +
                                 targets[static_cast<std::size_t>(t)].first.label());
        LinComb expanded;
        for (std::size_t c = 1; c < static_cast<std::size_t>(cols); ++c) {
            const Rational& x = (*sol)[c];
            if (x.is_zero()) continue;
            expanded += x * sym_orbit(gens[c - 1]);
        }
        ConstDetector det;
        det.origin = targets[static_cast<std::size_t>(t)].first.label();
        det.requested_weight = d;
        det.terms = normalize_terms(expanded, +1);

        QSeries series = eval_const_detector(det, truncation);
        int sign = 0;
        for (int n = 1; n <= truncation && sign == 0; ++n) sign = series.coeff(n).sign();
        if (sign < 0) {
            det.terms = normalize_terms(expanded, -1);
            series = -series;
        }
        for (const auto& [w, c] : det.terms) det.max_weight = std::max(det.max_weight, weight(w));
        det.exceeds_requested_weight = det.max_weight > d;

        const auto verdict = is_prime_detecting(series);
        if (!verdict.detecting)
            throw VerificationFailure(det.origin + " expansion is not prime-detecting at q^" +
                                          std::to_string(verdict.witness),
                                      verdict.witness);
        out[static_cast<std::size_t>(t)] = std::move(det);
    });

    // Independence of the integer coefficient vectors, over the union of words.
    std::map<Vec, int, VecOrder> index;
    for (const auto& det : out)
        for (const auto& [w, c] : det.terms)
            index.emplace(w, 0);
    int next = 0;
    for (auto& [w, idx] : index) idx = next++;
    QMat m(out.size(), QRow(index.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        for (const auto& [w, c] : out[i].terms)
            m[i][static_cast<std::size_t>(index[w])] = Rational(c);
    if (rank(m) != static_cast<int>(out.size()))
        throw std::logic_error("search produced a dependent detector list");
    return out;
}

std::vector<PolyDetector> search_poly_detectors(int max_a, int max_deg, int truncation) {
    if (max_a < 1) throw std::invalid_argument("search requires max_a >= 1");
    if (max_deg < 0) throw std::invalid_argument("search requires max_deg >= 0");
    const int k = 2 * (max_a + max_deg);
    if (k < 6) return {};

    struct Cand {
        int a, j;
    };
    std::vector<Cand> cands;
    for (int a = 1; a <= max_a; ++a)
        for (int j = 0; j <= max_deg; ++j) cands.push_back({a, j});
    const LabeledBasis hbasis = detecting_basis(k, 1);
    const int nc = static_cast<int>(cands.size());
    const int nh = static_cast<int>(hbasis.size());
    const int work = nc + nh + 20;

    QMat stacked(static_cast<std::size_t>(work), QRow(static_cast<std::size_t>(nc + nh)));
    for (int c = 0; c < nc; ++c) {
        const QSeries s = macmahon_u(cands[static_cast<std::size_t>(c)].a, work)
                              .derivative(cands[static_cast<std::size_t>(c)].j);
        for (int r = 0; r < work; ++r)
            stacked[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = s.coeff(r + 1);
    }
    const LabeledBasis hfull = detecting_basis(k, work);
    for (int h = 0; h < nh; ++h)
        for (int r = 0; r < work; ++r)
            stacked[static_cast<std::size_t>(r)][static_cast<std::size_t>(nc + h)] =
                hfull[static_cast<std::size_t>(h)].second.coeff(r + 1);

    const Nullspace ns = nullspace(stacked);

    // Echelonize over the detecting-basis coordinates so pure forms surface.
    std::vector<QRow> rows;
    for (const auto& v : ns.basis) {
        QRow row(static_cast<std::size_t>(nh + nc));
        for (int h = 0; h < nh; ++h) row[static_cast<std::size_t>(h)] = v[static_cast<std::size_t>(nc + h)];
        for (int c = 0; c < nc; ++c) row[static_cast<std::size_t>(nh + c)] = v[static_cast<std::size_t>(c)];
        rows.push_back(std::move(row));
    }
    const auto pivots = rref(rows);

    std::vector<PolyDetector> out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (pivots[i] >= nh) continue;  // pure candidate dependency, zero intersection element
        PolyDetector det;
        det.origin = hbasis[static_cast<std::size_t>(pivots[i])].first.label();
        det.polys.assign(static_cast<std::size_t>(max_a), {});
        std::vector<std::vector<Rational>> coeffs(static_cast<std::size_t>(max_a),
                                                  std::vector<Rational>(static_cast<std::size_t>(max_deg) + 1));
        bool any = false;
        for (int c = 0; c < nc; ++c) {
            const Rational& x = rows[i][static_cast<std::size_t>(nh + c)];
            if (x.is_zero()) continue;
            coeffs[static_cast<std::size_t>(cands[static_cast<std::size_t>(c)].a - 1)]
                  [static_cast<std::size_t>(cands[static_cast<std::size_t>(c)].j)] = x;
            any = true;
        }
        if (!any) continue;
        // Clear denominators and divide by the content.
        Int den_lcm = 1, num_gcd = 0;
        for (const auto& p : coeffs)
            for (const auto& x : p) {
                if (x.is_zero()) continue;
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.denominator().get_mpz_t());
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.numerator().get_mpz_t());
            }
        for (std::size_t a = 0; a < coeffs.size(); ++a) {
            std::vector<Int> p;
            for (const auto& x : coeffs[a])
                p.push_back(x.is_zero() ? Int(0)
                                        : Int((x.numerator() / num_gcd) * (den_lcm / x.denominator())));
            while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
            det.polys[a] = std::move(p);
        }
        while (!det.polys.empty() && det.polys.back().empty()) det.polys.pop_back();

        // Sign: first nonzero value nonnegative.  Individual echelon rows of
        // the intersection need not be prime-detecting on their own (the
        // detecting property is not closed under subtraction); callers check
        // the members they care about.
        const QSeries series = eval_poly_detector(det, truncation);
        for (int n = 1; n <= truncation; ++n) {
            const int sign = series.coeff(n).sign();
            if (sign == 0) continue;
            if (sign < 0)
                for (auto& p : det.polys)
                    for (auto& c : p) c = -c;
            break;
        }
        out.push_back(std::move(det));
    }
    return out;
}

bool poly_span_contains(const PolyDetector& target, const std::vector<PolyDetector>& dets,
                        int max_mult_deg) {
    if (dets.empty()) return false;
    std::size_t max_a = target.polys.size();
    int max_deg = target.max_degree();
    for (const auto& d : dets) {
        max_a = std::max(max_a, d.polys.size());
        max_deg = std::max(max_deg, d.max_degree() + max_mult_deg);
    }
    const int m = max_mult_deg + 1;  // unknowns per detector
    const std::size_t rows = max_a * static_cast<std::size_t>(max_deg + 1);
    QMat a(rows, QRow(dets.size() * static_cast<std::size_t>(m)));
    QRow b(rows);
    auto poly_coeff = [](const std::vector<std::vector<Int>>& polys, std::size_t ai, int deg) {
        if (ai >= polys.size() || deg >= static_cast<int>(polys[ai].size())) return Rational();
        return Rational(polys[ai][static_cast<std::size_t>(deg)]);
    };
    for (std::size_t ai = 0; ai < max_a; ++ai)
        for (int deg = 0; deg <= max_deg; ++deg) {
            const std::size_t r = ai * static_cast<std::size_t>(max_deg + 1) +
                                  static_cast<std::size_t>(deg);
            b[r] = poly_coeff(target.polys, ai, deg);
            for (std::size_t di = 0; di < dets.size(); ++di)
                for (int u = 0; u <= max_mult_deg; ++u)
                    if (deg - u >= 0)
                        a[r][di * static_cast<std::size_t>(m) + static_cast<std::size_t>(u)] =
                            poly_coeff(dets[di].polys, ai, deg - u);
        }
    return solve(a, b).has_value();
}

LinComb iterated_constant_reduction(const PolyDetector& det, int verify_truncation) {
    std::vector<std::pair<std::vector<Rational>, Vec>> terms;
    for (std::size_t a = 0; a < det.polys.size(); ++a) {
        if (det.polys[a].empty()) continue;
        std::vector<Rational> p;
        for (const auto& c : det.polys[a]) p.emplace_back(c);
        terms.emplace_back(std::move(p), Vec(a + 1, 1));
    }
    return reduce_polynomial_terms(terms, verify_truncation);
}

} // namespace macmahon
