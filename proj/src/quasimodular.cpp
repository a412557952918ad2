#include "macmahon/quasimodular.hpp"

#include "macmahon/linalg.hpp"
#include "macmahon/numtheory.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace macmahon {

QSeries g_series(int k, int truncation) {
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("Eisenstein weight must be even and >= 2");
    QSeries out(truncation);
    out.set_coeff(0, -bernoulli(k) / Rational(Int(2L * k)));
    for (int n = 1; n <= truncation; ++n) out.set_coeff(n, Rational(sigma(k - 1, n)));
    return out;
}

QSeries h_series(int k, int truncation) {
    if (k < 6 || k % 2 != 0)
        throw std::invalid_argument("H_k requires even k >= 6");
    if (k == 6) {
        const QSeries g2 = g_series(2, truncation);
        const QSeries g4 = g_series(4, truncation);
        return Rational(1, 6) * (g2.poly_in_d({Rational(1), Rational(-1), Rational(1)}) - g4);
    }
    const QSeries a = g_series(k - 6, truncation);
    const QSeries b = g_series(k - 4, truncation);
    const QSeries c = g_series(k - 2, truncation);
    return Rational(1, 24) * (-a.derivative(2) + b.derivative(2) + b - c);
}

QSeries f_series(int k, int l, int truncation) {
    if (k < 1 || k % 2 == 0 || l % 2 == 0 || l <= k)
        throw std::invalid_argument("f_{k,l} requires odd l > k >= 1");
    const QSeries gk = g_series(k + 1, truncation);
    const QSeries gl = g_series(l + 1, truncation);
    return (gk.derivative(l) + gk) - (gl.derivative(k) + gl);
}

int BasisElement::weight() const {
    switch (kind) {
        case Kind::monomial: return 2 * i + 4 * j + 6 * l;
        case Kind::derived_h:
        case Kind::derived_g: return k + 2 * n;
    }
    return 0;
}

std::string BasisElement::label() const {
    std::ostringstream os;
    if (kind == Kind::monomial) {
        if (i == 0 && j == 0 && l == 0) return "1";
        bool first = true;
        auto emit = [&](const char* name, int e) {
            if (e == 0) return;
            if (!first) os << "*";
            os << name;
            if (e > 1) os << "^" << e;
            first = false;
        };
        emit("G2", i);
        emit("G4", j);
        emit("G6", l);
        return os.str();
    }
    if (n > 0) os << "D^" << n;
    os << (kind == Kind::derived_h ? "H" : "G") << k;
    return os.str();
}

LabeledBasis qm_mixed_basis(int max_weight, int truncation) {
    if (max_weight < 0 || max_weight % 2 != 0)
        throw std::invalid_argument("mixed-weight bound must be even and >= 0");
    const QSeries g2 = g_series(2, truncation);
    const QSeries g4 = g_series(4, truncation);
    const QSeries g6 = g_series(6, truncation);
    std::map<std::array<int, 3>, QSeries> memo;
    memo.emplace(std::array<int, 3>{0, 0, 0}, QSeries::constant(Rational(1), truncation));
    // Build each monomial from a predecessor with one exponent lowered.
    std::function<const QSeries&(int, int, int)> build = [&](int i, int j, int l) -> const QSeries& {
        auto it = memo.find({i, j, l});
        if (it != memo.end()) return it->second;
        QSeries s = i > 0 ? build(i - 1, j, l) * g2
                  : j > 0 ? build(i, j - 1, l) * g4
                          : build(i, j, l - 1) * g6;
        return memo.emplace(std::array<int, 3>{i, j, l}, std::move(s)).first->second;
    };
    LabeledBasis out;
    for (int w = 0; w <= max_weight; w += 2)
        for (int i = 0; i <= w / 2; ++i)
            for (int j = 0; 2 * i + 4 * j <= w; ++j) {
                const int rem = w - 2 * i - 4 * j;
                if (rem % 6 != 0) continue;
                const int l = rem / 6;
                BasisElement e;
                e.kind = BasisElement::Kind::monomial;
                e.i = i;
                e.j = j;
                e.l = l;
                out.emplace_back(e, build(i, j, l));
            }
    return out;
}

LabeledBasis detecting_basis(int max_weight, int truncation) {
    if (max_weight < 6 || max_weight % 2 != 0)
        throw std::invalid_argument("detecting basis requires even max weight >= 6");
    LabeledBasis out;
    for (int m = 6; m <= max_weight; m += 2) {
        QSeries h = h_series(m, truncation);
        for (int n = 0; m + 2 * n <= max_weight; ++n) {
            BasisElement e;
            e.kind = BasisElement::Kind::derived_h;
            e.n = n;
            e.k = m;
            out.emplace_back(e, n == 0 ? h : h.derivative(n));
        }
    }
    return out;
}

LabeledBasis eisenstein_span(int max_weight, int truncation) {
    LabeledBasis out;
    BasisElement one;
    out.emplace_back(one, QSeries::constant(Rational(1), truncation));
    for (int k = 2; k <= max_weight; k += 2) {
        BasisElement e;
        e.kind = BasisElement::Kind::derived_g;
        e.n = 0;
        e.k = k;
        out.emplace_back(e, g_series(k, truncation));
    }
    return out;
}

std::optional<std::vector<Rational>> express_series(const QSeries& target,
                                                    const std::vector<QSeries>& basis,
                                                    int* witness) {
    int n = target.truncation();
    for (const auto& b : basis) n = std::min(n, b.truncation());
    const int cols = static_cast<int>(basis.size());

    auto assemble = [&](int rows) {
        QMat a(static_cast<std::size_t>(rows), QRow(static_cast<std::size_t>(cols)));
        QRow b(static_cast<std::size_t>(rows));
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) a[r][c] = basis[static_cast<std::size_t>(c)].coeff(r);
            b[r] = target.coeff(r);
        }
        return std::make_pair(std::move(a), std::move(b));
    };

    auto [a, b] = assemble(n + 1);
    if (auto x = solve(a, b)) return x;
    if (witness) {
        // Locate the shortest prefix that is already unsolvable; its last row
        // is the first coefficient no combination can match.
        int lo = 0, hi = n;  // rows 0..lo solvable; rows 0..hi not
        while (lo + 1 < hi) {
            const int mid = (lo + hi) / 2;
            auto [am, bm] = assemble(mid + 1);
            if (solve(am, bm))
                lo = mid;
            else
                hi = mid;
        }
        {
            auto [a0, b0] = assemble(lo + 1);
            if (!solve(a0, b0)) hi = lo;
        }
        *witness = hi;
    }
    return std::nullopt;
}

Representation express_in_basis(const QSeries& target, const LabeledBasis& basis) {
    if (target.truncation() < static_cast<int>(basis.size()) + 20)
        throw std::invalid_argument("insufficient truncation: need target truncation >= basis size + 20");
    std::vector<QSeries> series;
    series.reserve(basis.size());
    for (const auto& [e, s] : basis) series.push_back(s);
    int witness = -1;
    auto x = express_series(target, series, &witness);
    if (!x) throw NotInSpan(witness);

    Representation rep;
    int n = target.truncation();
    for (const auto& s : series) n = std::min(n, s.truncation());
    QSeries residual = target.truncated(n);
    for (std::size_t c = 0; c < basis.size(); ++c) {
        rep.coefficients.emplace_back(basis[c].first, (*x)[c]);
        if (!(*x)[c].is_zero()) residual = residual - (*x)[c] * series[c];
    }
    rep.residual = residual;
    if (!residual.is_zero()) throw NotInSpan(first_mismatch(residual, QSeries(n)));
    return rep;
}

DetectionVerdict is_prime_detecting(const QSeries& f) {
    if (f.truncation() < 10)
        throw std::invalid_argument("prime-detection check requires truncation >= 10");
    if (!f.coeff(1).is_zero()) return {false, 1};
    const auto primes = prime_flags(f.truncation());
    for (int n = 2; n <= f.truncation(); ++n) {
        const Rational& c = f.coeff(n);
        if (c.sign() < 0) return {false, n};
        const bool zero = c.is_zero();
        if (primes[static_cast<std::size_t>(n)] ? !zero : zero) return {false, n};
    }
    return {true, 0};
}

bool verify_ramanujan(int truncation) {
    if (truncation < 10) throw std::invalid_argument("ramanujan check requires truncation >= 10");
    const QSeries g2 = g_series(2, truncation);
    const QSeries g4 = g_series(4, truncation);
    const QSeries g6 = g_series(6, truncation);
    if (g2.derivative() != Rational(-2) * (g2 * g2) + Rational(5, 6) * g4) return false;
    if (g4.derivative() != Rational(-8) * (g2 * g4) + Rational(7, 10) * g6) return false;
    if (g6.derivative() != Rational(-12) * (g2 * g6) + Rational(400, 7) * (g4 * g4)) return false;
    return true;
}

} // namespace macmahon
