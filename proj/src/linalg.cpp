#include "macmahon/linalg.hpp"

#include <stdexcept>

namespace macmahon {

namespace {

// Exact division with verification; Bareiss guarantees divisibility, and a
// failed check here means the elimination state is corrupt.
Int divide_exact(const Int& num, const Int& den) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (sgn(r) != 0) throw std::logic_error("bareiss: non-exact division");
    return q;
}

Echelon bareiss_echelon_impl(ZMat m, int pivot_col_limit) {
    Echelon e;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    const int limit = pivot_col_limit < 0 ? cols : pivot_col_limit;
    Int prev = 1;
    int row = 0;
    for (int col = 0; col < limit && row < rows; ++col) {
        int pivot = -1;
        for (int i = row; i < rows; ++i)
            if (sgn(m[i][col]) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[row], m[pivot]);
        for (int i = row + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                m[i][j] = divide_exact(m[row][col] * m[i][j] - m[i][col] * m[row][j], prev);
            m[i][col] = 0;
        }
        prev = m[row][col];
        e.pivot_cols.push_back(col);
        ++row;
    }
    e.m = std::move(m);
    return e;
}

} // namespace

Echelon bareiss_echelon(ZMat m) { return bareiss_echelon_impl(std::move(m), -1); }

ZMat to_integer_rows(const QMat& m) {
    ZMat out;
    out.reserve(m.size());
    for (const auto& row : m) {
        Int lcm = 1;
        for (const auto& x : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.denominator().get_mpz_t());
        ZRow zr;
        zr.reserve(row.size());
        for (const auto& x : row) zr.push_back(x.numerator() * (lcm / x.denominator()));
        out.push_back(std::move(zr));
    }
    return out;
}

std::vector<std::optional<QRow>> solve_many(const QMat& a, const QMat& rhs_columns) {
    const int rows = static_cast<int>(a.size());
    const int n = rows ? static_cast<int>(a[0].size()) : 0;
    const int k = static_cast<int>(rhs_columns.size());
    for (const auto& rhs : rhs_columns)
        if (static_cast<int>(rhs.size()) != rows)
            throw std::invalid_argument("right-hand side length mismatch");

    QMat aug(a);
    for (int i = 0; i < rows; ++i) {
        aug[i].reserve(n + k);
        for (int t = 0; t < k; ++t) aug[i].push_back(rhs_columns[t][i]);
    }
    Echelon e = bareiss_echelon_impl(to_integer_rows(aug), n);
    const int r = e.rank();

    std::vector<std::optional<QRow>> out;
    out.reserve(k);
    for (int t = 0; t < k; ++t) {
        bool consistent = true;
        for (int i = r; i < rows && consistent; ++i)
            if (sgn(e.m[i][n + t]) != 0) consistent = false;
        if (!consistent) {
            out.emplace_back(std::nullopt);
            continue;
        }
        QRow x(static_cast<std::size_t>(n), Rational());
        for (int idx = r - 1; idx >= 0; --idx) {
            const int p = e.pivot_cols[static_cast<std::size_t>(idx)];
            Rational val(e.m[idx][n + t]);
            for (int later = idx + 1; later < r; ++later) {
                const int pc = e.pivot_cols[static_cast<std::size_t>(later)];
                if (sgn(e.m[idx][pc]) == 0) continue;
                val -= Rational(e.m[idx][pc]) * x[static_cast<std::size_t>(pc)];
            }
            x[static_cast<std::size_t>(p)] = val / Rational(e.m[idx][p]);
        }
        out.emplace_back(std::move(x));
    }
    return out;
}

std::optional<QRow> solve(const QMat& a, const QRow& b) {
    auto res = solve_many(a, {b});
    return std::move(res[0]);
}

std::vector<int> rref(std::vector<QRow>& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    const int cols = static_cast<int>(rows[0].size());
    int lead = 0;
    for (int col = 0; col < cols && lead < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int i = lead; i < static_cast<int>(rows.size()); ++i)
            if (!rows[i][static_cast<std::size_t>(col)].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<std::size_t>(lead)], rows[static_cast<std::size_t>(pivot)]);
        const Rational inv = rows[static_cast<std::size_t>(lead)][static_cast<std::size_t>(col)];
        for (auto& x : rows[static_cast<std::size_t>(lead)]) x /= inv;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == lead) continue;
            const Rational f = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            if (f.is_zero()) continue;
            for (int j = 0; j < cols; ++j)
                rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    f * rows[static_cast<std::size_t>(lead)][static_cast<std::size_t>(j)];
        }
        pivots.push_back(col);
        ++lead;
    }
    rows.resize(pivots.size(), QRow());
    return pivots;
}

Nullspace nullspace(const QMat& a) {
    Nullspace ns;
    const int rows = static_cast<int>(a.size());
    const int n = rows ? static_cast<int>(a[0].size()) : 0;
    if (n == 0) return ns;
    Echelon e = bareiss_echelon(to_integer_rows(a));
    const int r = e.rank();
    std::vector<char> is_pivot(static_cast<std::size_t>(n), 0);
    for (int p : e.pivot_cols) is_pivot[static_cast<std::size_t>(p)] = 1;

    std::vector<QRow> basis;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        QRow x(static_cast<std::size_t>(n), Rational());
        x[static_cast<std::size_t>(f)] = Rational(1);
        for (int idx = r - 1; idx >= 0; --idx) {
            const int p = e.pivot_cols[static_cast<std::size_t>(idx)];
            if (p > f) continue;
            Rational val;
            if (f > p && sgn(e.m[idx][f]) != 0) val += Rational(e.m[idx][f]);
            for (int later = idx + 1; later < r; ++later) {
                const int pc = e.pivot_cols[static_cast<std::size_t>(later)];
                if (pc > f || sgn(e.m[idx][pc]) == 0) continue;
                val += Rational(e.m[idx][pc]) * x[static_cast<std::size_t>(pc)];
            }
            x[static_cast<std::size_t>(p)] = -val / Rational(e.m[idx][p]);
        }
        basis.push_back(std::move(x));
    }
    ns.leading_cols = rref(basis);
    ns.basis = std::move(basis);
    return ns;
}

int rank(const QMat& a) {
    if (a.empty()) return 0;
    return bareiss_echelon(to_integer_rows(a)).rank();
}

} // namespace macmahon
