#ifndef MACMAHON_LINALG_HPP
#define MACMAHON_LINALG_HPP

#include "macmahon/rational.hpp"

#include <optional>
#include <vector>

namespace macmahon {

using QRow = std::vector<Rational>;
using QMat = std::vector<QRow>;
using ZRow = std::vector<Int>;
using ZMat = std::vector<ZRow>;

/// Fraction-free (Bareiss) row echelon form.  First-nonzero pivoting, fully
/// deterministic; all intermediate entries stay integral.
struct Echelon {
    ZMat m;
    std::vector<int> pivot_cols;
    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

Echelon bareiss_echelon(ZMat m);

/// Clears denominators row by row (solution sets are unchanged).
ZMat to_integer_rows(const QMat& m);

/// Exact solve of A x = b.  Returns the particular solution with every free
/// variable set to zero, or nullopt when the system is inconsistent.
std::optional<QRow> solve(const QMat& a, const QRow& b);

/// Same elimination once, many right-hand sides.
std::vector<std::optional<QRow>> solve_many(const QMat& a, const QMat& rhs_columns);

/// Basis of the kernel of A, normalized as the reduced row echelon form of
/// the kernel viewed as a row space: each basis vector has leading
/// coefficient 1 at a distinct column, and that column is zero in every
/// other basis vector.  Leading columns are strictly increasing.
struct Nullspace {
    std::vector<QRow> basis;
    std::vector<int> leading_cols;
};

Nullspace nullspace(const QMat& a);

int rank(const QMat& a);

/// In-place reduced row echelon form over the rationals; returns pivot
/// columns.  Zero rows are dropped.
std::vector<int> rref(std::vector<QRow>& rows);

} // namespace macmahon

#endif
