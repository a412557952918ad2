#ifndef MACMAHON_QUASIMODULAR_HPP
#define MACMAHON_QUASIMODULAR_HPP

#include "macmahon/qseries.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace macmahon {

/// Eisenstein series G_k = -B_k/(2k) + sum sigma_{k-1}(n) q^n, k even >= 2.
QSeries g_series(int k, int truncation);

/// The distinguished weight-k forms whose coefficients vanish exactly at 1
/// and the primes:
///   H_6 = (1/6)((D^2 - D + 1) G_2 - G_4)
///   H_k = (1/24)(-D^2 G_{k-6} + (D^2 + 1) G_{k-4} - G_{k-2})   for k >= 8.
QSeries h_series(int k, int truncation);

/// f_{k,l} = (D^l + 1) G_{k+1} - (D^k + 1) G_{l+1} for odd l > k >= 1.
QSeries f_series(int k, int l, int truncation);

struct BasisElement {
    enum class Kind { monomial, derived_h, derived_g };
    Kind kind = Kind::monomial;
    int i = 0, j = 0, l = 0;  // monomial G2^i G4^j G6^l
    int n = 0, k = 0;         // derived: D^n applied to H_k or G_k
    int weight() const;
    std::string label() const;  // "1", "G2^2*G4", "D^2H6", ...
};

using LabeledBasis = std::vector<std::pair<BasisElement, QSeries>>;

/// All monomials G2^i G4^j G6^l of weight 2i+4j+6l <= max_weight, expanded
/// to the given truncation.  Ordered by weight, then exponents.
LabeledBasis qm_mixed_basis(int max_weight, int truncation);

/// All D^n H_m with m >= 6 even and m + 2n <= max_weight; the list has
/// exactly (max_weight-2)(max_weight-4)/8 elements.
LabeledBasis detecting_basis(int max_weight, int truncation);

/// The constant 1 together with G_k for even 2 <= k <= max_weight.
LabeledBasis eisenstein_span(int max_weight, int truncation);

struct NotInSpan : std::runtime_error {
    explicit NotInSpan(int witness_index)
        : std::runtime_error("target is not in the span of the basis; first mismatch at q^" +
                             std::to_string(witness_index)),
          witness(witness_index) {}
    int witness;
};

struct Representation {
    // Aligned with the basis passed to express_in_basis.
    std::vector<std::pair<BasisElement, Rational>> coefficients;
    // Zero by construction on success; kept so callers can re-check.
    QSeries residual{0};
};

/// Exact coefficients of target over the basis (fraction-free elimination).
/// Requires truncation(target) >= basis size + 20; throws NotInSpan with the
/// first mismatching coefficient index when no exact combination exists.
Representation express_in_basis(const QSeries& target, const LabeledBasis& basis);

/// Workhorse behind express_in_basis: solve for coefficients over any list
/// of series, matching rows 0..min(truncations).  On failure returns nullopt
/// and stores the first unmatchable coefficient index in *witness.
std::optional<std::vector<Rational>> express_series(const QSeries& target,
                                                    const std::vector<QSeries>& basis,
                                                    int* witness);

struct DetectionVerdict {
    bool detecting = false;
    int witness = 0;  // first violating index when !detecting
};

/// Checks the window 1..truncation: nonnegative coefficients, zero exactly
/// at n=1 and the primes.  The constant term is ignored.  Verdicts are
/// always relative to the truncation window.
DetectionVerdict is_prime_detecting(const QSeries& f);

/// DG_2 = -2 G_2^2 + (5/6) G_4, DG_4 = -8 G_2 G_4 + (7/10) G_6,
/// DG_6 = -12 G_2 G_6 + (400/7) G_4^2, all exact to the truncation.
bool verify_ramanujan(int truncation);

} // namespace macmahon

#endif
