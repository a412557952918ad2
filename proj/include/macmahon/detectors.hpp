#ifndef MACMAHON_DETECTORS_HPP
#define MACMAHON_DETECTORS_HPP

#include "macmahon/quasimodular.hpp"
#include "macmahon/quasishuffle.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace macmahon {

/// E(n) = sum_a p_a(n) M_a(n) over MacMahon's functions M_1, M_2, ...
/// polys[a-1] holds the coefficients of p_a, ascending degree.
struct PolyDetector {
    std::vector<std::vector<Int>> polys;
    std::string origin;  // e.g. "table1-row-2" or the matched basis label

    int max_degree() const;
    bool operator==(const PolyDetector& o) const { return polys == o.polys; }
};

/// E(n) = sum c_vec M_vec(n) with relatively prime integer coefficients.
struct ConstDetector {
    std::map<Vec, Int, VecOrder> terms;
    std::string origin;
    int requested_weight = 0;   // the d the search was asked for
    int max_weight = 0;         // largest |vec| actually present
    bool exceeds_requested_weight = false;

    LinComb as_lincomb() const;
};

/// Verification record for one detector over the window [1, range]: values
/// at every composite in the window (all positive), zeros elsewhere, plus a
/// hash of the primality table the check used.
struct Certificate {
    std::string label;
    int range = 0;
    std::vector<std::pair<int, Int>> composite_values;
    std::string prime_table_hash;
    bool verified = false;
    int witness = 0;  // first violating index when !verified
};

QSeries eval_poly_detector(const PolyDetector& det, int truncation);
QSeries eval_const_detector(const ConstDetector& det, int truncation);

/// The five prime-detecting rows of the reference table, with their stated
/// quasimodular counterparts 6H_6, 36H_8, 90H_10, 90H_12, 30(D^2+1)H_14+30H_16.
const std::array<PolyDetector, 5>& table1_rows();
QSeries table1_h_combination(int row, int truncation);  // row is 1-based

struct Table1Mismatch : std::runtime_error {
    Table1Mismatch(int row_, int index_)
        : std::runtime_error("table row " + std::to_string(row_) +
                             " deviates from its quasimodular form at q^" +
                             std::to_string(index_)),
          row(row_), index(index_) {}
    int row;
    int index;
};

/// Checks, for every row: the series matches its quasimodular combination on
/// 1..truncation exactly, and the coefficients vanish precisely at 1 and the
/// primes.  Any failure throws (Table1Mismatch or VerificationFailure).
std::vector<Certificate> verify_table1(int truncation, int jobs = 1);

const ConstDetector& psi1();
const ConstDetector& psi2();
/// Psi_3 built from its definition: single terms plus genuine series
/// convolutions 12 U_1 (U_1 - 10 U_3) + 96 U_1^3.
QSeries psi3_series(int truncation);

struct VerificationFailure : std::runtime_error {
    VerificationFailure(const std::string& what, int witness_)
        : std::runtime_error(what), witness(witness_) {}
    int witness;
};

Certificate verify_psi(int which, int truncation);

/// Builds a certificate for an arbitrary detector series (used by the
/// file-driven verification entry point).
Certificate certify_series(const std::string& label, const QSeries& series, int truncation);

struct SpanDeficiency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Constant-coefficient prime detectors of requested weight d >= 4.  Works
/// in mixed weight k = d + 4: expresses every D^n H_m with m + 2n <= k over
/// the symmetrized series of odd vectors with weight+length <= k, expands
/// the symmetrizations into individual words, and clears denominators to
/// coprime integers (overall sign fixed by nonnegativity of the values).
/// The list is linearly independent of size (k-2)(k-4)/8, every member
/// verified prime-detecting on [1, truncation].
std::vector<ConstDetector> search_const_detectors(int d, int truncation, int jobs = 1);

/// Intersection of span{D^j U_a : a <= max_a, j <= max_deg} with the span of
/// the prime-detecting forms, as an echelon basis over the detecting-basis
/// coordinates, normalized to primitive integer polynomial vectors.
std::vector<PolyDetector> search_poly_detectors(int max_a, int max_deg, int truncation);

/// True when target = sum alpha_i(n) * dets[i] for polynomials alpha_i of
/// degree <= max_mult_deg (exact solve over the polynomial coefficients).
bool poly_span_contains(const PolyDetector& target, const std::vector<PolyDetector>& dets,
                        int max_mult_deg);

/// Constant-coefficient reformulation of a polynomial detector, by iterating
/// the times-n reduction; verified against the series to verify_truncation.
LinComb iterated_constant_reduction(const PolyDetector& det, int verify_truncation);

} // namespace macmahon

#endif
