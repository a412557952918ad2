#ifndef MACMAHON_PARTITION_HPP
#define MACMAHON_PARTITION_HPP

#include "macmahon/qseries.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace macmahon {

/// Exponent vector (v_1, ..., v_a) indexing a MacMahon-type partition
/// function.  Entries are >= 0; zero entries are legal.
///
/// Pairing convention (bracket order): entry v_1 weights the multiplicity of
/// the LARGEST part size in each decomposition, v_a the smallest.  All-ones
/// and single-entry vectors are insensitive to the order; asymmetric vectors
/// are not, and everything downstream (quasi-shuffle reductions, symmetrized
/// series, detector tables) assumes this orientation.
using Vec = std::vector<std::int32_t>;

int weight(const Vec& v);
int filtration(const Vec& v);  // weight + length
std::string vec_str(const Vec& v);
Vec parse_vec(const std::string& text);  // "v1,v2,...,va"

/// Deterministic word order: (weight+length, length, lexicographic entries).
struct VecOrder {
    bool operator()(const Vec& a, const Vec& b) const;
};

/// Validated exponent vector: length >= 1, entries >= 0.
class PartVector {
public:
    explicit PartVector(Vec entries);
    static PartVector parse(const std::string& text);
    const Vec& entries() const { return entries_; }
    int weight() const { return macmahon::weight(entries_); }
    int length() const { return static_cast<int>(entries_.size()); }
    std::string str() const { return vec_str(entries_); }

private:
    Vec entries_;
};

/// M_vec(n) by exhaustive enumeration of the decompositions of n with
/// exactly length(vec) distinct part sizes, summing the products of
/// multiplicity powers.  Exponential; meant as ground truth for n up to ~80.
Int brute_m(const Vec& vec, std::int64_t n);

/// Companion oracle with binomial weights C(m_i + v_i - 1, v_i) in place of
/// the powers m_i^{v_i}.  Oracle only; no fast generating path exists here
/// because nothing downstream needs one.
Int brute_n(const Vec& vec, std::int64_t n);

/// Coefficients 0..truncation of the generating series of M_vec, computed by
/// the single-size block expansion (coefficient of q^{ms} in a block with
/// exponent v is m^v) and a descending sweep over part sizes.  Memoized and
/// safe to call concurrently; the returned vector may be longer than
/// requested.
std::shared_ptr<const std::vector<Int>> u_coeffs(const Vec& vec, int truncation);

/// Generating series of M_vec as a QSeries: constant term 0, coefficient of
/// q^n equal to M_vec(n).
QSeries u_series(const Vec& vec, int truncation);

/// MacMahon's series U_a = u_series of the all-ones vector of length a.
QSeries macmahon_u(int a, int truncation);

} // namespace macmahon

#endif
