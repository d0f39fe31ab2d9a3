#ifndef SPARSEZEROS_ROOTS_HPP
#define SPARSEZEROS_ROOTS_HPP

#include <cstdint>
#include <vector>

#include "sparsezeros/newton.hpp"
#include "sparsezeros/poly.hpp"

namespace sparsezeros {

/// Degree over the base field K: exact for unramified homes, an upper bound
/// for ramified ones.
struct DegreeOverK {
    bool exact = true;
    std::int64_t value = 1;
};

/// A distinct zero of f (or an unresolved cluster of zeros closer together
/// than the working precision; clusters count as one distinct zero and are
/// flagged by resolved = false).
struct RootRecord {
    LaurentSeries value;           // exact root, certified approximation, or cluster center
    std::int64_t multiplicity = 1; // with respect to the input polynomial
    bool resolved = false;         // Hensel-certified simple, or exact
    bool exact = false;            // f(value) = 0 exactly
    std::uint32_t home_j = 1;      // residue degree of the home field over K's residue field
    std::int64_t home_e = 1;       // ramification of the home field
    DegreeOverK degree;
    std::int64_t certified_abs = 0; // coefficients below S^certified_abs are certified
};

inline constexpr std::uint64_t kDefaultEnumCap = std::uint64_t(1) << 22;

/// Distinct zeros of f in the target field.  prec is the absolute precision
/// target in S-units of the target field; simple roots are Hensel-certified
/// to it, exact Laurent-polynomial roots are verified by exact evaluation,
/// and branches that cannot be separated below S^prec become unresolved
/// cluster records.  Coefficients must be exact.
std::vector<RootRecord> roots_in(const SparsePoly& f, const SeriesField& target, std::int64_t prec);

/// Distinct zeros of degree at most d over K = f's field, searched over the
/// tame lattice { F_{q^j}((T^{1/e})) : j*e <= d, e = 1 or p coprime to e }.
/// Wildly ramified roots are outside the search space, so the result is a
/// lower bound for the true degree-<= d count.  prec is in T-units.
std::vector<RootRecord> roots_deg_le_d(const SparsePoly& f, std::int64_t d, std::int64_t prec);

/// Brute-force enumeration oracle: every truncated series
/// x = S^w (c_0 + c_1 S + ... + c_{prec-1} S^{prec-1}), c_0 != 0, w in
/// [w_lo, w_hi], plus x = 0, kept when v(f(x)) >= theta(f, w, prec) where
/// theta = min_i (v(a_i) + n_i w) + prec.  Membership certifies a root
/// cluster, not a root.  Exponents in S-units of f's field.
std::vector<LaurentSeries> oracle_roots(const SparsePoly& f, std::int64_t prec, std::int64_t w_lo,
                                        std::int64_t w_hi, std::uint64_t cap = 0);

/// Number of distinct zeros represented by a record list (clusters count 1).
inline std::size_t distinct_count(const std::vector<RootRecord>& recs) { return recs.size(); }

} // namespace sparsezeros

#endif
