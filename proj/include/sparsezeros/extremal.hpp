#ifndef SPARSEZEROS_EXTREMAL_HPP
#define SPARSEZEROS_EXTREMAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sparsezeros/census.hpp"
#include "sparsezeros/poly.hpp"
#include "sparsezeros/roots.hpp"

namespace sparsezeros {

inline constexpr std::uint64_t kSubspaceDegreeCap = std::uint64_t(1) << 16;

/// Data for an equality-attaining polynomial c * prod_{alpha in V} (x - alpha)
/// with V the F-span of `basis` inside F((T)).
struct SubspaceSpec {
    SeriesField base;                 // K = F_q((T))
    FieldPtr label_field;             // F, an extension of K's residue field
    std::vector<LaurentSeries> basis; // exact, F-linearly independent, over F((T))
    LaurentSeries scale;              // nonzero c

    /// F((T)) with valuations still reported relative to K.
    SeriesField construction_field() const;
};

/// The F-linear polynomial with root set exactly V, by the recursion
/// f_{V + Fw} = f_V^{|F|} - f_V(w)^{|F|-1} f_V, times the scale.  Output
/// support is verified to be {1, |F|, ..., |F|^k}.
SparsePoly subspace_poly(const SubspaceSpec& spec);

/// All |F|^k elements of V.
std::vector<LaurentSeries> enumerate_subspace(const SubspaceSpec& spec);

struct ExtremalReport {
    bool applicable = true; // hypothesis held (xe variant)
    bool ok = false;
    std::size_t count = 0;
    std::uint64_t bound = 0;
    std::vector<std::pair<std::int64_t, std::uint64_t>> per_degree; // (j, found)
    std::vector<std::string> violations;
    std::string poly;
};

/// Count bound: exactly q^k distinct exact roots equal to the enumerated V.
/// Requires F = the base residue field.
ExtremalReport verify_sharpness_thm1(const SubspaceSpec& spec, std::int64_t prec);

/// Degree-bound sharpness: per-degree root counts equal the Moebius terms
/// and the total attains the theorem's constant.  Requires a Galois-stable V
/// (basis over K) and F containing F_{q^i} for i <= d.
ExtremalReport verify_sharpness_thm2(const SubspaceSpec& spec, std::int64_t d, std::int64_t prec);

/// The f(x^e) variant: equality transported along x -> x^e when the basis
/// valuations are pairwise distinct and all divisible by e.  When the
/// hypothesis fails the count still runs, flagged not-applicable.
ExtremalReport verify_xe_variant(const SubspaceSpec& spec, std::int64_t e, std::int64_t prec);

} // namespace sparsezeros

#endif
