#ifndef SPARSEZEROS_NEWTON_HPP
#define SPARSEZEROS_NEWTON_HPP

#include <cstdint>
#include <vector>

#include "sparsezeros/poly.hpp"
#include "sparsezeros/rational.hpp"

namespace sparsezeros {

/// One non-vertical segment of a Newton polygon.
struct Segment {
    Rat lo_n, lo_v;              // left endpoint (exponent, valuation)
    Rat hi_n, hi_v;              // right endpoint
    Rat slope;                   // (hi_v - lo_v) / (hi_n - lo_n) = -g
    Rat g;                       // root valuation carried by this segment
    std::vector<std::int64_t> exponents; // all exponents whose points lie on the segment
    std::int64_t h_len = 0;      // horizontal length
    std::int64_t N = 0;          // dependence index
    std::size_t order_pos = 0;   // position u after proper ordering (1-based; 0 = unordered)
};

struct NewtonPolygon {
    std::vector<Segment> segments;   // hull order from polygon(); proper order after proper_order()
    std::int64_t zero_root_mult = 0; // n_0, the multiplicity of the root 0
    bool properly_ordered = false;
};

/// Lower convex hull of the points (n_i, v(a_i)); the dependence index N is
/// filled in for every segment.  Throws precision_error when a coefficient's
/// valuation is unknown (apparent zero).
NewtonPolygon polygon(const SparsePoly& f);

/// C(n, t) mod p by Lucas' theorem.
std::uint32_t binom_mod_p(std::int64_t n, std::int64_t t, std::uint32_t p);

/// The largest N for which the images of (1+x)^{e_i} in F_p[x]/(x^N) are
/// linearly dependent over F_p.  Exponents must be distinct.
std::int64_t dependence_index(const std::vector<std::int64_t>& exponents, std::uint32_t p);

/// Stable sort by N descending; assigns order_pos 1..t.
NewtonPolygon proper_order(NewtonPolygon np);

} // namespace sparsezeros

#endif
