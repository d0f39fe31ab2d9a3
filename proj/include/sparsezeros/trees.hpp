#ifndef SPARSEZEROS_TREES_HPP
#define SPARSEZEROS_TREES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sparsezeros/newton.hpp"
#include "sparsezeros/laurent.hpp"

namespace sparsezeros {

/// Ultrametric disk D(x0, g) (open: v(x-x0) > g) or closed (>= g).
struct Disk {
    LaurentSeries center;
    Rat radius;
    bool open = true;

    bool contains(const LaurentSeries& x) const;
};

/// Node of the disk tree: a subset S ∩ D together with the radius of the
/// smallest closed disk containing it.  Children partition the subset.
struct DiskTreeNode {
    std::vector<std::size_t> members;   // indices into the point list
    Rat radius;                         // meaningful when members.size() > 1
    std::vector<std::size_t> children;  // node indices
    std::optional<FqElem> label;
};

/// The Hasse diagram of the poset of nonempty S ∩ D over all disks D:
/// node 0 is the root (S itself), leaves are singletons.
struct DiskTree {
    std::vector<LaurentSeries> points;
    std::vector<DiskTreeNode> nodes;

    std::size_t root() const { return 0; }
};

/// Standard ultrametric clustering of pairwise-distinguishable points.
DiskTree build_tree(const std::vector<LaurentSeries>& S);

/// Longest root-to-leaf chain length (edges).
std::int64_t tree_length(const DiskTree& t);

/// Labelling of §-style disk trees with canonical choices beta_g = T^g and
/// x_1 = the truncation of any member below g: each child of a node of
/// radius g is labelled by the coefficient of T^g of any of its members, and
/// the root by the coefficient at g_u.  Unramified fields only (e = 1).
DiskTree phi_label(DiskTree tree, const Rat& g_u);

/// Phi(z) as a coefficient vector of length k over the labelling field:
/// coeffs[u-1+i] = label(T_i) along the maximal chain to {z}.
struct PhiImage {
    std::vector<FqElem> coeffs;

    friend bool operator==(const PhiImage& a, const PhiImage& b) { return a.coeffs == b.coeffs; }
    std::string str() const; // polynomial in X
};

/// The injection R -> F[X]_{<k} of the proof of the degree-bound theorem.
/// Roots must be unramified (e = 1), pairwise distinguishable, and the
/// polygon must be properly ordered.  Phi(0) = 0.  A chain longer than k-u
/// falsifies the length bound and raises check_error; it is never repaired.
std::vector<PhiImage> phi_map(const std::vector<LaurentSeries>& roots, const NewtonPolygon& polygon,
                              std::size_t k);

/// DOT rendering of a (labelled) disk tree.
std::string tree_to_dot(const DiskTree& t);

} // namespace sparsezeros

#endif
