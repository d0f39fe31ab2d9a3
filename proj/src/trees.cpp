#include "sparsezeros/trees.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace sparsezeros {

namespace {

// v(x - y) as an established lower bound or exact value
Val vdist(const LaurentSeries& x, const LaurentSeries& y) { return (x - y).val(); }

// true when v >= bound is known to hold strictly above g
bool val_exceeds(const Val& v, const Rat& g, bool strict) {
    switch (v.kind) {
        case Val::INFINITE: return true;
        case Val::ABOVE:
            if (v.value > g) return true;
            throw precision_error("disk membership undecidable at available precision");
        default: return strict ? v.value > g : v.value >= g;
    }
}

} // namespace

bool Disk::contains(const LaurentSeries& x) const {
    return val_exceeds(vdist(x, center), radius, open);
}

DiskTree build_tree(const std::vector<LaurentSeries>& S) {
    if (S.empty()) throw domain_error("disk tree of an empty set");
    DiskTree t;
    t.points = S;
    t.nodes.reserve(2 * S.size());

    std::function<std::size_t(std::vector<std::size_t>)> build =
        [&](std::vector<std::size_t> members) -> std::size_t {
        std::size_t idx = t.nodes.size();
        t.nodes.push_back(DiskTreeNode{});
        t.nodes[idx].members = members;
        if (members.size() == 1) return idx;

        // radius of the smallest closed disk containing the subset
        bool have = false;
        Rat g;
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                Val v = vdist(S[members[a]], S[members[b]]);
                if (v.kind == Val::INFINITE) throw domain_error("duplicate points in disk tree");
                if (v.kind == Val::ABOVE)
                    throw precision_error("two points equal to available precision");
                if (!have || v.value < g) {
                    g = v.value;
                    have = true;
                }
            }
        t.nodes[idx].radius = g;

        // children: classes of the relation v(s - t) > g
        std::vector<std::vector<std::size_t>> classes;
        for (std::size_t m : members) {
            bool placed = false;
            for (auto& cl : classes) {
                Val v = vdist(S[cl.front()], S[m]);
                bool closer = (v.kind == Val::INFINITE) ||
                              (v.kind == Val::ABOVE ? v.value > g : v.value > g);
                if (v.kind == Val::ABOVE && !(v.value > g))
                    throw precision_error("two points equal to available precision");
                if (closer) {
                    cl.push_back(m);
                    placed = true;
                    break;
                }
            }
            if (!placed) classes.push_back({m});
        }
        for (auto& cl : classes) {
            std::size_t child = build(std::move(cl));
            t.nodes[idx].children.push_back(child);
        }
        return idx;
    };
    build([&] {
        std::vector<std::size_t> all(S.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        return all;
    }());
    return t;
}

std::int64_t tree_length(const DiskTree& t) {
    std::function<std::int64_t(std::size_t)> depth = [&](std::size_t n) -> std::int64_t {
        std::int64_t best = 0;
        for (std::size_t c : t.nodes[n].children) best = std::max(best, 1 + depth(c));
        return best;
    };
    return depth(t.root());
}

DiskTree phi_label(DiskTree tree, const Rat& g_u) {
    if (tree.points.front().field().e != 1)
        throw domain_error("phi labelling is defined for unramified fields only");
    auto member_series = [&](std::size_t node) -> const LaurentSeries& {
        return tree.points[tree.nodes[node].members.front()];
    };
    tree.nodes[tree.root()].label = member_series(tree.root()).coefficient_at(g_u);
    std::function<void(std::size_t)> walk = [&](std::size_t n) {
        const auto& node = tree.nodes[n];
        if (node.children.empty()) return;
        for (std::size_t c : node.children) {
            tree.nodes[c].label = member_series(c).coefficient_at(node.radius);
            walk(c);
        }
    };
    walk(tree.root());
    return tree;
}

std::string PhiImage::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        std::string c = coeffs[i].str();
        if (i == 0)
            os << c;
        else if (c == "1")
            os << (i == 1 ? "X" : "X^" + std::to_string(i));
        else
            os << c << "*" << (i == 1 ? "X" : "X^" + std::to_string(i));
    }
    if (first) os << "0";
    return os.str();
}

std::vector<PhiImage> phi_map(const std::vector<LaurentSeries>& roots, const NewtonPolygon& polygon,
                              std::size_t k) {
    if (!polygon.properly_ordered) throw domain_error("phi_map requires a properly ordered polygon");
    std::vector<PhiImage> out;
    out.reserve(roots.size());
    const FieldPtr residue = roots.empty() ? nullptr : roots.front().field().residue;
    for (const auto& z : roots) {
        if (z.field().e != 1) throw domain_error("phi_map is defined for unramified roots only");
        PhiImage img;
        img.coeffs.assign(k, residue->zero());
        if (z.is_zero()) {
            out.push_back(std::move(img));
            continue;
        }
        Rat g = Rat(z.lead_exp(), z.field().e);
        std::size_t u = 0;
        for (const auto& seg : polygon.segments)
            if (seg.g == g) {
                u = seg.order_pos;
                break;
            }
        if (u == 0)
            throw check_error("root valuation " + g.str() + " is not a polygon slope");

        // S = roots in D(z, g_u), tracking z's position
        std::vector<LaurentSeries> S;
        std::size_t z_pos = 0;
        for (const auto& alpha : roots) {
            Val v = vdist(alpha, z);
            bool inside = (v.kind == Val::INFINITE) ||
                          (v.kind == Val::ABOVE ? v.value > g
                                                : v.value > g);
            if (v.kind == Val::ABOVE && !(v.value > g))
                throw precision_error("roots indistinguishable when building phi tree");
            if (inside) {
                if (v.kind == Val::INFINITE) z_pos = S.size();
                S.push_back(alpha);
            }
        }
        DiskTree t = phi_label(build_tree(S), g);

        // maximal chain from the root to the leaf {z}
        std::vector<FqElem> labels;
        std::size_t node = t.root();
        labels.push_back(*t.nodes[node].label);
        while (!t.nodes[node].children.empty()) {
            bool found = false;
            for (std::size_t c : t.nodes[node].children) {
                const auto& mem = t.nodes[c].members;
                if (std::find(mem.begin(), mem.end(), z_pos) != mem.end()) {
                    node = c;
                    labels.push_back(*t.nodes[c].label);
                    found = true;
                    break;
                }
            }
            if (!found) throw check_error("phi chain walk lost the target leaf");
        }
        std::size_t n = labels.size() - 1;
        if (u - 1 + n > k - 1)
            throw check_error("phi chain length " + std::to_string(n) + " exceeds k-u = " +
                              std::to_string(k - u));
        for (std::size_t i = 0; i <= n; ++i) img.coeffs[u - 1 + i] = labels[i];
        out.push_back(std::move(img));
    }
    return out;
}

std::string tree_to_dot(const DiskTree& t) {
    std::ostringstream os;
    os << "digraph disktree {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const auto& n = t.nodes[i];
        os << "  n" << i << " [label=\"{";
        for (std::size_t m = 0; m < n.members.size(); ++m)
            os << (m ? ", " : "") << t.points[n.members[m]].str();
        os << "}";
        if (n.members.size() > 1) os << "\\nradius " << n.radius.str();
        if (n.label) os << "\\nlabel " << n.label->str();
        os << "\"];\n";
        for (std::size_t c : n.children) os << "  n" << i << " -> n" << c << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace sparsezeros
