#include "sparsezeros/newton.hpp"

#include <algorithm>

namespace sparsezeros {

std::uint32_t binom_mod_p(std::int64_t n, std::int64_t t, std::uint32_t p) {
    if (t < 0 || t > n) return 0;
    // digit products, C(n_i, t_i) mod p with n_i, t_i < p
    std::uint64_t result = 1;
    while (t > 0 || n > 0) {
        std::uint32_t nd = static_cast<std::uint32_t>(n % p);
        std::uint32_t td = static_cast<std::uint32_t>(t % p);
        if (td > nd) return 0;
        // small binomial by multiplicative formula mod p
        std::uint64_t c = 1;
        for (std::uint32_t i = 1; i <= td; ++i) {
            c = c * (nd + 1 - i) % p;
            // divide by i mod p (p prime, i < p)
            std::uint64_t inv = 1, base = i, e = p - 2;
            while (e) {
                if (e & 1) inv = inv * base % p;
                base = base * base % p;
                e >>= 1;
            }
            c = c * inv % p;
        }
        result = result * c % p;
        if (result == 0) return 0;
        n /= p;
        t /= p;
    }
    return static_cast<std::uint32_t>(result);
}

std::int64_t dependence_index(const std::vector<std::int64_t>& exponents, std::uint32_t p) {
    const std::size_t r = exponents.size();
    if (r == 0) throw domain_error("dependence_index of an empty exponent set");
    {
        auto sorted = exponents;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw domain_error("dependence_index requires distinct exponents");
    }
    std::int64_t e_max = *std::max_element(exponents.begin(), exponents.end());

    // Feed columns c_t = (C(e_i, t) mod p)_i one at a time, maintaining a
    // reduced basis of the column space.  The rank grows by at most one per
    // column and reaches r by column e_max + 1 at the latest.
    std::vector<std::vector<std::uint32_t>> basis; // reduced, with pivot positions
    std::vector<std::size_t> pivots;
    auto reduce = [&](std::vector<std::uint32_t> v) -> std::vector<std::uint32_t> {
        for (std::size_t b = 0; b < basis.size(); ++b) {
            std::uint32_t c = v[pivots[b]];
            if (c == 0) continue;
            for (std::size_t i = 0; i < r; ++i)
                v[i] = static_cast<std::uint32_t>((v[i] + std::uint64_t(p - c) * basis[b][i]) % p);
        }
        return v;
    };
    for (std::int64_t t = 0; t <= e_max + 1; ++t) {
        std::vector<std::uint32_t> col(r);
        for (std::size_t i = 0; i < r; ++i) col[i] = binom_mod_p(exponents[i], t, p);
        col = reduce(std::move(col));
        auto nz = std::find_if(col.begin(), col.end(), [](std::uint32_t x) { return x != 0; });
        if (nz == col.end()) continue;
        // normalize pivot to 1 and store
        std::size_t piv = static_cast<std::size_t>(nz - col.begin());
        std::uint64_t inv = 1, base = col[piv], e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (auto& x : col) x = static_cast<std::uint32_t>(x * inv % p);
        basis.push_back(std::move(col));
        pivots.push_back(piv);
        if (basis.size() == r) return t; // N = (least N' with full rank) - 1 = t
    }
    throw domain_error("dependence_index failed to reach full rank"); // unreachable
}

NewtonPolygon polygon(const SparsePoly& f) {
    std::vector<std::pair<std::int64_t, Rat>> pts; // (exponent, valuation in T-units)
    for (const auto& t : f.terms()) {
        Val v = t.a.val();
        if (!v.finite())
            throw precision_error("coefficient of x^" + std::to_string(t.n) +
                                  " has unknown valuation");
        pts.emplace_back(t.n, v.value);
    }
    // monotone chain, keeping the lower hull; points already sorted by n
    std::vector<std::size_t> hull;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (hull.size() >= 2) {
            // cross product sign for (a, b, c): drop b when it is not
            // strictly below segment a-c
            auto& a = pts[hull[hull.size() - 2]];
            auto& b = pts[hull[hull.size() - 1]];
            auto& c = pts[i];
            Rat lhs = (b.second - a.second) * Rat(c.first - a.first);
            Rat rhs = (c.second - a.second) * Rat(b.first - a.first);
            if (lhs >= rhs)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(i);
    }

    NewtonPolygon np;
    np.zero_root_mult = f.low_exp();
    const std::uint32_t p = f.field().residue->p;
    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
        const auto& a = pts[hull[s]];
        const auto& b = pts[hull[s + 1]];
        Segment seg;
        seg.lo_n = Rat(a.first);
        seg.lo_v = a.second;
        seg.hi_n = Rat(b.first);
        seg.hi_v = b.second;
        seg.slope = (b.second - a.second) / Rat(b.first - a.first);
        seg.g = -seg.slope;
        seg.h_len = b.first - a.first;
        for (const auto& pt : pts) {
            if (pt.first < a.first || pt.first > b.first) continue;
            // on the segment line?
            Rat lhs = (pt.second - a.second) * Rat(b.first - a.first);
            Rat rhs = (b.second - a.second) * Rat(pt.first - a.first);
            if (lhs == rhs) seg.exponents.push_back(pt.first);
        }
        seg.N = dependence_index(seg.exponents, p);
        np.segments.push_back(std::move(seg));
    }
    return np;
}

NewtonPolygon proper_order(NewtonPolygon np) {
    std::stable_sort(np.segments.begin(), np.segments.end(),
                     [](const Segment& a, const Segment& b) { return a.N > b.N; });
    for (std::size_t i = 0; i < np.segments.size(); ++i) np.segments[i].order_pos = i + 1;
    np.properly_ordered = true;
    return np;
}

} // namespace sparsezeros
