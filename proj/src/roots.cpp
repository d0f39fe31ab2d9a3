#include "sparsezeros/roots.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace sparsezeros {

namespace {

std::uint64_t enum_cap_override() {
    if (const char* env = std::getenv("SPARSEZEROS_MAX_ENUM")) {
        char* end = nullptr;
        std::uint64_t v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultEnumCap;
}

struct SearchCtx {
    const SparsePoly& g;        // reduced polynomial over the target field
    SeriesField fld;            // target
    std::int64_t prec;          // absolute S-precision target
    std::int64_t mult_scale;    // p^s from the p-th power reduction
    std::vector<RootRecord>* out;
};

RootRecord make_cluster(const SearchCtx& ctx, const LaurentSeries& center, std::int64_t gamma,
                        std::int64_t mult) {
    RootRecord rec;
    rec.value = center;
    rec.multiplicity = mult * ctx.mult_scale;
    rec.resolved = false;
    rec.exact = false;
    rec.certified_abs = gamma + 1; // members share all digits at or below S^gamma
    return rec;
}

// Newton iteration from a residual-simple starting point.  x0 is an exact
// Laurent polynomial; evaluation stays exact, only the quotient is windowed.
void hensel_lift(const SearchCtx& ctx, LaurentSeries x, std::int64_t gamma) {
    std::int64_t target = std::max(ctx.prec, gamma + 4);
    const std::int64_t guard = 4;
    LaurentSeries fx = evaluate(ctx.g, x);
    std::int64_t last_gap = INT64_MIN;
    for (int iter = 0; iter < 128; ++iter) {
        if (fx.is_exact_zero()) {
            RootRecord rec;
            rec.value = x;
            rec.multiplicity = ctx.mult_scale;
            rec.resolved = true;
            rec.exact = true;
            rec.certified_abs = INT64_MAX;
            ctx.out->push_back(std::move(rec));
            return;
        }
        LaurentSeries fpx = evaluate_derivative(ctx.g, x);
        if (fpx.is_zero())
            throw check_error("derivative vanished at a residual-simple branch", ctx.g.str());
        std::int64_t gap = fx.lead_exp() - fpx.lead_exp();
        if (gap >= target) {
            LaurentSeries approx = x.snipped(target);
            // exact roots sometimes surface as converged approximations
            if (evaluate(ctx.g, approx).is_exact_zero()) {
                RootRecord rec;
                rec.value = approx;
                rec.multiplicity = ctx.mult_scale;
                rec.resolved = true;
                rec.exact = true;
                rec.certified_abs = INT64_MAX;
                ctx.out->push_back(std::move(rec));
                return;
            }
            RootRecord rec;
            rec.value = approx;
            rec.multiplicity = ctx.mult_scale;
            rec.resolved = true;
            rec.exact = false;
            rec.certified_abs = target;
            ctx.out->push_back(std::move(rec));
            return;
        }
        if (gap <= last_gap)
            throw check_error("Newton iteration stalled on a residual-simple branch", ctx.g.str());
        last_gap = gap;
        LaurentSeries delta = divide_mod(fx, fpx, target + guard);
        x = (x - delta).snipped(target + guard);
        fx = evaluate(ctx.g, x);
    }
    throw check_error("Newton iteration failed to converge", ctx.g.str());
}

struct HullPoint {
    std::int64_t j;
    std::int64_t v;
};

// Lower hull over integer points (j, v).
std::vector<HullPoint> lower_hull(const std::vector<HullPoint>& pts) {
    std::vector<HullPoint> hull;
    for (const auto& c : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // drop b unless strictly below segment a-c
            __int128 lhs = static_cast<__int128>(b.v - a.v) * (c.j - a.j);
            __int128 rhs = static_cast<__int128>(c.v - a.v) * (b.j - a.j);
            if (lhs >= rhs)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(c);
    }
    return hull;
}

void search_branch(const SearchCtx& ctx, const LaurentSeries& center, std::int64_t gamma,
                   std::int64_t mult, std::int64_t depth);

// Handle the residual roots of one polygon segment: points (j, v) on the
// segment carry residues res[j]; roots x in this branch satisfy
// v(x - center) = gamma_new and have leading digit equal to a residual root.
void branch_on_segment(const SearchCtx& ctx, const LaurentSeries& center, std::int64_t gamma_new,
                       const std::vector<FqElem>& residual, std::int64_t depth) {
    auto rr = poly_roots_ff(residual);
    for (const auto& [c, mc] : rr) {
        if (c.is_zero()) continue;
        LaurentSeries next = center + LaurentSeries::monomial(ctx.fld, c, gamma_new);
        if (mc == 1) {
            hensel_lift(ctx, next, gamma_new);
        } else if (gamma_new >= ctx.prec || depth <= 0) {
            ctx.out->push_back(make_cluster(ctx, next, gamma_new, mc));
        } else {
            search_branch(ctx, next, gamma_new, mc, depth - 1);
        }
    }
}

// Roots x with v(x - center) > gamma; mult = their total multiplicity in the
// algebraic closure (equals the residual multiplicity one level up).
void search_branch(const SearchCtx& ctx, const LaurentSeries& center, std::int64_t gamma,
                   std::int64_t mult, std::int64_t depth) {
    // b[j] = coefficient of x^j in g(center + x) = sum_i a_i C(n_i, j) center^(n_i - j),
    // needed only for j = 0..mult (the right anchor (mult, v(b_mult)) is a
    // vertex of the full recentered polygon, so the left portion is complete)
    std::vector<LaurentSeries> b(static_cast<std::size_t>(mult) + 1, LaurentSeries::zero(ctx.fld));
    const std::uint32_t p = ctx.fld.residue->p;
    for (const auto& t : ctx.g.terms()) {
        std::int64_t j_hi = std::min(mult, t.n);
        LaurentSeries cp = center.pow(t.n - j_hi); // center^(n - j), walked downward in j
        for (std::int64_t j = j_hi;; --j) {
            std::uint32_t cb = binom_mod_p(t.n, j, p);
            if (cb != 0)
                b[static_cast<std::size_t>(j)] =
                    b[static_cast<std::size_t>(j)] + (t.a * cp).scaled(ctx.fld.residue->from_int(cb));
            if (j == 0) break;
            cp = cp * center;
        }
    }
    if (b[static_cast<std::size_t>(mult)].is_zero())
        throw check_error("recentered polygon lost its right anchor vertex", ctx.g.str());

    std::int64_t mu = 0;
    if (b[0].is_exact_zero()) {
        // center is an exact root; its multiplicity is the first nonzero index
        while (b[static_cast<std::size_t>(mu)].is_exact_zero()) ++mu;
        RootRecord rec;
        rec.value = center;
        rec.multiplicity = mu * ctx.mult_scale;
        rec.resolved = true;
        rec.exact = true;
        rec.certified_abs = INT64_MAX;
        ctx.out->push_back(std::move(rec));
    }

    std::vector<HullPoint> pts;
    for (std::int64_t j = mu; j <= mult; ++j) {
        const auto& bj = b[static_cast<std::size_t>(j)];
        if (bj.is_zero()) continue;
        pts.push_back({j, bj.lead_exp()});
    }
    auto hull = lower_hull(pts);
    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
        const auto& lo = hull[s];
        const auto& hi = hull[s + 1];
        std::int64_t dv = hi.v - lo.v;
        std::int64_t dj = hi.j - lo.j;
        // root valuation gamma' = -(dv/dj) must be an integer greater than gamma
        if (dv % dj != 0) continue;
        std::int64_t gamma_new = -(dv / dj);
        if (gamma_new <= gamma) continue;
        std::vector<FqElem> residual(static_cast<std::size_t>(dj) + 1, ctx.fld.residue->zero());
        for (const auto& pt : pts) {
            if (pt.j < lo.j || pt.j > hi.j) continue;
            if ((pt.v - lo.v) * dj == dv * (pt.j - lo.j))
                residual[static_cast<std::size_t>(pt.j - lo.j)] =
                    b[static_cast<std::size_t>(pt.j)].leading_coeff();
        }
        branch_on_segment(ctx, center, gamma_new, residual, depth);
    }
}

} // namespace

std::vector<RootRecord> roots_in(const SparsePoly& f, const SeriesField& target, std::int64_t prec) {
    SparsePoly ft = f.field() == target ? f : f.embed_into(target);
    for (const auto& t : ft.terms())
        if (!t.a.exact()) throw domain_error("roots_in requires exact coefficients");

    auto reduced = pth_power_reduce(ft);
    std::int64_t mult_scale = 1;
    for (std::uint32_t i = 0; i < reduced.s; ++i) mult_scale *= target.residue->p;

    std::vector<RootRecord> out;
    SearchCtx ctx{reduced.g, target, prec, mult_scale, &out};

    if (reduced.g.low_exp() > 0) {
        RootRecord rec;
        rec.value = LaurentSeries::zero(target);
        rec.multiplicity = reduced.g.low_exp() * mult_scale;
        rec.resolved = true;
        rec.exact = true;
        rec.certified_abs = INT64_MAX;
        out.push_back(std::move(rec));
    }

    NewtonPolygon np = polygon(reduced.g);
    for (const auto& seg : np.segments) {
        Rat gamma_t = seg.g * Rat(target.e); // S-units
        if (!gamma_t.is_integer()) continue;
        std::int64_t gamma = gamma_t.num;
        // residual polynomial: leading residues of the on-segment coefficients
        std::int64_t n_lo = seg.exponents.front();
        std::vector<FqElem> residual(static_cast<std::size_t>(seg.h_len) + 1, target.residue->zero());
        for (const auto& t : reduced.g.terms()) {
            if (std::find(seg.exponents.begin(), seg.exponents.end(), t.n) == seg.exponents.end())
                continue;
            residual[static_cast<std::size_t>(t.n - n_lo)] = t.a.leading_coeff();
        }
        branch_on_segment(ctx, LaurentSeries::zero(target), gamma, residual, prec);
    }

    // canonical order: by valuation, then leading digits
    std::stable_sort(out.begin(), out.end(), [](const RootRecord& a, const RootRecord& b) {
        bool az = a.value.is_zero(), bz = b.value.is_zero();
        if (az != bz) return az;
        if (az && bz) return false;
        if (a.value.lead_exp() != b.value.lead_exp()) return a.value.lead_exp() < b.value.lead_exp();
        const auto& ca = a.value.coeffs();
        const auto& cb = b.value.coeffs();
        for (std::size_t i = 0; i < std::min(ca.size(), cb.size()); ++i)
            if (ca[i].packed() != cb[i].packed()) return ca[i].packed() < cb[i].packed();
        return ca.size() < cb.size();
    });
    for (auto& rec : out) {
        rec.home_j = target.residue->m / target.base_m;
        rec.home_e = target.e;
        if (target.e == 1) {
            rec.degree.exact = true;
            rec.degree.value = rec.value.coeff_subfield_degree();
        } else {
            rec.degree.exact = false;
            rec.degree.value = static_cast<std::int64_t>(rec.home_j) * target.e;
        }
    }
    return out;
}

std::vector<RootRecord> roots_deg_le_d(const SparsePoly& f, std::int64_t d, std::int64_t prec) {
    if (d < 1) throw domain_error("degree bound must be >= 1");
    if (f.field().e != 1) throw domain_error("roots_deg_le_d expects a polynomial over the unramified base");
    const std::uint32_t p = f.field().residue->p;
    FieldPtr base_res = f.field().residue;

    std::vector<RootRecord> all;
    for (std::int64_t e = 1; e <= d; ++e) {
        if (e != 1 && std::gcd(e, static_cast<std::int64_t>(p)) != 1) continue; // tame lattice only
        for (std::int64_t j = 1; j * e <= d; ++j) {
            SeriesField target{fq_make(p, base_res->m * static_cast<std::uint32_t>(j)), e, base_res->m};
            auto recs = roots_in(f, target, prec * e);
            for (auto& rec : recs) {
                // keep a root only in its minimal home field
                std::uint32_t min_j = rec.value.coeff_subfield_degree();
                std::int64_t min_e = e / rec.value.support_gcd_with_e();
                if (min_j != static_cast<std::uint32_t>(j) || min_e != e) continue;
                rec.degree.value = (e == 1) ? min_j : static_cast<std::int64_t>(min_j) * e;
                rec.degree.exact = (e == 1);
                all.push_back(std::move(rec));
            }
        }
    }
    std::stable_sort(all.begin(), all.end(), [](const RootRecord& a, const RootRecord& b) {
        if (a.home_j != b.home_j) return a.home_j < b.home_j;
        return a.home_e < b.home_e;
    });
    return all;
}

std::vector<LaurentSeries> oracle_roots(const SparsePoly& f, std::int64_t prec, std::int64_t w_lo,
                                        std::int64_t w_hi, std::uint64_t cap) {
    if (w_hi < w_lo) throw domain_error("empty valuation window");
    if (prec < 1) throw domain_error("oracle precision must be >= 1");
    if (cap == 0) cap = enum_cap_override();
    const SeriesField& fld = f.field();
    const std::uint64_t q = fld.residue->q;
    std::uint64_t total = static_cast<std::uint64_t>(w_hi - w_lo + 1);
    for (std::int64_t i = 0; i < prec; ++i) {
        if (total > cap / q) throw cap_error("oracle enumeration exceeds the cap");
        total *= q;
    }
    if (total > cap) throw cap_error("oracle enumeration exceeds the cap");

    for (const auto& t : f.terms())
        if (!t.a.exact()) throw domain_error("oracle_roots requires exact coefficients");

    std::vector<LaurentSeries> found;
    if (f.low_exp() > 0) found.push_back(LaurentSeries::zero(fld));

    bool deriv_vanishes = f.derivative_is_zero();
    std::vector<FqElem> digits(static_cast<std::size_t>(prec), fld.residue->zero());
    for (std::int64_t w = w_lo; w <= w_hi; ++w) {
        std::int64_t theta = INT64_MAX;
        for (const auto& t : f.terms())
            theta = std::min(theta, t.a.lead_exp() + t.n * w);
        theta += prec;
        // odometer over (c_0, ..., c_{prec-1}), c_0 != 0
        std::uint64_t combos = 1;
        for (std::int64_t i = 0; i < prec; ++i) combos *= q;
        for (std::uint64_t code = 0; code < combos; ++code) {
            std::uint64_t c = code;
            for (std::int64_t i = 0; i < prec; ++i) {
                digits[static_cast<std::size_t>(i)] =
                    FqElem(fld.residue.get(), static_cast<std::uint32_t>(c % q));
                c /= q;
            }
            if (digits[0].is_zero()) continue;
            LaurentSeries x = LaurentSeries::make(fld, w, digits);
            LaurentSeries fx = evaluate(f, x);
            bool pass = false;
            if (fx.is_exact_zero()) {
                pass = true;
            } else if (fx.lead_exp() >= theta) {
                // theta alone certifies cluster membership but admits points
                // one slot short of a root whenever roots cluster; the Newton
                // quotient v(f/f') measures the distance to the nearest root
                // and pins the acceptance to exact prec-digit truncations.
                if (deriv_vanishes) {
                    pass = true;
                } else {
                    LaurentSeries fpx = evaluate_derivative(f, x);
                    pass = !fpx.is_zero() && fx.lead_exp() - fpx.lead_exp() >= w + prec;
                }
            }
            if (pass) found.push_back(std::move(x));
        }
    }
    return found;
}

} // namespace sparsezeros
