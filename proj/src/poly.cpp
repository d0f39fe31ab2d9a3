#include "sparsezeros/poly.hpp"

#include <algorithm>
#include <sstream>

#include "sparsezeros/newton.hpp" // binom_mod_p

namespace sparsezeros {

SparsePoly::SparsePoly(SeriesField fld, std::vector<Term> terms) : fld_(std::move(fld)) {
    std::stable_sort(terms.begin(), terms.end(),
                     [](const Term& a, const Term& b) { return a.n < b.n; });
    std::vector<Term> merged;
    for (auto& t : terms) {
        if (t.n < 0) throw domain_error("negative polynomial exponent");
        if (t.a.field() != fld_) throw domain_error("coefficient field mismatch");
        if (!merged.empty() && merged.back().n == t.n)
            merged.back().a = merged.back().a + t.a;
        else
            merged.push_back(std::move(t));
    }
    for (auto& t : merged) {
        if (t.a.is_zero()) {
            if (t.a.exact()) continue;
            throw precision_error("coefficient indistinguishable from zero");
        }
        terms_.push_back(std::move(t));
    }
    if (terms_.empty()) throw domain_error("zero polynomial");
}

SparsePoly SparsePoly::embed_into(const SeriesField& target) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back({t.n, t.a.embed_into(target)});
    return SparsePoly(target, std::move(ts));
}

SparsePoly SparsePoly::x_scaled(const LaurentSeries& c) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back({t.n, t.a * c.pow(t.n)});
    return SparsePoly(fld_, std::move(ts));
}

SparsePoly SparsePoly::pth_power(std::uint32_t s) const {
    std::int64_t scale = 1;
    for (std::uint32_t i = 0; i < s; ++i) scale *= fld_.residue->p;
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (t.n > (std::int64_t(1) << 62) / scale) throw cap_error("exponent overflow in pth_power");
        ts.push_back({t.n * scale, t.a.pth_power(s)});
    }
    return SparsePoly(fld_, std::move(ts));
}

bool SparsePoly::derivative_is_zero() const {
    for (const auto& t : terms_)
        if (t.n % fld_.residue->p != 0) return false;
    return true;
}

LaurentSeries evaluate(const SparsePoly& f, const LaurentSeries& x) {
    if (x.field() != f.field()) return evaluate(f.embed_into(x.field()), x);
    LaurentSeries acc = LaurentSeries::zero(x.field());
    for (const auto& t : f.terms()) acc = acc + t.a * x.pow(t.n);
    return acc;
}

LaurentSeries evaluate_derivative(const SparsePoly& f, const LaurentSeries& x) {
    if (x.field() != f.field()) return evaluate_derivative(f.embed_into(x.field()), x);
    const auto& residue = x.field().residue;
    LaurentSeries acc = LaurentSeries::zero(x.field());
    for (const auto& t : f.terms()) {
        FqElem n_img = residue->from_int(t.n);
        if (n_img.is_zero()) continue;
        acc = acc + (t.a * x.pow(t.n - 1)).scaled(n_img);
    }
    return acc;
}

Recentered recenter(const SparsePoly& f, const LaurentSeries& r) {
    std::int64_t deg = f.degree();
    if (deg > kDenseExpansionCap) throw cap_error("dense expansion cap exceeded in recenter");
    const std::uint32_t p = f.field().residue->p;
    const SeriesField& fld = r.field();
    SparsePoly fe = f;
    if (r.field() != f.field()) fe = f.embed_into(r.field());

    std::vector<LaurentSeries> b(static_cast<std::size_t>(deg) + 1, LaurentSeries::zero(fld));
    for (const auto& t : fe.terms()) {
        // add a * C(n, j) * r^(n-j) to b[j], walking d = n - j upward so that
        // powers of r are built incrementally
        LaurentSeries rp = LaurentSeries::one(fld);
        for (std::int64_t d = 0; d <= t.n; ++d) {
            std::int64_t j = t.n - d;
            std::uint32_t c = binom_mod_p(t.n, j, p);
            if (c != 0) {
                b[static_cast<std::size_t>(j)] =
                    b[static_cast<std::size_t>(j)] + (t.a * rp).scaled(fld.residue->from_int(c));
            }
            if (d < t.n) rp = rp * r;
        }
    }

    // M: least index attaining the minimal valuation (after scaling so the
    // minimum is 0, the first unit index)
    bool have_min = false;
    std::int64_t min_v = 0;
    for (const auto& coeff : b) {
        if (coeff.is_zero()) {
            if (!coeff.exact()) throw precision_error("precision collapse in recenter");
            continue;
        }
        if (!have_min || coeff.lead_exp() < min_v) {
            min_v = coeff.lead_exp();
            have_min = true;
        }
    }
    std::int64_t M = -1;
    for (std::size_t j = 0; j < b.size(); ++j) {
        if (!b[j].is_zero() && b[j].lead_exp() == min_v) {
            M = static_cast<std::int64_t>(j);
            break;
        }
    }
    return Recentered{std::move(b), M};
}

SparsePoly transform_xe(const SparsePoly& f, std::int64_t e) {
    if (e < 1) throw domain_error("substitution exponent must be >= 1");
    std::vector<SparsePoly::Term> ts;
    for (const auto& t : f.terms()) {
        if (e != 0 && t.n > (std::int64_t(1) << 62) / e) throw cap_error("exponent overflow in transform_xe");
        ts.push_back({t.n * e, t.a});
    }
    return SparsePoly(f.field(), std::move(ts));
}

SparsePoly transform_reverse(const SparsePoly& f, std::int64_t m) {
    if (m <= f.degree()) throw domain_error("reversal exponent must exceed the degree");
    std::vector<SparsePoly::Term> ts;
    for (const auto& t : f.terms()) ts.push_back({m - t.n, t.a});
    return SparsePoly(f.field(), std::move(ts));
}

PthPowerReduced pth_power_reduce(const SparsePoly& f) {
    const std::uint32_t p = f.field().residue->p;
    const std::uint32_t res_m = f.field().residue->m;
    for (const auto& t : f.terms())
        if (!t.a.exact()) throw domain_error("pth_power_reduce requires exact coefficients");

    SparsePoly g = f;
    std::uint32_t s = 0;
    for (;;) {
        bool reducible = true;
        for (const auto& t : g.terms()) {
            if (t.n % p != 0) {
                reducible = false;
                break;
            }
            const auto& cs = t.a.coeffs();
            for (std::size_t i = 0; i < cs.size() && reducible; ++i) {
                if (cs[i].is_zero()) continue;
                std::int64_t sexp = t.a.lead_exp() + static_cast<std::int64_t>(i);
                if (sexp % p != 0) reducible = false;
            }
            if (!reducible) break;
        }
        if (!reducible) break;
        // take the p-th root termwise
        std::vector<SparsePoly::Term> ts;
        for (const auto& t : g.terms()) {
            const auto& cs = t.a.coeffs();
            std::vector<FqElem> root_cs(cs.size() / p + 1, f.field().residue->zero());
            for (std::size_t i = 0; i < cs.size(); ++i) {
                if (cs[i].is_zero()) continue;
                root_cs[i / p] = frobenius(cs[i], res_m - 1); // c^(1/p)
            }
            ts.push_back({t.n / p,
                          LaurentSeries::make(t.a.field(), t.a.lead_exp() / p, std::move(root_cs))});
        }
        g = SparsePoly(f.field(), std::move(ts));
        ++s;
    }
    return PthPowerReduced{g, s};
}

// ---------------------------------------------------------------------------
// text form (the parser module's grammar)

std::string SparsePoly::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        auto latoms = series_latoms(t.a);
        std::string xpow = t.n == 0 ? "" : (t.n == 1 ? "x" : "x^" + std::to_string(t.n));
        if (xpow.empty()) {
            if (latoms.size() == 1)
                os << latoms[0];
            else {
                os << "(";
                for (std::size_t i = 0; i < latoms.size(); ++i) os << (i ? " + " : "") << latoms[i];
                os << ")";
            }
        } else if (latoms.size() == 1 && latoms[0] == "1") {
            os << xpow;
        } else if (latoms.size() == 1) {
            os << latoms[0] << "*" << xpow;
        } else {
            os << "(";
            for (std::size_t i = 0; i < latoms.size(); ++i) os << (i ? " + " : "") << latoms[i];
            os << ")*" << xpow;
        }
    }
    return os.str();
}

} // namespace sparsezeros
