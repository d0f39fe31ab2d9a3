#include "sparsezeros/extremal.hpp"

#include <algorithm>
#include <map>

namespace sparsezeros {

SeriesField SubspaceSpec::construction_field() const {
    if (label_field->m % base.residue->m != 0)
        throw domain_error("label field does not contain the residue field of K");
    return SeriesField{label_field, base.e, base.base_m};
}

SparsePoly subspace_poly(const SubspaceSpec& spec) {
    if (spec.base.e != 1) throw domain_error("subspace polynomials are built over the unramified base");
    SeriesField L = spec.construction_field();
    const std::uint64_t Q = spec.label_field->q;
    const std::uint32_t p = spec.label_field->p;
    std::uint32_t t = 0; // Q = p^t
    for (std::uint64_t x = 1; x < Q; x *= p) ++t;

    std::uint64_t deg = 1;
    for (std::size_t i = 0; i < spec.basis.size(); ++i) {
        deg *= Q;
        if (deg > kSubspaceDegreeCap) throw cap_error("subspace polynomial degree exceeds the cap");
    }

    // f_{} = x
    SparsePoly f(L, {{1, LaurentSeries::one(L)}});
    for (const auto& w_raw : spec.basis) {
        LaurentSeries w = w_raw.field() == L ? w_raw : w_raw.embed_into(L);
        if (!w.exact()) throw domain_error("basis elements must be exact");
        LaurentSeries fw = evaluate(f, w);
        if (fw.is_exact_zero())
            throw domain_error("dependent basis: an element lies in the span of the previous ones");
        // f <- f^Q - f(w)^(Q-1) * f
        SparsePoly fQ = f.pth_power(t);
        LaurentSeries fw_pow = fw.pow(static_cast<std::int64_t>(Q) - 1);
        std::vector<SparsePoly::Term> terms = fQ.terms();
        for (const auto& term : f.terms()) terms.push_back({term.n, -(term.a * fw_pow)});
        f = SparsePoly(L, std::move(terms));
    }

    if (!spec.scale.is_zero()) {
        LaurentSeries c = spec.scale.field() == L ? spec.scale : spec.scale.embed_into(L);
        std::vector<SparsePoly::Term> terms;
        for (const auto& term : f.terms()) terms.push_back({term.n, term.a * c});
        f = SparsePoly(L, std::move(terms));
    } else {
        throw domain_error("scale must be nonzero");
    }

    // support must be exactly {1, Q, Q^2, ..., Q^k}
    const auto& ts = f.terms();
    if (ts.size() != spec.basis.size() + 1)
        throw check_error("subspace polynomial has wrong sparsity", f.str());
    std::uint64_t expect = 1;
    for (const auto& term : ts) {
        if (term.n != static_cast<std::int64_t>(expect))
            throw check_error("subspace polynomial support is not the |F|-power ladder", f.str());
        expect *= Q;
    }
    return f;
}

std::vector<LaurentSeries> enumerate_subspace(const SubspaceSpec& spec) {
    SeriesField L = spec.construction_field();
    std::vector<LaurentSeries> basis;
    for (const auto& b : spec.basis) basis.push_back(b.field() == L ? b : b.embed_into(L));
    std::vector<LaurentSeries> out;
    const std::uint64_t Q = spec.label_field->q;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) total *= Q;
    out.reserve(total);
    for (std::uint64_t code = 0; code < total; ++code) {
        LaurentSeries acc = LaurentSeries::zero(L);
        std::uint64_t c = code;
        for (const auto& b : basis) {
            FqElem lambda(spec.label_field.get(), static_cast<std::uint32_t>(c % Q));
            c /= Q;
            acc = acc + b.scaled(lambda);
        }
        out.push_back(std::move(acc));
    }
    return out;
}

namespace {

bool contains_series(const std::vector<LaurentSeries>& set, const LaurentSeries& x) {
    for (const auto& s : set)
        if (s == x) return true;
    return false;
}

} // namespace

ExtremalReport verify_sharpness_thm1(const SubspaceSpec& spec, std::int64_t prec) {
    ExtremalReport rep;
    if (spec.label_field.get() != spec.base.residue.get())
        throw domain_error("count-bound sharpness requires F = the residue field of K");
    SparsePoly f = subspace_poly(spec);
    rep.poly = f.str();
    std::uint64_t qk = 1;
    for (std::size_t i = 0; i < spec.basis.size(); ++i) qk *= spec.label_field->q;
    rep.bound = qk;

    auto recs = roots_in(f, spec.base, prec);
    rep.count = recs.size();
    auto V = enumerate_subspace(spec);
    if (rep.count != qk)
        rep.violations.push_back("expected " + std::to_string(qk) + " roots, found " +
                                 std::to_string(rep.count));
    for (const auto& rec : recs) {
        if (!rec.exact) {
            rep.violations.push_back("non-exact root " + rec.value.str());
            continue;
        }
        if (!contains_series(V, rec.value))
            rep.violations.push_back("root " + rec.value.str() + " is not a subspace element");
    }
    rep.ok = rep.violations.empty();
    return rep;
}

ExtremalReport verify_sharpness_thm2(const SubspaceSpec& spec, std::int64_t d, std::int64_t prec) {
    ExtremalReport rep;
    SeriesField L = spec.construction_field();
    // F must contain F_{q^i} for i <= d
    for (std::int64_t i = 1; i <= d; ++i)
        if (spec.label_field->m % (spec.base.residue->m * i) != 0)
            throw domain_error("label field misses F_{q^" + std::to_string(i) + "}");
    SparsePoly fL = subspace_poly(spec);
    // Galois stability: the coefficients must lie in K
    SparsePoly f = [&] {
        std::vector<SparsePoly::Term> ts;
        for (const auto& term : fL.terms()) {
            if (term.a.coeff_subfield_degree() != 1)
                throw domain_error("V is not Galois-stable: coefficients leave K");
            ts.push_back({term.n, term.a.project_into(spec.base)});
        }
        return SparsePoly(spec.base, std::move(ts));
    }();
    rep.poly = f.str();

    BoundTable bt = bound_table(spec.base.base_q(), spec.basis.size(), d);
    rep.bound = bt.total;

    auto recs = roots_deg_le_d(f, d, prec);
    rep.count = recs.size();
    std::map<std::int64_t, std::uint64_t> by_degree;
    for (const auto& rec : recs) {
        if (!rec.exact) rep.violations.push_back("non-exact root " + rec.value.str());
        ++by_degree[rec.degree.value];
    }
    for (std::int64_t j = 1; j <= d; ++j) {
        std::uint64_t found = by_degree.count(j) ? by_degree[j] : 0;
        rep.per_degree.emplace_back(j, found);
        std::uint64_t want = bt.per_degree[static_cast<std::size_t>(j - 1)];
        if (found != want)
            rep.violations.push_back("degree " + std::to_string(j) + ": found " +
                                     std::to_string(found) + ", Moebius count " + std::to_string(want));
    }
    if (rep.count != bt.total)
        rep.violations.push_back("total " + std::to_string(rep.count) + " != bound " +
                                 std::to_string(bt.total));
    rep.ok = rep.violations.empty();
    return rep;
}

ExtremalReport verify_xe_variant(const SubspaceSpec& spec, std::int64_t e, std::int64_t prec) {
    ExtremalReport rep;
    if (e < 1) throw domain_error("substitution exponent must be >= 1");
    // hypothesis: pairwise distinct valuations, all divisible by e
    std::vector<std::int64_t> vals;
    for (const auto& b : spec.basis) {
        Val v = b.val();
        if (!v.finite() || !v.value.is_integer()) {
            rep.applicable = false;
            break;
        }
        vals.push_back(v.value.num);
    }
    if (rep.applicable) {
        auto sorted = vals;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) rep.applicable = false;
        for (std::int64_t v : vals)
            if (v % e != 0) rep.applicable = false;
    }

    SparsePoly f = subspace_poly(spec);
    SparsePoly fe = transform_xe(f, e);
    rep.poly = fe.str();
    std::uint64_t qk = 1;
    for (std::size_t i = 0; i < spec.basis.size(); ++i) qk *= spec.label_field->q;
    rep.bound = qk;

    SeriesField L = spec.construction_field();
    auto recs = roots_in(fe, L, prec);
    rep.count = recs.size();
    if (rep.applicable && rep.count != qk)
        rep.violations.push_back("expected " + std::to_string(qk) + " roots of f(x^e), found " +
                                 std::to_string(rep.count));
    rep.ok = rep.violations.empty();
    return rep;
}

} // namespace sparsezeros
