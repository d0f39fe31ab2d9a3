#include "sparsezeros/report.hpp"

#include <map>
#include <sstream>

namespace sparsezeros {

namespace {

json rat_json(const Rat& r) { return r.str(); }

json fq_json(const FqElem& c) {
    json out = json::array();
    for (auto d : c.repr()) out.push_back(d);
    return out;
}

FqElem fq_from_json(const json& j, const FieldPtr& fs) {
    std::vector<std::uint32_t> digits;
    for (const auto& d : j) digits.push_back(d.get<std::uint32_t>());
    return fs->from_repr(digits);
}

} // namespace

json series_to_json(const LaurentSeries& x) {
    json out;
    out["j"] = x.field().j();
    out["e"] = x.field().e;
    out["lead"] = x.is_zero() ? 0 : x.lead_exp();
    json cs = json::array();
    for (const auto& c : x.coeffs()) cs.push_back(fq_json(c));
    out["coeffs"] = cs;
    if (x.exact())
        out["prec"] = "exact";
    else
        out["prec"] = x.abs_prec();
    return out;
}

LaurentSeries series_from_json(const json& j, const FieldPtr& base_residue) {
    std::uint32_t jj = j.value("j", 1u);
    std::int64_t e = j.value("e", std::int64_t(1));
    SeriesField fld = series_field_ext(base_residue, jj, e);
    std::vector<FqElem> cs;
    for (const auto& c : j.at("coeffs")) cs.push_back(fq_from_json(c, fld.residue));
    std::int64_t prec = LaurentSeries::kExact;
    if (j.contains("prec") && j["prec"].is_number()) prec = j["prec"].get<std::int64_t>();
    return LaurentSeries::make(fld, j.at("lead").get<std::int64_t>(), std::move(cs), prec);
}

json poly_to_json(const SparsePoly& f) {
    json out;
    out["schema"] = "v1";
    out["p"] = f.field().residue->p;
    out["m"] = f.field().base_m;
    out["e"] = f.field().e;
    out["text"] = f.str();
    json terms = json::array();
    for (const auto& t : f.terms()) terms.push_back(json::array({t.n, series_to_json(t.a)}));
    out["terms"] = terms;
    return out;
}

SparsePoly poly_from_json(const json& j) {
    FieldPtr base = fq_make(j.at("p").get<std::uint32_t>(), j.value("m", 1u));
    std::vector<SparsePoly::Term> terms;
    SeriesField fld = series_field(base);
    for (const auto& t : j.at("terms")) {
        LaurentSeries a = series_from_json(t.at(1), base);
        fld = a.field();
        terms.push_back({t.at(0).get<std::int64_t>(), a});
    }
    return SparsePoly(fld, std::move(terms));
}

json polygon_to_json(const NewtonPolygon& np) {
    json out;
    out["schema"] = "v1";
    out["zero_root_mult"] = np.zero_root_mult;
    out["properly_ordered"] = np.properly_ordered;
    json segs = json::array();
    for (const auto& s : np.segments) {
        json seg;
        seg["endpoints"] = json::array({json::array({rat_json(s.lo_n), rat_json(s.lo_v)}),
                                        json::array({rat_json(s.hi_n), rat_json(s.hi_v)})});
        seg["slope"] = rat_json(s.slope);
        seg["g"] = rat_json(s.g);
        seg["exponents"] = s.exponents;
        seg["h_len"] = s.h_len;
        seg["N"] = s.N;
        if (s.order_pos) seg["order_pos"] = s.order_pos;
        segs.push_back(seg);
    }
    out["segments"] = segs;
    return out;
}

json root_record_to_json(const RootRecord& r) {
    json out;
    out["value"] = r.value.str();
    out["series"] = series_to_json(r.value);
    out["j"] = r.home_j;
    out["e"] = r.home_e;
    out["multiplicity"] = r.multiplicity;
    out["resolved"] = r.resolved;
    out["exact"] = r.exact;
    out["degree"] = json{{"kind", r.degree.exact ? "exact" : "upper_bound"}, {"value", r.degree.value}};
    if (r.certified_abs == INT64_MAX)
        out["certified"] = "exact";
    else
        out["certified"] = rat_json(Rat(r.certified_abs, r.home_e));
    return out;
}

json root_report(const SparsePoly& f, const std::vector<RootRecord>& recs, std::int64_t prec,
                 std::int64_t d) {
    json out;
    out["schema"] = "v1";
    out["poly"] = f.str();
    out["field"] = {{"p", f.field().residue->p}, {"m", f.field().base_m}, {"e", f.field().e}};
    out["prec"] = prec;
    json roots = json::array();
    for (const auto& r : recs) roots.push_back(root_record_to_json(r));
    out["roots"] = roots;

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < f.field().base_m; ++i) q *= f.field().residue->p;
    std::uint64_t qk = 1;
    for (std::size_t i = 0; i < f.k(); ++i) qk *= q;
    json summary;
    summary["count"] = recs.size();
    summary["k"] = f.k();
    summary["bound_qk"] = qk;
    summary["equality"] = recs.size() == qk;
    std::size_t unresolved = 0;
    for (const auto& r : recs)
        if (!r.resolved) ++unresolved;
    summary["unresolved"] = unresolved;
    if (d > 0) {
        BoundTable bt = bound_table(q, f.k(), d);
        summary["d"] = d;
        summary["mobius_bound"] = bt.total;
        json per = json::array();
        for (std::size_t i = 0; i < bt.per_degree.size(); ++i)
            per.push_back(json::array({i + 1, bt.per_degree[i]}));
        summary["mobius_per_degree"] = per;
    }
    out["summary"] = summary;
    return out;
}

json oracle_report(const SparsePoly& f, const std::vector<LaurentSeries>& found, std::int64_t prec,
                   std::int64_t w_lo, std::int64_t w_hi) {
    json out;
    out["schema"] = "v1";
    out["poly"] = f.str();
    out["prec"] = prec;
    out["window"] = json::array({w_lo, w_hi});
    json roots = json::array();
    for (const auto& x : found) roots.push_back(x.str());
    out["roots"] = roots;
    out["count"] = found.size();
    return out;
}

json bound_table_to_json(const BoundTable& bt) {
    json out;
    out["schema"] = "v1";
    out["q"] = bt.q;
    out["k"] = bt.k;
    out["d"] = bt.d;
    json per = json::array();
    for (std::size_t j = 0; j < bt.per_degree.size(); ++j)
        per.push_back(json::array({j + 1, bt.per_degree[j]}));
    out["per_degree"] = per;
    out["total"] = bt.total;
    out["enumeration_checked"] = bt.enumerated;
    return out;
}

json extremal_report_to_json(const ExtremalReport& r) {
    json out;
    out["schema"] = "v1";
    out["poly"] = r.poly;
    out["applicable"] = r.applicable;
    out["ok"] = r.ok;
    out["count"] = r.count;
    out["bound"] = r.bound;
    if (!r.per_degree.empty()) {
        json per = json::array();
        for (const auto& [j, c] : r.per_degree) per.push_back(json::array({j, c}));
        out["per_degree"] = per;
    }
    out["violations"] = r.violations;
    return out;
}

json instance_report_to_json(const InstanceReport& r) {
    json out;
    out["schema"] = "v1";
    out["index"] = r.index;
    out["poly"] = r.poly;
    out["k"] = r.k;
    out["count"] = r.count;
    out["bound"] = r.bound;
    out["equality"] = r.equality;
    out["unresolved"] = r.unresolved;
    out["ok"] = r.ok();
    out["violations"] = r.violations;
    if (!r.notes.empty()) out["notes"] = r.notes;
    out["oracle_checked"] = r.oracle_checked;
    return out;
}

json campaign_report_to_json(const VerifyReport& r) {
    json out;
    out["schema"] = "v1";
    out["spec"] = corpus_spec_to_json(r.spec);
    out["samples"] = r.instances.size();
    out["violations"] = r.violations;
    out["equality_hits"] = r.equality_hits;
    out["max_count"] = r.max_count;
    out["unresolved_total"] = r.unresolved_total;
    out["elapsed_ms"] = r.elapsed_ms;
    out["all_ok"] = r.all_ok;
    return out;
}

std::string campaign_report_csv(const VerifyReport& r) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < r.spec.m; ++i) q *= r.spec.p;
    std::ostringstream os;
    os << "q,k,samples,max_count,bound,equality_hits\n";
    // one row per k value in the sampled range
    for (std::size_t k = r.spec.k_min; k <= r.spec.k_max; ++k) {
        std::size_t samples = 0, max_count = 0, hits = 0;
        for (const auto& inst : r.instances) {
            if (inst.k != k) continue;
            ++samples;
            max_count = std::max(max_count, inst.count);
            if (inst.equality) ++hits;
        }
        std::uint64_t bound = 1;
        for (std::size_t i = 0; i < k; ++i) bound *= q;
        os << q << "," << k << "," << samples << "," << max_count << "," << bound << "," << hits
           << "\n";
    }
    return os.str();
}

json tree_report(const SparsePoly& f, const std::vector<RootRecord>& recs) {
    json out;
    out["schema"] = "v1";
    out["poly"] = f.str();
    NewtonPolygon np = proper_order(polygon(f));
    out["polygon"] = polygon_to_json(np);
    json trees = json::array();
    const SeriesField& K = f.field();
    std::map<std::string, std::vector<LaurentSeries>> by_val;
    for (const auto& r : recs) {
        if (r.value.is_zero()) continue;
        by_val[Rat(r.value.lead_exp(), K.e).str()].push_back(r.value);
    }
    for (const auto& seg : np.segments) {
        auto it = by_val.find(seg.g.str());
        if (it == by_val.end()) continue;
        std::map<std::uint32_t, std::vector<LaurentSeries>> cosets;
        for (const auto& v : it->second) cosets[v.leading_coeff().packed()].push_back(v);
        for (auto& [lead, members] : cosets) {
            DiskTree t = phi_label(build_tree(members), seg.g);
            json tj;
            tj["g"] = seg.g.str();
            tj["u"] = seg.order_pos;
            tj["size"] = members.size();
            tj["length"] = tree_length(t);
            tj["dot"] = tree_to_dot(t);
            trees.push_back(tj);
        }
    }
    out["trees"] = trees;
    // Phi images over the full root set
    if (f.k() >= 1) {
        std::vector<LaurentSeries> values;
        for (const auto& r : recs) values.push_back(r.value);
        auto images = phi_map(values, np, f.k());
        json phis = json::array();
        for (std::size_t i = 0; i < values.size(); ++i)
            phis.push_back(json::array({values[i].str(), images[i].str()}));
        out["phi"] = phis;
    }
    return out;
}

CorpusSpec corpus_spec_from_json(const json& j) {
    CorpusSpec spec;
    if (j.contains("q")) {
        auto [p, m] = prime_power_split(j["q"].get<std::uint64_t>());
        spec.p = p;
        spec.m = m;
    }
    spec.p = j.value("p", spec.p);
    spec.m = j.value("m", spec.m);
    spec.k_min = j.value("k_min", spec.k_min);
    spec.k_max = j.value("k_max", spec.k_max);
    spec.exp_cap = j.value("exp_cap", spec.exp_cap);
    spec.coeff_lo = j.value("coeff_lo", spec.coeff_lo);
    spec.coeff_hi = j.value("coeff_hi", spec.coeff_hi);
    spec.samples = j.value("samples", spec.samples);
    spec.seed = j.value("seed", spec.seed);
    spec.prec = j.value("prec", spec.prec);
    spec.oracle_every = j.value("oracle_every", spec.oracle_every);
    spec.oracle_prec = j.value("oracle_prec", spec.oracle_prec);
    if (j.contains("oracle_window")) {
        spec.oracle_lo = j["oracle_window"].at(0).get<std::int64_t>();
        spec.oracle_hi = j["oracle_window"].at(1).get<std::int64_t>();
    }
    spec.distance_centers = j.value("distance_centers", spec.distance_centers);
    spec.check_trees = j.value("check_trees", spec.check_trees);
    spec.check_phi = j.value("check_phi", spec.check_phi);
    spec.check_recenter_rank = j.value("check_recenter_rank", spec.check_recenter_rank);
    spec.check_transforms = j.value("check_transforms", spec.check_transforms);
    spec.jobs = j.value("jobs", spec.jobs);
    return spec;
}

json corpus_spec_to_json(const CorpusSpec& spec) {
    json out;
    out["p"] = spec.p;
    out["m"] = spec.m;
    out["k_min"] = spec.k_min;
    out["k_max"] = spec.k_max;
    out["exp_cap"] = spec.exp_cap;
    out["coeff_lo"] = spec.coeff_lo;
    out["coeff_hi"] = spec.coeff_hi;
    out["samples"] = spec.samples;
    out["seed"] = spec.seed;
    out["prec"] = spec.prec;
    out["oracle_every"] = spec.oracle_every;
    out["oracle_prec"] = spec.oracle_prec;
    out["oracle_window"] = json::array({spec.oracle_lo, spec.oracle_hi});
    out["distance_centers"] = spec.distance_centers;
    out["check_trees"] = spec.check_trees;
    out["check_phi"] = spec.check_phi;
    out["check_recenter_rank"] = spec.check_recenter_rank;
    out["check_transforms"] = spec.check_transforms;
    out["jobs"] = spec.jobs;
    return out;
}

} // namespace sparsezeros
