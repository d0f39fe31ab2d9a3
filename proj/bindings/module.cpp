#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sparsezeros/parser.hpp"
#include "sparsezeros/report.hpp"

namespace py = pybind11;
using namespace sparsezeros;

namespace {

SeriesField field_for(std::uint64_t q, std::int64_t e) {
    auto [p, m] = prime_power_split(q);
    SeriesField K = series_field(fq_make(p, m));
    K.e = e;
    return K;
}

std::string roots_json(const std::string& expr, std::uint64_t q, std::int64_t e, std::int64_t prec,
                       std::int64_t deg) {
    SeriesField K = field_for(q, e);
    SparsePoly f = parse_poly(expr, K);
    auto recs = deg > 0 ? roots_deg_le_d(f, deg, prec) : roots_in(f, K, prec * K.e);
    return root_report(f, recs, prec, deg).dump();
}

std::string polygon_json(const std::string& expr, std::uint64_t q, std::int64_t e) {
    SeriesField K = field_for(q, e);
    SparsePoly f = parse_poly(expr, K);
    json out = polygon_to_json(proper_order(polygon(f)));
    out["poly"] = f.str();
    return out.dump();
}

std::string oracle_json(const std::string& expr, std::uint64_t q, std::int64_t prec, std::int64_t lo,
                        std::int64_t hi) {
    SeriesField K = field_for(q, 1);
    SparsePoly f = parse_poly(expr, K);
    return oracle_report(f, oracle_roots(f, prec, lo, hi), prec, lo, hi).dump();
}

std::string bound_json(std::uint64_t q, std::size_t k, std::int64_t d) {
    return bound_table_to_json(bound_table(q, k, d)).dump();
}

std::string verify_json(const std::string& expr, std::uint64_t q, std::int64_t prec) {
    SeriesField K = field_for(q, 1);
    SparsePoly f = parse_poly(expr, K);
    CorpusSpec opts;
    opts.p = K.residue->p;
    opts.m = K.base_m;
    opts.prec = prec;
    opts.oracle_every = 1;
    opts.check_transforms = true;
    return instance_report_to_json(verify_instance(f, opts, 0)).dump();
}

std::string subspace_json(const std::string& basis_csv, std::uint64_t q, std::uint64_t F,
                          const std::string& scale, std::int64_t d, std::int64_t prec) {
    SeriesField K = field_for(q, 1);
    auto [Fp, Fm] = prime_power_split(F == 0 ? q : F);
    if (Fp != K.residue->p) throw domain_error("label field has the wrong characteristic");
    SubspaceSpec spec;
    spec.base = K;
    spec.label_field = fq_make(Fp, Fm);
    SeriesField L{spec.label_field, 1, K.base_m};
    std::stringstream ss(basis_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) spec.basis.push_back(parse_series(tok, L));
    spec.scale = parse_series(scale.empty() ? "1" : scale, L);
    json out;
    out["poly"] = subspace_poly(spec).str();
    if (d > 0)
        out["report"] = extremal_report_to_json(verify_sharpness_thm2(spec, d, prec));
    else
        out["report"] = extremal_report_to_json(verify_sharpness_thm1(spec, prec));
    return out.dump();
}

std::string campaign_json(const std::string& spec_json) {
    CorpusSpec spec = corpus_spec_from_json(json::parse(spec_json));
    VerifyReport rep = run_campaign(spec);
    json out = campaign_report_to_json(rep);
    json insts = json::array();
    for (const auto& inst : rep.instances)
        if (!inst.ok()) insts.push_back(instance_report_to_json(inst));
    out["failures"] = insts;
    return out.dump();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact root counting for sparse polynomials over F_q((T))";

    m.def("roots", &roots_json, py::arg("expr"), py::arg("q") = 2, py::arg("e") = 1,
          py::arg("prec") = 16, py::arg("deg") = 0,
          "JSON root report for a polynomial in the text grammar");
    m.def("polygon", &polygon_json, py::arg("expr"), py::arg("q") = 2, py::arg("e") = 1,
          "JSON Newton polygon report (properly ordered)");
    m.def("oracle", &oracle_json, py::arg("expr"), py::arg("q") = 2, py::arg("prec") = 8,
          py::arg("lo") = -3, py::arg("hi") = 4, "brute-force enumeration root set");
    m.def("bound", &bound_json, py::arg("q"), py::arg("k"), py::arg("d"),
          "Moebius-sum degree-d bound table");
    m.def("verify", &verify_json, py::arg("expr"), py::arg("q") = 2, py::arg("prec") = 16,
          "run every campaign check on one polynomial");
    m.def("subspace", &subspace_json, py::arg("basis"), py::arg("q") = 2, py::arg("F") = 0,
          py::arg("scale") = "1", py::arg("d") = 0, py::arg("prec") = 16,
          "construct and verify an equality-attaining subspace polynomial");
    m.def("campaign", &campaign_json, py::arg("spec"),
          "run a verification campaign from a CorpusSpec JSON string");

    py::register_exception<precision_error>(m, "PrecisionError");
    py::register_exception<cap_error>(m, "CapError");
    py::register_exception<check_error>(m, "CheckError");
}
