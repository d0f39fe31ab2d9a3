// Command-line surface for the sparse-zeros library: polygon analysis, root
// finding and counting, brute-force oracles, extremal constructions, bound
// tables and verification campaigns.
//
// Exit codes: 0 all checks passed, 1 usage/parse error, 2 a check failed
// (a reproducer file is written), 3 a resource cap was exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sparsezeros/parser.hpp"
#include "sparsezeros/report.hpp"

using namespace sparsezeros;

namespace {

struct FieldFlags {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint64_t q = 0;
    std::int64_t e = 1;

    SeriesField resolve() const {
        std::uint32_t pp = p, mm = m;
        if (q != 0) {
            auto [qp, qm] = prime_power_split(q);
            if (p != 0 && p != qp) throw domain_error("--p and --q disagree");
            if (m != 0 && m != qm) throw domain_error("--m and --q disagree");
            pp = qp;
            mm = qm;
        }
        if (pp == 0) pp = 2;
        if (mm == 0) mm = 1;
        SeriesField base = series_field(fq_make(pp, mm));
        if (e > 1) base.e = e;
        return base;
    }
};

void add_field_flags(CLI::App* cmd, FieldFlags& ff) {
    cmd->add_option("--p", ff.p, "characteristic of the residue field");
    cmd->add_option("--m", ff.m, "extension degree of the residue field over F_p");
    cmd->add_option("--q", ff.q, "residue field size (prime power; alternative to --p/--m)");
    cmd->add_option("--e", ff.e, "ramification index of the working field");
}

std::string read_input(const std::string& expr, const std::string& file) {
    if (!expr.empty() && !file.empty()) throw domain_error("give either an expression or --file");
    if (!expr.empty()) return expr;
    if (file.empty()) throw domain_error("missing input expression");
    std::ifstream in(file);
    if (!in) throw domain_error("cannot open " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SparsePoly load_poly(const std::string& raw, const SeriesField& fld) {
    std::string s = raw;
    auto first = s.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && s[first] == '{') {
        return poly_from_json(json::parse(s));
    }
    return parse_poly(s, fld);
}

std::string write_reproducer(const std::string& poly_text, const std::string& tag) {
    std::string path = "sparsezeros_reproducer_" + tag + ".txt";
    std::ofstream out(path);
    out << poly_text << "\n";
    return path;
}

int emit_and_exit(const json& j, bool ok, const std::string& reproducer = {}) {
    std::cout << j.dump(2) << "\n";
    if (!ok && !reproducer.empty())
        std::cerr << "reproducer written to " << reproducer << "\n";
    return ok ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact root counting for sparse polynomials over F_q((T))"};
    app.require_subcommand(1);

    // --- polygon ---
    std::string expr, file;
    FieldFlags ff;
    auto* cmd_polygon = app.add_subcommand("polygon", "Newton polygon, N_j and proper order");
    cmd_polygon->add_option("expr", expr, "polynomial in the text grammar");
    cmd_polygon->add_option("--file", file, "read the polynomial from a file");
    add_field_flags(cmd_polygon, ff);

    // --- roots ---
    std::int64_t prec = 16, deg = 0;
    bool as_text = false;
    auto* cmd_roots = app.add_subcommand("roots", "distinct zeros in K or of bounded degree");
    cmd_roots->add_option("expr", expr);
    cmd_roots->add_option("--file", file);
    add_field_flags(cmd_roots, ff);
    cmd_roots->add_option("--prec", prec, "absolute precision target");
    cmd_roots->add_option("--deg", deg, "search zeros of degree <= deg over K");
    cmd_roots->add_flag("--text", as_text, "print one root per line instead of JSON");

    // --- oracle ---
    std::string window = "-3:4";
    std::int64_t oprec = 8;
    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force enumeration root set");
    cmd_oracle->add_option("expr", expr);
    cmd_oracle->add_option("--file", file);
    add_field_flags(cmd_oracle, ff);
    cmd_oracle->add_option("--prec", oprec, "digits per candidate");
    cmd_oracle->add_option("--window", window, "valuation window lo:hi");

    // --- extremal ---
    std::string basis_opt = "1,T", label_opt, scale_opt = "1";
    std::int64_t xd = 0, xe = 0;
    auto* cmd_extremal = app.add_subcommand("extremal", "equality-attaining subspace polynomials");
    add_field_flags(cmd_extremal, ff);
    cmd_extremal->add_option("--basis", basis_opt, "comma-separated basis series");
    cmd_extremal->add_option("--F", label_opt, "label field, e.g. q^2 or 16");
    cmd_extremal->add_option("--c", scale_opt, "nonzero scale series");
    cmd_extremal->add_option("--d", xd, "verify the degree-d sharpness");
    cmd_extremal->add_option("--xe", xe, "verify the f(x^e) variant");
    cmd_extremal->add_option("--prec", prec);

    // --- tree ---
    bool as_dot = false;
    auto* cmd_tree = app.add_subcommand("tree", "disk tree of the K-roots with phi labels");
    cmd_tree->add_option("expr", expr);
    cmd_tree->add_option("--file", file);
    add_field_flags(cmd_tree, ff);
    cmd_tree->add_option("--prec", prec);
    cmd_tree->add_flag("--dot", as_dot, "emit DOT only");

    // --- bound ---
    std::uint64_t bq = 2;
    std::size_t bk = 1;
    std::int64_t bd = 1;
    auto* cmd_bound = app.add_subcommand("bound", "Moebius-sum degree-d bound table");
    cmd_bound->add_option("--q", bq)->required();
    cmd_bound->add_option("--k", bk)->required();
    cmd_bound->add_option("--d", bd)->required();

    // --- campaign ---
    std::string config;
    std::size_t jobs = 0;
    std::string out_jsonl, out_csv;
    auto* cmd_campaign = app.add_subcommand("campaign", "random-corpus verification campaign");
    cmd_campaign->add_option("--config", config, "CorpusSpec JSON file")->required();
    cmd_campaign->add_option("--jobs", jobs, "parallel workers");
    cmd_campaign->add_option("--jsonl", out_jsonl, "write per-instance JSON lines here");
    cmd_campaign->add_option("--csv", out_csv, "write the summary CSV here");

    // --- verify ---
    auto* cmd_verify = app.add_subcommand("verify", "run every campaign check on one polynomial");
    cmd_verify->add_option("expr", expr);
    cmd_verify->add_option("--file", file);
    add_field_flags(cmd_verify, ff);
    cmd_verify->add_option("--prec", prec);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_polygon->parsed()) {
            SeriesField K = ff.resolve();
            SparsePoly f = load_poly(read_input(expr, file), K);
            NewtonPolygon np = proper_order(polygon(f));
            json out = polygon_to_json(np);
            out["poly"] = f.str();
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (cmd_roots->parsed()) {
            SeriesField K = ff.resolve();
            SparsePoly f = load_poly(read_input(expr, file), K);
            std::vector<RootRecord> recs =
                deg > 0 ? roots_deg_le_d(f, deg, prec) : roots_in(f, K, prec * K.e);
            if (as_text) {
                for (const auto& r : recs)
                    std::cout << r.value.str() << "   (j=" << r.home_j << ", e=" << r.home_e
                              << ", mult=" << r.multiplicity << (r.exact ? ", exact" : "")
                              << (r.resolved ? "" : ", unresolved") << ")\n";
                return 0;
            }
            std::cout << root_report(f, recs, prec, deg).dump(2) << "\n";
            return 0;
        }
        if (cmd_oracle->parsed()) {
            SeriesField K = ff.resolve();
            SparsePoly f = load_poly(read_input(expr, file), K);
            auto colon = window.find(':');
            if (colon == std::string::npos) throw domain_error("--window expects lo:hi");
            std::int64_t lo = std::stoll(window.substr(0, colon));
            std::int64_t hi = std::stoll(window.substr(colon + 1));
            auto found = oracle_roots(f, oprec, lo, hi);
            std::cout << oracle_report(f, found, oprec, lo, hi).dump(2) << "\n";
            return 0;
        }
        if (cmd_extremal->parsed()) {
            SeriesField K = ff.resolve();
            SubspaceSpec spec;
            spec.base = K;
            // label field
            FieldPtr label = K.residue;
            if (!label_opt.empty()) {
                std::uint64_t qF;
                if (label_opt.rfind("q^", 0) == 0) {
                    std::uint32_t pow = static_cast<std::uint32_t>(std::stoul(label_opt.substr(2)));
                    label = fq_make(K.residue->p, K.residue->m * pow);
                    qF = 0;
                    (void)qF;
                } else {
                    auto [lp, lm] = prime_power_split(std::stoull(label_opt));
                    if (lp != K.residue->p) throw domain_error("label field has the wrong characteristic");
                    label = fq_make(lp, lm);
                }
            }
            spec.label_field = label;
            SeriesField L{label, K.e, K.base_m};
            std::stringstream bs(basis_opt);
            std::string tok;
            while (std::getline(bs, tok, ',')) spec.basis.push_back(parse_series(tok, L));
            spec.scale = parse_series(scale_opt, L);

            json out;
            out["schema"] = "v1";
            bool ok = true;
            if (xd > 0) {
                ExtremalReport rep = verify_sharpness_thm2(spec, xd, prec);
                out["thm2"] = extremal_report_to_json(rep);
                ok = ok && rep.ok;
            } else if (xe > 0) {
                ExtremalReport rep = verify_xe_variant(spec, xe, prec * K.e);
                out["xe"] = extremal_report_to_json(rep);
                ok = ok && rep.ok;
            } else {
                ExtremalReport rep = verify_sharpness_thm1(spec, prec * K.e);
                out["thm1"] = extremal_report_to_json(rep);
                ok = ok && rep.ok;
            }
            std::string repro;
            if (!ok) repro = write_reproducer(out.dump(2), "extremal");
            return emit_and_exit(out, ok, repro);
        }
        if (cmd_tree->parsed()) {
            SeriesField K = ff.resolve();
            SparsePoly f = load_poly(read_input(expr, file), K);
            auto recs = roots_in(f, K, prec * K.e);
            json out = tree_report(f, recs);
            if (as_dot) {
                for (const auto& t : out["trees"]) std::cout << t["dot"].get<std::string>() << "\n";
            } else {
                std::cout << out.dump(2) << "\n";
            }
            return 0;
        }
        if (cmd_bound->parsed()) {
            BoundTable bt = bound_table(bq, bk, bd);
            std::cout << bound_table_to_json(bt).dump(2) << "\n";
            return 0;
        }
        if (cmd_campaign->parsed()) {
            std::ifstream in(config);
            if (!in) throw domain_error("cannot open " + config);
            json cj = json::parse(in);
            CorpusSpec spec = corpus_spec_from_json(cj);
            if (jobs > 0) spec.jobs = jobs;
            VerifyReport rep = run_campaign(spec);
            if (!out_jsonl.empty()) {
                std::ofstream jl(out_jsonl);
                for (const auto& inst : rep.instances) jl << instance_report_to_json(inst).dump() << "\n";
            }
            if (!out_csv.empty()) {
                std::ofstream cs(out_csv);
                cs << campaign_report_csv(rep);
            }
            json out = campaign_report_to_json(rep);
            std::string repro;
            if (!rep.all_ok) {
                for (const auto& inst : rep.instances)
                    if (!inst.ok()) {
                        repro = write_reproducer(inst.poly, "campaign_" + std::to_string(inst.index));
                        break;
                    }
            }
            return emit_and_exit(out, rep.all_ok, repro);
        }
        if (cmd_verify->parsed()) {
            SeriesField K = ff.resolve();
            SparsePoly f = load_poly(read_input(expr, file), K);
            CorpusSpec opts;
            opts.p = K.residue->p;
            opts.m = K.base_m;
            opts.prec = prec;
            opts.oracle_every = 1;
            opts.check_transforms = true;
            InstanceReport rep = verify_instance(f, opts, 0);
            json out = instance_report_to_json(rep);
            std::string repro;
            if (!rep.ok()) repro = write_reproducer(rep.poly, "verify");
            return emit_and_exit(out, rep.ok(), repro);
        }
    } catch (const cap_error& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const check_error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        if (!e.reproducer().empty())
            std::cerr << "reproducer written to " << write_reproducer(e.reproducer(), "check") << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
