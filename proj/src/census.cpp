#include "sparsezeros/census.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace sparsezeros {

int mobius(std::int64_t n) {
    if (n < 1) throw domain_error("mobius is defined for n >= 1");
    if (n > 1'000'000'000'000'000LL) throw cap_error("mobius factorization cap exceeded");
    int factors = 0;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        n /= d;
        if (n % d == 0) return 0; // squarefull
        ++factors;
    }
    if (n > 1) ++factors;
    return factors % 2 == 0 ? 1 : -1;
}

std::pair<std::uint32_t, std::uint32_t> prime_power_split(std::uint64_t q) {
    if (q < 2) throw domain_error("q must be a prime power >= 2");
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    std::uint32_t m = 0;
    std::uint64_t acc = 1;
    while (acc < q) {
        acc *= p;
        ++m;
    }
    if (acc != q) throw domain_error(std::to_string(q) + " is not a prime power");
    return {static_cast<std::uint32_t>(p), m};
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t e) {
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        acc *= base;
        if (acc > UINT64_MAX) throw cap_error("overflow in bound computation");
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t enum_cap() {
    if (const char* env = std::getenv("SPARSEZEROS_MAX_ENUM")) {
        char* end = nullptr;
        std::uint64_t v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return std::uint64_t(1) << 22;
}

} // namespace

BoundTable bound_table(std::uint64_t q, std::size_t k, std::int64_t d) {
    if (q < 2 || d < 1) throw domain_error("bound_table requires q >= 2, d >= 1");
    BoundTable bt;
    bt.q = q;
    bt.k = k;
    bt.d = d;
    unsigned __int128 total = 0;
    for (std::int64_t j = 1; j <= d; ++j) {
        __int128 cj = 0;
        for (std::int64_t i = 1; i <= j; ++i) {
            if (j % i != 0) continue;
            __int128 term = checked_pow(q, static_cast<std::uint64_t>(i) * k);
            cj += static_cast<__int128>(mobius(j / i)) * term;
        }
        if (cj < 0) throw check_error("negative Moebius count c_" + std::to_string(j));
        if (cj > static_cast<__int128>(UINT64_MAX)) throw cap_error("overflow in bound computation");
        bt.per_degree.push_back(static_cast<std::uint64_t>(cj));
        total += static_cast<unsigned __int128>(cj);
    }
    if (total > UINT64_MAX) throw cap_error("overflow in bound computation");
    bt.total = static_cast<std::uint64_t>(total);

    // enumeration cross-check over F_{q^L}[X]_{<k}, L = lcm(1..d)
    std::int64_t L = 1;
    for (std::int64_t j = 2; j <= d; ++j) L = std::lcm(L, j);
    auto [p, m] = prime_power_split(q);
    unsigned __int128 space = 1;
    bool enumerable = static_cast<std::uint64_t>(m) * L <= 20; // field cap
    if (enumerable) {
        std::uint64_t qL = checked_pow(q, static_cast<std::uint64_t>(L));
        for (std::size_t i = 0; i < k && enumerable; ++i) {
            space *= qL;
            if (space > enum_cap()) enumerable = false;
        }
    }
    if (enumerable && k >= 1) {
        FieldPtr big = fq_make(p, m * static_cast<std::uint32_t>(L));
        std::vector<std::uint64_t> by_degree(static_cast<std::size_t>(L) + 1, 0);
        std::vector<std::uint32_t> idx(k, 0);
        const std::uint32_t qL32 = big->q;
        for (;;) {
            std::uint32_t j0 = 1;
            for (std::size_t c = 0; c < k; ++c) {
                FqElem x(big.get(), idx[c]);
                j0 = std::lcm(j0, subfield_degree(x, m));
            }
            if (j0 <= L) ++by_degree[j0];
            // odometer
            std::size_t c = 0;
            while (c < k) {
                if (++idx[c] < qL32) break;
                idx[c] = 0;
                ++c;
            }
            if (c == k) break;
        }
        for (std::int64_t j = 1; j <= d; ++j) {
            if (by_degree[static_cast<std::size_t>(j)] != bt.per_degree[static_cast<std::size_t>(j - 1)])
                throw check_error("bound_table enumeration mismatch at degree " + std::to_string(j));
        }
        bt.enumerated = true;
    }
    return bt;
}

// ---------------------------------------------------------------------------
// corpus sampling

SparsePoly sample_instance(const CorpusSpec& spec, std::size_t index) {
    std::mt19937_64 rng(spec.seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
    FieldPtr res = fq_make(spec.p, spec.m);
    SeriesField K = series_field(res);
    std::uniform_int_distribution<std::size_t> kd(spec.k_min, spec.k_max);
    std::size_t k = kd(rng);

    std::set<std::int64_t> exps;
    std::uniform_int_distribution<std::int64_t> ed(0, spec.exp_cap);
    while (exps.size() < k + 1) exps.insert(ed(rng));

    std::uniform_int_distribution<std::int64_t> wd(spec.coeff_lo, spec.coeff_hi);
    std::uniform_int_distribution<std::uint32_t> cd(0, res->q - 1);
    std::uniform_int_distribution<std::uint32_t> cnz(1, res->q - 1);

    std::vector<SparsePoly::Term> terms;
    for (std::int64_t n : exps) {
        std::int64_t lead = wd(rng);
        std::vector<FqElem> cs;
        cs.emplace_back(res.get(), cnz(rng));
        for (std::int64_t w = lead + 1; w <= spec.coeff_hi; ++w) cs.emplace_back(res.get(), cd(rng));
        terms.push_back({n, LaurentSeries::make(K, lead, std::move(cs))});
    }
    return SparsePoly(K, std::move(terms));
}

// ---------------------------------------------------------------------------
// the per-instance verifier

namespace {

std::string series_key(const LaurentSeries& x) {
    std::ostringstream os;
    if (x.is_zero()) return "0";
    os << x.lead_exp() << ":";
    for (const auto& c : x.coeffs()) os << c.packed() << ",";
    return os.str();
}

struct SegmentInfo {
    Rat g;
    std::size_t u = 0;
    std::int64_t h_len = 0;
};

} // namespace

InstanceReport verify_instance(const SparsePoly& f, const CorpusSpec& opts, std::size_t index) {
    InstanceReport rep;
    rep.index = index;
    rep.poly = f.str();
    rep.k = f.k();
    const SeriesField& K = f.field();
    const std::uint64_t q = K.residue->q;
    rep.bound = checked_pow(q, rep.k);

    std::mt19937_64 rng(opts.seed ^ (0xC2B2AE3D27D4EB4FULL * (index + 1)));

    std::vector<RootRecord> recs;
    try {
        recs = roots_in(f, K, opts.prec * K.e);
    } catch (const std::exception& e) {
        rep.violations.push_back(std::string("root search failed: ") + e.what());
        return rep;
    }
    rep.count = recs.size();
    rep.equality = rep.count == rep.bound;
    for (const auto& r : recs)
        if (!r.resolved) ++rep.unresolved;

    if (rep.count > rep.bound)
        rep.violations.push_back("count bound violated: " + std::to_string(rep.count) + " > q^k = " +
                                 std::to_string(rep.bound));

    NewtonPolygon np;
    try {
        np = proper_order(polygon(f));
    } catch (const std::exception& e) {
        rep.violations.push_back(std::string("polygon failed: ") + e.what());
        return rep;
    }

    // --- valuation consistency and the per-valuation count Z_u ---
    std::map<std::string, SegmentInfo> segs; // keyed by g
    for (const auto& s : np.segments) segs[s.g.str()] = SegmentInfo{s.g, s.order_pos, s.h_len};
    std::map<std::string, std::vector<const RootRecord*>> by_val;
    for (const auto& r : recs) {
        if (r.value.is_zero()) continue;
        Rat g(r.value.lead_exp(), K.e);
        if (!segs.count(g.str())) {
            rep.violations.push_back("root valuation " + g.str() + " is not a polygon slope");
            continue;
        }
        by_val[g.str()].push_back(&r);
    }
    for (auto& [gs, roots_at] : by_val) {
        const auto& info = segs[gs];
        std::int64_t mult_total = 0;
        for (auto* r : roots_at) mult_total += r->multiplicity;
        if (mult_total > info.h_len)
            rep.violations.push_back("multiplicity " + std::to_string(mult_total) +
                                     " exceeds segment length " + std::to_string(info.h_len) +
                                     " at g = " + gs);
        std::uint64_t zu_bound =
            (q - 1) * checked_pow(q, rep.k >= info.u ? rep.k - info.u : 0);
        if (rep.k + 1 > info.u && roots_at.size() > zu_bound)
            rep.violations.push_back("Z_u bound violated at g = " + gs + ": " +
                                     std::to_string(roots_at.size()) + " > " + std::to_string(zu_bound));
    }

    // --- oracle agreement ---
    if (opts.oracle_every > 0 && index % opts.oracle_every == 0) {
        try {
            auto ora = oracle_roots(f, opts.oracle_prec, opts.oracle_lo, opts.oracle_hi);
            std::multiset<std::string> oracle_keys;
            for (const auto& x : ora) oracle_keys.insert(series_key(x));
            std::multiset<std::string> mine;
            bool precision_ok = true;
            for (const auto& r : recs) {
                if (r.value.is_zero()) {
                    mine.insert("0");
                    continue;
                }
                std::int64_t w = r.value.lead_exp();
                if (w < opts.oracle_lo || w > opts.oracle_hi) continue;
                if (r.certified_abs < w + opts.oracle_prec) {
                    precision_ok = false;
                    break;
                }
                mine.insert(series_key(r.value.snipped(w + opts.oracle_prec)));
            }
            if (!precision_ok) {
                rep.notes.push_back("oracle check skipped: working precision below oracle window");
            } else {
                rep.oracle_checked = true;
                if (oracle_keys != mine)
                    rep.violations.push_back("oracle set mismatch: oracle " +
                                             std::to_string(oracle_keys.size()) + " vs roots " +
                                             std::to_string(mine.size()));
            }
        } catch (const cap_error& e) {
            rep.notes.push_back(std::string("oracle skipped: ") + e.what());
        }
    }

    // --- distances lemma and the recenter rank chain, per segment ---
    for (const auto& s : np.segments) {
        Rat gS = s.g * Rat(K.e);
        if (!gS.is_integer()) continue;
        std::int64_t gamma = gS.num;
        std::uniform_int_distribution<std::uint32_t> cnz(1, K.residue->q - 1);
        std::uniform_int_distribution<std::uint32_t> cd(0, K.residue->q - 1);
        for (std::size_t trial = 0; trial < opts.distance_centers; ++trial) {
            // random non-root center with v(r) = g_u
            LaurentSeries r;
            bool have = false;
            for (int attempt = 0; attempt < 24 && !have; ++attempt) {
                std::vector<FqElem> cs;
                cs.emplace_back(K.residue.get(), cnz(rng));
                for (int extra = 0; extra < 4; ++extra) cs.emplace_back(K.residue.get(), cd(rng));
                r = LaurentSeries::make(K, gamma, std::move(cs));
                if (!evaluate(f, r).is_exact_zero()) have = true;
            }
            if (!have) {
                rep.notes.push_back("distances: no non-root center found at g = " + s.g.str());
                continue;
            }
            try {
                std::set<std::string> dists;
                for (const auto& rootrec : recs) {
                    LaurentSeries d = rootrec.value - r;
                    Val v = d.val();
                    if (v.kind == Val::ABOVE) throw precision_error("center too close to a root cluster");
                    if (v.kind == Val::INFINITE) continue; // cannot happen: r is not a root
                    if (v.value > s.g) dists.insert(v.value.str());
                }
                if (dists.size() > rep.k + 1 - s.order_pos)
                    rep.violations.push_back("distances lemma violated at g = " + s.g.str() + ": " +
                                             std::to_string(dists.size()) + " > " +
                                             std::to_string(rep.k + 1 - s.order_pos));
            } catch (const precision_error&) {
                rep.notes.push_back("distances: center skipped at g = " + s.g.str());
                continue;
            }

            if (opts.check_recenter_rank && f.degree() <= kDenseExpansionCap) {
                // after x -> r x the paper's reduction applies with r = 1
                SparsePoly fr = f.x_scaled(r);
                Recentered rc = recenter(fr, LaurentSeries::one(K));
                std::set<std::string> vals;
                for (std::int64_t i = 0; i < rc.min_val_index; ++i) {
                    const auto& bi = rc.b[static_cast<std::size_t>(i)];
                    if (!bi.is_zero()) vals.insert(Rat(bi.lead_exp(), K.e).str());
                }
                if (vals.size() > rep.k + 1 - s.order_pos)
                    rep.violations.push_back("recenter rank chain violated at g = " + s.g.str());
            }
        }
    }

    // --- disk trees per coset, lengths and branching ---
    if (opts.check_trees) {
        for (const auto& s : np.segments) {
            auto it = by_val.find(s.g.str());
            if (it == by_val.end()) continue;
            std::map<std::uint32_t, std::vector<LaurentSeries>> cosets;
            for (auto* r : it->second) cosets[r->value.leading_coeff().packed()].push_back(r->value);
            for (auto& [lead, members] : cosets) {
                try {
                    DiskTree t = build_tree(members);
                    std::int64_t ell = tree_length(t);
                    if (ell + s.order_pos > rep.k)
                        rep.violations.push_back("tree length " + std::to_string(ell) +
                                                 " exceeds k-u at g = " + s.g.str());
                    for (const auto& node : t.nodes)
                        if (node.children.size() > q)
                            rep.violations.push_back("tree branching exceeds q at g = " + s.g.str());
                } catch (const precision_error&) {
                    rep.notes.push_back("tree check skipped at g = " + s.g.str());
                }
            }
        }
    }

    // --- Phi injectivity and rationality ---
    if (opts.check_phi && rep.k >= 1) {
        try {
            std::vector<LaurentSeries> values;
            for (const auto& r : recs) values.push_back(r.value);
            auto images = phi_map(values, np, rep.k);
            std::set<std::string> keys;
            for (const auto& img : images) {
                std::ostringstream os;
                for (const auto& c : img.coeffs) os << c.packed() << ",";
                keys.insert(os.str());
            }
            if (keys.size() != images.size())
                rep.violations.push_back("phi is not injective on the root set");
            for (std::size_t i = 0; i < values.size(); ++i) {
                std::uint32_t degree = values[i].coeff_subfield_degree();
                for (const auto& c : images[i].coeffs)
                    if (subfield_degree(c, K.base_m) > degree) {
                        rep.violations.push_back("phi rationality violated");
                        break;
                    }
            }
        } catch (const precision_error&) {
            rep.notes.push_back("phi check skipped: roots indistinguishable at precision");
        } catch (const check_error& e) {
            rep.violations.push_back(std::string("phi check failed: ") + e.what());
        }
    }

    // --- transform invariances ---
    if (opts.check_transforms) {
        bool all_resolved = true;
        for (const auto& r : recs) all_resolved &= r.resolved;
        try {
            std::uint32_t s = 1 + static_cast<std::uint32_t>(index % 2);
            SparsePoly fp = f.pth_power(s);
            auto recs_p = roots_in(fp, K, opts.prec * K.e);
            if (recs_p.size() != recs.size())
                rep.violations.push_back("distinct-root count changed under p-th power reduction");
            else if (all_resolved) {
                std::multiset<std::string> a, b;
                for (const auto& r : recs) a.insert(series_key(r.value.exact() ? r.value : r.value));
                for (const auto& r : recs_p) b.insert(series_key(r.value));
                if (a != b) rep.violations.push_back("root set changed under p-th power reduction");
            }

            std::int64_t mrev = f.degree() + 1;
            SparsePoly frev = transform_reverse(f, mrev);
            auto recs_r = roots_in(frev, K, opts.prec * K.e);
            std::size_t nonzero = 0;
            bool f_has_zero = false;
            for (const auto& r : recs) {
                if (r.value.is_zero())
                    f_has_zero = true;
                else
                    ++nonzero;
            }
            if (recs_r.size() != nonzero + 1)
                rep.violations.push_back("reversal count mismatch: " + std::to_string(recs_r.size()) +
                                         " vs " + std::to_string(nonzero + 1));
            (void)f_has_zero;
            // bijection z -> 1/z on nonzero roots
            for (const auto& r : recs) {
                if (r.value.is_zero()) continue;
                std::int64_t inv_lead = -r.value.lead_exp();
                std::int64_t match_prec = inv_lead + 6;
                LaurentSeries invz = divide_mod(LaurentSeries::one(K), r.value, match_prec);
                std::size_t matches = 0;
                for (const auto& rr : recs_r) {
                    if (rr.value.is_zero()) continue;
                    std::int64_t pr = std::min(match_prec, std::min(rr.certified_abs, invz.abs_prec()));
                    if (agree_mod(invz, rr.value, pr)) ++matches;
                }
                if (matches != 1) {
                    rep.violations.push_back("reversal bijection failed for root " + r.value.str());
                    break;
                }
            }
        } catch (const std::exception& e) {
            rep.violations.push_back(std::string("transform check failed: ") + e.what());
        }
    }

    return rep;
}

// ---------------------------------------------------------------------------
// campaign driver

VerifyReport run_campaign(const CorpusSpec& spec) {
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport report;
    report.spec = spec;
    report.instances.resize(spec.samples);

    auto work = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < spec.samples; i += stride) {
            SparsePoly f = sample_instance(spec, i);
            report.instances[i] = verify_instance(f, spec, i);
        }
    };
    std::size_t jobs = std::max<std::size_t>(1, spec.jobs);
    if (jobs == 1) {
        work(0, 1);
    } else {
        std::vector<std::future<void>> fs;
        for (std::size_t j = 0; j < jobs; ++j)
            fs.push_back(std::async(std::launch::async, work, j, jobs));
        for (auto& fut : fs) fut.get();
    }

    for (const auto& inst : report.instances) {
        report.violations += inst.violations.size();
        if (inst.equality) ++report.equality_hits;
        report.max_count = std::max(report.max_count, inst.count);
        report.unresolved_total += inst.unresolved;
    }
    report.all_ok = report.violations == 0;
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    return report;
}

} // namespace sparsezeros
