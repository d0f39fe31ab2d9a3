#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "sparsezeros/census.hpp"
#include "sparsezeros/parser.hpp"
#include "sparsezeros/roots.hpp"

using namespace sparsezeros;

namespace {

SeriesField K2() { return series_field(fq_make(2, 1)); }

SparsePoly e1() { return parse_poly("x^4 + (1+T+T^2)*x^2 + (T+T^2)*x", K2()); }

std::set<std::string> value_strings(const std::vector<RootRecord>& recs) {
    std::set<std::string> out;
    for (const auto& r : recs) out.insert(r.value.str());
    return out;
}

} // namespace

TEST_CASE("x^q - x splits into the residue field") {
    for (std::uint64_t q : {2ull, 3ull, 4ull}) {
        auto [p, m] = prime_power_split(q);
        SeriesField K = series_field(fq_make(p, m));
        std::vector<SparsePoly::Term> ts;
        ts.push_back({1, -LaurentSeries::one(K)});
        ts.push_back({static_cast<std::int64_t>(q), LaurentSeries::one(K)});
        SparsePoly f(K, std::move(ts));
        auto recs = roots_in(f, K, 16);
        CHECK(recs.size() == q);
        std::set<std::uint32_t> constants;
        for (const auto& r : recs) {
            CHECK(r.exact);
            CHECK(r.resolved);
            CHECK(r.multiplicity == 1);
            if (r.value.is_zero())
                constants.insert(0);
            else {
                CHECK(r.value.lead_exp() == 0);
                CHECK(r.value.coeffs().size() == 1);
                constants.insert(r.value.leading_coeff().packed());
            }
        }
        CHECK(constants.size() == q); // all of F_q
    }
}

TEST_CASE("subspace instance roots") {
    auto recs = roots_in(e1(), K2(), 16);
    CHECK(recs.size() == 4); // q^k with k = 2
    for (const auto& r : recs) CHECK(r.exact);
    CHECK(value_strings(recs) == std::set<std::string>{"0", "1", "T", "1 + T"});
}

TEST_CASE("Hensel lifting at prec 8") {
    auto K = K2();
    SparsePoly f = parse_poly("x^2 + x + T", K);
    auto recs = roots_in(f, K, 8);
    REQUIRE(recs.size() == 2);
    LaurentSeries expect = parse_series("T + T^2 + T^4", K);
    bool found_low = false, found_high = false;
    for (const auto& r : recs) {
        CHECK(r.resolved);
        CHECK(r.certified_abs >= 8);
        if (agree_mod(r.value, expect, 8)) found_low = true;
        if (agree_mod(r.value, expect + LaurentSeries::one(K), 8)) found_high = true;
        // certification: v(f(x)) - v(f'(x)) >= certified precision
        LaurentSeries fx = evaluate(f, r.value.snipped(8));
        LaurentSeries fpx = evaluate_derivative(f, r.value.snipped(8));
        if (!fx.is_exact_zero()) CHECK(fx.lead_exp() - fpx.lead_exp() >= 8);
    }
    CHECK(found_low);
    CHECK(found_high);
}

TEST_CASE("negative valuation roots") {
    auto K = K2();
    SparsePoly f = parse_poly("T*x + 1", K);
    auto recs = roots_in(f, K, 8);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].exact);
    CHECK(recs[0].value == parse_series("T^-1", K));
}

TEST_CASE("multiplicity is recorded through p-th power reduction") {
    auto K = K2();
    SparsePoly f = parse_poly("1 + x^8", K); // (1+x)^8
    auto recs = roots_in(f, K, 8);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].exact);
    CHECK(recs[0].value == LaurentSeries::one(K));
    CHECK(recs[0].multiplicity == 8);
}

TEST_CASE("unresolved clusters are first-class results") {
    auto K = K2();
    // (x^2+x+T)^2 (x+1): an inseparable pair of double roots plus a simple one
    SparsePoly sq = parse_poly("x^2 + x + T", K).pth_power(1);
    std::vector<SparsePoly::Term> ts;
    for (const auto& t : sq.terms()) {
        ts.push_back({t.n, t.a});
        ts.push_back({t.n + 1, t.a});
    }
    SparsePoly f(K, std::move(ts));
    auto recs = roots_in(f, K, 8);
    CHECK(recs.size() == 3);
    std::size_t unresolved = 0, exact = 0;
    for (const auto& r : recs) {
        if (!r.resolved) {
            ++unresolved;
            CHECK(r.multiplicity == 2);
        }
        if (r.exact) {
            ++exact;
            CHECK(r.value == LaurentSeries::one(K));
        }
    }
    CHECK(unresolved == 2);
    CHECK(exact == 1);
}

TEST_CASE("degree-bounded search") {
    auto K = K2();
    SparsePoly f = parse_poly("x^4 + x", K);
    auto recs = roots_deg_le_d(f, 2, 16);
    CHECK(recs.size() == 4);
    std::multiset<std::int64_t> degrees;
    for (const auto& r : recs) {
        CHECK(r.degree.exact);
        degrees.insert(r.degree.value);
    }
    CHECK(degrees == std::multiset<std::int64_t>{1, 1, 2, 2});

    // d = 1 reduces to roots_in
    auto r1 = roots_deg_le_d(e1(), 1, 16);
    CHECK(r1.size() == 4);

    // tame ramified homes get upper-bound degrees
    SeriesField K3 = series_field(fq_make(3, 1));
    SparsePoly g = parse_poly("x^2 - T", K3);
    auto rr = roots_deg_le_d(g, 2, 12);
    CHECK(rr.size() == 2);
    for (const auto& r : rr) {
        CHECK(r.home_e == 2);
        CHECK(!r.degree.exact);
        CHECK(r.degree.value == 2);
        CHECK(r.exact);
    }
}

TEST_CASE("oracle examples") {
    auto K = K2();
    auto found = oracle_roots(e1(), 6, 0, 2);
    std::set<std::string> keys;
    for (const auto& x : found) keys.insert(x.str());
    CHECK(keys == std::set<std::string>{"0", "1", "T", "1 + T"});

    auto f2 = parse_poly("x + 1", K);
    auto r2 = oracle_roots(f2, 6, 0, 2);
    REQUIRE(r2.size() == 1);
    CHECK(r2[0] == LaurentSeries::one(K));

    auto f3 = parse_poly("x^2 + T", K);
    CHECK(oracle_roots(f3, 6, -3, 3).empty());

    CHECK_THROWS_AS(oracle_roots(e1(), 30, 0, 2), cap_error);
}

TEST_CASE("oracle agreement with the root finder on a random corpus") {
    CorpusSpec spec;
    spec.p = 2;
    spec.m = 1;
    spec.k_min = 1;
    spec.k_max = 3;
    spec.samples = 40;
    spec.seed = 97;
    spec.prec = 16;
    for (std::size_t i = 0; i < spec.samples; ++i) {
        SparsePoly f = sample_instance(spec, i);
        auto recs = roots_in(f, f.field(), spec.prec);
        auto ora = oracle_roots(f, 8, -3, 4);
        std::multiset<std::string> mine, theirs;
        for (const auto& x : ora) theirs.insert(x.str());
        for (const auto& r : recs) {
            if (r.value.is_zero()) {
                mine.insert("0");
                continue;
            }
            std::int64_t w = r.value.lead_exp();
            if (w < -3 || w > 4) continue;
            REQUIRE(r.certified_abs >= w + 8);
            mine.insert(r.value.snipped(w + 8).str());
        }
        CHECK(mine == theirs);
    }
}

TEST_CASE("count bound and polygon consistency on a random corpus") {
    for (auto [p, m] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
        CorpusSpec spec;
        spec.p = p;
        spec.m = m;
        spec.k_min = 1;
        spec.k_max = 4;
        spec.samples = 60;
        spec.seed = 101;
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < m; ++i) q *= p;
        for (std::size_t i = 0; i < spec.samples; ++i) {
            SparsePoly f = sample_instance(spec, i);
            auto recs = roots_in(f, f.field(), 16);
            std::uint64_t bound = 1;
            for (std::size_t j = 0; j < f.k(); ++j) bound *= q;
            CHECK(recs.size() <= bound);

            NewtonPolygon np = proper_order(polygon(f));
            for (const auto& r : recs) {
                if (r.value.is_zero()) continue;
                Rat g(r.value.lead_exp(), f.field().e);
                bool on_polygon = false;
                for (const auto& s : np.segments) on_polygon |= (s.g == g);
                CHECK(on_polygon);
            }
        }
    }
}

TEST_CASE("root set transforms") {
    auto K = K2();
    SparsePoly f = e1();

    // invariance under p-th powers
    auto base = roots_in(f, K, 16);
    auto pw = roots_in(f.pth_power(2), K, 16);
    CHECK(value_strings(base) == value_strings(pw));

    // reversal: z -> 1/z on nonzero roots
    SparsePoly rev = transform_reverse(f, 5);
    auto rrecs = roots_in(rev, K, 16);
    CHECK(rrecs.size() == 4); // {0, 1, T^-1, (1+T)^-1}
    std::size_t matched = 0;
    for (const auto& r : base) {
        if (r.value.is_zero()) continue;
        LaurentSeries inv = divide_mod(LaurentSeries::one(K), r.value, 10);
        for (const auto& rr : rrecs) {
            if (rr.value.is_zero()) continue;
            if (agree_mod(inv, rr.value, std::min<std::int64_t>(10, rr.certified_abs))) ++matched;
        }
    }
    CHECK(matched == 3);
}
