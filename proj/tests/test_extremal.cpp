#include <doctest.h>

#include <random>
#include <set>

#include "dense_oracle.hpp"
#include "sparsezeros/extremal.hpp"
#include "sparsezeros/parser.hpp"
#include "sparsezeros/trees.hpp"

using namespace sparsezeros;
using namespace sparsezeros::testing;

namespace {

SubspaceSpec make_spec(std::uint32_t p, std::uint32_t m, std::uint32_t label_mult,
                       const std::vector<std::string>& basis, const std::string& scale = "1") {
    SubspaceSpec spec;
    spec.base = series_field(fq_make(p, m));
    spec.label_field = fq_make(p, m * label_mult);
    SeriesField L{spec.label_field, 1, spec.base.base_m};
    for (const auto& b : basis) spec.basis.push_back(parse_series(b, L));
    spec.scale = parse_series(scale, L);
    return spec;
}

} // namespace

TEST_CASE("smallest subspace polynomials") {
    auto s1 = make_spec(2, 1, 1, {"1"});
    SparsePoly f1 = subspace_poly(s1);
    CHECK(f1 == parse_poly("x^2 + x", s1.base));

    auto s2 = make_spec(2, 1, 1, {"1", "T"});
    SparsePoly f2 = subspace_poly(s2);
    CHECK(f2 == parse_poly("x^4 + (1+T+T^2)*x^2 + (T+T^2)*x", s2.base));
    // direct 4-fold product oracle
    Dense prod = dense_product_over(enumerate_subspace(s2), s2.base);
    CHECK(dense_equal(prod, dense_from_sparse(f2)));
}

TEST_CASE("F_4-span subspace polynomial") {
    auto spec = make_spec(2, 1, 2, {"1", "T"});
    SparsePoly f = subspace_poly(spec);
    CHECK(f.k() == 2);
    REQUIRE(f.terms().size() == 3);
    CHECK(f.terms()[0].n == 1);
    CHECK(f.terms()[1].n == 4);
    CHECK(f.terms()[2].n == 16);
    // direct product over all 16 elements of V
    SeriesField L = spec.construction_field();
    Dense prod = dense_product_over(enumerate_subspace(spec), L);
    CHECK(dense_equal(prod, dense_from_sparse(f.embed_into(L))));
}

TEST_CASE("dependent basis is rejected") {
    auto bad = make_spec(2, 1, 1, {"1", "T", "1+T"});
    CHECK_THROWS_AS(subspace_poly(bad), domain_error);
    auto cap = make_spec(2, 1, 4, {"1", "T", "T^2", "T^3", "T^4"});
    CHECK_THROWS_AS(subspace_poly(cap), cap_error);
}

TEST_CASE("additive polynomial identities") {
    auto spec = make_spec(2, 1, 2, {"1", "T"});
    SparsePoly f = subspace_poly(spec);
    SeriesField L = spec.construction_field();
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<std::uint32_t> cd(0, 3);
    std::uniform_int_distribution<std::int64_t> wd(-2, 2);
    for (int i = 0; i < 25; ++i) {
        std::vector<FqElem> cs = {FqElem(spec.label_field.get(), 1 + cd(rng) % 3),
                                  FqElem(spec.label_field.get(), cd(rng)),
                                  FqElem(spec.label_field.get(), cd(rng))};
        LaurentSeries x = LaurentSeries::make(L, wd(rng), cs);
        LaurentSeries y = parse_series("g*T", L) + LaurentSeries::monomial(L, spec.label_field->elem(cd(rng)), wd(rng));
        CHECK(evaluate(f, x + y) == evaluate(f, x) + evaluate(f, y));
        FqElem lambda = spec.label_field->elem(1 + cd(rng) % 3);
        CHECK(evaluate(f, x.scaled(lambda)) == evaluate(f, x).scaled(lambda));
    }
}

TEST_CASE("count-bound sharpness") {
    for (auto [p, m] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
        for (std::size_t k = 1; k <= 3; ++k) {
            std::uint64_t q = 1;
            for (std::uint32_t i = 0; i < m; ++i) q *= p;
            std::uint64_t degree = 1;
            for (std::size_t i = 0; i < k; ++i) degree *= q;
            if (degree > 64) continue; // degree cap for the desk targets
            std::vector<std::string> basis;
            for (std::size_t i = 0; i < k; ++i)
                basis.push_back(i == 0 ? "1" : "T^" + std::to_string(i));
            auto spec = make_spec(p, m, 1, basis);
            ExtremalReport rep = verify_sharpness_thm1(spec, 16);
            CHECK(rep.ok);
            CHECK(rep.count == degree);
        }
    }
}

TEST_CASE("degree-bound sharpness") {
    // q = 2, k = 2, d = 2: (4, 12)
    auto spec = make_spec(2, 1, 2, {"1", "T"});
    ExtremalReport rep = verify_sharpness_thm2(spec, 2, 16);
    CHECK(rep.ok);
    CHECK(rep.count == 16);
    REQUIRE(rep.per_degree.size() == 2);
    CHECK(rep.per_degree[0] == std::pair<std::int64_t, std::uint64_t>{1, 4});
    CHECK(rep.per_degree[1] == std::pair<std::int64_t, std::uint64_t>{2, 12});

    // d = 1 reduces to the count bound
    auto spec1 = make_spec(2, 1, 1, {"1", "T"});
    ExtremalReport rep1 = verify_sharpness_thm2(spec1, 1, 16);
    CHECK(rep1.ok);
    CHECK(rep1.count == 4);

    // q = 3, k = 1, d = 2: c(x^9 - x), roots F_9
    auto spec9 = make_spec(3, 1, 2, {"1"}, "T");
    ExtremalReport rep9 = verify_sharpness_thm2(spec9, 2, 16);
    CHECK(rep9.ok);
    CHECK(rep9.count == 9);
    CHECK(rep9.per_degree[0].second == 3);
    CHECK(rep9.per_degree[1].second == 6);

    // a non-Galois-stable V is rejected (F*(1+g*T) has no basis in K)
    auto bad = make_spec(2, 1, 2, {"1 + g*T"});
    CHECK_THROWS_AS(verify_sharpness_thm2(bad, 2, 16), domain_error);
}

TEST_CASE("phi exhausts the codomain on the degree-bound extremal") {
    auto spec = make_spec(2, 1, 2, {"1", "T"});
    SparsePoly fL = subspace_poly(spec);
    SeriesField L = spec.construction_field();
    auto recs = roots_in(fL, L, 16);
    REQUIRE(recs.size() == 16);
    std::vector<LaurentSeries> values;
    for (const auto& r : recs) {
        CHECK(r.exact);
        values.push_back(r.value);
    }
    NewtonPolygon np = proper_order(polygon(fL));
    auto images = phi_map(values, np, fL.k());
    std::set<std::string> keys;
    for (const auto& img : images) keys.insert(img.str());
    CHECK(keys.size() == 16); // injective and |F_4[X]_{<2}| = 16: the codomain is exhausted
    // rationality: degree-1 roots land in F_2[X]
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::uint32_t deg = values[i].coeff_subfield_degree();
        for (const auto& c : images[i].coeffs) CHECK(subfield_degree(c, 1) <= deg);
    }
}

TEST_CASE("xe variant") {
    auto s1 = make_spec(2, 1, 1, {"1"});
    ExtremalReport r1 = verify_xe_variant(s1, 1, 16);
    CHECK(r1.applicable);
    CHECK(r1.ok);
    CHECK(r1.count == 2);

    auto s2 = make_spec(2, 1, 1, {"1", "T^2"});
    ExtremalReport r2 = verify_xe_variant(s2, 2, 16);
    CHECK(r2.applicable);
    CHECK(r2.ok);
    CHECK(r2.count == 4);

    // hypothesis violation: valuations 0 and 1 are not both divisible by 2
    auto s3 = make_spec(2, 1, 1, {"1", "T"});
    ExtremalReport r3 = verify_xe_variant(s3, 2, 16);
    CHECK(!r3.applicable);
}
