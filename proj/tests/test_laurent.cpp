#include <doctest.h>

#include <random>

#include "sparsezeros/laurent.hpp"

using namespace sparsezeros;

namespace {

SeriesField K2() { return series_field(fq_make(2, 1)); }
SeriesField K4() { return series_field(fq_make(2, 2)); }

LaurentSeries random_series(const SeriesField& fld, std::mt19937_64& rng, bool exact = true) {
    std::uniform_int_distribution<std::int64_t> wd(-4, 4);
    std::uniform_int_distribution<std::uint32_t> cd(0, fld.residue->q - 1);
    std::uniform_int_distribution<std::uint32_t> cnz(1, fld.residue->q - 1);
    std::int64_t lead = wd(rng);
    std::vector<FqElem> cs;
    cs.emplace_back(fld.residue.get(), cnz(rng));
    for (int i = 0; i < 6; ++i) cs.emplace_back(fld.residue.get(), cd(rng));
    return LaurentSeries::make(fld, lead, std::move(cs),
                               exact ? LaurentSeries::kExact : lead + 10);
}

} // namespace

TEST_CASE("valuations") {
    auto K = K2();
    LaurentSeries T = parse_series("T", K);
    CHECK(T.val().kind == Val::FINITE);
    CHECK(T.val().value == Rat(1));

    LaurentSeries u = parse_series("1+T", K);
    CHECK(u.val().value == Rat(0));

    LaurentSeries t2 = parse_series("T+T^2", K);
    CHECK(t2.val().value == Rat(1));

    CHECK(LaurentSeries::zero(K).val().kind == Val::INFINITE);
    auto apparent = LaurentSeries::zero_mod(K, 5);
    CHECK(apparent.val().kind == Val::ABOVE);
    CHECK(apparent.val().value == Rat(5));
}

TEST_CASE("arithmetic basics") {
    auto K = K2();
    LaurentSeries u = parse_series("1+T", K);
    CHECK((u + u).is_exact_zero()); // char 2

    LaurentSeries sq = u * u;
    CHECK(sq == parse_series("1+T^2", K));

    // inv(1+T) at window 4, checked by multiplying back
    LaurentSeries inv = u.inv(4);
    CHECK(inv.abs_prec() == 4);
    LaurentSeries back = u * inv;
    CHECK(back.coeff_at_sexp(0).is_one());
    for (int i = 1; i < 4; ++i) CHECK(back.coeff_at_sexp(i).is_zero());
    CHECK(inv == LaurentSeries::make(K, 0,
                                     {K.residue->one(), K.residue->one(), K.residue->one(),
                                      K.residue->one()},
                                     4)); // 1+T+T^2+T^3

    CHECK_THROWS_AS(LaurentSeries::zero(K).inv(), domain_error);
    CHECK_THROWS_AS(LaurentSeries::zero_mod(K, 3).inv(), precision_error);
}

TEST_CASE("ultrametric properties on random samples") {
    std::mt19937_64 rng(17);
    for (auto K : {K2(), K4()}) {
        for (int i = 0; i < 100; ++i) {
            LaurentSeries x = random_series(K, rng), y = random_series(K, rng);
            Val vx = x.val(), vy = y.val(), vs = (x + y).val();
            if (vs.kind == Val::FINITE) {
                CHECK(vs.value >= std::min(vx.value, vy.value));
                if (vx.value != vy.value) CHECK(vs.value == std::min(vx.value, vy.value));
            }
            Val vp = (x * y).val();
            CHECK(vp.value == vx.value + vy.value);

            // inv round trip at the reported precision
            LaurentSeries inv = x.inv(8);
            LaurentSeries prod = x * inv;
            CHECK(prod.coeff_at_sexp(0).is_one());
            for (int s = 1; s < 4; ++s) CHECK(prod.coeff_at_sexp(s).is_zero());
        }
    }
}

TEST_CASE("rescale") {
    auto K = K2();
    LaurentSeries T = parse_series("T", K);
    LaurentSeries s = T.rescale(2);
    CHECK(s.field().e == 2);
    CHECK(s.lead_exp() == 2);
    CHECK(s.val().value == Rat(1)); // value in T-units is unchanged

    LaurentSeries u = parse_series("1+T", K).rescale(3);
    CHECK(u.lead_exp() == 0);
    CHECK(u.coeff_at_sexp(3).is_one());

    std::mt19937_64 rng(23);
    for (int i = 0; i < 20; ++i) {
        LaurentSeries x = random_series(K, rng), y = random_series(K, rng);
        CHECK(x.rescale(2).val().value == x.val().value);
        CHECK((x + y).rescale(2) == x.rescale(2) + y.rescale(2));
        CHECK((x * y).rescale(2) == x.rescale(2) * y.rescale(2));
    }
}

TEST_CASE("coefficient_at") {
    auto K = K2();
    LaurentSeries x = parse_series("T+T^2", K);
    CHECK(x.coefficient_at(Rat(1)).is_one());
    CHECK(x.coefficient_at(Rat(0)).is_zero());

    auto L = K4();
    LaurentSeries y = parse_series("1+g*T", L);
    CHECK(y.coefficient_at(Rat(1)) == L.residue->gen());

    CHECK_THROWS_AS(x.truncated(2).coefficient_at(Rat(3)), precision_error);
    CHECK_THROWS_AS(x.rescale(2).coefficient_at(Rat(1, 3)), domain_error);
}

TEST_CASE("precision propagation") {
    auto K = K2();
    LaurentSeries a = parse_series("1+T", K).truncated(3);  // known mod T^3
    LaurentSeries b = parse_series("T^2", K);
    CHECK((a + b).abs_prec() == 3);
    CHECK((a * b).abs_prec() == 5); // v(b) + prec(a)
    CHECK(a.exact() == false);
    LaurentSeries c = parse_series("1+T", K);
    CHECK((c * c).exact());

    // snipped keeps an exact polynomial; truncated tracks a bound
    LaurentSeries s = parse_series("1+T+T^3", K);
    CHECK(s.snipped(2) == parse_series("1+T", K));
    CHECK(agree_mod(s, s.snipped(2), 2));
    CHECK(!agree_mod(s, s.snipped(2), 4));
}

TEST_CASE("embed and project between series fields") {
    auto K = K2();
    auto L = series_field_ext(fq_make(2, 1), 2, 1); // F_4((T))
    LaurentSeries x = parse_series("1 + T + T^3", K);
    LaurentSeries lifted = x.embed_into(L);
    CHECK(lifted.field() == L);
    CHECK(lifted.coeff_subfield_degree() == 1);
    CHECK(lifted.project_into(K) == x);

    LaurentSeries y = parse_series("g*T", L);
    CHECK(y.coeff_subfield_degree() == 2);
    CHECK_THROWS_AS(y.project_into(K), domain_error);

    auto R = series_field_ext(fq_make(2, 1), 1, 2); // F_2((T^(1/2)))
    LaurentSeries t = parse_series("T", K).embed_into(R);
    CHECK(t.lead_exp() == 2);
    CHECK(t.support_gcd_with_e() == 2);
    CHECK(t.project_into(K) == parse_series("T", K));
    LaurentSeries s = parse_series("T^(1/2)", R);
    CHECK(s.support_gcd_with_e() == 1);
    CHECK_THROWS_AS(s.project_into(K), domain_error);
}

TEST_CASE("series text round trip") {
    std::mt19937_64 rng(29);
    for (auto K : {K2(), K4()}) {
        for (int i = 0; i < 50; ++i) {
            LaurentSeries x = random_series(K, rng);
            CHECK(parse_series(x.str(), K) == x);
        }
    }
    auto K = K2();
    CHECK(parse_series("0", K).is_exact_zero());
    auto K9 = series_field(fq_make(3, 2));
    LaurentSeries z = parse_series("2 + g*T^-1 + g*T^-1", K9); // 2g T^-1 as a repeated atom
    CHECK(z.coeff_at_sexp(-1) == K9.residue->gen() + K9.residue->gen());
    CHECK(parse_series(z.str(), K9) == z);
}
