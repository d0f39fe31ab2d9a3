#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "sparsezeros/parser.hpp"
#include "sparsezeros/roots.hpp"
#include "sparsezeros/trees.hpp"

using namespace sparsezeros;

namespace {

SeriesField K2() { return series_field(fq_make(2, 1)); }

// Brute-force Hasse-poset oracle: all distinct nonempty S ∩ D over disks
// centered at members with radii drawn from the pairwise distances (open and
// closed both, plus the whole set).
std::set<std::set<std::size_t>> poset_subsets(const std::vector<LaurentSeries>& S) {
    std::vector<Rat> radii;
    for (std::size_t a = 0; a < S.size(); ++a)
        for (std::size_t b = a + 1; b < S.size(); ++b) radii.push_back((S[a] - S[b]).val().value);
    std::set<std::set<std::size_t>> out;
    for (std::size_t c = 0; c < S.size(); ++c) {
        for (const Rat& g : radii) {
            for (bool open : {true, false}) {
                std::set<std::size_t> subset;
                for (std::size_t i = 0; i < S.size(); ++i) {
                    Val v = (S[i] - S[c]).val();
                    bool in = v.kind == Val::INFINITE ||
                              (v.kind == Val::FINITE && (open ? v.value > g : v.value >= g));
                    if (in) subset.insert(i);
                }
                if (!subset.empty()) out.insert(subset);
            }
        }
        out.insert({c}); // tiny disks
    }
    std::set<std::size_t> all;
    for (std::size_t i = 0; i < S.size(); ++i) all.insert(i);
    out.insert(all);
    return out;
}

std::set<std::set<std::size_t>> tree_subsets(const DiskTree& t) {
    std::set<std::set<std::size_t>> out;
    for (const auto& n : t.nodes) out.insert(std::set<std::size_t>(n.members.begin(), n.members.end()));
    return out;
}

std::vector<LaurentSeries> random_points(const SeriesField& K, std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<std::int64_t> wd(-2, 2);
    std::uniform_int_distribution<std::uint32_t> cd(0, K.residue->q - 1);
    std::uniform_int_distribution<std::uint32_t> cnz(1, K.residue->q - 1);
    std::set<std::string> seen;
    std::vector<LaurentSeries> out;
    while (out.size() < n) {
        std::vector<FqElem> cs;
        cs.emplace_back(K.residue.get(), cnz(rng));
        for (int i = 0; i < 4; ++i) cs.emplace_back(K.residue.get(), cd(rng));
        LaurentSeries x = LaurentSeries::make(K, wd(rng), std::move(cs));
        if (seen.insert(x.str()).second) out.push_back(std::move(x));
    }
    return out;
}

} // namespace

TEST_CASE("tree of the subspace root set") {
    auto K = K2();
    std::vector<LaurentSeries> S = {LaurentSeries::one(K), parse_series("T", K),
                                    parse_series("1+T", K)};
    DiskTree t = build_tree(S);
    CHECK(t.nodes[t.root()].members.size() == 3);
    CHECK(t.nodes[t.root()].radius == Rat(0));
    REQUIRE(t.nodes[t.root()].children.size() == 2);
    // one child is the singleton {T}, the other is {1, 1+T} splitting at radius 1
    std::size_t pair_node = SIZE_MAX;
    for (std::size_t c : t.nodes[t.root()].children) {
        if (t.nodes[c].members.size() == 2) pair_node = c;
    }
    REQUIRE(pair_node != SIZE_MAX);
    CHECK(t.nodes[pair_node].radius == Rat(1));
    CHECK(t.nodes[pair_node].children.size() == 2);
    CHECK(tree_length(t) == 2);
}

TEST_CASE("tree basics") {
    auto K = K2();
    DiskTree single = build_tree({parse_series("T", K)});
    CHECK(single.nodes.size() == 1);
    CHECK(tree_length(single) == 0);

    CHECK_THROWS_AS(build_tree({parse_series("T", K), parse_series("T", K)}), domain_error);
    CHECK_THROWS_AS(build_tree({parse_series("T", K).truncated(3),
                                (parse_series("T", K) + parse_series("T^4", K)).truncated(3)}),
                    precision_error);
}

TEST_CASE("tree equals the Hasse diagram of the disk poset") {
    std::mt19937_64 rng(61);
    for (auto fs : {fq_make(2, 1), fq_make(2, 2), fq_make(3, 1)}) {
        auto K = series_field(fs);
        for (int trial = 0; trial < 40; ++trial) {
            std::uniform_int_distribution<std::size_t> nd(1, 6);
            auto S = random_points(K, rng, nd(rng));
            DiskTree t = build_tree(S);
            CHECK(tree_subsets(t) == poset_subsets(S));
            // leaves are singletons, one per point
            std::size_t leaves = 0;
            for (const auto& n : t.nodes)
                if (n.children.empty()) {
                    ++leaves;
                    CHECK(n.members.size() == 1);
                }
            CHECK(leaves == S.size());
            // children partition the parent
            for (const auto& n : t.nodes) {
                if (n.children.empty()) continue;
                std::size_t sum = 0;
                for (std::size_t c : n.children) sum += t.nodes[c].members.size();
                CHECK(sum == n.members.size());
                CHECK(n.children.size() <= fs->q);
                CHECK(n.children.size() >= 2);
            }
        }
    }
}

TEST_CASE("phi labelling") {
    auto K = K2();
    std::vector<LaurentSeries> S = {LaurentSeries::one(K), parse_series("1+T", K)};
    DiskTree t = phi_label(build_tree(S), Rat(0));
    CHECK(*t.nodes[t.root()].label == K.residue->one()); // coefficient at T^0
    std::set<std::uint32_t> child_labels;
    for (std::size_t c : t.nodes[t.root()].children) child_labels.insert(t.nodes[c].label->packed());
    CHECK(child_labels == std::set<std::uint32_t>{0, 1}); // coefficient of T

    // children of one node always carry distinct labels
    std::mt19937_64 rng(67);
    auto K4 = series_field(fq_make(2, 2));
    for (int trial = 0; trial < 30; ++trial) {
        auto pts = random_points(K4, rng, 5);
        // keep points of one coset: same valuation and leading digit
        std::vector<LaurentSeries> coset;
        for (auto& x : pts) {
            if (coset.empty() ||
                (x.lead_exp() == coset.front().lead_exp() &&
                 x.leading_coeff() == coset.front().leading_coeff()))
                coset.push_back(x);
        }
        DiskTree lt = phi_label(build_tree(coset), Rat(coset.front().lead_exp()));
        for (const auto& n : lt.nodes) {
            std::set<std::uint32_t> labels;
            for (std::size_t c : n.children) {
                CHECK(lt.nodes[c].label.has_value());
                CHECK(labels.insert(lt.nodes[c].label->packed()).second);
            }
        }
    }
}

TEST_CASE("labels of conjugate sets are conjugate") {
    auto L = series_field(fq_make(2, 2)); // F_4((T))
    std::vector<LaurentSeries> S = {parse_series("1 + g*T", L), parse_series("1 + g^2*T", L),
                                    parse_series("1 + g*T + T^2", L)};
    DiskTree t = phi_label(build_tree(S), Rat(0));
    std::vector<LaurentSeries> Sc;
    for (const auto& x : S) Sc.push_back(x.frobenius_map(1));
    DiskTree tc = phi_label(build_tree(Sc), Rat(0));
    // collect (member-set size, label) multisets at depth 1 and compare conjugated
    std::multiset<std::uint32_t> a, b;
    for (std::size_t c : t.nodes[t.root()].children)
        a.insert(frobenius(*t.nodes[c].label, 1).packed());
    for (std::size_t c : tc.nodes[tc.root()].children) b.insert(tc.nodes[c].label->packed());
    CHECK(a == b);
}

TEST_CASE("phi map on the subspace instance") {
    auto K = K2();
    SparsePoly f = parse_poly("x^4 + (1+T+T^2)*x^2 + (T+T^2)*x", K);
    auto recs = roots_in(f, K, 16);
    std::vector<LaurentSeries> values;
    for (const auto& r : recs) values.push_back(r.value);
    NewtonPolygon np = proper_order(polygon(f));
    auto images = phi_map(values, np, f.k());
    REQUIRE(images.size() == 4);
    std::map<std::string, std::string> got;
    for (std::size_t i = 0; i < values.size(); ++i) got[values[i].str()] = images[i].str();
    CHECK(got["0"] == "0");
    CHECK(got["T"] == "X");
    CHECK(got["1"] == "1");
    CHECK(got["1 + T"] == "1 + X");
    // injective by inspection; check as sets too
    std::set<std::string> distinct;
    for (const auto& img : images) distinct.insert(img.str());
    CHECK(distinct.size() == 4);
}

TEST_CASE("phi map singleton") {
    auto K = K2();
    SparsePoly f = parse_poly("x + T", K);
    auto recs = roots_in(f, K, 16);
    REQUIRE(recs.size() == 1);
    NewtonPolygon np = proper_order(polygon(f));
    auto images = phi_map({recs[0].value}, np, f.k());
    REQUIRE(images.size() == 1);
    CHECK(images[0].coeffs.size() == 1);
    CHECK(!images[0].coeffs[0].is_zero());
}

TEST_CASE("dot rendering mentions every node") {
    auto K = K2();
    std::vector<LaurentSeries> S = {LaurentSeries::one(K), parse_series("T", K),
                                    parse_series("1+T", K)};
    DiskTree t = phi_label(build_tree(S), Rat(0));
    std::string dot = tree_to_dot(t);
    CHECK(dot.find("digraph") != std::string::npos);
    for (std::size_t i = 0; i < t.nodes.size(); ++i)
        CHECK(dot.find("n" + std::to_string(i)) != std::string::npos);
}
