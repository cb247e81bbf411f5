#include <set>

#include "doctest.h"
#include "tamedeg/catalog.hpp"

using namespace tamedeg;

TEST_CASE("E~6 tube discovery") {
    Catalog cat(Quiver::extended_e(6, 3));
    REQUIRE(cat.nonhomog_tube_count() == 3);
    std::multiset<int> periods;
    for (int t = 0; t < 3; ++t) periods.insert(cat.tube_period(t));
    CHECK(periods == std::multiset<int>{3, 3, 2});
    for (int t = 0; t < 3; ++t) {
        TubeData td = cat.tube(t);
        IVec sum(7, 0);
        for (const IVec& s : td.simples) sum += s;
        CHECK(sum == cat.quiver().null_root());
        // tau E_i = E_{i-1}: applying c to simples[i] gives simples[i-1]
        for (int i = 0; i < td.period; ++i)
            CHECK(cat.quiver().coxeter_apply(td.simples[i]) == td.simples[(i - 1 + td.period) % td.period]);
    }
}

TEST_CASE("tube periods across types") {
    Catalog e8(Quiver::extended_e(8, 2));
    std::multiset<int> p8;
    for (int t = 0; t < e8.nonhomog_tube_count(); ++t) p8.insert(e8.tube_period(t));
    CHECK(p8 == std::multiset<int>{5, 3, 2});
    Catalog d8(Quiver::extended_d(8, 3));
    std::multiset<int> pd;
    for (int t = 0; t < d8.nonhomog_tube_count(); ++t) pd.insert(d8.tube_period(t));
    CHECK(pd == std::multiset<int>{6, 2, 2});
    CHECK(d8.quiver().coxeter_period() == 6);
    CHECK(e8.quiver().coxeter_period() == 30);
}

TEST_CASE("tau and tau_inv") {
    Catalog cat(Quiver::extended_e(6, 3));
    int t = 0;
    Indec r = cat.regular(t, 1, 5);
    Indec tr = cat.tau(r);
    CHECK(tr.shift == 0);
    CHECK(tr.len == 5);
    CHECK(cat.tau_inv(tr) == r);
    Indec i3 = cat.preinjective(2, 2);
    CHECK(cat.tau(i3).shift == 3);
    CHECK_THROWS_AS(cat.tau(cat.projective(2)), CatalogError);
    CHECK_THROWS_AS(cat.tau_inv(cat.injective(2)), CatalogError);
    // dim tau X = c (dim X) on non-projectives
    Indec x = cat.preprojective(0, 3);
    CHECK(cat.tau(x).dim == cat.quiver().coxeter_apply(x.dim));
    // regular: full period returns to itself
    Indec cur = r;
    for (int k = 0; k < cat.tube_period(t); ++k) cur = cat.tau(cur);
    CHECK(cur == r);
}

TEST_CASE("defect classifies the variants") {
    Catalog cat(Quiver::extended_d(8, 4));
    const Quiver& q = cat.quiver();
    IVec bound = Int(2) * q.null_root();
    for (const Indec& x : cat.roots_up_to(bound)) {
        Int d = q.defect(x.dim);
        switch (x.kind) {
            case IndecKind::Preprojective: CHECK(d < 0); break;
            case IndecKind::Regular: CHECK(d == 0); break;
            case IndecKind::Preinjective: CHECK(d > 0); break;
        }
        // dims are roots: q = 1, or q = 0 on multiples of delta
        Int tits = q.tits_form(x.dim);
        if (tits == 0) {
            CHECK(x.kind == IndecKind::Regular);
            CHECK(x.dim == Int(x.len / cat.tube_period(x.base)) * q.null_root());
        } else
            CHECK(tits == 1);
    }
}

TEST_CASE("roots_up_to on Dynkin A2") {
    Catalog cat(Quiver::dynkin_a(2, 2));
    auto roots = cat.roots_up_to({1, 1});
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == cat.projective(0));  // P(1), dim (1,1)
    CHECK(roots[1] == cat.projective(1));  // P(2), dim (0,1)
    CHECK(roots[2].dim == IVec{1, 0});     // tau^- P(2) = I(1)
    CHECK(roots[2] == cat.preprojective(1, 1));
}

TEST_CASE("roots_up_to bound delta catches all regular simples") {
    Catalog cat(Quiver::extended_e(6, 3));
    auto roots = cat.roots_up_to(cat.quiver().null_root());
    int simples = 0;
    for (const Indec& x : roots)
        if (x.kind == IndecKind::Regular && x.len == 1 && !cat.is_homogeneous_tube(x.base)) simples++;
    CHECK(simples == 3 + 3 + 2);
    // no duplicates, preprojective dims pairwise distinct
    std::set<std::tuple<int, int, int, int>> keys;
    std::map<IVec, int> preproj_dims;
    for (const Indec& x : roots) {
        CHECK(keys.insert(x.key()).second);
        if (x.kind == IndecKind::Preprojective) preproj_dims[x.dim]++;
    }
    for (auto& [d, c] : preproj_dims) CHECK(c == 1);
}

TEST_CASE("regular length multiples of the period give multiples of delta") {
    Catalog cat(Quiver::extended_e(7, 4));
    for (int t = 0; t < cat.nonhomog_tube_count(); ++t) {
        int p = cat.tube_period(t);
        for (int m = 1; m <= 2; ++m)
            CHECK(cat.regular(t, 1 % p, m * p).dim == Int(m) * cat.quiver().null_root());
    }
}

TEST_CASE("path distance in the preprojective component") {
    Catalog cat(Quiver::extended_e(6, 3));
    Indec p3 = cat.projective(2);
    CHECK(cat.path_distance(p3, p3) == 0);
    // d(P(i), tau^- P(i)) = 2 through any middle term of the AR mesh
    CHECK(cat.path_distance(p3, cat.preprojective(2, 1)) == 2);
    CHECK(!cat.path_distance(cat.preprojective(2, 1), p3).has_value());
    CHECK_THROWS_AS(cat.path_distance(p3, cat.regular(0, 0, 1)), CatalogError);
    CHECK_THROWS_AS(cat.path_distance(p3, cat.preinjective(2, 0)), CatalogError);
    // preinjective side
    CHECK(cat.path_distance(cat.preinjective(2, 1), cat.preinjective(2, 0)) == 2);
    CHECK(!cat.path_distance(cat.preinjective(2, 0), cat.preinjective(2, 1)).has_value());
}

TEST_CASE("module sum canonical form and round trip") {
    Catalog cat(Quiver::extended_e(6, 3));
    ModuleSum m(cat);
    m.add(cat.preinjective(1, 2));
    m.add(cat.regular(0, 1, 2), 2);
    m.add(cat.projective(2));
    m.add(cat.regular(cat.generic_homog_tube() + 3, 0, 2));
    m.add(cat.regular(cat.generic_homog_tube() + 1, 0, 1), 1);
    m.finish(cat);
    // homogeneous tubes relabeled to consecutive ids starting at the generic one
    std::string s = m.to_string();
    CHECK(s == "P(3)+E1_2(2)*2+E4_1(2)+E5_1(1)+I(2)^+2");
    ModuleSum back = cat.sum_from_string(s);
    CHECK(back == m);
    CHECK(back.dim() == m.dim());
    CHECK(m.total_summands() == 6);
}

TEST_CASE("indec_by_dim") {
    Catalog cat(Quiver::extended_e(6, 3));
    Indec x = cat.preinjective(4, 3);
    auto found = cat.indec_by_dim(x.dim);
    REQUIRE(found.has_value());
    CHECK(*found == x);
    Indec r = cat.regular(1, 2, 2);
    found = cat.indec_by_dim(r.dim);
    REQUIRE(found.has_value());
    CHECK(*found == r);
    // multiples of delta are ambiguous
    CHECK(!cat.indec_by_dim(cat.quiver().null_root()).has_value());
}

TEST_CASE("Dynkin mode canonicalizes preinjective encodings") {
    Catalog cat(Quiver::dynkin_a(3, 3));
    Indec i1 = cat.injective(0);
    CHECK(i1.kind == IndecKind::Preprojective);
    CHECK(i1.dim == IVec{1, 0, 0});
    CHECK(cat.is_injective(i1));
    CHECK(cat.all_roots().size() == 6);
}
