#include <algorithm>
#include <set>

#include "doctest.h"
#include "tamedeg/classify.hpp"
#include "tamedeg/io.hpp"

using namespace tamedeg;

TEST_CASE("E~6 P(3) tau I(3) golden blocs") {
    Catalog cat(Quiver::extended_e(6, 3));
    HomTable homs(cat);
    Classifier cls(homs);
    Indec u = cat.projective(2);
    Indec v = cat.preinjective(2, 1);
    auto blocs = cls.classify(u, v);
    // both period-3 tubes contribute their three simples
    int tube_rows = 0;
    for (const BlocRecord& b : blocs) {
        CHECK(b.codim >= 1);
        CHECK(!b.M.shares_summand_with(cat.direct_sum(u, v)));
        auto tubes = b.M.touched_tubes();
        if (tubes.size() == 1 && b.M.summands().size() == b.M.part(IndecKind::Regular).summands().size()) {
            if (cat.tube_period(tubes[0]) == 3) {
                CHECK(b.M.total_summands() == 3);
                for (auto& [x, m] : b.M.summands()) CHECK(x.len == 1);
                tube_rows++;
            }
        }
    }
    CHECK(tube_rows == 2);
}

TEST_CASE("preorder and directed decompositions") {
    Catalog cat(Quiver::extended_e(6, 3));
    HomTable homs(cat);
    Classifier cls(homs);
    Indec p = cat.projective(2);
    Indec later = cat.preprojective(2, 2);
    Indec reg = cat.regular(0, 0, 2);
    Indec reg2 = cat.regular(1, 0, 1);
    Indec inj = cat.preinjective(0, 1);
    CHECK(cls.preceq(p, later));
    CHECK(!cls.preceq(later, p));
    CHECK(cls.preceq(p, reg));
    CHECK(cls.preceq(reg, inj));
    CHECK(!cls.preceq(reg, p));
    CHECK(!cls.preceq(inj, reg));
    CHECK(cls.preceq(reg, cat.regular(0, 1, 3)));  // same tube: comparable
    CHECK(!cls.preceq(reg, reg2));                 // different tubes: incomparable
    ModuleSum m1(cat), m2(cat);
    m1.add(p);
    m1.finish(cat);
    m2.add(reg);
    m2.add(inj);
    m2.finish(cat);
    CHECK(cls.directed_decomposition(m1, m2));
    CHECK(!cls.directed_decomposition(m2, m1));
}

TEST_CASE("Reduction I: identity split and singleton splits") {
    Catalog cat(Quiver::extended_e(6, 3));
    HomTable homs(cat);
    Classifier cls(homs);
    Indec u = cat.projective(2);
    Indec v = cat.preinjective(2, 1);
    auto blocs = cls.classify(u, v);
    REQUIRE(!blocs.empty());
    for (const BlocRecord& b : blocs) {
        ModuleSum zero(cat);
        zero.finish(cat);
        Int delta = -1;
        BlocRecord r = cls.reduce_I(b, b.M, zero, &delta, false);
        CHECK(delta == 0);
        CHECK(r.V == b.V);
        CHECK(r.codim == b.codim);
    }
    int splits = 0;
    for (const BlocRecord& b : blocs) {
        for (auto& [x, mult] : b.M.summands()) {
            ModuleSum m2(cat);
            m2.add(x);
            m2.finish(cat);
            ModuleSum m1(cat);
            for (auto& [y, k] : b.M.summands()) {
                Int keep = k - (y == x ? 1 : 0);
                if (keep > 0) m1.add(y, keep);
            }
            m1.finish(cat);
            if (m1.empty() || m1.shares_summand_with(m2)) continue;
            if (!cls.directed_decomposition(m1, m2)) continue;
            if (!cat.indec_by_dim(m1.dim() - u.dim)) continue;
            Int delta = -1;
            BlocRecord r = cls.reduce_I(b, m1, m2, &delta, true);
            CHECK(delta >= 0);  // V non-regular: Delta >= 0
            CHECK(r.codim == b.codim - delta);
            CHECK(r.codim >= 1);
            splits++;
        }
    }
    CHECK(splits > 0);
}

TEST_CASE("audits pass on E~6 blocs") {
    Catalog cat(Quiver::extended_e(6, 3));
    HomTable homs(cat);
    Classifier cls(homs);
    Indec u = cat.projective(2);
    std::vector<BlocRecord> all;
    for (int i = 0; i < 7; ++i)
        for (int k = 0; k <= 2; ++k) {
            auto blocs = cls.classify(u, cat.preinjective(i, k));
            all.insert(all.end(), blocs.begin(), blocs.end());
        }
    REQUIRE(!all.empty());
    AuditReport t1 = cls.audit_theorem1(all);
    for (auto& v : t1.violations) MESSAGE(v);
    CHECK(t1.ok());
    AuditReport st = cls.audit_structural_lemmas(all);
    for (auto& v : st.violations) MESSAGE(v);
    CHECK(st.ok());
}

TEST_CASE("multiplicity example on E~8") {
    Catalog cat(Quiver::extended_e(8, 3));
    HomTable homs(cat);
    Classifier cls(homs);
    DegenOrder order(homs);
    Indec u = cat.projective(2);
    Indec v = cat.preprojective(2, 15);
    ModuleSum m(cat);
    for (int i = 0; i <= 10; ++i) m.add(cat.preprojective(7, i));
    m.add(cat.preprojective(7, 5));
    m.finish(cat);
    ModuleSum n = cat.direct_sum(u, v);
    REQUIRE(m.dim() == n.dim());
    CHECK(order.leq(m, n));
    BlocRecord b;
    b.U = u;
    b.V = v;
    b.M = m;
    b.codim = order.codim(n, m);
    AuditReport rep = cls.audit_structural_lemmas({b});
    for (auto& viol : rep.violations) MESSAGE(viol);
    CHECK(rep.ok());
}

TEST_CASE("defectone closed form on A~3") {
    Catalog cat(Quiver::extended_a(3, 3, 1));
    HomTable homs(cat);
    Classifier cls(homs);
    DegenOrder order(homs);
    const Quiver& q = cat.quiver();
    Indec u = cat.projective(2);
    REQUIRE(q.defect(u.dim) == -1);
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k <= 2; ++k) {
            Indec v = cat.preinjective(i, k);
            REQUIRE(q.defect(v.dim) == 1);
            ModuleSum n = cat.direct_sum(u, v);
            EnumOptions opt;
            std::vector<ModuleSum> deformations;
            for (ModuleSum& m : order.enumerate_decompositions(n.dim(), opt)) {
                if (m == n) continue;
                if (order.leq(m, n)) deformations.push_back(m);
            }
            for (const ModuleSum& m : deformations) {
                CHECK(m.part(IndecKind::Preprojective).empty());
                CHECK(m.part(IndecKind::Preinjective).empty());
                std::set<int> tubes;
                for (auto& [x, mult] : m.summands()) {
                    CHECK(mult == 1);
                    CHECK(tubes.insert(x.base).second);
                    CHECK(homs.hom(u, cat.regular(x.base, cat.regular_top(x), 1)) == 1);
                }
            }
            for (const ModuleSum& a : deformations)
                for (const ModuleSum& b2 : deformations)
                    if (!(a == b2)) CHECK(!order.leq(a, b2));
            auto blocs = cls.classify(u, v);
            CHECK(blocs.size() == deformations.size());
        }
}

TEST_CASE("periodic shift reproduces direct classification") {
    Catalog cat(Quiver::extended_e(6, 3));
    HomTable homs(cat);
    Classifier cls(homs);
    TubeCalc tc(homs);
    Indec u = cat.projective(2);
    Indec v = cat.preinjective(2, 1);
    auto blocs = cls.classify(u, v);
    Indec v_shift = cat.tau_power(v, cat.quiver().coxeter_period());
    auto direct = cls.classify(u, v_shift);
    int verified = 0;
    for (const BlocRecord& b : blocs) {
        if (!tc.periodic_shift_applicable(b)) continue;
        BlocRecord s = tc.periodic_shift(b);
        CHECK(s.V == v_shift);
        CHECK(s.M.dim() == u.dim + v_shift.dim);
        bool found = false;
        for (const BlocRecord& d : direct)
            if (d.M == s.M) found = true;
        CHECK(found);
        ++verified;
    }
    CHECK(verified > 0);
    auto closed = cls.periodic_closure(blocs, 1);
    CHECK(closed.size() > blocs.size());
    int periodic = 0;
    for (const BlocRecord& b : closed)
        if (b.prov == Provenance::PeriodicImageOf) periodic++;
    CHECK(periodic == (int)(closed.size() - blocs.size()));
}

TEST_CASE("socle reduction closure on E~8 P(9)") {
    Catalog cat(Quiver::extended_e(8, 9));
    HomTable homs(cat);
    Classifier cls(homs);
    TubeCalc tc(homs);
    Indec u = cat.projective(8);
    Indec v = cat.preinjective(8, 7);
    auto blocs = cls.classify(u, v);
    int reduced_count = 0;
    for (const BlocRecord& b : blocs) {
        auto tubes = b.M.touched_tubes();
        if (tubes.size() != 1 || cat.is_homogeneous_tube(tubes[0])) continue;
        if (b.M.summands().size() != b.M.part(IndecKind::Regular).summands().size()) continue;
        if (b.M.total_summands() != cat.quiver().defect(v.dim)) continue;
        bool semisimple = true;
        for (auto& [x, m] : b.M.summands()) semisimple &= x.len == 1;
        if (semisimple) continue;
        BlocRecord r = tc.reduce_bloc_by_socle(b);
        CHECK(r.codim == b.codim);
        auto direct = cls.classify(r.U, r.V);
        bool found = false;
        for (const BlocRecord& d : direct)
            if (d.M == r.M) found = true;
        CHECK(found);
        reduced_count++;
    }
    CHECK(reduced_count > 0);
}
