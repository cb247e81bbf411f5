#include "doctest.h"
#include "tamedeg/io.hpp"
#include "tamedeg/tube.hpp"

using namespace tamedeg;

TEST_CASE("table row parsing") {
    auto rows = parse_table_rows("E~6 P(2) tau^2I(6) 1 S_1(1)+S_3(1)\nE~8 P(3) tau^14I(3) 3 S_1''(1)+S_2''(2)\n");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].type == "E~6");
    CHECK(rows[0].sink1 == 2);
    CHECK(rows[0].tau == 2);
    CHECK(rows[0].vertex1 == 6);
    CHECK(rows[0].tube1 == 1);
    REQUIRE(rows[0].m.size() == 2);
    CHECK(rows[0].m[0] == std::tuple<int, int, int>{1, 1, 1});
    CHECK(rows[0].m[1] == std::tuple<int, int, int>{3, 1, 1});
    CHECK(rows[1].m[0] == std::tuple<int, int, int>{1, 3, 1});
    CHECK(rows[1].m[1] == std::tuple<int, int, int>{2, 3, 2});
}

TEST_CASE("calibration round trip and label rendering") {
    Calibration cal;
    cal.map[{"E~6", 3}] = {{1, 2, 3}, {0, 1, 0}};
    Calibration back = Calibration::from_json(cal.to_json());
    CHECK(back.map == cal.map);
    Catalog cat(Quiver::extended_e(6, 3));
    ModuleSum m(cat);
    m.add(cat.regular(1, 0, 2));
    m.add(cat.regular(1, 2, 1));
    m.finish(cat);
    auto s = calibrated_tube_string(cat, back, "E~6", 3, m);
    REQUIRE(s.has_value());
    // tube 2 (period 3) with rot 1: socle 0 -> S_2, socle 2 -> S_1
    CHECK(*s == "S_1'(1)+S_2'(2)");
    // mixed sums are not renderable
    ModuleSum mixed(cat);
    mixed.add(cat.projective(2));
    mixed.finish(cat);
    CHECK(!calibrated_tube_string(cat, back, "E~6", 3, mixed).has_value());
}

TEST_CASE("run and bloc json round trips") {
    Catalog cat(Quiver::extended_e(6, 3));
    HomTable homs(cat);
    Classifier cls(homs);
    Indec u = cat.projective(2);
    Indec v = cat.preinjective(2, 1);
    ClassificationRun run;
    run.quiver_text = cat.quiver().to_text();
    run.quiver_label = cat.quiver().label();
    run.sink1 = 3;
    run.blocs = cls.classify(u, v);
    REQUIRE(!run.blocs.empty());
    std::string j = run_to_json(cat, run);
    ClassificationRun back = run_from_json(j);
    CHECK(back.quiver_label == run.quiver_label);
    CHECK(back.sink1 == run.sink1);
    auto blocs = run_decode_blocs(cat, j);
    REQUIRE(blocs.size() == run.blocs.size());
    for (size_t i = 0; i < blocs.size(); ++i) {
        CHECK(blocs[i].M == run.blocs[i].M);
        CHECK(blocs[i].codim == run.blocs[i].codim);
        CHECK(blocs[i].U == run.blocs[i].U);
        CHECK(blocs[i].V == run.blocs[i].V);
    }
    std::string bj = bloc_to_json(cat, run.blocs[0], run.quiver_text);
    BlocRecord b = bloc_from_json(cat, bj);
    CHECK(b.M == run.blocs[0].M);
}

TEST_CASE("dot output carries bold extensions and codim ranks") {
    AbstractTube tube(4);
    const Catalog& cat = tube.catalog();
    HomTable homs(cat);
    DegenOrder order(homs);
    TubeCalc tc(homs);
    Indec u = tube.module(1, 10), v = tube.module(3, 10);
    EnumOptions opt;
    opt.tube_only = true;
    opt.tube_id = u.base;
    DeformationPoset poset = order.deformation_poset(u, v, opt);
    std::string dot = emit_dot(tc, poset, &u, &v);
    // 7 bold nodes: the 6 nonsplit extension members plus the split maximum
    size_t bold = 0, pos = 0;
    while ((pos = dot.find("style=bold", pos)) != std::string::npos) {
        bold++;
        pos++;
    }
    CHECK(bold == 7);
    CHECK(dot.find("rank=same") != std::string::npos);
    std::string pj = emit_poset_json(poset);
    CHECK(pj.find("\"covers\"") != std::string::npos);
    // determinism
    CHECK(dot == emit_dot(tc, order.deformation_poset(u, v, opt), &u, &v));
}

TEST_CASE("pretty indecomposable names") {
    Catalog cat(Quiver::extended_e(6, 3));
    CHECK(indec_pretty(cat, cat.projective(2)) == "P(3)");
    CHECK(indec_pretty(cat, cat.preprojective(1, 2)) == "tau^-2 P(2)");
    CHECK(indec_pretty(cat, cat.preinjective(4, 3)) == "tau^3 I(5)");
    CHECK(indec_pretty(cat, cat.regular(0, 1, 4)) == "E1_2(4)");
}
