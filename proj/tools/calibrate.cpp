// Solves the tube/simple relabeling between computed labels and the
// published table, writing data/calibration.json. Run from the repo root.

#include <algorithm>
#include <iostream>
#include <map>
#include <numeric>
#include <set>

#include "tamedeg/io.hpp"

using namespace tamedeg;

namespace {

Quiver build(const std::string& type, int sink) {
    if (type == "E~6") return Quiver::extended_e(6, sink);
    if (type == "E~7") return Quiver::extended_e(7, sink);
    if (type == "E~8") return Quiver::extended_e(8, sink);
    if (type == "D~8") return Quiver::extended_d(8, sink);
    throw ParseError("unsupported type in table: " + type);
}

// multiset of (subscript, length) pairs
using LabelSet = std::multiset<std::pair<int, int>>;

}  // namespace

int main(int argc, char** argv) {
    std::string table_path = argc > 1 ? argv[1] : "data/mindeg_table.txt";
    std::string out_path = argc > 2 ? argv[2] : "data/calibration.json";
    auto rows = parse_table_rows(load_text_file(table_path));
    std::map<std::pair<std::string, int>, std::vector<TableRow>> groups;
    for (const TableRow& r : rows) groups[{r.type, r.sink1}].push_back(r);

    Calibration cal;
    for (auto& [key, group] : groups) {
        auto [type, sink1] = key;
        std::cerr << "calibrating " << type << " sink " << sink1 << "\n";
        Quiver q = build(type, sink1);
        Catalog cat(q);
        HomTable homs(cat);
        Classifier cls(homs);
        Indec u = cat.projective(sink1 - 1);
        int T = cat.nonhomog_tube_count();

        // classify each distinct V once; collect the one-tube blocs per tube
        std::map<std::pair<int, int>, std::map<int, std::vector<LabelSet>>> found;  // (i,k) -> tube -> blocs
        std::set<std::pair<int, int>> vs;
        for (const TableRow& r : group) vs.insert({r.vertex1, r.tau});
        for (auto [i, k] : vs) {
            Indec v = cat.preinjective(i - 1, k);
            for (const BlocRecord& b : cls.classify(u, v)) {
                auto tubes = b.M.touched_tubes();
                if (tubes.size() != 1 || cat.is_homogeneous_tube(tubes[0])) continue;
                if (b.M.part(IndecKind::Regular).summands().size() != b.M.summands().size()) continue;
                LabelSet ls;
                for (auto& [x, mult] : b.M.summands())
                    for (Int c = 0; c < mult; ++c) ls.insert({x.shift, x.len});  // 0-based socle for now
                found[{i, k}][tubes[0]].push_back(ls);
            }
        }

        // expected sets per (V, paper tube)
        std::map<std::pair<std::pair<int, int>, int>, std::vector<LabelSet>> expected;
        for (const TableRow& r : group) {
            LabelSet ls;
            for (auto& [sub, tube1, len] : r.m) ls.insert({sub, len});
            expected[{{r.vertex1, r.tau}, r.tube1}].push_back(ls);
        }

        // search tube bijection + rotations
        std::vector<int> perm(T);
        std::iota(perm.begin(), perm.end(), 1);
        std::vector<std::pair<std::vector<int>, std::vector<int>>> solutions;
        std::sort(perm.begin(), perm.end());
        std::vector<int> ourtube_for_paper(T + 1);
        do {
            // perm[t] = paper tube number of our tube t
            for (int t = 0; t < T; ++t) ourtube_for_paper[perm[t]] = t;
            std::vector<std::vector<int>> rot_options(T);
            bool feasible = true;
            for (int t = 0; t < T && feasible; ++t) {
                int p = cat.tube_period(t);
                for (int rot = 0; rot < p; ++rot) {
                    bool ok = true;
                    for (auto& [vkey, exp] : expected) {
                        if (vkey.second != perm[t]) continue;
                        auto it = found.find(vkey.first);
                        std::vector<LabelSet> got;
                        if (it != found.end() && it->second.count(t)) got = it->second.at(t);
                        std::vector<LabelSet> mapped;
                        for (const LabelSet& ls : got) {
                            LabelSet ms;
                            for (auto& [s, len] : ls) ms.insert({(s + rot) % p + 1, len});
                            mapped.push_back(ms);
                        }
                        std::sort(mapped.begin(), mapped.end());
                        auto want = exp;
                        std::sort(want.begin(), want.end());
                        if (mapped != want) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) rot_options[t].push_back(rot);
                }
                if (rot_options[t].empty()) feasible = false;
            }
            if (!feasible) continue;
            std::vector<int> rot(T, 0);
            for (int t = 0; t < T; ++t) rot[t] = rot_options[t][0];
            solutions.push_back({perm, rot});
        } while (std::next_permutation(perm.begin(), perm.end()));

        if (solutions.empty()) {
            std::cerr << "  NO consistent relabeling found\n";
            return 1;
        }
        std::sort(solutions.begin(), solutions.end());
        cal.map[{type, sink1}] = solutions[0];
        std::cerr << "  " << solutions.size() << " consistent relabelings; stored the smallest\n";
    }
    cal.save_file(out_path);
    std::cerr << "wrote " << out_path << "\n";
    return 0;
}
