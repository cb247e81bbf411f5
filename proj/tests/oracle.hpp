#pragma once

// Test-only oracles: explicit matrix representations and exact linear
// algebra, independent of the hom/ext rule system under test.

#include <map>
#include <optional>
#include <vector>

#include "tamedeg/quiver.hpp"

namespace oracle {

using tamedeg::Int;
using tamedeg::IVec;
using tamedeg::Quiver;

using Mat = std::vector<std::vector<Int>>;

struct RepContext {
    int nvertices = 0;
    std::vector<std::pair<int, int>> arrows;  // (source, target), 0-based
};

struct Rep {
    std::vector<int> dims;  // per vertex
    std::vector<Mat> mats;  // per arrow, dims[target] x dims[source]
};

Int exact_rank(const Mat& m);  // rank over Q (exact big-integer elimination)

Rep direct_sum(const RepContext& ctx, const Rep& a, const Rep& b);

// dim Hom / dim Ext as kernel/cokernel of the intertwiner map
std::pair<Int, Int> hom_ext_dims(const RepContext& ctx, const Rep& a, const Rep& b);

// --- quiver-backed representations ---
RepContext quiver_ctx(const Quiver& q);
// A_n: interval module on vertices [a,b] (0-based, inclusive)
Rep interval_rep(const Quiver& q, int a, int b);
// A~m (m >= 2): push-downs of universal-cover intervals with the given
// dimension vector (one for real roots; several candidates for multiples
// of the null root)
std::vector<Rep> cover_interval_reps(const Quiver& q, const IVec& dim);

// --- nilpotent cycle (abstract tube of period p) ---
RepContext cycle_ctx(int p);              // arrows i -> i-1 mod p
Rep tube_rep(int p, int socle, int len);  // E_{socle}(len), socle 0-based

using TubeClass = std::map<std::pair<int, int>, Int>;  // (socle, len) -> multiplicity

Rep class_rep(int p, const TubeClass& c);

// iso type of a nilpotent cycle rep from ranks of arrow composites
TubeClass cycle_type(int p, const Rep& r);

// all composite ranks r(v,t), t = 1..total dim; index [v][t-1]
std::vector<std::vector<Int>> composite_ranks(int p, const Rep& r);

// middle terms of exact sequences 0 -> E_{su}(k) -> M -> E_{sv}(l) -> 0,
// the split one excluded; enumerated via monos normalized to tuples of
// standard maps, cokernel types read off composite ranks
std::vector<TubeClass> middle_terms(int p, int su, int k, int sv, int l);

// degeneration order on same-content classes via composite-rank dominance
bool tube_leq(int p, const TubeClass& m, const TubeClass& n);

}  // namespace oracle
