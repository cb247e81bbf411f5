#include "tamedeg/degen.hpp"

#include <algorithm>
#include <set>

namespace tamedeg {

Int DegenOrder::window() const {
    int p = cat_.quiver().coxeter_period();
    return 2 * (Int(p) + cat_.quiver().diameter());
}

std::vector<Indec> DegenOrder::test_set(const ModuleSum& m, const ModuleSum& n, Int window_factor) const {
    const Quiver& q = cat_.quiver();
    std::set<Indec> tests;
    if (q.kind() == QuiverKind::Dynkin) {
        for (const Indec& x : cat_.all_roots()) tests.insert(x);
        return std::vector<Indec>(tests.begin(), tests.end());
    }
    Int w = window() * window_factor;
    std::vector<Indec> pseeds, iseeds;
    Int lmax = 0;
    std::set<int> touched;
    for (const ModuleSum* side : {&m, &n})
        for (auto& [x, mult] : side->summands()) {
            if (x.kind == IndecKind::Preprojective) pseeds.push_back(x);
            else if (x.kind == IndecKind::Preinjective) iseeds.push_back(x);
            else {
                touched.insert(x.base);
                lmax = std::max(lmax, (Int)x.len);
            }
        }
    for (const Indec& x : cat_.preproj_successors_within(pseeds, w)) tests.insert(x);
    for (const Indec& x : cat_.preinj_predecessors_within(iseeds, w)) tests.insert(x);
    Int lbound = lmax + q.coxeter_period();
    for (int t = 0; t < cat_.nonhomog_tube_count(); ++t) {
        int p = cat_.tube_period(t);
        Int tb = touched.count(t) ? lbound : 1;  // all simples always, long modules in touched tubes
        for (int s = 0; s < p; ++s)
            for (Int l = 1; l <= tb; ++l) tests.insert(cat_.regular(t, s, (int)l));
    }
    // touched homogeneous tubes, plus one fresh homogeneous tube
    int fresh = cat_.generic_homog_tube();
    for (int t : touched)
        if (cat_.is_homogeneous_tube(t)) {
            fresh = std::max(fresh, t + 1);
            for (Int l = 1; l <= lbound; ++l) tests.insert(cat_.regular(t, 0, (int)l));
        }
    for (Int l = 1; l <= lbound; ++l) tests.insert(cat_.regular(fresh, 0, (int)l));
    return std::vector<Indec>(tests.begin(), tests.end());
}

bool DegenOrder::leq(const ModuleSum& m, const ModuleSum& n, Int window_factor) const {
    if (m.dim() != n.dim()) throw DegenError("leq needs equal dimension vectors");
    for (const Indec& x : test_set(m, n, window_factor))
        if (homs_.hom_sum(m, x) > homs_.hom_sum(n, x)) return false;
    return true;
}

bool DegenOrder::degeneration_test_UV(const ModuleSum& m, const Indec& u, const Indec& v) const {
    const Quiver& q = cat_.quiver();
    if (q.kind() != QuiverKind::ExtendedDynkin) throw DegenError("degeneration test needs an extended Dynkin quiver");
    if (!cat_.is_simple_projective(u)) throw DegenError("degeneration test needs U simple projective");
    if (v.kind != IndecKind::Preinjective) throw DegenError("degeneration test needs V preinjective");
    if (m.dim() != u.dim + v.dim) throw DegenError("degeneration test needs dim M = dim U+V");

    if (m == cat_.direct_sum(u, v)) return true;  // equality case
    ModuleSum mp = m.part(IndecKind::Preprojective);
    ModuleSum mi = m.part(IndecKind::Preinjective);

    // (iii) 0 < d := defect(V) - defect(M_I), and [U,E] >= [M,E] per simple
    Int d = q.defect(v.dim) - q.defect(mi.dim());
    if (d <= 0) return false;
    std::set<int> tubes;
    for (int t = 0; t < cat_.nonhomog_tube_count(); ++t) tubes.insert(t);
    int fresh = cat_.generic_homog_tube();
    for (int t : m.touched_tubes())
        if (cat_.is_homogeneous_tube(t)) {
            tubes.insert(t);
            fresh = std::max(fresh, t + 1);
        }
    tubes.insert(fresh);
    for (int t : tubes) {
        int p = cat_.tube_period(t);
        for (int s = 0; s < p; ++s) {
            Indec e = cat_.regular(t, s, 1);
            if (homs_.hom(u, e) < homs_.hom_sum(m, e)) return false;
        }
    }
    // (i) windowed preprojective inequalities
    Int w = window();
    std::vector<Indec> pseeds;
    for (auto& [x, mult] : mp.summands()) pseeds.push_back(x);
    for (const Indec& t : cat_.preproj_successors_within(pseeds, w))
        if (homs_.hom(u, t) < homs_.hom_sum(mp, t)) return false;
    // (ii) windowed preinjective inequalities
    std::vector<Indec> iseeds;
    for (auto& [x, mult] : mi.summands()) iseeds.push_back(x);
    for (const Indec& t : cat_.preinj_predecessors_within(iseeds, w))
        if (homs_.hom(t, v) < homs_.hom_sum(t, mi)) return false;
    return true;
}

bool DegenOrder::regular_degeneration_test(const ModuleSum& m, const Indec& u, const Indec& v) const {
    auto tubes = m.touched_tubes();
    if (m.empty() || tubes.size() != 1 || m.part(IndecKind::Regular).summands().size() != m.summands().size())
        throw DegenError("regular degeneration test needs M inside one tube");
    if (m.dim() != u.dim + v.dim) return false;
    int t = tubes[0];
    int p = cat_.tube_period(t);
    for (int s = 0; s < p; ++s) {
        Indec e = cat_.regular(t, s, 1);
        if (homs_.hom(u, e) < homs_.hom_sum(m, e)) return false;
    }
    return true;
}

std::vector<ModuleSum> DegenOrder::enumerate_decompositions(const IVec& target, const EnumOptions& opt) const {
    cat_.quiver().check_dim(target);
    for (Int x : target)
        if (x > opt.cap) throw CapError("enumeration target exceeds the configured cap");
    std::vector<Indec> pool;
    if (opt.tube_only) {
        if (opt.tube_id < 0) throw DegenError("tube_only enumeration needs a tube id");
        for (const Indec& r : cat_.roots_up_to(target))
            if (r.kind == IndecKind::Regular && r.base == opt.tube_id) pool.push_back(r);
        // homogeneous backing: lengths up to bound in the single tube
        if (cat_.is_homogeneous_tube(opt.tube_id)) {
            pool.clear();
            const IVec& delta = cat_.quiver().null_root();
            for (int l = 1; leq_componentwise(Int(l) * delta, target); ++l)
                pool.push_back(cat_.regular(opt.tube_id, 0, l));
        }
    } else {
        pool = cat_.roots_up_to(target);
    }
    std::sort(pool.begin(), pool.end());
    std::vector<ModuleSum> out;
    std::vector<std::pair<Indec, Int>> chosen;
    // DFS in lexicographic order over the canonically sorted pool
    auto rec = [&](auto&& self, size_t idx, IVec rest) -> void {
        if (is_zero(rest)) {
            ModuleSum m(cat_);
            for (auto& [x, k] : chosen) m.add(x, k);
            m.finish(cat_);
            if (!opt.filter || opt.filter(m)) out.push_back(m);
            return;
        }
        if (idx == pool.size()) return;
        const Indec& x = pool[idx];
        Int maxmult = 0;
        {
            IVec r = rest;
            while (leq_componentwise(x.dim, r)) {
                r -= x.dim;
                ++maxmult;
            }
        }
        for (Int k = maxmult; k >= 1; --k) {
            chosen.push_back({x, k});
            self(self, idx + 1, rest - k * x.dim);
            chosen.pop_back();
        }
        self(self, idx + 1, rest);
    };
    rec(rec, 0, target);

    // expand homogeneous summands into canonical tube groupings
    std::vector<ModuleSum> expanded;
    int h0 = cat_.generic_homog_tube();
    for (ModuleSum& m : out) {
        std::vector<int> homog_lens;
        std::vector<std::pair<Indec, Int>> rest;
        for (auto& [x, k] : m.summands()) {
            if (x.kind == IndecKind::Regular && x.base >= h0)
                for (Int c = 0; c < k; ++c) homog_lens.push_back(x.len);
            else
                rest.push_back({x, k});
        }
        if ((Int)homog_lens.size() <= 1) {
            expanded.push_back(m);
            continue;
        }
        if ((Int)homog_lens.size() > 12)
            throw CapError("too many homogeneous summands for grouping enumeration");
        // canonical set partitions of the multiset homog_lens
        std::set<std::vector<std::vector<int>>> partitions;
        std::vector<std::vector<int>> groups;
        auto place = [&](auto&& self2, size_t i) -> void {
            if (i == homog_lens.size()) {
                auto canon = groups;
                for (auto& g : canon) std::sort(g.begin(), g.end(), std::greater<int>());
                std::sort(canon.begin(), canon.end(), std::greater<std::vector<int>>());
                partitions.insert(canon);
                return;
            }
            for (size_t g = 0; g < groups.size(); ++g) {
                groups[g].push_back(homog_lens[i]);
                self2(self2, i + 1);
                groups[g].pop_back();
            }
            if ((Int)groups.size() < opt.max_homog_tubes) {
                groups.push_back({homog_lens[i]});
                self2(self2, i + 1);
                groups.pop_back();
            }
        };
        place(place, 0);
        for (const auto& part : partitions) {
            ModuleSum e(cat_);
            for (auto& [x, k] : rest) e.add(x, k);
            for (size_t g = 0; g < part.size(); ++g)
                for (int len : part[g]) e.add(cat_.regular(h0 + (int)g, 0, len));
            e.finish(cat_);
            if (!opt.filter || opt.filter(e)) expanded.push_back(e);
        }
    }
    std::sort(expanded.begin(), expanded.end());
    expanded.erase(std::unique(expanded.begin(), expanded.end()), expanded.end());
    return expanded;
}

std::vector<std::vector<Int>> DegenOrder::hom_matrix(const std::vector<ModuleSum>& elems, const std::vector<Indec>& tests) const {
    std::vector<std::vector<Int>> mat(elems.size(), std::vector<Int>(tests.size()));
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = 0; j < tests.size(); ++j) mat[i][j] = homs_.hom_sum(elems[i], tests[j]);
    return mat;
}

DeformationPoset DegenOrder::poset_of_target(const ModuleSum& n, const EnumOptions& opt) const {
    DeformationPoset poset;
    poset.target = n;
    std::vector<ModuleSum> cands = enumerate_decompositions(n.dim(), opt);
    // shared test set: union of windows around every candidate summand
    ModuleSum everything(cat_);
    std::set<Indec> all_summands;
    for (const ModuleSum& m : cands)
        for (auto& [x, k] : m.summands()) all_summands.insert(x);
    for (const Indec& x : all_summands) everything.add(x);
    everything.finish(cat_);
    std::vector<Indec> tests = test_set(everything, n, 1);
    std::vector<Int> nvec(tests.size());
    for (size_t j = 0; j < tests.size(); ++j) nvec[j] = homs_.hom_sum(n, tests[j]);
    std::vector<ModuleSum> elems;
    std::vector<std::vector<Int>> vecs;
    for (ModuleSum& m : cands) {
        std::vector<Int> v(tests.size());
        bool ok = true;
        for (size_t j = 0; j < tests.size(); ++j) {
            v[j] = homs_.hom_sum(m, tests[j]);
            if (v[j] > nvec[j]) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        for (size_t j = 0; j < tests.size(); ++j) v[j] = homs_.hom_sum(m, tests[j]);
        elems.push_back(std::move(m));
        vecs.push_back(std::move(v));
    }

    poset.elements = elems;
    poset.target_index = -1;
    for (size_t i = 0; i < elems.size(); ++i)
        if (elems[i] == n) poset.target_index = (int)i;
    if (poset.target_index < 0) throw InternalError("target is missing from its own deformation poset");
    size_t cnt = elems.size();
    poset.codims.resize(cnt);
    Int hn = homs_.hom_sum(n, n);
    for (size_t i = 0; i < cnt; ++i) poset.codims[i] = hn - homs_.hom_sum(elems[i], elems[i]);
    for (size_t i = 0; i < cnt; ++i)
        for (size_t j = i + 1; j < cnt; ++j)
            if (vecs[i] == vecs[j]) throw InternalError("test set cannot separate two distinct deformations");
    poset.below.assign(cnt, std::vector<char>(cnt, 0));
    for (size_t i = 0; i < cnt; ++i)
        for (size_t j = 0; j < cnt; ++j) {
            if (i == j) continue;
            bool dom = true;
            for (size_t t = 0; t < tests.size() && dom; ++t)
                if (vecs[i][t] > vecs[j][t]) dom = false;
            if (dom) poset.below[i][j] = 1;
        }
    for (size_t i = 0; i < cnt; ++i)
        for (size_t j = 0; j < cnt; ++j)
            if (i != j && poset.below[i][j] && poset.below[j][i]) throw InternalError("degeneration order violates antisymmetry");
    for (size_t i = 0; i < cnt; ++i)
        for (size_t j = 0; j < cnt; ++j)
            if (poset.below[i][j] && poset.codims[i] <= poset.codims[j])
                throw InternalError("codimension does not increase strictly downward in the poset");
    // transitive reduction: cover edges
    for (size_t i = 0; i < cnt; ++i)
        for (size_t j = 0; j < cnt; ++j) {
            if (!poset.below[i][j]) continue;
            bool direct = true;
            for (size_t k = 0; k < cnt && direct; ++k)
                if (poset.below[i][k] && poset.below[k][j]) direct = false;
            if (direct) poset.covers.push_back({(int)i, (int)j});
        }
    return poset;
}

DeformationPoset DegenOrder::deformation_poset(const Indec& u, const Indec& v, const EnumOptions& opt) const {
    return poset_of_target(cat_.direct_sum(u, v), opt);
}

std::vector<DegenPair> DegenOrder::minimal_degenerations(const ModuleSum& n, const EnumOptions& opt) const {
    DeformationPoset poset = poset_of_target(n, opt);
    std::vector<DegenPair> out;
    for (auto& [i, j] : poset.covers)
        if (j == poset.target_index)
            out.push_back(DegenPair{poset.elements[i], n, poset.codims[i]});
    std::sort(out.begin(), out.end(), [](const DegenPair& a, const DegenPair& b) { return a.lower < b.lower; });
    return out;
}

Int DegenOrder::codim(const ModuleSum& n, const ModuleSum& m) const {
    if (m == n) throw DegenError("codim needs a proper degeneration");
    if (!leq(m, n)) throw DegenError("codim: modules are not comparable");
    return homs_.hom_sum(n, n) - homs_.hom_sum(m, m);
}

}  // namespace tamedeg
