#include "tamedeg/classify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <tuple>

namespace tamedeg {

Int Classifier::classify_window() const {
    const Quiver& q = cat_.quiver();
    return 4 * Int(q.coxeter_period()) + q.diameter() + 2 * Int(q.coxeter_period());
}

bool Classifier::preceq(const Indec& x, const Indec& y) const {
    if (x == y) return true;
    if (cat_.quiver().kind() == QuiverKind::Dynkin) return cat_.path_distance(x, y).has_value();
    auto rank = [](IndecKind k) { return (int)k; };
    if (rank(x.kind) < rank(y.kind)) return true;   // preproj < regular < preinj always
    if (rank(x.kind) > rank(y.kind)) return false;
    switch (x.kind) {
        case IndecKind::Preprojective:
        case IndecKind::Preinjective:
            return cat_.path_distance(x, y).has_value();
        case IndecKind::Regular:
            return x.base == y.base;  // same tube: comparable (both ways)
    }
    return false;
}

bool Classifier::directed_decomposition(const ModuleSum& m1, const ModuleSum& m2) const {
    for (auto& [x2, k2] : m2.summands())
        for (auto& [x1, k1] : m1.summands()) {
            if (x1.kind == IndecKind::Regular) {
                if (preceq(x2, x1)) return false;
            } else {
                if (preceq(x2, x1) && !preceq(x1, x2)) return false;
            }
        }
    return true;
}

std::vector<ModuleSum> Classifier::enumerate_candidates(const Indec& u, const Indec& v, const EnumOptions& opt) const {
    const Quiver& q = cat_.quiver();
    IVec target = u.dim + v.dim;
    for (Int x : target)
        if (x > opt.cap) throw CapError("classification target exceeds the configured cap");
    Int w = classify_window();
    // candidate pools per Lemma naheprepsum (plus margin): preprojective
    // summands near U, preinjective summands near V, all regular roots
    std::vector<Indec> pool;
    for (const Indec& x : cat_.preproj_successors_within({u}, w))
        if (leq_componentwise(x.dim, target)) pool.push_back(x);
    for (const Indec& x : cat_.preinj_predecessors_within({v}, w))
        if (leq_componentwise(x.dim, target)) pool.push_back(x);
    for (const Indec& x : cat_.roots_up_to(target))
        if (x.kind == IndecKind::Regular) pool.push_back(x);
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    if (opt.tube_only) {
        std::vector<Indec> tp;
        for (const Indec& x : pool)
            if (x.kind == IndecKind::Regular && x.base == opt.tube_id) tp.push_back(x);
        pool = tp;
    }

    // prefix prunes, all necessary conditions on deformations of U+V:
    //  - [M,E] <= [U,E] per regular simple (condition (iii))
    //  - defect(M_I) <= defect(V) - 1 and defect(M_P) >= defect(U) + 1
    //  - [M_P, X] <= [U, X] at every chosen preprojective X (condition (i)
    //    at T = X), and dually [X, M_I] <= [X, V]
    std::map<std::pair<int, int>, Int> top_budget;  // (tube, simple) -> [U,E]
    std::set<int> tube_ids;
    for (const Indec& x : pool)
        if (x.kind == IndecKind::Regular) tube_ids.insert(x.base);
    for (int t : tube_ids)
        for (int s = 0; s < cat_.tube_period(t); ++s)
            top_budget[{t, s}] = homs_.hom(u, cat_.regular(t, s, 1));
    Int idef_budget = q.defect(v.dim) - 1;
    Int pdef_budget = -q.defect(u.dim) - 1;  // sum of -defect over preprojective summands

    std::vector<Indec> ppool, rpool, ipool;
    for (const Indec& x : pool) {
        if (x.kind == IndecKind::Preprojective) ppool.push_back(x);
        else if (x.kind == IndecKind::Regular) rpool.push_back(x);
        else ipool.push_back(x);
    }
    using Parts = std::vector<std::pair<Indec, Int>>;

    // preprojective parts, indexed by dimension vector (meet in the middle)
    std::map<IVec, std::vector<Parts>> pparts;
    {
        Parts chosen;
        auto rec = [&](auto&& self, size_t idx, IVec used, Int pdef) -> void {
            pparts[used].push_back(chosen);
            IVec room = target - used;
            for (size_t i = idx; i < ppool.size(); ++i) {
                const Indec& x = ppool[i];
                Int dx = -q.defect(x.dim);
                Int maxmult = (pdef_budget - pdef) / dx;
                {
                    IVec r = room;
                    Int fit = 0;
                    while (fit < maxmult && leq_componentwise(x.dim, r)) {
                        r -= x.dim;
                        ++fit;
                    }
                    maxmult = fit;
                }
                auto hom_ok = [&](Int mult) {
                    Int lhs = mult * homs_.hom(x, x);
                    for (auto& [y, k] : chosen) lhs += k * homs_.hom(y, x);
                    return lhs <= homs_.hom(u, x);
                };
                while (maxmult >= 1 && !hom_ok(maxmult)) --maxmult;
                for (Int k = maxmult; k >= 1; --k) {
                    chosen.push_back({x, k});
                    self(self, i + 1, used + k * x.dim, pdef + k * dx);
                    chosen.pop_back();
                }
            }
        };
        rec(rec, 0, IVec(target.size(), 0), 0);
    }

    // DFS over preinjective and regular summands; preprojective completion
    // by dimension lookup
    std::vector<ModuleSum> out;
    Parts chosen;
    std::map<std::pair<int, int>, Int> top_used;
    auto emit = [&](const IVec& rest) {
        auto it = pparts.find(rest);
        if (it == pparts.end()) return;
        for (const Parts& pp : it->second) {
            ModuleSum m(cat_);
            for (auto& [x, k] : chosen) m.add(x, k);
            for (auto& [x, k] : pp) m.add(x, k);
            m.finish(cat_);
            out.push_back(m);
        }
    };
    size_t npool = ipool.size() + rpool.size();
    auto rec = [&](auto&& self, size_t idx, IVec rest, Int idef) -> void {
        emit(rest);
        for (size_t i = idx; i < npool; ++i) {
            bool is_inj = i < ipool.size();
            const Indec& x = is_inj ? ipool[i] : rpool[i - ipool.size()];
            Int maxmult = 0;
            {
                IVec r = rest;
                while (leq_componentwise(x.dim, r)) {
                    r -= x.dim;
                    ++maxmult;
                }
            }
            if (is_inj) {
                Int dx = q.defect(x.dim);
                maxmult = std::min(maxmult, (idef_budget - idef) / dx);
                auto hom_ok = [&](Int mult) {
                    Int lhs = mult * homs_.hom(x, x);
                    for (auto& [y, k] : chosen)
                        if (y.kind == IndecKind::Preinjective) lhs += k * homs_.hom(x, y);
                    return lhs <= homs_.hom(x, v);
                };
                while (maxmult >= 1 && !hom_ok(maxmult)) --maxmult;
                for (Int k = maxmult; k >= 1; --k) {
                    chosen.push_back({x, k});
                    self(self, i + 1, rest - k * x.dim, idef + k * dx);
                    chosen.pop_back();
                }
            } else {
                // homogeneous summands are only budgeted per tube after the
                // grouping step; non-homogeneous tops are budgeted here
                if (!cat_.is_homogeneous_tube(x.base)) {
                    auto key = std::pair<int, int>{x.base, cat_.regular_top(x)};
                    maxmult = std::min(maxmult, top_budget[key] - top_used[key]);
                    for (Int k = maxmult; k >= 1; --k) {
                        chosen.push_back({x, k});
                        top_used[key] += k;
                        self(self, i + 1, rest - k * x.dim, idef);
                        top_used[key] -= k;
                        chosen.pop_back();
                    }
                } else {
                    for (Int k = maxmult; k >= 1; --k) {
                        chosen.push_back({x, k});
                        self(self, i + 1, rest - k * x.dim, idef);
                        chosen.pop_back();
                    }
                }
            }
        }
    };
    rec(rec, 0, target, 0);


    // distribute homogeneous summands over fresh tubes subject to the
    // per-tube top budget [U,E] = -defect(U) ... = dim at the sink
    Int homog_budget = homs_.hom(u, cat_.regular(cat_.generic_homog_tube(), 0, 1));
    std::vector<ModuleSum> expanded;
    int h0 = cat_.generic_homog_tube();
    for (ModuleSum& m : out) {
        std::vector<int> hl;
        std::vector<std::pair<Indec, Int>> restparts;
        for (auto& [x, k] : m.summands()) {
            if (x.kind == IndecKind::Regular && x.base >= h0)
                for (Int c = 0; c < k; ++c) hl.push_back(x.len);
            else restparts.push_back({x, k});
        }
        if (hl.empty()) {
            expanded.push_back(std::move(m));
            continue;
        }
        if ((Int)hl.size() > 12) throw CapError("too many homogeneous summands for grouping enumeration");
        std::set<std::vector<std::vector<int>>> partitions;
        std::vector<std::vector<int>> groups;
        auto place = [&](auto&& self2, size_t i) -> void {
            if (i == hl.size()) {
                auto canon = groups;
                for (auto& g : canon) std::sort(g.begin(), g.end(), std::greater<int>());
                std::sort(canon.begin(), canon.end(), std::greater<std::vector<int>>());
                partitions.insert(canon);
                return;
            }
            for (size_t g = 0; g < groups.size(); ++g) {
                if ((Int)groups[g].size() >= homog_budget) continue;  // [M,E] <= [U,E] per tube
                groups[g].push_back(hl[i]);
                self2(self2, i + 1);
                groups[g].pop_back();
            }
            groups.push_back({hl[i]});
            self2(self2, i + 1);
            groups.pop_back();
        };
        place(place, 0);
        for (const auto& part : partitions) {
            ModuleSum e(cat_);
            for (auto& [x, k] : restparts) e.add(x, k);
            for (size_t g = 0; g < part.size(); ++g)
                for (int len : part[g]) e.add(cat_.regular(h0 + (int)g, 0, len));
            e.finish(cat_);
            expanded.push_back(e);
        }
    }
    std::sort(expanded.begin(), expanded.end());
    expanded.erase(std::unique(expanded.begin(), expanded.end()), expanded.end());
    return expanded;
}
std::vector<BlocRecord> Classifier::classify(const Indec& u, const Indec& v, const EnumOptions& opt) const {
    const Quiver& q = cat_.quiver();
    ModuleSum n = cat_.direct_sum(u, v);
    bool special = q.kind() == QuiverKind::ExtendedDynkin && cat_.is_simple_projective(u) && v.kind == IndecKind::Preinjective;
    const bool prof = getenv("TAMEDEG_PROFILE") != nullptr;
    auto t = std::chrono::steady_clock::now();
    auto tick = [&](const char* what) {
        if (!prof) return;
        auto now = std::chrono::steady_clock::now();
        fprintf(stderr, "[classify] %s: %lld ms\n", what,
                (long long)std::chrono::duration_cast<std::chrono::milliseconds>(now - t).count());
        t = now;
    };

    std::vector<ModuleSum> deformations;
    if (special) {
        std::vector<ModuleSum> cands = enumerate_candidates(u, v, opt);
        if (prof) fprintf(stderr, "[classify] candidates: %zu\n", cands.size());
        tick("enumerate");
        // batch evaluation of the Degeneration Test: shared windows over the
        // union of candidate summands (checking extra preprojective or
        // preinjective tests never changes the outcome, the inequalities
        // hold at every such test for a true deformation)
        std::map<Indec, int> sidx;
        std::vector<Indec> summands;
        for (const ModuleSum& m : cands)
            for (auto& [x, k] : m.summands())
                if (sidx.emplace(x, (int)summands.size()).second) summands.push_back(x);
        Int w = order_.window();
        std::vector<Indec> pseeds, iseeds;
        for (const Indec& x : summands) {
            if (x.kind == IndecKind::Preprojective) pseeds.push_back(x);
            if (x.kind == IndecKind::Preinjective) iseeds.push_back(x);
        }
        std::vector<Indec> tp = cat_.preproj_successors_within(pseeds, w);
        std::vector<Indec> ti = cat_.preinj_predecessors_within(iseeds, w);
        std::vector<Indec> simples;
        for (int tt = 0; tt < cat_.nonhomog_tube_count(); ++tt)
            for (int ss = 0; ss < cat_.tube_period(tt); ++ss) simples.push_back(cat_.regular(tt, ss, 1));
        int max_homog = cat_.generic_homog_tube();
        for (const Indec& x : summands)
            if (x.kind == IndecKind::Regular && cat_.is_homogeneous_tube(x.base)) max_homog = std::max(max_homog, x.base + 1);
        for (int tt = cat_.generic_homog_tube(); tt <= max_homog; ++tt) simples.push_back(cat_.regular(tt, 0, 1));
        // summand x test matrices
        size_t ns = summands.size();
        std::vector<std::vector<Int>> hp(ns), hi(ns), he(ns);
        for (size_t i = 0; i < ns; ++i) {
            hp[i].resize(tp.size());
            for (size_t j = 0; j < tp.size(); ++j)
                hp[i][j] = summands[i].kind == IndecKind::Preprojective ? homs_.hom(summands[i], tp[j]) : 0;
            hi[i].resize(ti.size());
            for (size_t j = 0; j < ti.size(); ++j)
                hi[i][j] = summands[i].kind == IndecKind::Preinjective ? homs_.hom(ti[j], summands[i]) : 0;
            he[i].resize(simples.size());
            for (size_t j = 0; j < simples.size(); ++j) he[i][j] = homs_.hom(summands[i], simples[j]);
        }
        std::vector<Int> up(tp.size()), vi(ti.size()), ue(simples.size());
        for (size_t j = 0; j < tp.size(); ++j) up[j] = homs_.hom(u, tp[j]);
        for (size_t j = 0; j < ti.size(); ++j) vi[j] = homs_.hom(ti[j], v);
        for (size_t j = 0; j < simples.size(); ++j) ue[j] = homs_.hom(u, simples[j]);
        std::vector<Int> sdef(ns);
        for (size_t i = 0; i < ns; ++i) sdef[i] = q.defect(summands[i].dim);
        Int dv = q.defect(v.dim);
        tick("test prep");
        std::vector<std::pair<int, Int>> parts;
        for (const ModuleSum& m : cands) {
            if (m == n) continue;
            parts.clear();
            for (auto& [x, k] : m.summands()) parts.push_back({sidx[x], k});
            if (opt.tube_only) {
                if (order_.regular_degeneration_test(m, u, v)) deformations.push_back(m);
                continue;
            }
            // (iii) defect
            Int idef = 0;
            for (auto& [i, k] : parts)
                if (summands[i].kind == IndecKind::Preinjective) idef += k * sdef[i];
            if (dv - idef <= 0) continue;
            // (iii) simples
            bool ok = true;
            for (size_t j = 0; j < simples.size() && ok; ++j) {
                Int lhs = 0;
                for (auto& [i, k] : parts) lhs += k * he[i][j];
                if (lhs > ue[j]) ok = false;
            }
            if (!ok) continue;
            // (ii) preinjective window
            for (size_t j = 0; j < ti.size() && ok; ++j) {
                Int lhs = 0;
                for (auto& [i, k] : parts)
                    if (summands[i].kind == IndecKind::Preinjective) lhs += k * hi[i][j];
                if (lhs > vi[j]) ok = false;
            }
            if (!ok) continue;
            // (i) preprojective window
            for (size_t j = 0; j < tp.size() && ok; ++j) {
                Int lhs = 0;
                for (auto& [i, k] : parts)
                    if (summands[i].kind == IndecKind::Preprojective) lhs += k * hp[i][j];
                if (lhs > up[j]) ok = false;
            }
            if (ok) deformations.push_back(m);
        }
        if (prof) fprintf(stderr, "[classify] deformations: %zu\n", deformations.size());
        tick("filter");
    } else {
        EnumOptions o = opt;
        for (ModuleSum& m : order_.enumerate_decompositions(n.dim(), o)) {
            if (m == n) continue;
            if (order_.leq(m, n)) deformations.push_back(m);
        }
    }

    // maximal elements among the deformations = minimal degenerations of N.
    // Streaming by descending self-hom against the running maximal set;
    // dominance over the shared test set is transitive, so comparing
    // against maximal elements alone is enough.
    std::map<Indec, int> sidx;
    std::vector<Indec> summands;
    for (const ModuleSum& m : deformations)
        for (auto& [x, k] : m.summands())
            if (sidx.emplace(x, (int)summands.size()).second) summands.push_back(x);
    ModuleSum everything(cat_);
    for (const Indec& x : summands) everything.add(x);
    everything.finish(cat_);
    std::vector<Indec> tests = order_.test_set(everything, n, 1);
    if (prof) fprintf(stderr, "[classify] tests: %zu\n", tests.size());
    std::vector<std::vector<Int>> hmat(summands.size(), std::vector<Int>(tests.size()));
    for (size_t i = 0; i < summands.size(); ++i)
        for (size_t j = 0; j < tests.size(); ++j) hmat[i][j] = homs_.hom(summands[i], tests[j]);
    tick("hom matrix");
    std::vector<Int> self_hom(deformations.size());
    for (size_t i = 0; i < deformations.size(); ++i) self_hom[i] = homs_.hom_sum(deformations[i], deformations[i]);
    std::vector<size_t> order_idx(deformations.size());
    for (size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
    std::sort(order_idx.begin(), order_idx.end(), [&](size_t a, size_t b) {
        if (self_hom[a] != self_hom[b]) return self_hom[a] > self_hom[b];
        return deformations[a] < deformations[b];
    });
    std::vector<std::vector<Int>> max_vecs;
    std::vector<size_t> max_ids;
    std::vector<Int> vec(tests.size());
    for (size_t oi : order_idx) {
        const ModuleSum& m = deformations[oi];
        std::fill(vec.begin(), vec.end(), 0);
        for (auto& [x, k] : m.summands()) {
            const std::vector<Int>& row = hmat[sidx[x]];
            for (size_t j = 0; j < tests.size(); ++j) vec[j] += k * row[j];
        }
        bool dominated = false;
        for (size_t mi = 0; mi < max_vecs.size() && !dominated; ++mi) {
            if (self_hom[max_ids[mi]] <= self_hom[oi]) continue;  // proper needs strictly larger self-hom
            bool dom = true;
            const std::vector<Int>& lv = max_vecs[mi];
            for (size_t j = 0; j < tests.size() && dom; ++j)
                if (vec[j] > lv[j]) dom = false;
            dominated = dom;
        }
        if (!dominated) {
            max_vecs.push_back(vec);
            max_ids.push_back(oi);
        }
    }
    tick("maximality");
    Int hn = homs_.hom_sum(n, n);
    std::vector<BlocRecord> blocs;
    for (size_t oi : max_ids) {
        if (deformations[oi].shares_summand_with(n))
            throw InternalError("minimal degeneration shares a summand with U+V");
        BlocRecord b;
        b.U = u;
        b.V = v;
        b.M = deformations[oi];
        b.codim = hn - self_hom[oi];
        b.prov = Provenance::Direct;
        blocs.push_back(b);
    }
    std::sort(blocs.begin(), blocs.end(), [](const BlocRecord& a, const BlocRecord& b) { return a.M < b.M; });
    return blocs;
}

BlocRecord Classifier::reduce_I(const BlocRecord& b, const ModuleSum& m1, const ModuleSum& m2, Int* delta_out,
                                bool verify_minimal) const {
    if (!cat_.is_simple_projective(b.U)) throw DegenError("Reduction I needs U simple projective");
    // the split must reproduce M, be directed and disjoint
    {
        ModuleSum check(cat_);
        for (auto& [x, k] : m1.summands()) check.add(x, k);
        for (auto& [x, k] : m2.summands()) check.add(x, k);
        check.finish(cat_);
        if (!(check == b.M)) throw DegenError("split does not decompose M");
    }
    if (m1.shares_summand_with(m2)) throw DegenError("split is not disjoint");
    if (!directed_decomposition(m1, m2)) throw DegenError("split is not directed");
    IVec dim_c = m1.dim() - b.U.dim;
    Indec c;
    if (m2.empty()) {
        c = b.V;  // identity reduction
    } else {
        auto found = cat_.indec_by_dim(dim_c);
        if (!found) throw DegenError("dim M1 - dim U is not a real root: precondition of Reduction I violated");
        c = *found;
    }
    ModuleSum vs(cat_);
    vs.add(b.V);
    vs.finish(cat_);
    Int delta = homs_.hom(b.V, b.V) - homs_.hom(c, c) - homs_.hom_sum(vs, m2) + homs_.ext_sum(vs, m2) -
                homs_.ext_sum(m2, m2) - homs_.hom_sum(m2, m1);
    if (delta_out) *delta_out = delta;
    BlocRecord out;
    out.U = b.U;
    out.V = c;
    out.M = m1;
    out.codim = b.codim - delta;
    out.prov = Provenance::ReducedFrom;
    out.prov_ref = b.M.to_string() + " < " + cat_.indec_to_string(b.U) + "+" + cat_.indec_to_string(b.V);
    if (verify_minimal) {
        ModuleSum nn = cat_.direct_sum(b.U, c);
        Int cd = order_.codim(nn, m1);
        if (cd != out.codim) throw InternalError("Reduction I codimension bookkeeping is off");
        auto mins = order_.minimal_degenerations(nn);
        bool found_min = false;
        for (auto& dp : mins)
            if (dp.lower == m1) found_min = true;
        if (!found_min) throw InternalError("Reduction I produced a non-minimal degeneration");
    }
    return out;
}

BlocRecord Classifier::reduce_regular_target(const BlocRecord& b) const {
    if (b.V.kind != IndecKind::Regular) throw DegenError("reduce_regular_target needs V regular");
    ModuleSum mr = b.M.part(IndecKind::Regular);
    ModuleSum mp = b.M.part(IndecKind::Preprojective);
    if (!b.M.part(IndecKind::Preinjective).empty()) throw DegenError("M may not have a preinjective part here");
    if (mr.empty()) throw DegenError("M has no regular part to strip");
    if (mr.summands().size() != 1 || mr.summands()[0].second != 1)
        throw DegenError("the regular part must be a single indecomposable submodule of V");
    Indec r = mr.summands()[0].first;
    if (r.base != b.V.base || r.shift != b.V.shift || r.len >= b.V.len)
        throw DegenError("the regular part is not a proper submodule of V");
    int p = cat_.tube_period(b.V.base);
    Indec c = cat_.regular(b.V.base, (b.V.shift + r.len) % p, b.V.len - r.len);
    const IVec& delta = cat_.quiver().null_root();
    if (!leq_componentwise(c.dim, delta))
        throw InternalError("dim(C) <= delta violated in reduce_regular_target");
    BlocRecord out;
    out.U = b.U;
    out.V = c;
    out.M = mp;
    out.codim = b.codim;
    out.prov = Provenance::ReducedFrom;
    out.prov_ref = b.M.to_string() + " < " + cat_.indec_to_string(b.U) + "+" + cat_.indec_to_string(b.V);
    return out;
}

AuditReport Classifier::audit_theorem1(const std::vector<BlocRecord>& blocs) const {
    AuditReport rep;
    for (const BlocRecord& b : blocs) {
        std::string id = b.M.to_string() + " < " + cat_.indec_to_string(b.U) + "+" + cat_.indec_to_string(b.V);
        rep.checked.push_back(id);
        if (b.codim != 1 && b.codim != 2)
            rep.violations.push_back("codim " + std::to_string(b.codim) + " outside {1,2}: " + id);
        if (b.U.kind == IndecKind::Preprojective && b.V.kind == IndecKind::Preinjective && b.codim != 1)
            rep.violations.push_back("preprojective/preinjective bloc with codim != 1: " + id);
    }
    return rep;
}

AuditReport Classifier::audit_structural_lemmas(const std::vector<BlocRecord>& blocs) const {
    AuditReport rep;
    const Quiver& q = cat_.quiver();
    Int bound = 4 * Int(q.coxeter_period()) + q.diameter();
    for (const BlocRecord& b : blocs) {
        std::string id = b.M.to_string() + " < " + cat_.indec_to_string(b.U) + "+" + cat_.indec_to_string(b.V);
        rep.checked.push_back(id);
        ModuleSum mp = b.M.part(IndecKind::Preprojective);
        ModuleSum mi = b.M.part(IndecKind::Preinjective);
        bool cls = cat_.is_simple_projective(b.U) && b.V.kind == IndecKind::Preinjective;
        // (1) Cor. preprojdef
        if (cls) {
            if (!(q.defect(mp.dim()) > q.defect(b.U.dim)))
                rep.violations.push_back("defect(M_P) > defect(U) fails: " + id);
            if (!(q.defect(mi.dim()) < q.defect(b.V.dim)))
                rep.violations.push_back("defect(M_I) < defect(V) fails: " + id);
        }
        // (2) multiplicities in a preprojective M
        bool all_preproj = mp.summands().size() == b.M.summands().size();
        if (all_preproj) {
            for (auto& [x, k] : b.M.summands()) {
                if (k < 2) continue;
                if (b.V.kind != IndecKind::Preprojective) {
                    rep.violations.push_back("multiplicity >= 2 in a preprojective M forces V preprojective: " + id);
                    continue;
                }
                if (k != 2) rep.violations.push_back("summand multiplicity > 2 in a preprojective M: " + id);
                if (q.kind() == QuiverKind::ExtendedDynkin && q.defect(x.dim) != -1)
                    rep.violations.push_back("doubled summand has defect != -1: " + id);
                // dim(M_1' + X) = delta + dim(U) with M_1' the strict predecessors of X
                IVec acc = x.dim;
                for (auto& [y, m] : b.M.summands())
                    if (!(y == x) && preceq(y, x)) acc += m * y.dim;
                if (q.kind() == QuiverKind::ExtendedDynkin && acc != q.null_root() + b.U.dim)
                    rep.violations.push_back("dim(M_1+X) != delta + dim(U) at a doubled summand: " + id);
                for (auto& [y, m] : b.M.summands())
                    if (!(y == x) && m >= 2)
                        rep.violations.push_back("two distinct summands with multiplicity >= 2: " + id);
            }
        }
        // (3) Lemma naheprepsum windows
        if (cls) {
            for (auto& [x, k] : mp.summands()) {
                auto d = cat_.path_distance(b.U, x);
                if (d && *d >= bound) rep.violations.push_back("d(U,X) >= 4p(Q)+d(Q) for a preprojective summand: " + id);
            }
            for (auto& [x, k] : mi.summands()) {
                auto d = cat_.path_distance(x, b.V);
                if (d && *d >= bound) rep.violations.push_back("d(X,V) >= 4p(Q)+d(Q) for a preinjective summand: " + id);
            }
        }
        // one-tube blocs: regkurze, gleichlang2, sklein
        auto tubes = b.M.touched_tubes();
        bool one_tube = cls && tubes.size() == 1 && mp.empty() && mi.empty();
        if (one_tube) {
            int t = tubes[0];
            int p = cat_.tube_period(t);
            // (4) regkurze
            for (int s = 0; s < p; ++s) {
                Indec e = cat_.regular(t, s, 1);
                if (homs_.hom(b.U, e) > homs_.hom_sum(b.M, e)) {
                    for (auto& [x, k] : b.M.summands()) {
                        if (x.len > p) rep.violations.push_back("regkurze: summand longer than p: " + id);
                        // E may appear only as a regular top
                        for (int j = 0; j + 1 < x.len; ++j)
                            if ((x.shift + j) % p == s)
                                rep.violations.push_back("regkurze: simple below the top: " + id);
                    }
                }
            }
            // gleichlang2
            for (auto& [x, kx] : b.M.summands())
                for (auto& [y, ky] : b.M.summands())
                    if (std::abs(x.len - y.len) > p)
                        rep.violations.push_back("gleichlang2: |l(M_i)-l(M_j)| > p: " + id);
            // sklein
            if (b.M.total_summands() < q.defect(b.V.dim) && b.codim != 1)
                rep.violations.push_back("sklein: fewer than defect(V) summands but codim != 1: " + id);
        }
    }
    // (5) §5.3.1(ii): per target and tube, at most one maximal one-tube deformation
    std::set<std::pair<Indec, Indec>> targets;
    for (const BlocRecord& b : blocs)
        if (cat_.is_simple_projective(b.U) && b.V.kind == IndecKind::Preinjective) targets.insert({b.U, b.V});
    for (auto& [u, v] : targets) {
        for (int t = 0; t < cat_.nonhomog_tube_count(); ++t) {
            EnumOptions opt;
            opt.tube_only = true;
            opt.tube_id = t;
            std::vector<ModuleSum> d;
            for (ModuleSum& m : order_.enumerate_decompositions(u.dim + v.dim, opt))
                if (order_.regular_degeneration_test(m, u, v)) d.push_back(m);
            int maximal = 0;
            for (size_t i = 0; i < d.size(); ++i) {
                bool mx = true;
                for (size_t j = 0; j < d.size() && mx; ++j)
                    if (i != j && order_.leq(d[i], d[j])) mx = false;
                if (mx) maximal++;
            }
            if (maximal > 1)
                rep.violations.push_back("one-tube deformation set with " + std::to_string(maximal) + " maxima at " +
                                         cat_.indec_to_string(u) + "+" + cat_.indec_to_string(v) + " tube " +
                                         std::to_string(t + 1));
        }
    }
    return rep;
}

std::vector<BlocRecord> Classifier::periodic_closure(const std::vector<BlocRecord>& blocs, Int shift_bound) const {
    std::vector<BlocRecord> out = blocs;
    for (const BlocRecord& b : blocs) {
        BlocRecord cur = b;
        for (Int s = 0; s < shift_bound; ++s) {
            if (!tubes_.periodic_shift_applicable(cur)) break;
            cur = tubes_.periodic_shift(cur);
            out.push_back(cur);
        }
    }
    std::sort(out.begin(), out.end(), [&](const BlocRecord& a, const BlocRecord& b2) {
        return std::tuple(a.U, a.V, a.M) < std::tuple(b2.U, b2.V, b2.M);
    });
    return out;
}

bool Classifier::extension_set_K(const ModuleSum& m, const Indec& u, const Indec& v) const {
    if (!cat_.is_simple_projective(u)) throw DegenError("extension_set_K needs U simple projective");
    if (v.kind != IndecKind::Regular || v.dim != cat_.quiver().null_root())
        throw DegenError("extension_set_K needs V regular of dimension delta");
    if (cat_.tube_period(v.base) < 2) throw DegenError("extension_set_K needs a tube of period >= 2");
    ModuleSum n = cat_.direct_sum(u, v);
    if (m == n) return true;  // split extension
    if (!m.part(IndecKind::Regular).empty()) return true;
    for (const DegenPair& dp : order_.minimal_degenerations(n)) {
        bool preproj = dp.lower.part(IndecKind::Preprojective).summands().size() == dp.lower.summands().size();
        if (!preproj) continue;
        if (m == dp.lower || order_.leq(m, dp.lower)) return true;
    }
    return false;
}

}  // namespace tamedeg
