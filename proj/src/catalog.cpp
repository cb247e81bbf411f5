#include "tamedeg/catalog.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace tamedeg {

Catalog::Catalog(Quiver q) : q_(std::move(q)) {
    int n = q_.vertex_count();
    dims_proj_.resize(n);
    dims_inj_.resize(n);
    for (int i = 0; i < n; ++i) {
        dims_proj_[i] = q_.dim_projective(i);
        dims_inj_[i] = q_.dim_injective(i);
        if (!is_nonneg(dims_proj_[i]) || dims_proj_[i][i] != 1 || !is_nonneg(dims_inj_[i]) || dims_inj_[i][i] != 1)
            throw InternalError("projective/injective dimension vectors are not sane");
    }
    if (q_.kind() == QuiverKind::ExtendedDynkin) {
        discover_tubes();
        Int total = 0;
        for (auto& t : tubes_) total += t.period - 1;
        if (total != n - 2)
            throw InternalError("tube periods violate sum(p-1) = |Q0| - 2");
    } else {
        // materialize all roots once; used for validity checks and lookups
        all_roots();
    }
}

void Catalog::discover_tubes() {
    const IVec& delta = q_.null_root();
    int n = q_.vertex_count();
    // enumerate 0 < d <= delta, d != delta, with q(d) = 1 and defect 0
    std::set<IVec> regular_roots;
    IVec d(n, 0);
    while (true) {
        int i = 0;
        while (i < n && d[i] == delta[i]) d[i++] = 0;
        if (i == n) break;
        d[i]++;
        if (is_zero(d) || d == delta) continue;
        if (q_.defect(d) != 0) continue;
        if (q_.tits_form(d) != 1) continue;
        regular_roots.insert(d);
    }
    // partition into c-orbits; orbits whose member sum is delta are the
    // simple sets of the non-homogeneous tubes
    std::set<IVec> used;
    std::vector<std::vector<IVec>> orbits;
    for (const IVec& r : regular_roots) {
        if (used.count(r)) continue;
        std::vector<IVec> orbit;
        IVec cur = r;
        do {
            orbit.push_back(cur);
            used.insert(cur);
            cur = q_.coxeter_apply(cur);
            if (!regular_roots.count(cur))
                throw InternalError("coxeter orbit left the regular-root set");
        } while (cur != r);
        IVec total(n, 0);
        for (auto& v : orbit) total += v;
        if (total == delta) orbits.push_back(orbit);
    }
    // within an orbit: E_1 = lexicographically smallest, then follow tau^-
    // (i.e. dim E_{i+1} = c^{-1} dim E_i)
    for (auto& orbit : orbits) {
        IVec start = *std::min_element(orbit.begin(), orbit.end());
        TubeData t;
        t.period = (int)orbit.size();
        IVec cur = start;
        for (int k = 0; k < t.period; ++k) {
            t.simples.push_back(cur);
            cur = q_.coxeter_inv_apply(cur);
        }
        if (cur != start) throw InternalError("tube orbit does not close up");
        tubes_.push_back(std::move(t));
    }
    std::sort(tubes_.begin(), tubes_.end(), [](const TubeData& a, const TubeData& b) {
        if (a.period != b.period) return a.period > b.period;
        return a.simples[0] < b.simples[0];
    });
    for (size_t i = 0; i < tubes_.size(); ++i) tubes_[i].id = (int)i;
}

TubeData Catalog::tube(int id) const {
    if (id < (int)tubes_.size()) return tubes_[id];
    TubeData t;
    t.id = id;
    t.period = 1;
    t.simples = {q_.null_root()};
    return t;
}

IVec Catalog::regular_dim(int tube_id, int socle, int len) const {
    TubeData t = tube(tube_id);
    IVec d(q_.vertex_count(), 0);
    for (int j = 0; j < len; ++j) d += t.simples[(socle + j) % t.period];
    return d;
}

Indec Catalog::preprojective(int i, int k) const {
    if (i < 0 || i >= q_.vertex_count() || k < 0) throw CatalogError("bad preprojective coordinates");
    IVec d = dims_proj_[i];
    for (int j = 0; j < k; ++j) {
        d = q_.coxeter_inv_apply(d);
        if (!is_nonneg(d) || is_zero(d))
            throw CatalogError("tau^-" + std::to_string(j + 1) + " P(" + std::to_string(i + 1) + ") does not exist");
    }
    return Indec{IndecKind::Preprojective, i, k, 0, d};
}

Indec Catalog::preinjective(int i, int k) const {
    if (i < 0 || i >= q_.vertex_count() || k < 0) throw CatalogError("bad preinjective coordinates");
    IVec d = dims_inj_[i];
    for (int j = 0; j < k; ++j) {
        d = q_.coxeter_apply(d);
        if (!is_nonneg(d) || is_zero(d))
            throw CatalogError("tau^" + std::to_string(j + 1) + " I(" + std::to_string(i + 1) + ") does not exist");
    }
    if (q_.kind() == QuiverKind::Dynkin) {
        // canonical encoding in Dynkin mode is preprojective
        auto it = dynkin_by_dim_.find(d);
        if (it == dynkin_by_dim_.end()) throw CatalogError("preinjective encoding is invalid here");
        return it->second;
    }
    return Indec{IndecKind::Preinjective, i, k, 0, d};
}

Indec Catalog::regular(int tube_id, int socle, int len) const {
    if (q_.kind() != QuiverKind::ExtendedDynkin) throw CatalogError("regular indecomposables need an extended Dynkin quiver");
    int p = tube_period(tube_id);
    if (tube_id < 0 || socle < 0 || socle >= p || len < 1) throw CatalogError("bad tube coordinates");
    return Indec{IndecKind::Regular, tube_id, socle, len, regular_dim(tube_id, socle, len)};
}

bool Catalog::is_projective(const Indec& x) const {
    return x.kind == IndecKind::Preprojective && x.shift == 0;
}

bool Catalog::is_injective(const Indec& x) const {
    if (x.kind == IndecKind::Preinjective) return x.shift == 0;
    if (q_.kind() == QuiverKind::Dynkin && x.kind == IndecKind::Preprojective) {
        for (int i = 0; i < q_.vertex_count(); ++i)
            if (x.dim == dims_inj_[i]) return true;
    }
    return false;
}

bool Catalog::is_simple_projective(const Indec& x) const {
    return is_projective(x) && vec_sum(x.dim) == 1;
}

Indec Catalog::tau(const Indec& x) const {
    if (is_projective(x)) throw CatalogError("projective has no tau");
    switch (x.kind) {
        case IndecKind::Preprojective:
            return preprojective(x.base, x.shift - 1);
        case IndecKind::Regular: {
            int p = tube_period(x.base);
            return regular(x.base, (x.shift - 1 + p) % p, x.len);
        }
        case IndecKind::Preinjective:
            return Indec{IndecKind::Preinjective, x.base, x.shift + 1, 0, q_.coxeter_apply(x.dim)};
    }
    throw InternalError("unreachable");
}

Indec Catalog::tau_inv(const Indec& x) const {
    if (is_injective(x)) throw CatalogError("injective has no tau^-");
    switch (x.kind) {
        case IndecKind::Preprojective: {
            if (q_.kind() == QuiverKind::Dynkin) return preprojective(x.base, x.shift + 1);
            return Indec{IndecKind::Preprojective, x.base, x.shift + 1, 0, q_.coxeter_inv_apply(x.dim)};
        }
        case IndecKind::Regular: {
            int p = tube_period(x.base);
            return regular(x.base, (x.shift + 1) % p, x.len);
        }
        case IndecKind::Preinjective:
            return preinjective(x.base, x.shift - 1);
    }
    throw InternalError("unreachable");
}

Indec Catalog::tau_power(const Indec& x, Int k) const {
    Indec cur = x;
    for (Int j = 0; j < std::abs(k); ++j) cur = (k > 0) ? tau(cur) : tau_inv(cur);
    return cur;
}

int Catalog::regular_top(const Indec& x) const {
    if (x.kind != IndecKind::Regular) throw CatalogError("regular_top on a non-regular indecomposable");
    int p = tube_period(x.base);
    return (x.shift + x.len - 1) % p;
}

std::vector<Indec> Catalog::roots_up_to(const IVec& bound) const {
    q_.check_dim(bound);
    if (!is_nonneg(bound) || is_zero(bound)) throw CatalogError("roots_up_to needs a nonnegative nonzero bound");
    std::vector<Indec> out;
    int n = q_.vertex_count();
    if (q_.kind() == QuiverKind::Dynkin) {
        for (const Indec& r : all_roots())
            if (leq_componentwise(r.dim, bound)) out.push_back(r);
        std::sort(out.begin(), out.end());
        return out;
    }
    int p = q_.coxeter_period();
    for (int i = 0; i < n; ++i) {
        IVec d = dims_proj_[i];
        int misses = 0;
        for (int k = 0; misses < p; ++k) {
            if (leq_componentwise(d, bound)) {
                out.push_back(Indec{IndecKind::Preprojective, i, k, 0, d});
                misses = 0;
            } else
                misses++;
            d = q_.coxeter_inv_apply(d);
        }
    }
    for (int i = 0; i < n; ++i) {
        IVec d = dims_inj_[i];
        int misses = 0;
        for (int k = 0; misses < p; ++k) {
            if (leq_componentwise(d, bound)) {
                out.push_back(Indec{IndecKind::Preinjective, i, k, 0, d});
                misses = 0;
            } else
                misses++;
            d = q_.coxeter_apply(d);
        }
    }
    for (int t = 0; t < (int)tubes_.size(); ++t) {
        for (int s = 0; s < tubes_[t].period; ++s) {
            for (int l = 1;; ++l) {
                IVec d = regular_dim(t, s, l);
                if (!leq_componentwise(d, bound)) break;
                out.push_back(Indec{IndecKind::Regular, t, s, l, d});
            }
        }
    }
    for (int l = 1;; ++l) {
        IVec d = Int(l) * q_.null_root();
        if (!leq_componentwise(d, bound)) break;
        out.push_back(Indec{IndecKind::Regular, generic_homog_tube(), 0, l, d});
    }
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<Indec>& Catalog::all_roots() const {
    if (q_.kind() != QuiverKind::Dynkin) throw CatalogError("all_roots is Dynkin-only");
    if (!dynkin_roots_.empty()) return dynkin_roots_;
    for (int i = 0; i < q_.vertex_count(); ++i) {
        IVec d = dims_proj_[i];
        for (int k = 0;; ++k) {
            Indec x{IndecKind::Preprojective, i, k, 0, d};
            dynkin_roots_.push_back(x);
            dynkin_by_dim_[d] = x;
            IVec next = q_.coxeter_inv_apply(d);
            if (!is_nonneg(next) || is_zero(next)) break;
            d = next;
        }
    }
    std::sort(dynkin_roots_.begin(), dynkin_roots_.end());
    return dynkin_roots_;
}

std::optional<Indec> Catalog::indec_by_dim(const IVec& d) const {
    q_.check_dim(d);
    if (!is_nonneg(d) || is_zero(d)) return std::nullopt;
    if (q_.kind() == QuiverKind::Dynkin) {
        all_roots();
        auto it = dynkin_by_dim_.find(d);
        if (it == dynkin_by_dim_.end()) return std::nullopt;
        return it->second;
    }
    Int q = q_.tits_form(d);
    if (q == 0) return std::nullopt;  // multiple of delta: tube-ambiguous
    if (q != 1) return std::nullopt;
    Int def = q_.defect(d);
    Int total = vec_sum(d);
    int p = q_.coxeter_period();
    if (def < 0) {
        for (int i = 0; i < q_.vertex_count(); ++i) {
            IVec cur = dims_proj_[i];
            int misses = 0;
            for (int k = 0; misses < p; ++k) {
                if (cur == d) return Indec{IndecKind::Preprojective, i, k, 0, cur};
                misses = vec_sum(cur) > total ? misses + 1 : 0;
                cur = q_.coxeter_inv_apply(cur);
            }
        }
        return std::nullopt;
    }
    if (def > 0) {
        for (int i = 0; i < q_.vertex_count(); ++i) {
            IVec cur = dims_inj_[i];
            int misses = 0;
            for (int k = 0; misses < p; ++k) {
                if (cur == d) return Indec{IndecKind::Preinjective, i, k, 0, cur};
                misses = vec_sum(cur) > total ? misses + 1 : 0;
                cur = q_.coxeter_apply(cur);
            }
        }
        return std::nullopt;
    }
    for (int t = 0; t < (int)tubes_.size(); ++t)
        for (int s = 0; s < tubes_[t].period; ++s)
            for (int l = 1; l <= (int)(total); ++l) {
                IVec cur = regular_dim(t, s, l);
                if (cur == d) return Indec{IndecKind::Regular, t, s, l, cur};
                if (vec_sum(cur) > total) break;
            }
    return std::nullopt;
}

namespace {
struct Node {
    int i, k;
    bool operator<(const Node& o) const { return std::tie(i, k) < std::tie(o.i, o.k); }
};
}  // namespace

std::optional<Int> Catalog::path_distance(const Indec& x, const Indec& y) const {
    if (x.kind == IndecKind::Regular || y.kind == IndecKind::Regular)
        throw CatalogError("path_distance is defined on preprojective/preinjective components only");
    if (x.kind != y.kind) throw CatalogError("path_distance arguments lie in different components");
    if (x == y) return 0;
    bool preproj = x.kind == IndecKind::Preprojective;
    // monotone in the tau-shift along arrows
    if (preproj && y.shift < x.shift) return std::nullopt;
    if (!preproj && y.shift > x.shift) return std::nullopt;
    std::map<Node, Int> dist;
    std::deque<Node> queue;
    Node start{x.base, x.shift}, goal{y.base, y.shift};
    dist[start] = 0;
    queue.push_back(start);
    while (!queue.empty()) {
        Node v = queue.front();
        queue.pop_front();
        Int dv = dist[v];
        std::vector<Node> next;
        if (preproj) {
            for (auto [s, t] : q_.arrows()) {
                if (t == v.i) next.push_back({s, v.k});
                if (s == v.i && v.k + 1 <= y.shift) next.push_back({t, v.k + 1});
            }
        } else {
            for (auto [s, t] : q_.arrows()) {
                if (s == v.i) next.push_back({t, v.k});
                if (t == v.i && v.k - 1 >= y.shift) next.push_back({s, v.k - 1});
            }
        }
        for (Node w : next) {
            if (preproj && w.k > y.shift) continue;
            if (q_.kind() == QuiverKind::Dynkin) {
                try {
                    preprojective(w.i, w.k);
                } catch (const CatalogError&) {
                    continue;
                }
            }
            if (dist.count(w)) continue;
            dist[w] = dv + 1;
            if (w.i == goal.i && w.k == goal.k) return dv + 1;
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

std::vector<Indec> Catalog::preproj_successors_within(const std::vector<Indec>& seeds, Int maxdist) const {
    std::map<Node, Int> dist;
    std::deque<Node> queue;
    for (const Indec& s : seeds) {
        if (s.kind != IndecKind::Preprojective) throw CatalogError("preprojective seed expected");
        Node v{s.base, s.shift};
        if (!dist.count(v)) {
            dist[v] = 0;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        Node v = queue.front();
        queue.pop_front();
        Int dv = dist[v];
        if (dv == maxdist) continue;
        for (auto [s, t] : q_.arrows()) {
            std::vector<Node> next;
            if (t == v.i) next.push_back({s, v.k});
            if (s == v.i) next.push_back({t, v.k + 1});
            for (Node w : next) {
                if (dist.count(w)) continue;
                if (q_.kind() == QuiverKind::Dynkin) {
                    try {
                        preprojective(w.i, w.k);
                    } catch (const CatalogError&) {
                        continue;
                    }
                }
                dist[w] = dv + 1;
                queue.push_back(w);
            }
        }
    }
    std::vector<Indec> out;
    for (auto& [v, d] : dist) out.push_back(preprojective(v.i, v.k));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Indec> Catalog::preinj_predecessors_within(const std::vector<Indec>& seeds, Int maxdist) const {
    std::map<Node, Int> dist;
    std::deque<Node> queue;
    for (const Indec& s : seeds) {
        if (s.kind != IndecKind::Preinjective) throw CatalogError("preinjective seed expected");
        Node v{s.base, s.shift};
        if (!dist.count(v)) {
            dist[v] = 0;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        Node v = queue.front();
        queue.pop_front();
        Int dv = dist[v];
        if (dv == maxdist) continue;
        for (auto [s, t] : q_.arrows()) {
            std::vector<Node> next;
            if (t == v.i) next.push_back({s, v.k});   // reverse of (s,k) -> (t,k)
            if (s == v.i) next.push_back({t, v.k + 1});  // reverse of (t,k+1) -> (s,k)
            for (Node w : next) {
                if (dist.count(w)) continue;
                dist[w] = dv + 1;
                queue.push_back(w);
            }
        }
    }
    std::vector<Indec> out;
    for (auto& [v, d] : dist) out.push_back(preinjective(v.i, v.k));
    std::sort(out.begin(), out.end());
    return out;
}

// ---- ModuleSum ----

ModuleSum::ModuleSum(const Catalog& cat) : dim_(cat.quiver().vertex_count(), 0), n_(cat.quiver().vertex_count()) {}

void ModuleSum::add(const Indec& x, Int mult) {
    if (mult <= 0) throw CatalogError("summand multiplicity must be positive");
    parts_.push_back({x, mult});
}

Int ModuleSum::total_summands() const {
    Int s = 0;
    for (auto& [x, m] : parts_) s += m;
    return s;
}

Int ModuleSum::multiplicity(const Indec& x) const {
    for (auto& [y, m] : parts_)
        if (y == x) return m;
    return 0;
}

void ModuleSum::finish(const Catalog& cat) {
    n_ = cat.quiver().vertex_count();
    // merge duplicates
    std::map<Indec, Int> merged;
    for (auto& [x, m] : parts_) merged[x] += m;
    // canonical relabeling of homogeneous tube ids: groups of homogeneous
    // summands are interchangeable across tubes
    int h0 = cat.generic_homog_tube();
    std::map<int, std::vector<std::pair<int, Int>>> homog;  // tube -> [(len, mult)]
    std::vector<std::pair<Indec, Int>> rest;
    for (auto& [x, m] : merged) {
        if (x.kind == IndecKind::Regular && x.base >= h0)
            homog[x.base].push_back({x.len, m});
        else
            rest.push_back({x, m});
    }
    std::vector<std::vector<std::pair<int, Int>>> groups;
    for (auto& [t, g] : homog) {
        std::sort(g.begin(), g.end());
        groups.push_back(g);
    }
    std::sort(groups.begin(), groups.end(), [](auto& a, auto& b) { return a > b; });
    for (size_t gi = 0; gi < groups.size(); ++gi)
        for (auto& [len, m] : groups[gi])
            rest.push_back({cat.regular(h0 + (int)gi, 0, len), m});
    std::sort(rest.begin(), rest.end());
    parts_ = std::move(rest);
    dim_ = IVec(n_, 0);
    for (auto& [x, m] : parts_) dim_ += m * x.dim;
}

ModuleSum ModuleSum::part(IndecKind k) const {
    ModuleSum r;
    r.n_ = n_;
    r.dim_ = IVec(n_, 0);
    for (auto& [x, m] : parts_)
        if (x.kind == k) {
            r.parts_.push_back({x, m});
            r.dim_ += m * x.dim;
        }
    return r;
}

ModuleSum ModuleSum::tube_part(int tube_id) const {
    ModuleSum r;
    r.n_ = n_;
    r.dim_ = IVec(n_, 0);
    for (auto& [x, m] : parts_)
        if (x.kind == IndecKind::Regular && x.base == tube_id) {
            r.parts_.push_back({x, m});
            r.dim_ += m * x.dim;
        }
    return r;
}

std::vector<int> ModuleSum::touched_tubes() const {
    std::set<int> t;
    for (auto& [x, m] : parts_)
        if (x.kind == IndecKind::Regular) t.insert(x.base);
    return std::vector<int>(t.begin(), t.end());
}

bool ModuleSum::shares_summand_with(const ModuleSum& o) const {
    for (auto& [x, m] : parts_)
        if (o.multiplicity(x) > 0) return true;
    return false;
}

bool ModuleSum::operator<(const ModuleSum& o) const { return parts_ < o.parts_; }

std::string ModuleSum::to_string() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (auto& [x, m] : parts_) {
        if (!s.empty()) s += "+";
        std::string piece;
        switch (x.kind) {
            case IndecKind::Preprojective:
                piece = "P(" + std::to_string(x.base + 1) + ")";
                if (x.shift > 0) piece += "^-" + std::to_string(x.shift);
                break;
            case IndecKind::Regular:
                piece = "E" + std::to_string(x.base + 1) + "_" + std::to_string(x.shift + 1) + "(" + std::to_string(x.len) + ")";
                break;
            case IndecKind::Preinjective:
                piece = "I(" + std::to_string(x.base + 1) + ")";
                if (x.shift > 0) piece += "^+" + std::to_string(x.shift);
                break;
        }
        if (m > 1) piece += "*" + std::to_string(m);
        s += piece;
    }
    return s;
}

ModuleSum Catalog::sum(const std::vector<std::pair<Indec, Int>>& parts) const {
    ModuleSum m(*this);
    for (auto& [x, mult] : parts) m.add(x, mult);
    m.finish(*this);
    return m;
}

ModuleSum Catalog::direct_sum(const Indec& a, const Indec& b) const { return sum({{a, 1}, {b, 1}}); }

std::string Catalog::indec_to_string(const Indec& x) const {
    ModuleSum m(*this);
    m.add(x);
    m.finish(*this);
    return m.to_string();
}

Indec Catalog::indec_from_string(const std::string& s) const {
    ModuleSum m = sum_from_string(s);
    if (m.summands().size() != 1 || m.summands()[0].second != 1)
        throw ParseError("expected a single indecomposable: " + s);
    return m.summands()[0].first;
}

ModuleSum Catalog::sum_from_string(const std::string& str) const {
    ModuleSum out(*this);
    std::string s;
    for (char c : str)
        if (!isspace((unsigned char)c)) s += c;
    if (s == "0") {
        out.finish(*this);
        return out;
    }
    size_t pos = 0;
    auto parse_int = [&](const char* what) {
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start) throw ParseError(std::string("expected integer for ") + what + " in: " + str);
        return (int)std::stol(s.substr(start, pos - start));
    };
    auto expect = [&](char c) {
        if (pos >= s.size() || s[pos] != c) throw ParseError(std::string("expected '") + c + "' in: " + str);
        ++pos;
    };
    while (pos < s.size()) {
        Indec x;
        if (s[pos] == 'P' || s[pos] == 'I') {
            bool proj = s[pos] == 'P';
            ++pos;
            expect('(');
            int i = parse_int("vertex");
            expect(')');
            int k = 0;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                k = std::abs(parse_int("shift"));
            }
            x = proj ? preprojective(i - 1, k) : preinjective(i - 1, k);
        } else if (s[pos] == 'E') {
            ++pos;
            int mu = parse_int("tube");
            expect('_');
            int soc = parse_int("socle");
            expect('(');
            int len = parse_int("length");
            expect(')');
            x = regular(mu - 1, soc - 1, len);
        } else if (s.compare(pos, 4, "tau^") == 0) {
            pos += 4;
            int k = parse_int("shift");
            char kindc = s[pos];
            if (kindc != 'P' && kindc != 'I') throw ParseError("expected P(..) or I(..) after tau^k in: " + str);
            ++pos;
            expect('(');
            int i = parse_int("vertex");
            expect(')');
            if (kindc == 'P') {
                if (k > 0) throw ParseError("tau^k P(i) needs k <= 0 in: " + str);
                x = preprojective(i - 1, -k);
            } else {
                if (k < 0) throw ParseError("tau^k I(i) needs k >= 0 in: " + str);
                x = preinjective(i - 1, k);
            }
        } else {
            throw ParseError("cannot parse summand at '" + s.substr(pos) + "'");
        }
        Int mult = 1;
        if (pos < s.size() && s[pos] == '*') {
            ++pos;
            mult = parse_int("multiplicity");
        }
        out.add(x, mult);
        if (pos < s.size()) {
            if (s[pos] != '+') throw ParseError("expected '+' between summands in: " + str);
            ++pos;
        }
    }
    out.finish(*this);
    return out;
}

}  // namespace tamedeg
