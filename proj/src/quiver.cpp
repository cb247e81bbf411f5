#include "tamedeg/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tamedeg {

Quiver::Quiver(int vertex_count, std::vector<std::pair<int, int>> arrows)
    : n_(vertex_count), arrows_(std::move(arrows)) {
    if (n_ <= 0) throw QuiverError("vertex count must be positive");
    for (auto [s, t] : arrows_) {
        if (s < 0 || s >= n_ || t < 0 || t >= n_) throw QuiverError("arrow endpoint out of range");
        if (s == t) throw QuiverError("loops are not allowed");
    }
    classify_diagram();
    compute_numerical_data();

    // one-sink detection
    std::vector<int> outdeg(n_, 0);
    for (auto [s, t] : arrows_) outdeg[s]++;
    std::vector<int> sinks;
    for (int v = 0; v < n_; ++v)
        if (outdeg[v] == 0) sinks.push_back(v);
    if (sinks.size() == 1) sink_ = sinks[0];
}

int Quiver::sink() const {
    if (!sink_) throw QuiverError("quiver is not in one-sink mode");
    return *sink_;
}

void Quiver::classify_diagram() {
    // connectivity of the underlying graph
    std::vector<std::vector<int>> adj(n_);
    for (auto [s, t] : arrows_) {
        adj[s].push_back(t);
        adj[t].push_back(s);
    }
    std::vector<bool> seen(n_, false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    for (int v = 0; v < n_; ++v)
        if (!seen[v]) throw QuiverError("underlying graph is not connected");

    // Tits form definiteness via the symmetrized matrix G = E + E^T.
    IMat G(n_, IVec(n_, 0));
    for (int i = 0; i < n_; ++i) G[i][i] = 2;
    for (auto [s, t] : arrows_) {
        G[s][t] -= 1;
        G[t][s] -= 1;
    }
    auto kernel = integer_kernel(G);
    if (kernel.empty()) {
        // positive definite check: leading principal minors > 0
        for (int k = 1; k <= n_; ++k) {
            IMat sub(k, IVec(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub[i][j] = G[i][j];
            if (mat_det(sub) <= 0) throw QuiverError("Tits form is not positive (semi)definite: not a tame quiver");
        }
        kind_ = QuiverKind::Dynkin;
    } else if (kernel.size() == 1) {
        // positive semidefinite check: all principal minors >= 0 (n <= 10)
        for (int mask = 1; mask < (1 << n_); ++mask) {
            std::vector<int> idx;
            for (int i = 0; i < n_; ++i)
                if (mask & (1 << i)) idx.push_back(i);
            IMat sub(idx.size(), IVec(idx.size()));
            for (size_t i = 0; i < idx.size(); ++i)
                for (size_t j = 0; j < idx.size(); ++j) sub[i][j] = G[idx[i]][idx[j]];
            if (mat_det(sub) < 0) throw QuiverError("Tits form is indefinite: wild quiver rejected");
        }
        delta_ = kernel[0];
        if (delta_[0] < 0) delta_ = Int(-1) * delta_;
        if (!is_positive(delta_)) throw QuiverError("radical generator is not positive: rejected");
        bool has_one = false;
        Int g = 0;
        for (Int x : delta_) {
            g = std::gcd(g, std::abs(x));
            if (x == 1) has_one = true;
        }
        if (g != 1 || !has_one) throw QuiverError("null root is not primitive with an entry 1: rejected");
        kind_ = QuiverKind::ExtendedDynkin;
    } else {
        throw QuiverError("radical of the Tits form has dimension > 1: wild quiver rejected");
    }

    // diameter: longest simple path in the underlying graph (n <= 10)
    int best = 0;
    std::vector<bool> used(n_, false);
    auto dfs = [&](auto&& self, int v, int len) -> void {
        best = std::max(best, len);
        used[v] = true;
        for (int w : adj[v])
            if (!used[w]) self(self, w, len + 1);
        used[v] = false;
    };
    for (int v = 0; v < n_; ++v) dfs(dfs, v, 0);
    diameter_ = best;

    // label: shape detection on the underlying simple graph
    std::set<std::pair<int, int>> edges;
    int multi = 0;
    for (auto [s, t] : arrows_) {
        auto e = std::minmax(s, t);
        if (!edges.insert({e.first, e.second}).second) multi++;
    }
    int m = (int)arrows_.size();
    std::vector<int> deg(n_, 0);
    for (auto [s, t] : arrows_) {
        deg[s]++;
        deg[t]++;
    }
    int maxdeg = *std::max_element(deg.begin(), deg.end());
    std::string tilde = (kind_ == QuiverKind::ExtendedDynkin) ? "~" : "";
    if (n_ == 2 && m == 2) label_ = "A~1";
    else if (m == n_ && multi == 0) label_ = "A~" + std::to_string(n_ - 1);
    else if (maxdeg <= 2) label_ = "A" + tilde + std::to_string(kind_ == QuiverKind::Dynkin ? n_ : n_ - 1);
    else {
        // tree with branch vertices: D if some branch vertex carries >= 2 leaves, else E
        bool is_d = false;
        int deg3 = (int)std::count_if(deg.begin(), deg.end(), [](int d) { return d >= 3; });
        if (deg3 >= 2 || maxdeg == 4) is_d = true;
        else {
            int branch = (int)(std::find_if(deg.begin(), deg.end(), [](int d) { return d >= 3; }) - deg.begin());
            int adjacent_leaves = 0;
            for (int w : adj[branch])
                if (deg[w] == 1) adjacent_leaves++;
            if (adjacent_leaves >= 2) is_d = true;
        }
        label_ = (is_d ? "D" : "E") + tilde + std::to_string(kind_ == QuiverKind::Dynkin ? n_ : n_ - 1);
    }
}

void Quiver::compute_numerical_data() {
    euler_ = mat_identity(n_);
    for (auto [s, t] : arrows_) euler_[s][t] -= 1;
    euler_inv_ = mat_inverse_unimodular(euler_);
    coxeter_ = mat_neg(mat_mul(euler_inv_, mat_transpose(euler_)));
    coxeter_inv_ = mat_neg(mat_mul(mat_transpose(euler_inv_), euler_));

    if (kind_ == QuiverKind::ExtendedDynkin) {
        defect_row_ = IVec(n_, 0);
        for (int j = 0; j < n_; ++j)
            for (int i = 0; i < n_; ++i) defect_row_[j] += delta_[i] * euler_[i][j];
    }

    // p(Q): order of c (Dynkin) resp. order of c modulo R*delta (ExtendedDynkin)
    const int cap = 100;
    IMat power = coxeter_;
    period_ = 0;
    for (int k = 1; k <= cap; ++k) {
        bool done = true;
        if (kind_ == QuiverKind::Dynkin) {
            for (int i = 0; i < n_ && done; ++i)
                for (int j = 0; j < n_ && done; ++j)
                    if (power[i][j] != (i == j ? 1 : 0)) done = false;
        } else {
            // every column of power - I must be a rational multiple of delta
            for (int j = 0; j < n_ && done; ++j) {
                IVec col(n_);
                for (int i = 0; i < n_; ++i) col[i] = power[i][j] - (i == j ? 1 : 0);
                for (int a = 0; a < n_ && done; ++a)
                    for (int b = a + 1; b < n_ && done; ++b)
                        if (col[a] * delta_[b] != col[b] * delta_[a]) done = false;
            }
        }
        if (done) {
            period_ = k;
            break;
        }
        power = mat_mul(power, coxeter_);
    }
    if (period_ == 0) throw InternalError("Coxeter period exceeds the hard cap of 100 iterations");

    if (kind_ == QuiverKind::ExtendedDynkin) {
        // c^p(x) - x = eps * defect(x) * delta; read eps off basis vectors
        IMat cp = mat_identity(n_);
        for (int k = 0; k < period_; ++k) cp = mat_mul(cp, coxeter_);
        std::optional<Int> eps;
        for (int j = 0; j < n_; ++j) {
            Int dj = defect_row_[j];
            IVec col(n_);
            for (int i = 0; i < n_; ++i) col[i] = cp[i][j] - (i == j ? 1 : 0);
            if (dj == 0) {
                if (!is_zero(col)) throw InternalError("c^p fixes only defect-0 vectors: convention violated");
                continue;
            }
            for (int i = 0; i < n_; ++i) {
                if (col[i] % (dj * delta_[i]) != 0) throw InternalError("epsilon(Q) is not integral");
                Int e = col[i] / (dj * delta_[i]);
                if (eps && *eps != e) throw InternalError("epsilon(Q) is inconsistent across basis vectors");
                eps = e;
            }
        }
        if (!eps || *eps <= 0) throw InternalError("epsilon(Q) not determined or not positive");
        epsilon_ = eps;
    }
}

Int Quiver::euler_form(const IVec& x, const IVec& y) const {
    check_dim(x);
    check_dim(y);
    Int s = dot(x, y);
    for (auto [a, b] : arrows_) s -= x[a] * y[b];
    return s;
}

const IVec& Quiver::null_root() const {
    if (kind_ != QuiverKind::ExtendedDynkin) throw QuiverError("null root requested for a Dynkin quiver (radical is zero)");
    return delta_;
}

Int Quiver::defect(const IVec& x) const {
    if (kind_ != QuiverKind::ExtendedDynkin) throw QuiverError("defect requested for a Dynkin quiver");
    check_dim(x);
    return dot(defect_row_, x);
}

IVec Quiver::dim_projective(int i) const {
    // columns of E^{-T} are the dims of the projectives: E^T dim P(i) = e_i
    IVec d(n_);
    for (int j = 0; j < n_; ++j) d[j] = euler_inv_[i][j];  // (E^{-1})^T[j][i] = E^{-1}[i][j]
    return d;
}

IVec Quiver::dim_injective(int i) const {
    IVec d(n_);
    for (int j = 0; j < n_; ++j) d[j] = euler_inv_[j][i];
    return d;
}

// ---- built-ins ----

namespace {
// Orient every edge of a tree toward the sink (so the sink is the unique
// vertex without outgoing arrows).
std::vector<std::pair<int, int>> orient_tree_to_sink(int n, const std::vector<std::pair<int, int>>& edges, int sink) {
    std::vector<std::vector<int>> adj(n);
    for (size_t e = 0; e < edges.size(); ++e) {
        adj[edges[e].first].push_back((int)e);
        adj[edges[e].second].push_back((int)e);
    }
    std::vector<int> parent_edge(n, -1), order;
    std::vector<bool> seen(n, false);
    order.push_back(sink);
    seen[sink] = true;
    for (size_t q = 0; q < order.size(); ++q) {
        int v = order[q];
        for (int e : adj[v]) {
            int w = edges[e].first == v ? edges[e].second : edges[e].first;
            if (!seen[w]) {
                seen[w] = true;
                parent_edge[w] = e;
                order.push_back(w);
            }
        }
    }
    std::vector<std::pair<int, int>> arrows;
    for (int v = 0; v < n; ++v) {
        if (parent_edge[v] < 0) continue;
        int e = parent_edge[v];
        int p = edges[e].first == v ? edges[e].second : edges[e].first;
        arrows.push_back({v, p});  // child -> parent, i.e. toward the sink
    }
    return arrows;
}
}  // namespace

Quiver Quiver::dynkin_a(int n, int sink1) {
    if (n < 1) throw QuiverError("A_n needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Quiver(n, orient_tree_to_sink(n, edges, sink1 - 1));
}

Quiver Quiver::extended_a(int m, int sink1, int source1) {
    if (m < 2) throw QuiverError("A~m with m >= 2 required here (use kronecker() for A~1)");
    int n = m + 1;
    int sink = sink1 - 1, source = source1 - 1;
    if (sink == source) throw QuiverError("sink and source must differ");
    // cycle 0-1-...-m-0; both arcs oriented from the source to the sink
    std::vector<std::pair<int, int>> arrows;
    for (int v = source; v != sink; v = (v + 1) % n) arrows.push_back({v, (v + 1) % n});
    for (int v = source; v != sink; v = (v + n - 1) % n) arrows.push_back({v, (v + n - 1) % n});
    return Quiver(n, arrows);
}

Quiver Quiver::extended_d(int n, int sink1) {
    if (n < 4) throw QuiverError("D~n needs n >= 4");
    // vertices 1..n+1 (1-based): forks 1,2 at 3; chain 3..n-1; forks n,n+1 at n-1
    int N = n + 1;
    std::vector<std::pair<int, int>> edges{{0, 2}, {1, 2}};
    for (int v = 2; v + 1 < n - 1; ++v) edges.push_back({v, v + 1});
    edges.push_back({n - 2, n - 1});
    edges.push_back({n - 2, n});
    return Quiver(N, orient_tree_to_sink(N, edges, sink1 - 1));
}

Quiver Quiver::extended_e(int which, int sink1) {
    std::vector<std::pair<int, int>> edges;
    int N = 0;
    if (which == 6) {
        // 1-2-3-4-5 chain, 3-6, 6-7
        N = 7;
        edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}};
    } else if (which == 7) {
        // 1-..-7 chain, 4-8
        N = 8;
        edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}};
    } else if (which == 8) {
        // 1-..-8 chain, 3-9
        N = 9;
        edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 8}};
    } else {
        throw QuiverError("extended_e expects 6, 7 or 8");
    }
    return Quiver(N, orient_tree_to_sink(N, edges, sink1 - 1));
}

Quiver Quiver::kronecker() { return Quiver(2, {{0, 1}, {0, 1}}); }

Quiver Quiver::from_text(const std::string& text) {
    std::istringstream in(text);
    std::string word;
    int n = -1;
    std::vector<std::pair<int, int>> arrows;
    while (in >> word) {
        if (word == "vertices") {
            if (!(in >> n)) throw ParseError("expected vertex count after 'vertices'");
        } else if (word == "arrow") {
            int s, t;
            if (!(in >> s >> t)) throw ParseError("expected 'arrow s t'");
            if (n < 0) throw ParseError("'vertices N' must come first");
            arrows.push_back({s - 1, t - 1});
        } else if (word[0] == '#') {
            std::string rest;
            std::getline(in, rest);
        } else {
            throw ParseError("unknown directive in quiver file: " + word);
        }
    }
    if (n < 0) throw ParseError("quiver file has no 'vertices' line");
    return Quiver(n, arrows);
}

std::string Quiver::to_text() const {
    std::string s = "vertices " + std::to_string(n_) + "\n";
    for (auto [a, b] : arrows_) s += "arrow " + std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
    return s;
}

}  // namespace tamedeg
