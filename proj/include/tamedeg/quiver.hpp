#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tamedeg/ivec.hpp"

namespace tamedeg {

enum class QuiverKind { Dynkin, ExtendedDynkin };

struct QuiverError : std::runtime_error {
    explicit QuiverError(const std::string& msg) : std::runtime_error(msg) {}
};

// Tame quiver together with all numerical invariants of its Tits/Euler
// geometry. Vertices are 0-based internally; all parsing/printing is 1-based.
//
// Euler matrix convention: E = I - A with A[s][t] = #arrows s->t, so that
// <x,y> = x^T E y = sum_i x_i y_i - sum_{a:s->t} x_s y_t.
class Quiver {
  public:
    Quiver(int vertex_count, std::vector<std::pair<int, int>> arrows);

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
    QuiverKind kind() const { return kind_; }
    const std::string& label() const { return label_; }
    int diameter() const { return diameter_; }

    bool one_sink_mode() const { return sink_.has_value(); }
    int sink() const;  // unique sink vertex, one-sink mode only

    // Euler geometry
    Int euler_form(const IVec& x, const IVec& y) const;
    Int tits_form(const IVec& x) const { return euler_form(x, x); }
    const IVec& null_root() const;  // delta; throws on Dynkin input
    Int defect(const IVec& x) const;

    const IMat& euler_matrix() const { return euler_; }
    const IMat& coxeter() const { return coxeter_; }
    const IMat& coxeter_inv() const { return coxeter_inv_; }
    IVec coxeter_apply(const IVec& x) const { return mat_vec(coxeter_, x); }
    IVec coxeter_inv_apply(const IVec& x) const { return mat_vec(coxeter_inv_, x); }

    int coxeter_period() const { return period_; }        // p(Q)
    std::optional<Int> epsilon() const { return epsilon_; }  // eps(Q), ExtendedDynkin only

    IVec dim_projective(int i) const;  // dim P(i)
    IVec dim_injective(int i) const;   // dim I(i)

    IVec unit_vector(int i) const {
        IVec e(n_, 0);
        e[i] = 1;
        return e;
    }

    void check_dim(const IVec& x) const {
        if ((int)x.size() != n_) throw QuiverError("dimension vector size mismatch with vertex count");
    }

    // ---- built-in constructors (one-sink orientation, 1-based sink) ----
    static Quiver dynkin_a(int n, int sink1);
    static Quiver extended_a(int m, int sink1, int source1);  // cycle with m+1 vertices
    static Quiver extended_d(int n, int sink1);               // n+1 vertices, numbering as D~8 in the tables
    static Quiver extended_e(int which, int sink1);           // which in {6,7,8}
    static Quiver kronecker();                                // A~1

    static Quiver from_text(const std::string& text);  // "vertices N" + "arrow s t" lines
    std::string to_text() const;

  private:
    void classify_diagram();
    void compute_numerical_data();

    int n_;
    std::vector<std::pair<int, int>> arrows_;  // 0-based (source, target)
    QuiverKind kind_;
    std::string label_;
    int diameter_ = 0;
    std::optional<int> sink_;

    IMat euler_;        // E
    IMat euler_inv_;    // E^{-1}
    IMat coxeter_;      // c = -E^{-1} E^T
    IMat coxeter_inv_;  // c^{-1} = -E^{-T} E
    IVec delta_;        // null root (ExtendedDynkin)
    IVec defect_row_;   // delta^T E, so defect(x) = defect_row . x
    int period_ = 0;
    std::optional<Int> epsilon_;
};

}  // namespace tamedeg
