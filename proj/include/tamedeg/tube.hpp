#pragma once

#include <memory>

#include "tamedeg/hom.hpp"

namespace tamedeg {

struct TubeError : std::runtime_error {
    explicit TubeError(const std::string& msg) : std::runtime_error(msg) {}
};

// The extension poset E(V,U) of two indecomposables in one tube, together
// with the index set S(V,U) and the codimension of the member covering
// U+V.  Members are listed by ascending m, i.e. from the cover of U+V
// downwards in the degeneration order.
struct ExtensionPoset {
    Indec U, V;
    int period = 1;
    int r = 0;                      // minimal length of W with Top(W)=Top(V), Soc(W)=tau^- Top(U)
    std::vector<Int> s_set;         // the admissible m
    std::vector<ModuleSum> members; // middle terms, ascending m; zero-length parts dropped
    Int cover_codim = 0;            // three-case formula value for the first member (if any)
};

enum class Provenance { Direct, ReducedFrom, PeriodicImageOf };

// Minimal disjoint degeneration M < U+V with provenance.
struct BlocRecord {
    Indec U, V;
    ModuleSum M;
    Int codim = 0;
    Provenance prov = Provenance::Direct;
    std::string prov_ref;
};

class TubeCalc {
  public:
    explicit TubeCalc(const HomTable& homs) : homs_(homs), cat_(homs.catalog()) {}

    ExtensionPoset extension_poset(const Indec& u, const Indec& v) const;

    // Middle term of the universal extension of x by the simples of tube mu.
    Indec generic_extension_e(const Indec& x, int mu) const;
    Indec e_power(const Indec& x, int mu, Int times) const;

    // Preinjective V' with e(V') = V; strips one copy of hom(E_i, V) socles.
    Indec socle_quotient_V(const Indec& v, int mu) const;

    // Prop. indsub: strip the full regular socle of a one-tube M with
    // defect(V) summands; the codimension is preserved.
    BlocRecord reduce_bloc_by_socle(const BlocRecord& b) const;

    // Periodicity theorem shift: R -> e^p(R), M_I -> tau^{p(Q)} M_I,
    // V -> tau^{p(Q)} V.  Checks the hom-count precondition.
    BlocRecord periodic_shift(const BlocRecord& b) const;
    bool periodic_shift_applicable(const BlocRecord& b, std::string* why = nullptr) const;

    bool is_extension_regular_pair(const ModuleSum& m, const Indec& u, const Indec& v) const;

    const Catalog& catalog() const { return cat_; }
    const HomTable& homs() const { return homs_; }

  private:
    const HomTable& homs_;
    const Catalog& cat_;
};

// Backing quiver for "abstract tube" computations: provides a quiver whose
// catalog contains a tube of the requested period (A~p with arcs (p,1) for
// p >= 2, the Kronecker quiver's homogeneous tube for p = 1).
struct AbstractTube {
    explicit AbstractTube(int period);
    int tube_id() const { return id_; }
    const Catalog& catalog() const { return *cat_; }
    Indec module(int socle1, int len) const;  // 1-based socle

    std::shared_ptr<Quiver> quiver_;
    std::shared_ptr<Catalog> cat_;
    int id_ = 0;
};

}  // namespace tamedeg
