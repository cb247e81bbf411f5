#pragma once

#include "tamedeg/degen.hpp"
#include "tamedeg/tube.hpp"

namespace tamedeg {

struct AuditReport {
    std::vector<std::string> checked;     // one line per audited fact
    std::vector<std::string> violations;  // expected empty
    bool ok() const { return violations.empty(); }
};

struct ClassificationRun {
    std::string quiver_text;
    std::string quiver_label;
    int sink1 = 0;  // 1-based
    std::vector<BlocRecord> blocs;
};

class Classifier {
  public:
    explicit Classifier(const HomTable& homs)
        : homs_(homs), cat_(homs.catalog()), order_(homs), tubes_(homs) {}

    // All minimal disjoint degenerations M < U+V within the enumeration
    // windows.  U simple projective + V preinjective uses the Degeneration
    // Test and the naheprepsum candidate windows; other targets fall back
    // to the generic deformation-poset machinery.
    std::vector<BlocRecord> classify(const Indec& u, const Indec& v, const EnumOptions& opt = {}) const;

    // Reduction I along a directed disjoint split M = M1 + M2; returns the
    // reduced bloc M1 < U + C and the codimension difference Delta.
    BlocRecord reduce_I(const BlocRecord& b, const ModuleSum& m1, const ModuleSum& m2, Int* delta_out = nullptr,
                        bool verify_minimal = true) const;

    // V regular: strip the regular part R of M from V, giving M_P < U + C.
    BlocRecord reduce_regular_target(const BlocRecord& b) const;

    AuditReport audit_theorem1(const std::vector<BlocRecord>& blocs) const;
    AuditReport audit_structural_lemmas(const std::vector<BlocRecord>& blocs) const;

    // Extend by periodic images up to shift_bound applications.
    std::vector<BlocRecord> periodic_closure(const std::vector<BlocRecord>& blocs, Int shift_bound) const;

    // predecessor preorder on indecomposables
    bool preceq(const Indec& x, const Indec& y) const;
    bool directed_decomposition(const ModuleSum& m1, const ModuleSum& m2) const;

    // §6.3: K = extensions of U (simple projective) by V regular of dim
    // delta; predicate over deformations of U+V.
    bool extension_set_K(const ModuleSum& m, const Indec& u, const Indec& v) const;

    Int classify_window() const;  // naheprepsum bound + margin

    const DegenOrder& order() const { return order_; }
    const TubeCalc& tube_calc() const { return tubes_; }

  private:
    std::vector<ModuleSum> enumerate_candidates(const Indec& u, const Indec& v, const EnumOptions& opt) const;

    const HomTable& homs_;
    const Catalog& cat_;
    DegenOrder order_;
    TubeCalc tubes_;
};

}  // namespace tamedeg
