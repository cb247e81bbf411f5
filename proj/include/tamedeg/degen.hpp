#pragma once

#include <functional>

#include "tamedeg/hom.hpp"

namespace tamedeg {

struct DegenError : std::runtime_error {
    explicit DegenError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegenPair {
    ModuleSum lower;  // M
    ModuleSum upper;  // N
    Int codim = 0;    // hom(N,N) - hom(M,M), >= 1 for proper degenerations
};

struct DeformationPoset {
    ModuleSum target;                        // N, the unique maximum
    std::vector<ModuleSum> elements;         // sorted; includes target
    int target_index = -1;
    std::vector<Int> codims;                 // codim(N, element); 0 for N itself
    std::vector<std::vector<char>> below;    // below[i][j]: element i < element j (strict)
    std::vector<std::pair<int, int>> covers; // (i, j) with i < j a cover edge
};

struct EnumOptions {
    bool tube_only = false;
    int tube_id = -1;
    std::function<bool(const ModuleSum&)> filter;  // optional candidate predicate
    Int cap = 250;                                 // componentwise cap on dim N
    Int max_homog_tubes = 4;
};

class DegenOrder {
  public:
    explicit DegenOrder(const HomTable& homs) : homs_(homs), cat_(homs.catalog()) {}

    // M <= N tested over the finite windowed test set; window_factor scales
    // the 2(p(Q)+d(Q)) tau-window.
    bool leq(const ModuleSum& m, const ModuleSum& n, Int window_factor = 1) const;

    // §4.1 Degeneration Test for N = U+V with U simple projective and V
    // preinjective; exact by the paper's proposition.
    bool degeneration_test_UV(const ModuleSum& m, const Indec& u, const Indec& v) const;

    // §4.1 corollary for M inside one tube: dim equality plus the
    // top-count inequality against every simple of that tube.
    bool regular_degeneration_test(const ModuleSum& m, const Indec& u, const Indec& v) const;

    std::vector<Indec> test_set(const ModuleSum& m, const ModuleSum& n, Int window_factor) const;

    // All multiset decompositions of `target` into catalog indecomposables
    // (homogeneous summands distributed over fresh tubes canonically).
    std::vector<ModuleSum> enumerate_decompositions(const IVec& target, const EnumOptions& opt) const;

    DeformationPoset deformation_poset(const Indec& u, const Indec& v, const EnumOptions& opt = {}) const;
    DeformationPoset poset_of_target(const ModuleSum& n, const EnumOptions& opt = {}) const;

    std::vector<DegenPair> minimal_degenerations(const ModuleSum& n, const EnumOptions& opt = {}) const;

    Int codim(const ModuleSum& n, const ModuleSum& m) const;

    Int window() const;  // 2(p(Q)+d(Q))

    const HomTable& homs() const { return homs_; }
    const Catalog& catalog() const { return cat_; }

  private:
    // strict dominance of hom vectors computed over a shared test set
    std::vector<std::vector<Int>> hom_matrix(const std::vector<ModuleSum>& elems, const std::vector<Indec>& tests) const;

    const HomTable& homs_;
    const Catalog& cat_;
};

}  // namespace tamedeg
