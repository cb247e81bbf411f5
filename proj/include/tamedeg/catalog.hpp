#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tamedeg/quiver.hpp"

namespace tamedeg {

enum class IndecKind { Preprojective = 0, Regular = 1, Preinjective = 2 };

// Symbolic indecomposable: tau^{-shift} P(base), E_{socle}(len) in tube
// `base`, or tau^{shift} I(base). Socle indices are 0-based internally.
struct Indec {
    IndecKind kind = IndecKind::Preprojective;
    int base = 0;
    int shift = 0;  // tau-shift for P/I, socle index for Regular
    int len = 0;    // regular length, 0 for P/I
    IVec dim;

    auto key() const { return std::tuple((int)kind, base, shift, len); }
    bool operator==(const Indec& o) const { return key() == o.key(); }
    bool operator!=(const Indec& o) const { return key() != o.key(); }
    bool operator<(const Indec& o) const { return key() < o.key(); }
};

struct TubeData {
    int id = 0;
    int period = 1;
    std::vector<IVec> simples;  // simples[s] = dim E_{s+1}; tau E_i = E_{i-1}
};

struct CatalogError : std::runtime_error {
    explicit CatalogError(const std::string& msg) : std::runtime_error(msg) {}
};

class Catalog;

// Canonical multiset of indecomposables with cached dimension vector.
class ModuleSum {
  public:
    ModuleSum() = default;
    explicit ModuleSum(const Catalog& cat);

    void add(const Indec& x, Int mult = 1);
    void finish(const Catalog& cat);  // sort, merge, relabel homogeneous tubes

    const std::vector<std::pair<Indec, Int>>& summands() const { return parts_; }
    const IVec& dim() const { return dim_; }
    bool empty() const { return parts_.empty(); }
    Int total_summands() const;
    Int multiplicity(const Indec& x) const;

    ModuleSum part(IndecKind k) const;            // preprojective / regular / preinjective slice
    ModuleSum tube_part(int tube_id) const;       // regular slice of one tube
    std::vector<int> touched_tubes() const;       // tube ids occurring in the regular part
    bool shares_summand_with(const ModuleSum& o) const;

    bool operator==(const ModuleSum& o) const { return parts_ == o.parts_; }
    bool operator<(const ModuleSum& o) const;

    std::string to_string() const;  // canonical text form, e.g. "P(1)^-2+E1_2(3)*2+I(3)^+1"

  private:
    friend class Catalog;
    std::vector<std::pair<Indec, Int>> parts_;
    IVec dim_;
    int n_ = 0;
};

// Catalog of all indecomposables of a tame quiver: tau-calculus, tube
// discovery, root enumeration and AR-quiver distances.
class Catalog {
  public:
    explicit Catalog(Quiver q);

    const Quiver& quiver() const { return q_; }

    int nonhomog_tube_count() const { return (int)tubes_.size(); }
    int generic_homog_tube() const { return (int)tubes_.size(); }
    TubeData tube(int id) const;
    int tube_period(int id) const { return id < (int)tubes_.size() ? tubes_[id].period : 1; }
    bool is_homogeneous_tube(int id) const { return id >= (int)tubes_.size(); }

    Indec preprojective(int i, int k) const;
    Indec preinjective(int i, int k) const;
    Indec regular(int tube_id, int socle, int len) const;
    Indec projective(int i) const { return preprojective(i, 0); }
    Indec injective(int i) const { return preinjective(i, 0); }

    bool is_projective(const Indec& x) const;
    bool is_injective(const Indec& x) const;
    bool is_simple_projective(const Indec& x) const;

    Indec tau(const Indec& x) const;
    Indec tau_inv(const Indec& x) const;
    Indec tau_power(const Indec& x, Int k) const;  // k may be negative

    int regular_top(const Indec& x) const;  // 0-based simple index of Top
    int regular_socle(const Indec& x) const { return x.shift; }

    std::vector<Indec> roots_up_to(const IVec& bound) const;
    const std::vector<Indec>& all_roots() const;  // Dynkin only

    std::optional<Indec> indec_by_dim(const IVec& d) const;  // nullopt when not a real root / ambiguous

    // AR-quiver path distance within a preprojective/preinjective component.
    std::optional<Int> path_distance(const Indec& x, const Indec& y) const;
    std::vector<Indec> preproj_successors_within(const std::vector<Indec>& seeds, Int maxdist) const;
    std::vector<Indec> preinj_predecessors_within(const std::vector<Indec>& seeds, Int maxdist) const;

    ModuleSum sum(const std::vector<std::pair<Indec, Int>>& parts) const;
    ModuleSum direct_sum(const Indec& a, const Indec& b) const;

    std::string indec_to_string(const Indec& x) const;
    Indec indec_from_string(const std::string& s) const;
    ModuleSum sum_from_string(const std::string& s) const;

  private:
    void discover_tubes();
    IVec regular_dim(int tube_id, int socle, int len) const;

    Quiver q_;
    std::vector<TubeData> tubes_;
    std::vector<IVec> dims_proj_, dims_inj_;
    mutable std::vector<Indec> dynkin_roots_;           // Dynkin cache
    mutable std::map<IVec, Indec> dynkin_by_dim_;
};

}  // namespace tamedeg
