#pragma once

#include <mutex>
#include <unordered_map>

#include "tamedeg/catalog.hpp"

namespace tamedeg {

// Multiplicity of the simple with index `which` among the regular
// composition factors of E_{socle}(len) in a tube of period p.
inline Int tube_factor_count(int p, int socle, int len, int which) {
    int w = ((which - socle) % p + p) % p;
    if (w >= len) return 0;
    return (len - 1 - w) / p + 1;
}

// [R1,R2] = min(l_{Top(R1)}(R2), l_{Soc(R2)}(R1)) for same-tube modules.
inline Int tube_hom(int p, int soc1, int len1, int soc2, int len2) {
    int top1 = (soc1 + len1 - 1) % p;
    return std::min(tube_factor_count(p, soc2, len2, top1), tube_factor_count(p, soc1, len1, soc2));
}

// Exact dim Hom / dim Ext for pairs of indecomposables, memoized. The rule
// system terminates because every recursion strictly decreases a tau-shift
// toward a projective/injective base case; a depth guard errors out beyond
// 10000 reductions.
class HomTable {
  public:
    explicit HomTable(const Catalog& cat) : cat_(cat) {}

    Int hom(const Indec& x, const Indec& y) const;
    Int ext(const Indec& x, const Indec& y) const;

    Int hom_sum(const ModuleSum& m, const ModuleSum& n) const;
    Int ext_sum(const ModuleSum& m, const ModuleSum& n) const;
    Int hom_sum(const ModuleSum& m, const Indec& y) const;
    Int hom_sum(const Indec& x, const ModuleSum& n) const;

    const Catalog& catalog() const { return cat_; }

  private:
    Int hom_impl(const Indec& x, const Indec& y, int depth) const;
    Int ext_impl(const Indec& x, const Indec& y, int depth) const;

    static uint64_t pack(const Indec& x) {
        return ((uint64_t)x.kind << 60) | ((uint64_t)(x.base & 0xfff) << 48) | ((uint64_t)(x.shift & 0xffffff) << 24) |
               (uint64_t)(x.len & 0xffffff);
    }
    struct KeyHash {
        size_t operator()(const std::pair<uint64_t, uint64_t>& k) const {
            uint64_t h = k.first * 0x9e3779b97f4a7c15ULL ^ (k.second + 0x517cc1b727220a95ULL + (k.first << 6));
            h ^= h >> 31;
            return (size_t)(h * 0xbf58476d1ce4e5b9ULL);
        }
    };

    const Catalog& cat_;
    mutable std::mutex mu_;
    mutable std::unordered_map<std::pair<uint64_t, uint64_t>, Int, KeyHash> memo_;
};

}  // namespace tamedeg
