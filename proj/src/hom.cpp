#include "tamedeg/hom.hpp"

namespace tamedeg {

namespace {
constexpr int kMaxDepth = 10000;
}

Int HomTable::hom(const Indec& x, const Indec& y) const { return hom_impl(x, y, 0); }

Int HomTable::ext(const Indec& x, const Indec& y) const { return ext_impl(x, y, 0); }

Int HomTable::ext_impl(const Indec& x, const Indec& y, int depth) const {
    if (cat_.is_projective(x)) return 0;
    return hom_impl(y, cat_.tau(x), depth + 1);
}

Int HomTable::hom_impl(const Indec& x, const Indec& y, int depth) const {
    if (depth > kMaxDepth) throw InternalError("hom recursion exceeded 10000 reductions");
    auto key = std::pair<uint64_t, uint64_t>{pack(x), pack(y)};
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    const Quiver& q = cat_.quiver();
    Int result = -1;
    // (1) vanishing directions
    if (x.kind == IndecKind::Preinjective && y.kind != IndecKind::Preinjective) result = 0;
    else if (x.kind == IndecKind::Regular && y.kind == IndecKind::Preprojective) result = 0;
    else if (x.kind == IndecKind::Regular && y.kind == IndecKind::Regular) {
        // (2) same tube: min formula; different tubes: 0
        if (x.base != y.base) result = 0;
        else result = tube_hom(cat_.tube_period(x.base), x.shift, x.len, y.shift, y.len);
    } else if (cat_.is_projective(x)) {
        result = y.dim[x.base];  // (3)
    } else if (y.kind == IndecKind::Preinjective && y.shift == 0) {
        result = x.dim[y.base];  // (3) dual
    } else if (x.kind == IndecKind::Preprojective && y.kind == IndecKind::Preprojective && x.shift > 0 && x.shift <= y.shift) {
        // (4) shift both until the first argument is projective
        result = cat_.preprojective(y.base, y.shift - x.shift).dim[x.base];
    } else if (x.kind == IndecKind::Preinjective && y.kind == IndecKind::Preinjective && y.shift > 0 && y.shift <= x.shift) {
        result = cat_.preinjective(x.base, x.shift - y.shift).dim[y.base];
    } else {
        // (5) Euler form plus the AR-dual Ext
        result = q.euler_form(x.dim, y.dim) + ext_impl(x, y, depth + 1);
    }
    if (result < 0) throw InternalError("hom rule system produced a negative value for " + cat_.indec_to_string(x) + " -> " + cat_.indec_to_string(y));
    {
        std::lock_guard<std::mutex> lock(mu_);
        memo_.insert({key, result});
    }
    return result;
}

Int HomTable::hom_sum(const ModuleSum& m, const ModuleSum& n) const {
    Int s = 0;
    for (auto& [x, mx] : m.summands())
        for (auto& [y, my] : n.summands()) s += mx * my * hom(x, y);
    return s;
}

Int HomTable::ext_sum(const ModuleSum& m, const ModuleSum& n) const {
    Int s = 0;
    for (auto& [x, mx] : m.summands())
        for (auto& [y, my] : n.summands()) s += mx * my * ext(x, y);
    return s;
}

Int HomTable::hom_sum(const ModuleSum& m, const Indec& y) const {
    Int s = 0;
    for (auto& [x, mx] : m.summands()) s += mx * hom(x, y);
    return s;
}

Int HomTable::hom_sum(const Indec& x, const ModuleSum& n) const {
    Int s = 0;
    for (auto& [y, my] : n.summands()) s += my * hom(x, y);
    return s;
}

}  // namespace tamedeg
