#pragma once

#include <iosfwd>

#include "tamedeg/classify.hpp"

namespace tamedeg {

// Correspondence between our computed tube/simple labels and the published
// table labels, per quiver type and sink: paper tube k = tube_perm[our id],
// paper subscript i = ((s + rot[our id]) mod p) + 1.
struct Calibration {
    std::map<std::pair<std::string, int>, std::pair<std::vector<int>, std::vector<int>>> map;  // (label, sink1) -> (tube_perm, rot)

    bool has(const std::string& label, int sink1) const { return map.count({label, sink1}) > 0; }
    std::string to_json() const;
    static Calibration from_json(const std::string& text);
    static Calibration load_file(const std::string& path);
    void save_file(const std::string& path) const;
};

// One row of the published minimal-deformation table.
struct TableRow {
    std::string type;  // "D~8", "E~6", ...
    int sink1 = 0;     // U = P(sink)
    int tau = 0;       // V = tau^tau I(vertex)
    int vertex1 = 0;
    int tube1 = 0;     // 1-based published tube number
    std::vector<std::tuple<int, int, int>> m;  // (subscript 1-based, primes = tube-1, length)... stored as (sub, tube1, len)
};

std::vector<TableRow> parse_table_rows(const std::string& text);
std::string load_text_file(const std::string& path);

// Render a ModuleSum in published S-labels under a calibration entry;
// returns nullopt when M is not inside a single non-homogeneous tube or no
// calibration entry exists.
std::optional<std::string> calibrated_tube_string(const Catalog& cat, const Calibration& cal, const std::string& label,
                                                  int sink1, const ModuleSum& m);

// Canonical run serialization (versioned JSON with embedded quiver text).
std::string run_to_json(const Catalog& cat, const ClassificationRun& run);
ClassificationRun run_from_json(const std::string& text);
std::vector<BlocRecord> run_decode_blocs(const Catalog& cat, const std::string& text);
std::string bloc_to_json(const Catalog& cat, const BlocRecord& b, const std::string& quiver_text);
BlocRecord bloc_from_json(const Catalog& cat, const std::string& text);

// DOT / JSON emitters for deformation posets.  Extension members are
// styled bold when the target is U+V inside one tube.
std::string emit_dot(const TubeCalc& tc, const DeformationPoset& poset, const Indec* u = nullptr, const Indec* v = nullptr);
std::string emit_poset_json(const DeformationPoset& poset);

std::string indec_pretty(const Catalog& cat, const Indec& x);  // tau^k I(i) / tau^-k P(i) / E{mu}_{s}({l})

}  // namespace tamedeg
