#include "tamedeg/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace tamedeg {

using nlohmann::json;

std::string load_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string Calibration::to_json() const {
    json j = json::object();
    for (auto& [key, val] : map) {
        json e;
        e["tube_perm"] = val.first;
        e["rot"] = val.second;
        j[key.first + "/" + std::to_string(key.second)] = e;
    }
    return j.dump(2) + "\n";
}

Calibration Calibration::from_json(const std::string& text) {
    Calibration cal;
    json j = json::parse(text);
    for (auto& [key, val] : j.items()) {
        auto slash = key.find('/');
        if (slash == std::string::npos) throw ParseError("bad calibration key: " + key);
        std::string label = key.substr(0, slash);
        int sink1 = std::stoi(key.substr(slash + 1));
        cal.map[{label, sink1}] = {val["tube_perm"].get<std::vector<int>>(), val["rot"].get<std::vector<int>>()};
    }
    return cal;
}

Calibration Calibration::load_file(const std::string& path) { return from_json(load_text_file(path)); }

void Calibration::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write file: " + path);
    out << to_json();
}

std::vector<TableRow> parse_table_rows(const std::string& text) {
    std::vector<TableRow> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        TableRow r;
        std::string u, v, m;
        if (!(ls >> r.type >> u >> v >> r.tube1 >> m)) throw ParseError("bad table row: " + line);
        if (sscanf(u.c_str(), "P(%d)", &r.sink1) != 1) throw ParseError("bad U in table row: " + line);
        if (sscanf(v.c_str(), "tau^%d I(%d)", &r.tau, &r.vertex1) != 2) {
            if (sscanf(v.c_str(), "tau^%dI(%d)", &r.tau, &r.vertex1) != 2) throw ParseError("bad V in table row: " + line);
        }
        // summands like S_3'(2) joined by '+'; primes select the tube
        size_t pos = 0;
        while (pos < m.size()) {
            if (m[pos] == '+') {
                ++pos;
                continue;
            }
            if (m[pos] != 'S' || pos + 1 >= m.size() || m[pos + 1] != '_') throw ParseError("bad summand in: " + m);
            pos += 2;
            size_t start = pos;
            while (pos < m.size() && isdigit((unsigned char)m[pos])) ++pos;
            int sub = std::stoi(m.substr(start, pos - start));
            int primes = 0;
            while (pos < m.size() && m[pos] == '\'') {
                ++primes;
                ++pos;
            }
            if (pos >= m.size() || m[pos] != '(') throw ParseError("bad summand in: " + m);
            ++pos;
            start = pos;
            while (pos < m.size() && isdigit((unsigned char)m[pos])) ++pos;
            int len = std::stoi(m.substr(start, pos - start));
            if (pos >= m.size() || m[pos] != ')') throw ParseError("bad summand in: " + m);
            ++pos;
            r.m.push_back({sub, primes + 1, len});
        }
        rows.push_back(r);
    }
    return rows;
}

std::optional<std::string> calibrated_tube_string(const Catalog& cat, const Calibration& cal, const std::string& label,
                                                  int sink1, const ModuleSum& m) {
    auto it = cal.map.find({label, sink1});
    if (it == cal.map.end()) return std::nullopt;
    const auto& [perm, rot] = it->second;
    std::vector<std::tuple<int, int, int>> parts;  // (paper tube, subscript, len)
    for (auto& [x, k] : m.summands()) {
        if (x.kind != IndecKind::Regular || x.base >= (int)perm.size()) return std::nullopt;
        int p = cat.tube_period(x.base);
        int sub = ((x.shift + rot[x.base]) % p + p) % p + 1;
        for (Int c = 0; c < k; ++c) parts.push_back({perm[x.base], sub, x.len});
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (auto& [tube1, sub, len] : parts) {
        if (!out.empty()) out += "+";
        out += "S_" + std::to_string(sub) + std::string(tube1 - 1, '\'') + "(" + std::to_string(len) + ")";
    }
    return out;
}

std::string indec_pretty(const Catalog& cat, const Indec& x) {
    switch (x.kind) {
        case IndecKind::Preprojective:
            if (x.shift == 0) return "P(" + std::to_string(x.base + 1) + ")";
            return "tau^-" + std::to_string(x.shift) + " P(" + std::to_string(x.base + 1) + ")";
        case IndecKind::Preinjective:
            if (x.shift == 0) return "I(" + std::to_string(x.base + 1) + ")";
            return "tau^" + std::to_string(x.shift) + " I(" + std::to_string(x.base + 1) + ")";
        case IndecKind::Regular:
            return "E" + std::to_string(x.base + 1) + "_" + std::to_string(x.shift + 1) + "(" + std::to_string(x.len) + ")";
    }
    (void)cat;
    return "?";
}

namespace {
const char* prov_name(Provenance p) {
    switch (p) {
        case Provenance::Direct: return "direct";
        case Provenance::ReducedFrom: return "reduced-from";
        case Provenance::PeriodicImageOf: return "periodic-image-of";
    }
    return "?";
}
Provenance prov_parse(const std::string& s) {
    if (s == "direct") return Provenance::Direct;
    if (s == "reduced-from") return Provenance::ReducedFrom;
    if (s == "periodic-image-of") return Provenance::PeriodicImageOf;
    throw ParseError("unknown provenance: " + s);
}
json bloc_json(const Catalog& cat, const BlocRecord& b) {
    json e;
    e["U"] = cat.indec_to_string(b.U);
    e["V"] = cat.indec_to_string(b.V);
    e["M"] = b.M.to_string();
    e["codim"] = b.codim;
    e["provenance"] = prov_name(b.prov);
    if (!b.prov_ref.empty()) e["ref"] = b.prov_ref;
    return e;
}
BlocRecord bloc_unjson(const Catalog& cat, const json& e) {
    BlocRecord b;
    b.U = cat.indec_from_string(e["U"].get<std::string>());
    b.V = cat.indec_from_string(e["V"].get<std::string>());
    b.M = cat.sum_from_string(e["M"].get<std::string>());
    b.codim = e["codim"].get<Int>();
    b.prov = prov_parse(e["provenance"].get<std::string>());
    if (e.contains("ref")) b.prov_ref = e["ref"].get<std::string>();
    return b;
}
}  // namespace

std::string run_to_json(const Catalog& cat, const ClassificationRun& run) {
    json j;
    j["version"] = 1;
    j["quiver"] = {{"label", run.quiver_label}, {"sink", run.sink1}, {"text", run.quiver_text}};
    json blocs = json::array();
    for (const BlocRecord& b : run.blocs) blocs.push_back(bloc_json(cat, b));
    j["blocs"] = blocs;
    return j.dump(2) + "\n";
}

ClassificationRun run_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j["version"].get<int>() != 1) throw ParseError("unsupported run file version");
    ClassificationRun run;
    run.quiver_label = j["quiver"]["label"].get<std::string>();
    run.sink1 = j["quiver"]["sink"].get<int>();
    run.quiver_text = j["quiver"]["text"].get<std::string>();
    return run;  // blocs decoded by the caller once a catalog exists
}

std::string bloc_to_json(const Catalog& cat, const BlocRecord& b, const std::string& quiver_text) {
    json j;
    j["version"] = 1;
    j["quiver_text"] = quiver_text;
    j["bloc"] = bloc_json(cat, b);
    return j.dump(2) + "\n";
}

BlocRecord bloc_from_json(const Catalog& cat, const std::string& text) {
    json j = json::parse(text);
    return bloc_unjson(cat, j["bloc"]);
}

std::vector<BlocRecord> run_decode_blocs(const Catalog& cat, const std::string& text);
std::vector<BlocRecord> run_decode_blocs(const Catalog& cat, const std::string& text) {
    json j = json::parse(text);
    std::vector<BlocRecord> out;
    for (const json& e : j["blocs"]) out.push_back(bloc_unjson(cat, e));
    return out;
}

std::string emit_poset_json(const DeformationPoset& poset) {
    json j;
    j["target"] = poset.target.to_string();
    json elems = json::array();
    for (size_t i = 0; i < poset.elements.size(); ++i)
        elems.push_back({{"summands", poset.elements[i].to_string()}, {"codim", poset.codims[i]}});
    j["elements"] = elems;
    json covers = json::array();
    for (auto& [a, b] : poset.covers) covers.push_back({a, b});
    j["covers"] = covers;
    return j.dump(2) + "\n";
}

std::string emit_dot(const TubeCalc& tc, const DeformationPoset& poset, const Indec* u, const Indec* v) {
    std::ostringstream out;
    out << "digraph deformations {\n  rankdir=BT;\n  node [shape=box];\n";
    // nodes grouped by codimension rank
    std::map<Int, std::vector<size_t>> by_codim;
    for (size_t i = 0; i < poset.elements.size(); ++i) by_codim[poset.codims[i]].push_back(i);
    for (size_t i = 0; i < poset.elements.size(); ++i) {
        bool bold = false;
        if (u && v) {
            try {
                bold = tc.is_extension_regular_pair(poset.elements[i], *u, *v);
            } catch (const TubeError&) {
                bold = false;
            }
        }
        out << "  n" << i << " [label=\"" << poset.elements[i].to_string() << "\"";
        if (bold) out << ", style=bold";
        out << "];\n";
    }
    for (auto& [codim, nodes] : by_codim) {
        out << "  { rank=same;";
        for (size_t i : nodes) out << " n" << i << ";";
        out << " }\n";
    }
    for (auto& [a, b] : poset.covers) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace tamedeg
