#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "tamedeg/io.hpp"

using namespace tamedeg;

namespace {

struct Cli {
    std::string type;
    int sink = 0;
    int source = 0;
    std::string quiver_file;
    std::string tube_spec;
    Int cap = 250;

    std::shared_ptr<Quiver> quiver;
    std::shared_ptr<Catalog> cat;
    std::shared_ptr<AbstractTube> abstract_tube;

    void materialize() {
        if (!tube_spec.empty()) {
            int p = 0;
            if (sscanf(tube_spec.c_str(), "p=%d", &p) != 1 || p < 1) throw ParseError("--tube expects p=<period>");
            abstract_tube = std::make_shared<AbstractTube>(p);
            cat = abstract_tube->cat_;
            return;
        }
        if (!quiver_file.empty()) {
            quiver = std::make_shared<Quiver>(Quiver::from_text(load_text_file(quiver_file)));
        } else if (!type.empty()) {
            if (sink <= 0) throw ParseError("--sink is required with --type");
            if (type == "E6" || type == "E~6") quiver = std::make_shared<Quiver>(Quiver::extended_e(6, sink));
            else if (type == "E7" || type == "E~7") quiver = std::make_shared<Quiver>(Quiver::extended_e(7, sink));
            else if (type == "E8" || type == "E~8") quiver = std::make_shared<Quiver>(Quiver::extended_e(8, sink));
            else if (type[0] == 'D') quiver = std::make_shared<Quiver>(Quiver::extended_d(std::stoi(type.substr(type.find_first_of("0123456789"))), sink));
            else if (type[0] == 'A') {
                int m = std::stoi(type.substr(type.find_first_of("0123456789")));
                int src = source > 0 ? source : (sink % (m + 1)) + 1;
                quiver = std::make_shared<Quiver>(Quiver::extended_a(m, sink, src));
            } else
                throw ParseError("unknown --type " + type);
        } else {
            throw ParseError("choose a quiver via --type/--sink, --quiver-file or --tube");
        }
        cat = std::make_shared<Catalog>(*quiver);
    }

    Indec parse_indec(const std::string& tok) const {
        // abstract tube tokens: E<socle>:<len>
        if (abstract_tube) {
            int s = 0, l = 0;
            if (sscanf(tok.c_str(), "E%d:%d", &s, &l) == 2) return abstract_tube->module(s, l);
        }
        return cat->indec_from_string(tok);
    }
};

void write_or_print(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
}

int run(int argc, char** argv) {
    CLI::App app{"degenerations of tame quiver representations"};
    app.require_subcommand(1);
    Cli cli;
    app.add_option("--type", cli.type, "quiver type: E6, E7, E8, D<n>, A<m> (extended Dynkin)");
    app.add_option("--sink", cli.sink, "unique sink vertex (1-based)");
    app.add_option("--source", cli.source, "source vertex for A~m orientations");
    app.add_option("--quiver-file", cli.quiver_file, "quiver text file (vertices N / arrow s t)");
    app.add_option("--tube", cli.tube_spec, "abstract tube mode, e.g. p=4");
    app.add_option("--cap", cli.cap, "componentwise enumeration cap");

    auto* cmd_info = app.add_subcommand("info", "print numerical invariants");

    std::string arg_x, arg_y;
    auto* cmd_hom = app.add_subcommand("hom", "dim Hom(X,Y) for indecomposables");
    cmd_hom->add_option("X", arg_x)->required();
    cmd_hom->add_option("Y", arg_y)->required();

    auto* cmd_homtable = app.add_subcommand("homtable", "dim Hom and dim Ext for module sums");
    cmd_homtable->add_option("M", arg_x)->required();
    cmd_homtable->add_option("N", arg_y)->required();

    std::string dot_path, json_path;
    bool tube_only = false;
    auto* cmd_poset = app.add_subcommand("poset", "deformation poset of U+V");
    cmd_poset->add_option("U", arg_x)->required();
    cmd_poset->add_option("V", arg_y)->required();
    cmd_poset->add_flag("--tube-only", tube_only, "restrict candidates to the tube of U and V");
    cmd_poset->add_option("--dot", dot_path, "write a DOT file");
    cmd_poset->add_option("--json", json_path, "write the poset as JSON");

    auto* cmd_extposet = app.add_subcommand("extposet", "extension poset E(V,U) in a tube");
    cmd_extposet->add_option("U", arg_x)->required();
    cmd_extposet->add_option("V", arg_y)->required();

    std::string arg_mu, arg_n = "1";
    auto* cmd_eshift = app.add_subcommand("eshift", "generic extension operator e relative to a tube");
    cmd_eshift->add_option("X", arg_x)->required();
    cmd_eshift->add_option("MU", arg_mu, "tube id (1-based)")->required();
    cmd_eshift->add_option("N", arg_n, "number of applications");

    std::string bloc_file;
    auto* cmd_pshift = app.add_subcommand("periodic-shift", "apply the periodicity theorem to a bloc file");
    cmd_pshift->add_option("bloc", bloc_file, "bloc JSON file")->required();

    int vrange = 0;
    std::string calib_path = "data/calibration.json";
    auto* cmd_classify = app.add_subcommand("classify", "minimal disjoint degenerations of P(sink) + tau^k I(i)");
    cmd_classify->add_option("--vrange", vrange, "maximal tau-shift of V (negative: empty table)");
    cmd_classify->add_option("--json", json_path, "write the run as JSON");
    cmd_classify->add_flag("--tube-only", tube_only, "keep only one-tube blocs");
    cmd_classify->add_option("--calibration", calib_path, "calibration file for published S-labels");

    std::string run_file;
    auto* cmd_audit = app.add_subcommand("audit", "re-audit a classification run file");
    cmd_audit->add_option("run", run_file, "run JSON file")->required();

    app.parse(argc, argv);

    if (cmd_audit->parsed()) {
        std::string text = load_text_file(run_file);
        ClassificationRun run = run_from_json(text);
        Quiver q = Quiver::from_text(run.quiver_text);
        Catalog cat(q);
        HomTable homs(cat);
        Classifier cls(homs);
        run.blocs = run_decode_blocs(cat, text);
        AuditReport t1 = cls.audit_theorem1(run.blocs);
        AuditReport st = cls.audit_structural_lemmas(run.blocs);
        std::cout << "audited " << run.blocs.size() << " blocs\n";
        std::cout << "theorem-1 violations: " << t1.violations.size() << "\n";
        for (auto& v : t1.violations) std::cout << "  " << v << "\n";
        std::cout << "structural violations: " << st.violations.size() << "\n";
        for (auto& v : st.violations) std::cout << "  " << v << "\n";
        return (t1.ok() && st.ok()) ? 0 : 1;
    }

    cli.materialize();
    HomTable homs(*cli.cat);
    DegenOrder order(homs);
    TubeCalc tc(homs);
    Classifier cls(homs);

    if (cmd_info->parsed()) {
        const Quiver& q = cli.cat->quiver();
        std::cout << "label " << q.label() << "\n";
        std::cout << "kind " << (q.kind() == QuiverKind::Dynkin ? "Dynkin" : "ExtendedDynkin") << "\n";
        std::cout << "diameter " << q.diameter() << "\n";
        std::cout << "coxeter period " << q.coxeter_period() << "\n";
        if (q.kind() == QuiverKind::ExtendedDynkin) {
            std::cout << "delta " << vec_to_string(q.null_root()) << "\n";
            std::cout << "epsilon " << *q.epsilon() << "\n";
            for (int t = 0; t < cli.cat->nonhomog_tube_count(); ++t) {
                std::cout << "tube " << t + 1 << " period " << cli.cat->tube_period(t) << " simples";
                for (const IVec& s : cli.cat->tube(t).simples) std::cout << " " << vec_to_string(s);
                std::cout << "\n";
            }
        }
        return 0;
    }
    if (cmd_hom->parsed()) {
        std::cout << homs.hom(cli.parse_indec(arg_x), cli.parse_indec(arg_y)) << "\n";
        return 0;
    }
    if (cmd_homtable->parsed()) {
        ModuleSum m = cli.cat->sum_from_string(arg_x), n = cli.cat->sum_from_string(arg_y);
        std::cout << "hom " << homs.hom_sum(m, n) << "\next " << homs.ext_sum(m, n) << "\n";
        return 0;
    }
    if (cmd_poset->parsed()) {
        Indec u = cli.parse_indec(arg_x), v = cli.parse_indec(arg_y);
        EnumOptions opt;
        opt.cap = cli.cap;
        if (tube_only || cli.abstract_tube) {
            if (u.kind != IndecKind::Regular) throw ParseError("--tube-only needs regular U and V");
            opt.tube_only = true;
            opt.tube_id = u.base;
        }
        DeformationPoset poset = order.deformation_poset(u, v, opt);
        bool both_regular = u.kind == IndecKind::Regular && v.kind == IndecKind::Regular && u.base == v.base;
        if (!dot_path.empty()) write_or_print(dot_path, emit_dot(tc, poset, both_regular ? &u : nullptr, both_regular ? &v : nullptr));
        if (!json_path.empty()) write_or_print(json_path, emit_poset_json(poset));
        std::cout << "elements " << poset.elements.size() << "\ncovers " << poset.covers.size() << "\n";
        for (size_t i = 0; i < poset.elements.size(); ++i)
            std::cout << "  [" << poset.codims[i] << "] " << poset.elements[i].to_string() << "\n";
        return 0;
    }
    if (cmd_extposet->parsed()) {
        Indec u = cli.parse_indec(arg_x), v = cli.parse_indec(arg_y);
        ExtensionPoset ep = tc.extension_poset(u, v);
        std::cout << "r " << ep.r << "\n";
        for (size_t i = 0; i < ep.members.size(); ++i)
            std::cout << "m=" << ep.s_set[i] << " " << ep.members[i].to_string() << "\n";
        if (!ep.members.empty()) std::cout << "cover codim " << ep.cover_codim << "\n";
        return 0;
    }
    if (cmd_eshift->parsed()) {
        Indec x = cli.parse_indec(arg_x);
        int mu = std::stoi(arg_mu) - 1;
        Int times = std::stoll(arg_n);
        std::cout << cli.cat->indec_to_string(tc.e_power(x, mu, times)) << "\n";
        return 0;
    }
    if (cmd_pshift->parsed()) {
        std::string text = load_text_file(bloc_file);
        BlocRecord b = bloc_from_json(*cli.cat, text);
        BlocRecord shifted = tc.periodic_shift(b);
        std::cout << bloc_to_json(*cli.cat, shifted, cli.cat->quiver().to_text());
        return 0;
    }
    if (cmd_classify->parsed()) {
        const Quiver& q = cli.cat->quiver();
        if (!q.one_sink_mode()) throw ParseError("classify needs a one-sink quiver");
        Calibration cal;
        if (std::filesystem::exists(calib_path)) cal = Calibration::load_file(calib_path);
        Indec u = cli.cat->projective(q.sink());
        ClassificationRun run;
        run.quiver_text = q.to_text();
        run.quiver_label = q.label();
        run.sink1 = q.sink() + 1;
        std::cout << "|Q| U V k M_k\n";
        for (int i = 0; i < q.vertex_count(); ++i) {
            for (int k = 0; k <= vrange; ++k) {
                Indec v = cli.cat->preinjective(i, k);
                EnumOptions opt;
                opt.cap = cli.cap;
                std::vector<BlocRecord> blocs = cls.classify(u, v, opt);
                for (const BlocRecord& b : blocs) {
                    auto tubes = b.M.touched_tubes();
                    bool one_tube = tubes.size() == 1 && b.M.summands().size() == b.M.part(IndecKind::Regular).summands().size() &&
                                    !cli.cat->is_homogeneous_tube(tubes[0]);
                    if (tube_only && !one_tube) continue;
                    std::string mstr = b.M.to_string(), kstr = "-";
                    if (one_tube) {
                        kstr = std::to_string(tubes[0] + 1);
                        auto it = cal.map.find({q.label(), run.sink1});
                        if (it != cal.map.end()) kstr = std::to_string(it->second.first[tubes[0]]);
                        auto pretty = calibrated_tube_string(*cli.cat, cal, q.label(), run.sink1, b.M);
                        if (pretty) mstr = *pretty;
                    }
                    std::cout << q.label() << " " << indec_pretty(*cli.cat, b.U) << " " << indec_pretty(*cli.cat, b.V)
                              << " " << kstr << " " << mstr << "\n";
                    run.blocs.push_back(b);
                }
            }
        }
        if (!json_path.empty()) write_or_print(json_path, run_to_json(*cli.cat, run));
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal invariant failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
