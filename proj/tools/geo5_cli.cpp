// Command-line front end for the five-dimensional geometry engine.
//
// Verbs:
//   classify <file-or-label> [--json] [--trace]   identify a solvable algebra
//   atlas list [--json]                           catalog of model geometries
//   atlas show <label> [--json]                   one catalog entry in detail
//   isotropy list                                 stabilizer poset nodes
//   isotropy contains <A> <B>                     poset order relation
//   group check <label> [--step h]                bracket-vs-commutator check
//   lattice unit-check <poly>                     totally-real unit cubic gate
//   lattice dirichlet <poly>                      unit-lattice construction
//   lattice sol-search --target <json> [--bound]  integer model search
//   curvature <file-or-label>                     exact curvature report
//
// Exit codes: 0 success (including negative answers such as "false" or
// "none found"), 1 domain errors (including NotInKey, which also prints
// the invariant fingerprint), 2 parse/usage errors.  Output is
// deterministic; no operation consumes randomness.

#include <geo5/atlas.hpp>
#include <geo5/classify.hpp>
#include <geo5/curvature.hpp>
#include <geo5/groups.hpp>
#include <geo5/isotropy.hpp>
#include <geo5/json_io.hpp>
#include <geo5/lattices.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace geo5;

// A positional argument is a JSON file if it exists on disk; anything
// that merely looks like a path is treated as a failed file reference
// rather than silently falling back to a catalog lookup.
LieAlgebra resolve_algebra(const std::string& arg) {
    namespace fs = std::filesystem;
    if (fs::exists(arg)) return load_algebra(arg);
    if (arg.find('/') != std::string::npos || arg.ends_with(".json"))
        throw ParseError("cannot open file: " + arg);
    return build_algebra(arg);  // unknown labels raise ParseError here
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

void print_classification(const Classification& c, bool json, bool with_fingerprint) {
    if (json) {
        Json doc = classification_to_json(c);
        if (!with_fingerprint) doc.erase("fingerprint");
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::cout << "label:  " << c.label << "\n";
    std::cout << "atlas:  " << c.atlas_id << "\n";
    std::cout << "status: " << c.status << "\n";
    if (c.params) {
        std::cout << "params:";
        for (std::size_t i = 0; i < c.params->names.size(); ++i) {
            std::cout << " " << c.params->names[i] << "=";
            if (!c.params->numeric)
                std::cout << c.params->exact[i].str();
            else
                std::cout << c.params->approx[i];
        }
        std::cout << (c.params->numeric ? "  (numeric)" : "  (exact)") << "\n";
    }
    if (!c.notes.empty()) std::cout << "notes:  " << c.notes << "\n";
    std::cout << "trace:\n";
    for (const TraceStep& s : c.trace)
        std::cout << "  " << s.question << " -> " << s.answer << "\n";
    if (with_fingerprint) std::cout << "fingerprint: " << fingerprint_json(c.fingerprint) << "\n";
}

void cmd_classify(const std::string& target, bool json, bool trace) {
    const LieAlgebra L = resolve_algebra(target);
    const Classification c = classify_solvable5(L);
    print_classification(c, json, trace);
}

Json entry_to_json(const AtlasEntry& e) {
    Json doc;
    doc["id"] = e.id;
    doc["name"] = e.name;
    doc["construction"] = e.construction;
    doc["category"] = e.category;
    doc["is_family"] = e.is_family;
    doc["stabilizer"] = isotropy::name(e.stabilizer);
    doc["is_lie_group"] = e.is_lie_group;
    doc["has_constructor"] = e.has_constructor;
    doc["maximal"] = e.maximal;
    if (!e.transitive_group.empty()) doc["transitive_group"] = e.transitive_group;
    if (!e.params.empty()) {
        Json ps = Json::array();
        for (const ParamSpec& p : e.params)
            ps.push_back(Json{{"name", p.name}, {"doc", p.doc}, {"default", p.default_value.str()}});
        doc["params"] = ps;
    }
    if (!e.basis_doc.empty()) doc["basis"] = e.basis_doc;
    if (!e.notes.empty()) doc["notes"] = e.notes;
    return doc;
}

void cmd_atlas_list(bool json) {
    const std::vector<AtlasEntry>& all = atlas();
    if (json) {
        Json arr = Json::array();
        for (const AtlasEntry& e : all) arr.push_back(entry_to_json(e));
        std::cout << arr.dump(2) << "\n";
        return;
    }
    std::size_t families = 0;
    for (const AtlasEntry& e : all) {
        std::cout << e.id;
        for (std::size_t pad = e.id.size(); pad < 16; ++pad) std::cout << ' ';
        std::cout << "cat " << e.category << "  " << (e.is_family ? "family    " : "individual")
                  << "  " << e.name << "\n";
        if (e.is_family) ++families;
    }
    std::cout << all.size() - families << " individual geometries + " << families
              << " families = " << all.size() << " entries\n";
}

void cmd_atlas_show(const std::string& label, bool json) {
    const AtlasEntry& e = atlas_entry(label);
    if (json) {
        Json doc = entry_to_json(e);
        if (e.has_constructor) doc["algebra"] = algebra_to_json(build_algebra(e.id));
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::cout << "id:           " << e.id << "\n";
    std::cout << "name:         " << e.name << "\n";
    std::cout << "construction: " << e.construction << "\n";
    std::cout << "category:     " << e.category << "\n";
    std::cout << "family:       " << yesno(e.is_family) << "\n";
    std::cout << "stabilizer:   " << isotropy::name(e.stabilizer) << "\n";
    std::cout << "lie group:    " << yesno(e.is_lie_group) << "\n";
    if (!e.transitive_group.empty()) std::cout << "acts via:     " << e.transitive_group << "\n";
    for (const ParamSpec& p : e.params)
        std::cout << "param:        " << p.name << " (default " << p.default_value.str() << ") "
                  << p.doc << "\n";
    if (!e.basis_doc.empty()) std::cout << "basis:        " << e.basis_doc << "\n";
    if (!e.notes.empty()) std::cout << "notes:        " << e.notes << "\n";
    if (e.has_constructor) {
        const LieAlgebra L = build_algebra(e.id);
        std::cout << "brackets:\n";
        const Json doc = algebra_to_json(L);
        for (const Json& b : doc["brackets"]) {
            const std::size_t i = b["i"].get<std::size_t>();
            const std::size_t j = b["j"].get<std::size_t>();
            std::cout << "  [e" << i + 1 << ", e" << j + 1 << "] =";
            bool first = true;
            for (const Json& t : b["terms"]) {
                const std::string q = t["q"].get<std::string>();
                std::cout << (first ? " " : " + ") << (q == "1" ? "" : q + "*") << "e"
                          << t["k"].get<std::size_t>() + 1;
                first = false;
            }
            std::cout << "\n";
        }
    }
}

void cmd_isotropy_list() {
    for (const Stabilizer& s : isotropy::nodes()) std::cout << isotropy::name(s) << "\n";
}

void cmd_isotropy_contains(const std::string& a, const std::string& b) {
    const Stabilizer sa = isotropy::parse(a);
    const Stabilizer sb = isotropy::parse(b);
    std::cout << (isotropy::contains(sa, sb) ? "true" : "false") << "\n";
}

int cmd_group_check(const std::string& label, double h) {
    const GroupModel& m = group_model(label);
    const double dev = commutator_derivative_check(m, m.algebra, h);
    const bool pass = dev < 1e-6;
    std::cout << "model:     " << m.id << " (" << m.name << ")\n";
    std::cout << "law:       " << (m.exact ? "exact rational" : "floating point") << "\n";
    std::cout << "step:      " << h << "\n";
    std::cout << "deviation: " << dev << "\n";
    std::cout << (pass ? "PASS" : "FAIL")
              << ": commutator derivative vs structure constants (tolerance 1e-6)\n";
    return pass ? 0 : 1;
}

int cmd_lattice_unit_check(const std::string& text) {
    const UnitCubicCheck chk = unit_cubic_check(parse_int_poly(text));
    std::cout << "polynomial: " << chk.p.str() << "\n";
    if (chk.accepted) {
        std::cout << "accepted: totally real unit cubic\n";
        return 0;
    }
    std::cout << "rejected:\n";
    for (const std::string& f : chk.failures) std::cout << "  - " << f << "\n";
    return 1;
}

void cmd_lattice_dirichlet(const std::string& text) {
    const LatticeReport rep = dirichlet_lattice(parse_int_poly(text));
    Json doc;
    doc["polynomial"] = rep.p.str();
    Json comp = Json::array();
    for (std::size_t i = 0; i < 3; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < 3; ++j) row.push_back(rep.companion.at(i, j).str());
        comp.push_back(row);
    }
    doc["companion"] = comp;
    doc["det"] = rep.det.str();
    doc["eigenvalues"] = rep.eigenvalues;
    doc["eigenvalue_product"] = rep.eigenvalue_product;
    doc["log_moduli"] = rep.log_moduli;
    doc["log_sum"] = rep.log_sum;
    doc["relation_residual"] = rep.relation_residual;
    doc["condition_estimate"] = rep.condition_estimate;
    doc["unit_power"] = rep.unit_power;
    Json gens = Json::array();
    for (const LatticeGenerator& g : rep.generators) {
        Json gj;
        gj["kind"] = g.kind;
        gj["translation"] = g.translation;
        gj["log_torus"] = g.log_torus;
        gens.push_back(gj);
    }
    doc["generators"] = gens;
    doc["min_word_displacement"] = rep.min_word_displacement;
    doc["discreteness_threshold"] = rep.discreteness_threshold;
    doc["discreteness_proxy"] = rep.discreteness_proxy;
    std::cout << doc.dump(2) << "\n";
}

void cmd_lattice_sol_search(const std::string& target_json, int bound) {
    Json arr;
    try {
        arr = Json::parse(target_json);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid target JSON: ") + e.what());
    }
    if (!arr.is_array()) throw ParseError("target must be a JSON array of numbers");
    std::vector<double> target;
    for (const Json& x : arr) {
        if (!x.is_number()) throw ParseError("target must be a JSON array of numbers");
        target.push_back(x.get<double>());
    }
    const SolSearchResult res = sol_family_model_check(target, bound);
    Json doc;
    doc["found"] = res.found;
    doc["bound"] = res.bound;
    if (res.found) {
        doc["witness"] = res.witness;
        doc["polynomial"] = res.polynomial.str();
    }
    std::cout << doc.dump(2) << "\n";
}

void cmd_curvature(const std::string& target) {
    const LieAlgebra L = resolve_algebra(target);
    std::cout << curvature_to_json(L).dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification and geometry toolkit for 5-dimensional model geometries"};
    app.require_subcommand(1);

    std::string classify_target;
    bool classify_json = false, classify_trace = false;
    CLI::App* classify = app.add_subcommand("classify", "identify a solvable Lie algebra");
    classify->add_option("target", classify_target, "JSON file or atlas label")->required();
    classify->add_flag("--json", classify_json, "emit a JSON report");
    classify->add_flag("--trace", classify_trace, "include the invariant fingerprint");

    CLI::App* atlas_cmd = app.add_subcommand("atlas", "catalog of maximal model geometries");
    atlas_cmd->require_subcommand(1);
    bool atlas_list_json = false;
    CLI::App* atlas_list = atlas_cmd->add_subcommand("list", "list every catalog entry");
    atlas_list->add_flag("--json", atlas_list_json, "emit JSON");
    std::string atlas_show_label;
    bool atlas_show_json = false;
    CLI::App* atlas_show = atlas_cmd->add_subcommand("show", "one entry in detail");
    atlas_show->add_option("label", atlas_show_label, "catalog id or display name")->required();
    atlas_show->add_flag("--json", atlas_show_json, "emit JSON");

    CLI::App* iso = app.add_subcommand("isotropy", "stabilizer containment poset");
    iso->require_subcommand(1);
    CLI::App* iso_list = iso->add_subcommand("list", "list the poset nodes");
    std::string iso_a, iso_b;
    CLI::App* iso_contains = iso->add_subcommand("contains", "does A contain B?");
    iso_contains->add_option("A", iso_a, "outer stabilizer")->required();
    iso_contains->add_option("B", iso_b, "inner stabilizer")->required();

    CLI::App* group = app.add_subcommand("group", "explicit group-law models");
    group->require_subcommand(1);
    std::string group_label;
    double group_step = 1e-4;
    CLI::App* group_check = group->add_subcommand(
        "check", "compare the commutator second derivative with the structure constants");
    group_check->add_option("label", group_label, "model id or atlas label")->required();
    group_check->add_option("--step", group_step, "finite-difference step (default 1e-4)");

    CLI::App* lattice = app.add_subcommand("lattice", "lattice existence tooling");
    lattice->require_subcommand(1);
    std::string unit_poly;
    CLI::App* unit_check = lattice->add_subcommand("unit-check", "totally-real unit cubic gate");
    unit_check->add_option("poly", unit_poly, "integer cubic, e.g. \"x^3+x^2-2x-1\"")->required();
    std::string dirichlet_poly;
    CLI::App* dirichlet = lattice->add_subcommand("dirichlet", "build the unit lattice of a cubic");
    dirichlet->add_option("poly", dirichlet_poly, "totally real unit cubic")->required();
    std::string sol_target;
    int sol_bound = 10;
    CLI::App* sol_search = lattice->add_subcommand(
        "sol-search", "search integer characteristic polynomials matching a weight target");
    sol_search->add_option("--target", sol_target, "normalized log-weights, JSON array")->required();
    sol_search->add_option("--bound", sol_bound, "coefficient bound 1..30 (default 10)");

    std::string curv_target;
    CLI::App* curv = app.add_subcommand("curvature", "exact curvature report (JSON)");
    curv->add_option("target", curv_target, "JSON file or atlas label")->required();

    int rc = 0;
    classify->callback([&] { cmd_classify(classify_target, classify_json, classify_trace); });
    atlas_list->callback([&] { cmd_atlas_list(atlas_list_json); });
    atlas_show->callback([&] { cmd_atlas_show(atlas_show_label, atlas_show_json); });
    iso_list->callback([&] { cmd_isotropy_list(); });
    iso_contains->callback([&] { cmd_isotropy_contains(iso_a, iso_b); });
    group_check->callback([&] { rc = cmd_group_check(group_label, group_step); });
    unit_check->callback([&] { rc = cmd_lattice_unit_check(unit_poly); });
    dirichlet->callback([&] { cmd_lattice_dirichlet(dirichlet_poly); });
    sol_search->callback([&] { cmd_lattice_sol_search(sol_target, sol_bound); });
    curv->callback([&] { cmd_curvature(curv_target); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const geo5::NotInKeyError& e) {
        std::cerr << e.what() << "\n" << e.fingerprint_json << "\n";
        return 1;
    } catch (const geo5::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const geo5::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
