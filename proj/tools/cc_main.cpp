#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>

#include "cc/candidates.hpp"
#include "cc/catalog.hpp"
#include "cc/io.hpp"
#include "cc/isomorph.hpp"
#include "cc/planar.hpp"
#include "cc/rigidity.hpp"
#include "cc/spectral.hpp"
#include "cc/wl.hpp"

namespace {

using namespace cc;

SimpleGraph load_graph(const std::string& spec) {
    if (spec.rfind("catalog:", 0) == 0) return catalog_graph(spec.substr(8));
    std::string text = read_file(spec);
    if (!text.empty() && text[0] == '{') {
        // rainbow/color-graph JSON is accepted where a graph is expected only
        // by commands that handle it explicitly
        throw validation_error("expected an edge list file; got JSON (use the rainbow input paths)");
    }
    return read_edge_list(text);
}

ColorGraph load_rainbow(const std::string& spec) {
    std::string text = read_file(spec);
    return color_graph_from_json(text);
}

PermGroup load_group(const std::string& spec) {
    if (spec.rfind("catalog:", 0) == 0) return catalog_group(spec.substr(8));
    return group_from_json(read_file(spec));
}

// graph argument that may also be a ColorGraph JSON file or a catalog group
ColorGraph load_closure(const std::string& spec) {
    if (spec.rfind("catalog:", 0) == 0) {
        std::string name = spec.substr(8);
        if (name.find('/') != std::string::npos) return inv(catalog_group(name));
        return wl_close_graph(catalog_graph(name));
    }
    std::string text = read_file(spec);
    if (!text.empty() && text[0] == '{') return color_graph_from_json(text);
    return wl_close_graph(read_edge_list(text));
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

int cmd_wl(const std::string& input, const std::string& format) {
    ColorGraph x;
    if (input.rfind("catalog:", 0) == 0) {
        x = wl_close_graph(catalog_graph(input.substr(8)));
    } else {
        std::string text = read_file(input);
        if (!text.empty() && text[0] == '{')
            x = wl_close_rainbow(color_graph_from_json(text));
        else
            x = wl_close_graph(read_edge_list(text));
    }
    if (format == "json") {
        std::cout << color_graph_to_json(x) << "\n";
    } else {
        std::cout << "n\t" << x.n() << "\nrank\t" << x.rank() << "\n";
        std::cout << "fibers\t" << x.fiber_count() << "\n";
    }
    return 0;
}

int cmd_inv(const std::string& input, const std::string& format) {
    ColorGraph x = inv(load_group(input));
    if (format == "json")
        std::cout << color_graph_to_json(x) << "\n";
    else
        std::cout << "n\t" << x.n() << "\nrank\t" << x.rank() << "\n";
    return 0;
}

int cmd_tensor(const std::string& input) {
    ColorGraph x = load_closure(input);
    std::cout << tensor_to_tsv(tensor(x, true));
    return 0;
}

int cmd_aut(const std::string& input, const std::string& format) {
    ColorGraph x = load_closure(input);
    PermGroup g = aut_group(x);
    long long order = group_order(g);
    if (format == "json") {
        std::cout << group_to_json(g) << "\n";
    } else {
        std::cout << "order\t" << order << "\ngenerators\t" << g.generators.size() << "\n";
    }
    return 0;
}

int cmd_schurian(const std::string& input) {
    ColorGraph x = load_closure(input);
    std::cout << "schurian\t" << (is_schurian(x) ? "true" : "false") << "\n";
    return 0;
}

int cmd_iso(const std::string& a, const std::string& b) {
    ColorGraph x = load_closure(a), y = load_closure(b);
    auto f = color_isomorphic(x, y);
    if (!f) {
        std::cout << "isomorphic\tfalse\n";
        return 0;
    }
    std::cout << "isomorphic\ttrue\nwitness\t";
    nlohmann::json j = *f;
    std::cout << j.dump() << "\n";
    return 0;
}

struct S2Result {
    SimpleGraph graph;
    ColorGraph x;
    Projection proj;
    SphericalRep rep;
    RainbowRho rho;
};

S2Result build_s2(const std::string& input, const std::string& matrix,
                  const std::string& eigenvalue) {
    S2Result r;
    r.graph = load_graph(input);
    r.x = wl_close_graph(r.graph);
    MatrixKind kind = matrix_kind_from_string(matrix);
    EigenvalueChoice choice = EigenvalueChoice::parse(eigenvalue);
    if (choice.mode == EigenvalueChoice::Mode::automatic) {
        // first multiplicity-3 eigenvalue producing an injective faithful rep
        std::string last_error = "no multiplicity-3 eigenvalue";
        for (double lambda : multiplicity3_eigenvalues(r.graph, kind)) {
            EigenvalueChoice c;
            c.mode = EigenvalueChoice::Mode::value;
            c.value = lambda;
            try {
                r.proj = projection(r.graph, r.x, kind, c);
                r.rep = build_rep(r.x, r.proj);
                r.rho = rainbow_rho(r.x, r.rep);
                if (!is_faithful(r.x, r.rho)) {
                    last_error = "representation at lambda=" + fmt_double(lambda) + " not faithful";
                    continue;
                }
                return r;
            } catch (const validation_error& e) {
                last_error = e.what();
            }
        }
        throw validation_error("auto eigenvalue search failed: " + last_error);
    }
    r.proj = projection(r.graph, r.x, kind, choice);
    r.rep = build_rep(r.x, r.proj);
    r.rho = rainbow_rho(r.x, r.rep);
    return r;
}

int cmd_s2(const std::string& input, const std::string& matrix, const std::string& eigenvalue,
           const std::string& format) {
    S2Result r = build_s2(input, matrix, eigenvalue);
    if (format == "json") {
        std::cout << rep_to_json(r.rep) << "\n";
    } else {
        std::cout << "matrix\t" << to_string(r.rep.kind) << "\n";
        std::cout << "lambda\t" << fmt_double(r.rep.lambda) << "\n";
        std::cout << "W\t" << r.rep.W.size() << "\n";
        std::cout << "rank\t" << r.x.rank() << "\n";
        std::cout << "S_rho\t" << r.rho.rainbow.rank() << "\n";
        std::cout << "faithful\t" << (is_faithful(r.x, r.rho) ? "true" : "false") << "\n";
        std::cout << "antipodal_classes\t" << r.rep.antipodal.num_classes() << "\n";
    }
    return 0;
}

int cmd_rigid(const std::string& input, const std::string& matrix, const std::string& eigenvalue,
              const std::string& format) {
    S2Result r = build_s2(input, matrix, eigenvalue);
    IntersectionTensor t = tensor(r.x);
    RigidityContext ctx(r.x, t, r.rep);
    RigidityScan scan = find_rigid_color(ctx);
    if (format == "json") {
        std::cout << certificate_to_json(scan.certificate) << "\n";
    } else if (scan.color) {
        std::cout << "rigid_color\t" << *scan.color << "\nclosure_steps\t"
                  << scan.certificate.trace.size() << "\nfinal_size\t"
                  << scan.certificate.final_size << "\n";
    } else {
        std::cout << "rigid_color\tnone\n";
    }
    return 0;
}

int cmd_planar(const std::string& input) {
    SimpleGraph g = load_graph(input);
    bool planar = is_planar(g);
    std::cout << "planar\t" << (planar ? "true" : "false") << "\n";
    if (!planar) {
        auto w = kuratowski_witness(g);
        std::cout << "witness\t" << (w->kind == KuratowskiWitness::Kind::k5 ? "K5" : "K3,3")
                  << "\twith\t" << w->edges.size() << "\tedges\n";
    }
    return 0;
}

int cmd_kappa(const std::string& input) {
    SimpleGraph g = load_graph(input);
    std::cout << "kappa\t" << vertex_connectivity(g) << "\n";
    return 0;
}

int cmd_search(const std::string& input, bool no_wl, bool no_phi, const std::string& emit_dir) {
    ColorGraph base = input.rfind("catalog:", 0) == 0 && input.find('/') != std::string::npos
                          ? inv(catalog_group(input.substr(8)))
                          : load_closure(input);
    CandidateSet cs = enumerate_candidates(base);
    if (!no_phi) phi_reduce(cs, algebraic_aut_group(base));
    if (!no_wl) wl_filter(cs);
    std::vector<PolyhedralWitness> witnesses = polyhedral_screen(cs);
    cs.counts.polyhedral = static_cast<long long>(witnesses.size());

    std::cout << "raw\t" << cs.counts.raw << "\n";
    std::cout << "edge_bounded\t" << cs.counts.edge_bounded << "\n";
    if (cs.counts.phi_reduced >= 0) std::cout << "phi_reduced\t" << cs.counts.phi_reduced << "\n";
    if (cs.counts.wl_exact >= 0) std::cout << "wl_exact\t" << cs.counts.wl_exact << "\n";
    std::cout << "polyhedral\t" << cs.counts.polyhedral << "\n";

    if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        std::ostringstream counts;
        counts << "stage\tcount\nraw\t" << cs.counts.raw << "\nedge_bounded\t"
               << cs.counts.edge_bounded << "\nphi_reduced\t" << cs.counts.phi_reduced
               << "\nwl_exact\t" << cs.counts.wl_exact << "\npolyhedral\t" << cs.counts.polyhedral
               << "\n";
        write_file(emit_dir + "/counts.tsv", counts.str());
        int idx = 0;
        for (const auto& w : witnesses)
            write_file(emit_dir + "/witness_" + std::to_string(idx++) + ".edges",
                       write_edge_list(w.graph));
    }
    return 0;
}

int cmd_tables(bool with_search) {
    std::cout << "# solids: name\tn\t|S|\t|S_rho|\tmatrix\tlambda\n";
    for (const SolidEntry& e : catalog_solids()) {
        ColorGraph x = wl_close_graph(e.graph);
        EigenvalueChoice c;
        c.mode = EigenvalueChoice::Mode::value;
        c.value = e.lambda;
        Projection p = projection(e.graph, x, e.kind, c);
        SphericalRep rep = build_rep(x, p);
        RainbowRho rho = rainbow_rho(x, rep);
        std::cout << e.name << '\t' << e.graph.n() << '\t' << x.rank() << '\t'
                  << rho.rainbow.rank() << '\t' << to_string(e.kind) << '\t'
                  << fmt_double(e.lambda) << "\n";
    }
    std::cout << "# groups: spec\tdegree\trank\n";
    const char* specs[] = {"alt4/orbits=6",           "alt4/orbits=4",
                           "alt4/orbits=6+4",         "sym4II/orbits=8",
                           "sym4II/orbits=12+8",      "alt5/orbits=30",
                           "alt5/orbits=20",          "alt5/orbits=30+20+12",
                           "sym4I/orbits=6+4",        "sym4II/orbits=12+6",
                           "alt5/orbits=20+12"};
    for (const char* spec : specs) {
        PermGroup g = catalog_group(spec);
        ColorGraph x = inv(g);
        std::cout << spec << '\t' << x.n() << '\t' << x.rank() << "\n";
    }
    if (with_search) {
        std::cout << "# search: spec\t|X'|\t|X|\tpolyhedral\n";
        const char* rows[] = {"alt4/orbits=6+4", "alt5/orbits=30", "alt5/orbits=20",
                              "sym4II/orbits=12+6", "alt5/orbits=20+12", "sym4I/orbits=6+4"};
        for (const char* spec : rows) {
            ColorGraph base = inv(catalog_group(spec));
            CandidateSet cs = enumerate_candidates(base);
            phi_reduce(cs, algebraic_aut_group(base));
            wl_filter(cs);
            long long poly = static_cast<long long>(polyhedral_screen(cs).size());
            std::cout << spec << '\t' << cs.counts.edge_bounded << '\t' << cs.counts.wl_exact
                      << '\t' << poly << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coherent configurations, WL closure and S2-representations"};
    app.require_subcommand(1);
    app.fallthrough(); // let subcommands hand --format back to the parent
    std::string format = "tsv";
    app.add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

    std::string input, second, matrix = "L", eigenvalue = "auto", emit_dir;
    bool no_wl = false, no_phi = false, with_search = false;

    auto* wl = app.add_subcommand("wl", "coherent closure of a graph or rainbow");
    wl->add_option("input", input)->required();
    auto* invc = app.add_subcommand("inv", "orbit configuration of a permutation group");
    invc->add_option("group", input)->required();
    auto* tensorc = app.add_subcommand("tensor", "intersection numbers as TSV");
    tensorc->add_option("input", input)->required();
    auto* aut = app.add_subcommand("aut", "combinatorial automorphism group");
    aut->add_option("input", input)->required();
    auto* schurian = app.add_subcommand("schurian", "test WL(X) = inv(aut(X))");
    schurian->add_option("input", input)->required();
    auto* iso = app.add_subcommand("iso", "color isomorphism of two configurations");
    iso->add_option("first", input)->required();
    iso->add_option("second", second)->required();
    auto* s2 = app.add_subcommand("s2", "S2-representation summary");
    s2->add_option("input", input)->required();
    s2->add_option("--matrix", matrix, "L or A");
    s2->add_option("--eigenvalue", eigenvalue, "auto, fiedler, or a decimal");
    auto* rigid = app.add_subcommand("rigid", "rho-rigidity scan with certificate");
    rigid->add_option("input", input)->required();
    rigid->add_option("--matrix", matrix, "L or A");
    rigid->add_option("--eigenvalue", eigenvalue, "auto, fiedler, or a decimal");
    auto* planar = app.add_subcommand("planar", "planarity with Kuratowski witness");
    planar->add_option("input", input)->required();
    auto* kappa = app.add_subcommand("kappa", "vertex connectivity");
    kappa->add_option("input", input)->required();
    auto* search = app.add_subcommand("search", "candidate edge-relation pipeline");
    search->add_option("input", input)->required();
    search->add_flag("--no-wl-filter", no_wl);
    search->add_flag("--no-phi-reduce", no_phi);
    search->add_option("--emit-witnesses", emit_dir);
    auto* tables = app.add_subcommand("tables", "regenerate catalog tables");
    tables->add_flag("--with-search", with_search);

    CLI11_PARSE(app, argc, argv);

    try {
        if (wl->parsed()) return cmd_wl(input, format);
        if (invc->parsed()) return cmd_inv(input, format);
        if (tensorc->parsed()) return cmd_tensor(input);
        if (aut->parsed()) return cmd_aut(input, format);
        if (schurian->parsed()) return cmd_schurian(input);
        if (iso->parsed()) return cmd_iso(input, second);
        if (s2->parsed()) return cmd_s2(input, matrix, eigenvalue, format);
        if (rigid->parsed()) return cmd_rigid(input, matrix, eigenvalue, format);
        if (planar->parsed()) return cmd_planar(input);
        if (kappa->parsed()) return cmd_kappa(input);
        if (search->parsed()) return cmd_search(input, no_wl, no_phi, emit_dir);
        if (tables->parsed()) return cmd_tables(with_search);
    } catch (const cc::bound_error& e) {
        std::cerr << "resource bound: " << e.what() << "\n";
        return 3;
    } catch (const cc::validation_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
