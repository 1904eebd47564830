// ternary-topo: homology, domination, and structure of independence
// complexes of (0,1)-ternary graphs and hypergraphs.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "ternary/cycles.hpp"
#include "ternary/domination.hpp"
#include "ternary/ears.hpp"
#include "ternary/gen.hpp"
#include "ternary/graph.hpp"
#include "ternary/homology.hpp"
#include "ternary/hypergraph.hpp"
#include "ternary/io.hpp"
#include "ternary/verify.hpp"

using nlohmann::json;
using namespace ternary;

namespace {

const char* tag_name(TernaryTag t) {
    switch (t) {
        case TernaryTag::NotTernary: return "not_ternary";
        case TernaryTag::TernaryOnly: return "ternary_only";
        default: return "zero_one_ternary";
    }
}

void print_vec(const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? " " : "") << v[i];
}

int cmd_classify(const std::string& path) {
    Graph g = read_graph_file(path);
    auto cls = classify_ternary(g);
    if (!cls) {
        std::cout << "indeterminate\n";
        return 2;
    }
    std::cout << tag_name(cls->tag) << '\n';
    if (cls->witness) {
        std::cout << "witness_cycle: ";
        print_vec(*cls->witness);
        std::cout << '\n';
    }
    return 0;
}

int cmd_homology(const std::string& path, bool no_fold, bool as_json) {
    Graph g = read_graph_file(path);
    std::vector<FoldStep> folds;
    if (!no_fold) {
        auto [h, steps] = fold_reduce(g);
        g = std::move(h);
        folds = std::move(steps);
    }
    HomologyProfile p = reduced_homology(independence_complex(g));
    if (as_json) {
        json torsion = json::array();
        for (const auto& t : p.torsion) torsion.push_back(t);
        json folds_j = json::array();
        for (const auto& f : folds) folds_j.push_back({{"removed", f.removed}, {"witness", f.witness}});
        std::cout << json{{"betti", p.betti},
                          {"torsion", torsion},
                          {"d_value", p.d_value.str()},
                          {"folds", folds_j}}
                         .dump()
                  << '\n';
        return 0;
    }
    std::cout << "betti:";
    for (long long b : p.betti) std::cout << ' ' << b;
    std::cout << "\ntorsion:";
    bool any = false;
    for (std::size_t d = 0; d < p.torsion.size(); ++d)
        for (auto t : p.torsion[d]) {
            std::cout << " dim" << d << ":Z/" << t;
            any = true;
        }
    if (!any) std::cout << " none";
    std::cout << "\nd_value: " << p.d_value.str() << '\n';
    if (!folds.empty()) std::cout << "folds_applied: " << folds.size() << '\n';
    return 0;
}

int cmd_domination(const std::string& path, bool enumerate) {
    Graph g = read_graph_file(path);
    auto [gamma, gw] = domination_number(g);
    auto [idom, iw] = independent_domination_number(g);
    std::cout << "gamma: " << gamma << "  witness:";
    for (int v : gw) std::cout << ' ' << v;
    std::cout << "\ni: " << idom << "  witness:";
    for (int v : iw) std::cout << ' ' << v;
    std::cout << '\n';
    if (g.edge_count() >= 1 && g.edge_count() <= kMaxLineDominationEdges) {
        auto [gl, ew] = line_domination_number(g);
        std::cout << "gamma_line: " << gl << "  witness:";
        for (auto [u, v] : ew) std::cout << " {" << u << "," << v << "}";
        std::cout << '\n';
    } else {
        std::cout << "gamma_line: unavailable\n";
    }
    if (enumerate) {
        auto e = enumerate_min_independent_dominating_sets(g);
        std::cout << "min_independent_dominating_sets (" << e.sets.size()
                  << (e.truncated ? ", truncated" : "") << "):\n";
        for (const auto& s : e.sets) {
            std::cout << "  ";
            print_vec(s);
            std::cout << '\n';
        }
    }
    return 0;
}

int cmd_structure(const std::string& path) {
    Graph g = read_graph_file(path);
    ResidueSpec spec(2, 3);
    if (!is_biconnected(g)) {
        std::cout << "not 2-connected; no ear decomposition\n";
        return 1;
    }
    EarDecomposition d = ear_decompose(g, spec);
    std::cout << "initial_cycle: ";
    print_vec(d.initial_cycle);
    std::cout << '\n';
    for (const auto& e : d.ears) {
        std::cout << "ear: " << e.u << " -";
        for (int x : e.internal) std::cout << ' ' << x;
        std::cout << " - " << e.v << "  (length " << e.length() << ")\n";
    }
    std::cout << "same_ear_property: " << (check_same_ear_property(d) ? "yes" : "no") << '\n';
    if (d.ears.empty()) {
        std::cout << "nice_cycles: n/a (graph is a cycle)\n";
    } else {
        auto nice = find_nice_cycles(g, spec);
        std::cout << "nice_cycles (" << nice.size() << "):\n";
        for (const auto& nc : nice) {
            std::cout << "  hubs {" << nc.hub_u << "," << nc.hub_v << "}: ";
            print_vec(nc.cycle);
            std::cout << '\n';
        }
    }
    std::cout << "admissible_pairs:\n";
    for (int u = 0; u < g.n(); ++u) {
        std::cout << "  ";
        for (int v = 0; v < g.n(); ++v)
            std::cout << (u < v && is_admissible_pair(g, u, v)   ? '1'
                          : v < u && is_admissible_pair(g, v, u) ? '1'
                                                                 : u == v ? '.' : '0');
        std::cout << '\n';
    }
    return 0;
}

int cmd_hyper(const std::string& verb, const std::string& path) {
    Hypergraph h = read_hypergraph_file(path);
    if (verb == "classify") {
        auto r = find_berge_cycle_in_residue(h, {0, 1});
        if (!r.determinate) {
            std::cout << "indeterminate\n";
            return 2;
        }
        if (!r.witness) {
            std::cout << "zero_one_ternary\n";
        } else {
            std::cout << "not_zero_one_ternary\nwitness_vertices: ";
            print_vec(r.witness->vertices);
            std::cout << "\nwitness_edges: ";
            print_vec(r.witness->edge_indices);
            std::cout << '\n';
        }
        return 0;
    }
    if (verb == "gamma") {
        auto [gm, w] = hyper_domination_number(h);
        std::cout << "gamma: " << gm << "  witness:";
        for (int v : w) std::cout << ' ' << v;
        std::cout << '\n';
        return 0;
    }
    if (verb == "reduce") {
        GraphReduction r = reduce_to_graph(h);
        std::cout << "# transforms_applied: " << r.transforms_applied
                  << "  unit_edges_dropped: " << r.unit_edges_dropped << '\n';
        write_graph(std::cout, r.graph);
        return 0;
    }
    if (verb == "check") {
        auto v = check_hyper_theorem(h);
        if (!v.determinate) {
            std::cout << "indeterminate\n";
            return 2;
        }
        std::cout << "gamma: " << v.gamma << "\nd: " << (v.d_is_star ? "*" : std::to_string(v.d))
                  << "\nverdict: " << (v.pass ? "pass" : "fail") << '\n';
        return v.pass ? 0 : 1;
    }
    std::cerr << "unknown hyper verb: " << verb << '\n';
    return 1;
}

std::map<std::string, long long> parse_params(const std::vector<std::string>& kvs) {
    std::map<std::string, long long> params;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--param expects key=value, got: " + kv);
        params[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
    }
    return params;
}

int cmd_verify(const InstanceSpec& spec, const std::vector<std::string>& check_names,
               const CampaignOptions& opts, const std::string& out_path, bool strict) {
    std::set<std::string> checks;
    if (check_names.empty()) {
        checks = all_checks();
    } else {
        std::set<std::string> known = all_checks();
        for (const auto& c : check_names) {
            if (!known.count(c)) throw CLI::ValidationError("unknown check: " + c);
            checks.insert(c);
        }
    }
    std::ostringstream buf;
    CampaignSummary s = run_campaign(spec, checks, buf, opts);
    if (out_path.empty() || out_path == "-") {
        std::cout << buf.str();
    } else {
        std::ofstream f(out_path);
        if (!f) throw CLI::ValidationError("cannot open " + out_path);
        f << buf.str();
    }
    std::cerr << "instances: " << s.instances << "  failures: " << s.failures
              << "  skips: " << s.skips << "  indeterminate: " << s.indeterminate << '\n';
    if (s.failures > 0) return 1;
    if (strict && s.indeterminate > 0) return 2;
    return 0;
}

int cmd_gen(const InstanceSpec& spec, const std::string& out_path) {
    std::vector<Instance> instances = build_instances(spec);
    std::ostream* out = &std::cout;
    std::ofstream f;
    if (!out_path.empty() && out_path != "-") {
        f.open(out_path);
        if (!f) throw CLI::ValidationError("cannot open " + out_path);
        out = &f;
    }
    for (std::size_t i = 0; i < instances.size(); ++i) {
        *out << "# instance " << i << '\n';
        if (std::holds_alternative<Graph>(instances[i]))
            write_graph(*out, std::get<Graph>(instances[i]));
        else
            write_hypergraph(*out, std::get<Hypergraph>(instances[i]));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"independence-complex homology and domination toolkit"};
    app.require_subcommand(1);

    std::string path;
    bool no_fold = false, as_json = false, enumerate = false, strict = false;
    std::string hyper_verb, out_path;
    InstanceSpec spec;
    std::vector<std::string> param_kvs, check_names;
    CampaignOptions opts;

    auto* classify = app.add_subcommand("classify", "cycle-residue class of a graph");
    classify->add_option("graph", path, "graph file")->required();

    auto* homology = app.add_subcommand("homology", "reduced homology of the independence complex");
    homology->add_option("graph", path, "graph file")->required();
    homology->add_flag("--no-fold", no_fold, "skip fold preprocessing");
    homology->add_flag("--json", as_json, "JSON output");

    auto* domination = app.add_subcommand("domination", "gamma, i and edge domination");
    domination->add_option("graph", path, "graph file")->required();
    domination->add_flag("--enumerate", enumerate, "list all minimum independent dominating sets");

    auto* structure = app.add_subcommand("structure", "ear decomposition, nice cycles, admissible pairs");
    structure->add_option("graph", path, "graph file")->required();

    auto* hyper = app.add_subcommand("hyper", "hypergraph operations");
    hyper->add_option("verb", hyper_verb, "classify|gamma|reduce|check")->required();
    hyper->add_option("hypergraph", path, "hypergraph file")->required();

    auto* verify = app.add_subcommand("verify", "run a verification campaign");
    verify->add_option("--family", spec.family, "instance family")->required();
    verify->add_option("--param", param_kvs, "family parameter key=value (repeatable)");
    verify->add_option("--seed", spec.seed, "base seed");
    verify->add_option("--path", spec.path, "input file for family file/hyperfile");
    verify->add_option("--checks", check_names, "checks to run (default: all)")->delimiter(',');
    verify->add_option("--jobs", opts.jobs, "parallel workers");
    verify->add_option("--out", out_path, "JSONL output file (default: stdout)");
    verify->add_flag("--strict", strict, "exit 2 when any verdict is indeterminate");
    verify->add_flag("--timings", opts.timings, "include per-instance wall clock (breaks byte determinism)");

    auto* gen = app.add_subcommand("gen", "emit instances in the text format");
    gen->add_option("--family", spec.family, "instance family")->required();
    gen->add_option("--param", param_kvs, "family parameter key=value (repeatable)");
    gen->add_option("--seed", spec.seed, "base seed");
    gen->add_option("--path", spec.path, "input file for family file/hyperfile");
    gen->add_option("--out", out_path, "output file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return cmd_classify(path);
        if (homology->parsed()) return cmd_homology(path, no_fold, as_json);
        if (domination->parsed()) return cmd_domination(path, enumerate);
        if (structure->parsed()) return cmd_structure(path);
        if (hyper->parsed()) return cmd_hyper(hyper_verb, path);
        if (verify->parsed() || gen->parsed()) {
            spec.params = parse_params(param_kvs);
            if (verify->parsed()) return cmd_verify(spec, check_names, opts, out_path, strict);
            return cmd_gen(spec, out_path);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
