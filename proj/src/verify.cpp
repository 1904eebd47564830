#include "ternary/verify.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <random>
#include <json.hpp>
#include <ostream>
#include <stdexcept>

#include "ternary/cycles.hpp"
#include "ternary/domination.hpp"
#include "ternary/ears.hpp"
#include "ternary/gen.hpp"
#include "ternary/homology.hpp"
#include "ternary/io.hpp"

namespace ternary {

using nlohmann::json;

namespace {

json graph_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return json{{"n", g.n()}, {"edges", edges}};
}

json hyper_json(const Hypergraph& h) {
    json edges = json::array();
    for (const auto& e : h.edges) edges.push_back(e);
    return json{{"n", h.n}, {"edges", edges}};
}

const char* tag_name(TernaryTag t) {
    switch (t) {
        case TernaryTag::NotTernary: return "not_ternary";
        case TernaryTag::TernaryOnly: return "ternary_only";
        default: return "zero_one_ternary";
    }
}

// verdict bookkeeping: one entry per requested check
struct Verdicts {
    json checks = json::object();
    json witnesses = json::object();
    CampaignSummary& tally;
    explicit Verdicts(CampaignSummary& t) : tally(t) {}

    void pass(const std::string& c) { checks[c] = "pass"; }
    void fail(const std::string& c, json witness) {
        checks[c] = "fail";
        witnesses[c] = std::move(witness);
        ++tally.failures;
    }
    void skip(const std::string& c, const std::string& why) {
        checks[c] = "skip";
        witnesses[c] = json{{"hypothesis_violated", why}};
        ++tally.skips;
    }
    void indet(const std::string& c, const std::string& why) {
        checks[c] = "indeterminate";
        witnesses[c] = json{{"reason", why}};
        ++tally.indeterminate;
    }
};

constexpr int kHomologyVertexLimit = 26;

struct GraphMetrics {
    std::optional<TernaryTag> tag;
    std::optional<int> gamma, idom, gamma_line;
    std::optional<DValue> d;
};

GraphMetrics graph_metrics(const Graph& g) {
    GraphMetrics m;
    auto cls = classify_ternary(g);
    if (cls) m.tag = cls->tag;
    if (g.n() >= 1 && g.n() <= kMaxDominationVertices) {
        m.gamma = domination_number(g).first;
        m.idom = independent_domination_number(g).first;
    }
    if (g.edge_count() >= 1 && g.edge_count() <= kMaxLineDominationEdges)
        m.gamma_line = line_domination_number(g).first;
    try {
        Graph folded = fold_reduce(g).first;
        if (folded.n() <= kHomologyVertexLimit)
            m.d = reduced_homology(independence_complex(folded)).d_value;
    } catch (const std::runtime_error&) {
        // face budget exceeded; d stays unavailable
    }
    return m;
}

void eval_graph_checks(const Graph& g, const GraphMetrics& m,
                       const std::set<std::string>& checks, Verdicts& v,
                       const CampaignOptions& opts) {
    const bool zot = m.tag && *m.tag == TernaryTag::ZeroOneTernary;

    if (checks.count("prop12")) {
        auto all = enumerate_cycles(g);
        if (!m.tag || all.truncated) {
            v.indet("prop12", "cycle enumeration truncated");
        } else {
            bool no_bad_cycle = true;
            Cycle bad;
            for (const auto& c : all.cycles) {
                int r = static_cast<int>(c.size()) % 3;
                if (r == 0 || r == 1) {
                    no_bad_cycle = false;
                    bad = c;
                    break;
                }
            }
            if (no_bad_cycle == zot)
                v.pass("prop12");
            else
                v.fail("prop12", json{{"graph", graph_json(g)},
                                      {"induced_tag", tag_name(*m.tag)},
                                      {"cycle", bad}});
        }
    }

    if (checks.count("thm13")) {
        if (!m.tag)
            v.indet("thm13", "classification indeterminate");
        else if (!zot)
            v.skip("thm13", "not (0,1)-ternary");
        else if (!m.gamma || !m.idom || !m.gamma_line || !m.d) {
            if (g.edge_count() == 0 && m.d && m.gamma && m.idom) {
                // edgeless: I(G) is a full simplex, gamma(L) undefined
                v.skip("thm13", "edgeless graph, gamma(L) undefined");
            } else
                v.indet("thm13", "metric unavailable within budget");
        } else {
            bool chain = m.d->kind == DValue::Sphere && m.d->d + 1 == *m.idom &&
                         *m.idom == *m.gamma && *m.gamma == *m.gamma_line;
            bool ok = m.d->kind == DValue::HomologyTrivial || chain;
            if (ok)
                v.pass("thm13");
            else
                v.fail("thm13", json{{"graph", graph_json(g)},
                                     {"d", m.d->str()},
                                     {"gamma", *m.gamma},
                                     {"i", *m.idom},
                                     {"gamma_line", *m.gamma_line}});
        }
    }

    if (checks.count("thm31")) {
        if (!m.tag)
            v.indet("thm31", "classification indeterminate");
        else if (!zot || !is_connected(g) || g.n() < 2)
            v.skip("thm31", "needs connected (0,1)-ternary, n >= 2");
        else if (g.n() > kMaxDominationVertices)
            v.indet("thm31", "exactness bound");
        else if (auto w = check_vertex_monotone(g))
            v.pass("thm31");
        else
            v.fail("thm31", json{{"graph", graph_json(g)}, {"note", "no monotone vertex"}});
    }

    if (checks.count("thm32")) {
        if (!m.tag)
            v.indet("thm32", "classification indeterminate");
        else if (!zot || !is_biconnected(g) || g.n() % 3 != 2)
            v.skip("thm32", "needs 2-connected (0,1)-ternary on 3m+2 vertices");
        else if (g.n() > kMaxDominationVertices)
            v.indet("thm32", "exactness bound");
        else {
            auto rep = check_biconnected_theorem(g, opts.min_set_cap);
            if (!rep.enumeration_complete)
                v.indet("thm32", "minimum-set enumeration truncated");
            else if (rep.all_pass())
                v.pass("thm32");
            else
                v.fail("thm32", json{{"graph", graph_json(g)},
                                     {"i", rep.i_value},
                                     {"m", rep.m},
                                     {"i_equals_m_plus_1", rep.i_equals_m_plus_1},
                                     {"no_admissible_pair", rep.no_min_set_has_admissible_pair},
                                     {"deletion_monotone", rep.deletion_monotone},
                                     {"all_vertices_covered", rep.every_vertex_in_some_min_set},
                                     {"witness_set", rep.witness_set},
                                     {"witness_pair", {rep.witness_pair.first, rep.witness_pair.second}},
                                     {"witness_vertex", rep.witness_vertex}});
        }
    }

    if (checks.count("thm22")) {
        if (!m.tag)
            v.indet("thm22", "classification indeterminate");
        else if (!zot || !is_biconnected(g))
            v.skip("thm22", "needs 2-connected (0,1)-ternary");
        else {
            try {
                ResidueSpec spec(2, 3);
                EarDecomposition d = ear_decompose(g, spec);
                bool same_ear = check_same_ear_property(d);
                bool paths_ok = true;
                json pwit;
                for (int a = 0; a < g.n() && paths_ok; ++a)
                    for (int b = a + 1; b < g.n() && paths_ok; ++b) {
                        if (!is_admissible_pair(g, a, b)) continue;
                        PathList pl = enumerate_paths(g, a, b, 200000);
                        if (pl.truncated) throw std::runtime_error("path enumeration truncated");
                        for (const auto& p : pl.paths)
                            if ((static_cast<int>(p.size()) - 1) % 3 != spec.k_prime) {
                                paths_ok = false;
                                pwit = json{{"pair", {a, b}}, {"path", p}};
                                break;
                            }
                    }
                if (same_ear && paths_ok)
                    v.pass("thm22");
                else
                    v.fail("thm22", json{{"graph", graph_json(g)},
                                         {"same_ear", same_ear},
                                         {"path_witness", pwit}});
            } catch (const std::runtime_error& e) {
                v.indet("thm22", e.what());
            }
        }
    }

    if (checks.count("lem21")) {
        if (!m.tag)
            v.indet("lem21", "classification indeterminate");
        else if (!zot)
            v.skip("lem21", "cycles not all 2 mod 3");
        else {
            auto r = find_theta_violation(g, ResidueSpec(2, 3));
            if (!r.determinate)
                v.indet("lem21", "search budget exceeded");
            else if (!r.violation)
                v.pass("lem21");
            else
                v.fail("lem21", json{{"graph", graph_json(g)},
                                     {"u", r.violation->u},
                                     {"v", r.violation->v},
                                     {"p1", r.violation->p1},
                                     {"p2", r.violation->p2},
                                     {"p3", r.violation->p3},
                                     {"bridge", r.violation->bridge}});
        }
    }

    if (checks.count("lem23")) {
        bool is_cycle_graph = g.n() >= 3 && g.edge_count() == g.n() && is_biconnected(g);
        if (is_cycle_graph) {
            bool all2 = true;
            for (int x = 0; x < g.n(); ++x)
                if (g.degree(x) != 2) all2 = false;
            is_cycle_graph = all2;
        }
        if (!m.tag)
            v.indet("lem23", "classification indeterminate");
        else if (!zot || !is_biconnected(g) || is_cycle_graph)
            v.skip("lem23", "needs 2-connected non-cycle with all cycles 2 mod 3");
        else {
            auto nice = find_nice_cycles(g, ResidueSpec(2, 3));
            if (nice.size() >= 2)
                v.pass("lem23");
            else
                v.fail("lem23", json{{"graph", graph_json(g)},
                                     {"nice_cycle_count", nice.size()}});
        }
    }

    if (checks.count("lem36")) {
        if (!m.tag)
            v.indet("lem36", "classification indeterminate");
        else if (!zot)
            v.skip("lem36", "not (0,1)-ternary");
        else if (g.edge_count() == 0)
            v.skip("lem36", "edgeless graph");
        else if (!m.gamma || !m.gamma_line)
            v.indet("lem36", "exactness bound");
        else if (*m.gamma_line <= *m.gamma)
            v.pass("lem36");
        else
            v.fail("lem36", json{{"graph", graph_json(g)},
                                 {"gamma", *m.gamma},
                                 {"gamma_line", *m.gamma_line}});
    }
}

void eval_hyper_checks(const Hypergraph& h, const std::set<std::string>& checks, Verdicts& v) {
    auto berge = find_berge_cycle_in_residue(h, {0, 1});
    const bool classified = berge.determinate;
    const bool zot = classified && !berge.witness;

    if (checks.count("thm14")) {
        if (h.has_unit_edge())
            v.skip("thm14", "size-1 edge present");
        else if (!classified)
            v.indet("thm14", "Berge-cycle search budget exceeded");
        else if (!zot)
            v.skip("thm14", "not (0,1)-ternary");
        else {
            auto verdict = check_hyper_theorem(h);
            if (!verdict.determinate)
                v.indet("thm14", "Berge-cycle search budget exceeded");
            else if (verdict.pass)
                v.pass("thm14");
            else
                v.fail("thm14", json{{"hypergraph", hyper_json(h)},
                                     {"gamma", verdict.gamma},
                                     {"d", verdict.d_is_star ? "*" : std::to_string(verdict.d)}});
        }
    }

    const bool per_edge = checks.count("lem42") || checks.count("gamma_shift") ||
                          checks.count("betti_shift");
    if (!per_edge) return;
    auto skip_all = [&](const std::string& why) {
        for (const char* c : {"lem42", "gamma_shift", "betti_shift"})
            if (checks.count(c)) v.skip(c, why);
    };
    if (h.has_unit_edge()) {
        skip_all("size-1 edge present");
        return;
    }
    if (!classified) {
        for (const char* c : {"lem42", "gamma_shift", "betti_shift"})
            if (checks.count(c)) v.indet(c, "Berge-cycle search budget exceeded");
        return;
    }
    if (!zot) {
        skip_all("not (0,1)-ternary");
        return;
    }

    bool lem42_ok = true, gamma_ok = true, betti_ok = true;
    bool lem42_indet = false;
    json wit42, witg, witb;
    const int gamma_h = hyper_domination_number(h).first;
    HomologyProfile ph = reduced_homology(independence_complex_hyper(h));
    for (const auto& e : h.edges) {
        Hypergraph he = h_e_transform(h, e);
        if (checks.count("lem42")) {
            auto r = find_berge_cycle_in_residue(he, {0, 1});
            if (!r.determinate) lem42_indet = true;
            else if (r.witness) {
                lem42_ok = false;
                wit42 = json{{"hypergraph", hyper_json(h)},
                             {"edge", e},
                             {"cycle_vertices", r.witness->vertices},
                             {"cycle_edges", r.witness->edge_indices}};
            }
        }
        if (checks.count("gamma_shift")) {
            int ge = hyper_domination_number(he).first;
            if (ge != gamma_h + 1) {
                gamma_ok = false;
                witg = json{{"hypergraph", hyper_json(h)},
                            {"edge", e},
                            {"gamma", gamma_h},
                            {"gamma_he", ge}};
            }
        }
        if (checks.count("betti_shift")) {
            HomologyProfile pe = reduced_homology(independence_complex_hyper(he));
            bool ok = pe.betti.empty() || pe.betti[0] == 0;
            for (std::size_t i = 0; i < ph.betti.size() && ok; ++i) {
                long long shifted = (i + 1 < pe.betti.size()) ? pe.betti[i + 1] : 0;
                if (shifted != ph.betti[i]) ok = false;
                auto ts = (i + 1 < pe.torsion.size()) ? pe.torsion[i + 1]
                                                      : std::vector<std::int64_t>{};
                if (ts != ph.torsion[i]) ok = false;
            }
            for (std::size_t i = ph.betti.size() + 1; i < pe.betti.size() && ok; ++i)
                if (pe.betti[i] != 0 || !pe.torsion[i].empty()) ok = false;
            if (ok && !pe.torsion.empty() && !pe.torsion[0].empty()) ok = false;
            if (!ok) {
                betti_ok = false;
                witb = json{{"hypergraph", hyper_json(h)},
                            {"edge", e},
                            {"betti", ph.betti},
                            {"betti_he", pe.betti}};
            }
        }
    }
    if (checks.count("lem42")) {
        if (!lem42_ok)
            v.fail("lem42", wit42);
        else if (lem42_indet)
            v.indet("lem42", "Berge-cycle search budget exceeded");
        else
            v.pass("lem42");
    }
    if (checks.count("gamma_shift")) gamma_ok ? v.pass("gamma_shift") : v.fail("gamma_shift", witg);
    if (checks.count("betti_shift")) betti_ok ? v.pass("betti_shift") : v.fail("betti_shift", witb);
}

}  // namespace

std::set<std::string> all_checks() {
    std::set<std::string> s = kGraphChecks;
    s.insert(kHyperChecks.begin(), kHyperChecks.end());
    return s;
}

std::vector<Instance> build_instances(const InstanceSpec& spec) {
    std::vector<Instance> out;
    auto p = [&](const std::string& k, long long dflt) {
        auto it = spec.params.find(k);
        return it == spec.params.end() ? dflt : it->second;
    };
    if (spec.family == "exhaustive") {
        int n = static_cast<int>(p("n", 5));
        if (n < 1 || n > 7) throw std::invalid_argument("exhaustive: need 1 <= n <= 7");
        std::uint64_t total = std::uint64_t{1} << pair_count(n);
        for (std::uint64_t mask = 0; mask < total; ++mask)
            out.emplace_back(graph_from_edge_mask(n, mask));
    } else if (spec.family == "path") {
        if (spec.params.count("nmax"))
            for (int n = 1; n <= p("nmax", 0); ++n) out.emplace_back(path_graph(n));
        else
            out.emplace_back(path_graph(static_cast<int>(p("n", 4))));
    } else if (spec.family == "cycle") {
        if (spec.params.count("nmax"))
            for (int n = 3; n <= p("nmax", 0); ++n) out.emplace_back(cycle_graph(n));
        else
            out.emplace_back(cycle_graph(static_cast<int>(p("n", 5))));
    } else if (spec.family == "tree") {
        int n = static_cast<int>(p("n", 5));
        if (n < 1) throw std::invalid_argument("tree: need n >= 1");
        auto tree_from_prufer = [n](const std::vector<int>& code) {
            std::vector<int> deg(n, 1);
            for (int x : code) ++deg[x];
            std::vector<std::pair<int, int>> es;
            std::vector<int> work = code;
            for (int x : work) {
                for (int leaf = 0; leaf < n; ++leaf)
                    if (deg[leaf] == 1) {
                        es.emplace_back(std::min(leaf, x), std::max(leaf, x));
                        --deg[leaf];
                        --deg[x];
                        break;
                    }
            }
            int a = -1, b = -1;
            for (int v2 = 0; v2 < n; ++v2)
                if (deg[v2] == 1) (a < 0 ? a : b) = v2;
            if (a >= 0 && b >= 0) es.emplace_back(a, b);
            return Graph(n, es);
        };
        if (spec.params.count("count")) {
            long long count = p("count", 1);
            for (long long i = 0; i < count; ++i) {
                std::mt19937_64 rng(spec.seed ^ static_cast<std::uint64_t>(i));
                std::vector<int> code(std::max(0, n - 2));
                for (int& x : code) x = static_cast<int>(rng() % n);
                out.emplace_back(tree_from_prufer(code));
            }
        } else {
            if (n > 8) throw std::invalid_argument("tree: exhaustive needs n <= 8");
            std::vector<int> code(std::max(0, n - 2), 0);
            while (true) {
                out.emplace_back(tree_from_prufer(code));
                int i = 0;
                while (i < static_cast<int>(code.size()) && code[i] == n - 1) code[i++] = 0;
                if (i == static_cast<int>(code.size())) break;
                ++code[i];
            }
        }
    } else if (spec.family == "theta") {
        int len = static_cast<int>(p("len", 4));
        if (len < 2) throw std::invalid_argument("theta: need len >= 2");
        std::vector<std::pair<int, int>> es;
        int fresh = 2;
        for (int path = 0; path < 3; ++path) {
            int prev = 0;
            for (int i = 0; i < len - 1; ++i) {
                es.emplace_back(prev, fresh);
                prev = fresh++;
            }
            es.emplace_back(prev, 1);
        }
        out.emplace_back(Graph(fresh, es));
    } else if (spec.family == "ear_grown") {
        long long count = p("count", 1);
        for (long long i = 0; i < count; ++i)
            out.emplace_back(gen_ear_grown(static_cast<int>(p("max_vertices", 20)),
                                           static_cast<int>(p("ears", 3)),
                                           spec.seed ^ static_cast<std::uint64_t>(i)));
    } else if (spec.family == "a_k") {
        if (spec.params.count("kmax"))
            for (int k = 1; k <= p("kmax", 0); ++k) out.emplace_back(gen_a_k(k));
        else
            out.emplace_back(gen_a_k(static_cast<int>(p("k", 1))));
    } else if (spec.family == "b_k") {
        if (spec.params.count("kmax"))
            for (int k = 0; k <= p("kmax", 0); ++k) out.emplace_back(gen_b_k(k));
        else
            out.emplace_back(gen_b_k(static_cast<int>(p("k", 0))));
    } else if (spec.family == "random_hypergraph") {
        long long count = p("count", 1);
        for (long long i = 0; i < count; ++i)
            out.emplace_back(gen_random_ternary_hypergraph(
                static_cast<int>(p("n", 8)), static_cast<int>(p("m", 4)),
                static_cast<int>(p("max_edge", 4)), spec.seed ^ static_cast<std::uint64_t>(i)));
    } else if (spec.family == "file") {
        out.emplace_back(read_graph_file(spec.path));
    } else if (spec.family == "hyperfile") {
        out.emplace_back(read_hypergraph_file(spec.path));
    } else {
        throw std::invalid_argument("unknown family: " + spec.family);
    }
    return out;
}

std::string evaluate_instance(long long id, const Instance& inst, const InstanceSpec& spec,
                              const std::set<std::string>& checks, const CampaignOptions& opts,
                              CampaignSummary& tally) {
    auto t0 = std::chrono::steady_clock::now();
    json rec;
    rec["id"] = id;
    rec["family"] = spec.family;
    rec["params"] = spec.params;
    Verdicts v(tally);
    if (std::holds_alternative<Graph>(inst)) {
        const Graph& g = std::get<Graph>(inst);
        validate(g);
        rec["kind"] = "graph";
        rec["n"] = g.n();
        rec["m"] = g.edge_count();
        GraphMetrics m = graph_metrics(g);
        rec["classification"] = m.tag ? json(tag_name(*m.tag)) : json(nullptr);
        rec["d"] = m.d ? json(m.d->str()) : json(nullptr);
        rec["gamma"] = m.gamma ? json(*m.gamma) : json(nullptr);
        rec["i"] = m.idom ? json(*m.idom) : json(nullptr);
        rec["gamma_line"] = m.gamma_line ? json(*m.gamma_line) : json(nullptr);
        eval_graph_checks(g, m, checks, v, opts);
    } else {
        const Hypergraph& h = std::get<Hypergraph>(inst);
        rec["kind"] = "hypergraph";
        rec["n"] = h.n;
        rec["m"] = h.edges.size();
        rec["gamma"] =
            (h.n >= 1 && h.n <= 62) ? json(hyper_domination_number(h).first) : json(nullptr);
        eval_hyper_checks(h, checks, v);
    }
    rec["checks"] = v.checks;
    if (!v.witnesses.empty()) rec["detail"] = v.witnesses;
    if (opts.timings) {
        auto dt = std::chrono::steady_clock::now() - t0;
        rec["micros"] = std::chrono::duration_cast<std::chrono::microseconds>(dt).count();
    }
    ++tally.instances;
    return rec.dump();
}

CampaignSummary run_campaign(const InstanceSpec& spec, const std::set<std::string>& checks,
                             std::ostream& out, const CampaignOptions& opts) {
    std::vector<Instance> instances = build_instances(spec);
    CampaignSummary total;
    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < instances.size(); ++i)
            out << evaluate_instance(static_cast<long long>(i), instances[i], spec, checks, opts,
                                     total)
                << '\n';
        return total;
    }
    std::vector<std::string> lines(instances.size());
    std::vector<CampaignSummary> parts(jobs);
    std::vector<std::future<void>> futs;
    for (int w = 0; w < jobs; ++w)
        futs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < instances.size(); i += jobs)
                lines[i] = evaluate_instance(static_cast<long long>(i), instances[i], spec, checks,
                                             opts, parts[w]);
        }));
    for (auto& f : futs) f.get();
    for (const auto& l : lines) out << l << '\n';
    for (const auto& p : parts) {
        total.instances += p.instances;
        total.failures += p.failures;
        total.skips += p.skips;
        total.indeterminate += p.indeterminate;
    }
    return total;
}

}  // namespace ternary
