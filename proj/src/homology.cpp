#include "ternary/homology.hpp"

#include <algorithm>
#include <atomic>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ternary {

namespace {

using Int = boost::multiprecision::cpp_int;

std::atomic<long long> g_checks_run{0};
std::atomic<long long> g_check_failures{0};

void self_check(bool ok, const char* what) {
    ++g_checks_run;
    if (!ok) {
        ++g_check_failures;
        throw std::logic_error(std::string("homology self-check failed: ") + what);
    }
}

// ---- sparse exact Smith normal form ------------------------------------

struct SparseMat {
    int nr = 0, nc = 0;
    std::vector<std::map<int, Int>> rows;
    std::vector<std::set<int>> cols;

    SparseMat(int r, int c) : nr(r), nc(c), rows(r), cols(c) {}

    void set(int r, int c, Int v) {
        if (v == 0) return;
        rows[r][c] = std::move(v);
        cols[c].insert(r);
    }
    void drop(int r, int c) {
        rows[r].erase(c);
        cols[c].erase(r);
    }
    // rows[r] -= q * rows[p]
    void row_sub(int r, int p, const Int& q) {
        for (const auto& [c, v] : rows[p]) {
            auto it = rows[r].find(c);
            if (it == rows[r].end()) {
                rows[r][c] = -q * v;
                cols[c].insert(r);
            } else {
                it->second -= q * v;
                if (it->second == 0) drop(r, c);
            }
        }
    }
};

Int nearest_quotient(const Int& a, const Int& b) {
    // q minimizing |a - q b|
    Int q = a / b, r = a - q * b;
    if (2 * abs(r) > abs(b)) q += (r < 0) == (b < 0) ? 1 : -1;
    return q;
}

// Diagonal entries of an equivalent diagonal form (not yet the
// divisibility chain); rank = count of entries.
std::vector<Int> diagonalize(SparseMat& m) {
    std::vector<Int> diag;
    std::set<int> live_rows;
    for (int r = 0; r < m.nr; ++r)
        if (!m.rows[r].empty()) live_rows.insert(r);

    while (!live_rows.empty()) {
        // pivot: smallest |value| among live entries, units grabbed eagerly
        int pr = -1, pc = -1;
        Int pv;
        for (int r : live_rows) {
            for (const auto& [c, v] : m.rows[r]) {
                if (pr == -1 || abs(v) < abs(pv)) {
                    pr = r;
                    pc = c;
                    pv = v;
                }
                if (abs(pv) == 1) break;
            }
            if (pr != -1 && abs(pv) == 1) break;
        }

        while (true) {
            // clear the pivot column with row operations
            bool moved = false;
            auto col_copy = m.cols[pc];
            for (int r : col_copy) {
                if (r == pr) continue;
                Int v = m.rows[r].at(pc);
                Int q = nearest_quotient(v, pv);
                if (q != 0) m.row_sub(r, pr, q);
                auto it = m.rows[r].find(pc);
                if (it != m.rows[r].end()) {  // nonzero remainder, strictly smaller
                    pr = r;
                    pv = it->second;
                    moved = true;
                    break;
                }
            }
            if (moved) continue;
            // pivot column is clean; clear the pivot row with column ops
            // (they only touch row pr now)
            bool row_dirty = false;
            auto row_copy = m.rows[pr];
            for (const auto& [c, v] : row_copy) {
                if (c == pc) continue;
                Int q = nearest_quotient(v, pv);
                Int rem = v - q * pv;
                if (rem == 0)
                    m.drop(pr, c);
                else {
                    m.rows[pr][c] = rem;
                    row_dirty = true;
                }
            }
            if (!row_dirty) break;
            // move the pivot to the smallest remaining entry in this row
            for (const auto& [c, v] : m.rows[pr])
                if (abs(v) < abs(pv)) {
                    pc = c;
                    pv = v;
                }
        }

        diag.push_back(abs(pv));
        auto row_copy = m.rows[pr];
        for (const auto& [c, v] : row_copy) m.drop(pr, c);
        live_rows.clear();
        for (int r = 0; r < m.nr; ++r)
            if (!m.rows[r].empty()) live_rows.insert(r);
    }
    return diag;
}

// Invariant factors (divisibility chain) from a diagonal multiset.
std::vector<Int> invariant_factors(std::vector<Int> diag) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < diag.size(); ++i)
            for (std::size_t j = i + 1; j < diag.size(); ++j) {
                if (diag[j] % diag[i] == 0) continue;
                Int g = gcd(diag[i], diag[j]);
                Int l = diag[i] / g * diag[j];
                diag[i] = g;
                diag[j] = l;
                changed = true;
            }
    }
    std::sort(diag.begin(), diag.end());
    return diag;
}

}  // namespace

long long SimplicialComplex::total_faces() const {
    long long t = 0;
    for (const auto& fs : faces_by_dim) t += static_cast<long long>(fs.size());
    return t;
}

std::string DValue::str() const {
    switch (kind) {
        case Sphere: return std::to_string(d);
        case HomologyTrivial: return "*";
        default: return "other";
    }
}

bool HomologyProfile::torsion_free() const {
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

long long HomologyProfile::total_betti() const {
    return std::accumulate(betti.begin(), betti.end(), 0LL);
}

namespace {

struct FaceEnum {
    long long budget;
    SimplicialComplex out;
    std::vector<int> cur;

    void record() {
        if (out.total_faces() >= budget)
            throw std::runtime_error("independence complex exceeds face budget");
        int d = static_cast<int>(cur.size()) - 1;
        if (d >= static_cast<int>(out.faces_by_dim.size())) out.faces_by_dim.resize(d + 1);
        out.faces_by_dim[d].push_back(cur);
    }
};

}  // namespace

SimplicialComplex independence_complex(const Graph& g, long long face_budget) {
    if (g.n() < 1) throw std::invalid_argument("independence_complex: empty graph");
    FaceEnum fe;
    fe.budget = face_budget;
    fe.out.vertex_count = g.n();
    std::vector<int> blocked(g.n(), 0);
    // ascending DFS keeps faces in lexicographic order within each dimension
    auto rec = [&](auto&& self, int from) -> void {
        for (int u = from; u < g.n(); ++u) {
            if (blocked[u]) continue;
            fe.cur.push_back(u);
            fe.record();
            for (int w : g.neighbors(u)) ++blocked[w];
            self(self, u + 1);
            for (int w : g.neighbors(u)) --blocked[w];
            fe.cur.pop_back();
        }
    };
    rec(rec, 0);
    return std::move(fe.out);
}

SimplicialComplex independence_complex_hyper(const Hypergraph& h, long long face_budget) {
    if (h.n < 1) throw std::invalid_argument("independence_complex_hyper: empty hypergraph");
    if (h.has_unit_edge())
        throw std::invalid_argument("independence_complex_hyper: size-1 edge present");
    FaceEnum fe;
    fe.budget = face_budget;
    fe.out.vertex_count = h.n;
    std::vector<int> rem;
    std::vector<std::vector<int>> edges_of(h.n);
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        rem.push_back(static_cast<int>(h.edges[i].size()));
        for (int v : h.edges[i]) edges_of[v].push_back(static_cast<int>(i));
    }
    auto rec = [&](auto&& self, int from) -> void {
        for (int u = from; u < h.n; ++u) {
            bool complete = false;
            for (int e : edges_of[u])
                if (--rem[e] == 0) complete = true;
            if (complete) {
                for (int e : edges_of[u]) ++rem[e];
                continue;  // adding u swallows an edge; so does any superset
            }
            fe.cur.push_back(u);
            fe.record();
            self(self, u + 1);
            fe.cur.pop_back();
            for (int e : edges_of[u]) ++rem[e];
        }
    };
    rec(rec, 0);
    return std::move(fe.out);
}

namespace {

// boundary matrix d -> d-1 (d >= 1); rows are (d-1)-faces
SparseMat boundary_matrix(const SimplicialComplex& c, int d,
                          const std::vector<std::map<std::vector<int>, int>>& index) {
    const auto& hi = c.faces_by_dim[d];
    const int nr = static_cast<int>(c.faces_by_dim[d - 1].size());
    SparseMat m(nr, static_cast<int>(hi.size()));
    for (int col = 0; col < static_cast<int>(hi.size()); ++col) {
        const auto& f = hi[col];
        std::vector<int> sub(f.size() - 1);
        for (std::size_t i = 0; i < f.size(); ++i) {
            int k = 0;
            for (std::size_t j = 0; j < f.size(); ++j)
                if (j != i) sub[k++] = f[j];
            int row = index[d - 1].at(sub);
            m.set(row, col, (i % 2 == 0) ? 1 : -1);
        }
    }
    return m;
}

}  // namespace

HomologyProfile reduced_homology(const SimplicialComplex& c) {
    const int D = c.dim();
    if (D < 0) throw std::invalid_argument("reduced_homology: empty complex");
    std::vector<std::map<std::vector<int>, int>> index(D + 1);
    for (int d = 0; d <= D; ++d)
        for (int i = 0; i < static_cast<int>(c.faces_by_dim[d].size()); ++i)
            index[d][c.faces_by_dim[d][i]] = i;

    // closure check: every facet of a listed face must be listed
    for (int d = 1; d <= D; ++d)
        for (const auto& f : c.faces_by_dim[d]) {
            std::vector<int> sub(f.size() - 1);
            for (std::size_t i = 0; i < f.size(); ++i) {
                int k = 0;
                for (std::size_t j = 0; j < f.size(); ++j)
                    if (j != i) sub[k++] = f[j];
                self_check(index[d - 1].count(sub) > 0, "downward closure");
            }
        }

    std::vector<long long> rank(D + 2, 0);
    std::vector<std::vector<Int>> diags(D + 2);
    // augmented boundary in dim 0 is the all-ones row; rank 1 when nonempty
    rank[0] = c.faces_by_dim[0].empty() ? 0 : 1;
    for (int d = 1; d <= D; ++d) {
        SparseMat m = boundary_matrix(c, d, index);

        // boundary-of-boundary: compose column by column with signs
        for (int col = 0; col < m.nc; ++col) {
            const auto& f = c.faces_by_dim[d][col];
            std::map<std::vector<int>, int> acc;
            for (std::size_t i = 0; i < f.size(); ++i) {
                int s1 = (i % 2 == 0) ? 1 : -1;
                std::vector<int> sub;
                for (std::size_t j = 0; j < f.size(); ++j)
                    if (j != i) sub.push_back(f[j]);
                if (d == 1) {
                    acc[{}] += s1;  // augmentation
                    continue;
                }
                for (std::size_t i2 = 0; i2 < sub.size(); ++i2) {
                    int s2 = (i2 % 2 == 0) ? 1 : -1;
                    std::vector<int> sub2;
                    for (std::size_t j2 = 0; j2 < sub.size(); ++j2)
                        if (j2 != i2) sub2.push_back(sub[j2]);
                    acc[sub2] += s1 * s2;
                }
            }
            for (const auto& [k, v] : acc) self_check(v == 0, "boundary composition");
        }

        diags[d] = diagonalize(m);
        rank[d] = static_cast<long long>(diags[d].size());
    }

    HomologyProfile p;
    p.betti.resize(D + 1);
    p.torsion.resize(D + 1);
    for (int d = 0; d <= D; ++d) {
        long long nd = static_cast<long long>(c.faces_by_dim[d].size());
        p.betti[d] = nd - rank[d] - rank[d + 1];
        self_check(p.betti[d] >= 0, "negative Betti number");
        for (const Int& f : invariant_factors(diags[d + 1]))
            if (f > 1) p.torsion[d].push_back(static_cast<std::int64_t>(f));
    }

    // reduced Euler characteristic two ways
    long long chi_faces = -1, chi_betti = 0;
    for (int d = 0; d <= D; ++d) {
        long long sign = (d % 2 == 0) ? 1 : -1;
        chi_faces += sign * static_cast<long long>(c.faces_by_dim[d].size());
        chi_betti += sign * p.betti[d];
    }
    self_check(chi_faces == chi_betti, "Euler characteristic");

    long long nonzero = 0;
    int sphere_dim = -1;
    for (int d = 0; d <= D; ++d)
        if (p.betti[d] != 0) {
            ++nonzero;
            sphere_dim = d;
        }
    if (nonzero == 0 && p.torsion_free())
        p.d_value = DValue{DValue::HomologyTrivial, -1};
    else if (nonzero == 1 && p.betti[sphere_dim] == 1 && p.torsion_free())
        p.d_value = DValue{DValue::Sphere, sphere_dim};
    else
        p.d_value = DValue{DValue::Other, -1};
    return p;
}

long long homology_checks_run() { return g_checks_run.load(); }
long long homology_check_failures() { return g_check_failures.load(); }

std::pair<Graph, std::vector<FoldStep>> fold_reduce(const Graph& g) {
    Graph cur = g;
    std::vector<FoldStep> log;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 0; u < cur.n() && !changed; ++u) {
            for (int v = 0; v < cur.n() && !changed; ++v) {
                if (u == v || cur.adjacent(u, v)) continue;
                const auto& bu = cur.bit_row(u);
                const auto& bv = cur.bit_row(v);
                bool contains = true, equal = true;
                for (int w = 0; w < cur.words(); ++w) {
                    if (bv[w] & ~bu[w]) contains = false;
                    if (bv[w] != bu[w]) equal = false;
                }
                if (!contains) continue;
                if (equal && u < v) continue;  // fold the larger label on ties
                log.push_back(FoldStep{u, v});
                cur = delete_vertices(cur, {u}).first;
                changed = true;
            }
        }
    }
    return {cur, log};
}

DValue d_of_graph(const Graph& g, bool use_fold, long long face_budget) {
    if (g.n() < 1) throw std::invalid_argument("d_of_graph: empty graph");
    Graph h = use_fold ? fold_reduce(g).first : g;
    return reduced_homology(independence_complex(h, face_budget)).d_value;
}

}  // namespace ternary
