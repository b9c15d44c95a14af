#pragma once

// Independent reference implementations used as test oracles. They only
// touch the Graph accessors (vertices, has_edge) and never call into the
// algorithms under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "tpk/edit_set.hpp"
#include "tpk/graph.hpp"

namespace oracle {

using tpk::Edge;
using tpk::Graph;
using tpk::Vertex;
using tpk::VertexSet;

inline Graph make_graph(Vertex n, std::vector<Edge> edges) {
    std::vector<Vertex> vs(static_cast<std::size_t>(n));
    for (Vertex i = 0; i < n; ++i) {
        vs[static_cast<std::size_t>(i)] = i;
    }
    for (auto &[u, v] : edges) {
        if (u > v) {
            std::swap(u, v);
        }
    }
    return Graph::from_edges(vs, edges);
}

inline Graph path(Vertex n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i) {
        e.emplace_back(i, i + 1);
    }
    return make_graph(n, e);
}

inline Graph cycle(Vertex n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i) {
        e.emplace_back(i, (i + 1) % n);
    }
    return make_graph(n, e);
}

inline Graph complete(Vertex n, Vertex offset = 0) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            e.emplace_back(offset + i, offset + j);
        }
    }
    return make_graph(offset + n, e);
}

inline Graph star(Vertex leaves) {
    std::vector<Edge> e;
    for (Vertex i = 1; i <= leaves; ++i) {
        e.emplace_back(0, i);
    }
    return make_graph(leaves + 1, e);
}

/// Disjoint union, b shifted past a's identifiers.
inline Graph disjoint_union(const Graph &a, const Graph &b) {
    const Vertex shift = a.id_bound();
    std::vector<Edge> e = a.edges();
    for (const auto &[u, v] : b.edges()) {
        e.emplace_back(u + shift, v + shift);
    }
    return make_graph(shift + b.id_bound(), e);
}

inline Graph from_mask(Vertex n, std::uint64_t mask) {
    std::vector<Edge> e;
    int bit = 0;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j, ++bit) {
            if ((mask >> bit) & 1U) {
                e.emplace_back(i, j);
            }
        }
    }
    return make_graph(n, e);
}

inline Graph random_graph(Vertex n, double p, std::mt19937_64 &rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (coin(rng)) {
                e.emplace_back(i, j);
            }
        }
    }
    return make_graph(n, e);
}

/// Random trivially perfect graph via the recursive characterization:
/// disjoint unions and universal vertices, with shuffled identifiers.
inline Graph random_tp(Vertex n, std::mt19937_64 &rng) {
    std::vector<std::vector<Vertex>> parts;
    std::vector<Edge> e;
    std::vector<Vertex> ids(static_cast<std::size_t>(n));
    for (Vertex i = 0; i < n; ++i) {
        ids[static_cast<std::size_t>(i)] = i;
    }
    std::shuffle(ids.begin(), ids.end(), rng);
    for (Vertex v : ids) {
        const int action = std::uniform_int_distribution<int>(0, 2)(rng);
        if (action == 0 || parts.empty()) {
            parts.push_back({v});
        } else {
            // v becomes universal to the union of a random number of parts.
            std::shuffle(parts.begin(), parts.end(), rng);
            const auto take = std::uniform_int_distribution<std::size_t>(1, parts.size())(rng);
            std::vector<Vertex> merged{v};
            for (std::size_t i = 0; i < take; ++i) {
                for (Vertex u : parts[i]) {
                    e.emplace_back(u, v);
                    merged.push_back(u);
                }
            }
            parts.erase(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(take));
            parts.push_back(std::move(merged));
        }
    }
    return make_graph(n, e);
}

/// Exactly a P4 or a C4 on the four given vertices.
inline bool induces_obstruction(const Graph &g, Vertex a, Vertex b, Vertex c, Vertex d) {
    const Vertex q[4] = {a, b, c, d};
    int edges = 0;
    int deg[4] = {0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (g.has_edge(q[i], q[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
            }
        }
    }
    std::sort(deg, deg + 4);
    const bool p4 = edges == 3 && deg[0] == 1 && deg[1] == 1 && deg[2] == 2 && deg[3] == 2;
    const bool c4 = edges == 4 && deg[0] == 2 && deg[3] == 2;
    return p4 || c4;
}

/// Brute-force scan of all 4-subsets.
inline bool is_tp(const Graph &g) {
    const auto &v = g.vertices();
    const std::size_t n = v.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t c = b + 1; c < n; ++c) {
                for (std::size_t d = c + 1; d < n; ++d) {
                    if (induces_obstruction(g, v[a], v[b], v[c], v[d])) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

inline bool is_tp(const Graph &g, const VertexSet &s) {
    const auto &v = s.members();
    const std::size_t n = v.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t c = b + 1; c < n; ++c) {
                for (std::size_t d = c + 1; d < n; ++d) {
                    if (induces_obstruction(g, v[a], v[b], v[c], v[d])) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

/// Maximum independent set size by subset enumeration (n <= 20).
inline std::size_t mis_size(const Graph &g) {
    const auto &v = g.vertices();
    const std::size_t n = v.size();
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
        if (size <= best) {
            continue;
        }
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!((mask >> i) & 1U)) {
                continue;
            }
            for (std::size_t j = i + 1; j < n && ok; ++j) {
                if (((mask >> j) & 1U) && g.has_edge(v[i], v[j])) {
                    ok = false;
                }
            }
        }
        if (ok) {
            best = size;
        }
    }
    return best;
}

inline bool is_independent(const Graph &g, const VertexSet &s) {
    for (Vertex a : s) {
        for (Vertex b : s) {
            if (a < b && g.has_edge(a, b)) {
                return false;
            }
        }
    }
    return true;
}

inline bool is_module(const Graph &g, const VertexSet &m) {
    for (Vertex x : g.vertices()) {
        if (m.contains(x)) {
            continue;
        }
        int seen = 0;
        for (Vertex y : m) {
            seen += g.has_edge(x, y) ? 1 : 0;
        }
        if (seen != 0 && static_cast<std::size_t>(seen) != m.size()) {
            return false;
        }
    }
    return true;
}

inline std::vector<Vertex> closed_nbhd(const Graph &g, Vertex v) {
    std::vector<Vertex> out;
    for (Vertex u : g.vertices()) {
        if (u == v || g.has_edge(u, v)) {
            out.push_back(u);
        }
    }
    return out;
}

/// Open neighborhood of a set, by definition.
inline VertexSet nbhd(const Graph &g, const VertexSet &s) {
    std::vector<Vertex> out;
    for (Vertex u : g.vertices()) {
        if (s.contains(u)) {
            continue;
        }
        for (Vertex v : s) {
            if (g.has_edge(u, v)) {
                out.push_back(u);
                break;
            }
        }
    }
    return VertexSet(std::move(out));
}

/// Maximal cliques by Bron-Kerbosch without pivoting (small graphs).
inline void bron_kerbosch(const Graph &g, std::vector<Vertex> r, std::vector<Vertex> p, std::vector<Vertex> x,
                          std::vector<VertexSet> &out) {
    if (p.empty() && x.empty()) {
        out.push_back(VertexSet(r));
        return;
    }
    while (!p.empty()) {
        const Vertex v = p.back();
        std::vector<Vertex> np;
        std::vector<Vertex> nx;
        for (Vertex u : p) {
            if (g.has_edge(u, v)) {
                np.push_back(u);
            }
        }
        for (Vertex u : x) {
            if (g.has_edge(u, v)) {
                nx.push_back(u);
            }
        }
        auto nr = r;
        nr.push_back(v);
        bron_kerbosch(g, nr, np, nx, out);
        p.pop_back();
        x.push_back(v);
    }
}

inline std::vector<VertexSet> maximal_cliques(const Graph &g) {
    std::vector<VertexSet> out;
    bron_kerbosch(g, {}, g.vertices(), {}, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// Smallest legal edit count (<= k) making g trivially perfect, by trying
/// every subset of candidate pairs.
inline std::optional<std::size_t> min_edit(const Graph &g, int k, tpk::Variant variant) {
    std::vector<Edge> cand;
    const auto &v = g.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            const bool e = g.has_edge(v[i], v[j]);
            if (variant == tpk::Variant::editing || (variant == tpk::Variant::completion) != e) {
                cand.emplace_back(v[i], v[j]);
            }
        }
    }
    std::vector<std::size_t> pick;
    std::optional<std::size_t> best;
    // Depth-first over index-increasing combinations, by size.
    for (int size = 0; size <= k && !best; ++size) {
        pick.assign(static_cast<std::size_t>(size), 0);
        for (int i = 0; i < size; ++i) {
            pick[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
        }
        if (static_cast<std::size_t>(size) > cand.size()) {
            break;
        }
        for (;;) {
            Graph h = g;
            for (std::size_t idx : pick) {
                const auto [a, b] = cand[idx];
                if (h.has_edge(a, b)) {
                    h.remove_edge(a, b);
                } else {
                    h.add_edge(a, b);
                }
            }
            if (is_tp(h)) {
                best = static_cast<std::size_t>(size);
                break;
            }
            int i = size - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == cand.size() - static_cast<std::size_t>(size - i)) {
                --i;
            }
            if (i < 0) {
                break;
            }
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j) {
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }
    return best;
}

}  // namespace oracle

namespace fixture {

using tpk::Edge;
using tpk::Graph;
using tpk::Vertex;
using tpk::VertexSet;

// COMB3P: c1,c2,c3 = 0,1,2; r1,r2,r3 = 3,4,5; f = 6; p = 7; C4 p-q-s-t with
// q,s,t = 8,9,10.
inline constexpr Vertex c1 = 0, c2 = 1, c3 = 2, r1 = 3, r2 = 4, r3 = 5, f = 6, p = 7, q = 8, s = 9, t = 10;

/// COMB-l-P with singleton shaft and teeth of the given sizes (each tooth an
/// independent set), built directly from the fixture description.
inline Graph comb_lp(const std::vector<int> &tooth_sizes) {
    const auto l = static_cast<Vertex>(tooth_sizes.size());
    std::vector<std::vector<Vertex>> teeth;
    Vertex next = l;
    for (int sz : tooth_sizes) {
        teeth.emplace_back();
        for (int i = 0; i < sz; ++i) {
            teeth.back().push_back(next++);
        }
    }
    const Vertex fv = next++;
    const Vertex pv = next++;
    const Vertex qv = next++;
    const Vertex sv = next++;
    const Vertex tv = next++;
    std::vector<Edge> e;
    for (Vertex i = 0; i < l; ++i) {
        for (Vertex j = i + 1; j < l; ++j) {
            e.emplace_back(i, j);
        }
        for (Vertex j = i; j < l; ++j) {
            for (Vertex y : teeth[static_cast<std::size_t>(j)]) {
                e.emplace_back(i, y);
            }
        }
        e.emplace_back(i, fv);
        e.emplace_back(i, pv);
    }
    for (const auto &tooth : teeth) {
        for (Vertex y : tooth) {
            e.emplace_back(y, pv);
        }
    }
    e.emplace_back(pv, qv);
    e.emplace_back(qv, sv);
    e.emplace_back(sv, tv);
    e.emplace_back(pv, tv);
    return oracle::make_graph(next, e);
}

inline Graph comb3p() { return comb_lp({1, 1, 1}); }

/// A comb inside a trivially perfect host: p sees the whole comb and f, f
/// sees the shaft. The only obstructions come from a C4 p-q-s-t, which one
/// added pair fixes.
inline std::pair<Graph, VertexSet> anchored_comb(const std::vector<int> &sizes) {
    const auto l = static_cast<Vertex>(sizes.size());
    std::vector<std::vector<Vertex>> teeth;
    Vertex next = l;
    for (int sz : sizes) {
        teeth.emplace_back();
        for (int i = 0; i < sz; ++i) {
            teeth.back().push_back(next++);
        }
    }
    const Vertex comb_end = next;
    const Vertex fv = next++, pv = next++, qv = next++, sv = next++, tv = next++;
    Graph g(next);
    for (Vertex i = 0; i < l; ++i) {
        for (Vertex j = i + 1; j < l; ++j) {
            g.add_edge(i, j);
        }
        for (Vertex j = i; j < l; ++j) {
            for (Vertex y : teeth[j]) {
                g.add_edge(i, y);
            }
        }
        g.add_edge(i, fv);
    }
    for (Vertex v = 0; v <= fv; ++v) {
        if (v != pv) {
            g.add_edge(v, pv);
        }
    }
    g.add_edge(pv, qv);
    g.add_edge(qv, sv);
    g.add_edge(sv, tv);
    g.add_edge(tv, pv);
    std::vector<Vertex> cr(comb_end);
    std::iota(cr.begin(), cr.end(), Vertex{0});
    return {g, VertexSet(cr)};
}


}  // namespace fixture
