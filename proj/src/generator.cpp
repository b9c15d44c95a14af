#include "tpk/generator.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "tpk/errors.hpp"
#include "tpk/tp_structure.hpp"

namespace tpk {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) {
        throw InputError("Rng::below: empty range");
    }
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = engine_();
    while (x >= limit) {
        x = engine_();
    }
    return x % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) {
        throw InputError("Rng::between: empty range");
    }
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

namespace {

int bag_size(Rng &rng, const GenParams &p) {
    int s = p.min_bag;
    while (s < p.max_bag && rng.below(2) == 0) {
        ++s;
    }
    return s;
}

// Picks r distinct pairs from `pool` (all if it is small) or by rejection.
std::vector<Edge> sample_pairs(Rng &rng, const Graph &g, std::size_t r, bool want_edges) {
    const std::size_t n = g.num_vertices();
    const std::size_t total = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t edges = g.num_edges();
    const std::size_t available = want_edges ? edges : total - edges;
    if (r > available) {
        throw InputError("perturb: only " + std::to_string(available) + " suitable pairs for " + std::to_string(r) +
                         " changes");
    }
    if (want_edges || available <= 4 * r) {
        std::vector<Edge> pool;
        if (want_edges) {
            pool = g.edges();
        } else {
            const auto &vs = g.vertices();
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (!g.has_edge(vs[i], vs[j])) {
                        pool.emplace_back(vs[i], vs[j]);
                    }
                }
            }
        }
        // Partial Fisher-Yates.
        for (std::size_t i = 0; i < r; ++i) {
            std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
        }
        pool.resize(r);
        return pool;
    }
    const auto &vs = g.vertices();
    std::set<Edge> picked;
    std::vector<Edge> out;
    while (out.size() < r) {
        Vertex u = vs[rng.below(n)];
        Vertex v = vs[rng.below(n)];
        if (u == v || g.has_edge(u, v)) {
            continue;
        }
        Edge e{std::min(u, v), std::max(u, v)};
        if (picked.insert(e).second) {
            out.push_back(e);
        }
    }
    return out;
}

std::vector<Edge> sample_any_pairs(Rng &rng, const Graph &g, std::size_t r) {
    const std::size_t n = g.num_vertices();
    const std::size_t total = n * (n - (n > 0 ? 1 : 0)) / 2;
    if (r > total) {
        throw InputError("perturb: only " + std::to_string(total) + " pairs for " + std::to_string(r) + " changes");
    }
    const auto &vs = g.vertices();
    if (total <= 4 * r) {
        std::vector<Edge> pool;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                pool.emplace_back(vs[i], vs[j]);
            }
        }
        for (std::size_t i = 0; i < r; ++i) {
            std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
        }
        pool.resize(r);
        return pool;
    }
    std::set<Edge> picked;
    std::vector<Edge> out;
    while (out.size() < r) {
        Vertex u = vs[rng.below(n)];
        Vertex v = vs[rng.below(n)];
        if (u == v) {
            continue;
        }
        Edge e{std::min(u, v), std::max(u, v)};
        if (picked.insert(e).second) {
            out.push_back(e);
        }
    }
    return out;
}

}  // namespace

Graph random_tp_graph(const GenParams &p) {
    if (p.n < 0 || p.min_fanout < 2 || p.max_fanout < p.min_fanout || p.min_bag < 1 || p.max_bag < p.min_bag) {
        throw InputError("random_tp_graph: need n >= 0, 2 <= min_fanout <= max_fanout, 1 <= min_bag <= max_bag");
    }
    if (p.n == 0) {
        return Graph();
    }
    Rng rng(p.seed);
    Ucd d;
    std::vector<int> sizes;
    auto add_node = [&](int parent, int size) {
        const int id = static_cast<int>(d.nodes.size());
        d.nodes.push_back({parent, {}, {}});
        sizes.push_back(size);
        if (parent != no_parent) {
            d.nodes[static_cast<std::size_t>(parent)].children.push_back(id);
        }
        return id;
    };
    Vertex remaining = p.n;
    const int root_size = std::min<Vertex>(bag_size(rng, p), remaining);
    remaining -= root_size;
    d.roots.push_back(add_node(no_parent, root_size));
    std::vector<int> leaves{0};
    while (remaining > 0) {
        int fanout = static_cast<int>(rng.between(p.min_fanout, p.max_fanout));
        while (fanout >= 2 && fanout * p.min_bag > remaining) {
            --fanout;
        }
        if (fanout < 2) {
            // Too few vertices left for a valid split: widen a random bag.
            sizes[rng.below(sizes.size())] += remaining;
            break;
        }
        const std::size_t pick = rng.below(leaves.size());
        const int parent = leaves[pick];
        leaves[pick] = leaves.back();
        leaves.pop_back();
        for (int c = 0; c < fanout; ++c) {
            const Vertex reserve = static_cast<Vertex>(fanout - c - 1) * p.min_bag;
            const int size = std::min<Vertex>(bag_size(rng, p), remaining - reserve);
            remaining -= size;
            leaves.push_back(add_node(parent, size));
        }
    }
    std::vector<Vertex> ids(static_cast<std::size_t>(p.n));
    for (Vertex i = 0; i < p.n; ++i) {
        ids[static_cast<std::size_t>(i)] = i;
    }
    rng.shuffle(ids);
    std::size_t next = 0;
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        std::vector<Vertex> bag(ids.begin() + static_cast<std::ptrdiff_t>(next),
                                ids.begin() + static_cast<std::ptrdiff_t>(next) + sizes[i]);
        next += static_cast<std::size_t>(sizes[i]);
        d.nodes[i].bag = VertexSet(std::move(bag));
    }
    return realize_ucd(d);
}

Perturbation perturb(const Graph &g, int r, Variant variant, std::uint64_t seed) {
    if (r < 0) {
        throw InputError("perturb: negative count");
    }
    if (!is_trivially_perfect(g)) {
        throw InputError("perturb: input graph is not trivially perfect");
    }
    Rng rng(seed);
    const auto count = static_cast<std::size_t>(r);
    std::vector<Edge> pairs;
    switch (variant) {
    case Variant::editing:
        pairs = sample_any_pairs(rng, g, count);
        break;
    case Variant::completion:
        pairs = sample_pairs(rng, g, count, true);
        break;
    case Variant::deletion:
        pairs = sample_pairs(rng, g, count, false);
        break;
    }
    Perturbation out{g, {}};
    for (const auto &[u, v] : pairs) {
        if (g.has_edge(u, v)) {
            out.graph.remove_edge(u, v);
            out.repair.insert(u, v, EditKind::add);
        } else {
            out.graph.add_edge(u, v);
            out.repair.insert(u, v, EditKind::remove);
        }
    }
    return out;
}

PlantedComb plant_comb(int l, const std::vector<int> &tooth_sizes, int k_context, std::uint64_t seed) {
    if (l < 2 || tooth_sizes.size() != static_cast<std::size_t>(l) || k_context < 0 ||
        std::any_of(tooth_sizes.begin(), tooth_sizes.end(), [](int s) { return s < 1; })) {
        throw InputError("plant_comb: need l >= 2, one positive size per tooth, k_context >= 0");
    }
    Rng rng(seed);
    PlantedComb out;
    std::vector<Edge> edges;
    Vertex next = 0;
    for (int i = 0; i < l; ++i) {
        out.shaft.push_back(VertexSet{next++});
    }
    for (int i = 0; i < l; ++i) {
        GenParams gp;
        gp.n = tooth_sizes[static_cast<std::size_t>(i)];
        gp.seed = rng.next();
        const Graph tooth = random_tp_graph(gp);
        const Vertex base = next;
        for (const auto &[u, v] : tooth.edges()) {
            edges.emplace_back(base + u, base + v);
        }
        std::vector<Vertex> members;
        for (Vertex v : tooth.vertices()) {
            members.push_back(base + v);
        }
        next += gp.n;
        out.teeth.push_back(VertexSet(std::move(members)));
    }
    const Vertex f = next++;
    const Vertex p = next++;
    for (int i = 0; i < l; ++i) {
        const Vertex c = out.shaft[static_cast<std::size_t>(i)].front();
        for (int j = i + 1; j < l; ++j) {
            edges.emplace_back(c, out.shaft[static_cast<std::size_t>(j)].front());
        }
        for (int j = i; j < l; ++j) {
            for (Vertex y : out.teeth[static_cast<std::size_t>(j)]) {
                edges.emplace_back(c, y);
            }
        }
        edges.emplace_back(c, f);
        edges.emplace_back(c, p);
    }
    for (const auto &tooth : out.teeth) {
        for (Vertex y : tooth) {
            edges.emplace_back(y, p);
        }
    }
    for (int j = 0; j < std::max(1, k_context); ++j) {
        const Vertex q = next++;
        const Vertex s = next++;
        const Vertex t = next++;
        edges.emplace_back(p, q);
        edges.emplace_back(q, s);
        edges.emplace_back(s, t);
        edges.emplace_back(p, t);
    }
    for (auto &[u, v] : edges) {
        if (u > v) {
            std::swap(u, v);
        }
    }
    std::vector<Vertex> vertices(static_cast<std::size_t>(next));
    for (Vertex v = 0; v < next; ++v) {
        vertices[static_cast<std::size_t>(v)] = v;
    }
    out.graph = Graph::from_edges(vertices, edges);
    out.attach_all = VertexSet{p};
    out.attach_shaft = VertexSet{f};
    return out;
}

}  // namespace tpk
