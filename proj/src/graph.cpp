#include "tpk/graph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "tpk/errors.hpp"

namespace tpk {

VertexSet::VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::from_sorted(std::vector<Vertex> members) {
    VertexSet s;
    s.members_ = std::move(members);
    return s;
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::includes(const VertexSet &other) const {
    return std::includes(members_.begin(), members_.end(), other.members_.begin(), other.members_.end());
}

bool VertexSet::intersects(const VertexSet &other) const {
    auto a = members_.begin();
    auto b = other.members_.begin();
    while (a != members_.end() && b != other.members_.end()) {
        if (*a < *b) {
            ++a;
        } else if (*b < *a) {
            ++b;
        } else {
            return true;
        }
    }
    return false;
}

VertexSet set_union(const VertexSet &a, const VertexSet &b) {
    std::vector<Vertex> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet::from_sorted(std::move(out));
}

VertexSet set_intersection(const VertexSet &a, const VertexSet &b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet::from_sorted(std::move(out));
}

VertexSet set_difference(const VertexSet &a, const VertexSet &b) {
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet::from_sorted(std::move(out));
}

Graph::Graph(Vertex n) {
    if (n < 0) {
        throw InputError("negative vertex count");
    }
    adj_.resize(static_cast<std::size_t>(n));
    present_.assign(static_cast<std::size_t>(n), 1);
    vertices_.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        vertices_[static_cast<std::size_t>(v)] = v;
    }
}

Graph Graph::from_edges(const std::vector<Vertex> &vertices, const std::vector<Edge> &edges) {
    Graph g;
    for (Vertex v : vertices) {
        g.add_vertex(v);
    }
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v) {
            throw InputError("self-loop on vertex " + std::to_string(u));
        }
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto &nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
            throw InputError("duplicate edge");
        }
    }
    g.num_edges_ = edges.size();
    return g;
}

bool Graph::contains(Vertex v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < present_.size() && present_[static_cast<std::size_t>(v)];
}

void Graph::check_vertex(Vertex v) const {
    if (!contains(v)) {
        throw InputError("unknown vertex " + std::to_string(v));
    }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) {
        return false;
    }
    const auto &a = adj_[static_cast<std::size_t>(u)];
    const auto &b = adj_[static_cast<std::size_t>(v)];
    if (a.size() <= b.size()) {
        return std::binary_search(a.begin(), a.end(), v);
    }
    return std::binary_search(b.begin(), b.end(), u);
}

void Graph::add_vertex(Vertex v) {
    if (v < 0) {
        throw InputError("negative vertex id");
    }
    if (contains(v)) {
        return;
    }
    if (static_cast<std::size_t>(v) >= adj_.size()) {
        adj_.resize(static_cast<std::size_t>(v) + 1);
        present_.resize(static_cast<std::size_t>(v) + 1, 0);
    }
    present_[static_cast<std::size_t>(v)] = 1;
    vertices_.insert(std::lower_bound(vertices_.begin(), vertices_.end(), v), v);
}

void Graph::remove_vertex(Vertex v) {
    remove_vertices(VertexSet{v});
}

void Graph::remove_vertices(const VertexSet &vs) {
    std::vector<Vertex> touched;
    for (Vertex v : vs) {
        check_vertex(v);
    }
    for (Vertex v : vs) {
        auto &nbrs = adj_[static_cast<std::size_t>(v)];
        for (Vertex u : nbrs) {
            if (!vs.contains(u)) {
                touched.push_back(u);
                --num_edges_;
            } else if (u > v) {
                --num_edges_;
            }
        }
        nbrs.clear();
        nbrs.shrink_to_fit();
        present_[static_cast<std::size_t>(v)] = 0;
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (Vertex u : touched) {
        auto &nbrs = adj_[static_cast<std::size_t>(u)];
        nbrs.erase(std::remove_if(nbrs.begin(), nbrs.end(), [&](Vertex w) { return vs.contains(w); }), nbrs.end());
    }
    std::vector<Vertex> kept;
    kept.reserve(vertices_.size());
    std::set_difference(vertices_.begin(), vertices_.end(), vs.begin(), vs.end(), std::back_inserter(kept));
    vertices_ = std::move(kept);
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw InputError("self-loop on vertex " + std::to_string(u));
    }
    auto &a = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it != a.end() && *it == v) {
        return;
    }
    a.insert(it, v);
    auto &b = adj_[static_cast<std::size_t>(v)];
    b.insert(std::lower_bound(b.begin(), b.end(), u), u);
    ++num_edges_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    auto &a = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it == a.end() || *it != v) {
        return;
    }
    a.erase(it);
    auto &b = adj_[static_cast<std::size_t>(v)];
    b.erase(std::lower_bound(b.begin(), b.end(), u));
    --num_edges_;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (Vertex u : vertices_) {
        for (Vertex v : adj_[static_cast<std::size_t>(u)]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

bool operator==(const Graph &a, const Graph &b) {
    if (a.vertices_ != b.vertices_ || a.num_edges_ != b.num_edges_) {
        return false;
    }
    for (Vertex v : a.vertices_) {
        if (a.adj_[static_cast<std::size_t>(v)] != b.adj_[static_cast<std::size_t>(v)]) {
            return false;
        }
    }
    return true;
}

Graph induced_subgraph(const Graph &g, const VertexSet &s) {
    Graph h;
    for (Vertex v : s) {
        if (!g.contains(v)) {
            throw InputError("unknown vertex " + std::to_string(v));
        }
    }
    std::vector<Edge> edges;
    for (Vertex u : s) {
        for (Vertex v : g.neighbors(u)) {
            if (u < v && s.contains(v)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(s.members(), edges);
}

bool is_module(const Graph &g, const VertexSet &m) {
    if (m.empty()) {
        throw InputError("module test on an empty set");
    }
    for (Vertex v : m) {
        if (!g.contains(v)) {
            throw InputError("unknown vertex " + std::to_string(v));
        }
    }
    auto outside = [&](Vertex v) {
        std::vector<Vertex> out;
        for (Vertex u : g.neighbors(v)) {
            if (!m.contains(u)) {
                out.push_back(u);
            }
        }
        return out;
    };
    const auto reference = outside(m.front());
    for (Vertex v : m) {
        if (g.degree(v) < reference.size() || outside(v) != reference) {
            return false;
        }
    }
    return true;
}

Partition critical_clique_partition(const Graph &g) {
    std::map<std::vector<Vertex>, std::vector<Vertex>> by_key;
    for (Vertex v : g.vertices()) {
        auto nbrs = g.neighbors(v);
        std::vector<Vertex> key(nbrs.begin(), nbrs.end());
        key.insert(std::lower_bound(key.begin(), key.end(), v), v);
        by_key[std::move(key)].push_back(v);
    }
    Partition out;
    out.reserve(by_key.size());
    for (auto &[key, members] : by_key) {
        out.push_back(VertexSet::from_sorted(std::move(members)));
    }
    std::sort(out.begin(), out.end(), [](const VertexSet &a, const VertexSet &b) { return a.front() < b.front(); });
    return out;
}

bool is_nested_family(const std::vector<VertexSet> &sets) {
    std::vector<const VertexSet *> order;
    order.reserve(sets.size());
    for (const auto &s : sets) {
        order.push_back(&s);
    }
    // A family is a chain iff consecutive sets are nested once sorted by size.
    std::stable_sort(order.begin(), order.end(), [](const VertexSet *a, const VertexSet *b) { return a->size() < b->size(); });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (!order[i]->includes(*order[i - 1])) {
            return false;
        }
    }
    return true;
}

std::vector<VertexSet> connected_components(const Graph &g) {
    std::vector<char> seen(static_cast<std::size_t>(g.id_bound()), 0);
    std::vector<VertexSet> out;
    std::vector<Vertex> stack;
    for (Vertex s : g.vertices()) {
        if (seen[static_cast<std::size_t>(s)]) {
            continue;
        }
        std::vector<Vertex> comp;
        seen[static_cast<std::size_t>(s)] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex u : g.neighbors(v)) {
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    stack.push_back(u);
                }
            }
        }
        out.emplace_back(std::move(comp));
    }
    return out;
}

VertexSet neighborhood(const Graph &g, const VertexSet &s) {
    std::vector<Vertex> out;
    for (Vertex v : s) {
        for (Vertex u : g.neighbors(v)) {
            if (!s.contains(u)) {
                out.push_back(u);
            }
        }
    }
    return VertexSet(std::move(out));
}

VertexSet closed_neighborhood(const Graph &g, const VertexSet &s) {
    return set_union(s, neighborhood(g, s));
}

bool is_clique(const Graph &g, const VertexSet &s) {
    for (Vertex v : s) {
        std::size_t inside = 0;
        for (Vertex u : g.neighbors(v)) {
            inside += s.contains(u) ? 1 : 0;
        }
        if (inside + 1 != s.size()) {
            return false;
        }
    }
    return true;
}

}  // namespace tpk
