#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace tpk {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted set of vertex identifiers.
class VertexSet {
public:
    using const_iterator = std::vector<Vertex>::const_iterator;

    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> members);
    explicit VertexSet(std::vector<Vertex> members);

    /// Adopts an already sorted, duplicate-free vector.
    static VertexSet from_sorted(std::vector<Vertex> members);

    bool contains(Vertex v) const;
    /// True iff other is a subset of *this.
    bool includes(const VertexSet &other) const;
    bool intersects(const VertexSet &other) const;

    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    Vertex front() const { return members_.front(); }
    Vertex back() const { return members_.back(); }
    const_iterator begin() const noexcept { return members_.begin(); }
    const_iterator end() const noexcept { return members_.end(); }
    const std::vector<Vertex> &members() const noexcept { return members_; }

    friend bool operator==(const VertexSet &, const VertexSet &) = default;
    friend auto operator<=>(const VertexSet &, const VertexSet &) = default;

private:
    std::vector<Vertex> members_;
};

VertexSet set_union(const VertexSet &a, const VertexSet &b);
VertexSet set_intersection(const VertexSet &a, const VertexSet &b);
VertexSet set_difference(const VertexSet &a, const VertexSet &b);

/// Disjoint classes covering some universe.
using Partition = std::vector<VertexSet>;

/// Undirected simple graph over non-negative identifiers. Identifiers are
/// stable: removing a vertex never renumbers the others. Neighbor lists are
/// kept sorted ascending.
class Graph {
public:
    Graph() = default;
    /// Vertices 0..n-1, no edges.
    explicit Graph(Vertex n);

    /// Builds a graph from a vertex list and an edge list. Rejects self-loops,
    /// duplicate edges, negative ids and endpoints not in the vertex list.
    static Graph from_edges(const std::vector<Vertex> &vertices, const std::vector<Edge> &edges);

    bool contains(Vertex v) const noexcept;
    bool has_edge(Vertex u, Vertex v) const;

    void add_vertex(Vertex v);
    void remove_vertex(Vertex v);
    void remove_vertices(const VertexSet &vs);
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    std::span<const Vertex> neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    /// Present vertices, ascending.
    const std::vector<Vertex> &vertices() const noexcept { return vertices_; }
    std::size_t num_vertices() const noexcept { return vertices_.size(); }
    std::size_t num_edges() const noexcept { return num_edges_; }
    /// One past the largest identifier the graph can currently hold.
    Vertex id_bound() const noexcept { return static_cast<Vertex>(adj_.size()); }

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    /// Same vertex set and edge set; id_bound is not compared.
    friend bool operator==(const Graph &a, const Graph &b);

private:
    void check_vertex(Vertex v) const;

    std::vector<std::vector<Vertex>> adj_;
    std::vector<char> present_;
    std::vector<Vertex> vertices_;
    std::size_t num_edges_ = 0;
};

Graph induced_subgraph(const Graph &g, const VertexSet &s);

/// Members of m share their neighborhood outside m.
bool is_module(const Graph &g, const VertexSet &m);

/// Closed-neighborhood classes (maximal sets of true twins), ordered by
/// smallest member.
Partition critical_clique_partition(const Graph &g);

/// Every pair of sets is comparable under inclusion.
bool is_nested_family(const std::vector<VertexSet> &sets);

/// Components ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph &g);

/// Open neighborhood of a set: vertices outside s adjacent to some member.
VertexSet neighborhood(const Graph &g, const VertexSet &s);
/// s together with its open neighborhood.
VertexSet closed_neighborhood(const Graph &g, const VertexSet &s);

bool is_clique(const Graph &g, const VertexSet &s);

}  // namespace tpk
