#pragma once

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "tpk/graph.hpp"

namespace tpk {

/// A clique shaft C_1..C_l of critical cliques with teeth R_1..R_l:
/// pairwise non-adjacent trivially perfect modules, where C_i sees exactly
/// R_i..R_l inside the teeth. Outside the comb, shaft vertices see
/// attach_all and attach_shaft; teeth vertices see attach_all only.
struct Comb {
    std::vector<VertexSet> shaft;
    std::vector<VertexSet> teeth;
    VertexSet attach_all;
    VertexSet attach_shaft;

    std::size_t length() const noexcept { return shaft.size(); }
    VertexSet shaft_union() const;
    VertexSet teeth_union() const;

    friend bool operator==(const Comb &, const Comb &) = default;
};

/// Returns the comb with derived attachment sets if every comb condition
/// holds (including trivial perfection of the comb's induced subgraph).
std::optional<Comb> validate_comb(const Graph &g, const std::vector<VertexSet> &shaft,
                                  const std::vector<VertexSet> &teeth);

/// Ordered pairs (predecessor, successor) of indices into a critical clique
/// partition, sorted.
struct PrecedenceRelation {
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    friend bool operator==(const PrecedenceRelation &, const PrecedenceRelation &) = default;
};

/// Pairs (C', C'') of critical cliques with N[C''] a proper subset of N[C']
/// whose difference R is a non-empty trivially perfect module and N(R) is a
/// proper subset of N(C''). Indices refer to `cliques`, which must be
/// critical_clique_partition(g).
PrecedenceRelation build_precedence(const Graph &g, const Partition &cliques);
PrecedenceRelation build_precedence(const Graph &g);

/// Drops every incoming pair of a node with two or more predecessors.
PrecedenceRelation prune_precedence(const PrecedenceRelation &rel);

/// All critical combs (inclusion-wise maximal combs whose shaft, teeth and
/// shaft-only attachment together are not a trivially perfect module),
/// sorted by (shaft union, teeth union).
std::vector<Comb> enumerate_critical_combs(const Graph &g);

/// `shaft [..] [..] teeth [..] [..] vp [..] vf [..]`, vertices 1-based.
void write_comb(std::ostream &out, const Comb &c);

}  // namespace tpk
