#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tpk/graph.hpp"

namespace tpk {

enum class ObstructionKind { p4, c4 };

/// Induced P4 (witnesses in path order) or C4 (witnesses in cycle order).
/// Canonical orientation: a P4 starts at its smaller endpoint; a C4 starts at
/// its smallest vertex and continues towards the smaller of its two neighbors.
struct Obstruction {
    ObstructionKind kind;
    std::array<Vertex, 4> witnesses;

    friend bool operator==(const Obstruction &, const Obstruction &) = default;
};

/// Checks the witnesses induce exactly the claimed P4 or C4.
bool is_valid_obstruction(const Graph &g, const Obstruction &o);

class NotTriviallyPerfect : public std::runtime_error {
public:
    explicit NotTriviallyPerfect(Obstruction o);
    const Obstruction &obstruction() const noexcept { return obstruction_; }

private:
    Obstruction obstruction_;
};

inline constexpr int no_parent = -1;

struct UcdNode {
    int parent = no_parent;
    std::vector<int> children;
    VertexSet bag;
};

/// Universal clique decomposition: a rooted forest whose bags partition the
/// vertex set. Two vertices are adjacent iff their bags coincide or one bag
/// is an ancestor of the other.
struct Ucd {
    std::vector<UcdNode> nodes;
    std::vector<int> roots;

    std::size_t leaf_count() const;
};

bool is_trivially_perfect(const Graph &g);
/// Trivial perfection of the subgraph induced by subset.
bool is_trivially_perfect(const Graph &g, const VertexSet &subset);

std::optional<Obstruction> find_obstruction(const Graph &g);

/// Throws NotTriviallyPerfect when g has an obstruction. Nodes are numbered
/// in pre-order; roots and children are ordered by the smallest vertex of
/// their subtree.
Ucd compute_ucd(const Graph &g);

/// Inverse of compute_ucd. Throws InputError on a malformed forest, an empty
/// or overlapping bag, or an internal node with a single child.
Graph realize_ucd(const Ucd &d);

/// One vertex (the smallest) from each leaf bag; a maximum independent set.
/// Throws NotTriviallyPerfect when g is not trivially perfect.
VertexSet tp_max_independent_set(const Graph &g);

/// Evaluates the maximal-clique characterization with respect to s. Throws
/// InputError when s is not a maximal clique of g.
bool check_clique_decomposition(const Graph &g, const VertexSet &s);

/// `node <id> parent <pid|-> bag <v1,v2,...>` per node in pre-order, with
/// vertices written 1-based.
void write_ucd(std::ostream &out, const Ucd &d);

}  // namespace tpk
