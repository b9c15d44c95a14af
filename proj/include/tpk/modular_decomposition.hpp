#pragma once

#include <vector>

#include "tpk/graph.hpp"

namespace tpk {

enum class MdKind { leaf, parallel, series, prime };

struct MdNode {
    MdKind kind;
    int parent;
    std::vector<int> children;
    VertexSet members;
};

/// Modular decomposition tree. Nodes are stored in pre-order (root first);
/// children are ordered by smallest member. Empty for the empty graph.
struct ModularDecomposition {
    std::vector<MdNode> nodes;
};

ModularDecomposition modular_decomposition(const Graph &g);

}  // namespace tpk
