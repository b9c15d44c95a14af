#pragma once

#include <algorithm>
#include <vector>

#include "tpk/graph.hpp"

namespace tpk {

/// Compact 0..n-1 copy of an induced subgraph, for algorithms that want dense
/// per-vertex arrays. Local index i corresponds to ids[i]; ids stay sorted so
/// local order matches identifier order.
struct LocalGraph {
    std::vector<Vertex> ids;
    std::vector<std::vector<int>> adj;

    LocalGraph(const Graph &g, const std::vector<Vertex> &subset) : ids(subset), adj(subset.size()) {
        const bool dense = subset.size() * 8 >= static_cast<std::size_t>(g.id_bound());
        std::vector<int> index;
        if (dense) {
            index.assign(static_cast<std::size_t>(g.id_bound()), -1);
            for (std::size_t i = 0; i < ids.size(); ++i) {
                index[static_cast<std::size_t>(ids[i])] = static_cast<int>(i);
            }
        }
        for (std::size_t i = 0; i < ids.size(); ++i) {
            for (Vertex u : g.neighbors(ids[i])) {
                int j = -1;
                if (dense) {
                    j = index[static_cast<std::size_t>(u)];
                } else {
                    auto it = std::lower_bound(ids.begin(), ids.end(), u);
                    if (it != ids.end() && *it == u) {
                        j = static_cast<int>(it - ids.begin());
                    }
                }
                if (j >= 0) {
                    adj[i].push_back(j);
                }
            }
        }
    }

    std::size_t size() const noexcept { return ids.size(); }

    bool adjacent(int a, int b) const {
        const auto &na = adj[static_cast<std::size_t>(a)];
        return std::binary_search(na.begin(), na.end(), b);
    }
};

}  // namespace tpk
