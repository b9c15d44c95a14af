#include "tpk/modular_decomposition.hpp"

#include <algorithm>

#include "local_graph.hpp"

namespace tpk {

namespace {

class Decomposer {
public:
    explicit Decomposer(const LocalGraph &lg)
        : lg_(lg), mark_(lg.size(), 0), part_of_(lg.size(), -1) {}

    ModularDecomposition run() {
        ModularDecomposition md;
        if (lg_.size() == 0) {
            return md;
        }
        std::vector<int> all(lg_.size());
        for (std::size_t i = 0; i < all.size(); ++i) {
            all[i] = static_cast<int>(i);
        }
        struct Work {
            std::vector<int> members;
            int parent;
        };
        std::vector<Work> stack{{std::move(all), -1}};
        while (!stack.empty()) {
            Work item = std::move(stack.back());
            stack.pop_back();
            const int id = static_cast<int>(md.nodes.size());
            std::vector<Vertex> members;
            members.reserve(item.members.size());
            for (int v : item.members) {
                members.push_back(lg_.ids[static_cast<std::size_t>(v)]);
            }
            std::sort(members.begin(), members.end());
            md.nodes.push_back({MdKind::leaf, item.parent, {}, VertexSet::from_sorted(std::move(members))});
            if (item.parent >= 0) {
                md.nodes[static_cast<std::size_t>(item.parent)].children.push_back(id);
            }
            if (item.members.size() == 1) {
                continue;
            }
            std::vector<std::vector<int>> parts = components(item.members);
            MdKind kind = MdKind::parallel;
            if (parts.size() == 1) {
                parts = co_components(item.members);
                kind = MdKind::series;
                if (parts.size() == 1) {
                    parts = maximal_strong_modules(item.members);
                    kind = MdKind::prime;
                }
            }
            md.nodes[static_cast<std::size_t>(id)].kind = kind;
            for (auto &p : parts) {
                std::sort(p.begin(), p.end());
            }
            std::sort(parts.begin(), parts.end(), [](const auto &a, const auto &b) { return a.front() < b.front(); });
            // Reverse push keeps pre-order with children ascending.
            for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
                stack.push_back({std::move(*it), id});
            }
        }
        return md;
    }

private:
    int fresh() { return ++token_; }

    const std::vector<int> &adj(int v) const { return lg_.adj[static_cast<std::size_t>(v)]; }

    std::vector<std::vector<int>> components(const std::vector<int> &members) {
        const int scope = fresh();
        for (int v : members) {
            mark_[static_cast<std::size_t>(v)] = scope;
        }
        std::vector<std::vector<int>> out;
        std::vector<int> stack;
        for (int s : members) {
            if (mark_[static_cast<std::size_t>(s)] != scope) {
                continue;
            }
            const int seen = fresh();
            out.emplace_back();
            mark_[static_cast<std::size_t>(s)] = seen;
            stack.push_back(s);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                out.back().push_back(v);
                for (int u : adj(v)) {
                    if (mark_[static_cast<std::size_t>(u)] == scope) {
                        mark_[static_cast<std::size_t>(u)] = seen;
                        stack.push_back(u);
                    }
                }
            }
        }
        return out;
    }

    // Components of the complement, via the shrinking-unvisited-list scan.
    std::vector<std::vector<int>> co_components(const std::vector<int> &members) {
        std::vector<int> unvisited = members;
        std::vector<std::vector<int>> out;
        std::vector<int> queue;
        std::vector<int> keep;
        while (!unvisited.empty()) {
            out.emplace_back();
            queue.assign(1, unvisited.back());
            unvisited.pop_back();
            while (!queue.empty()) {
                int v = queue.back();
                queue.pop_back();
                out.back().push_back(v);
                const int nb = fresh();
                for (int u : adj(v)) {
                    mark_[static_cast<std::size_t>(u)] = nb;
                }
                keep.clear();
                for (int u : unvisited) {
                    if (mark_[static_cast<std::size_t>(u)] == nb) {
                        keep.push_back(u);
                    } else {
                        queue.push_back(u);
                    }
                }
                unvisited.swap(keep);
            }
        }
        return out;
    }

    // For a set inducing a connected and co-connected graph: refine S \ {v}
    // into the maximal modules avoiding v, then grow the maximal strong module
    // containing v over the quotient.
    std::vector<std::vector<int>> maximal_strong_modules(const std::vector<int> &members) {
        const int v = members.front();
        const int scope = fresh();
        for (int u : members) {
            mark_[static_cast<std::size_t>(u)] = scope;
        }
        std::vector<std::vector<int>> parts(2);
        {
            const int nb = fresh();
            for (int u : adj(v)) {
                if (mark_[static_cast<std::size_t>(u)] == scope) {
                    mark_[static_cast<std::size_t>(u)] = nb;
                }
            }
            for (int u : members) {
                if (u == v) {
                    continue;
                }
                parts[mark_[static_cast<std::size_t>(u)] == nb ? 0 : 1].push_back(u);
                mark_[static_cast<std::size_t>(u)] = scope;
            }
            if (parts[1].empty()) {
                parts.pop_back();
            }
            if (parts[0].empty()) {
                parts.erase(parts.begin());
            }
        }
        for (std::size_t p = 0; p < parts.size(); ++p) {
            for (int u : parts[p]) {
                part_of_[static_cast<std::size_t>(u)] = static_cast<int>(p);
            }
        }
        std::vector<char> queued(lg_.size(), 0);
        std::vector<int> pivots;
        for (int u : members) {
            if (u != v) {
                pivots.push_back(u);
                queued[static_cast<std::size_t>(u)] = 1;
            }
        }
        std::vector<int> hits(parts.size(), 0);
        std::vector<int> touched;
        const int in_scope = scope;
        while (!pivots.empty()) {
            const int w = pivots.back();
            pivots.pop_back();
            queued[static_cast<std::size_t>(w)] = 0;
            const int own = part_of_[static_cast<std::size_t>(w)];
            const int hit = fresh();
            touched.clear();
            for (int u : adj(w)) {
                if (u == v || !in_member_scope(u, in_scope, hit)) {
                    continue;
                }
                const int p = part_of_[static_cast<std::size_t>(u)];
                if (p == own) {
                    continue;
                }
                mark_[static_cast<std::size_t>(u)] = hit;
                if (hits[static_cast<std::size_t>(p)]++ == 0) {
                    touched.push_back(p);
                }
            }
            for (int p : touched) {
                auto &part = parts[static_cast<std::size_t>(p)];
                const int count = hits[static_cast<std::size_t>(p)];
                hits[static_cast<std::size_t>(p)] = 0;
                if (static_cast<std::size_t>(count) == part.size()) {
                    continue;
                }
                std::vector<int> inside;
                std::vector<int> outside;
                for (int u : part) {
                    (mark_[static_cast<std::size_t>(u)] == hit ? inside : outside).push_back(u);
                }
                const int fresh_part = static_cast<int>(parts.size());
                for (int u : inside) {
                    part_of_[static_cast<std::size_t>(u)] = fresh_part;
                }
                part = std::move(outside);
                parts.push_back(std::move(inside));
                hits.push_back(0);
                for (int u : parts[static_cast<std::size_t>(p)]) {
                    enqueue(u, queued, pivots);
                }
                for (int u : parts.back()) {
                    enqueue(u, queued, pivots);
                }
            }
            // Restore scope marks for the next pivot.
            for (int u : adj(w)) {
                if (mark_[static_cast<std::size_t>(u)] == hit) {
                    mark_[static_cast<std::size_t>(u)] = in_scope;
                }
            }
        }

        // Quotient: node 0 is v, node i + 1 is parts[i].
        const std::size_t r = parts.size();
        std::vector<std::vector<int>> qadj(r + 1);
        {
            for (int u : adj(v)) {
                if (mark_[static_cast<std::size_t>(u)] == in_scope) {
                    const int p = part_of_[static_cast<std::size_t>(u)];
                    if (qadj[0].empty() || qadj[0].back() != p + 1) {
                        qadj[0].push_back(p + 1);
                    }
                }
            }
            std::sort(qadj[0].begin(), qadj[0].end());
            qadj[0].erase(std::unique(qadj[0].begin(), qadj[0].end()), qadj[0].end());
            for (int q : qadj[0]) {
                qadj[static_cast<std::size_t>(q)].push_back(0);
            }
            for (std::size_t i = 0; i < r; ++i) {
                const int rep = parts[i].front();
                std::vector<int> nbrs;
                for (int u : adj(rep)) {
                    if (u != v && mark_[static_cast<std::size_t>(u)] == in_scope) {
                        const int p = part_of_[static_cast<std::size_t>(u)];
                        if (static_cast<std::size_t>(p) != i) {
                            nbrs.push_back(p + 1);
                        }
                    }
                }
                std::sort(nbrs.begin(), nbrs.end());
                nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
                auto &dst = qadj[i + 1];
                dst.insert(dst.end(), nbrs.begin(), nbrs.end());
            }
        }

        std::vector<char> in_mv(r + 1, 0);
        in_mv[0] = 1;
        for (std::size_t i = 1; i <= r; ++i) {
            if (in_mv[i]) {
                continue;
            }
            std::vector<char> trial = in_mv;
            trial[i] = 1;
            if (close_module(qadj, trial)) {
                in_mv = std::move(trial);
            }
        }

        std::vector<std::vector<int>> out;
        std::vector<int> mv{v};
        for (std::size_t i = 0; i < r; ++i) {
            if (in_mv[i + 1]) {
                mv.insert(mv.end(), parts[i].begin(), parts[i].end());
            } else {
                out.push_back(std::move(parts[i]));
            }
        }
        out.push_back(std::move(mv));
        return out;
    }

    bool in_member_scope(int u, int scope, int hit) const {
        const int m = mark_[static_cast<std::size_t>(u)];
        return m == scope || m == hit;
    }

    static void enqueue(int u, std::vector<char> &queued, std::vector<int> &pivots) {
        if (!queued[static_cast<std::size_t>(u)]) {
            queued[static_cast<std::size_t>(u)] = 1;
            pivots.push_back(u);
        }
    }

    // Grows `set` to the smallest module containing it. Returns false (and
    // leaves `set` unspecified) once it would cover the whole quotient.
    static bool close_module(const std::vector<std::vector<int>> &qadj, std::vector<char> &set) {
        const std::size_t total = qadj.size();
        std::vector<int> count(total, 0);
        std::size_t size = 0;
        for (std::size_t x = 0; x < total; ++x) {
            if (set[x]) {
                ++size;
                for (int y : qadj[x]) {
                    ++count[static_cast<std::size_t>(y)];
                }
            }
        }
        for (;;) {
            std::vector<int> splitters;
            for (std::size_t x = 0; x < total; ++x) {
                if (!set[x] && count[x] > 0 && static_cast<std::size_t>(count[x]) < size) {
                    splitters.push_back(static_cast<int>(x));
                }
            }
            if (splitters.empty()) {
                return size < total;
            }
            for (int x : splitters) {
                set[static_cast<std::size_t>(x)] = 1;
                for (int y : qadj[static_cast<std::size_t>(x)]) {
                    ++count[static_cast<std::size_t>(y)];
                }
            }
            size += splitters.size();
            if (size == total) {
                return false;
            }
        }
    }

    const LocalGraph &lg_;
    std::vector<int> mark_;
    std::vector<int> part_of_;
    int token_ = 0;
};

}  // namespace

ModularDecomposition modular_decomposition(const Graph &g) {
    LocalGraph lg(g, g.vertices());
    return Decomposer(lg).run();
}

}  // namespace tpk
