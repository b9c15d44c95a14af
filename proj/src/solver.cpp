#include "tpk/solver.hpp"

#include <algorithm>
#include <string>

#include "tpk/errors.hpp"
#include "tpk/tp_structure.hpp"

namespace tpk {

namespace {

bool legal(Variant variant, bool is_edge) {
    switch (variant) {
    case Variant::editing:
        return true;
    case Variant::completion:
        return !is_edge;
    case Variant::deletion:
        return is_edge;
    }
    return false;
}

class Searcher {
public:
    Searcher(const Graph &g, Variant variant) : g_(g), variant_(variant) {}

    bool search(int budget) {
        const auto obs = find_obstruction(g_);
        if (!obs) {
            return true;
        }
        if (budget == 0) {
            return false;
        }
        // Any trivially perfect target differs from g on some pair of the
        // obstruction, so branching on its six pairs is exhaustive.
        std::vector<Edge> pairs;
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = i + 1; j < 4; ++j) {
                pairs.emplace_back(std::min(obs->witnesses[i], obs->witnesses[j]),
                                   std::max(obs->witnesses[i], obs->witnesses[j]));
            }
        }
        std::sort(pairs.begin(), pairs.end());
        for (const auto &[u, v] : pairs) {
            if (std::any_of(chosen_.begin(), chosen_.end(), [&](const Edit &e) { return e.u == u && e.v == v; })) {
                continue;
            }
            const bool is_edge = g_.has_edge(u, v);
            if (!legal(variant_, is_edge)) {
                continue;
            }
            toggle(u, v, is_edge);
            chosen_.push_back({u, v, is_edge ? EditKind::remove : EditKind::add});
            if (search(budget - 1)) {
                return true;
            }
            chosen_.pop_back();
            toggle(u, v, !is_edge);
        }
        return false;
    }

    EditSet edits() const {
        EditSet out;
        for (const auto &e : chosen_) {
            out.insert(e.u, e.v, e.kind);
        }
        return out;
    }

private:
    void toggle(Vertex u, Vertex v, bool is_edge) {
        if (is_edge) {
            g_.remove_edge(u, v);
        } else {
            g_.add_edge(u, v);
        }
    }

    Graph g_;
    Variant variant_;
    std::vector<Edit> chosen_;
};

}  // namespace

std::optional<Solution> solve(const Instance &inst) {
    for (int k = 0; k <= inst.budget; ++k) {
        Searcher s(inst.graph, inst.variant);
        if (s.search(k)) {
            Solution sol{s.edits(), 0};
            sol.size = sol.edits.size();
            return sol;
        }
    }
    return std::nullopt;
}

bool verify_edit(const Graph &g, const EditSet &f, Variant variant, int k) {
    if (k < 0 || f.size() > static_cast<std::size_t>(k)) {
        return false;
    }
    for (const auto &e : f) {
        if (!g.contains(e.u) || !g.contains(e.v)) {
            return false;
        }
        const bool is_edge = g.has_edge(e.u, e.v);
        if (is_edge != (e.kind == EditKind::remove) || !legal(variant, is_edge)) {
            return false;
        }
    }
    return is_trivially_perfect(apply_edits(g, f));
}

std::vector<EditSet> enumerate_editions(const Graph &g, int k, Variant variant) {
    if (k < 0 || k > 2) {
        throw InputError("enumerate_editions supports 0 <= k <= 2");
    }
    std::vector<Edit> pairs;
    const auto &vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const bool is_edge = g.has_edge(vs[i], vs[j]);
            if (legal(variant, is_edge)) {
                pairs.push_back({vs[i], vs[j], is_edge ? EditKind::remove : EditKind::add});
            }
        }
    }
    const std::size_t p = pairs.size();
    const std::size_t subsets = 1 + (k >= 1 ? p : 0) + (k >= 2 ? p * (p - 1) / 2 : 0);
    if (subsets > max_edition_subsets) {
        throw InputError("enumerate_editions: " + std::to_string(subsets) + " candidate subsets exceed the limit");
    }
    std::vector<EditSet> out;
    auto consider = [&](std::initializer_list<const Edit *> chosen) {
        EditSet f;
        for (const Edit *e : chosen) {
            f.insert(e->u, e->v, e->kind);
        }
        if (is_trivially_perfect(apply_edits(g, f))) {
            out.push_back(std::move(f));
        }
    };
    consider({});
    if (k >= 1) {
        for (const auto &a : pairs) {
            consider({&a});
        }
    }
    if (k >= 2) {
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            for (std::size_t j = i + 1; j < pairs.size(); ++j) {
                consider({&pairs[i], &pairs[j]});
            }
        }
    }
    return out;
}

}  // namespace tpk
