#include "tpk/edit_set.hpp"

#include <algorithm>
#include <string>

#include "tpk/errors.hpp"

namespace tpk {

EditSet::EditSet(std::initializer_list<Edit> edits) {
    for (const auto &e : edits) {
        insert(e.u, e.v, e.kind);
    }
}

void EditSet::insert(Vertex u, Vertex v, EditKind kind) {
    if (u == v) {
        throw InputError("edit on a self-pair " + std::to_string(u));
    }
    if (u > v) {
        std::swap(u, v);
    }
    auto it = std::lower_bound(edits_.begin(), edits_.end(), std::pair{u, v},
                               [](const Edit &e, const std::pair<Vertex, Vertex> &p) { return std::pair{e.u, e.v} < p; });
    if (it != edits_.end() && it->u == u && it->v == v) {
        throw InputError("pair " + std::to_string(u) + "-" + std::to_string(v) + " edited twice");
    }
    edits_.insert(it, Edit{u, v, kind});
}

bool EditSet::contains_pair(Vertex u, Vertex v) const {
    if (u > v) {
        std::swap(u, v);
    }
    return std::any_of(edits_.begin(), edits_.end(), [&](const Edit &e) { return e.u == u && e.v == v; });
}

bool EditSet::touches(const VertexSet &s) const {
    return std::any_of(edits_.begin(), edits_.end(), [&](const Edit &e) { return s.contains(e.u) || s.contains(e.v); });
}

std::string_view to_string(Variant v) {
    switch (v) {
    case Variant::editing:
        return "editing";
    case Variant::completion:
        return "completion";
    case Variant::deletion:
        return "deletion";
    }
    return "editing";
}

std::optional<Variant> parse_variant(std::string_view s) {
    if (s == "editing") {
        return Variant::editing;
    }
    if (s == "completion") {
        return Variant::completion;
    }
    if (s == "deletion") {
        return Variant::deletion;
    }
    return std::nullopt;
}

// Symmetric difference: a pair is toggled whatever its tag says, so applying
// the same set twice restores the graph.
Graph apply_edits(const Graph &g, const EditSet &f) {
    for (const auto &e : f) {
        if (!g.contains(e.u) || !g.contains(e.v)) {
            throw InputError("edit endpoint not in graph: " + std::to_string(e.u) + "-" + std::to_string(e.v));
        }
    }
    Graph h = g;
    for (const auto &e : f) {
        if (h.has_edge(e.u, e.v)) {
            h.remove_edge(e.u, e.v);
        } else {
            h.add_edge(e.u, e.v);
        }
    }
    return h;
}

}  // namespace tpk
