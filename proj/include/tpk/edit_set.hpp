#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "tpk/graph.hpp"

namespace tpk {

enum class EditKind { add, remove };

/// A vertex pair (u < v) tagged with the modification applied to it.
struct Edit {
    Vertex u;
    Vertex v;
    EditKind kind;

    friend bool operator==(const Edit &, const Edit &) = default;
};

/// Set of edits with at most one entry per unordered pair, kept sorted by pair.
class EditSet {
public:
    EditSet() = default;
    EditSet(std::initializer_list<Edit> edits);

    /// Normalizes the pair order. Throws InputError on a repeated pair or u == v.
    void insert(Vertex u, Vertex v, EditKind kind);
    bool contains_pair(Vertex u, Vertex v) const;
    /// True if some pair has an endpoint in s.
    bool touches(const VertexSet &s) const;

    std::size_t size() const noexcept { return edits_.size(); }
    bool empty() const noexcept { return edits_.empty(); }
    auto begin() const noexcept { return edits_.begin(); }
    auto end() const noexcept { return edits_.end(); }

    friend bool operator==(const EditSet &, const EditSet &) = default;

private:
    std::vector<Edit> edits_;
};

/// Modification problem variant.
enum class Variant { editing, completion, deletion };

std::string_view to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view s);

/// The graph with add-pairs inserted and delete-pairs removed.
Graph apply_edits(const Graph &g, const EditSet &f);

}  // namespace tpk
