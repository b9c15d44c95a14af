#pragma once

#include <optional>
#include <vector>

#include "tpk/edit_set.hpp"
#include "tpk/graph.hpp"
#include "tpk/kernel.hpp"

namespace tpk {

struct Solution {
    EditSet edits;
    std::size_t size = 0;
};

/// Bounded search tree over obstruction pairs with iterative deepening, so
/// the returned witness has minimum size. Absent iff no edit of at most
/// budget pairs (legal for the variant) makes the graph trivially perfect.
std::optional<Solution> solve(const Instance &inst);

/// |f| <= k, every add is on a non-edge and every delete on an edge, only
/// kinds allowed by the variant occur, and g with f applied is trivially
/// perfect. Unknown endpoints yield false.
bool verify_edit(const Graph &g, const EditSet &f, Variant variant, int k);

inline constexpr std::size_t max_edition_subsets = 100000;

/// Every legal edit set of size at most k that makes g trivially perfect,
/// ordered by size, then lexicographically by pairs. Throws InputError for
/// k > 2 or when more than max_edition_subsets subsets would be tried
/// (n <= 10 always fits).
std::vector<EditSet> enumerate_editions(const Graph &g, int k, Variant variant);

}  // namespace tpk
