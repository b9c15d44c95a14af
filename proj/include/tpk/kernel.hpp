#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tpk/edit_set.hpp"
#include "tpk/graph.hpp"

namespace tpk {

struct Instance {
    Graph graph;
    int budget = 0;
    Variant variant = Variant::editing;

    friend bool operator==(const Instance &, const Instance &) = default;
};

struct ReductionStep {
    int rule = 0;
    VertexSet removed;
    /// Only Rule 5 adds edges (u < v, sorted).
    std::vector<Edge> added_edges;
    std::string note;

    friend bool operator==(const ReductionStep &, const ReductionStep &) = default;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
};

using RuleOutcome = std::optional<std::pair<Instance, ReductionStep>>;

/// Rule 1: drop every connected component that is already trivially perfect.
RuleOutcome rule_tp_components(const Instance &inst);

/// Rule 2: shrink each critical clique larger than k+1 to its k+1 smallest
/// vertices.
RuleOutcome rule_truncate_critical_cliques(const Instance &inst);

/// Strong modules of the modular decomposition that induce a trivially
/// perfect graph, plus, for each parallel node, the union of its trivially
/// perfect children. Sorted, without duplicates.
std::vector<VertexSet> find_tp_module_candidates(const Graph &g);

/// Rule 3: inside a trivially perfect module whose maximum independent set
/// has at least 2k+5 vertices, keep only 2k+5 of them (the smallest of
/// tp_max_independent_set). Vertex-disjoint candidates are reduced together.
RuleOutcome rule_tp_module_independent_set(const Instance &inst);

/// Rule 4: cut a critical comb longer than 2k+2 down to its first 2k+2
/// shaft/tooth positions.
RuleOutcome rule_comb_shaft(const Instance &inst);

/// Rule 5: turn the teeth before position b of a critical comb into cliques
/// of at most k+1 vertices, with a (then b) chosen as large as possible.
RuleOutcome rule_comb_teeth(const Instance &inst);

/// Dispatch by rule number 1..5. Throws InputError otherwise.
RuleOutcome apply_rule(int rule, const Instance &inst);

/// Applies rules 1..5 in order, restarting at rule 1 after every change,
/// until none applies. The budget is never changed. Throws InputError on a
/// negative budget.
std::pair<Instance, ReductionTrace> kernelize(const Instance &inst);

/// Re-applies the recorded removals and edge additions to g.
Graph replay_trace(const Graph &g, const ReductionTrace &trace);

}  // namespace tpk
