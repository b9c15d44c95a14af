#include "tpk/kernel.hpp"

#include <algorithm>
#include <string>

#include "tpk/combs.hpp"
#include "tpk/errors.hpp"
#include "tpk/modular_decomposition.hpp"
#include "tpk/tp_structure.hpp"

namespace tpk {

namespace {

std::pair<Instance, ReductionStep> removal_step(const Instance &inst, int rule, std::vector<Vertex> removed,
                                                std::string note) {
    ReductionStep step;
    step.rule = rule;
    step.removed = VertexSet(std::move(removed));
    step.note = std::move(note);
    Instance out = inst;
    out.graph.remove_vertices(step.removed);
    return {std::move(out), std::move(step)};
}

// Per modular-decomposition node: does it induce a TP graph, a clique, and
// how large is its maximum independent set (meaningful for TP nodes only).
struct MdSummary {
    bool tp = false;
    bool clique = false;
    std::size_t alpha = 0;
};

std::vector<MdSummary> summarize(const ModularDecomposition &md) {
    std::vector<MdSummary> sum(md.nodes.size());
    for (std::size_t idx = md.nodes.size(); idx-- > 0;) {
        const auto &node = md.nodes[idx];
        auto &s = sum[idx];
        switch (node.kind) {
        case MdKind::leaf:
            s = {true, true, 1};
            break;
        case MdKind::parallel:
            s = {true, false, 0};
            for (int c : node.children) {
                s.tp = s.tp && sum[static_cast<std::size_t>(c)].tp;
                s.alpha += sum[static_cast<std::size_t>(c)].alpha;
            }
            break;
        case MdKind::series: {
            // A join is TP iff every side is TP and at most one side has a
            // non-edge (two would form a C4).
            s = {true, true, 0};
            int non_cliques = 0;
            for (int c : node.children) {
                const auto &cs = sum[static_cast<std::size_t>(c)];
                s.tp = s.tp && cs.tp;
                s.clique = s.clique && cs.clique;
                non_cliques += cs.clique ? 0 : 1;
                s.alpha = std::max(s.alpha, cs.alpha);
            }
            s.tp = s.tp && non_cliques <= 1;
            break;
        }
        case MdKind::prime:
            s = {false, false, 0};
            break;
        }
    }
    return sum;
}

struct Candidate {
    VertexSet members;
    std::size_t alpha;
};

std::vector<Candidate> tp_module_candidates(const Graph &g) {
    const ModularDecomposition md = modular_decomposition(g);
    const std::vector<MdSummary> sum = summarize(md);
    std::vector<Candidate> out;
    for (std::size_t i = 0; i < md.nodes.size(); ++i) {
        const auto &node = md.nodes[i];
        if (sum[i].tp) {
            out.push_back({node.members, sum[i].alpha});
            continue;
        }
        if (node.kind != MdKind::parallel) {
            continue;
        }
        std::vector<Vertex> merged;
        std::size_t alpha = 0;
        for (int c : node.children) {
            const auto ci = static_cast<std::size_t>(c);
            if (sum[ci].tp) {
                merged.insert(merged.end(), md.nodes[ci].members.begin(), md.nodes[ci].members.end());
                alpha += sum[ci].alpha;
            }
        }
        if (!merged.empty()) {
            out.push_back({VertexSet(std::move(merged)), alpha});
        }
    }
    std::sort(out.begin(), out.end(), [](const Candidate &a, const Candidate &b) { return a.members < b.members; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Candidate &a, const Candidate &b) { return a.members == b.members; }),
              out.end());
    return out;
}

std::size_t shaft_keep(int budget) { return 2 * static_cast<std::size_t>(budget) + 2; }

}  // namespace

RuleOutcome rule_tp_components(const Instance &inst) {
    std::vector<Vertex> removed;
    std::size_t count = 0;
    for (const auto &comp : connected_components(inst.graph)) {
        if (is_trivially_perfect(inst.graph, comp)) {
            removed.insert(removed.end(), comp.begin(), comp.end());
            ++count;
        }
    }
    if (count == 0) {
        return std::nullopt;
    }
    return removal_step(inst, 1, std::move(removed),
                        "removed " + std::to_string(count) + " trivially perfect component(s)");
}

RuleOutcome rule_truncate_critical_cliques(const Instance &inst) {
    const auto keep = static_cast<std::size_t>(inst.budget) + 1;
    std::vector<Vertex> removed;
    std::size_t count = 0;
    for (const auto &k : critical_clique_partition(inst.graph)) {
        if (k.size() > keep) {
            removed.insert(removed.end(), k.begin() + static_cast<std::ptrdiff_t>(keep), k.end());
            ++count;
        }
    }
    if (count == 0) {
        return std::nullopt;
    }
    return removal_step(inst, 2, std::move(removed),
                        "truncated " + std::to_string(count) + " critical clique(s) to " + std::to_string(keep));
}

std::vector<VertexSet> find_tp_module_candidates(const Graph &g) {
    std::vector<VertexSet> out;
    for (auto &c : tp_module_candidates(g)) {
        out.push_back(std::move(c.members));
    }
    return out;
}

RuleOutcome rule_tp_module_independent_set(const Instance &inst) {
    const std::size_t threshold = 2 * static_cast<std::size_t>(inst.budget) + 5;
    std::vector<Candidate> cands = tp_module_candidates(inst.graph);
    // Largest first, so a reduced module swallows its nested candidates.
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Candidate &a, const Candidate &b) { return a.members.size() > b.members.size(); });
    std::vector<char> used(static_cast<std::size_t>(inst.graph.id_bound()), 0);
    std::vector<Vertex> removed;
    std::size_t count = 0;
    for (const auto &c : cands) {
        if (c.alpha < threshold || c.members.size() == threshold) {
            continue;
        }
        if (std::any_of(c.members.begin(), c.members.end(),
                        [&](Vertex v) { return used[static_cast<std::size_t>(v)] != 0; })) {
            continue;
        }
        const VertexSet mis = tp_max_independent_set(induced_subgraph(inst.graph, c.members));
        const VertexSet keep = VertexSet::from_sorted(
            std::vector<Vertex>(mis.begin(), mis.begin() + static_cast<std::ptrdiff_t>(threshold)));
        const VertexSet drop = set_difference(c.members, keep);
        for (Vertex v : c.members) {
            used[static_cast<std::size_t>(v)] = 1;
        }
        removed.insert(removed.end(), drop.begin(), drop.end());
        ++count;
    }
    if (count == 0) {
        return std::nullopt;
    }
    return removal_step(inst, 3, std::move(removed),
                        "kept independent sets of size " + std::to_string(threshold) + " in " +
                            std::to_string(count) + " module(s)");
}

RuleOutcome rule_comb_shaft(const Instance &inst) {
    const std::size_t keep = shaft_keep(inst.budget);
    for (const auto &comb : enumerate_critical_combs(inst.graph)) {
        if (comb.length() <= keep) {
            continue;
        }
        std::vector<Vertex> removed;
        for (std::size_t i = keep; i < comb.length(); ++i) {
            removed.insert(removed.end(), comb.shaft[i].begin(), comb.shaft[i].end());
            removed.insert(removed.end(), comb.teeth[i].begin(), comb.teeth[i].end());
        }
        return removal_step(inst, 4, std::move(removed),
                            "cut comb of length " + std::to_string(comb.length()) + " to " + std::to_string(keep));
    }
    return std::nullopt;
}

RuleOutcome rule_comb_teeth(const Instance &inst) {
    const std::size_t need = 2 * static_cast<std::size_t>(inst.budget) + 1;
    const std::size_t cap = static_cast<std::size_t>(inst.budget) + 1;
    for (const auto &comb : enumerate_critical_combs(inst.graph)) {
        const std::size_t l = comb.length();
        // 0-based a, b: sum(R[a..l)) >= need and sum(R[b..a)) >= need.
        std::size_t suffix = 0;
        std::size_t a = l;
        while (a > 0 && suffix < need) {
            --a;
            suffix += comb.teeth[a].size();
        }
        if (suffix < need) {
            continue;
        }
        std::size_t middle = 0;
        std::size_t b = a;
        while (b > 0 && middle < need) {
            --b;
            middle += comb.teeth[b].size();
        }
        if (middle < need) {
            continue;
        }
        std::vector<Vertex> removed;
        std::vector<Edge> added;
        for (std::size_t i = 0; i < b; ++i) {
            const auto &tooth = comb.teeth[i].members();
            const std::size_t kept = std::min(tooth.size(), cap);
            removed.insert(removed.end(), tooth.begin() + static_cast<std::ptrdiff_t>(kept), tooth.end());
            for (std::size_t x = 0; x < kept; ++x) {
                for (std::size_t y = x + 1; y < kept; ++y) {
                    if (!inst.graph.has_edge(tooth[x], tooth[y])) {
                        added.emplace_back(tooth[x], tooth[y]);
                    }
                }
            }
        }
        if (removed.empty() && added.empty()) {
            continue;
        }
        auto [out, step] = removal_step(inst, 5, std::move(removed),
                                        "replaced " + std::to_string(b) + " tooth/teeth of a length-" +
                                            std::to_string(l) + " comb by cliques");
        std::sort(added.begin(), added.end());
        for (const auto &[u, v] : added) {
            out.graph.add_edge(u, v);
        }
        step.added_edges = std::move(added);
        return std::make_pair(std::move(out), std::move(step));
    }
    return std::nullopt;
}

RuleOutcome apply_rule(int rule, const Instance &inst) {
    switch (rule) {
    case 1:
        return rule_tp_components(inst);
    case 2:
        return rule_truncate_critical_cliques(inst);
    case 3:
        return rule_tp_module_independent_set(inst);
    case 4:
        return rule_comb_shaft(inst);
    case 5:
        return rule_comb_teeth(inst);
    default:
        throw InputError("no rule " + std::to_string(rule));
    }
}

std::pair<Instance, ReductionTrace> kernelize(const Instance &inst) {
    if (inst.budget < 0) {
        throw InputError("negative budget");
    }
    Instance cur = inst;
    ReductionTrace trace;
    for (int rule = 1; rule <= 5;) {
        if (auto outcome = apply_rule(rule, cur)) {
            cur = std::move(outcome->first);
            trace.steps.push_back(std::move(outcome->second));
            rule = 1;
        } else {
            ++rule;
        }
    }
    return {std::move(cur), std::move(trace)};
}

Graph replay_trace(const Graph &g, const ReductionTrace &trace) {
    Graph out = g;
    for (const auto &step : trace.steps) {
        out.remove_vertices(step.removed);
        for (const auto &[u, v] : step.added_edges) {
            out.add_edge(u, v);
        }
    }
    return out;
}

}  // namespace tpk
