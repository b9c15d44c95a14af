#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tpk/combs.hpp"
#include "tpk/errors.hpp"
#include "tpk/generator.hpp"
#include "tpk/io.hpp"
#include "tpk/kernel.hpp"
#include "tpk/solver.hpp"
#include "tpk/tp_structure.hpp"

using namespace tpk;
using namespace fixture;

namespace {

constexpr Variant all_variants[] = {Variant::editing, Variant::completion, Variant::deletion};

/// Replaces v by a copy of h (h's vertex 0 keeps the id v, the others get
/// fresh ids after g's).
Graph substitute(const Graph &g, Vertex v, const Graph &h) {
    const Vertex base = g.id_bound();
    auto id = [&](Vertex x) { return x == 0 ? v : base + x - 1; };
    Graph out(base + h.id_bound() - 1);
    for (const auto &[a, b] : g.edges()) {
        if (a != v && b != v) {
            out.add_edge(a, b);
        }
    }
    for (const auto &[a, b] : h.edges()) {
        out.add_edge(id(a), id(b));
    }
    for (Vertex u : g.neighbors(v)) {
        for (Vertex x : h.vertices()) {
            out.add_edge(u, id(x));
        }
    }
    return out;
}

bool feasible(const Graph &g, int k, Variant variant) { return solve(Instance{g, k, variant}).has_value(); }

VertexSet ids(const Graph &g) { return VertexSet(g.vertices()); }

Graph random_instance(std::mt19937_64 &rng) {
    switch (rng() % 5) {
    case 0:
        return oracle::random_graph(static_cast<Vertex>(6 + rng() % 5), 0.45, rng);
    case 1: {
        Graph g = oracle::random_tp(static_cast<Vertex>(8 + rng() % 5), rng);
        for (int i = 0; i < 2; ++i) {
            const auto u = static_cast<Vertex>(rng() % g.num_vertices());
            const auto w = static_cast<Vertex>(rng() % g.num_vertices());
            if (u != w) {
                g.has_edge(u, w) ? g.remove_edge(u, w) : g.add_edge(u, w);
            }
        }
        return g;
    }
    case 2: {
        std::vector<int> sizes;
        const int l = 2 + static_cast<int>(rng() % 2);
        for (int i = 0; i < l; ++i) {
            sizes.push_back(1 + static_cast<int>(rng() % 2));
        }
        return comb_lp(sizes);
    }
    case 3: {
        const Graph base = rng() % 2 ? oracle::cycle(4) : oracle::path(4);
        return substitute(base, static_cast<Vertex>(rng() % 4), oracle::random_tp(static_cast<Vertex>(3 + rng() % 6), rng));
    }
    default: {
        const Graph bad = rng() % 2 ? oracle::cycle(4) : oracle::path(4);
        return oracle::disjoint_union(bad, oracle::random_tp(static_cast<Vertex>(2 + rng() % 6), rng));
    }
    }
}

}  // namespace

TEST_CASE("rule 1 examples") {
    const Graph g = oracle::disjoint_union(oracle::cycle(4), oracle::complete(5));
    const auto out = rule_tp_components(Instance{g, 1, Variant::editing});
    REQUIRE(out);
    CHECK(ids(out->first.graph) == VertexSet{0, 1, 2, 3});
    CHECK(out->first.budget == 1);
    CHECK(out->second.rule == 1);
    CHECK(out->second.removed == VertexSet{4, 5, 6, 7, 8});
    CHECK_FALSE(rule_tp_components(Instance{oracle::cycle(4), 1, Variant::editing}));
    CHECK_FALSE(rule_tp_components(Instance{oracle::disjoint_union(oracle::path(4), oracle::path(4)), 1, Variant::editing}));
}

TEST_CASE("rule 2 examples") {
    // C4 0-1-2-3 with 0 blown into a twin class {0,4,5,6,7}.
    const Graph blown = substitute(oracle::cycle(4), 0, oracle::complete(5));
    const auto out = rule_truncate_critical_cliques(Instance{blown, 1, Variant::editing});
    REQUIRE(out);
    CHECK(out->second.removed == VertexSet{5, 6, 7});
    CHECK(ids(out->first.graph) == VertexSet{0, 1, 2, 3, 4});
    CHECK_FALSE(rule_truncate_critical_cliques(Instance{oracle::path(4), 0, Variant::editing}));

    const Graph k9c4 = oracle::disjoint_union(oracle::complete(9), oracle::cycle(4));
    const auto cut = rule_truncate_critical_cliques(Instance{k9c4, 2, Variant::editing});
    REQUIRE(cut);
    CHECK(cut->second.removed.size() == 6);
    CHECK(cut->first.graph.num_vertices() == 7);
    CHECK(cut->first.graph.has_edge(0, 1));
    CHECK(cut->first.graph.has_edge(1, 2));
}

TEST_CASE("rule 3 candidates") {
    const auto star = find_tp_module_candidates(oracle::star(3));
    auto has = [](const std::vector<VertexSet> &c, const VertexSet &s) { return std::find(c.begin(), c.end(), s) != c.end(); };
    CHECK(has(star, VertexSet{1, 2, 3}));
    for (Vertex v = 0; v < 4; ++v) {
        CHECK(has(star, VertexSet{v}));
    }
    const auto p4 = find_tp_module_candidates(oracle::path(4));
    CHECK(p4 == std::vector<VertexSet>{VertexSet{0}, VertexSet{1}, VertexSet{2}, VertexSet{3}});
    const auto comb = find_tp_module_candidates(comb3p());
    for (Vertex r : {r1, r2, r3}) {
        CHECK(has(comb, VertexSet{r}));
    }

    std::mt19937_64 rng(3);
    for (int round = 0; round < 200; ++round) {
        const Graph g = random_instance(rng);
        const auto cands = find_tp_module_candidates(g);
        CHECK(std::is_sorted(cands.begin(), cands.end()));
        CHECK(std::adjacent_find(cands.begin(), cands.end()) == cands.end());
        for (const auto &m : cands) {
            CHECK(oracle::is_module(g, m));
            CHECK(oracle::is_tp(g, m));
        }
    }
}

TEST_CASE("rule 3 examples") {
    // Module: K10 (ids 0, 4..12) plus 9 isolated vertices (13..21), hung
    // on vertex 0 of a C4. MIS = 10 >= 2k+5 = 9.
    Graph module = oracle::disjoint_union(oracle::complete(10), Graph(9));
    const Graph g = substitute(oracle::cycle(4), 0, module);
    const Instance inst{g, 2, Variant::editing};
    const auto out = rule_tp_module_independent_set(inst);
    REQUIRE(out);
    const Graph &h = out->first.graph;
    // The largest candidate is the module plus the opposite C4 vertex 2;
    // what survives of it is an independent set of 2k+5.
    VertexSet left;
    for (Vertex v : h.vertices()) {
        if (v != 1 && v != 3) {
            left = set_union(left, VertexSet{v});
        }
    }
    CHECK(left.size() == 9);
    CHECK(oracle::is_independent(h, left));
    for (Variant variant : all_variants) {
        CHECK(feasible(g, 2, variant) == feasible(h, 2, variant));
    }

    // 2k+6 pendant leaves on a C4 vertex at k = 0: cut to 2k+5.
    Graph leaves = oracle::make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    for (Vertex v = 4; v < 10; ++v) {
        leaves.add_edge(0, v);
    }
    const auto trimmed = rule_tp_module_independent_set(Instance{leaves, 0, Variant::editing});
    REQUIRE(trimmed);
    CHECK(trimmed->second.removed.size() == 1);
    CHECK(trimmed->first.graph.num_vertices() == leaves.num_vertices() - 1);

    CHECK_FALSE(rule_tp_module_independent_set(Instance{comb3p(), 0, Variant::editing}));
    CHECK_FALSE(rule_tp_module_independent_set(Instance{oracle::cycle(4), 0, Variant::editing}));
}

TEST_CASE("rule 4 examples") {
    const Graph comb5 = comb_lp({1, 1, 1, 1, 1});
    // c5 = 4, r5 = 9.
    const auto cut = rule_comb_shaft(Instance{comb5, 1, Variant::editing});
    REQUIRE(cut);
    CHECK(cut->second.removed == VertexSet{4, 9});
    for (Variant variant : all_variants) {
        CHECK(feasible(comb5, 1, variant) == feasible(cut->first.graph, 1, variant));
    }
    CHECK_FALSE(rule_comb_shaft(Instance{comb3p(), 1, Variant::editing}));
    const auto short3 = rule_comb_shaft(Instance{comb3p(), 0, Variant::editing});
    REQUIRE(short3);
    CHECK(short3->second.removed == VertexSet{c3, r3});
    CHECK_FALSE(feasible(comb3p(), 0, Variant::editing));
    CHECK_FALSE(feasible(short3->first.graph, 0, Variant::editing));
}

TEST_CASE("rule 5 examples") {
    // Teeth {3,4,5}, {6}, {7}; a = 3, b = 2 at k = 0.
    const Graph g = comb_lp({3, 1, 1});
    const auto out = rule_comb_teeth(Instance{g, 0, Variant::editing});
    REQUIRE(out);
    CHECK(out->second.rule == 5);
    CHECK(out->second.removed == VertexSet{4, 5});
    CHECK(out->second.added_edges.empty());
    for (Variant variant : all_variants) {
        for (int k = 0; k <= 1; ++k) {
            CHECK(feasible(g, k, variant) == feasible(out->first.graph, k, variant));
        }
    }
    CHECK_FALSE(rule_comb_teeth(Instance{comb3p(), 0, Variant::editing}));
    // Total teeth size 5 < 4k+2 = 6.
    CHECK_FALSE(rule_comb_teeth(Instance{comb_lp({2, 2, 1}), 1, Variant::editing}));

    // k = 1, teeth sizes 4,3,3: a = 3 (3 >= 3), b = 2 (3 >= 3); R_1 keeps 2
    // vertices and gains an edge.
    const Graph wide = comb_lp({4, 3, 3});
    const auto filled = rule_comb_teeth(Instance{wide, 1, Variant::editing});
    REQUIRE(filled);
    CHECK(filled->second.removed == VertexSet{5, 6});
    CHECK(filled->second.added_edges == std::vector<Edge>{{3, 4}});
    CHECK(filled->first.graph.has_edge(3, 4));
}

TEST_CASE("apply_rule dispatch and errors") {
    const Instance inst{comb3p(), 0, Variant::editing};
    CHECK(apply_rule(4, inst) == rule_comb_shaft(inst));
    CHECK_THROWS_AS(apply_rule(0, inst), InputError);
    CHECK_THROWS_AS(apply_rule(6, inst), InputError);
    CHECK_THROWS_AS(kernelize(Instance{comb3p(), -1, Variant::editing}), InputError);
}

TEST_CASE("kernelize examples") {
    const auto [k7, trace] = kernelize(Instance{oracle::complete(7), 1, Variant::editing});
    CHECK(k7.graph.num_vertices() == 0);
    REQUIRE(trace.steps.size() == 1);
    CHECK(trace.steps[0].rule == 1);

    const Graph g = oracle::disjoint_union(oracle::cycle(4), oracle::complete(9));
    const auto [c4, t2] = kernelize(Instance{g, 2, Variant::deletion});
    CHECK(c4.graph == induced_subgraph(g, VertexSet{0, 1, 2, 3}));
    CHECK(c4.budget == 2);
    CHECK(c4.variant == Variant::deletion);
}

TEST_CASE("every rule application preserves the verdict") {
    std::mt19937_64 rng(101);
    int fired[6] = {};
    for (int round = 0; round < 500; ++round) {
        const Graph g = random_instance(rng);
        const int k = static_cast<int>(rng() % 4);
        const Variant variant = all_variants[round % 3];
        const Instance inst{g, k, variant};
        const bool before = feasible(g, k, variant);
        for (int rule = 1; rule <= 5; ++rule) {
            if (const auto out = apply_rule(rule, inst)) {
                ++fired[rule];
                CHECK(out->first.budget == k);
                CHECK(feasible(out->first.graph, k, variant) == before);
            }
        }
        const auto [reduced, trace] = kernelize(inst);
        INFO("instance:\n" << graph_to_text(g) << "k=" << k);
        CHECK(feasible(reduced.graph, k, variant) == before);
        CHECK(replay_trace(g, trace) == reduced.graph);
        CHECK(reduced.graph.num_vertices() <= g.num_vertices());
        if (reduced.graph.num_vertices() == g.num_vertices()) {
            CHECK(trace.steps.empty());
        }
        const auto [again, trace2] = kernelize(reduced);
        CHECK(again.graph == reduced.graph);
        CHECK(trace2.steps.empty());
    }
    for (int rule = 1; rule <= 5; ++rule) {
        INFO("rule " << rule);
        CHECK(fired[rule] > 0);
    }
}

TEST_CASE("no small edition touches a long comb") {
    std::mt19937_64 rng(5);
    std::vector<std::pair<Graph, VertexSet>> fixtures;
    fixtures.emplace_back(comb_lp({1, 1, 1, 1}), VertexSet{0, 1, 2, 3, 4, 5, 6, 7});
    std::vector<std::pair<Graph, VertexSet>> solvable;
    for (int i = 0; i < 6; ++i) {
        std::vector<int> sizes(4 + static_cast<std::size_t>(i % 3), 1);
        sizes[rng() % sizes.size()] = 1 + static_cast<int>(rng() % 3);
        solvable.push_back(fixture::anchored_comb(sizes));
        const auto &[g, cr] = solvable.back();
        // The comb is genuine.
        std::vector<VertexSet> shaft;
        std::vector<VertexSet> teeth;
        Vertex next = static_cast<Vertex>(sizes.size());
        for (std::size_t j = 0; j < sizes.size(); ++j) {
            shaft.push_back(VertexSet{static_cast<Vertex>(j)});
            std::vector<Vertex> tooth;
            for (int x = 0; x < sizes[j]; ++x) {
                tooth.push_back(next++);
            }
            teeth.emplace_back(tooth);
        }
        REQUIRE(validate_comb(g, shaft, teeth));
        const Comb c{shaft, teeth, {}, {}};
        CHECK(set_union(c.shaft_union(), c.teeth_union()) == cr);
    }
    for (int i = 0; i < 4; ++i) {
        const int l = 4 + i % 2;
        std::vector<int> sizes(static_cast<std::size_t>(l), 1);
        sizes[rng() % sizes.size()] = 2;
        const PlantedComb pc = plant_comb(l, sizes, 1, rng());
        VertexSet cr;
        for (std::size_t j = 0; j < pc.shaft.size(); ++j) {
            cr = set_union(cr, set_union(pc.shaft[j], pc.teeth[j]));
        }
        fixtures.emplace_back(pc.graph, cr);
    }
    for (const auto &[g, cr] : fixtures) {
        for (Variant variant : all_variants) {
            for (const auto &f : enumerate_editions(g, 1, variant)) {
                CHECK_FALSE(f.touches(cr));
            }
        }
    }
    for (const auto &[g, cr] : solvable) {
        for (Variant variant : {Variant::editing, Variant::completion}) {
            const auto sets = enumerate_editions(g, 1, variant);
            CHECK(sets.size() == 1);
            for (const auto &f : sets) {
                CHECK_FALSE(f.touches(cr));
            }
        }
    }
}

TEST_CASE("reduced instances have small combs") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const int k = 1 + static_cast<int>(seed % 3);
        GenParams params;
        params.n = 200;
        params.seed = seed;
        const Graph base = random_tp_graph(params);
        const Variant variant = all_variants[seed % 3];
        const Perturbation pert = perturb(base, k, variant, seed);
        const auto [reduced, trace] = kernelize(Instance{pert.graph, k, variant});
        CHECK(replay_trace(pert.graph, trace) == reduced.graph);
        for (const auto &part : critical_clique_partition(reduced.graph)) {
            CHECK(part.size() <= static_cast<std::size_t>(k + 1));
        }
        for (const auto &c : enumerate_critical_combs(reduced.graph)) {
            CHECK(c.length() <= static_cast<std::size_t>(2 * k + 2));
            int big = 0;
            for (const auto &r : c.teeth) {
                big += r.size() > static_cast<std::size_t>(2 * k) ? 1 : 0;
            }
            CHECK(big <= 2);
        }
        CHECK(feasible(reduced.graph, k, variant));
    }
}
