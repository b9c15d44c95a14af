#include "tpk/tp_structure.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "tpk/errors.hpp"
#include "local_graph.hpp"

namespace tpk {

namespace {

// Universal-vertex peeling over a localized graph. Each work item is a vertex
// set whose components are peeled: a component's universal vertices form a
// bag, the remainder becomes a new work item below that bag. A component of
// size >= 2 with no universal vertex is a stall.
struct PeelNode {
    int parent;
    std::vector<int> bag;
};

struct PeelOutcome {
    bool trivially_perfect = true;
    std::vector<int> stalled;
    std::vector<PeelNode> nodes;
};

PeelOutcome peel(const LocalGraph &lg, bool build) {
    const int n = static_cast<int>(lg.size());
    PeelOutcome out;
    if (n == 0) {
        return out;
    }
    std::vector<int> scope(static_cast<std::size_t>(n), 0);
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int next_token = 1;

    struct Work {
        std::vector<int> members;
        int parent;
    };
    std::vector<Work> work;
    {
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            all[static_cast<std::size_t>(i)] = i;
        }
        work.push_back({std::move(all), no_parent});
    }
    std::vector<int> stack;
    std::vector<int> members_of_comp;
    while (!work.empty()) {
        Work item = std::move(work.back());
        work.pop_back();
        const int token = next_token++;
        for (int v : item.members) {
            scope[static_cast<std::size_t>(v)] = token;
        }
        for (int s : item.members) {
            if (comp[static_cast<std::size_t>(s)] >= token) {
                continue;
            }
            const int ctag = next_token++;
            members_of_comp.clear();
            comp[static_cast<std::size_t>(s)] = ctag;
            stack.push_back(s);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                members_of_comp.push_back(v);
                for (int u : lg.adj[static_cast<std::size_t>(v)]) {
                    if (scope[static_cast<std::size_t>(u)] == token && comp[static_cast<std::size_t>(u)] != ctag) {
                        comp[static_cast<std::size_t>(u)] = ctag;
                        stack.push_back(u);
                    }
                }
            }
            const std::size_t size = members_of_comp.size();
            std::vector<int> bag;
            std::vector<int> rest;
            if (size == 1) {
                bag = members_of_comp;
            } else {
                for (int v : members_of_comp) {
                    std::size_t d = 0;
                    for (int u : lg.adj[static_cast<std::size_t>(v)]) {
                        d += comp[static_cast<std::size_t>(u)] == ctag ? 1 : 0;
                    }
                    (d + 1 == size ? bag : rest).push_back(v);
                }
                if (bag.empty()) {
                    out.trivially_perfect = false;
                    out.stalled = members_of_comp;
                    std::sort(out.stalled.begin(), out.stalled.end());
                    return out;
                }
            }
            int node = no_parent;
            if (build) {
                std::sort(bag.begin(), bag.end());
                node = static_cast<int>(out.nodes.size());
                out.nodes.push_back({item.parent, std::move(bag)});
            }
            if (!rest.empty()) {
                work.push_back({std::move(rest), node});
            }
        }
    }
    return out;
}

std::array<Vertex, 4> canonical_p4(std::array<Vertex, 4> w) {
    if (w[0] > w[3]) {
        std::reverse(w.begin(), w.end());
    }
    return w;
}

std::array<Vertex, 4> canonical_c4(std::array<Vertex, 4> w) {
    auto first = std::min_element(w.begin(), w.end());
    std::rotate(w.begin(), first, w.end());
    if (w[3] < w[1]) {
        std::swap(w[1], w[3]);
    }
    return w;
}

// In a connected graph without universal vertex, a vertex v of maximum degree
// has a non-neighbor x at distance two through some w. Since deg(w) <= deg(v)
// and x is a private neighbor of w, v has a private neighbor y w.r.t. w, and
// y-v-w-x is an induced P4, or a C4 when y sees x.
Obstruction obstruction_in_component(const LocalGraph &lg, const std::vector<int> &component) {
    const std::size_t n = lg.size();
    std::vector<char> inside(n, 0);
    for (int v : component) {
        inside[static_cast<std::size_t>(v)] = 1;
    }
    auto inner_degree = [&](int v) {
        std::size_t d = 0;
        for (int u : lg.adj[static_cast<std::size_t>(v)]) {
            d += inside[static_cast<std::size_t>(u)];
        }
        return d;
    };
    int v = component.front();
    std::size_t best = inner_degree(v);
    for (int u : component) {
        std::size_t d = inner_degree(u);
        if (d > best) {
            best = d;
            v = u;
        }
    }
    std::vector<char> near(n, 0);
    near[static_cast<std::size_t>(v)] = 1;
    for (int u : lg.adj[static_cast<std::size_t>(v)]) {
        near[static_cast<std::size_t>(u)] = 1;
    }
    int w = -1;
    int x = -1;
    for (int a : lg.adj[static_cast<std::size_t>(v)]) {
        if (!inside[static_cast<std::size_t>(a)]) {
            continue;
        }
        for (int b : lg.adj[static_cast<std::size_t>(a)]) {
            if (inside[static_cast<std::size_t>(b)] && !near[static_cast<std::size_t>(b)]) {
                w = a;
                x = b;
                break;
            }
        }
        if (w >= 0) {
            break;
        }
    }
    int y = -1;
    for (int c : lg.adj[static_cast<std::size_t>(v)]) {
        if (inside[static_cast<std::size_t>(c)] && c != w && !lg.adjacent(c, w)) {
            y = c;
            break;
        }
    }
    std::array<Vertex, 4> wit{lg.ids[static_cast<std::size_t>(y)], lg.ids[static_cast<std::size_t>(v)],
                              lg.ids[static_cast<std::size_t>(w)], lg.ids[static_cast<std::size_t>(x)]};
    if (lg.adjacent(y, x)) {
        return {ObstructionKind::c4, canonical_c4(wit)};
    }
    return {ObstructionKind::p4, canonical_p4(wit)};
}

Ucd assemble_ucd(const LocalGraph &lg, std::vector<PeelNode> peeled) {
    const std::size_t count = peeled.size();
    std::vector<std::vector<int>> children(count);
    std::vector<int> roots;
    for (std::size_t i = 0; i < count; ++i) {
        if (peeled[i].parent == no_parent) {
            roots.push_back(static_cast<int>(i));
        } else {
            children[static_cast<std::size_t>(peeled[i].parent)].push_back(static_cast<int>(i));
        }
    }
    // Parents are always created before their children.
    std::vector<int> subtree_min(count);
    for (std::size_t i = count; i-- > 0;) {
        int m = peeled[i].bag.front();
        for (int c : children[i]) {
            m = std::min(m, subtree_min[static_cast<std::size_t>(c)]);
        }
        subtree_min[i] = m;
    }
    auto by_min = [&](int a, int b) { return subtree_min[static_cast<std::size_t>(a)] < subtree_min[static_cast<std::size_t>(b)]; };
    std::sort(roots.begin(), roots.end(), by_min);
    for (auto &ch : children) {
        std::sort(ch.begin(), ch.end(), by_min);
    }

    Ucd d;
    d.nodes.reserve(count);
    struct Frame {
        int old_id;
        int new_parent;
    };
    std::vector<Frame> stack;
    for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
        stack.push_back({*it, no_parent});
    }
    while (!stack.empty()) {
        auto [old_id, new_parent] = stack.back();
        stack.pop_back();
        const int id = static_cast<int>(d.nodes.size());
        std::vector<Vertex> bag;
        for (int local : peeled[static_cast<std::size_t>(old_id)].bag) {
            bag.push_back(lg.ids[static_cast<std::size_t>(local)]);
        }
        d.nodes.push_back({new_parent, {}, VertexSet::from_sorted(std::move(bag))});
        if (new_parent == no_parent) {
            d.roots.push_back(id);
        } else {
            d.nodes[static_cast<std::size_t>(new_parent)].children.push_back(id);
        }
        const auto &ch = children[static_cast<std::size_t>(old_id)];
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) {
            stack.push_back({*it, id});
        }
    }
    return d;
}

}  // namespace

NotTriviallyPerfect::NotTriviallyPerfect(Obstruction o)
    : std::runtime_error("graph is not trivially perfect"), obstruction_(o) {}

bool is_valid_obstruction(const Graph &g, const Obstruction &o) {
    const auto &w = o.witnesses;
    for (int i = 0; i < 4; ++i) {
        if (!g.contains(w[static_cast<std::size_t>(i)])) {
            return false;
        }
        for (int j = i + 1; j < 4; ++j) {
            if (w[static_cast<std::size_t>(i)] == w[static_cast<std::size_t>(j)]) {
                return false;
            }
        }
    }
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            bool consecutive = j == i + 1 || (o.kind == ObstructionKind::c4 && i == 0 && j == 3);
            if (g.has_edge(w[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(j)]) != consecutive) {
                return false;
            }
        }
    }
    return true;
}

std::size_t Ucd::leaf_count() const {
    return static_cast<std::size_t>(
        std::count_if(nodes.begin(), nodes.end(), [](const UcdNode &n) { return n.children.empty(); }));
}

bool is_trivially_perfect(const Graph &g) {
    return peel(LocalGraph(g, g.vertices()), false).trivially_perfect;
}

bool is_trivially_perfect(const Graph &g, const VertexSet &subset) {
    return peel(LocalGraph(g, subset.members()), false).trivially_perfect;
}

std::optional<Obstruction> find_obstruction(const Graph &g) {
    LocalGraph lg(g, g.vertices());
    auto outcome = peel(lg, false);
    if (outcome.trivially_perfect) {
        return std::nullopt;
    }
    return obstruction_in_component(lg, outcome.stalled);
}

Ucd compute_ucd(const Graph &g) {
    LocalGraph lg(g, g.vertices());
    auto outcome = peel(lg, true);
    if (!outcome.trivially_perfect) {
        throw NotTriviallyPerfect(obstruction_in_component(lg, outcome.stalled));
    }
    return assemble_ucd(lg, std::move(outcome.nodes));
}

Graph realize_ucd(const Ucd &d) {
    const int count = static_cast<int>(d.nodes.size());
    std::vector<int> root_count(static_cast<std::size_t>(count), 0);
    for (int r : d.roots) {
        if (r < 0 || r >= count || d.nodes[static_cast<std::size_t>(r)].parent != no_parent) {
            throw InputError("invalid root " + std::to_string(r));
        }
        ++root_count[static_cast<std::size_t>(r)];
    }
    for (int i = 0; i < count; ++i) {
        const auto &node = d.nodes[static_cast<std::size_t>(i)];
        if (node.bag.empty()) {
            throw InputError("empty bag at node " + std::to_string(i));
        }
        if (node.children.size() == 1) {
            throw InputError("node " + std::to_string(i) + " has a single child");
        }
        if (node.parent == no_parent) {
            if (root_count[static_cast<std::size_t>(i)] != 1) {
                throw InputError("parentless node " + std::to_string(i) + " is not listed once as a root");
            }
            continue;
        }
        if (node.parent < 0 || node.parent >= count) {
            throw InputError("node " + std::to_string(i) + " has an invalid parent");
        }
        const auto &siblings = d.nodes[static_cast<std::size_t>(node.parent)].children;
        if (std::count(siblings.begin(), siblings.end(), i) != 1) {
            throw InputError("node " + std::to_string(i) + " missing from its parent's children");
        }
    }
    std::size_t child_links = 0;
    for (const auto &node : d.nodes) {
        for (int c : node.children) {
            if (c < 0 || c >= count) {
                throw InputError("invalid child index " + std::to_string(c));
            }
        }
        child_links += node.children.size();
    }
    if (child_links + d.roots.size() != static_cast<std::size_t>(count)) {
        throw InputError("forest links are inconsistent");
    }

    // Walk from the roots; every node must be reached exactly once.
    std::vector<int> order;
    std::vector<char> seen(static_cast<std::size_t>(count), 0);
    std::vector<int> stack(d.roots.begin(), d.roots.end());
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        if (seen[static_cast<std::size_t>(t)]) {
            throw InputError("cycle in forest");
        }
        seen[static_cast<std::size_t>(t)] = 1;
        order.push_back(t);
        for (int c : d.nodes[static_cast<std::size_t>(t)].children) {
            stack.push_back(c);
        }
    }
    if (order.size() != static_cast<std::size_t>(count)) {
        throw InputError("forest has unreachable nodes");
    }

    std::vector<Vertex> vertices;
    for (const auto &node : d.nodes) {
        vertices.insert(vertices.end(), node.bag.begin(), node.bag.end());
    }
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
        throw InputError("bags overlap");
    }

    std::vector<Edge> edges;
    for (int t : order) {
        const auto &bag = d.nodes[static_cast<std::size_t>(t)].bag;
        for (auto a = bag.begin(); a != bag.end(); ++a) {
            for (auto b = std::next(a); b != bag.end(); ++b) {
                edges.emplace_back(*a, *b);
            }
        }
        for (int up = d.nodes[static_cast<std::size_t>(t)].parent; up != no_parent;
             up = d.nodes[static_cast<std::size_t>(up)].parent) {
            for (Vertex a : bag) {
                for (Vertex b : d.nodes[static_cast<std::size_t>(up)].bag) {
                    edges.emplace_back(std::min(a, b), std::max(a, b));
                }
            }
        }
    }
    return Graph::from_edges(vertices, edges);
}

VertexSet tp_max_independent_set(const Graph &g) {
    const Ucd d = compute_ucd(g);
    std::vector<Vertex> out;
    for (const auto &node : d.nodes) {
        if (node.children.empty()) {
            out.push_back(node.bag.front());
        }
    }
    return VertexSet(std::move(out));
}

bool check_clique_decomposition(const Graph &g, const VertexSet &s) {
    for (Vertex v : s) {
        if (!g.contains(v)) {
            throw InputError("unknown vertex " + std::to_string(v));
        }
    }
    if (s.empty() || !is_clique(g, s)) {
        throw InputError("set is not a clique");
    }
    for (Vertex v : g.vertices()) {
        if (s.contains(v)) {
            continue;
        }
        std::size_t seen = 0;
        for (Vertex u : g.neighbors(v)) {
            seen += s.contains(u) ? 1 : 0;
        }
        if (seen == s.size()) {
            throw InputError("clique is not maximal: vertex " + std::to_string(v) + " extends it");
        }
    }
    const Graph rest = induced_subgraph(g, set_difference(VertexSet(g.vertices()), s));
    std::vector<VertexSet> attachments;
    for (const auto &component : connected_components(rest)) {
        if (!is_trivially_perfect(g, set_union(s, component))) {
            return false;
        }
        VertexSet attach = neighborhood(g, component);
        for (Vertex v : component) {
            std::size_t seen = 0;
            for (Vertex u : g.neighbors(v)) {
                seen += attach.contains(u) ? 1 : 0;
            }
            if (seen != attach.size()) {
                return false;
            }
        }
        attachments.push_back(std::move(attach));
    }
    return is_nested_family(attachments);
}

void write_ucd(std::ostream &out, const Ucd &d) {
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        const auto &node = d.nodes[i];
        out << "node " << i << " parent ";
        if (node.parent == no_parent) {
            out << '-';
        } else {
            out << node.parent;
        }
        out << " bag ";
        bool first = true;
        for (Vertex v : node.bag) {
            out << (first ? "" : ",") << v + 1;
            first = false;
        }
        out << '\n';
    }
}

}  // namespace tpk
