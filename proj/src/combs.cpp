#include "tpk/combs.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <unordered_map>

#include "bits.hpp"
#include "tpk/tp_structure.hpp"

namespace tpk {

namespace {

VertexSet union_of(const std::vector<VertexSet> &sets) {
    std::vector<Vertex> all;
    for (const auto &s : sets) {
        all.insert(all.end(), s.begin(), s.end());
    }
    return VertexSet(std::move(all));
}

std::vector<Vertex> closed_nbhd(const Graph &g, Vertex v) {
    auto nb = g.neighbors(v);
    std::vector<Vertex> out(nb.begin(), nb.end());
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return out;
}

// Critical cliques as nodes; closed neighborhoods as bitsets over nodes.
struct Quotient {
    Partition classes;
    std::vector<int> class_of;
    std::vector<Bits> closed;
    Graph graph;

    std::size_t size() const { return classes.size(); }

    VertexSet index_set(const Bits &b) const {
        std::vector<Vertex> out;
        b.for_each([&](std::size_t i) { out.push_back(static_cast<Vertex>(i)); });
        return VertexSet::from_sorted(std::move(out));
    }

    VertexSet expand(const Bits &b) const {
        std::vector<Vertex> out;
        b.for_each([&](std::size_t i) { out.insert(out.end(), classes[i].begin(), classes[i].end()); });
        return VertexSet(std::move(out));
    }
};

Quotient make_quotient(const Graph &g, const Partition &classes) {
    Quotient q;
    q.classes = classes;
    const std::size_t n = classes.size();
    q.class_of.assign(static_cast<std::size_t>(g.id_bound()), -1);
    for (std::size_t i = 0; i < n; ++i) {
        for (Vertex v : classes[i]) {
            q.class_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    }
    q.closed.assign(n, Bits(n));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        q.closed[i].set(i);
        for (Vertex u : g.neighbors(classes[i].front())) {
            const auto j = static_cast<std::size_t>(q.class_of[static_cast<std::size_t>(u)]);
            if (j != i && !q.closed[i].test(j)) {
                q.closed[i].set(j);
                if (i < j) {
                    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
                }
            }
        }
    }
    std::vector<Vertex> ids(n);
    for (std::size_t i = 0; i < n; ++i) {
        ids[i] = static_cast<Vertex>(i);
    }
    q.graph = Graph::from_edges(ids, edges);
    return q;
}

struct Precedence {
    std::size_t pred;
    std::size_t succ;
    Bits tooth;
    Bits tooth_nbhd;
};

std::vector<Precedence> precedence_pairs(const Quotient &q) {
    std::vector<Precedence> out;
    for (std::size_t b = 0; b < q.size(); ++b) {
        Bits open_b = q.closed[b];
        open_b.reset(b);
        for (Vertex av : q.graph.neighbors(static_cast<Vertex>(b))) {
            const auto a = static_cast<std::size_t>(av);
            if (!q.closed[b].is_proper_subset_of(q.closed[a])) {
                continue;
            }
            Bits r = q.closed[a] - q.closed[b];
            Bits nr;
            bool first = true;
            const bool module = r.all_of([&](std::size_t x) {
                if (first) {
                    first = false;
                    nr = q.closed[x] - r;
                    return nr.is_subset_of(open_b);
                }
                return q.closed[x].equals_outside(r, nr);
            });
            if (!module || nr == open_b || !is_trivially_perfect(q.graph, q.index_set(r))) {
                continue;
            }
            out.push_back({a, b, std::move(r), std::move(nr)});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Precedence &x, const Precedence &y) { return std::tie(x.pred, x.succ) < std::tie(y.pred, y.succ); });
    return out;
}

class CombFinder {
public:
    explicit CombFinder(const Graph &g) : g_(g), q_(make_quotient(g, critical_clique_partition(g))) {
        std::vector<Precedence> pairs = precedence_pairs(q_);
        std::vector<int> indegree(q_.size(), 0);
        for (const auto &p : pairs) {
            ++indegree[p.succ];
        }
        pred_edge_.assign(q_.size(), -1);
        succ_edges_.assign(q_.size(), {});
        for (auto &p : pairs) {
            if (indegree[p.succ] != 1) {
                continue;
            }
            const int id = static_cast<int>(edges_.size());
            pred_edge_[p.succ] = id;
            succ_edges_[p.pred].push_back(id);
            edges_.push_back(std::move(p));
        }
        last_tooth_.resize(edges_.size());
        single_teeth_.resize(q_.size());
    }

    std::vector<Comb> run() {
        std::vector<ClassComb> candidates;
        std::vector<std::size_t> path;
        for (std::size_t s = 0; s < q_.size(); ++s) {
            // Depth-first over the chains starting at s.
            std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
            while (!stack.empty()) {
                auto [node, depth] = stack.back();
                stack.pop_back();
                path.resize(depth);
                path.push_back(node);
                for (auto &c : evaluate(path)) {
                    if (is_critical(c)) {
                        candidates.push_back(std::move(c));
                    }
                }
                for (int e : succ_edges_[node]) {
                    stack.emplace_back(edges_[static_cast<std::size_t>(e)].succ, depth + 1);
                }
            }
        }

        std::map<std::pair<VertexSet, VertexSet>, Comb> found;
        for (const auto &c : candidates) {
            if (extendable(c)) {
                continue;
            }
            std::vector<VertexSet> shaft;
            std::vector<VertexSet> teeth;
            for (std::size_t i = 0; i < c.path.size(); ++i) {
                shaft.push_back(q_.classes[c.path[i]]);
                teeth.push_back(q_.expand(c.teeth[i]));
            }
            if (auto comb = validate_comb(g_, shaft, teeth)) {
                found.emplace(std::make_pair(comb->shaft_union(), comb->teeth_union()), std::move(*comb));
            }
        }
        std::vector<Comb> out;
        out.reserve(found.size());
        for (auto &[key, comb] : found) {
            out.push_back(std::move(comb));
        }
        return out;
    }

private:
    struct ClassComb {
        std::vector<std::size_t> path;
        std::vector<Bits> teeth;
        Bits shaft;
        Bits teeth_all;
        Bits vp;
        Bits vf;
    };

    struct ToothChoice {
        std::vector<Bits> components;
        Bits nbhd;
    };

    // Components of the quotient restricted to x.
    std::vector<Bits> components(const Bits &x) const {
        std::vector<Bits> out;
        Bits seen(q_.size());
        std::vector<std::size_t> stack;
        x.for_each([&](std::size_t s) {
            if (seen.test(s)) {
                return;
            }
            Bits comp(q_.size());
            seen.set(s);
            stack.push_back(s);
            while (!stack.empty()) {
                const std::size_t v = stack.back();
                stack.pop_back();
                comp.set(v);
                for (Vertex u : q_.graph.neighbors(static_cast<Vertex>(v))) {
                    const auto ui = static_cast<std::size_t>(u);
                    if (x.test(ui) && !seen.test(ui)) {
                        seen.set(ui);
                        stack.push_back(ui);
                    }
                }
            }
            out.push_back(std::move(comp));
        });
        return out;
    }

    // Trivially perfect components of x whose neighborhood, if given, equals
    // `target`; otherwise grouped by neighborhood.
    std::vector<ToothChoice> tooth_choices(const Bits &x, const Bits *target) const {
        std::vector<ToothChoice> out;
        for (auto &d : components(x)) {
            const std::size_t first = [&] {
                std::size_t f = 0;
                d.all_of([&](std::size_t i) {
                    f = i;
                    return false;
                });
                return f;
            }();
            const Bits nbhd = q_.closed[first] - d;
            if (target && nbhd != *target) {
                continue;
            }
            const bool module = d.all_of([&](std::size_t i) { return q_.closed[i].equals_outside(d, nbhd); });
            if (!module || !is_trivially_perfect(q_.graph, q_.index_set(d))) {
                continue;
            }
            auto it = std::find_if(out.begin(), out.end(), [&](const ToothChoice &t) { return t.nbhd == nbhd; });
            if (it == out.end()) {
                out.push_back({{std::move(d)}, nbhd});
            } else {
                it->components.push_back(std::move(d));
            }
        }
        return out;
    }

    const std::vector<ToothChoice> &single_teeth(std::size_t c) {
        auto &slot = single_teeth_[c];
        if (!slot) {
            Bits x = q_.closed[c];
            x.reset(c);
            slot = tooth_choices(x, nullptr);
        }
        return *slot;
    }

    const std::vector<ToothChoice> &last_tooth(std::size_t e) {
        auto &slot = last_tooth_[e];
        if (!slot) {
            const auto &edge = edges_[e];
            Bits x = q_.closed[edge.succ] - edge.tooth_nbhd;
            x.reset(edge.succ);
            Bits target = edge.tooth_nbhd;
            target.set(edge.succ);
            slot = tooth_choices(x, &target);
        }
        return *slot;
    }

    std::vector<ClassComb> evaluate(const std::vector<std::size_t> &path) {
        std::vector<ClassComb> out;
        std::vector<Bits> teeth;
        std::vector<Bits> nbhds;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            const int e = pred_edge_[path[i + 1]];
            if (e < 0 || edges_[static_cast<std::size_t>(e)].pred != path[i]) {
                return out;
            }
            teeth.push_back(edges_[static_cast<std::size_t>(e)].tooth);
            nbhds.push_back(edges_[static_cast<std::size_t>(e)].tooth_nbhd);
        }
        const auto &choices =
            path.size() == 1 ? single_teeth(path[0]) : last_tooth(static_cast<std::size_t>(pred_edge_[path.back()]));
        for (const auto &choice : choices) {
            Bits last(q_.size());
            for (const auto &d : choice.components) {
                last |= d;
            }
            teeth.push_back(last);
            nbhds.push_back(choice.nbhd);
            if (auto c = check(path, teeth, nbhds)) {
                if (c->vf.any()) {
                    out.push_back(std::move(*c));
                } else if (choice.components.size() >= 2) {
                    // Leaving one component out moves it to V_f.
                    for (const auto &d : choice.components) {
                        teeth.back() = last - d;
                        if (auto v = check(path, teeth, nbhds); v && v->vf.any()) {
                            out.push_back(std::move(*v));
                        }
                    }
                }
            }
            teeth.pop_back();
            nbhds.pop_back();
        }
        return out;
    }

    // Comb conditions on class level, given teeth with their neighborhoods.
    // V_f may come out empty; callers decide.
    std::optional<ClassComb> check(const std::vector<std::size_t> &path, const std::vector<Bits> &teeth,
                                   const std::vector<Bits> &nbhds) const {
        const std::size_t l = path.size();
        ClassComb c{path, teeth, Bits(q_.size()), Bits(q_.size()), {}, {}};
        for (std::size_t i = 0; i < l; ++i) {
            if (teeth[i].none()) {
                return std::nullopt;
            }
            c.shaft.set(path[i]);
            c.teeth_all |= teeth[i];
        }
        c.vp = nbhds[0] - c.shaft;
        Bits prefix(q_.size());
        Bits suffix = c.teeth_all;
        for (std::size_t i = 0; i < l; ++i) {
            prefix.set(path[i]);
            if (nbhds[i].intersects(c.teeth_all) || !nbhds[i].equals_outside(c.shaft, c.vp) ||
                (nbhds[i] & c.shaft) != prefix || (q_.closed[path[i]] & c.teeth_all) != suffix) {
                return std::nullopt;
            }
            suffix -= teeth[i];
        }
        const Bits comb = c.shaft | c.teeth_all;
        const Bits outside = q_.closed[path[0]] - comb;
        if (!c.vp.is_subset_of(outside)) {
            return std::nullopt;
        }
        for (std::size_t i = 1; i < l; ++i) {
            if (!q_.closed[path[i]].equals_outside(comb, outside)) {
                return std::nullopt;
            }
        }
        c.vf = outside - c.vp;
        return c;
    }

    // Closure C ∪ R ∪ V_f is not a trivially perfect module. The comb part
    // is already uniform towards V_p and G[C ∪ R ∪ V_f] is TP iff G[V_f] is.
    bool is_critical(const ClassComb &c) {
        const Bits closure = c.shaft | c.teeth_all | c.vf;
        const bool module = c.vf.all_of([&](std::size_t x) { return q_.closed[x].equals_outside(closure, c.vp); });
        if (!module) {
            return true;
        }
        auto it = tp_cache_.find(c.vf);
        if (it == tp_cache_.end()) {
            it = tp_cache_.emplace(c.vf, is_trivially_perfect(q_.graph, q_.index_set(c.vf))).first;
        }
        return !it->second;
    }

    // Whether some comb on a longer chain through c's shaft contains c.
    bool extendable(const ClassComb &c) {
        std::vector<std::size_t> above;
        for (int e = pred_edge_[c.path.front()]; e >= 0; e = pred_edge_[edges_[static_cast<std::size_t>(e)].pred]) {
            above.push_back(edges_[static_cast<std::size_t>(e)].pred);
        }
        std::vector<std::size_t> path;
        for (std::size_t up = 0; up <= above.size(); ++up) {
            path.assign(above.rend() - static_cast<std::ptrdiff_t>(up), above.rend());
            path.insert(path.end(), c.path.begin(), c.path.end());
            const std::size_t base = path.size();
            std::vector<std::pair<std::size_t, std::size_t>> stack;
            if (up > 0 && contains(path, c)) {
                return true;
            }
            for (int e : succ_edges_[c.path.back()]) {
                const std::size_t s = edges_[static_cast<std::size_t>(e)].succ;
                // A shaft extension below must come from V_f.
                if (c.path.size() == 1 || c.vf.test(s)) {
                    stack.emplace_back(s, base);
                }
            }
            while (!stack.empty()) {
                auto [node, depth] = stack.back();
                stack.pop_back();
                path.resize(depth);
                path.push_back(node);
                if (contains(path, c)) {
                    return true;
                }
                for (int e : succ_edges_[node]) {
                    stack.emplace_back(edges_[static_cast<std::size_t>(e)].succ, depth + 1);
                }
            }
        }
        return false;
    }

    bool contains(const std::vector<std::size_t> &path, const ClassComb &c) {
        for (const auto &other : evaluate(path)) {
            if (c.teeth_all.is_subset_of(other.teeth_all)) {
                return true;
            }
        }
        return false;
    }

    const Graph &g_;
    Quotient q_;
    std::vector<Precedence> edges_;
    std::vector<int> pred_edge_;
    std::vector<std::vector<int>> succ_edges_;
    std::vector<std::optional<std::vector<ToothChoice>>> last_tooth_;
    std::vector<std::optional<std::vector<ToothChoice>>> single_teeth_;
    std::unordered_map<Bits, bool, BitsHash> tp_cache_;
};

void write_set(std::ostream &out, const VertexSet &s) {
    out << '[';
    bool first = true;
    for (Vertex v : s) {
        out << (first ? "" : ",") << v + 1;
        first = false;
    }
    out << ']';
}

}  // namespace

VertexSet Comb::shaft_union() const { return union_of(shaft); }

VertexSet Comb::teeth_union() const { return union_of(teeth); }

std::optional<Comb> validate_comb(const Graph &g, const std::vector<VertexSet> &shaft,
                                  const std::vector<VertexSet> &teeth) {
    const std::size_t l = shaft.size();
    if (l == 0 || teeth.size() != l) {
        return std::nullopt;
    }
    // label > 0: shaft position + 1; label < 0: -(tooth position + 1).
    std::vector<int> label(static_cast<std::size_t>(g.id_bound()), 0);
    auto place = [&](const VertexSet &s, int tag) {
        if (s.empty()) {
            return false;
        }
        for (Vertex v : s) {
            if (!g.contains(v) || label[static_cast<std::size_t>(v)] != 0) {
                return false;
            }
            label[static_cast<std::size_t>(v)] = tag;
        }
        return true;
    };
    for (std::size_t i = 0; i < l; ++i) {
        if (!place(shaft[i], static_cast<int>(i) + 1) || !place(teeth[i], -static_cast<int>(i) - 1)) {
            return std::nullopt;
        }
    }

    for (std::size_t i = 0; i < l; ++i) {
        const Vertex x = shaft[i].front();
        const auto nx = closed_nbhd(g, x);
        for (Vertex y : shaft[i]) {
            if (closed_nbhd(g, y) != nx) {
                return std::nullopt;
            }
        }
        for (Vertex u : g.neighbors(x)) {
            if (label[static_cast<std::size_t>(u)] != static_cast<int>(i) + 1 && g.degree(u) == g.degree(x) &&
                closed_nbhd(g, u) == nx) {
                return std::nullopt;
            }
        }
    }
    for (const auto &r : teeth) {
        if (!is_module(g, r) || !is_trivially_perfect(g, r)) {
            return std::nullopt;
        }
    }

    std::vector<Vertex> vp_list;
    std::vector<Vertex> shaft_out;
    for (const auto &r : teeth) {
        for (Vertex y : r) {
            for (Vertex u : g.neighbors(y)) {
                if (label[static_cast<std::size_t>(u)] == 0) {
                    vp_list.push_back(u);
                }
            }
        }
    }
    for (const auto &c : shaft) {
        for (Vertex x : c) {
            for (Vertex u : g.neighbors(x)) {
                if (label[static_cast<std::size_t>(u)] == 0) {
                    shaft_out.push_back(u);
                }
            }
        }
    }
    const VertexSet vp(std::move(vp_list));
    const VertexSet vf = set_difference(VertexSet(std::move(shaft_out)), vp);
    if (vf.empty()) {
        return std::nullopt;
    }
    const VertexSet vpf = set_union(vp, vf);

    // Shaft cliques are twin classes and teeth are modules, so one
    // representative each decides the adjacency pattern.
    std::vector<std::size_t> in_shaft(l);
    std::vector<std::size_t> in_teeth(l);
    std::vector<Vertex> outside;
    auto profile = [&](Vertex v) {
        std::fill(in_shaft.begin(), in_shaft.end(), 0);
        std::fill(in_teeth.begin(), in_teeth.end(), 0);
        outside.clear();
        for (Vertex u : g.neighbors(v)) {
            const int t = label[static_cast<std::size_t>(u)];
            if (t > 0) {
                ++in_shaft[static_cast<std::size_t>(t - 1)];
            } else if (t < 0) {
                ++in_teeth[static_cast<std::size_t>(-t - 1)];
            } else {
                outside.push_back(u);
            }
        }
    };
    for (std::size_t i = 0; i < l; ++i) {
        profile(shaft[i].front());
        for (std::size_t j = 0; j < l; ++j) {
            const std::size_t want_c = shaft[j].size() - (j == i ? 1 : 0);
            const std::size_t want_r = j >= i ? teeth[j].size() : 0;
            if (in_shaft[j] != want_c || in_teeth[j] != want_r) {
                return std::nullopt;
            }
        }
        if (outside != vpf.members()) {
            return std::nullopt;
        }
    }
    for (std::size_t i = 0; i < l; ++i) {
        for (Vertex y : teeth[i]) {
            profile(y);
            for (std::size_t j = 0; j < l; ++j) {
                const std::size_t want_c = j <= i ? shaft[j].size() : 0;
                if (in_shaft[j] != want_c || (j != i && in_teeth[j] != 0)) {
                    return std::nullopt;
                }
            }
            if (outside != vp.members()) {
                return std::nullopt;
            }
        }
    }

    Comb comb{shaft, teeth, vp, vf};
    if (!is_trivially_perfect(g, set_union(comb.shaft_union(), comb.teeth_union()))) {
        return std::nullopt;
    }
    return comb;
}

PrecedenceRelation build_precedence(const Graph &g, const Partition &cliques) {
    PrecedenceRelation rel;
    for (const auto &p : precedence_pairs(make_quotient(g, cliques))) {
        rel.edges.emplace_back(p.pred, p.succ);
    }
    return rel;
}

PrecedenceRelation build_precedence(const Graph &g) { return build_precedence(g, critical_clique_partition(g)); }

PrecedenceRelation prune_precedence(const PrecedenceRelation &rel) {
    std::map<std::size_t, int> indegree;
    for (const auto &[a, b] : rel.edges) {
        ++indegree[b];
    }
    PrecedenceRelation out;
    for (const auto &e : rel.edges) {
        if (indegree[e.second] == 1) {
            out.edges.push_back(e);
        }
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

std::vector<Comb> enumerate_critical_combs(const Graph &g) {
    if (g.num_vertices() == 0) {
        return {};
    }
    return CombFinder(g).run();
}

void write_comb(std::ostream &out, const Comb &c) {
    out << "shaft";
    for (const auto &s : c.shaft) {
        out << ' ';
        write_set(out, s);
    }
    out << " teeth";
    for (const auto &r : c.teeth) {
        out << ' ';
        write_set(out, r);
    }
    out << " vp ";
    write_set(out, c.attach_all);
    out << " vf ";
    write_set(out, c.attach_shaft);
    out << '\n';
}

}  // namespace tpk
