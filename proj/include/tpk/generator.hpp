#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tpk/edit_set.hpp"
#include "tpk/graph.hpp"

namespace tpk {

/// mt19937_64 with bounded draws done by rejection sampling, so the same
/// seed gives the same stream on every platform (standard distributions are
/// implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi);

    template <typename T>
    void shuffle(std::vector<T> &v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

struct GenParams {
    Vertex n = 1;
    int min_fanout = 2;
    int max_fanout = 4;
    int min_bag = 1;
    int max_bag = 3;
    std::uint64_t seed = 0;
};

/// Random connected trivially perfect graph on exactly n vertices, built from
/// a random UCD: leaves picked uniformly are expanded into min..max_fanout
/// children, bag sizes follow a geometric draw clamped to the bag bounds.
/// Vertex identifiers are shuffled. Throws InputError on invalid params.
Graph random_tp_graph(const GenParams &p);

struct Perturbation {
    Graph graph;
    /// Edits turning graph back into the input; legal for the variant.
    EditSet repair;
};

/// Applies r random pair changes whose reversal is legal for the variant:
/// toggles (editing), edge removals (completion) or edge insertions
/// (deletion). Throws InputError if g is not trivially perfect, r < 0, or not
/// enough pairs are available.
Perturbation perturb(const Graph &g, int r, Variant variant, std::uint64_t seed);

struct PlantedComb {
    Graph graph;
    std::vector<VertexSet> shaft;
    std::vector<VertexSet> teeth;
    VertexSet attach_all;
    VertexSet attach_shaft;
};

/// Comb fixture: shaft singletons c_1..c_l (ids 0..l-1), teeth of the given
/// sizes (random trivially perfect graphs, consecutive ids), then f (shaft
/// only), p (whole comb), and max(1, k_context) C4s p-q-s-t hanging off p.
/// With all teeth of size 1 and l = 3 this is COMB3P.
PlantedComb plant_comb(int l, const std::vector<int> &tooth_sizes, int k_context, std::uint64_t seed);

}  // namespace tpk
