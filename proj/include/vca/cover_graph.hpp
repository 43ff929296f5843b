#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "vca/ideal_lattice.hpp"
#include "vca/poset.hpp"

namespace vca {

// Bipartite graph on x_1..x_n against y_1..y_n; an edge (i, j) joins x_i
// and y_j (0-based internally). Graphs built from a poset carry an edge
// exactly when p_i <= p_j, so every (i, i) is present and i <= j throughout.
struct BipartiteGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

// A vertex cover as one bit-mask per side.
struct VertexCover {
    Mask xmask = 0;
    Mask ymask = 0;

    int vertex_count() const { return popcount(xmask) + popcount(ymask); }
    friend bool operator==(const VertexCover&, const VertexCover&) = default;
};

// Canonical cover order: ascending (x-cardinality, x-mask value).
bool cover_less(const VertexCover& a, const VertexCover& b);

// Nonnegative integer weights on the 2n vertices, x-side first.
using ExponentVector = std::vector<std::int64_t>;

BipartiteGraph graph_from_poset(const Poset& p);

// All minimal vertex covers via the incremental construction: a cover of
// the k-element graph extends every cover of the (k-1)-element graph by
// y_k, and by x_k when all of p_k's strict predecessors contribute their
// x-vertex. Requires natural labeling; canonical output order.
std::vector<VertexCover> minimal_covers_recursive(const Poset& p,
                                                  std::size_t max_count = 1u << 20);

// Brute-force oracle: scan all 2^(2n) vertex subsets for inclusion-minimal
// covers. Only for 2n <= 24.
std::vector<VertexCover> minimal_covers_naive(const BipartiteGraph& g);

// Mutually inverse bijections between minimal covers of the poset's graph
// and the poset's order ideals: the ideal reads off the x-side; the cover
// puts x on the ideal and y on its complement.
IdealMask cover_to_ideal(const Poset& p, const VertexCover& c);
VertexCover ideal_to_cover(const Poset& p, IdealMask alpha);

// True iff weights a give every edge total weight at least k.
bool is_k_cover(const BipartiteGraph& g, const ExponentVector& a, std::int64_t k);

// Squarefree degree-n monomial of an ideal: x_i for members, y_j for
// non-members. These are the generators of the cover ideal.
ExponentVector generator_monomial(const Poset& p, IdealMask alpha);

// True iff all minimal covers of g share one cardinality. Accepts
// arbitrary bipartite edge lists, not only poset graphs.
bool is_unmixed(const BipartiteGraph& g);

} // namespace vca
