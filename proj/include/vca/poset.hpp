#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "vca/bigint.hpp"
#include "vca/errors.hpp"

namespace vca {

// Subset of element indices packed into bits: bit i set ⇔ element i included.
using Mask = std::uint32_t;

inline Mask bit_of(int i) { return Mask(1) << i; }
inline Mask full_mask(int n) { return n == 0 ? 0 : (Mask(~Mask(0)) >> (32 - n)); }
int popcount(Mask m);

// Finite partial order on elements p_0 .. p_{n-1} (0-indexed internally;
// all I/O uses 1-based labels p_1 .. p_n). The relation is stored as the
// reflexive-transitive closure, one predecessor bit-mask per element.
//
// Class invariants: reflexive, antisymmetric, transitive. Natural labeling
// (p_i <= p_j implies i <= j) is required by most algorithms but NOT forced
// at construction — from_cover_relations may return an unnatural order and
// the caller relabels via natural_relabel().
class Poset {
public:
    static constexpr int kDefaultMaxN = 20;
    static constexpr int kHardMaxN = 25; // bit-mask representation bound

    // The distinguished zero-element poset (value of induced(∅)).
    static Poset empty();

    // Build from generating relations (a, b) meaning p_a < p_b, 1-based.
    // Computes the reflexive-transitive closure.
    static Poset from_cover_relations(int n,
                                      const std::vector<std::pair<int, int>>& relations,
                                      int max_n = kDefaultMaxN);

    // Validated construction from already-closed predecessor masks (0-based).
    static Poset from_closed_masks(int n, std::vector<Mask> down);

    static Poset chain(int n);     // total order p_1 <= ... <= p_n
    static Poset antichain(int n); // trivial order

    // Sample cover relations (i, j), i < j, each kept with probability
    // `density`, then close transitively. Deterministic for a fixed seed;
    // density 0 gives the antichain, density 1 the chain.
    static Poset random(int n, std::uint64_t seed, double density,
                        int max_n = kDefaultMaxN);

    int size() const { return n_; }
    bool leq(int i, int j) const { return (down_[j] >> i) & 1u; } // p_i <= p_j
    bool less(int i, int j) const { return i != j && leq(i, j); }
    Mask down_mask(int j) const { return down_[j]; } // {i : p_i <= p_j}
    Mask up_mask(int i) const { return up_[i]; }     // {j : p_i <= p_j}
    Mask strict_down_mask(int j) const { return down_[j] & ~bit_of(j); }
    Mask elements() const { return full_mask(n_); }

    bool naturally_labeled() const;
    int relation_count() const; // number of leq pairs, reflexive included

    // Subposet on the elements of f, relabeled 0..|f|-1 in increasing
    // original index (this keeps natural labelings natural).
    Poset induced(Mask f) const;

    // Hasse diagram: pairs (i, j) with p_i < p_j and nothing strictly
    // between, 0-based, sorted lexicographically.
    std::vector<std::pair<int, int>> cover_relations() const;

    bool operator==(const Poset&) const = default;

private:
    Poset(int n, std::vector<Mask> down);
    void rebuild_up();

    int n_ = 0;
    std::vector<Mask> down_; // down_[j] over elements i with p_i <= p_j
    std::vector<Mask> up_;
};

// Relabel to a naturally labeled poset. Returns the relabeled poset and the
// permutation g (0-based, g[old] = new). Deterministic: stable topological
// order, smallest original index first. Idempotent on natural labelings.
std::pair<Poset, std::vector<int>> natural_relabel(const Poset& p);

// Counts of linear extensions grouped by their number of descents. An
// extension is read as the permutation of original labels in placement
// order; a descent is a position where the label decreases.
struct DescentProfile {
    std::vector<BigInt> counts; // counts[i] = extensions with exactly i descents
    BigInt total() const;
};

// Exact profile by backtracking over all linear extensions.
// Throws DomainError unless p is naturally labeled, SizeLimitError past max_n.
DescentProfile linear_extensions_by_descents(const Poset& p,
                                             int max_n = Poset::kDefaultMaxN);

// Order-isomorphism test by backtracking over label maps; intended for
// small posets. Throws SizeLimitError past max_n.
bool is_isomorphic(const Poset& a, const Poset& b, int max_n = 10);

// Every naturally labeled partial order on n elements, enumerated by
// upward relation patterns. Sizes grow fast (n=6 gives 4824); capped.
std::vector<Poset> all_naturally_labeled_posets(int n, int max_n = 6);

} // namespace vca
