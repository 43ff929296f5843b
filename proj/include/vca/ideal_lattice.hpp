#pragma once

#include <unordered_map>
#include <vector>

#include "vca/bigint.hpp"
#include "vca/poset.hpp"

namespace vca {

// An order ideal (downward-closed subset) of a poset, as a bit-mask over
// the poset's elements in original indices.
using IdealMask = Mask;

// The lattice of all order ideals of a poset, in canonical order:
// ascending (cardinality, mask value). Closed under union and
// intersection; always contains the empty and full masks.
class IdealLattice {
public:
    IdealLattice(int n, std::vector<IdealMask> ideals);

    int ambient_size() const { return n_; }
    std::size_t size() const { return ideals_.size(); }
    const std::vector<IdealMask>& ideals() const { return ideals_; }
    IdealMask at(std::size_t i) const { return ideals_[i]; }

    bool contains(IdealMask m) const { return index_.count(m) != 0; }
    // Position in canonical order; throws DomainError if absent.
    int index_of(IdealMask m) const;

private:
    int n_;
    std::vector<IdealMask> ideals_;
    std::unordered_map<IdealMask, int> index_;
};

// True iff mask is downward closed in p.
bool is_ideal(const Poset& p, Mask mask);

// All order ideals, built by the element-by-element recursion: ideals of
// the first k elements either omit element k or contain it along with all
// its predecessors. Requires a naturally labeled poset.
IdealLattice enumerate_ideals(const Poset& p, std::size_t max_count = 1u << 20);

// Largest subset d of f such that alpha ∪ d is an ideal of p, where alpha
// is an ideal of the subposet induced on the complement of f. Computed by
// the closed form { j in f : every predecessor lies in f or in alpha }.
Mask delta(const Poset& p, Mask f, IdealMask alpha);

// Membership in the distinguished family S of ideals beta of p such that
// no element of f outside beta can be added while staying an ideal.
bool in_S(const Poset& p, Mask f, IdealMask beta);

// phi(alpha) = alpha ∪ delta(alpha): a bijection from ideals of the
// complement subposet onto S. psi(beta) = beta ∩ complement(f) inverts it.
IdealMask phi(const Poset& p, Mask f, IdealMask alpha);
IdealMask psi(const Poset& p, Mask f, IdealMask beta);

// Face counts of the chain complex of the lattice: entry 0 is 1 (the empty
// face), entry i counts i-element chains a_1 ⊊ … ⊊ a_i.
std::vector<BigInt> order_complex_f_vector(const IdealLattice& lat,
                                           std::size_t max_count = 4096);

// h-vector of a complex from its face counts, over denominator dimension d:
// sum_i f_{i-1} z^i (1-z)^{d-i} written as sum_j h_j z^j. Length d+1.
std::vector<BigInt> f_to_h(const std::vector<BigInt>& f, int d);

} // namespace vca
