#pragma once

#include <string>
#include <vector>

#include "vca/cover_graph.hpp"
#include "vca/hilbert.hpp"
#include "vca/ideal_lattice.hpp"
#include "vca/poset.hpp"

namespace vca {

// One compared degree: the closed-formula value against an independently
// enumerated value.
struct OracleCheck {
    std::string name;
    long k = 0;
    BigInt formula;
    BigInt oracle;
    bool agree = false;
};

struct OracleReport {
    long k_max = 0;
    std::vector<OracleCheck> values;
    bool agree = true;

    void add(std::string name, long k, BigInt formula, BigInt oracle);
};

// --- independent Hilbert-function routes ------------------------------

// Degree-k dimension by direct enumeration: sum over j <= k of the number
// of exponent vectors of total degree j*n + (k-j) whose weights give every
// edge at least j. Exponential; capped.
BigInt hilbert_function_bruteforce(const Poset& p, long k, int max_n = 4,
                                   long max_k = 5);

// Same value via ideal-power membership: a monomial lies in the j-th
// power of the cover ideal iff it is divisible by a product of j
// generators. Makes no use of the per-edge weight criterion. Tighter caps.
BigInt hilbert_function_power_oracle(const Poset& p, long k, int max_n = 3,
                                     long max_k = 4);

// Number of weakly increasing k-tuples in the ideal lattice (multichains),
// by dynamic programming; the degree-k dimension of the lattice's toric ring.
BigInt basic_hilbert_bruteforce(const Poset& p, long k,
                                std::size_t max_lattice = 4096);

// --- h-vector extraction ----------------------------------------------

// Invert H(z) = h(z)/(1-z)^d given H(0..K): h_j = sum_i (-1)^i C(d,i) H(j-i).
// Every implied entry at index >= out_len must vanish, else the input is
// inconsistent with a degree-(out_len-1) numerator.
HVector h_vector_from_function_with_denom(const std::vector<BigInt>& values,
                                          int d, int out_len);

// The cover-algebra case: d = 2n+1, numerator degree n. Needs K >= n.
HVector h_vector_from_function(const std::vector<BigInt>& values, int n);

// --- exhaustive verifiers ----------------------------------------------

struct LemmaDeltaReport {
    bool ok = true;
    std::string counterexample; // empty when ok
};

// For every subset f of the elements: the attachment map delta matches
// brute-force maximality, phi is an inclusion-preserving bijection onto
// the family S with inverse psi.
LemmaDeltaReport verify_lemma_delta(const Poset& p, int max_n = 6);

// Chain/antichain sandwich on Hilbert-function values for k <= k_max.
bool verify_monotonicity(const Poset& p, long k_max);

// --- comparison drivers (CLI `oracle-verify`) --------------------------

OracleReport compare_graded(const Poset& p, long k_max, int max_n = 4,
                            long oracle_max_k = 5);
OracleReport compare_power(const Poset& p, long k_max, int max_n = 3,
                           long oracle_max_k = 4);
OracleReport compare_basic(const Poset& p, long k_max);

} // namespace vca
