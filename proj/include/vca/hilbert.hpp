#pragma once

#include <vector>

#include "vca/bigint.hpp"
#include "vca/poset.hpp"

namespace vca {

// Polynomial in z as a coefficient list (index = degree). An h-vector is
// the coefficient list of a series numerator.
using Poly = std::vector<BigInt>;
using HVector = Poly;

// Rational series numerator / (1-z)^denom_exp, kept normalized: no
// trailing zero coefficients, and numerator(1) != 0 unless numerator is
// empty (the zero series).
struct HilbertSeries {
    Poly numerator;
    int denom_exp = 0;

    int degree() const { return static_cast<int>(numerator.size()) - 1; }
    friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

// Build a normalized series: strips trailing zeros, then cancels every
// (1-z) factor of the numerator against the denominator (while one remains).
HilbertSeries normalize_series(Poly numerator, int denom_exp);

// Exact rational arithmetic over the (1-z)-power denominators; results
// are normalized.
HilbertSeries series_add(const HilbertSeries& a, const HilbertSeries& b);
HilbertSeries series_mul(const HilbertSeries& a, const HilbertSeries& b);

Poly poly_mul(const Poly& a, const Poly& b);

// --- graded pieces of the two algebras -------------------------------

// h-vector of the degree-0 fiber algebra (the lattice's toric ring):
// entry i counts linear extensions with i descents, padded with zeros to
// length n+2 (the two top entries always vanish). The zero-element poset
// gives (1).
HVector basic_h_vector(const Poset& p, int max_n = Poset::kDefaultMaxN);

// Its Hilbert series: basic h-polynomial over (1-z)^(m+1) for an
// m-element poset; the zero-element poset gives 1/(1-z).
HilbertSeries basic_hilbert_series(const Poset& p, int max_n = Poset::kDefaultMaxN);

// h-vector of the full cover algebra, assembled by the subset
// decomposition: every subset F of the elements contributes its induced
// subposet's basic h-polynomial shifted by n-|F|. Length n+1. `threads`
// may split the subset range; the exact integer sum is order-independent,
// so output is identical for any thread count.
HVector cover_algebra_h_vector(const Poset& p, int threads = 1,
                               int max_n = Poset::kDefaultMaxN);

// The same numerator over (1-z)^(2n+1).
HilbertSeries cover_algebra_hilbert_series(const Poset& p, int threads = 1,
                                           int max_n = Poset::kDefaultMaxN);

// Independent route: evaluate the decomposition as literal rational
// arithmetic — sum over F of (basic series of F) * (z/(1-z))^(n-|F|),
// all times 1/(1-z)^n — with normalization at every step. Must equal
// cover_algebra_hilbert_series exactly.
HilbertSeries cover_algebra_hilbert_series_by_rational(const Poset& p,
                                                       int max_n = Poset::kDefaultMaxN);

// Single h-vector entry by direct descent counting: sum over l of the
// number of linear extensions of (n-l)-element induced subposets having
// j-l descents. Defined for 0 <= j <= n (j = n counts the empty subset).
BigInt h_entry_by_subposet_descents(const Poset& p, int j,
                                    int max_n = Poset::kDefaultMaxN);

// --- scalar invariants ------------------------------------------------

BigInt multiplicity(const HVector& h); // sum of entries
int a_invariant(const HilbertSeries& s); // numerator degree - denom_exp

// Coefficient of z^k in the series expansion.
BigInt hilbert_function(const HilbertSeries& s, long k);

// Permutations of [n] with exactly i descents; A(0,0) = 1, A(q,q) = 0
// for q >= 1. Throws IndexError outside 0 <= i <= n.
BigInt eulerian(int n, int i);

// Closed forms for the two extreme posets, over (1-z)^(2n+1):
// chain numerator (1+z)^n; antichain numerator entries
// sum_l C(n,l) * A(n-l, j-l).
HilbertSeries chain_series(int n);
HilbertSeries antichain_series(int n);

// --- shape of a cover-algebra h-vector --------------------------------

struct ShapeReport {
    bool symmetric = false;      // h_i = h_{n-i}
    bool unimodal = false;       // single peak
    bool lower_bound_ok = false; // C(n,j) <= h_j
    bool upper_bound_ok = false; // h_j <= antichain entry
    bool h1_identity = false;    // h_1 = lattice size - 1

    bool all_ok() const {
        return symmetric && unimodal && lower_bound_ok && upper_bound_ok && h1_identity;
    }
};

// Literal predicate checks; caller supplies the lattice size for the
// h_1 identity.
ShapeReport check_shape(const HVector& h, int n, const BigInt& lattice_size);

} // namespace vca
