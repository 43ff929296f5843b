#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "vca/ideal_lattice.hpp"
#include "vca/poset.hpp"

namespace vca {

// A variable of the presentation ring: x_i or y_i (0-based element index)
// or u_a for an order ideal a. Ordering drives the printed factor order:
// x's, then y's, then u's with larger ideals first.
struct ToricVar {
    enum class Kind { X, Y, U };
    Kind kind = Kind::X;
    int index = 0;   // X/Y only
    Mask ideal = 0;  // U only

    friend bool operator==(const ToricVar&, const ToricVar&) = default;
    bool operator<(const ToricVar& o) const;
};

ToricVar var_x(int i);
ToricVar var_y(int i);
ToricVar var_u(Mask ideal);

// variable -> exponent; absent means exponent zero
using ToricMonomial = std::map<ToricVar, int>;

struct ToricBinomial {
    ToricMonomial lead;
    ToricMonomial trail;
    friend bool operator==(const ToricBinomial&, const ToricBinomial&) = default;
};

// Defining relations of the full cover algebra, lead monomial first:
//   x_j u_a - y_j u_{a+j}   for each ideal a and element j attachable to a,
//                           ordered by (j, lattice position of a);
//   u_a u_b - u_{a|b} u_{a&b}  over incomparable ideal pairs, ordered by
//                              lattice position, union written first.
// The lists are reduced Groebner bases for the lex-like order that makes
// the first monomial of each relation the initial one.
std::vector<ToricBinomial> groebner_G(const Poset& p, std::size_t max_lattice = 4096);

// The lattice relations alone: the defining relations of the subalgebra
// spanned by the cover generators themselves.
std::vector<ToricBinomial> groebner_G0(const Poset& p, std::size_t max_lattice = 4096);

// True iff the lead monomials of groebner_G are pairwise coprime, i.e. the
// initial ideal they generate is a complete intersection.
bool is_complete_intersection_initial(const Poset& p, std::size_t max_lattice = 4096);

// "x1*u_0" style: factors '*'-joined, '^exp' only when exp > 1, ideals
// labeled u_<dotted 1-based members> with u_0 for the empty ideal.
std::string format_monomial(const ToricMonomial& m);

// "LEAD - TRAIL"
std::string format_binomial(const ToricBinomial& b);

// Header line "# n=<n> lattice=<size> basis=<label>" then one binomial per
// line. Byte-deterministic for a given input.
void export_binomials(std::ostream& os, const Poset& p,
                      const std::vector<ToricBinomial>& bs, const std::string& label);
std::string export_to_string(const Poset& p, const std::vector<ToricBinomial>& bs,
                             const std::string& label);

// Transcription guard: every binomial has lead != trail, equal total degree
// on both sides, and both sides map to the same exponent vector when each
// u_a is replaced by the monomial of a's minimal cover (x's and y's fixed).
bool substitution_vanishes(const Poset& p, const std::vector<ToricBinomial>& bs);

} // namespace vca
