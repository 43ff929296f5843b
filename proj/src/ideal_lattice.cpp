#include "vca/ideal_lattice.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace vca {

IdealLattice::IdealLattice(int n, std::vector<IdealMask> ideals)
    : n_(n), ideals_(std::move(ideals)) {
    std::sort(ideals_.begin(), ideals_.end(), [](IdealMask a, IdealMask b) {
        int ca = popcount(a), cb = popcount(b);
        return ca != cb ? ca < cb : a < b;
    });
    index_.reserve(ideals_.size());
    for (std::size_t i = 0; i < ideals_.size(); ++i)
        index_.emplace(ideals_[i], static_cast<int>(i));
    if (index_.size() != ideals_.size())
        throw InconsistentInputError("duplicate ideals in lattice");
}

int IdealLattice::index_of(IdealMask m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw DomainError("mask is not in the lattice");
    return it->second;
}

bool is_ideal(const Poset& p, Mask mask) {
    if (mask & ~p.elements()) return false;
    for (Mask m = mask; m;) {
        int j = std::countr_zero(m);
        m &= m - 1;
        if (p.strict_down_mask(j) & ~mask) return false;
    }
    return true;
}

IdealLattice enumerate_ideals(const Poset& p, std::size_t max_count) {
    if (!p.naturally_labeled())
        throw DomainError("ideal enumeration requires a naturally labeled poset");
    std::vector<IdealMask> ideals = {0};
    for (int k = 0; k < p.size(); ++k) {
        Mask need = p.strict_down_mask(k);
        std::size_t old_count = ideals.size();
        for (std::size_t i = 0; i < old_count; ++i)
            if ((need & ~ideals[i]) == 0) {
                ideals.push_back(ideals[i] | bit_of(k));
                if (ideals.size() > max_count)
                    throw SizeLimitError("ideal lattice exceeds cap of " +
                                         std::to_string(max_count) + " elements");
            }
    }
    return IdealLattice(p.size(), std::move(ideals));
}

Mask delta(const Poset& p, Mask f, IdealMask alpha) {
    Mask complement = p.elements() & ~f;
    if (alpha & ~complement)
        throw NotAnIdealError("alpha must lie in the complement of f");
    for (Mask m = alpha; m;) {
        int j = std::countr_zero(m);
        m &= m - 1;
        if (p.strict_down_mask(j) & complement & ~alpha)
            throw NotAnIdealError("alpha is not an ideal of the complement subposet");
    }
    Mask d = 0;
    for (Mask m = f; m;) {
        int j = std::countr_zero(m);
        m &= m - 1;
        if ((p.strict_down_mask(j) & ~(f | alpha)) == 0) d |= bit_of(j);
    }
    return d;
}

bool in_S(const Poset& p, Mask f, IdealMask beta) {
    if (!is_ideal(p, beta)) return false;
    for (Mask m = f & ~beta; m;) {
        int j = std::countr_zero(m);
        m &= m - 1;
        if (is_ideal(p, beta | bit_of(j))) return false;
    }
    return true;
}

IdealMask phi(const Poset& p, Mask f, IdealMask alpha) {
    Mask complement = p.elements() & ~f;
    bool ok = (alpha & ~complement) == 0;
    for (Mask m = alpha; ok && m;) {
        int j = std::countr_zero(m);
        m &= m - 1;
        if (p.strict_down_mask(j) & complement & ~alpha) ok = false;
    }
    if (!ok) throw DomainError("phi requires an ideal of the complement subposet");
    return alpha | delta(p, f, alpha);
}

IdealMask psi(const Poset& p, Mask f, IdealMask beta) {
    if (!in_S(p, f, beta))
        throw DomainError("psi requires a member of the attachment-closed family S");
    return beta & ~f;
}

std::vector<BigInt> order_complex_f_vector(const IdealLattice& lat,
                                           std::size_t max_count) {
    if (lat.size() > max_count)
        throw SizeLimitError("chain counting capped at lattice size " +
                             std::to_string(max_count));
    const auto& ids = lat.ideals();
    std::size_t L = ids.size();
    std::vector<BigInt> f = {BigInt(1)};
    // ways[v] = number of chains of the current length ending at ideal v;
    // canonical order is topological for ⊂, so one forward pass per length.
    std::vector<BigInt> ways(L, BigInt(1));
    while (true) {
        BigInt level = 0;
        for (const auto& w : ways) level += w;
        if (level == 0) break;
        f.push_back(level);
        std::vector<BigInt> next(L, BigInt(0));
        for (std::size_t b = 0; b < L; ++b)
            for (std::size_t a = 0; a < b; ++a)
                if (ids[a] != ids[b] && (ids[a] & ~ids[b]) == 0) next[b] += ways[a];
        ways = std::move(next);
    }
    return f;
}

std::vector<BigInt> f_to_h(const std::vector<BigInt>& f, int d) {
    if (d < 0 || static_cast<int>(f.size()) > d + 1)
        throw DomainError("face vector longer than dimension allows");
    std::vector<BigInt> h(d + 1, BigInt(0));
    for (int i = 0; i < static_cast<int>(f.size()); ++i)
        for (int j = i; j <= d; ++j) {
            BigInt term = f[i] * binomial(d - i, j - i);
            if ((j - i) % 2 == 0)
                h[j] += term;
            else
                h[j] -= term;
        }
    return h;
}

} // namespace vca
