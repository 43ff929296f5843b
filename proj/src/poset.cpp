#include "vca/poset.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

namespace vca {

int popcount(Mask m) { return std::popcount(m); }

Poset::Poset(int n, std::vector<Mask> down) : n_(n), down_(std::move(down)) {
    rebuild_up();
}

void Poset::rebuild_up() {
    up_.assign(n_, 0);
    for (int j = 0; j < n_; ++j)
        for (int i = 0; i < n_; ++i)
            if ((down_[j] >> i) & 1u) up_[i] |= bit_of(j);
}

Poset Poset::empty() { return Poset(0, {}); }

Poset Poset::from_closed_masks(int n, std::vector<Mask> down) {
    if (n < 0 || n > kHardMaxN)
        throw SizeLimitError("poset size " + std::to_string(n) + " out of range");
    if (static_cast<int>(down.size()) != n)
        throw InconsistentInputError("mask count does not match element count");
    for (int j = 0; j < n; ++j) {
        if (down[j] & ~full_mask(n))
            throw IndexError("predecessor mask references element past n");
        if (!((down[j] >> j) & 1u))
            throw InconsistentInputError("relation is not reflexive");
    }
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (i != j && ((down[j] >> i) & 1u)) {
                if ((down[i] >> j) & 1u)
                    throw CycleError("relation is not antisymmetric");
                if (down[i] & ~down[j])
                    throw InconsistentInputError("relation is not transitive");
            }
    return Poset(n, std::move(down));
}

Poset Poset::from_cover_relations(int n,
                                  const std::vector<std::pair<int, int>>& relations,
                                  int max_n) {
    if (n < 1) throw DomainError("poset needs at least one element");
    if (n > max_n || n > kHardMaxN)
        throw SizeLimitError("poset size " + std::to_string(n) + " exceeds cap " +
                             std::to_string(std::min(max_n, kHardMaxN)));
    std::vector<Mask> down(n);
    for (int j = 0; j < n; ++j) down[j] = bit_of(j);
    for (auto [a, b] : relations) {
        if (a < 1 || a > n || b < 1 || b > n)
            throw IndexError("relation (" + std::to_string(a) + "," + std::to_string(b) +
                             ") outside [1," + std::to_string(n) + "]");
        if (a == b)
            throw CycleError("relation p_" + std::to_string(a) + " < p_" +
                             std::to_string(a) + " is cyclic");
        down[b - 1] |= bit_of(a - 1);
    }
    // Warshall closure on predecessor masks.
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            if ((down[j] >> k) & 1u) down[j] |= down[k];
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (((down[j] >> i) & 1u) && ((down[i] >> j) & 1u))
                throw CycleError("relations induce a cycle through p_" +
                                 std::to_string(i + 1) + " and p_" + std::to_string(j + 1));
    return Poset(n, std::move(down));
}

Poset Poset::chain(int n) {
    if (n < 1) throw DomainError("chain needs at least one element");
    if (n > kHardMaxN) throw SizeLimitError("chain size exceeds representation cap");
    std::vector<Mask> down(n);
    for (int j = 0; j < n; ++j) down[j] = full_mask(j + 1);
    return Poset(n, std::move(down));
}

Poset Poset::antichain(int n) {
    if (n < 1) throw DomainError("antichain needs at least one element");
    if (n > kHardMaxN) throw SizeLimitError("antichain size exceeds representation cap");
    std::vector<Mask> down(n);
    for (int j = 0; j < n; ++j) down[j] = bit_of(j);
    return Poset(n, std::move(down));
}

Poset Poset::random(int n, std::uint64_t seed, double density, int max_n) {
    if (n < 1) throw DomainError("poset needs at least one element");
    if (density < 0.0 || density > 1.0)
        throw DomainError("density must lie in [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> rels;
    // Fixed pair order and a fixed mapping from raw engine output to [0,1)
    // keep samples identical across platforms.
    for (int i = 0; i < n - 1; ++i)
        for (int j = i + 1; j < n; ++j) {
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < density) rels.emplace_back(i + 1, j + 1);
        }
    return from_cover_relations(n, rels, max_n);
}

bool Poset::naturally_labeled() const {
    for (int j = 0; j < n_; ++j)
        if (down_[j] & ~full_mask(j + 1)) return false;
    return true;
}

int Poset::relation_count() const {
    int c = 0;
    for (int j = 0; j < n_; ++j) c += popcount(down_[j]);
    return c;
}

Poset Poset::induced(Mask f) const {
    if (f & ~elements()) throw IndexError("subset references element past n");
    std::vector<int> elems;
    for (int i = 0; i < n_; ++i)
        if ((f >> i) & 1u) elems.push_back(i);
    int m = static_cast<int>(elems.size());
    std::vector<Mask> down(m, 0);
    for (int b = 0; b < m; ++b)
        for (int a = 0; a < m; ++a)
            if (leq(elems[a], elems[b])) down[b] |= bit_of(a);
    return Poset(m, std::move(down));
}

std::vector<std::pair<int, int>> Poset::cover_relations() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (!less(i, j)) continue;
            bool covered = true;
            for (int k = 0; k < n_ && covered; ++k)
                if (k != i && k != j && less(i, k) && less(k, j)) covered = false;
            if (covered) out.emplace_back(i, j);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<Poset, std::vector<int>> natural_relabel(const Poset& p) {
    int n = p.size();
    std::vector<int> order; // order[new] = old
    order.reserve(n);
    Mask placed = 0;
    for (int t = 0; t < n; ++t) {
        int pick = -1;
        for (int i = 0; i < n; ++i) {
            if ((placed >> i) & 1u) continue;
            if ((p.strict_down_mask(i) & ~placed) == 0) { pick = i; break; }
        }
        // A partial order always has a minimal unplaced element.
        order.push_back(pick);
        placed |= bit_of(pick);
    }
    std::vector<int> perm(n); // perm[old] = new
    for (int t = 0; t < n; ++t) perm[order[t]] = t;
    std::vector<Mask> down(n, 0);
    for (int t = 0; t < n; ++t) {
        Mask old_down = p.down_mask(order[t]);
        for (int i = 0; i < n; ++i)
            if ((old_down >> i) & 1u) down[t] |= bit_of(perm[i]);
    }
    return {Poset::from_closed_masks(n, std::move(down)), std::move(perm)};
}

BigInt DescentProfile::total() const {
    BigInt s = 0;
    for (const auto& c : counts) s += c;
    return s;
}

namespace {

void extend_all(const Poset& p, Mask remaining, int last, int desc,
                std::vector<BigInt>& counts) {
    if (remaining == 0) {
        counts[desc] += 1;
        return;
    }
    for (Mask m = remaining; m;) {
        int j = std::countr_zero(m);
        m &= m - 1;
        if (p.strict_down_mask(j) & remaining) continue; // not minimal yet
        extend_all(p, remaining & ~bit_of(j), j,
                   desc + (last >= 0 && j < last ? 1 : 0), counts);
    }
}

} // namespace

DescentProfile linear_extensions_by_descents(const Poset& p, int max_n) {
    int n = p.size();
    if (n > max_n)
        throw SizeLimitError("linear extension enumeration capped at n = " +
                             std::to_string(max_n));
    if (!p.naturally_labeled())
        throw DomainError("descent counting requires a naturally labeled poset");
    DescentProfile prof;
    if (n == 0) {
        prof.counts.assign(1, BigInt(1)); // the single empty extension
        return prof;
    }
    prof.counts.assign(n, BigInt(0));
    extend_all(p, p.elements(), -1, 0, prof.counts);
    return prof;
}

namespace {

bool match_elements(const Poset& a, const Poset& b, int i, std::vector<int>& map,
                    Mask& used) {
    int n = a.size();
    if (i == n) return true;
    for (int v = 0; v < n; ++v) {
        if ((used >> v) & 1u) continue;
        if (popcount(a.down_mask(i)) != popcount(b.down_mask(v)) ||
            popcount(a.up_mask(i)) != popcount(b.up_mask(v)))
            continue;
        bool ok = true;
        for (int u = 0; u < i && ok; ++u)
            ok = a.leq(u, i) == b.leq(map[u], v) && a.leq(i, u) == b.leq(v, map[u]);
        if (!ok) continue;
        map[i] = v;
        used |= bit_of(v);
        if (match_elements(a, b, i + 1, map, used)) return true;
        used &= ~bit_of(v);
    }
    return false;
}

} // namespace

bool is_isomorphic(const Poset& a, const Poset& b, int max_n) {
    if (a.size() != b.size()) return false;
    int n = a.size();
    if (n > max_n)
        throw SizeLimitError("isomorphism search capped at n = " + std::to_string(max_n));
    if (n == 0) return true;
    if (a.relation_count() != b.relation_count()) return false;
    std::vector<int> map(n, -1);
    Mask used = 0;
    return match_elements(a, b, 0, map, used);
}

std::vector<Poset> all_naturally_labeled_posets(int n, int max_n) {
    if (n < 1) throw DomainError("poset enumeration needs n >= 1");
    if (n > max_n)
        throw SizeLimitError("poset enumeration capped at n = " + std::to_string(max_n));
    // Upward relations (i, j), i < j, listed in a fixed order; each subset
    // of them is a candidate relation, kept iff already transitively closed.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n - 1; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<Poset> out;
    for (std::uint64_t pat = 0; pat < (std::uint64_t(1) << pairs.size()); ++pat) {
        std::vector<Mask> down(n);
        for (int j = 0; j < n; ++j) down[j] = bit_of(j);
        for (std::size_t t = 0; t < pairs.size(); ++t)
            if ((pat >> t) & 1u) down[pairs[t].second] |= bit_of(pairs[t].first);
        bool transitive = true;
        for (int j = 0; j < n && transitive; ++j) {
            Mask pred = down[j] & ~bit_of(j);
            for (Mask m = pred; m && transitive;) {
                int i = std::countr_zero(m);
                m &= m - 1;
                if (down[i] & ~down[j]) transitive = false;
            }
        }
        if (transitive) out.push_back(Poset::from_closed_masks(n, std::move(down)));
    }
    return out;
}

} // namespace vca
