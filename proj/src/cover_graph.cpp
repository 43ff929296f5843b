#include "vca/cover_graph.hpp"

#include <algorithm>
#include <string>

namespace vca {

bool cover_less(const VertexCover& a, const VertexCover& b) {
    int ca = popcount(a.xmask), cb = popcount(b.xmask);
    if (ca != cb) return ca < cb;
    if (a.xmask != b.xmask) return a.xmask < b.xmask;
    return a.ymask < b.ymask;
}

BipartiteGraph graph_from_poset(const Poset& p) {
    if (!p.naturally_labeled())
        throw DomainError("graph construction requires a naturally labeled poset");
    BipartiteGraph g;
    g.n = p.size();
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (p.leq(i, j)) g.edges.emplace_back(i, j);
    return g;
}

std::vector<VertexCover> minimal_covers_recursive(const Poset& p,
                                                  std::size_t max_count) {
    if (!p.naturally_labeled())
        throw DomainError("cover recursion requires a naturally labeled poset");
    if (p.size() < 1) throw DomainError("cover recursion needs n >= 1");
    std::vector<VertexCover> covers = {{bit_of(0), 0}, {0, bit_of(0)}};
    for (int k = 1; k < p.size(); ++k) {
        Mask need = p.strict_down_mask(k);
        std::vector<VertexCover> next;
        next.reserve(covers.size() * 2);
        for (const VertexCover& c : covers) {
            next.push_back({c.xmask, c.ymask | bit_of(k)});
            if ((need & ~c.xmask) == 0)
                next.push_back({c.xmask | bit_of(k), c.ymask});
            if (next.size() > max_count)
                throw SizeLimitError("cover count exceeds cap of " +
                                     std::to_string(max_count));
        }
        covers = std::move(next);
    }
    std::sort(covers.begin(), covers.end(), cover_less);
    return covers;
}

std::vector<VertexCover> minimal_covers_naive(const BipartiteGraph& g) {
    if (2 * g.n > 24)
        throw SizeLimitError("naive cover enumeration capped at 2n = 24");
    std::vector<VertexCover> out;
    std::uint32_t limit = std::uint32_t(1) << (2 * g.n);
    for (std::uint32_t s = 0; s < limit; ++s) {
        Mask xm = s & full_mask(g.n);
        Mask ym = (s >> g.n) & full_mask(g.n);
        bool covers_all = true;
        for (auto [i, j] : g.edges)
            if (!((xm >> i) & 1u) && !((ym >> j) & 1u)) { covers_all = false; break; }
        if (!covers_all) continue;
        // minimal: every chosen vertex is the sole cover of some edge
        bool minimal = true;
        for (int v = 0; v < g.n && minimal; ++v) {
            if (!((xm >> v) & 1u)) continue;
            bool private_edge = false;
            for (auto [i, j] : g.edges)
                if (i == v && !((ym >> j) & 1u)) { private_edge = true; break; }
            if (!private_edge) minimal = false;
        }
        for (int v = 0; v < g.n && minimal; ++v) {
            if (!((ym >> v) & 1u)) continue;
            bool private_edge = false;
            for (auto [i, j] : g.edges)
                if (j == v && !((xm >> i) & 1u)) { private_edge = true; break; }
            if (!private_edge) minimal = false;
        }
        if (minimal) out.push_back({xm, ym});
    }
    std::sort(out.begin(), out.end(), cover_less);
    return out;
}

namespace {

bool is_minimal_cover_of(const Poset& p, const VertexCover& c) {
    BipartiteGraph g = graph_from_poset(p);
    if ((c.xmask | c.ymask) & ~p.elements()) return false;
    for (auto [i, j] : g.edges)
        if (!((c.xmask >> i) & 1u) && !((c.ymask >> j) & 1u)) return false;
    for (int v = 0; v < g.n; ++v) {
        if ((c.xmask >> v) & 1u) {
            bool private_edge = false;
            for (auto [i, j] : g.edges)
                if (i == v && !((c.ymask >> j) & 1u)) { private_edge = true; break; }
            if (!private_edge) return false;
        }
        if ((c.ymask >> v) & 1u) {
            bool private_edge = false;
            for (auto [i, j] : g.edges)
                if (j == v && !((c.xmask >> i) & 1u)) { private_edge = true; break; }
            if (!private_edge) return false;
        }
    }
    return true;
}

} // namespace

IdealMask cover_to_ideal(const Poset& p, const VertexCover& c) {
    if (!is_minimal_cover_of(p, c))
        throw NotMinimalError("not a minimal vertex cover of the poset's graph");
    return c.xmask;
}

VertexCover ideal_to_cover(const Poset& p, IdealMask alpha) {
    if (!is_ideal(p, alpha))
        throw NotAnIdealError("mask is not an order ideal");
    return {alpha, p.elements() & ~alpha};
}

bool is_k_cover(const BipartiteGraph& g, const ExponentVector& a, std::int64_t k) {
    if (static_cast<int>(a.size()) != 2 * g.n)
        throw DomainError("weight vector must have 2n entries");
    for (auto w : a)
        if (w < 0) throw DomainError("weights must be nonnegative");
    for (auto [i, j] : g.edges)
        if (a[i] + a[g.n + j] < k) return false;
    return true;
}

ExponentVector generator_monomial(const Poset& p, IdealMask alpha) {
    if (!is_ideal(p, alpha))
        throw NotAnIdealError("mask is not an order ideal");
    int n = p.size();
    ExponentVector a(2 * n, 0);
    for (int i = 0; i < n; ++i) {
        if ((alpha >> i) & 1u)
            a[i] = 1;
        else
            a[n + i] = 1;
    }
    return a;
}

bool is_unmixed(const BipartiteGraph& g) {
    std::vector<VertexCover> covers = minimal_covers_naive(g);
    for (const VertexCover& c : covers)
        if (c.vertex_count() != covers.front().vertex_count()) return false;
    return true;
}

} // namespace vca
