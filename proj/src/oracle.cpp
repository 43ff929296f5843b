#include "vca/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

namespace vca {

void OracleReport::add(std::string name, long k, BigInt formula, BigInt oracle) {
    bool same = formula == oracle;
    values.push_back({std::move(name), k, std::move(formula), std::move(oracle), same});
    if (!same) agree = false;
    k_max = std::max(k_max, k);
}

namespace {

// Visit every vector of `positions` nonnegative entries summing to `total`.
void for_each_composition(int positions, long total,
                          ExponentVector& scratch,
                          const std::function<void(const ExponentVector&)>& visit,
                          int at = 0) {
    if (at == positions - 1) {
        scratch[at] = total;
        visit(scratch);
        return;
    }
    for (long v = 0; v <= total; ++v) {
        scratch[at] = v;
        for_each_composition(positions, total - v, scratch, visit, at + 1);
    }
}

} // namespace

BigInt hilbert_function_bruteforce(const Poset& p, long k, int max_n, long max_k) {
    int n = p.size();
    if (n > max_n)
        throw SizeLimitError("degree enumeration capped at n = " + std::to_string(max_n));
    if (k > max_k)
        throw SizeLimitError("degree enumeration capped at k = " + std::to_string(max_k));
    if (k < 0) throw DomainError("degree must be nonnegative");
    BipartiteGraph g = graph_from_poset(p);
    BigInt total = 0;
    for (long j = 0; j <= k; ++j) {
        long deg = j * n + (k - j);
        if (j == 0) {
            total += binomial(deg + 2 * n - 1, 2 * n - 1);
            continue;
        }
        BigInt count = 0;
        ExponentVector a(2 * n, 0);
        for_each_composition(2 * n, deg, a, [&](const ExponentVector& v) {
            if (is_k_cover(g, v, j)) count += 1;
        });
        total += count;
    }
    return total;
}

BigInt hilbert_function_power_oracle(const Poset& p, long k, int max_n, long max_k) {
    int n = p.size();
    if (n > max_n)
        throw SizeLimitError("power enumeration capped at n = " + std::to_string(max_n));
    if (k > max_k)
        throw SizeLimitError("power enumeration capped at k = " + std::to_string(max_k));
    if (k < 0) throw DomainError("degree must be nonnegative");
    IdealLattice lat = enumerate_ideals(p);
    std::vector<ExponentVector> gens;
    gens.reserve(lat.size());
    for (IdealMask a : lat.ideals()) gens.push_back(generator_monomial(p, a));

    BigInt total = 0;
    for (long j = 0; j <= k; ++j) {
        long deg = j * n + (k - j);
        if (j == 0) {
            total += binomial(deg + 2 * n - 1, 2 * n - 1);
            continue;
        }
        // all products of j generators (multisets), deduplicated
        std::vector<ExponentVector> products;
        ExponentVector acc(2 * n, 0);
        std::function<void(std::size_t, long)> build = [&](std::size_t from, long left) {
            if (left == 0) {
                products.push_back(acc);
                return;
            }
            for (std::size_t g = from; g < gens.size(); ++g) {
                for (int t = 0; t < 2 * n; ++t) acc[t] += gens[g][t];
                build(g, left - 1);
                for (int t = 0; t < 2 * n; ++t) acc[t] -= gens[g][t];
            }
        };
        build(0, j);
        std::sort(products.begin(), products.end());
        products.erase(std::unique(products.begin(), products.end()), products.end());
        // drop any product that componentwise dominates another: a monomial
        // divisible by the dominating one is divisible by the dominated one too
        std::vector<ExponentVector> minimal;
        for (const auto& c : products) {
            bool dominated = false;
            for (const auto& d : products) {
                if (&c == &d) continue;
                bool le = true, strict = false;
                for (int t = 0; t < 2 * n && le; ++t) {
                    if (d[t] > c[t]) le = false;
                    if (d[t] < c[t]) strict = true;
                }
                if (le && strict) { dominated = true; break; }
            }
            if (!dominated) minimal.push_back(c);
        }
        BigInt count = 0;
        ExponentVector a(2 * n, 0);
        for_each_composition(2 * n, deg, a, [&](const ExponentVector& v) {
            for (const auto& c : minimal) {
                bool divisible = true;
                for (int t = 0; t < 2 * n; ++t)
                    if (v[t] < c[t]) { divisible = false; break; }
                if (divisible) { count += 1; return; }
            }
        });
        total += count;
    }
    return total;
}

BigInt basic_hilbert_bruteforce(const Poset& p, long k, std::size_t max_lattice) {
    if (k < 0) throw DomainError("degree must be nonnegative");
    IdealLattice lat = enumerate_ideals(p);
    if (lat.size() > max_lattice)
        throw SizeLimitError("multichain counting capped at lattice size " +
                             std::to_string(max_lattice));
    const auto& ids = lat.ideals();
    std::size_t L = ids.size();
    if (k == 0) return 1;
    // ways[v] = weakly increasing t-tuples ending at ideal v
    std::vector<BigInt> ways(L, BigInt(1));
    for (long t = 2; t <= k; ++t) {
        std::vector<BigInt> next(L, BigInt(0));
        for (std::size_t b = 0; b < L; ++b)
            for (std::size_t a = 0; a <= b; ++a)
                if ((ids[a] & ~ids[b]) == 0) next[b] += ways[a];
        ways = std::move(next);
    }
    BigInt total = 0;
    for (const auto& w : ways) total += w;
    return total;
}

HVector h_vector_from_function_with_denom(const std::vector<BigInt>& values, int d,
                                          int out_len) {
    if (out_len < 1 || static_cast<int>(values.size()) < out_len)
        throw DomainError("need function values at least up to the numerator degree");
    HVector h(values.size(), BigInt(0));
    for (std::size_t j = 0; j < values.size(); ++j)
        for (std::size_t i = 0; i <= j; ++i) {
            BigInt term = binomial(d, static_cast<long>(i)) * values[j - i];
            if (i % 2 == 0)
                h[j] += term;
            else
                h[j] -= term;
        }
    for (std::size_t j = out_len; j < h.size(); ++j)
        if (h[j] != 0)
            throw InconsistentInputError(
                "function values imply a nonzero numerator coefficient at degree " +
                std::to_string(j));
    h.resize(out_len);
    return h;
}

HVector h_vector_from_function(const std::vector<BigInt>& values, int n) {
    return h_vector_from_function_with_denom(values, 2 * n + 1, n + 1);
}

namespace {

std::string describe_poset(const Poset& p) {
    std::ostringstream os;
    os << "n=" << p.size() << " relations{";
    bool first = true;
    for (auto [i, j] : p.cover_relations()) {
        if (!first) os << ",";
        first = false;
        os << "(" << i + 1 << "," << j + 1 << ")";
    }
    os << "}";
    return os.str();
}

std::string describe_mask(Mask m) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int i = 0; i < 32; ++i)
        if ((m >> i) & 1u) {
            if (!first) os << ",";
            first = false;
            os << i + 1;
        }
    os << "}";
    return os.str();
}

} // namespace

LemmaDeltaReport verify_lemma_delta(const Poset& p, int max_n) {
    int n = p.size();
    if (n > max_n)
        throw SizeLimitError("attachment verification capped at n = " +
                             std::to_string(max_n));
    LemmaDeltaReport rep;
    auto fail = [&](Mask f, const std::string& what) {
        rep.ok = false;
        rep.counterexample = describe_poset(p) + " f=" + describe_mask(f) + ": " + what;
    };
    for (Mask f = 0; f <= p.elements(); ++f) {
        Mask complement = p.elements() & ~f;
        // ideals of the complement subposet, in original indices
        std::vector<Mask> alphas;
        for (Mask a = 0; a <= complement; ++a) {
            if (a & ~complement) continue;
            bool ideal = true;
            for (Mask m = a; ideal && m;) {
                int j = std::countr_zero(m);
                m &= m - 1;
                if (p.strict_down_mask(j) & complement & ~a) ideal = false;
            }
            if (ideal) alphas.push_back(a);
        }
        std::vector<Mask> images;
        for (Mask a : alphas) {
            Mask d = delta(p, f, a);
            // brute-force maximality: scan every subset of f
            Mask best = 0;
            Mask g = f;
            while (true) {
                if (is_ideal(p, a | g) && popcount(g) > popcount(best)) best = g;
                if (g == 0) break;
                g = (g - 1) & f;
            }
            if (!is_ideal(p, a | d)) {
                fail(f, "delta" + describe_mask(a) + " does not attach to an ideal");
                return rep;
            }
            if (popcount(d) != popcount(best) || !is_ideal(p, a | best) ||
                (best & ~d) != 0 || (d & ~best) != 0) {
                fail(f, "delta" + describe_mask(a) + "=" + describe_mask(d) +
                            " but maximal attachment is " + describe_mask(best));
                return rep;
            }
            Mask b = phi(p, f, a);
            if (!in_S(p, f, b)) {
                fail(f, "phi" + describe_mask(a) + " lands outside S");
                return rep;
            }
            if (psi(p, f, b) != a) {
                fail(f, "psi(phi" + describe_mask(a) + ") != alpha");
                return rep;
            }
            images.push_back(b);
        }
        std::sort(images.begin(), images.end());
        if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
            fail(f, "phi is not injective");
            return rep;
        }
        std::size_t s_count = 0;
        for (Mask b = 0; b <= p.elements(); ++b) {
            if (in_S(p, f, b)) ++s_count;
            if (p.elements() == 0) break;
        }
        if (s_count != images.size()) {
            fail(f, "phi is not surjective onto S");
            return rep;
        }
        for (std::size_t s = 0; s < alphas.size(); ++s)
            for (std::size_t t = 0; t < alphas.size(); ++t) {
                bool inc = (alphas[s] & ~alphas[t]) == 0;
                Mask bs = phi(p, f, alphas[s]), bt = phi(p, f, alphas[t]);
                bool inc_img = (bs & ~bt) == 0;
                if (inc != inc_img) {
                    fail(f, "phi does not preserve inclusion between " +
                                describe_mask(alphas[s]) + " and " +
                                describe_mask(alphas[t]));
                    return rep;
                }
            }
        if (f == p.elements()) break;
    }
    return rep;
}

bool verify_monotonicity(const Poset& p, long k_max) {
    int n = p.size();
    HilbertSeries lo = chain_series(n);
    HilbertSeries mid = cover_algebra_hilbert_series(p);
    HilbertSeries hi = antichain_series(n);
    for (long k = 0; k <= k_max; ++k) {
        BigInt a = hilbert_function(lo, k);
        BigInt b = hilbert_function(mid, k);
        BigInt c = hilbert_function(hi, k);
        if (a > b || b > c) return false;
    }
    return true;
}

OracleReport compare_graded(const Poset& p, long k_max, int max_n, long oracle_max_k) {
    OracleReport rep;
    HilbertSeries s = cover_algebra_hilbert_series(p);
    for (long k = 0; k <= k_max; ++k)
        rep.add("graded", k, hilbert_function(s, k),
                hilbert_function_bruteforce(p, k, max_n, oracle_max_k));
    return rep;
}

OracleReport compare_power(const Poset& p, long k_max, int max_n, long oracle_max_k) {
    OracleReport rep;
    HilbertSeries s = cover_algebra_hilbert_series(p);
    for (long k = 0; k <= k_max; ++k)
        rep.add("power", k, hilbert_function(s, k),
                hilbert_function_power_oracle(p, k, max_n, oracle_max_k));
    return rep;
}

OracleReport compare_basic(const Poset& p, long k_max) {
    OracleReport rep;
    HilbertSeries s = basic_hilbert_series(p);
    for (long k = 0; k <= k_max; ++k)
        rep.add("basic", k, hilbert_function(s, k), basic_hilbert_bruteforce(p, k));
    return rep;
}

} // namespace vca
