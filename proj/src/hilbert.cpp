#include "vca/hilbert.hpp"

#include <algorithm>
#include <string>
#include <thread>

namespace vca {

namespace {

void strip_trailing_zeros(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

BigInt eval_at_one(const Poly& p) {
    BigInt s = 0;
    for (const auto& c : p) s += c;
    return s;
}

} // namespace

HilbertSeries normalize_series(Poly numerator, int denom_exp) {
    if (denom_exp < 0) throw DomainError("denominator exponent must be nonnegative");
    strip_trailing_zeros(numerator);
    if (numerator.empty()) return {Poly{}, 0};
    while (denom_exp > 0 && eval_at_one(numerator) == 0) {
        // numerator = (1-z) * q with q given by prefix sums
        Poly q(numerator.size() - 1);
        BigInt acc = 0;
        for (std::size_t i = 0; i + 1 < numerator.size(); ++i) {
            acc += numerator[i];
            q[i] = acc;
        }
        numerator = std::move(q);
        --denom_exp;
        strip_trailing_zeros(numerator);
        if (numerator.empty()) return {Poly{}, 0};
    }
    return {std::move(numerator), denom_exp};
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

HilbertSeries series_add(const HilbertSeries& a, const HilbertSeries& b) {
    int d = std::max(a.denom_exp, b.denom_exp);
    // raise both numerators to the common denominator (1-z)^d
    auto raise = [d](const HilbertSeries& s) {
        Poly num = s.numerator;
        for (int t = s.denom_exp; t < d; ++t) {
            // multiply by (1-z)
            Poly r(num.size() + 1, BigInt(0));
            for (std::size_t i = 0; i < num.size(); ++i) {
                r[i] += num[i];
                r[i + 1] -= num[i];
            }
            num = std::move(r);
        }
        return num;
    };
    Poly na = raise(a), nb = raise(b);
    if (na.size() < nb.size()) na.resize(nb.size(), BigInt(0));
    for (std::size_t i = 0; i < nb.size(); ++i) na[i] += nb[i];
    return normalize_series(std::move(na), d);
}

HilbertSeries series_mul(const HilbertSeries& a, const HilbertSeries& b) {
    return normalize_series(poly_mul(a.numerator, b.numerator),
                            a.denom_exp + b.denom_exp);
}

HVector basic_h_vector(const Poset& p, int max_n) {
    int n = p.size();
    if (n == 0) return {BigInt(1)};
    DescentProfile prof = linear_extensions_by_descents(p, max_n);
    HVector h(n + 2, BigInt(0));
    for (int i = 0; i < n; ++i) h[i] = prof.counts[i];
    return h;
}

HilbertSeries basic_hilbert_series(const Poset& p, int max_n) {
    Poly num = basic_h_vector(p, max_n);
    strip_trailing_zeros(num);
    return {std::move(num), p.size() + 1};
}

namespace {

// Adds the shifted descent counts of each induced subposet in [begin, end).
void accumulate_subsets(const Poset& p, Mask begin, Mask end, int max_n, HVector& h) {
    int n = p.size();
    for (Mask f = begin; f != end; ++f) {
        DescentProfile prof = linear_extensions_by_descents(p.induced(f), max_n);
        int shift = n - popcount(f);
        for (std::size_t i = 0; i < prof.counts.size(); ++i)
            if (prof.counts[i] != 0) h[i + shift] += prof.counts[i];
    }
}

} // namespace

HVector cover_algebra_h_vector(const Poset& p, int threads, int max_n) {
    int n = p.size();
    if (n < 1) throw DomainError("cover algebra needs n >= 1");
    if (n > max_n)
        throw SizeLimitError("subset decomposition capped at n = " + std::to_string(max_n));
    if (!p.naturally_labeled())
        throw DomainError("subset decomposition requires a naturally labeled poset");
    Mask total = full_mask(n);
    if (threads < 1) threads = 1;
    threads = std::min(threads, 64);
    if (threads == 1 || total < 64) {
        HVector h(n + 1, BigInt(0));
        accumulate_subsets(p, 0, total + 1, max_n, h);
        // wrap-around guard: total+1 overflows only at n = 32, excluded by cap
        return h;
    }
    std::vector<HVector> parts(threads, HVector(n + 1, BigInt(0)));
    std::vector<std::thread> pool;
    std::uint64_t count = std::uint64_t(total) + 1;
    for (int t = 0; t < threads; ++t) {
        Mask lo = static_cast<Mask>(count * t / threads);
        Mask hi = static_cast<Mask>(count * (t + 1) / threads);
        pool.emplace_back([&p, lo, hi, max_n, &parts, t] {
            accumulate_subsets(p, lo, hi, max_n, parts[t]);
        });
    }
    for (auto& th : pool) th.join();
    HVector h(n + 1, BigInt(0));
    for (const HVector& part : parts)
        for (int i = 0; i <= n; ++i) h[i] += part[i];
    return h;
}

HilbertSeries cover_algebra_hilbert_series(const Poset& p, int threads, int max_n) {
    Poly num = cover_algebra_h_vector(p, threads, max_n);
    strip_trailing_zeros(num);
    return {std::move(num), 2 * p.size() + 1};
}

HilbertSeries cover_algebra_hilbert_series_by_rational(const Poset& p, int max_n) {
    int n = p.size();
    if (n < 1) throw DomainError("cover algebra needs n >= 1");
    if (n > max_n)
        throw SizeLimitError("subset decomposition capped at n = " + std::to_string(max_n));
    const HilbertSeries z_over = normalize_series(Poly{BigInt(0), BigInt(1)}, 1);
    HilbertSeries sum{Poly{}, 0};
    for (Mask f = 0; f <= full_mask(n); ++f) {
        HilbertSeries term = basic_hilbert_series(p.induced(f), max_n);
        int power = n - popcount(f);
        for (int t = 0; t < power; ++t) term = series_mul(term, z_over);
        sum = series_add(sum, term);
        if (f == full_mask(n)) break; // avoid wrap at n = 32; cap keeps n small
    }
    return series_mul(sum, HilbertSeries{Poly{BigInt(1)}, n});
}

BigInt h_entry_by_subposet_descents(const Poset& p, int j, int max_n) {
    int n = p.size();
    if (j < 0 || j > n)
        throw IndexError("entry index " + std::to_string(j) + " outside [0, n]");
    BigInt total = 0;
    for (Mask f = 0; f <= full_mask(n); ++f) {
        int l = n - popcount(f); // dropped elements
        if (l <= j) {
            int wanted = j - l;
            if (popcount(f) == 0) {
                if (wanted == 0) total += 1; // the empty extension
            } else {
                DescentProfile prof = linear_extensions_by_descents(p.induced(f), max_n);
                if (wanted < static_cast<int>(prof.counts.size()))
                    total += prof.counts[wanted];
            }
        }
        if (f == full_mask(n)) break;
    }
    return total;
}

BigInt multiplicity(const HVector& h) {
    BigInt e = 0;
    for (const auto& c : h) e += c;
    return e;
}

int a_invariant(const HilbertSeries& s) {
    if (s.numerator.empty()) throw DomainError("zero series has no degree");
    return s.degree() - s.denom_exp;
}

BigInt hilbert_function(const HilbertSeries& s, long k) {
    if (k < 0) throw DomainError("degree must be nonnegative");
    BigInt v = 0;
    for (std::size_t i = 0; i < s.numerator.size(); ++i) {
        long shift = k - static_cast<long>(i);
        if (shift < 0) break;
        if (s.denom_exp == 0) {
            if (shift == 0) v += s.numerator[i];
        } else {
            v += s.numerator[i] * binomial(shift + s.denom_exp - 1, s.denom_exp - 1);
        }
    }
    return v;
}

BigInt eulerian(int n, int i) {
    if (n < 0 || i < 0 || i > n)
        throw IndexError("Eulerian index (" + std::to_string(n) + "," +
                         std::to_string(i) + ") out of range");
    // Row-by-row recurrence A(k,j) = (j+1) A(k-1,j) + (k-j) A(k-1,j-1),
    // seeded with A(0,0) = 1; it yields A(q,q) = 0 for q >= 1 on its own.
    std::vector<BigInt> row = {BigInt(1)};
    for (int k = 1; k <= n; ++k) {
        std::vector<BigInt> next(k + 1, BigInt(0));
        for (int j = 0; j <= k; ++j) {
            if (j < static_cast<int>(row.size())) next[j] += BigInt(j + 1) * row[j];
            if (j >= 1 && j - 1 < static_cast<int>(row.size()))
                next[j] += BigInt(k - j) * row[j - 1];
        }
        row = std::move(next);
    }
    return row[i];
}

HilbertSeries chain_series(int n) {
    if (n < 1) throw DomainError("chain series needs n >= 1");
    Poly num(n + 1);
    for (int j = 0; j <= n; ++j) num[j] = binomial(n, j);
    return {std::move(num), 2 * n + 1};
}

HilbertSeries antichain_series(int n) {
    if (n < 1) throw DomainError("antichain series needs n >= 1");
    Poly num(n + 1, BigInt(0));
    for (int j = 0; j <= n; ++j)
        for (int l = 0; l <= j; ++l)
            if (n - l >= j - l) num[j] += binomial(n, l) * eulerian(n - l, j - l);
    return {std::move(num), 2 * n + 1}; // num[n] = 1, already normalized
}

ShapeReport check_shape(const HVector& h, int n, const BigInt& lattice_size) {
    ShapeReport r;
    if (static_cast<int>(h.size()) != n + 1) return r; // malformed: all flags false
    r.symmetric = true;
    for (int i = 0; i <= n; ++i)
        if (h[i] != h[n - i]) { r.symmetric = false; break; }
    r.unimodal = true;
    bool descending = false;
    for (int i = 1; i <= n; ++i) {
        if (h[i] < h[i - 1]) descending = true;
        else if (h[i] > h[i - 1] && descending) { r.unimodal = false; break; }
    }
    const Poly upper = antichain_series(n).numerator;
    r.lower_bound_ok = r.upper_bound_ok = true;
    for (int j = 0; j <= n; ++j) {
        if (h[j] < binomial(n, j)) r.lower_bound_ok = false;
        BigInt up = j < static_cast<int>(upper.size()) ? upper[j] : BigInt(0);
        if (h[j] > up) r.upper_bound_ok = false;
    }
    r.h1_identity = n >= 1 && h[1] == lattice_size - 1;
    return r;
}

} // namespace vca
