#include "vca/toric.hpp"

#include <bit>
#include <ostream>
#include <sstream>

#include "vca/cover_graph.hpp"

namespace vca {

bool ToricVar::operator<(const ToricVar& o) const {
    if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
    if (kind == Kind::U) {
        int pa = popcount(ideal), pb = popcount(o.ideal);
        if (pa != pb) return pa > pb; // larger ideal first
        return ideal < o.ideal;
    }
    return index < o.index;
}

ToricVar var_x(int i) { return {ToricVar::Kind::X, i, 0}; }
ToricVar var_y(int i) { return {ToricVar::Kind::Y, i, 0}; }
ToricVar var_u(Mask ideal) { return {ToricVar::Kind::U, 0, ideal}; }

namespace {

std::vector<IdealMask> lattice_or_throw(const Poset& p, std::size_t max_lattice) {
    IdealLattice lat = enumerate_ideals(p);
    if (lat.size() > max_lattice)
        throw SizeLimitError("relation generation capped at lattice size " +
                             std::to_string(max_lattice));
    return lat.ideals();
}

void append_lattice_relations(const std::vector<IdealMask>& ids,
                              std::vector<ToricBinomial>& out) {
    for (std::size_t s = 0; s < ids.size(); ++s)
        for (std::size_t t = s + 1; t < ids.size(); ++t) {
            IdealMask a = ids[s], b = ids[t];
            if ((a & ~b) == 0 || (b & ~a) == 0) continue; // comparable
            ToricBinomial bin;
            bin.lead[var_u(a)] = 1;
            bin.lead[var_u(b)] = 1;
            bin.trail[var_u(a | b)] = 1;
            bin.trail[var_u(a & b)] = 1;
            out.push_back(std::move(bin));
        }
}

} // namespace

std::vector<ToricBinomial> groebner_G(const Poset& p, std::size_t max_lattice) {
    std::vector<IdealMask> ids = lattice_or_throw(p, max_lattice);
    std::vector<ToricBinomial> out;
    for (int j = 0; j < p.size(); ++j)
        for (IdealMask a : ids) {
            if (a & bit_of(j)) continue;
            if (p.strict_down_mask(j) & ~a) continue; // j not attachable
            ToricBinomial bin;
            bin.lead[var_x(j)] = 1;
            bin.lead[var_u(a)] = 1;
            bin.trail[var_y(j)] = 1;
            bin.trail[var_u(a | bit_of(j))] = 1;
            out.push_back(std::move(bin));
        }
    append_lattice_relations(ids, out);
    return out;
}

std::vector<ToricBinomial> groebner_G0(const Poset& p, std::size_t max_lattice) {
    std::vector<IdealMask> ids = lattice_or_throw(p, max_lattice);
    std::vector<ToricBinomial> out;
    append_lattice_relations(ids, out);
    return out;
}

bool is_complete_intersection_initial(const Poset& p, std::size_t max_lattice) {
    std::vector<ToricBinomial> basis = groebner_G(p, max_lattice);
    for (std::size_t s = 0; s < basis.size(); ++s)
        for (std::size_t t = s + 1; t < basis.size(); ++t)
            for (const auto& [v, e] : basis[s].lead)
                if (basis[t].lead.count(v)) return false;
    return true;
}

namespace {

std::string var_name(const ToricVar& v) {
    switch (v.kind) {
    case ToricVar::Kind::X:
        return "x" + std::to_string(v.index + 1);
    case ToricVar::Kind::Y:
        return "y" + std::to_string(v.index + 1);
    case ToricVar::Kind::U: {
        if (v.ideal == 0) return "u_0";
        std::string s = "u_";
        bool first = true;
        for (int i = 0; i < 32; ++i)
            if ((v.ideal >> i) & 1u) {
                if (!first) s += ".";
                first = false;
                s += std::to_string(i + 1);
            }
        return s;
    }
    }
    return {};
}

} // namespace

std::string format_monomial(const ToricMonomial& m) {
    if (m.empty()) return "1";
    std::string s;
    bool first = true;
    for (const auto& [v, e] : m) {
        if (!first) s += "*";
        first = false;
        s += var_name(v);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string format_binomial(const ToricBinomial& b) {
    return format_monomial(b.lead) + " - " + format_monomial(b.trail);
}

void export_binomials(std::ostream& os, const Poset& p,
                      const std::vector<ToricBinomial>& bs, const std::string& label) {
    IdealLattice lat = enumerate_ideals(p);
    os << "# n=" << p.size() << " lattice=" << lat.size() << " basis=" << label << "\n";
    for (const ToricBinomial& b : bs) os << format_binomial(b) << "\n";
}

std::string export_to_string(const Poset& p, const std::vector<ToricBinomial>& bs,
                             const std::string& label) {
    std::ostringstream os;
    export_binomials(os, p, bs, label);
    return os.str();
}

namespace {

// exponent vector of the monomial under u_a -> minimal-cover monomial
ExponentVector substituted(const Poset& p, const ToricMonomial& m) {
    int n = p.size();
    ExponentVector v(2 * n, 0);
    for (const auto& [var, e] : m) {
        switch (var.kind) {
        case ToricVar::Kind::X:
            v[var.index] += e;
            break;
        case ToricVar::Kind::Y:
            v[n + var.index] += e;
            break;
        case ToricVar::Kind::U: {
            ExponentVector g = generator_monomial(p, var.ideal);
            for (int t = 0; t < 2 * n; ++t) v[t] += e * g[t];
            break;
        }
        }
    }
    return v;
}

long total_degree(const ToricMonomial& m) {
    long d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

} // namespace

bool substitution_vanishes(const Poset& p, const std::vector<ToricBinomial>& bs) {
    for (const ToricBinomial& b : bs) {
        if (b.lead == b.trail) return false;
        if (total_degree(b.lead) != total_degree(b.trail)) return false;
        if (substituted(p, b.lead) != substituted(p, b.trail)) return false;
    }
    return true;
}

} // namespace vca
