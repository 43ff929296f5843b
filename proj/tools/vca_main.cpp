#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vca/cover_graph.hpp"
#include "vca/hilbert.hpp"
#include "vca/ideal_lattice.hpp"
#include "vca/oracle.hpp"
#include "vca/poset.hpp"
#include "vca/poset_io.hpp"
#include "vca/toric.hpp"

using nlohmann::json;

namespace {

struct GlobalOpts {
    bool json = false;
    bool timing = false;
    std::uint64_t seed = 0;
    int max_n = vca::Poset::kDefaultMaxN;
    int threads = 1;
};

class Stopwatch {
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();

public:
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }
};

std::string read_all(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw vca::InconsistentInputError("cannot open file: " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

vca::Poset load_poset(const std::string& path, const GlobalOpts& g) {
    return vca::poset_from_json(
        read_all(path),
        [](const std::string& m) { std::cerr << "warning: " << m << "\n"; }, g.max_n);
}

std::string error_kind(const vca::Error& e) {
    if (dynamic_cast<const vca::SizeLimitError*>(&e)) return "size_limit";
    if (dynamic_cast<const vca::CycleError*>(&e)) return "cycle";
    if (dynamic_cast<const vca::IndexError*>(&e)) return "index";
    if (dynamic_cast<const vca::NotAnIdealError*>(&e)) return "not_an_ideal";
    if (dynamic_cast<const vca::NotMinimalError*>(&e)) return "not_minimal";
    if (dynamic_cast<const vca::InconsistentInputError*>(&e)) return "inconsistent_input";
    if (dynamic_cast<const vca::DomainError*>(&e)) return "domain";
    return "error";
}

std::string format_bigints(const std::vector<vca::BigInt>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += vca::to_string(v[i]);
    }
    return s + "]";
}

std::string format_indices(vca::Mask m) {
    std::string s = "[";
    bool first = true;
    for (int i = 0; i < 32; ++i)
        if ((m >> i) & 1u) {
            if (!first) s += ", ";
            first = false;
            s += std::to_string(i + 1);
        }
    return s + "]";
}

json bigints_to_json(const std::vector<vca::BigInt>& v) {
    json a = json::array();
    for (const vca::BigInt& c : v) a.push_back(vca::bigint_to_json(c));
    return a;
}

json mask_to_json(vca::Mask m) {
    json a = json::array();
    for (int i = 0; i < 32; ++i)
        if ((m >> i) & 1u) a.push_back(i + 1);
    return a;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

json shape_to_json(const vca::ShapeReport& r) {
    json j;
    j["symmetric"] = r.symmetric;
    j["unimodal"] = r.unimodal;
    j["lower_bound_ok"] = r.lower_bound_ok;
    j["upper_bound_ok"] = r.upper_bound_ok;
    j["h1_identity"] = r.h1_identity;
    j["all_ok"] = r.all_ok();
    return j;
}

std::string shape_line(const vca::ShapeReport& r) {
    std::string s;
    s += std::string("symmetric=") + yesno(r.symmetric);
    s += std::string(" unimodal=") + yesno(r.unimodal);
    s += std::string(" lower_bound=") + yesno(r.lower_bound_ok);
    s += std::string(" upper_bound=") + yesno(r.upper_bound_ok);
    s += std::string(" h1_identity=") + yesno(r.h1_identity);
    s += std::string(" all_ok=") + yesno(r.all_ok());
    return s;
}

void emit_timing(const GlobalOpts& g, const Stopwatch& watch, json& doc) {
    if (!g.timing) return;
    long long ms = watch.ms();
    if (g.json)
        doc["timing_ms"] = ms;
    else
        std::cerr << "timing_ms: " << ms << "\n";
}

int run_analyze(const GlobalOpts& g, const std::string& path) {
    vca::Poset p = load_poset(path, g);
    Stopwatch watch;
    vca::IdealLattice lat = vca::enumerate_ideals(p);
    std::vector<vca::VertexCover> covers = vca::minimal_covers_recursive(p);
    vca::HilbertSeries s = vca::cover_algebra_hilbert_series(p, g.threads, g.max_n);
    vca::BigInt e = vca::multiplicity(s.numerator);
    int a = vca::a_invariant(s);
    vca::ShapeReport shape =
        vca::check_shape(s.numerator, p.size(), vca::BigInt(lat.size()));
    if (g.json) {
        json doc;
        doc["n"] = p.size();
        doc["relation_count"] = p.relation_count();
        doc["lattice_size"] = lat.size();
        doc["cover_count"] = covers.size();
        doc["h_vector"] = bigints_to_json(s.numerator);
        doc["numerator"] = bigints_to_json(s.numerator);
        doc["denom_exp"] = s.denom_exp;
        doc["multiplicity"] = vca::bigint_to_json(e);
        doc["a_invariant"] = a;
        doc["checks"] = shape_to_json(shape);
        emit_timing(g, watch, doc);
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "n: " << p.size() << "\n";
        std::cout << "relation_count: " << p.relation_count() << "\n";
        std::cout << "lattice_size: " << lat.size() << "\n";
        std::cout << "cover_count: " << covers.size() << "\n";
        std::cout << "h_vector: " << format_bigints(s.numerator) << "\n";
        std::cout << "numerator: " << format_bigints(s.numerator) << "\n";
        std::cout << "denom_exp: " << s.denom_exp << "\n";
        std::cout << "multiplicity: " << vca::to_string(e) << "\n";
        std::cout << "a_invariant: " << a << "\n";
        std::cout << "checks: " << shape_line(shape) << "\n";
        json unused;
        emit_timing(g, watch, unused);
    }
    return 0;
}

int run_series(const GlobalOpts& g, const std::string& path) {
    vca::Poset p = load_poset(path, g);
    Stopwatch watch;
    vca::IdealLattice lat = vca::enumerate_ideals(p);
    vca::HilbertSeries s = vca::cover_algebra_hilbert_series(p, g.threads, g.max_n);
    vca::BigInt e = vca::multiplicity(s.numerator);
    int a = vca::a_invariant(s);
    int dimension = 2 * p.size() + 1;
    vca::ShapeReport shape =
        vca::check_shape(s.numerator, p.size(), vca::BigInt(lat.size()));
    if (g.json) {
        json doc;
        doc["h_vector"] = bigints_to_json(s.numerator);
        doc["numerator"] = bigints_to_json(s.numerator);
        doc["denom_exp"] = s.denom_exp;
        doc["dimension"] = dimension;
        doc["multiplicity"] = vca::bigint_to_json(e);
        doc["a_invariant"] = a;
        doc["checks"] = shape_to_json(shape);
        emit_timing(g, watch, doc);
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "h_vector: " << format_bigints(s.numerator) << "\n";
        std::cout << "numerator: " << format_bigints(s.numerator) << "\n";
        std::cout << "denom_exp: " << s.denom_exp << "\n";
        std::cout << "dimension: " << dimension << "\n";
        std::cout << "multiplicity: " << vca::to_string(e) << "\n";
        std::cout << "a_invariant: " << a << "\n";
        std::cout << "checks: " << shape_line(shape) << "\n";
        json unused;
        emit_timing(g, watch, unused);
    }
    return 0;
}

int run_covers(const GlobalOpts& g, const std::string& path) {
    vca::Poset p = load_poset(path, g);
    std::vector<vca::VertexCover> covers = vca::minimal_covers_recursive(p);
    if (g.json) {
        json list = json::array();
        for (const vca::VertexCover& c : covers) {
            json item;
            item["x"] = mask_to_json(c.xmask);
            item["y"] = mask_to_json(c.ymask);
            list.push_back(std::move(item));
        }
        json doc;
        doc["count"] = covers.size();
        doc["covers"] = std::move(list);
        std::cout << doc.dump() << "\n";
    } else {
        for (const vca::VertexCover& c : covers) {
            std::string line = "{";
            bool first = true;
            for (int i = 0; i < 32; ++i)
                if ((c.xmask >> i) & 1u) {
                    if (!first) line += ", ";
                    first = false;
                    line += "x" + std::to_string(i + 1);
                }
            for (int i = 0; i < 32; ++i)
                if ((c.ymask >> i) & 1u) {
                    if (!first) line += ", ";
                    first = false;
                    line += "y" + std::to_string(i + 1);
                }
            std::cout << line << "}\n";
        }
    }
    return 0;
}

int run_lattice(const GlobalOpts& g, const std::string& path) {
    vca::Poset p = load_poset(path, g);
    vca::IdealLattice lat = vca::enumerate_ideals(p);
    if (g.json) {
        json ideals = json::array();
        for (vca::IdealMask m : lat.ideals()) ideals.push_back(mask_to_json(m));
        json doc;
        doc["lattice_size"] = lat.size();
        doc["ideals"] = std::move(ideals);
        std::cout << doc.dump() << "\n";
    } else {
        for (vca::IdealMask m : lat.ideals()) std::cout << format_indices(m) << "\n";
    }
    return 0;
}

int run_linext(const GlobalOpts& g, const std::string& path) {
    vca::Poset p = load_poset(path, g);
    vca::DescentProfile prof = vca::linear_extensions_by_descents(p, g.max_n);
    if (g.json) {
        json doc;
        doc["counts"] = bigints_to_json(prof.counts);
        doc["total"] = vca::bigint_to_json(prof.total());
        std::cout << doc.dump() << "\n";
    } else {
        for (std::size_t i = 0; i < prof.counts.size(); ++i)
            std::cout << "descents " << i << ": " << vca::to_string(prof.counts[i])
                      << "\n";
        std::cout << "total: " << vca::to_string(prof.total()) << "\n";
    }
    return 0;
}

int run_gen(const GlobalOpts& g, const std::string& kind, int n, double density) {
    if (n > g.max_n)
        throw vca::SizeLimitError("requested n exceeds --max-n = " +
                                  std::to_string(g.max_n));
    vca::Poset p = [&] {
        if (kind == "chain") return vca::Poset::chain(n);
        if (kind == "antichain") return vca::Poset::antichain(n);
        return vca::Poset::random(n, g.seed, density, g.max_n);
    }();
    std::cout << vca::poset_to_json(p) << "\n";
    return 0;
}

int run_oracle_verify(const GlobalOpts& g, const std::string& path, long kmax,
                      const std::string& mode) {
    vca::Poset p = load_poset(path, g);
    Stopwatch watch;
    bool agree = true;
    json doc;
    doc["mode"] = mode;
    doc["k_max"] = kmax;

    auto emit_report = [&](const char* name, const vca::OracleReport& rep) {
        if (g.json) {
            json list = json::array();
            for (const vca::OracleCheck& c : rep.values) {
                json item;
                item["k"] = c.k;
                item["formula"] = vca::bigint_to_json(c.formula);
                item["oracle"] = vca::bigint_to_json(c.oracle);
                item["agree"] = c.agree;
                list.push_back(std::move(item));
            }
            doc[name] = std::move(list);
        } else {
            for (const vca::OracleCheck& c : rep.values)
                std::cout << name << " k=" << c.k
                          << ": formula=" << vca::to_string(c.formula)
                          << " oracle=" << vca::to_string(c.oracle) << " "
                          << (c.agree ? "ok" : "MISMATCH") << "\n";
        }
        agree = agree && rep.agree;
    };

    bool all = mode == "all";
    if (all || mode == "graded") emit_report("graded", vca::compare_graded(p, kmax));
    if (all || mode == "power") emit_report("power", vca::compare_power(p, kmax));
    if (all || mode == "basic") emit_report("basic", vca::compare_basic(p, kmax));
    if (all || mode == "lemma") {
        vca::LemmaDeltaReport rep = vca::verify_lemma_delta(p);
        agree = agree && rep.ok;
        if (g.json) {
            json item;
            item["ok"] = rep.ok;
            if (!rep.ok) item["counterexample"] = rep.counterexample;
            doc["lemma"] = std::move(item);
        } else {
            std::cout << "lemma: " << (rep.ok ? "ok" : "FAILED " + rep.counterexample)
                      << "\n";
        }
    }
    if (all || mode == "monotone") {
        bool ok = vca::verify_monotonicity(p, kmax);
        agree = agree && ok;
        if (g.json)
            doc["monotone"] = json{{"ok", ok}};
        else
            std::cout << "monotone: " << (ok ? "ok" : "FAILED") << "\n";
    }

    if (g.json) {
        doc["agree"] = agree;
        emit_timing(g, watch, doc);
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "result: " << (agree ? "agree" : "disagree") << "\n";
        json unused;
        emit_timing(g, watch, unused);
    }
    return agree ? 0 : 1;
}

int run_export_toric(const GlobalOpts& g, const std::string& path,
                     const std::string& which, const std::string& out) {
    vca::Poset p = load_poset(path, g);
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (out != "-") {
        file.open(out);
        if (!file) throw vca::InconsistentInputError("cannot open output file: " + out);
        os = &file;
    }
    if (which == "G" || which == "both")
        vca::export_binomials(*os, p, vca::groebner_G(p), "G");
    if (which == "G0" || which == "both")
        vca::export_binomials(*os, p, vca::groebner_G0(p), "G0");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    GlobalOpts g;
    CLI::App app{"exact Hilbert series of poset cover algebras"};
    app.require_subcommand(1);
    app.add_flag("--json", g.json, "machine-readable JSON on stdout");
    app.add_flag("--timing", g.timing,
                 "report wall time (stderr, or timing_ms under --json)");
    app.add_option("--seed", g.seed, "seed for random generation");
    app.add_option("--max-n", g.max_n, "largest allowed element count")
        ->check(CLI::Range(1, vca::Poset::kHardMaxN));
    app.add_option("--threads", g.threads, "worker threads for the subset sum")
        ->check(CLI::Range(1, 64));

    std::string poset_path = "-";
    const std::string poset_help = "poset JSON file, - for stdin";

    CLI::App* analyze = app.add_subcommand("analyze", "full invariant report");
    analyze->fallthrough();
    analyze->add_option("--poset", poset_path, poset_help);

    CLI::App* covers = app.add_subcommand("covers", "minimal vertex covers");
    covers->fallthrough();
    covers->add_option("--poset", poset_path, poset_help);

    CLI::App* lattice = app.add_subcommand("lattice", "order ideals");
    lattice->fallthrough();
    lattice->add_option("--poset", poset_path, poset_help);

    CLI::App* linext = app.add_subcommand("linext", "linear extensions by descents");
    linext->fallthrough();
    linext->add_option("--poset", poset_path, poset_help);

    CLI::App* series = app.add_subcommand("series", "Hilbert series and h-vector");
    series->fallthrough();
    series->add_option("--poset", poset_path, poset_help);

    long kmax = 3;
    std::string mode = "all";
    CLI::App* verify =
        app.add_subcommand("oracle-verify", "cross-check against brute force");
    verify->fallthrough();
    verify->add_option("--poset", poset_path, poset_help);
    verify->add_option("--kmax", kmax, "largest degree to compare")
        ->check(CLI::Range(0L, 1000L));
    verify->add_option("--mode", mode, "graded|power|basic|lemma|monotone|all")
        ->check(CLI::IsMember({"graded", "power", "basic", "lemma", "monotone", "all"}));

    std::string which = "both";
    std::string out = "-";
    CLI::App* toric = app.add_subcommand("export-toric", "defining binomial relations");
    toric->fallthrough();
    toric->add_option("--poset", poset_path, poset_help);
    toric->add_option("--which", which, "G|G0|both")
        ->check(CLI::IsMember({"G", "G0", "both"}));
    toric->add_option("--out", out, "output path, - for stdout");

    std::string kind;
    int gen_n = 0;
    double density = 0.3;
    CLI::App* gen = app.add_subcommand("gen", "emit a poset file");
    gen->fallthrough();
    gen->add_option("--kind", kind, "chain|antichain|random")
        ->required()
        ->check(CLI::IsMember({"chain", "antichain", "random"}));
    gen->add_option("--n", gen_n, "number of elements")
        ->required()
        ->check(CLI::Range(1, vca::Poset::kHardMaxN));
    gen->add_option("--density", density, "relation probability for random")
        ->check(CLI::Range(0.0, 1.0));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) return run_analyze(g, poset_path);
        if (covers->parsed()) return run_covers(g, poset_path);
        if (lattice->parsed()) return run_lattice(g, poset_path);
        if (linext->parsed()) return run_linext(g, poset_path);
        if (series->parsed()) return run_series(g, poset_path);
        if (verify->parsed()) return run_oracle_verify(g, poset_path, kmax, mode);
        if (toric->parsed()) return run_export_toric(g, poset_path, which, out);
        if (gen->parsed()) return run_gen(g, kind, gen_n, density);
    } catch (const vca::Error& e) {
        if (g.json) {
            json doc;
            doc["error"] = json{{"type", error_kind(e)}, {"message", e.what()}};
            std::cout << doc.dump() << "\n";
        }
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        if (g.json) {
            json doc;
            doc["error"] = json{{"type", "internal"}, {"message", e.what()}};
            std::cout << doc.dump() << "\n";
        }
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2; // no subcommand dispatched; unreachable with require_subcommand
}
