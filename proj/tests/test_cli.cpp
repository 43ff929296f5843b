#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

const char* cli_path() {
    const char* path = std::getenv("VCA_CLI_PATH");
    REQUIRE_MESSAGE(path != nullptr, "VCA_CLI_PATH must point at the binary");
    return path;
}

// Runs the binary through the shell; stdin comes from a temp file, stderr is
// discarded so warnings cannot contaminate the captured stdout.
RunResult run_cli(const std::string& args, const std::string& stdin_data = "") {
    static int counter = 0;
    std::string input_path =
        "/tmp/vca_cli_in_" + std::to_string(++counter) + ".json";
    {
        std::ofstream f(input_path);
        f << stdin_data;
    }
    std::string cmd = std::string(cli_path()) + " " + args + " < " + input_path +
                      " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::remove(input_path.c_str());
    return r;
}

const std::string kFork = R"({"n":3,"relations":[[1,2],[1,3]]})";

} // namespace

TEST_CASE("analyze reproduces the standard worked example") {
    RunResult r = run_cli("--json analyze", kFork);
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["n"] == 3);
    CHECK(doc["relation_count"] == 5);
    CHECK(doc["lattice_size"] == 5);
    CHECK(doc["cover_count"] == 5);
    CHECK(doc["h_vector"] == json::array({1, 4, 4, 1}));
    CHECK(doc["numerator"] == json::array({1, 4, 4, 1}));
    CHECK(doc["denom_exp"] == 7);
    CHECK(doc["multiplicity"] == 10);
    CHECK(doc["a_invariant"] == -4);
    CHECK(doc["checks"]["all_ok"] == true);
    CHECK(!doc.contains("timing_ms"));
}

TEST_CASE("generated chain piped into analyze") {
    RunResult gen = run_cli("gen --kind chain --n 3");
    REQUIRE(gen.exit_code == 0);
    RunResult r = run_cli("--json analyze", gen.out);
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["h_vector"] == json::array({1, 3, 3, 1}));
    CHECK(doc["multiplicity"] == 8);
}

TEST_CASE("round trip for every kind up to ten elements") {
    for (const std::string kind : {"chain", "antichain", "random"})
        for (int n = 1; n <= 10; ++n) {
            RunResult gen = run_cli("gen --kind " + kind + " --n " +
                                    std::to_string(n) + " --seed 5");
            REQUIRE(gen.exit_code == 0);
            json poset = json::parse(gen.out);
            CHECK(poset["n"] == n);
            RunResult r = run_cli("--json analyze", gen.out);
            REQUIRE(r.exit_code == 0);
            json doc = json::parse(r.out);
            CHECK(doc["n"] == n);
            CHECK(doc["lattice_size"] == doc["cover_count"]);
            CHECK(doc["h_vector"].size() == static_cast<std::size_t>(n) + 1);
            CHECK(doc["denom_exp"] == 2 * n + 1);
            CHECK(doc["checks"]["all_ok"] == true);
            for (const char* key : {"relation_count", "numerator", "multiplicity",
                                    "a_invariant"})
                CHECK(doc.contains(key));
        }
}

TEST_CASE("identical invocations give identical bytes") {
    RunResult a = run_cli("--json analyze", kFork);
    RunResult b = run_cli("--json analyze", kFork);
    CHECK(a.out == b.out);
    RunResult g1 = run_cli("gen --kind random --n 8 --seed 42");
    RunResult g2 = run_cli("gen --kind random --n 8 --seed 42");
    CHECK(g1.out == g2.out);
    RunResult g3 = run_cli("gen --kind random --n 8 --seed 43");
    CHECK(g1.out != g3.out);
}

TEST_CASE("series reports the documented fields") {
    RunResult r = run_cli("--json series", kFork);
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["h_vector"] == json::array({1, 4, 4, 1}));
    CHECK(doc["numerator"] == json::array({1, 4, 4, 1}));
    CHECK(doc["denom_exp"] == 7);
    CHECK(doc["dimension"] == 7);
    CHECK(doc["multiplicity"] == 10);
    CHECK(doc["a_invariant"] == -4);
    CHECK(doc["checks"]["symmetric"] == true);
}

TEST_CASE("covers prints the canonical list") {
    RunResult r = run_cli("covers", kFork);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out ==
          "{y1, y2, y3}\n{x1, y2, y3}\n{x1, x2, y3}\n{x1, x3, y2}\n{x1, x2, x3}\n");
    RunResult j = run_cli("--json covers", kFork);
    json doc = json::parse(j.out);
    CHECK(doc["count"] == 5);
    CHECK(doc["covers"][0] == json{{"x", json::array()}, {"y", {1, 2, 3}}});
    CHECK(doc["covers"][4] == json{{"x", {1, 2, 3}}, {"y", json::array()}});
}

TEST_CASE("lattice prints ideals in canonical order") {
    RunResult r = run_cli("lattice", kFork);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == "[]\n[1]\n[1, 2]\n[1, 3]\n[1, 2, 3]\n");
    RunResult j = run_cli("--json lattice", kFork);
    json doc = json::parse(j.out);
    CHECK(doc["lattice_size"] == 5);
    CHECK(doc["ideals"][2] == json::array({1, 2}));
}

TEST_CASE("linext prints the descent profile") {
    RunResult r = run_cli("linext", kFork);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == "descents 0: 1\ndescents 1: 1\ndescents 2: 0\ntotal: 2\n");
    RunResult j = run_cli("--json linext", kFork);
    json doc = json::parse(j.out);
    CHECK(doc["counts"] == json::array({1, 1, 0}));
    CHECK(doc["total"] == 2);
}

TEST_CASE("oracle-verify agrees on the worked example") {
    RunResult r = run_cli("oracle-verify --kmax 3 --mode all --json", kFork);
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["agree"] == true);
    CHECK(doc["graded"].size() == 4);
    CHECK(doc["power"].size() == 4);
    CHECK(doc["basic"].size() == 4);
    CHECK(doc["lemma"]["ok"] == true);
    CHECK(doc["monotone"]["ok"] == true);
    for (const auto& c : doc["graded"]) CHECK(c["agree"] == true);
    RunResult lemma_only = run_cli("oracle-verify --mode lemma --json", kFork);
    CHECK(lemma_only.exit_code == 0);
    json lemma_doc = json::parse(lemma_only.out);
    CHECK(lemma_doc.contains("lemma"));
    CHECK(!lemma_doc.contains("graded"));
}

TEST_CASE("export-toric emits both bases") {
    RunResult r = run_cli("export-toric --which both", kFork);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == "# n=3 lattice=5 basis=G\n"
                   "x1*u_0 - y1*u_1\n"
                   "x2*u_1 - y2*u_1.2\n"
                   "x2*u_1.3 - y2*u_1.2.3\n"
                   "x3*u_1 - y3*u_1.3\n"
                   "x3*u_1.2 - y3*u_1.2.3\n"
                   "u_1.2*u_1.3 - u_1.2.3*u_1\n"
                   "# n=3 lattice=5 basis=G0\n"
                   "u_1.2*u_1.3 - u_1.2.3*u_1\n");
    RunResult g0 = run_cli("export-toric --which G0", kFork);
    CHECK(g0.out == "# n=3 lattice=5 basis=G0\nu_1.2*u_1.3 - u_1.2.3*u_1\n");
}

TEST_CASE("usage problems exit with code 2") {
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("analyze --no-such-flag", kFork).exit_code == 2);
    CHECK(run_cli("gen --kind chain").exit_code == 2);        // missing --n
    CHECK(run_cli("gen --kind boat --n 3").exit_code == 2);   // bad kind
    CHECK(run_cli("oracle-verify --mode x", kFork).exit_code == 2);
    CHECK(run_cli("").exit_code == 2); // subcommand required
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("validation problems exit with code 1 and a JSON error object") {
    RunResult r = run_cli("--json analyze", R"({"n":2,"relations":[[1,2],[2,1]]})");
    CHECK(r.exit_code == 1);
    json doc = json::parse(r.out);
    CHECK(doc["error"]["type"] == "cycle");
    RunResult size = run_cli("--json lattice", R"({"n":22,"relations":[]})");
    CHECK(size.exit_code == 1);
    CHECK(json::parse(size.out)["error"]["type"] == "size_limit");
    RunResult plain = run_cli("analyze", "not json at all");
    CHECK(plain.exit_code == 1);
    CHECK(plain.out.empty()); // message goes to stderr in human mode
    CHECK(run_cli("analyze --poset /no/such/file.json").exit_code == 1);
}

TEST_CASE("non-natural input is relabeled without polluting stdout") {
    RunResult r = run_cli("--json analyze", R"({"n":2,"relations":[[2,1]]})");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["h_vector"] == json::array({1, 2, 1}));
}

TEST_CASE("timing appears only when requested") {
    RunResult with = run_cli("--json --timing analyze", kFork);
    CHECK(json::parse(with.out).contains("timing_ms"));
    RunResult without = run_cli("--json analyze", kFork);
    CHECK(!json::parse(without.out).contains("timing_ms"));
}

TEST_CASE("max-n is enforced across subcommands") {
    CHECK(run_cli("--max-n 5 gen --kind chain --n 6").exit_code == 1);
    CHECK(run_cli("--max-n 5 --json analyze", R"({"n":6,"relations":[]})").exit_code ==
          1);
    CHECK(run_cli("--max-n 6 gen --kind chain --n 6").exit_code == 0);
}

TEST_CASE("threads do not change the output bytes") {
    RunResult one = run_cli("--json analyze", kFork);
    RunResult four = run_cli("--threads 4 --json analyze", kFork);
    CHECK(one.out == four.out);
}
