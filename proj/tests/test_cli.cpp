#include "ramsey/bounds.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

using namespace ramsey;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

// Runs the CLI with the given arguments, capturing stdout; stderr is
// dropped so warnings never pollute the golden comparisons.
RunResult run(const std::string& args) {
    std::string command = std::string(RAMSEY3_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        r.out.append(buffer, got);
    int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::string temp_file(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << content;
}

}  // namespace

TEST_CASE("table csv golden output") {
    RunResult r = run("table --max-n 5 --format csv");
    CHECK_EQ(r.status, 0);
    CHECK_EQ(r.out,
             "n,lower,upper,anchor_k,a,q_num,q_den\n"
             "1,3,3,0,0,0,1\n"
             "2,6,6,2,0,0,1\n"
             "3,17,17,2,0,0,1\n"
             "4,51,62,4,4,1,6\n"
             "5,162,307,4,4,1,6\n");

    RunResult one = run("table --max-n 1 --format csv");
    CHECK_EQ(one.status, 0);
    CHECK_EQ(one.out, "n,lower,upper,anchor_k,a,q_num,q_den\n1,3,3,0,0,0,1\n");
}

TEST_CASE("table csv under an assumed sharper anchor") {
    RunResult r = run("table --max-n 6 --format csv --assume 4=51");
    CHECK_EQ(r.status, 0);
    CHECK(contains(r.out, "4,51,51,4,15,5,8\n"));
    CHECK(contains(r.out, "5,162,252,4,15,5,8\n"));
    CHECK(contains(r.out, "6,3,1508,4,15,5,8\n"));
}

TEST_CASE("table json matches the library row for row") {
    RunResult r = run("table --max-n 6 --format json");
    CHECK_EQ(r.status, 0);
    nlohmann::json parsed = nlohmann::json::parse(r.out);
    std::vector<BoundTableRow> rows = best_bounds_table(KnowledgeBase::defaults(), 6);
    REQUIRE_EQ(parsed.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const BoundTableRow& row = rows[i];
        CHECK_EQ(parsed[i]["n"].get<unsigned>(), row.n);
        CHECK_EQ(parsed[i]["lower"].get<std::string>(), row.lower.str());
        CHECK_EQ(parsed[i]["upper"].get<std::string>(), row.best_upper.str());
        const BoundCandidate& win = row.candidates[row.winner];
        if (win.kind == BoundCandidate::Kind::anchor) {
            CHECK_EQ(parsed[i]["anchor_k"].get<unsigned>(), win.anchor_k);
            CHECK_EQ(parsed[i]["a"].get<std::string>(), win.a.str());
            CHECK_EQ(parsed[i]["q_num"].get<std::string>(), win.q.numerator().str());
            CHECK_EQ(parsed[i]["q_den"].get<std::string>(), win.q.denominator().str());
        } else {
            CHECK_EQ(parsed[i]["anchor_k"].get<unsigned>(), 0u);
        }
    }
}

TEST_CASE("table output is bit-for-bit reproducible") {
    RunResult first = run("table --max-n 6 --format json");
    RunResult again = run("table --max-n 6 --format json");
    RunResult w1 = run("table --max-n 6 --format json --workers 1");
    RunResult w4 = run("table --max-n 6 --format json --workers 4");
    CHECK_EQ(first.status, 0);
    CHECK_EQ(first.out, again.out);
    CHECK_EQ(first.out, w1.out);
    CHECK_EQ(first.out, w4.out);
}

TEST_CASE("a non-strengthening assumption leaves the table untouched") {
    RunResult plain = run("table --max-n 5 --format csv");
    RunResult weak = run("table --max-n 5 --format csv --assume 4=62");
    CHECK_EQ(weak.status, 0);
    CHECK_EQ(plain.out, weak.out);
}

TEST_CASE("table respects a custom knowledge base file") {
    std::string path = temp_file("cli_test_kb.txt");
    write_file(path, "# minimal base\n2 6 6 exact\n");
    RunResult r = run("table --kb " + path + " --max-n 3 --format csv");
    CHECK_EQ(r.status, 0);
    CHECK_EQ(r.out,
             "n,lower,upper,anchor_k,a,q_num,q_den\n"
             "2,6,6,2,0,0,1\n"
             "3,3,17,2,0,0,1\n");
    std::remove(path.c_str());
}

TEST_CASE("adapt derives a and q from an anchor") {
    RunResult sharp = run("adapt --k 4 --upper 51");
    CHECK_EQ(sharp.status, 0);
    CHECK(contains(sharp.out, "a = 15\n"));
    CHECK(contains(sharp.out, "q = 5/8\n"));
    CHECK(contains(sharp.out, "f(4) = 51\n"));
    CHECK(contains(sharp.out, "f(8) = 84402\n"));
    CHECK(contains(sharp.out, "optimality: a' = 16 already fails at n = 4"));

    RunResult stored = run("adapt --k 4 --upper 62");
    CHECK_EQ(stored.status, 0);
    CHECK(contains(stored.out, "q = 1/6\n"));
    CHECK(contains(stored.out, "f(4) = 62\n"));

    RunResult five = run("adapt --k 5 --upper 227");
    CHECK_EQ(five.status, 0);
    CHECK(contains(five.out, "q = 5/6\n"));
}

TEST_CASE("adapt csv lists the propagated values") {
    RunResult r = run("adapt --k 4 --upper 51 --format csv");
    CHECK_EQ(r.status, 0);
    CHECK_EQ(r.out, "n,f\n4,51\n5,252\n6,1508\n7,10551\n8,84402\n");
}

TEST_CASE("verify suite passes and reports the non-extension fact") {
    RunResult r = run("verify --max-n 30");
    CHECK_EQ(r.status, 0);
    CHECK(contains(r.out, "euler recursion n=1..30: ok"));
    CHECK(contains(r.out, "f(3)=16 < 17, non-extension confirmed"));
    CHECK(contains(r.out, "verify: all checks passed"));

    CHECK_EQ(run("verify --max-n 1").status, 0);
}

TEST_CASE("ramsey oracle proves the small cases") {
    RunResult one = run("oracle-ramsey --colors 1");
    CHECK_EQ(one.status, 0);
    CHECK(contains(one.out, "R_1(3) = 3 (proved)"));

    RunResult two = run("oracle-ramsey --colors 2");
    CHECK_EQ(two.status, 0);
    CHECK(contains(two.out, "N=6: proved absent (nodes=162)"));
    CHECK(contains(two.out, "R_2(3) = 6 (proved)"));
    CHECK(contains(two.out, "witness at N=5 verified: no monochromatic triangle"));
    CHECK(contains(two.out, "kb check: consistent with stored [6, 6]"));
}

TEST_CASE("ramsey oracle node counts do not depend on the worker count") {
    RunResult w1 = run("oracle-ramsey --colors 2 --workers 1");
    RunResult w4 = run("oracle-ramsey --colors 2 --workers 4");
    CHECK_EQ(w1.status, 0);
    CHECK_EQ(w1.out, w4.out);
}

TEST_CASE("schur oracle proves S(3) = 13") {
    RunResult r = run("oracle-schur --colors 3 --limit 20");
    CHECK_EQ(r.status, 0);
    CHECK(contains(r.out, "S(3) = 13\n"));
    CHECK(contains(r.out, "search nodes: 326\n"));
    CHECK(contains(r.out, "witness for N=13 verified: sum-free"));
    CHECK(contains(r.out, ": ok\n"));
}

TEST_CASE("schur oracle reports a too-small window as a lower bound") {
    RunResult r = run("oracle-schur --colors 2 --limit 4");
    CHECK_EQ(r.status, 0);
    CHECK(contains(r.out, "S(2) >= 4 (exceeds limit)"));
    CHECK(contains(r.out, "link check skipped"));
}

TEST_CASE("emitted witnesses pass check-witness") {
    std::string path = temp_file("cli_test_schur_witness.txt");
    RunResult emit = run("oracle-schur --colors 2 --limit 10 --emit " + path);
    CHECK_EQ(emit.status, 0);
    RunResult check = run("check-witness " + path);
    CHECK_EQ(check.status, 0);
    CHECK(contains(check.out, "loaded schur-witness: N=4 n=2"));
    CHECK(contains(check.out, "valid: sum-free partition"));
    std::remove(path.c_str());
}

TEST_CASE("check-witness accepts the bundled 3-coloring of K_16") {
    std::string fixture = std::string(SOURCE_DIR) + "/fixtures/k16-3col.txt";
    RunResult r = run("check-witness " + fixture);
    CHECK_EQ(r.status, 0);
    CHECK(contains(r.out, "loaded ramsey-witness: N=16 n=3 (120 edges)"));
    CHECK(contains(r.out, "valid: no monochromatic triangle"));

    RunResult j = run("check-witness --format json " + fixture);
    CHECK_EQ(j.status, 0);
    nlohmann::json parsed = nlohmann::json::parse(j.out);
    CHECK_EQ(parsed["kind"].get<std::string>(), "ramsey");
    CHECK_EQ(parsed["N"].get<unsigned>(), 16u);
    CHECK_EQ(parsed["n"].get<unsigned>(), 3u);
    CHECK(parsed["valid"].get<bool>());
}

TEST_CASE("exit code 2 for domain errors") {
    CHECK_EQ(run("table --max-n 0").status, 2);
    CHECK_EQ(run("adapt --k 4 --upper 67").status, 2);
    CHECK_EQ(run("table --assume 4=50").status, 2);
}

TEST_CASE("exit code 3 for malformed input files") {
    std::string path = temp_file("cli_test_bogus.txt");
    write_file(path, "telephone-witness N=3 n=2\n");
    CHECK_EQ(run("check-witness " + path).status, 3);
    std::remove(path.c_str());
    CHECK_EQ(run("table --kb /nonexistent/kb.txt").status, 3);
}

TEST_CASE("exit code 4 when the node budget runs out") {
    RunResult schur = run("oracle-schur --colors 4 --limit 50 --budget 1000");
    CHECK_EQ(schur.status, 4);
    CHECK(contains(schur.out, "budget-exceeded after 1000 nodes"));
    CHECK_EQ(run("oracle-ramsey --colors 3 --budget 1000").status, 4);
}

TEST_CASE("exit code 5 for a witness that fails verification") {
    std::string path = temp_file("cli_test_mono.txt");
    write_file(path, "ramsey-witness N=3 n=2\n0 1 0\n0 2 0\n1 2 0\n");
    RunResult r = run("check-witness " + path);
    CHECK_EQ(r.status, 5);
    CHECK(contains(r.out, "INVALID: monochromatic triangle {0, 1, 2} in color 0"));
    std::remove(path.c_str());
}
