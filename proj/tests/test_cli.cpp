#include "doctest.h"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

// Runs the tool with the given arguments, capturing stdout (and stderr when
// the caller redirects it into the same stream).
RunResult run_cli(const std::string& args) {
    RunResult r;
    std::string cmd = std::string(CRINV_CLI_PATH) + " " + args;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int rc = pclose(p);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("invariant subcommand prints the frozen values") {
    auto r = run_cli("ci-invariant --n 2 --r 3 --degrees 3,3,3 --phi c2 2>/dev/null");
    CHECK(r.status == 0);
    CHECK(r.out == "-108*pi\n");

    auto z = run_cli("ci-invariant --n 2 --r 3 --symbolic --phi c1*c1 2>/dev/null");
    CHECK(z.status == 0);
    CHECK(z.out == "0\n");
}

TEST_CASE("invariant subcommand rejects wrong degrees with a clear message") {
    auto r = run_cli("ci-invariant --n 2 --r 3 --degrees 3,3,3 --phi c3 2>&1");
    CHECK(r.status == 2);
    CHECK(contains(r.out, "degree 3 != n = 2"));

    auto m = run_cli("ci-invariant --n 2 --r 3 --degrees 3,3,3 --phi 'c1+c2' 2>&1");
    CHECK(m.status == 2);
    CHECK(contains(m.out, "not homogeneous"));

    auto b = run_cli("ci-invariant --n 2 --r 3 --degrees 3,3 --phi c2 2>&1");
    CHECK(b.status == 2);

    auto both = run_cli("ci-invariant --n 2 --r 3 --degrees 3,3,3 --symbolic --phi c2 2>&1");
    CHECK(both.status == 2);
    CHECK(contains(both.out, "exactly one of"));

    auto syntax = run_cli("ci-invariant --n 2 --r 3 --symbolic --phi 'c2 +' 2>&1");
    CHECK(syntax.status == 2);
}

TEST_CASE("transform subcommand handles numeric and symbolic dimensions") {
    auto base = run_cli("einstein-transform --mode base --n 2 --phi c2 2>/dev/null");
    CHECK(base.status == 0);
    CHECK(base.out == "c2 - 1/3*c1^2\n");

    auto dom = run_cli("einstein-transform --mode domain --symbolic-n --phi c3 2>/dev/null");
    CHECK(dom.status == 0);
    CHECK(dom.out == "c3 - n/(n+2)*c1*c2 + (n^2+n)/(3*n^2+12*n+12)*c1^3\n");

    auto t1 = run_cli("einstein-transform --mode domain --symbolic-n --phi T1 2>/dev/null");
    CHECK(t1.status == 0);
    CHECK(t1.out == "0\n");

    auto t1b = run_cli("einstein-transform --mode base --n 4 --phi T1 2>/dev/null");
    CHECK(t1b.status == 0);
    CHECK(t1b.out == "0\n");

    auto neither = run_cli("einstein-transform --mode base --phi c2 2>&1");
    CHECK(neither.status == 2);
    auto badmode = run_cli("einstein-transform --mode sideways --n 2 --phi c2 2>&1");
    CHECK(badmode.status == 2);
}

TEST_CASE("expansion subcommand lists the graded parts") {
    auto r = run_cli("chern-expansion --n 1 2>/dev/null");
    CHECK(r.status == 0);
    CHECK(r.out == "Phi_0 = -3; Phi_1 = 2*c1\n");

    auto big = run_cli("chern-expansion --n 2 2>/dev/null");
    CHECK(big.status == 0);
    CHECK(contains(big.out, "Phi_0"));
    CHECK(contains(big.out, "Phi_2"));

    auto zero = run_cli("chern-expansion --n 0 2>&1");
    CHECK(zero.status == 2);
}

TEST_CASE("verification suites pass and report by identity") {
    auto lef = run_cli("verify --suite lefschetz --n 3 --trials 50 --seed 7 2>/dev/null");
    CHECK(lef.status == 0);
    CHECK(contains(lef.out, "result: PASS"));

    auto tr = run_cli("verify --suite tractor --n 2 --trials 5 2>/dev/null");
    CHECK(tr.status == 0);
    CHECK(contains(tr.out, "S_phi_tracefree: pass"));

    auto smoke = run_cli("verify --suite all --trials 1 2>/dev/null");
    CHECK(smoke.status == 0);
    CHECK(contains(smoke.out, "suite: ring"));
    CHECK(contains(smoke.out, "suite: ci"));
    CHECK(contains(smoke.out, "suite: lefschetz"));
    CHECK(contains(smoke.out, "suite: tractor"));
    CHECK(contains(smoke.out, "result: PASS"));

    auto bad = run_cli("verify --suite nonsense --trials 1 2>&1");
    CHECK(bad.status == 2);
    auto low = run_cli("verify --suite tractor --n 1 --trials 1 2>&1");
    CHECK(low.status == 2);
}

TEST_CASE("json output is a stable self-describing document") {
    auto r = run_cli("ci-invariant --n 2 --r 3 --degrees 3,3,3 --phi c2 --output json 2>/dev/null");
    CHECK(r.status == 0);
    auto doc = nlohmann::ordered_json::parse(r.out);
    CHECK(doc["result"]["value"] == "-108*pi");
    CHECK(doc["config"]["subcommand"] == "ci-invariant");
    CHECK(doc["config"]["n"] == 2);
    CHECK(doc["config"]["degrees"] == nlohmann::ordered_json::array({3, 3, 3}));
    CHECK(doc["warnings"].is_array());
    CHECK(doc["version"].is_string());

    // reserialization fixed point
    auto again = nlohmann::ordered_json::parse(doc.dump(2));
    CHECK(again == doc);
    CHECK(again.dump(2) == doc.dump(2));

    auto v = run_cli("verify --suite ring --n 2 --trials 2 --output json 2>/dev/null");
    CHECK(v.status == 0);
    auto vdoc = nlohmann::ordered_json::parse(v.out);
    CHECK(vdoc["result"]["passed"] == true);
    CHECK(vdoc["result"]["suites"][0]["suite"] == "ring");
    CHECK(vdoc["result"]["suites"][0]["identities"].size() > 0);
    for (const auto& id : vdoc["result"]["suites"][0]["identities"])
        CHECK(id["status"] == "pass");
}

TEST_CASE("identical invocations produce byte-identical output") {
    const std::string cmd =
        "verify --suite tractor --n 2 --trials 3 --seed 11 --output json 2>/dev/null";
    auto a = run_cli(cmd);
    auto b = run_cli(cmd);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);

    auto c = run_cli("chern-expansion --n 3 --output json 2>/dev/null");
    auto d = run_cli("chern-expansion --n 3 --output json 2>/dev/null");
    CHECK(c.out == d.out);
}

TEST_CASE("config files mirror the flags and explicit flags win") {
    const char* path = "cli_test_config.ini";
    {
        std::ofstream f(path);
        f << "# sample run\n"
          << "n = 2\n"
          << "r = 3\n"
          << "degrees = 3,3,3\n"
          << "phi = c2\n";
    }
    auto r = run_cli(std::string("ci-invariant --config ") + path + " 2>/dev/null");
    CHECK(r.status == 0);
    CHECK(r.out == "-108*pi\n");

    auto over = run_cli(std::string("ci-invariant --config ") + path +
                        " --phi c1*c1 2>/dev/null");
    CHECK(over.status == 0);
    CHECK(over.out == "0\n");

    auto missing = run_cli("ci-invariant --config does_not_exist.ini 2>&1");
    CHECK(missing.status == 2);
    CHECK(contains(missing.out, "cannot read config file"));
    std::remove(path);
}

TEST_CASE("geometry warnings surface without polluting results") {
    // degree sum too small for a positive canonical bundle
    auto w = run_cli("ci-invariant --n 2 --r 3 --degrees 1,1,1 --phi c2 2>/dev/null");
    CHECK(w.status == 0);
    CHECK(!contains(w.out, "warning"));

    auto wj = run_cli("ci-invariant --n 2 --r 3 --degrees 1,1,1 --phi c2 --output json 2>/dev/null");
    auto doc = nlohmann::ordered_json::parse(wj.out);
    CHECK(doc["warnings"].size() > 0);

    auto werr = run_cli("ci-invariant --n 2 --r 3 --degrees 1,1,1 --phi c2 2>&1");
    CHECK(contains(werr.out, "warning"));
}
