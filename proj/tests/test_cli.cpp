#include "sl2p/exact.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(SL2P_CLI_PATH) + " " + args + " 2>&1";
    Run r;
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
    int st = pclose(f);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string data(const std::string& name) { return std::string(SL2P_DATA_DIR) + "/" + name; }

bool has(const std::string& s, const std::string& what) { return s.find(what) != std::string::npos; }

}  // namespace

TEST_CASE("local-period at xi = -1") {
    Run r = run("local-period --p 3 --case mg --wp 1 --xi -1");
    CHECK(r.status == 0);
    CHECK(has(r.out, "8/9"));
}

TEST_CASE("arch constants") {
    Run r = run("arch --k 1 --ell 3");
    CHECK(r.status == 0);
    CHECK(has(r.out, "4/3"));
}

TEST_CASE("ingest-check") {
    CHECK(run("ingest-check " + data("newform_11.json")).status == 0);
    CHECK(run("ingest-check " + data("level1.json")).status == 0);
    Run missing = run("ingest-check " + data("bad_missing_sign.json"));
    CHECK(missing.status == 2);
    CHECK(has(missing.out, "atkin_lehner incomplete"));
    Run syntax = run("ingest-check " + data("bad_syntax.json"));
    CHECK(syntax.status == 2);
    CHECK(has(syntax.out, "bad_syntax.json:3:"));
    CHECK(run("ingest-check " + data("bad_ap.json")).status == 2);
    CHECK(run("ingest-check /nonexistent.json").status == 2);
}

TEST_CASE("json output parses back exactly") {
    Run r = run("--format json oracle --factor tau --p 3 --M 2 --element 'alpha(1)'");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.contains("closed"));
    for (auto& [e, text] : j.at("closed").items()) {
        sl2p::ExactScalar v = sl2p::ExactScalar::parse(text.get<std::string>(), 3);
        CHECK(v.serialize() == text.get<std::string>());
    }
    CHECK(j.at("closed") == j.at("oracle"));
}

TEST_CASE("reruns are byte identical") {
    std::string args = "--format tsv forms correction --p 3 --B 3,3,9 --delta 1";
    Run a = run(args), b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(has(a.out, "7"));
    std::string m = "--seed 5 maass --report --k-max 3 --m-max 2";
    CHECK(run(m).out == run(m).out);
}

TEST_CASE("bad arguments") {
    CHECK(run("euler --p 4 --af 1 --ag 1").status == 2);
    CHECK(run("nonvanishing --k 1 --ell 3 --Nf 15 --Ng 1 --atkin-lehner 3:+1").status == 2);
    CHECK(run("no-such-command").status != 0);
}

TEST_CASE("selftest quick") {
    Run r = run("selftest --quick");
    CHECK(r.status == 0);
    CHECK(has(r.out, "criterion_10"));
}
