#include <doctest.h>

#include <sstream>

#include "nakhom/cli.hpp"
#include "nakhom/jsonio.hpp"

using namespace nakhom;

namespace {

struct RunResult {
    int code = 0;
    std::string out, err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return RunResult{code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("basic queries") {
    const RunResult dd = run({"domdim", "--kupisch", "linear:3,3,3,2,1"});
    CHECK(dd.code == 0);
    CHECK(dd.out == "2\n");

    const RunResult gl = run({"gldim", "--kupisch", "cyclic:4,5"});
    CHECK(gl.code == 0);
    CHECK(gl.out == "inf\n");

    const RunResult hd = run({"homdim", "--kupisch", "linear:3,3,3,2,1", "--module", "M(2,3)",
                              "--module", "M(0,3)"});
    CHECK(hd.code == 0);
    CHECK(hd.out == "1\n");
}

TEST_CASE("property-star reports the failure of the conjecture") {
    const RunResult r = run({"property-star", "--kupisch", "linear:3,3,2,1", "--format", "json"});
    CHECK(r.code == 0);
    const ojson j = ojson::parse(r.out);
    CHECK(j.at("result").at("endo_domdim").at("value") == 0);
    CHECK(j.at("result").at("has_property_star") == false);
    CHECK(j.at("tool") == "nakhom");
    CHECK_FALSE(j.contains("timing_ms"));
}

TEST_CASE("json output is byte-deterministic") {
    const std::vector<std::string> args{"info", "--kupisch", "cyclic:2,3", "--format", "json"};
    const RunResult a = run(args);
    const RunResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    const std::vector<std::string> oracle{"oracle-diff", "--cases", "3", "--seed", "9",
                                          "--format", "json"};
    CHECK(run(oracle).out == run(oracle).out);
}

TEST_CASE("invalid input exits with code 2") {
    CHECK(run({"domdim", "--kupisch", "linear:3,1,2"}).code == 2);
    CHECK(run({"domdim", "--kupisch", "spiral:3,2,1"}).code == 2);
    CHECK(run({"homdim", "--kupisch", "linear:2,1", "--module", "M(0,2)"}).code == 2);
    CHECK(run({"resolve", "--kupisch", "linear:2,1", "--module", "M(7,1)"}).code == 2);
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"domdim"}).code == 2);  // missing --kupisch
}

TEST_CASE("verification commands use exit code 1 for mismatches") {
    const RunResult ok = run({"oracle-diff", "--cases", "4", "--seed", "3"});
    CHECK(ok.code == 0);
    const RunResult bug =
        run({"oracle-diff", "--cases", "2", "--seed", "3", "--inject-bug"});
    CHECK(bug.code == 1);
    CHECK(bug.out.find("DIVERGENCE") != std::string::npos);

    CHECK(run({"sweep", "--bounds", "n=3,c=3"}).code == 0);
    CHECK(run({"tilting", "--kupisch", "cyclic:2,3"}).code == 0);
}

TEST_CASE("resolve prints the trace and verdicts") {
    const RunResult r = run({"resolve", "--kupisch", "cyclic:4,5", "--module", "M(0,1)"});
    CHECK(r.code == 0);
    CHECK(r.out.find("length = inf") != std::string::npos);
    CHECK(r.out.find("cycle detected") != std::string::npos);

    const RunResult p = run({"resolve", "--kupisch", "linear:3,3,3,2,1", "--module", "M(3,2)",
                             "--direction", "projective", "--format", "json"});
    CHECK(p.code == 0);
    const ojson j = ojson::parse(p.out);
    CHECK(j.at("result").at("length").at("value") == 0);  // e_3A is projective
}

TEST_CASE("endo command emits the algebra with its quiver") {
    const RunResult r = run({"endo", "--kupisch", "linear:3,3,3,2,1", "--relations", "--format",
                             "json"});
    CHECK(r.code == 0);
    const ojson j = ojson::parse(r.out);
    CHECK(j.at("result").at("dim") == 12);
    CHECK(j.at("result").at("summands").size() == 5);
    CHECK(j.at("result").at("quiver").at("relations").size() == 2);
    CHECK(j.at("result").at("quiver").at("certificate_ok") == true);

    // duplicate summands produce a warning in the envelope
    const RunResult w = run({"endo", "--kupisch", "linear:2,1", "--module", "M(0,2)", "--module",
                             "M(0,2)", "--format", "json"});
    CHECK(w.code == 0);
    CHECK(ojson::parse(w.out).at("warnings").size() == 1);
}

TEST_CASE("field flag and environment are honored") {
    const RunResult fp = run({"domdim", "--kupisch", "linear:3,3,3,2,1", "--field", "Fp:101"});
    CHECK(fp.code == 0);
    CHECK(fp.out == "2\n");
    CHECK(run({"domdim", "--kupisch", "linear:2,1", "--field", "Fp:4"}).code == 2);  // not prime
}

TEST_CASE("help exits cleanly") {
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("representation JSON round-trips through the documented schema") {
    const KupischSeries C23 = parse_kupisch("cyclic:2,3");
    const SCAlgebra A = nakayama_to_sc(C23);
    EngineContext<Rational> ctx(A);
    const Rep<Rational> M = interval_to_rep(ctx, C23, {1, 3});
    const ojson j = rep_to_json(M);
    CHECK(j.at("dim") == 3);
    const Rep<Rational> back = rep_from_json(A, j);
    CHECK(back.dim == M.dim);
    for (int b = 0; b < A.dim(); ++b) CHECK(back.action[b] == M.action[b]);
    CHECK(back.verify());
}
