#include <doctest.h>

#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = rankmatch::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(RANKMATCH_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("info summarizes a space file") {
  const auto r = run({"info", "--file", data("gf2_affine.space")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("dim=1 G={ {1,2} } nu=1 mu=2 rho=1\n", 0) == 0);
  const auto id = run({"info", "--file", data("identity.space")});
  CHECK(id.code == 0);
  CHECK(id.out.find("rho=3") != std::string::npos);
  const auto lin = run({"info", "--file", data("gf2_linear.space")});
  CHECK(lin.out.rfind("dim=2 G={ {1,2} {3} } nu=2 mu=3 rho=2\n", 0) == 0);
}

TEST_CASE("info warns about dependent bases") {
  const auto r = run({"info", "--file", data("dependent.space")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("dim=1 ", 0) == 0);
  CHECK(r.err.find("linearly dependent") != std::string::npos);
}

TEST_CASE("info reports parse errors with line numbers") {
  const auto r = run({"info", "--file", data("bad_entry.space")});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 6") != std::string::npos);
  CHECK(run({"info", "--file", data("missing.space")}).code == 4);
}

TEST_CASE("compute single quantities") {
  auto value = [](std::vector<std::string> args) {
    const auto r = run(std::move(args));
    REQUIRE(r.code == 0);
    return r.out;
  };
  CHECK(value({"compute", "ua", "--n", "6", "--k", "4"}) == "10\n");
  CHECK(value({"compute", "us", "--n", "6", "--k", "3"}) == "7\n");
  CHECK(value({"compute", "pf", "--file", data("swap_gf2.matrix")}) == "1\n");
  CHECK(value({"compute", "det", "--file", data("swap_gf2.matrix")}) == "1\n");
  CHECK(value({"compute", "rank", "--file", data("identity.space")}) == "3\n");
  CHECK(value({"compute", "mu", "--file", data("edge_and_loop.graph")}) == "3\n");
  CHECK(value({"compute", "nu", "--file", data("edge_and_loop.graph")}) == "2\n");
  CHECK(run({"compute", "ua", "--n", "6", "--k", "3"}).code == 4);
  CHECK(run({"compute", "ua", "--n", "6"}).code == 4);
  CHECK(run({"compute", "pf", "--file", data("identity.space")}).code == 4);
  CHECK(run({"compute", "volume"}).code == 4);
}

TEST_CASE("verify exit codes") {
  const auto ok = run({"verify", "counterexamples"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("PASS") != std::string::npos);
  const auto bad = run({"verify", "thm1", "--p", "2"});
  CHECK(bad.code == 4);
  CHECK(bad.err.find("|F| >= 3") != std::string::npos);
  CHECK(run({"verify", "unknown"}).code == 4);
  CHECK(run({"verify", "thm2", "--p", "4"}).code == 4);
  CHECK(run({"verify", "thm4", "--k", "3"}).code == 4);
  CHECK(run({}).code == 4);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify output is deterministic") {
  const std::vector<std::string> args = {"verify", "thm1", "--trials", "30", "--seed", "7", "--json"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto threaded = args;
  threaded.insert(threaded.end(), {"--workers", "3"});
  CHECK(run(threaded).out == a.out);
  CHECK(a.out.find("\"suite\": \"thm1\"") != std::string::npos);
}
