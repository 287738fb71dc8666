#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "folia/cli.hpp"
#include "helpers.hpp"

using namespace folia;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run_command(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus_file(const std::string& name) { return std::string(FOLIA_CORPUS_DIR) + "/" + name; }

const std::string kLambda = "lambda*y*z dx + x*z dy - (1+lambda)*x*y dz";

}  // namespace

TEST_CASE("sing on the pencil") {
  const Run r = run({"sing", "-e", "y dx - x dy + 0 dz"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(0:0:1) mu=1") != std::string::npos);
  CHECK(r.out.find("darboux 1 = 1 ok") != std::string::npos);

  const Run j = run({"sing", "--json", "-e", "y dx - x dy + 0 dz"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["degree"] == 0);
  CHECK(doc["singular"].size() == 1);
  CHECK(doc["singular"][0]["point"] == "(0:0:1)");
  CHECK(doc["singular"][0]["mu"] == 1);
  CHECK(doc["darboux"]["ok"] == true);
}

TEST_CASE("parameters and stdin") {
  const Run a = run({"sing", "-e", kLambda, "-p", "lambda=2"});
  const Run b = run({"sing", "-", "-p", "lambda=2"}, kLambda + "\n");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("singular points 3") != std::string::npos);
  CHECK(run({"sing", "-e", kLambda}).code == 2);
  CHECK(run({"sing", "-e", kLambda, "-p", "lambda"}).code == 2);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"sing", "-e", "x dx +"}).code == 2);
  const Run v = run({"sing", "-e", "x dx + y dy"});
  CHECK(v.code == 3);
  CHECK(v.err.find("x^2 + y^2") != std::string::npos);
  CHECK(run({"sing", corpus_file("missing.form")}).code == 3);
  CHECK(run({"restrict", "-e", "y dx - x dy + 0 dz", "--line", "x*y"}).code == 3);
  CHECK(run({"lemma-step", "-e", "y dx - x dy + 0 dz", "--line", "x"}).code == 3);
  CHECK(run({"verify-example", "--lambda", "-1"}).code == 3);
  CHECK(run({"pullback", "--map", "matrix", "--matrix", "1 0 0;0 1 0;0 0 0", "-e", "y dx - x dy + 0 dz"}).code == 3);
}

TEST_CASE("restrict and pullback") {
  const Run r = run({"restrict", "-e", kLambda, "-p", "lambda=2", "--line", "z"});
  CHECK(r.code == 0);
  CHECK(r.out.find("invariant yes") != std::string::npos);
  const Run n = run({"restrict", "-e", kLambda, "-p", "lambda=2", "--line", "x + y + z"});
  CHECK(n.out.find("invariant no") != std::string::npos);

  const Run p = run({"pullback", "--map", "I1", "-e", kLambda, "-p", "lambda=2"});
  CHECK(p.code == 0);
  CHECK(p.out.find("form (-4*x^2*y - 2*y^2*z) dx + (4*x^3 - x*y*z) dy + (3*x*y^2) dz") != std::string::npos);
  CHECK(p.out.find("extracted factor y^2") != std::string::npos);

  const Run m = run({"pullback", "--map", "matrix", "--matrix", "1 0 0;0 0 1;0 1 0", "-e", kLambda, "-p", "lambda=2"});
  CHECK(m.code == 0);
  CHECK(m.out.find("form (2*y*z) dx + (-3*x*z) dy + (x*y) dz") != std::string::npos);
}

TEST_CASE("lemma-step and reduce") {
  const Run s = run({"lemma-step", "-e", kLambda, "-p", "lambda=2", "--line", "y"});
  CHECK(s.code == 0);
  CHECK(s.out.find("singular points 2") != std::string::npos);

  const Run r = run({"reduce", "-e", kLambda, "-p", "lambda=3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("final singular points 1") != std::string::npos);

  const Run j = run({"reduce", "--json", "-e", kLambda, "-p", "lambda=3"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["steps"].size() == 2);
  CHECK(doc["final"]["count"] == 1);
  for (const auto& step : doc["steps"]) CHECK(step["darboux"]["ok"] == true);
}

TEST_CASE("outputs are deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"reduce", "--json", corpus_file("09_quadratic.form")},
           {"sing", corpus_file("05_linear_three.form")},
           {"verify-example", "--lambda", "3", "--json"}}) {
    const Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("the degree ceiling comes from the environment") {
  ::setenv("FOLIA_DEGREE_CEILING", "3", 1);
  const Run r = run({"reduce", "-e", kLambda, "-p", "lambda=2"});
  CHECK(r.code == 4);
  CHECK(r.err.find("ceiling 3") != std::string::npos);
  ::setenv("FOLIA_DEGREE_CEILING", "zero", 1);
  CHECK(run({"reduce", "-e", kLambda, "-p", "lambda=2"}).code == 3);
  ::unsetenv("FOLIA_DEGREE_CEILING");
  CHECK(run({"reduce", "-e", kLambda, "-p", "lambda=2"}).code == 0);
}

TEST_CASE("verify-example") {
  for (const char* l : {"2", "3"}) {
    const Run r = run({"verify-example", "--lambda", l});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
  for (long l : {2L, 3L}) {
    const auto checks = verify_example(Rational(l));
    CHECK(checks.size() == 8);
    for (const auto& c : checks) CHECK(c.ok);
  }
  CHECK(run({"verify-example", "--lambda", "1"}).code == 3);
}

TEST_CASE("replay of a saved transcript") {
  const Run r = run({"reduce", "--json", corpus_file("01_lambda2.form")});
  REQUIRE(r.code == 0);
  const std::string path = "replay_transcript_test.json";
  {
    std::ofstream f(path);
    f << r.out;
  }
  CHECK(run({"replay", path}).code == 0);
  auto doc = nlohmann::ordered_json::parse(r.out);
  doc["steps"][0]["resultForm"] = "(y) dx + (-x) dy + (0) dz";
  {
    std::ofstream f(path);
    f << doc.dump(2);
  }
  CHECK(run({"replay", path}).code == 5);
  std::remove(path.c_str());
}
