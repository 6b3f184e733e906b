// Copyright (c) 2026 The hteq authors
// SPDX-License-Identifier: MIT

// End-to-end checks of the hteq binary (path injected via HTEQ_CLI_PATH).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd =
      std::string(HTEQ_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// Writes the file once per test binary run and returns its path.
std::string file(const std::string& name, const std::string& content) {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "hteq-cli-test";
    fs::create_directories(d);
    return d;
  }();
  fs::path p = dir / name;
  std::ofstream(p) << content;
  return p.string();
}

}  // namespace

TEST_CASE("check: notions and exit codes") {
  std::string f1 = file("disj1.thy", "a | b.\n");
  std::string f2 = file("disj2.lp", "a :- not b.\nb :- not a.\n");

  RunResult uni = run("check " + f1 + " " + f2 + " --mode uniform");
  CHECK(uni.code == 2);  // mixed theory/program inputs are rejected

  std::string f1p = file("disj1.lp", "a | b.\n");
  RunResult uni2 = run("check " + f1p + " " + f2 +
                       " --kind program --mode uniform");
  CHECK(uni2.code == 0);
  CHECK(uni2.out == "equivalent\n");

  RunResult strong = run("check " + f1p + " " + f2 +
                         " --kind program --mode strong");
  CHECK(strong.code == 1);
  CHECK(strong.out ==
        "not equivalent\nwitness: ({},{a,b}) (in input 1 only)\n");

  RunResult hyper = run("check " + f1p + " " + f2 +
                        " --kind program --mode hyper --aplus a,b");
  CHECK(hyper.code == 0);
  RunResult hyper2 = run("check " + f1p + " " + f2 +
                         " --kind program --mode hyper --aplus @all"
                         " --aminus @all");
  CHECK(hyper2.code == 1);
}

TEST_CASE("check: json report") {
  std::string f1 = file("j1.thy", "a.\n");
  std::string f2 = file("j2.thy", "-(-a) -> a. -a -> a.\n");
  RunResult r = run("check " + f1 + " " + f2 + " --mode strong --json");
  auto rep = nlohmann::json::parse(r.out);
  CHECK(rep["schema"] == "hteq-report-1");
  CHECK(rep["tool"]["name"] == "hteq");
  CHECK(rep["mode"] == "strong");
  CHECK(rep["signature"] == nlohmann::json::array({"a"}));
  CHECK((rep["verdict"] == "equivalent" || rep["verdict"] == "not-equivalent"));
  CHECK(rep.contains("set_sizes"));
}

TEST_CASE("check: bad input and bounds") {
  std::string bad = file("bad.thy", "a & & b.\n");
  std::string good = file("good.thy", "a.\n");
  CHECK(run("check " + bad + " " + good).code == 2);
  CHECK(run("check " + good).code == 2);  // missing argument
  CHECK(run("frobnicate").code == 2);

  std::string wide = file("wide.thy", "a. b. c.\n");
  CHECK(run("check " + wide + " " + good + " --max-atoms 2").code == 3);
  // the environment variable sets the bound, the flag overrides it
  std::string env = "HTEQ_MAX_ATOMS=2 ";
  RunResult via_env = run("check " + wide + " " + wide);
  CHECK(via_env.code == 0);
  FILE* pipe = popen((env + HTEQ_CLI_PATH + " check " + wide + " " + wide +
                      " 2>/dev/null")
                         .c_str(),
                     "r");
  REQUIRE(pipe != nullptr);
  int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 3);
}

TEST_CASE("models listings") {
  std::string f = file("fact.thy", "a.\n");
  CHECK(run("models " + f).out == "({a},{a})\n");
  CHECK(run("models " + f + " --which Es").out == "({},{a})\n({a},{a})\n");
  CHECK(run("models " + f + " --which Ca").out == "({},{a})\n");
  CHECK(run("models " + f + " --which countermodels").out ==
        "({},{})\n({},{a})\n");

  RunResult js = run("models " + f + " --which Es --json");
  auto rep = nlohmann::json::parse(js.out);
  REQUIRE(rep["members"].size() == 2);
  CHECK(rep["members"][0]["here"] == nlohmann::json::array());
  CHECK(rep["members"][0]["there"] == nlohmann::json::array({"a"}));

  std::string d = file("hyp.thy", "a | b.\n");
  RunResult hy = run("models " + d + " --which hyper --aplus a");
  CHECK(hy.code == 0);
  CHECK(!hy.out.empty());
}

TEST_CASE("transforms") {
  std::string f = file("t.thy", "a.\n");
  CHECK(run("transform " + f + " --kind dual").out ==
        "--a & (a -> (--a -> a)).\n");
  CHECK(run("transform " + f + " --kind tau").out == "--a -> a.\n");
  CHECK(run("transform " + f + " --kind gamma-phi --phi a").out ==
        "a -> (--a -> a).\n--a.\n");
  CHECK(run("transform " + f + " --kind gamma-phi").code == 2);

  std::string p = file("t.lp", "a :- not b.\n");
  CHECK(run("transform " + p + " --kind to-theory").out == "-b -> a.\n");
}

TEST_CASE("validate: oracle agreement and self test") {
  RunResult ok = run("validate --pairs 12 --seed 9");
  CHECK(ok.code == 0);
  CHECK(ok.out == "validated 12 pairs x 4 notions: 0 discrepancies\n");

  // the hidden inversion flag must trip every check
  RunResult bad = run("validate --pairs 4 --seed 9 --self-test-invert");
  CHECK(bad.code == 1);

  // reports are byte-identical for a fixed seed, independent of --jobs
  RunResult a = run("validate --pairs 12 --seed 9 --json");
  RunResult b = run("validate --pairs 12 --seed 9 --json");
  RunResult c = run("validate --pairs 12 --seed 9 --json --jobs 3");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  auto rep = nlohmann::json::parse(a.out);
  CHECK(rep["checks"] == 48);
  CHECK(rep["discrepancies"] == 0);
}

TEST_CASE("check-ng") {
  std::string f1 = file("ng1.lp", "q(a).\np(X) :- q(X).\n");
  std::string f2 = file("ng2.lp", "q(a).\np(a).\n");

  RunResult r = run("check-ng " + f1 + " " + f2);
  CHECK(r.code == 1);
  CHECK(r.out.find("not equivalent") == 0);
  CHECK(r.out.find("universe: {a,u1}") != std::string::npos);

  CHECK(run("check-ng " + f1 + " " + f2 + " --extra-consts 0").code == 0);
  CHECK(run("check-ng " + f1 + " " + f1).code == 0);

  RunResult js = run("check-ng " + f1 + " " + f2 + " --json");
  auto rep = nlohmann::json::parse(js.out);
  CHECK(rep["verdict"] == "not-equivalent");
  CHECK(rep["universe"] == nlohmann::json::array({"a", "u1"}));
  CHECK(rep.contains("witness"));

  std::string eq = file("ngeq.lp", "p(X) :- X = a.\n");
  CHECK(run("check-ng " + eq + " " + f1).code == 2);
}

TEST_CASE("version") {
  RunResult r = run("--version");
  CHECK(r.code == 0);
  CHECK(r.out == "hteq 0.1.0\n");
}
