// Copyright (c) 2026 The hteq authors
// SPDX-License-Identifier: MIT

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "hteq/nonground.hpp"
#include "hteq/oracle.hpp"

using namespace hteq;

TEST_CASE("non-ground parsing") {
  NGProgram p = parse_ng_program("q(a).\np(X) :- q(X).\n");
  REQUIRE(p.rules().size() == 2);
  CHECK(p.predicates().at("p") == 1);
  CHECK(p.predicates().at("q") == 1);
  CHECK(p.constants() == std::vector<std::string>{"a"});
  CHECK(to_string(p.rules()[1]) == "p(X) :- q(X).");

  NGProgram zero = parse_ng_program("p :- not q.");
  CHECK(zero.predicates().at("p") == 0);

  CHECK_THROWS_AS(parse_ng_program("p(X) :- p(X, Y)."), ParseError);  // arity
  CHECK_THROWS_AS(parse_ng_program("p(f(X))."), ParseError);  // function term
  CHECK_THROWS_AS(parse_ng_program("p(X) :- X = a."), ParseError);  // equality
}

TEST_CASE("safety") {
  CHECK(is_safe(parse_ng_program("p(X) :- q(X).").rules()[0]));
  CHECK(!is_safe(parse_ng_program("p(X).").rules()[0]));
  CHECK(!is_safe(parse_ng_program("p(a) :- not q(X).").rules()[0]));
  CHECK(!is_safe(parse_ng_program("not p(X) :- q(a).").rules()[0]));
  CHECK(is_safe(parse_ng_program("q(a). p(X) :- q(X), not r(X).")));
}

TEST_CASE("herbrand universe") {
  CHECK(herbrand_universe(parse_ng_program("q(a). p(X) :- q(X).")) ==
        std::vector<std::string>{"a"});
  CHECK(herbrand_universe(parse_ng_program("p(X) :- q(X).")) ==
        std::vector<std::string>{"c"});
  CHECK(herbrand_universe(parse_ng_program("p(a,b).")) ==
        std::vector<std::string>{"a", "b"});
}

TEST_CASE("grounding") {
  NGProgram p = parse_ng_program("p(X) :- q(X).");
  Program g = ground(p, {"a", "b"});
  REQUIRE(g.rules().size() == 2);
  CHECK(to_string(g.rules()[0]) == "p(a) :- q(a)");
  CHECK(to_string(g.rules()[1]) == "p(b) :- q(b)");

  // ground facts pass through unchanged
  Program fact = ground(parse_ng_program("q(a)."), {"a", "b"});
  REQUIRE(fact.rules().size() == 1);
  CHECK(fact.rules()[0].head_pos == std::vector<std::string>{"q(a)"});

  // two variables over three constants: nine instances
  Program two = ground(parse_ng_program("p(X,Y) :- q(X), q(Y)."),
                       {"a", "b", "d"}, Limits{32});
  CHECK(two.rules().size() == 9);

  Limits tight;
  tight.max_atoms = 3;
  CHECK_THROWS_AS(ground(p, {"a", "b", "d", "e"}, tight), BoundError);
}

TEST_CASE("ground atom base") {
  Signature base = ground_base({{"p", 1}, {"q", 0}}, {"a", "b"});
  CHECK(base.atoms() == std::vector<std::string>{"p(a)", "p(b)", "q"});
}

TEST_CASE("ordinary and open answer sets") {
  auto ord = ordinary_answer_sets(parse_ng_program("q(a). p(X) :- q(X)."));
  REQUIRE(ord.size() == 1);
  CHECK(ord[0] == std::vector<std::string>{"p(a)", "q(a)"});

  auto unsafe = ordinary_answer_sets(parse_ng_program("p(X)."));
  REQUIRE(unsafe.size() == 1);
  CHECK(unsafe[0] == std::vector<std::string>{"p(c)"});

  auto open = open_answer_sets(parse_ng_program("p(X)."), 1);
  REQUIRE(open.size() == 2);
  CHECK(open[0].atoms == std::vector<std::string>{"p(c)"});
  CHECK(open[1].universe == std::vector<std::string>{"c", "u1"});
  CHECK(open[1].atoms == std::vector<std::string>{"p(c)", "p(u1)"});
}

TEST_CASE("open and ordinary answer sets coincide on safe programs") {
  const char* corpus[] = {
      "q(a). p(X) :- q(X).",
      "q(a). q(b). p(X) :- q(X), not r(X).",
      "e(a,b). e(b,a). t(X) :- e(X,Y).",
      "q(a). p(X) | r(X) :- q(X).",
  };
  for (const char* text : corpus) {
    NGProgram p = parse_ng_program(text);
    REQUIRE(is_safe(p));
    auto ord = ordinary_answer_sets(p, Limits{32});
    auto open = open_answer_sets(p, 2, Limits{32});
    // every universe yields exactly the ordinary answer sets
    std::size_t per_universe = ord.size();
    REQUIRE(open.size() == 3 * per_universe);
    for (const auto& oas : open) {
      CHECK(std::find(ord.begin(), ord.end(), oas.atoms) != ord.end());
    }
  }
}

TEST_CASE("uniform equivalence of non-ground programs") {
  NGProgram p1 = parse_ng_program("q(a). p(X) :- q(X).");
  NGProgram p2 = parse_ng_program("q(a). p(a).");

  NGVerdict k0 = decide_uniform_nonground(p1, p2, 0);
  CHECK(k0.equivalent);
  CHECK(k0.universes_checked == 1);

  NGVerdict k1 = decide_uniform_nonground(p1, p2, 1);
  CHECK(!k1.equivalent);
  CHECK(k1.universe == std::vector<std::string>{"a", "u1"});
  CHECK(k1.witness.has_value());

  CHECK(decide_uniform_nonground(p1, p1, 2).equivalent);

  // a context over the extended universe separates the pair concretely
  NGProgram ctx = parse_ng_program("q(u1).");
  auto as1 = ordinary_answer_sets(NGProgram::unite(p1, ctx), Limits{32});
  auto as2 = ordinary_answer_sets(NGProgram::unite(p2, ctx), Limits{32});
  CHECK(as1 != as2);
}

TEST_CASE("verdicts never flip back to equivalent as k grows") {
  const char* pairs[][2] = {
      {"q(a). p(X) :- q(X).", "q(a). p(a)."},
      {"p(X).", "p(c)."},
      {"q(a).", "q(a). p(X) :- q(X), r(X)."},
      {"p(a) :- not p(a).", "r(b) :- not r(b)."},
  };
  for (auto& pr : pairs) {
    NGProgram p1 = parse_ng_program(pr[0]);
    NGProgram p2 = parse_ng_program(pr[1]);
    bool seen_inequivalent = false;
    for (std::size_t k = 0; k <= 2; ++k) {
      NGVerdict v = decide_uniform_nonground(p1, p2, k, Limits{32});
      if (seen_inequivalent) CHECK(!v.equivalent);
      seen_inequivalent = !v.equivalent;
    }
  }
}

TEST_CASE("maximal-model comparison agrees with Eu on ground programs") {
  std::mt19937 rng(83);
  CorpusConfig cfg;
  cfg.atoms = 4;
  cfg.max_formulas = 4;
  for (int i = 0; i < 150; ++i) {
    Program p1 = random_program(rng, cfg);
    Program p2 = i % 3 == 0 ? p1 : random_program(rng, cfg);
    Signature sig = Signature::unite(p1.signature(), p2.signature());
    Theory t1 = program_to_theory(p1).with_signature(sig);
    Theory t2 = program_to_theory(p2).with_signature(sig);

    bool by_models = compare_uniform_models(t1, t2, sig).equivalent;
    bool by_eu = decide_equivalence(t1, t2, sig,
                                    EquivNotion::Uniform).equivalent;
    CHECK(by_models == by_eu);
  }
}
