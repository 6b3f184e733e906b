// Copyright (c) 2026 The hteq authors
// SPDX-License-Identifier: MIT

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hteq/oracle.hpp"
#include "hteq/syntax.hpp"

using namespace hteq;

namespace {

Formula::Ref first(const std::string& text) {
  Theory t = parse_theory(text);
  REQUIRE(t.size() == 1);
  return t.formulas()[0];
}

}  // namespace

TEST_CASE("signature is sorted and deduplicated") {
  Signature s({"b", "a", "b"});
  CHECK(s.size() == 2);
  CHECK(s.atom(0) == "a");
  CHECK(s.atom(1) == "b");
  CHECK(s.index("b") == 1);
  CHECK(s.contains("a"));
  CHECK(!s.contains("c"));
  CHECK_THROWS(s.index("c"));

  Signature u = Signature::unite(s, Signature({"c"}));
  CHECK(u.size() == 3);
  CHECK(s.subset_of(u));
  CHECK(!u.subset_of(s));
}

TEST_CASE("parsing expands sugar") {
  Formula::Ref f = first("a & -b.");
  CHECK(f->kind() == Formula::Kind::And);
  CHECK(f->left()->atom_name() == "a");
  CHECK(f->right()->kind() == Formula::Kind::Impl);
  CHECK(f->right()->right()->kind() == Formula::Kind::Bottom);

  Formula::Ref g = first("-(-a) -> a.");
  Formula::Ref expect =
      Formula::impl(Formula::neg(Formula::neg(Formula::atom("a"))),
                    Formula::atom("a"));
  CHECK(struct_equal(g, expect));

  Formula::Ref h = first("a <-> b.");
  Formula::Ref a = Formula::atom("a");
  Formula::Ref b = Formula::atom("b");
  CHECK(struct_equal(h, Formula::conj(Formula::impl(a, b),
                                      Formula::impl(b, a))));
}

TEST_CASE("operator precedence and associativity") {
  // - tightest, then &, then |, then -> (right-associative).
  Formula::Ref a = Formula::atom("a");
  Formula::Ref b = Formula::atom("b");
  Formula::Ref c = Formula::atom("c");
  Formula::Ref d = Formula::atom("d");

  CHECK(struct_equal(first("a | b & c -> d."),
                     Formula::impl(Formula::disj(a, Formula::conj(b, c)), d)));
  CHECK(struct_equal(first("a -> b -> c."),
                     Formula::impl(a, Formula::impl(b, c))));
  CHECK(struct_equal(first("-a & b."), Formula::conj(Formula::neg(a), b)));
  CHECK(struct_equal(first("#t."), Formula::top()));
  CHECK(struct_equal(first("#f."), Formula::bottom()));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_theory("a &"), ParseError);
  CHECK_THROWS_AS(parse_theory("a. b"), ParseError);
  try {
    parse_theory("a.\n& b.");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.col() == 1);
  }
}

TEST_CASE("program parsing") {
  Program p = parse_program("a | b.\n"
                            "a :- not b.\n"
                            "not a :- b. % comment\n"
                            ":- a, b.\n");
  REQUIRE(p.rules().size() == 4);
  // Rules are stored sorted; find by shape instead of position.
  auto has = [&](const Rule& r) {
    return std::find(p.rules().begin(), p.rules().end(), r) !=
           p.rules().end();
  };
  CHECK(has(Rule{{"a", "b"}, {}, {}, {}}));
  CHECK(has(Rule{{"a"}, {}, {}, {"b"}}));
  CHECK(has(Rule{{}, {"a"}, {"b"}, {}}));
  CHECK(has(Rule{{}, {}, {"a", "b"}, {}}));

  CHECK_THROWS_AS(parse_program("."), ParseError);
  CHECK_THROWS_AS(parse_program(":- ."), ParseError);
}

TEST_CASE("rule translation") {
  Program p = parse_program("a :- not b.");
  Formula::Ref f = rule_to_formula(p.rules()[0]);
  CHECK(struct_equal(
      f, Formula::impl(Formula::neg(Formula::atom("b")), Formula::atom("a"))));

  Program fact = parse_program("a | b.");
  CHECK(struct_equal(rule_to_formula(fact.rules()[0]),
                     Formula::impl(Formula::top(),
                                   Formula::disj(Formula::atom("a"),
                                                 Formula::atom("b")))));

  Program cons = parse_program(":- a.");
  CHECK(struct_equal(rule_to_formula(cons.rules()[0]),
                     Formula::impl(Formula::atom("a"), Formula::bottom())));

  Theory t = program_to_theory(p);
  CHECK(t.size() == 1);
  CHECK(t.signature().size() == 2);
}

TEST_CASE("factuality") {
  CHECK(is_factual(first("a | -b.")));
  CHECK(!is_factual(first("a -> b.")));
  CHECK(is_factual(first("-(-a).")));
  CHECK(is_factual(first("#f.")));
  CHECK(!is_factual(first("a & (b -> c).")));
}

TEST_CASE("polarity") {
  // b inside a -> (b -> #f) is both positive (consequent) and negative
  // (antecedent of the inner implication).
  PolarityReport rep = atom_polarities(first("a -> (b -> #f)."));
  CHECK(rep["b"].may_occur_positive);
  CHECK(rep["b"].may_occur_negative);
  CHECK(!rep["a"].may_occur_positive);
  CHECK(rep["a"].may_occur_negative);

  rep = atom_polarities(first("a | b."));
  CHECK(rep["a"].may_occur_positive);
  CHECK(!rep["a"].may_occur_negative);

  rep = atom_polarities(first("a -> b."));
  CHECK(!rep["a"].may_occur_positive);
  CHECK(rep["a"].may_occur_negative);
  CHECK(rep["b"].may_occur_positive);
  CHECK(!rep["b"].may_occur_negative);

  // implication-shaped antecedent: a in (a -> b) -> c is also positive.
  rep = atom_polarities(first("(a -> b) -> c."));
  CHECK(rep["a"].may_occur_positive);
  CHECK(rep["a"].may_occur_negative);
  CHECK(rep["b"].may_occur_positive);
  CHECK(rep["b"].may_occur_negative);
  CHECK(rep["c"].may_occur_positive);
  CHECK(!rep["c"].may_occur_negative);

  // atoms absent from the formula are absent from the report
  CHECK(atom_polarities(first("a.")).count("b") == 0);
}

TEST_CASE("alphabet-restricted theories") {
  Alphabets ab;
  ab.a_plus = {"a"};
  ab.a_minus = {"b"};
  CHECK(is_apan_theory(parse_theory("b -> a."), ab, false));

  Alphabets only_plus;
  only_plus.a_plus = {"a"};
  CHECK(!is_apan_theory(parse_theory("-a."), only_plus, false));
  CHECK(is_apan_theory(parse_theory("-a."), only_plus, true));
  // extended only helps factual formulas over a_plus
  CHECK(!is_apan_theory(parse_theory("-c."), only_plus, true));
  CHECK(!is_apan_theory(parse_theory("a -> a."), only_plus, true));
}

TEST_CASE("printing round-trips on a random corpus") {
  std::mt19937 rng(7);
  CorpusConfig cfg;
  cfg.atoms = 4;
  cfg.max_formulas = 4;
  for (int i = 0; i < 200; ++i) {
    Theory t = random_theory(rng, cfg);
    Theory back = parse_theory(to_string(t));
    REQUIRE(back.size() == t.size());
    for (std::size_t k = 0; k < t.size(); ++k) {
      CHECK(struct_equal(t.formulas()[k], back.formulas()[k]));
    }
  }
  for (int i = 0; i < 200; ++i) {
    Program p = random_program(rng, cfg);
    Program back = parse_program(to_string(p));
    CHECK(back.rules() == p.rules());
  }
}

TEST_CASE("theory stores formulas sorted and deduplicated") {
  Theory t = parse_theory("b. a. b.");
  CHECK(t.size() == 2);
  CHECK(to_string(t.formulas()[0]) == "a");
  Theory u = Theory::unite(t, parse_theory("c. a."));
  CHECK(u.size() == 3);
  CHECK(u.signature().size() == 3);
}
