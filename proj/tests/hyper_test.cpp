// Copyright (c) 2026 The hteq authors
// SPDX-License-Identifier: MIT

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hteq/hyper.hpp"
#include "hteq/oracle.hpp"
#include "hteq/syntax.hpp"

using namespace hteq;

namespace {

HTInterpretation interp(const Signature& sig,
                        const std::vector<std::string>& here,
                        const std::vector<std::string>& there) {
  return {mask_of(sig, here), mask_of(sig, there)};
}

AlphabetMasks masks_of(const Signature& sig,
                       const std::vector<std::string>& plus,
                       const std::vector<std::string>& minus) {
  Alphabets ab;
  ab.a_plus.insert(plus.begin(), plus.end());
  ab.a_minus.insert(minus.begin(), minus.end());
  return AlphabetMasks::from(ab, sig);
}

Theory disj1() { return parse_theory("a | b."); }
Theory disj2() {
  return program_to_theory(parse_program("a :- not b. b :- not a."));
}

}  // namespace

TEST_CASE("alphabet masks drop atoms outside the signature") {
  Signature sig({"a", "b"});
  Alphabets ab;
  ab.a_plus = {"a", "z"};
  ab.a_minus = {"b"};
  AlphabetMasks m = AlphabetMasks::from(ab, sig);
  CHECK(m.a_plus == mask_of(sig, {"a"}));
  CHECK(m.a_minus == mask_of(sig, {"b"}));
  CHECK(m.joint() == mask_of(sig, {"a", "b"}));
}

TEST_CASE("totality and closure relative to the positive alphabet") {
  Theory t = disj1();
  Signature sig = t.signature();
  InterpretationSet es = equivalence_interpretations(t, sig);

  AlphabetMasks only_a = masks_of(sig, {"a"}, {});
  CHECK(is_aplus_total(mask_of(sig, {"b"}), es, only_a));
  CHECK(!is_aplus_total(mask_of(sig, {"a", "b"}), es, only_a));
  CHECK(is_aplus_total(mask_of(sig, {"a"}), es, only_a));

  Theory fact = parse_theory("a.");
  InterpretationSet es_fact =
      equivalence_interpretations(fact, fact.signature());
  AlphabetMasks fact_ab = masks_of(fact.signature(), {"a"}, {});
  CHECK(is_aplus_closed(interp(fact.signature(), {}, {"a"}), es_fact,
                        fact_ab));
}

TEST_CASE("hyper members restrict the here-component to the alphabets") {
  std::mt19937 rng(43);
  CorpusConfig cfg;
  cfg.atoms = 3;
  for (int i = 0; i < 50; ++i) {
    Theory t = random_theory(rng, cfg);
    const Signature& sig = t.signature();
    AlphabetMasks ab = masks_of(sig, {"a"}, {"b"});
    HyperSet h = hyper_interpretations(t, sig, ab);
    for (const auto& m : h.interpretations.members) {
      CHECK((m.here & ~ab.joint()) == 0);
      CHECK((m.here & m.there) == m.here);
    }
  }
}

TEST_CASE("special-case collapses of the hyper set") {
  std::mt19937 rng(47);
  CorpusConfig cfg;
  cfg.atoms = 3;
  for (int i = 0; i < 100; ++i) {
    Theory t = random_theory(rng, cfg);
    const Signature& sig = t.signature();
    std::vector<std::string> all = sig.atoms();

    // empty alphabets: members are (0,Y) for exactly the answer sets
    HyperSet none = hyper_interpretations(t, sig, masks_of(sig, {}, {}));
    InterpretationSet ea = equilibrium_models(t, sig);
    REQUIRE(none.interpretations.members.size() == ea.members.size());
    for (std::size_t k = 0; k < ea.members.size(); ++k) {
      CHECK(none.interpretations.members[k] ==
            HTInterpretation{0, ea.members[k].there});
    }

    // full alphabets on both sides: equals Es
    HyperSet full = hyper_interpretations(t, sig, masks_of(sig, all, all));
    CHECK(full.interpretations.members ==
          equivalence_interpretations(t, sig).members);

    // full positive, empty negative: equals Eu
    HyperSet pos = hyper_interpretations(t, sig, masks_of(sig, all, {}));
    CHECK(pos.interpretations.members ==
          characteristic_set(t, sig, EquivNotion::Uniform,
                             CharFamily::EquivalenceInterpretations)
              .members);
  }
}

TEST_CASE("hyper decision on the disjunction pair") {
  Theory t1 = disj1();
  Theory t2 = disj2();
  Signature sig = Signature::unite(t1.signature(), t2.signature());

  CHECK(decide_hyper(t1, t2, sig, masks_of(sig, {"a", "b"}, {})).equivalent);
  Verdict v = decide_hyper(t1, t2, sig, masks_of(sig, {"a", "b"}, {"a", "b"}));
  CHECK(!v.equivalent);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == interp(sig, {}, {"a", "b"}));

  // reflexivity under arbitrary alphabets
  std::mt19937 rng(53);
  CorpusConfig cfg;
  cfg.atoms = 3;
  for (int i = 0; i < 20; ++i) {
    Theory t = random_theory(rng, cfg);
    AlphabetMasks ab{static_cast<AtomMask>(rng() % 8),
                     static_cast<AtomMask>(rng() % 8)};
    CHECK(decide_hyper(t, t, t.signature(), ab).equivalent);
  }
}

TEST_CASE("satisfaction of alphabet-restricted theories is monotone") {
  // models of extended A+-A--theories persist when the here-part grows on
  // A+ and shrinks on A-
  std::mt19937 rng(59);
  std::vector<std::string> plus = {"a", "b"};
  std::vector<std::string> minus = {"c"};
  Signature sig(corpus_atoms(3));
  Alphabets ab;
  ab.a_plus.insert(plus.begin(), plus.end());
  ab.a_minus.insert(minus.begin(), minus.end());
  AlphabetMasks am = AlphabetMasks::from(ab, sig);

  int checked = 0;
  CorpusConfig cfg;
  cfg.atoms = 3;
  for (int iter = 0; iter < 50000 && checked < 1000; ++iter) {
    Theory t = random_theory(rng, cfg).with_signature(sig);
    if (!is_apan_theory(t, ab, true)) continue;
    enumerate_ht(sig, [&](const HTInterpretation& m) {
      if (!ht_sat(m, t)) return;
      ++checked;
      AtomMask xp = m.here & am.a_plus;
      AtomMask xm = m.here & am.a_minus;
      for (AtomMask x : submasks(m.there)) {
        bool grows_plus = (x & xp) == xp;
        bool shrinks_minus = (x & am.a_minus & ~xm) == 0;
        if (grows_plus && shrinks_minus) {
          CHECK(ht_sat(HTInterpretation{x, m.there}, t));
        }
      }
    });
  }
  CHECK(checked >= 1000);
}

TEST_CASE("total models of alphabet-restricted theories persist downward") {
  // (Y,Y) |= t implies (X',Y) |= t whenever X' agrees with Y on A+
  std::mt19937 rng(61);
  Signature sig(corpus_atoms(3));
  Alphabets ab;
  ab.a_plus = {"a"};
  ab.a_minus = {"b", "c"};
  AlphabetMasks am = AlphabetMasks::from(ab, sig);

  int checked = 0;
  CorpusConfig cfg;
  cfg.atoms = 3;
  for (int iter = 0; iter < 50000 && checked < 1000; ++iter) {
    Theory t = random_theory(rng, cfg).with_signature(sig);
    if (!is_apan_theory(t, ab, true)) continue;
    AtomMask full = (AtomMask{1} << sig.size()) - 1;
    for (AtomMask y = 0; y <= full; ++y) {
      if (!ht_sat({y, y}, t)) continue;
      ++checked;
      for (AtomMask x : submasks(y)) {
        if ((x & am.a_plus) == (y & am.a_plus)) {
          CHECK(ht_sat(HTInterpretation{x, y}, t));
        }
      }
    }
  }
  CHECK(checked >= 1000);
}

TEST_CASE("hyper agrees with program contexts over the alphabets") {
  // contexts shaped like program rules with positive heads in A+ and bodies
  // over A- distinguish exactly the hyper-inequivalent pairs (within the
  // enumerated pool and the derived proof contexts)
  std::mt19937 rng(67);
  CorpusConfig cfg;
  cfg.atoms = 3;
  Alphabets ab;
  ab.a_plus = {"a", "b"};
  ab.a_minus = {"b", "c"};
  OracleConfig ocfg;
  for (int i = 0; i < 60; ++i) {
    Theory t1 = random_theory(rng, cfg);
    Theory t2 = i % 3 == 0 ? t1 : random_theory(rng, cfg);
    ValidationResult r = validate_hyper(t1, t2, ab, ocfg);
    CHECK(r.consistent);
  }
}
