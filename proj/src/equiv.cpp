// Copyright (c) 2026 The hteq authors
// SPDX-License-Identifier: MIT

#include "hteq/equiv.hpp"

#include <algorithm>

namespace hteq {

std::string to_string(EquivNotion e) {
  switch (e) {
    case EquivNotion::Classical:
      return "classical";
    case EquivNotion::AnswerSet:
      return "answer-set";
    case EquivNotion::Strong:
      return "strong";
    case EquivNotion::Uniform:
      return "uniform";
  }
  return "?";
}

bool is_total_closed(const HTInterpretation& m, const InterpretationSet& s) {
  if (!m.total()) return false;
  for (AtomMask x : submasks(m.there)) {
    if (!s.contains({x, m.there})) return false;
  }
  return true;
}

bool is_closed(const HTInterpretation& m, const InterpretationSet& s) {
  for (AtomMask x : submasks(m.there)) {
    if ((x & m.here) == m.here && !s.contains({x, m.there})) return false;
  }
  return true;
}

bool is_there_closed(const HTInterpretation& m, const InterpretationSet& s) {
  if (s.contains({m.there, m.there})) return false;
  for (AtomMask x : submasks(m.there)) {
    if (x == m.there) continue;
    if ((x & m.here) == m.here && !s.contains({x, m.there})) return false;
  }
  return true;
}

InterpretationSet equivalence_interpretations(const Theory& t,
                                              const Signature& sig,
                                              const Limits& limits) {
  InterpretationSet out;
  out.tag = SetTag::Es;
  Theory over = t.with_signature(sig);
  enumerate_ht(
      sig,
      [&](const HTInterpretation& m) {
        bool sat = ht_sat(m, over);
        if (m.total()) {
          if (sat) out.members.push_back(m);
        } else if (!sat && classical_sat(m.there, over)) {
          out.members.push_back(m);
        }
      },
      limits);
  return out;
}

InterpretationSet characteristic_set(const Theory& t, const Signature& sig,
                                     EquivNotion e, CharFamily family,
                                     const Limits& limits) {
  if (family == CharFamily::Countermodels) {
    InterpretationSet cs = countermodels(t, sig, limits);
    InterpretationSet out;
    switch (e) {
      case EquivNotion::Strong:
        return cs;
      case EquivNotion::Classical:
        out.tag = SetTag::Cc;
        for (const auto& m : cs.members) {
          if (m.total()) out.members.push_back(m);
        }
        return out;
      case EquivNotion::AnswerSet: {
        out.tag = SetTag::Ca;
        // (0,Y) there-closed wrt C_s iff Y is an answer set; note that for
        // Y = 0 the pair qualifies without being a countermodel itself.
        limits.check(sig.size());
        AtomMask full =
            sig.size() == 0 ? 0 : ((AtomMask{1} << sig.size()) - 1);
        for (AtomMask y = 0;; ++y) {
          if (is_there_closed({0, y}, cs)) out.members.push_back({0, y});
          if (y == full) break;
        }
        return out;
      }
      case EquivNotion::Uniform:
        out.tag = SetTag::Cu;
        // There-closed interpretations in C_s; total HT-models qualify
        // vacuously.
        enumerate_ht(
            sig,
            [&](const HTInterpretation& m) {
              if (is_there_closed(m, cs)) out.members.push_back(m);
            },
            limits);
        return out;
    }
  }
  InterpretationSet es = equivalence_interpretations(t, sig, limits);
  InterpretationSet out;
  switch (e) {
    case EquivNotion::Strong:
      return es;
    case EquivNotion::Classical:
      out.tag = SetTag::Ec;
      for (const auto& m : es.members) {
        if (m.total()) out.members.push_back(m);
      }
      return out;
    case EquivNotion::AnswerSet:
      out.tag = SetTag::Ea;
      for (const auto& m : es.members) {
        if (is_total_closed(m, es)) out.members.push_back(m);
      }
      return out;
    case EquivNotion::Uniform:
      out.tag = SetTag::Eu;
      for (const auto& m : es.members) {
        if (is_closed(m, es)) out.members.push_back(m);
      }
      return out;
  }
  return out;
}

namespace {

Verdict compare_sets(const InterpretationSet& s1, const InterpretationSet& s2) {
  Verdict v;
  if (s1 == s2) {
    v.equivalent = true;
    return v;
  }
  // Least element of the symmetric difference; both sides are sorted.
  std::size_t i = 0, j = 0;
  while (i < s1.members.size() || j < s2.members.size()) {
    if (j == s2.members.size() ||
        (i < s1.members.size() && s1.members[i] < s2.members[j])) {
      v.witness = s1.members[i];
      v.witness_side = 1;
      return v;
    }
    if (i == s1.members.size() || s2.members[j] < s1.members[i]) {
      v.witness = s2.members[j];
      v.witness_side = 2;
      return v;
    }
    ++i;
    ++j;
  }
  return v;  // unreachable when sets differ
}

}  // namespace

Verdict decide_equivalence(const Theory& t1, const Theory& t2,
                           const Signature& sig, EquivNotion e,
                           const Limits& limits) {
  Verdict v = compare_sets(
      characteristic_set(t1, sig, e, CharFamily::EquivalenceInterpretations,
                         limits),
      characteristic_set(t2, sig, e, CharFamily::EquivalenceInterpretations,
                         limits));
  Verdict c = compare_sets(
      characteristic_set(t1, sig, e, CharFamily::Countermodels, limits),
      characteristic_set(t2, sig, e, CharFamily::Countermodels, limits));
  if (v.equivalent != c.equivalent) {
    throw std::logic_error(
        "characteristic-set families disagree on " + to_string(e) +
        " equivalence; this indicates an implementation bug");
  }
  return v;
}

Theory tau_epsilon(const Signature& sig) {
  std::vector<Formula::Ref> fs;
  for (const auto& a : sig.atoms()) {
    Formula::Ref at = Formula::atom(a);
    fs.push_back(Formula::impl(Formula::neg(Formula::neg(at)), at));
  }
  return Theory(std::move(fs), sig);
}

Theory gamma_phi(const Theory& t, const Formula::Ref& phi,
                 const Signature& sig) {
  bool member = std::any_of(
      t.formulas().begin(), t.formulas().end(),
      [&](const Formula::Ref& f) { return struct_equal(f, phi); });
  if (!member) throw std::invalid_argument("gamma_phi: phi not in theory");
  std::vector<Formula::Ref> fs;
  for (const auto& psi : t.formulas()) {
    fs.push_back(Formula::neg(Formula::neg(psi)));
  }
  for (const auto& a : sig.atoms()) {
    Formula::Ref at = Formula::atom(a);
    fs.push_back(
        Formula::impl(phi, Formula::impl(Formula::neg(Formula::neg(at)), at)));
  }
  return Theory(std::move(fs), sig);
}

bool membership_via_gamma(const HTInterpretation& m, const Theory& t,
                          const Signature& sig) {
  return std::any_of(t.formulas().begin(), t.formulas().end(),
                     [&](const Formula::Ref& phi) {
                       return ht_sat(m, gamma_phi(t, phi, sig));
                     });
}

Formula::Ref dual_theory(const Theory& t, const Signature& sig) {
  std::vector<Formula::Ref> disjuncts;
  for (const auto& phi : t.formulas()) {
    // Conjuncts in presentation order: the --psi block first, then the
    // totality enforcers phi -> (--a -> a).
    std::vector<Formula::Ref> conjuncts;
    for (const auto& psi : t.formulas()) {
      conjuncts.push_back(Formula::neg(Formula::neg(psi)));
    }
    for (const auto& a : sig.atoms()) {
      Formula::Ref at = Formula::atom(a);
      conjuncts.push_back(Formula::impl(
          phi, Formula::impl(Formula::neg(Formula::neg(at)), at)));
    }
    disjuncts.push_back(Formula::conj_all(conjuncts));
  }
  return Formula::disj_all(disjuncts);
}

HTInterpretation restrict(const HTInterpretation& m, const Signature& from,
                          const Signature& to) {
  if (!to.subset_of(from)) {
    throw std::invalid_argument("restrict: target is not a sub-signature");
  }
  HTInterpretation out;
  for (std::size_t i = 0; i < to.size(); ++i) {
    AtomMask src = AtomMask{1} << from.index(to.atom(i));
    AtomMask dst = AtomMask{1} << i;
    if (m.here & src) out.here |= dst;
    if (m.there & src) out.there |= dst;
  }
  return out;
}

bool is_totality_preserving(const HTInterpretation& m, const Signature& from,
                            const Signature& to) {
  if (m.total()) return true;
  return !restrict(m, from, to).total();
}

}  // namespace hteq
