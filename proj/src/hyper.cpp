// Copyright (c) 2026 The hteq authors
// SPDX-License-Identifier: MIT

#include "hteq/hyper.hpp"

#include <algorithm>

namespace hteq {

AlphabetMasks AlphabetMasks::from(const Alphabets& ab, const Signature& sig) {
  AlphabetMasks out;
  // Alphabets may mention atoms beyond the joint signature; those cannot
  // influence interpretations over `sig` and are dropped.
  for (const auto& a : ab.a_plus) {
    if (sig.contains(a)) out.a_plus |= atom_bit(sig, a);
  }
  for (const auto& a : ab.a_minus) {
    if (sig.contains(a)) out.a_minus |= atom_bit(sig, a);
  }
  return out;
}

bool is_aplus_total(AtomMask there, const InterpretationSet& es,
                    const AlphabetMasks& ab) {
  return is_closed(HTInterpretation{there & ab.a_plus, there}, es);
}

bool is_aplus_closed(const HTInterpretation& m, const InterpretationSet& es,
                     const AlphabetMasks& ab) {
  AtomMask xp = m.here & ab.a_plus;
  AtomMask xm = m.here & ab.a_minus;
  for (AtomMask x : submasks(m.there)) {
    if ((x & ab.a_plus & xp) != xp) continue;       // X|A+ must grow or stay
    if ((x & ab.a_minus & ~xm) != 0) continue;      // X|A- must shrink or stay
    if (!es.contains({x, m.there})) return false;
  }
  return true;
}

HyperSet hyper_interpretations(const Theory& t, const Signature& sig,
                               const AlphabetMasks& ab, const Limits& limits) {
  HyperSet out;
  out.alphabets = ab;
  out.interpretations.tag = SetTag::Hyper;
  InterpretationSet es = equivalence_interpretations(t, sig, limits);

  AtomMask full = sig.size() == 0 ? 0 : ((AtomMask{1} << sig.size()) - 1);
  AtomMask joint = ab.joint();
  for (AtomMask y = 0;; ++y) {
    if (is_aplus_total(y, es, ab)) {
      // Collect the restrictions X'|_{A+ u A-} of the A+-closed (X',Y).
      for (AtomMask x : submasks(y)) {
        if (is_aplus_closed({x, y}, es, ab)) {
          out.interpretations.insert({x & joint, y});
        }
      }
    }
    if (y == full) break;
  }
  return out;
}

Verdict decide_hyper(const Theory& t1, const Theory& t2, const Signature& sig,
                     const AlphabetMasks& ab, const Limits& limits) {
  HyperSet h1 = hyper_interpretations(t1, sig, ab, limits);
  HyperSet h2 = hyper_interpretations(t2, sig, ab, limits);
  Verdict v;
  if (h1.interpretations == h2.interpretations) {
    v.equivalent = true;
    return v;
  }
  const auto& m1 = h1.interpretations.members;
  const auto& m2 = h2.interpretations.members;
  std::size_t i = 0, j = 0;
  while (i < m1.size() || j < m2.size()) {
    if (j == m2.size() || (i < m1.size() && m1[i] < m2[j])) {
      v.witness = m1[i];
      v.witness_side = 1;
      return v;
    }
    if (i == m1.size() || m2[j] < m1[i]) {
      v.witness = m2[j];
      v.witness_side = 2;
      return v;
    }
    ++i;
    ++j;
  }
  return v;
}

}  // namespace hteq
