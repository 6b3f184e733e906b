// Copyright (c) 2026 The hteq authors
// SPDX-License-Identifier: MIT

#include "hteq/ht.hpp"

#include <algorithm>

namespace hteq {

bool InterpretationSet::contains(const HTInterpretation& m) const {
  return std::binary_search(members.begin(), members.end(), m);
}

void InterpretationSet::insert(HTInterpretation m) {
  auto it = std::lower_bound(members.begin(), members.end(), m);
  if (it == members.end() || *it != m) members.insert(it, m);
}

AtomMask atom_bit(const Signature& sig, const std::string& name) {
  return AtomMask{1} << sig.index(name);
}

AtomMask mask_of(const Signature& sig, const std::vector<std::string>& atoms) {
  AtomMask m = 0;
  for (const auto& a : atoms) m |= atom_bit(sig, a);
  return m;
}

std::vector<std::string> mask_atoms(AtomMask m, const Signature& sig) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (m & (AtomMask{1} << i)) out.push_back(sig.atom(i));
  }
  return out;
}

std::string mask_to_string(AtomMask m, const Signature& sig) {
  std::string out = "{";
  bool first = true;
  for (const auto& a : mask_atoms(m, sig)) {
    if (!first) out += ",";
    out += a;
    first = false;
  }
  return out + "}";
}

std::string to_string(const HTInterpretation& m, const Signature& sig) {
  return "(" + mask_to_string(m.here, sig) + "," +
         mask_to_string(m.there, sig) + ")";
}

// ---------------------------------------------------------------------------
// Satisfaction

namespace {

struct Truth {
  bool here;
  bool there;
};

// One pass computing satisfaction at both worlds. The there-component equals
// classical satisfaction by Y; an implication needs the there-check at both
// worlds.
Truth eval(const HTInterpretation& m, const Formula& f, const Signature& sig) {
  switch (f.kind()) {
    case Formula::Kind::Bottom:
      return {false, false};
    case Formula::Kind::Atom: {
      AtomMask bit = AtomMask{1} << sig.index(f.atom_name());
      return {(m.here & bit) != 0, (m.there & bit) != 0};
    }
    case Formula::Kind::And: {
      Truth l = eval(m, *f.left(), sig);
      Truth r = eval(m, *f.right(), sig);
      return {l.here && r.here, l.there && r.there};
    }
    case Formula::Kind::Or: {
      Truth l = eval(m, *f.left(), sig);
      Truth r = eval(m, *f.right(), sig);
      return {l.here || r.here, l.there || r.there};
    }
    case Formula::Kind::Impl: {
      Truth l = eval(m, *f.left(), sig);
      Truth r = eval(m, *f.right(), sig);
      bool there = !l.there || r.there;
      bool here = (!l.here || r.here) && there;
      return {here, there};
    }
  }
  return {false, false};
}

}  // namespace

bool classical_sat(AtomMask world, const Formula::Ref& f,
                   const Signature& sig) {
  return eval(HTInterpretation{world, world}, *f, sig).there;
}

bool classical_sat(AtomMask world, const Theory& t) {
  return std::all_of(
      t.formulas().begin(), t.formulas().end(),
      [&](const Formula::Ref& f) {
        return classical_sat(world, f, t.signature());
      });
}

bool ht_sat(const HTInterpretation& m, const Formula::Ref& f,
            const Signature& sig) {
  return eval(m, *f, sig).here;
}

bool ht_sat(const HTInterpretation& m, const Theory& t) {
  return std::all_of(
      t.formulas().begin(), t.formulas().end(),
      [&](const Formula::Ref& f) { return ht_sat(m, f, t.signature()); });
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<AtomMask> submasks(AtomMask super) {
  std::vector<AtomMask> out;
  AtomMask x = 0;
  for (;;) {
    out.push_back(x);
    if (x == super) break;
    x = (x - super) & super;  // next submask in ascending order
  }
  return out;
}

void enumerate_ht(const Signature& sig,
                  const std::function<void(const HTInterpretation&)>& fn,
                  const Limits& limits) {
  limits.check(sig.size());
  AtomMask full =
      sig.size() == 0 ? 0 : ((AtomMask{1} << sig.size()) - 1);
  for (AtomMask there = 0;; ++there) {
    AtomMask x = 0;
    for (;;) {
      fn(HTInterpretation{x, there});
      if (x == there) break;
      x = (x - there) & there;
    }
    if (there == full) break;
  }
}

InterpretationSet ht_models(const Theory& t, const Signature& sig,
                            const Limits& limits) {
  InterpretationSet out;
  Theory over = t.with_signature(sig);
  enumerate_ht(
      sig,
      [&](const HTInterpretation& m) {
        if (ht_sat(m, over)) out.members.push_back(m);
      },
      limits);
  return out;
}

InterpretationSet countermodels(const Theory& t, const Signature& sig,
                                const Limits& limits) {
  InterpretationSet out;
  out.tag = SetTag::Cs;
  Theory over = t.with_signature(sig);
  enumerate_ht(
      sig,
      [&](const HTInterpretation& m) {
        if (!ht_sat(m, over)) out.members.push_back(m);
      },
      limits);
  return out;
}

// ---------------------------------------------------------------------------
// Programs

bool satisfies(AtomMask world, const PositiveProgram& p) {
  return std::all_of(p.begin(), p.end(), [&](const PositiveRule& r) {
    bool body = (world & r.body) == r.body;
    bool head = (world & r.head) != 0;
    return !body || head;
  });
}

PositiveProgram reduct(const Program& p, AtomMask interp,
                       const Signature& sig) {
  PositiveProgram out;
  for (const Rule& r : p.rules()) {
    AtomMask hn = mask_of(sig, r.head_neg);
    AtomMask bn = mask_of(sig, r.body_neg);
    if ((hn & interp) != hn) continue;  // head_neg must be inside interp
    if ((bn & interp) != 0) continue;   // body_neg must miss interp
    out.push_back({mask_of(sig, r.head_pos), mask_of(sig, r.body_pos)});
  }
  return out;
}

std::vector<AtomMask> answer_sets_program(const Program& p,
                                          const Signature& sig,
                                          const Limits& limits) {
  limits.check(sig.size());
  AtomMask full = sig.size() == 0 ? 0 : ((AtomMask{1} << sig.size()) - 1);
  std::vector<AtomMask> out;
  for (AtomMask i = 0;; ++i) {
    PositiveProgram red = reduct(p, i, sig);
    if (satisfies(i, red)) {
      bool minimal = true;
      for (AtomMask j : submasks(i)) {
        if (j != i && satisfies(j, red)) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.push_back(i);
    }
    if (i == full) break;
  }
  return out;
}

InterpretationSet equilibrium_models(const Theory& t, const Signature& sig,
                                     const Limits& limits) {
  limits.check(sig.size());
  InterpretationSet out;
  out.tag = SetTag::Ea;
  Theory over = t.with_signature(sig);
  AtomMask full = sig.size() == 0 ? 0 : ((AtomMask{1} << sig.size()) - 1);
  for (AtomMask y = 0;; ++y) {
    if (ht_sat({y, y}, over)) {
      bool blocked = false;
      for (AtomMask x : submasks(y)) {
        if (x != y && ht_sat({x, y}, over)) {
          blocked = true;
          break;
        }
      }
      if (!blocked) out.members.push_back({y, y});
    }
    if (y == full) break;
  }
  return out;
}

}  // namespace hteq
