// Copyright (c) 2026 The hteq authors
// SPDX-License-Identifier: MIT

#ifndef HTEQ_HT_HPP
#define HTEQ_HT_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hteq/syntax.hpp"

namespace hteq {

/// Interpretations are bit masks over a signature's canonical atom order:
/// bit i set <=> atom(i) true.
using AtomMask = std::uint32_t;

/// Raised when an enumeration would exceed the configured signature bound.
class BoundError : public std::runtime_error {
 public:
  BoundError(std::size_t atoms, std::size_t limit)
      : std::runtime_error("signature of " + std::to_string(atoms) +
                           " atoms exceeds the enumeration bound of " +
                           std::to_string(limit) +
                           " (raise --max-atoms to override)") {}
};

struct Limits {
  std::size_t max_atoms = 16;
  void check(std::size_t atoms) const {
    if (atoms > max_atoms) throw BoundError(atoms, max_atoms);
  }
};

/// A here/there pair (X,Y) with X subset of Y, relative to a signature held
/// externally. Canonical order: by there-mask, then by here-mask.
struct HTInterpretation {
  AtomMask here = 0;
  AtomMask there = 0;

  bool total() const { return here == there; }
  auto operator<=>(const HTInterpretation& o) const {
    if (there != o.there) return there <=> o.there;
    return here <=> o.here;
  }
  bool operator==(const HTInterpretation& o) const = default;
};

/// Which characteristic set a set of interpretations represents.
enum class SetTag { Plain, Cc, Ca, Cs, Cu, Ec, Ea, Es, Eu, Hyper };

/// A canonically ordered, duplicate-free set of HT-interpretations over one
/// signature.
struct InterpretationSet {
  std::vector<HTInterpretation> members;  // sorted ascending
  SetTag tag = SetTag::Plain;

  bool contains(const HTInterpretation& m) const;
  void insert(HTInterpretation m);  // keeps order, ignores duplicates

  bool operator==(const InterpretationSet& o) const {
    return members == o.members;
  }
};

AtomMask atom_bit(const Signature& sig, const std::string& name);
AtomMask mask_of(const Signature& sig, const std::vector<std::string>& atoms);
std::string mask_to_string(AtomMask m, const Signature& sig);
std::string to_string(const HTInterpretation& m, const Signature& sig);
std::vector<std::string> mask_atoms(AtomMask m, const Signature& sig);

/// Classical truth-functional satisfaction by the atom set `world`.
bool classical_sat(AtomMask world, const Formula::Ref& f, const Signature& sig);
bool classical_sat(AtomMask world, const Theory& t);

/// Here-and-there satisfaction: an implication holds at (X,Y) iff it holds
/// classically at Y and its here-check passes.
bool ht_sat(const HTInterpretation& m, const Formula::Ref& f,
            const Signature& sig);
bool ht_sat(const HTInterpretation& m, const Theory& t);

/// Calls `fn` for every (X,Y) with X subset of Y, Y ascending and X ascending
/// within each Y; 3^|L| interpretations in total.
void enumerate_ht(const Signature& sig,
                  const std::function<void(const HTInterpretation&)>& fn,
                  const Limits& limits = {});

/// All submasks of `super` in ascending order (including 0 and super).
std::vector<AtomMask> submasks(AtomMask super);

InterpretationSet ht_models(const Theory& t, const Signature& sig,
                            const Limits& limits = {});
/// The HT-countermodels C_s.
InterpretationSet countermodels(const Theory& t, const Signature& sig,
                                const Limits& limits = {});

/// Rules with positive heads and bodies only (the shape of a reduct).
struct PositiveRule {
  AtomMask head = 0;
  AtomMask body = 0;
};
using PositiveProgram = std::vector<PositiveRule>;

bool satisfies(AtomMask world, const PositiveProgram& p);

/// The reduct of `p` w.r.t. the atom set `interp`: keeps a rule iff its
/// negative head is contained in `interp` and its negative body misses it.
PositiveProgram reduct(const Program& p, AtomMask interp, const Signature& sig);

/// Answer sets: I satisfying reduct(p, I) with no proper subset doing so.
std::vector<AtomMask> answer_sets_program(const Program& p,
                                          const Signature& sig,
                                          const Limits& limits = {});

/// Total HT-models (Y,Y) whose proper here-parts are all countermodels.
InterpretationSet equilibrium_models(const Theory& t, const Signature& sig,
                                     const Limits& limits = {});

}  // namespace hteq

#endif  // HTEQ_HT_HPP
