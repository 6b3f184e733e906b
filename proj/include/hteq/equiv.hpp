// Copyright (c) 2026 The hteq authors
// SPDX-License-Identifier: MIT

#ifndef HTEQ_EQUIV_HPP
#define HTEQ_EQUIV_HPP

#include <optional>

#include "hteq/ht.hpp"
#include "hteq/syntax.hpp"

namespace hteq {

enum class EquivNotion { Classical, AnswerSet, Strong, Uniform };

enum class CharFamily { Countermodels, EquivalenceInterpretations };

std::string to_string(EquivNotion e);

/// Outcome of an equivalence decision. The witness, present iff not
/// equivalent, is the least element (canonical order) of the symmetric
/// difference of the two characteristic sets; witness_side tells which
/// input's characteristic set contains it.
struct Verdict {
  bool equivalent = false;
  std::optional<HTInterpretation> witness;
  int witness_side = 0;  // 1 or 2 when witness is present
};

// Closure conditions over the here-component lattice of a fixed there-set.
// `S` must be an interpretation set over `sig`.
bool is_total_closed(const HTInterpretation& m, const InterpretationSet& s);
bool is_closed(const HTInterpretation& m, const InterpretationSet& s);
bool is_there_closed(const HTInterpretation& m, const InterpretationSet& s);

/// E_s: total HT-models plus here-countermodels (countermodels whose
/// there-part classically satisfies the theory).
InterpretationSet equivalence_interpretations(const Theory& t,
                                              const Signature& sig,
                                              const Limits& limits = {});

/// The characteristic set for a notion, in either the countermodel family
/// (C_c, C_a, C_s, C_u) or the equivalence-interpretation family
/// (E_c, E_a, E_s, E_u).
InterpretationSet characteristic_set(const Theory& t, const Signature& sig,
                                     EquivNotion e, CharFamily family,
                                     const Limits& limits = {});

/// Decides equivalence by comparing E-family characteristic sets over `sig`
/// (the joint signature); the C-family comparison is computed as an internal
/// cross-check and a disagreement throws.
Verdict decide_equivalence(const Theory& t1, const Theory& t2,
                           const Signature& sig, EquivNotion e,
                           const Limits& limits = {});

/// { --a -> a : a in L }; satisfied by (X,Y) iff X = Y.
Theory tau_epsilon(const Signature& sig);

/// Gamma_phi = { --psi : psi in Gamma } u { phi -> (--a -> a) : a in L }.
Theory gamma_phi(const Theory& t, const Formula::Ref& phi,
                 const Signature& sig);

/// True iff m satisfies gamma_phi(t, phi) for some phi in t; equals
/// membership in E_s(t).
bool membership_via_gamma(const HTInterpretation& m, const Theory& t,
                          const Signature& sig);

/// The disjunction over phi in t of the conjunction of gamma_phi(t, phi);
/// #f for the empty theory.
Formula::Ref dual_theory(const Theory& t, const Signature& sig);

/// Componentwise restriction of an interpretation over `from` to the
/// sub-signature `to`.
HTInterpretation restrict(const HTInterpretation& m, const Signature& from,
                          const Signature& to);

/// True iff m is total or its restriction stays strictly non-total.
bool is_totality_preserving(const HTInterpretation& m, const Signature& from,
                            const Signature& to);

}  // namespace hteq

#endif  // HTEQ_EQUIV_HPP
