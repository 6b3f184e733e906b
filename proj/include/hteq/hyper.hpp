// Copyright (c) 2026 The hteq authors
// SPDX-License-Identifier: MIT

#ifndef HTEQ_HYPER_HPP
#define HTEQ_HYPER_HPP

#include "hteq/equiv.hpp"

namespace hteq {

/// Alphabets resolved against a signature as bit masks.
struct AlphabetMasks {
  AtomMask a_plus = 0;
  AtomMask a_minus = 0;

  static AlphabetMasks from(const Alphabets& ab, const Signature& sig);
  AtomMask joint() const { return a_plus | a_minus; }
};

/// The hyperequivalence interpretation set E^{A+}_{A-}. Members store the
/// restricted here-component X = X'|_{A+ u A-}; equality of hyper sets is set
/// equality of these pairs.
struct HyperSet {
  InterpretationSet interpretations;  // tag Hyper
  AlphabetMasks alphabets;
};

/// (Y,Y) is A+-total iff (Y|_{A+}, Y) is closed in E_s.
bool is_aplus_total(AtomMask there, const InterpretationSet& es,
                    const AlphabetMasks& ab);

/// (X,Y) is A+-closed in E_s iff (X',Y) is in E_s for every X' subset of Y
/// with X|_{A+} subset of X'|_{A+} and X'|_{A-} subset of X|_{A-}.
bool is_aplus_closed(const HTInterpretation& m, const InterpretationSet& es,
                     const AlphabetMasks& ab);

HyperSet hyper_interpretations(const Theory& t, const Signature& sig,
                               const AlphabetMasks& ab,
                               const Limits& limits = {});

/// Decides relativized hyperequivalence w.r.t. the alphabets by comparing
/// hyperequivalence interpretation sets over `sig`.
Verdict decide_hyper(const Theory& t1, const Theory& t2, const Signature& sig,
                     const AlphabetMasks& ab, const Limits& limits = {});

}  // namespace hteq

#endif  // HTEQ_HYPER_HPP
