// Copyright (c) 2026 The hteq authors
// SPDX-License-Identifier: MIT

#ifndef HTEQ_NONGROUND_HPP
#define HTEQ_NONGROUND_HPP

#include <optional>

#include "hteq/equiv.hpp"
#include "hteq/ht.hpp"
#include "hteq/syntax.hpp"

namespace hteq {

/// Function-free term: a constant (lowercase-initial) or a variable
/// (uppercase-initial).
struct Term {
  bool is_var = false;
  std::string name;

  auto operator<=>(const Term&) const = default;
};

struct NGAtom {
  std::string pred;
  std::vector<Term> args;

  auto operator<=>(const NGAtom&) const = default;
};

struct NGRule {
  std::vector<NGAtom> head_pos, head_neg, body_pos, body_neg;

  bool operator==(const NGRule&) const = default;
};

/// A finite function-free program with a consistent arity per predicate.
class NGProgram {
 public:
  NGProgram() = default;
  explicit NGProgram(std::vector<NGRule> rules);  // throws on arity clashes

  const std::vector<NGRule>& rules() const { return rules_; }
  /// Predicate name -> arity, over all rules.
  const std::map<std::string, std::size_t>& predicates() const {
    return preds_;
  }
  /// Constants occurring in the rules, sorted.
  const std::vector<std::string>& constants() const { return consts_; }

  static NGProgram unite(const NGProgram& a, const NGProgram& b);

 private:
  std::vector<NGRule> rules_;
  std::map<std::string, std::size_t> preds_;
  std::vector<std::string> consts_;
};

std::string to_string(const Term& t);
std::string to_string(const NGAtom& a);
std::string to_string(const NGRule& r);
std::string to_string(const NGProgram& p);

/// Program grammar with first-order atoms p(X,a). Equality and function
/// terms are rejected here: both are out of scope.
NGProgram parse_ng_program(const std::string& text);

/// Safety: every variable of the head and the negative body occurs in the
/// positive body.
bool is_safe(const NGRule& r);
bool is_safe(const NGProgram& p);

/// Constants of the program; {"c"} when it has none.
std::vector<std::string> herbrand_universe(const NGProgram& p);

/// Instantiates every rule with every substitution of universe constants for
/// its variables. Ground atoms are named p(c1,...,cn); the signature covers
/// exactly the atoms occurring in the result.
Program ground(const NGProgram& p, const std::vector<std::string>& universe,
               const Limits& limits = {});

/// All ground atoms over the given predicates and universe, as a signature.
Signature ground_base(const std::map<std::string, std::size_t>& preds,
                      const std::vector<std::string>& universe,
                      const Limits& limits = {});

/// Answer sets of the grounding over the Herbrand universe, as sorted
/// ground-atom name sets.
std::vector<std::vector<std::string>> ordinary_answer_sets(
    const NGProgram& p, const Limits& limits = {});

struct OpenAnswerSet {
  std::vector<std::string> universe;
  std::vector<std::string> atoms;

  bool operator==(const OpenAnswerSet&) const = default;
};

/// Answer sets of the groundings over the Herbrand universe extended by
/// 0..k fresh constants u1, u2, ...
std::vector<OpenAnswerSet> open_answer_sets(const NGProgram& p, std::size_t k,
                                            const Limits& limits = {});

/// Compares (i) total and (ii) maximal non-total HT-models of two ground
/// programs over a common signature; the witness is the least element of the
/// symmetric difference.
Verdict compare_uniform_models(const Theory& t1, const Theory& t2,
                               const Signature& sig,
                               const Limits& limits = {});

struct NGVerdict {
  bool equivalent = false;
  /// On failure: the universe, signature and interpretation that distinguish.
  std::vector<std::string> universe;
  Signature sig;
  std::optional<HTInterpretation> witness;
  int witness_side = 0;
  std::size_t universes_checked = 0;  // k+1 when equivalent
};

/// Uniform equivalence of finite non-ground programs under ordinary
/// answer-set semantics, decided over the Herbrand universe of both programs
/// extended by up to k fresh constants. "Not equivalent" is definite;
/// "equivalent" is relative to the searched universes.
NGVerdict decide_uniform_nonground(const NGProgram& p1, const NGProgram& p2,
                                   std::size_t k = 2,
                                   const Limits& limits = {});

}  // namespace hteq

#endif  // HTEQ_NONGROUND_HPP
