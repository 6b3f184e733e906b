// Copyright (c) 2026 The hteq authors
// SPDX-License-Identifier: MIT

#ifndef HTEQ_SYNTAX_HPP
#define HTEQ_SYNTAX_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace hteq {

/// Parse failure with source position (1-based).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, int line, int col)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// ---------------------------------------------------------------------------
// Signature

/// A finite, totally ordered set of atom names. The order is fixed at
/// construction (lexicographic) and is the canonical order used everywhere:
/// bit i of an interpretation mask refers to atom(i).
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<std::string> atoms);

  static Signature unite(const Signature& a, const Signature& b);

  std::size_t size() const { return atoms_.size(); }
  const std::string& atom(std::size_t i) const { return atoms_.at(i); }
  const std::vector<std::string>& atoms() const { return atoms_; }

  bool contains(const std::string& name) const {
    return index_.count(name) != 0;
  }
  /// Index of an atom in canonical order; throws if absent.
  std::size_t index(const std::string& name) const;

  bool operator==(const Signature& o) const { return atoms_ == o.atoms_; }
  bool operator!=(const Signature& o) const { return !(*this == o); }

  /// True iff every atom of this signature occurs in `super`.
  bool subset_of(const Signature& super) const;

 private:
  std::vector<std::string> atoms_;
  std::unordered_map<std::string, std::size_t> index_;
};

// ---------------------------------------------------------------------------
// Formulas

/// Propositional formula over atoms, falsity, conjunction, disjunction and
/// implication. Negation, truth and equivalence are sugar:
///   -p        == Impl(p, Bottom)
///   #t        == Impl(Bottom, Bottom)
///   p <-> q   == And(Impl(p,q), Impl(q,p))
/// Nodes are immutable and shared.
class Formula {
 public:
  enum class Kind { Bottom, Atom, And, Or, Impl };
  using Ref = std::shared_ptr<const Formula>;

  static Ref bottom();
  static Ref atom(std::string name);
  static Ref conj(Ref l, Ref r);
  static Ref disj(Ref l, Ref r);
  static Ref impl(Ref l, Ref r);
  static Ref neg(Ref f) { return impl(std::move(f), bottom()); }
  static Ref top() { return impl(bottom(), bottom()); }

  /// Conjunction of a list; empty list yields #t.
  static Ref conj_all(const std::vector<Ref>& fs);
  /// Disjunction of a list; empty list yields #f.
  static Ref disj_all(const std::vector<Ref>& fs);

  Kind kind() const { return kind_; }
  const std::string& atom_name() const { return name_; }
  const Ref& left() const { return left_; }
  const Ref& right() const { return right_; }

  /// Total structural order; 0 on equality.
  static int compare(const Formula& a, const Formula& b);

  /// Collects all atom names occurring in the formula.
  void collect_atoms(std::set<std::string>& out) const;

 private:
  Formula(Kind k, std::string name, Ref l, Ref r)
      : kind_(k), name_(std::move(name)), left_(std::move(l)),
        right_(std::move(r)) {}

  Kind kind_;
  std::string name_;  // Atom only
  Ref left_, right_;  // And/Or/Impl only
};

bool struct_equal(const Formula::Ref& a, const Formula::Ref& b);
bool struct_less(const Formula::Ref& a, const Formula::Ref& b);

/// Prints a formula in the theory grammar. Sugar is folded back: Impl(f,#f)
/// prints as -f and Impl(#f,#f) as #t. Implication operands of any binary
/// connective are parenthesized, so output re-parses to the identical tree.
std::string to_string(const Formula::Ref& f);

// ---------------------------------------------------------------------------
// Theories

/// A finite set of formulas together with a covering signature.
class Theory {
 public:
  Theory() = default;
  Theory(std::vector<Formula::Ref> formulas, Signature signature);

  /// Signature = exactly the atoms occurring in `formulas`.
  static Theory over_own_atoms(std::vector<Formula::Ref> formulas);

  const std::vector<Formula::Ref>& formulas() const { return formulas_; }
  const Signature& signature() const { return signature_; }
  std::size_t size() const { return formulas_.size(); }

  /// Same formulas, wider signature (must cover the current one).
  Theory with_signature(Signature wider) const;

  static Theory unite(const Theory& a, const Theory& b);

 private:
  std::vector<Formula::Ref> formulas_;  // sorted, deduplicated
  Signature signature_;
};

std::string to_string(const Theory& t);

// ---------------------------------------------------------------------------
// Programs

/// Disjunctive rule
///   a1 | ... | ak | not a(k+1) | ... | not al :- b1, ..., bm, not ..., not bn
/// with l + n > 0.
struct Rule {
  std::vector<std::string> head_pos, head_neg, body_pos, body_neg;  // sorted

  bool operator==(const Rule& o) const = default;
  bool operator<(const Rule& o) const;
};

class Program {
 public:
  Program() = default;
  Program(std::vector<Rule> rules, Signature signature);
  static Program over_own_atoms(std::vector<Rule> rules);

  const std::vector<Rule>& rules() const { return rules_; }
  const Signature& signature() const { return signature_; }

  Program with_signature(Signature wider) const;

 private:
  std::vector<Rule> rules_;  // sorted, deduplicated
  Signature signature_;
};

std::string to_string(const Rule& r);
std::string to_string(const Program& p);

// ---------------------------------------------------------------------------
// Parsing

/// Theory grammar: statements end with '.'; operators '-', '&', '|', '->',
/// '<->' with that precedence ('-' tightest, '->' right-associative);
/// constants '#f', '#t'; identifiers [a-z][A-Za-z0-9_]*; '%' line comments.
Theory parse_theory(const std::string& text);

/// Program grammar: `H1 | ... | not Hk :- B1, ..., not Bn.`; '%' comments.
Program parse_program(const std::string& text);

// ---------------------------------------------------------------------------
// Syntactic analyses

/// Translates a rule to the implication body -> head, with the empty
/// conjunction read as #t and the empty disjunction as #f.
Formula::Ref rule_to_formula(const Rule& r);

/// Translates every rule; the signature is preserved.
Theory program_to_theory(const Program& p);

/// True iff every implication in f has consequent Bottom, i.e. f is built
/// from conjunction, disjunction, falsity and negation only.
bool is_factual(const Formula::Ref& f);
bool is_factual(const Theory& t);

struct Polarity {
  bool may_occur_positive = false;
  bool may_occur_negative = false;
};

/// Per-atom occurrence polarities. An occurrence is negative when it lies
/// inside the antecedent of some implication on its root path; it is positive
/// when the path crosses no antecedent edge, when it lies inside the
/// consequent of some implication, or when some implication on the path has
/// an implication-shaped antecedent (f1 -> f2) -> f3 with the occurrence
/// inside f1. Atoms absent from the formula are absent from the report.
using PolarityReport = std::map<std::string, Polarity>;

PolarityReport atom_polarities(const Formula::Ref& f);

/// Alphabets restricting positive / negative occurrences in contexts.
struct Alphabets {
  std::set<std::string> a_plus;
  std::set<std::string> a_minus;
};

/// True iff every formula of t has positive occurrences only in ab.a_plus and
/// negative occurrences only in ab.a_minus, or -- when `extended` -- is
/// factual with all its atoms in ab.a_plus.
bool is_apan_theory(const Theory& t, const Alphabets& ab, bool extended);

}  // namespace hteq

#endif  // HTEQ_SYNTAX_HPP
