// Copyright (c) 2026 The hteq authors
// SPDX-License-Identifier: MIT

#include "hteq/syntax.hpp"

#include <algorithm>
#include "lexer.hpp"
#include <cctype>
#include <sstream>

namespace hteq {

// ---------------------------------------------------------------------------
// Signature

Signature::Signature(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
  for (std::size_t i = 0; i < atoms_.size(); ++i) index_[atoms_[i]] = i;
}

Signature Signature::unite(const Signature& a, const Signature& b) {
  std::vector<std::string> merged;
  std::set_union(a.atoms_.begin(), a.atoms_.end(), b.atoms_.begin(),
                 b.atoms_.end(), std::back_inserter(merged));
  return Signature(std::move(merged));
}

std::size_t Signature::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) {
    throw std::out_of_range("atom not in signature: " + name);
  }
  return it->second;
}

bool Signature::subset_of(const Signature& super) const {
  return std::all_of(atoms_.begin(), atoms_.end(),
                     [&](const std::string& a) { return super.contains(a); });
}

// ---------------------------------------------------------------------------
// Formula construction

Formula::Ref Formula::bottom() {
  static const Ref instance(new Formula(Kind::Bottom, "", nullptr, nullptr));
  return instance;
}

Formula::Ref Formula::atom(std::string name) {
  return Ref(new Formula(Kind::Atom, std::move(name), nullptr, nullptr));
}

Formula::Ref Formula::conj(Ref l, Ref r) {
  return Ref(new Formula(Kind::And, "", std::move(l), std::move(r)));
}

Formula::Ref Formula::disj(Ref l, Ref r) {
  return Ref(new Formula(Kind::Or, "", std::move(l), std::move(r)));
}

Formula::Ref Formula::impl(Ref l, Ref r) {
  return Ref(new Formula(Kind::Impl, "", std::move(l), std::move(r)));
}

Formula::Ref Formula::conj_all(const std::vector<Ref>& fs) {
  if (fs.empty()) return top();
  Ref acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = conj(acc, fs[i]);
  return acc;
}

Formula::Ref Formula::disj_all(const std::vector<Ref>& fs) {
  if (fs.empty()) return bottom();
  Ref acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = disj(acc, fs[i]);
  return acc;
}

int Formula::compare(const Formula& a, const Formula& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_ ? -1 : 1;
  switch (a.kind_) {
    case Kind::Bottom:
      return 0;
    case Kind::Atom:
      return a.name_.compare(b.name_);
    default: {
      int c = compare(*a.left_, *b.left_);
      if (c != 0) return c;
      return compare(*a.right_, *b.right_);
    }
  }
}

void Formula::collect_atoms(std::set<std::string>& out) const {
  switch (kind_) {
    case Kind::Bottom:
      return;
    case Kind::Atom:
      out.insert(name_);
      return;
    default:
      left_->collect_atoms(out);
      right_->collect_atoms(out);
  }
}

bool struct_equal(const Formula::Ref& a, const Formula::Ref& b) {
  return Formula::compare(*a, *b) == 0;
}

bool struct_less(const Formula::Ref& a, const Formula::Ref& b) {
  return Formula::compare(*a, *b) < 0;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

bool is_top(const Formula& f) {
  return f.kind() == Formula::Kind::Impl &&
         f.left()->kind() == Formula::Kind::Bottom &&
         f.right()->kind() == Formula::Kind::Bottom;
}

bool is_neg(const Formula& f) {
  return f.kind() == Formula::Kind::Impl &&
         f.right()->kind() == Formula::Kind::Bottom && !is_top(f);
}

// Precedence classes for printing: 0 = Impl (loosest), 1 = Or, 2 = And,
// 3 = unary/atomic. Sugar forms count as unary/atomic.
int prec(const Formula& f) {
  if (is_top(f) || is_neg(f)) return 3;
  switch (f.kind()) {
    case Formula::Kind::Impl:
      return 0;
    case Formula::Kind::Or:
      return 1;
    case Formula::Kind::And:
      return 2;
    default:
      return 3;
  }
}

void print(const Formula& f, int min_prec, std::string& out) {
  int p = prec(f);
  bool parens = p < min_prec;
  if (parens) out += '(';
  if (is_top(f)) {
    out += "#t";
  } else if (is_neg(f)) {
    out += '-';
    print(*f.left(), 3, out);
  } else {
    switch (f.kind()) {
      case Formula::Kind::Bottom:
        out += "#f";
        break;
      case Formula::Kind::Atom:
        out += f.atom_name();
        break;
      case Formula::Kind::And:
        // '&' and '|' parse left-associative, so right-nested chains keep
        // their parentheses.
        print(*f.left(), 2, out);
        out += " & ";
        print(*f.right(), 3, out);
        break;
      case Formula::Kind::Or:
        print(*f.left(), 1, out);
        out += " | ";
        print(*f.right(), 2, out);
        break;
      case Formula::Kind::Impl:
        // Operands of '->' are printed at level 1 so that nested
        // implications are always parenthesized.
        print(*f.left(), 1, out);
        out += " -> ";
        print(*f.right(), 1, out);
        break;
    }
  }
  if (parens) out += ')';
}

}  // namespace

std::string to_string(const Formula::Ref& f) {
  std::string out;
  print(*f, 0, out);
  return out;
}

std::string to_string(const Theory& t) {
  std::string out;
  for (const auto& f : t.formulas()) {
    out += to_string(f);
    out += ".\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Theory

Theory::Theory(std::vector<Formula::Ref> formulas, Signature signature)
    : formulas_(std::move(formulas)), signature_(std::move(signature)) {
  std::sort(formulas_.begin(), formulas_.end(), struct_less);
  formulas_.erase(std::unique(formulas_.begin(), formulas_.end(), struct_equal),
                  formulas_.end());
  std::set<std::string> used;
  for (const auto& f : formulas_) f->collect_atoms(used);
  for (const auto& a : used) {
    if (!signature_.contains(a)) {
      throw std::invalid_argument("formula atom outside signature: " + a);
    }
  }
}

Theory Theory::over_own_atoms(std::vector<Formula::Ref> formulas) {
  std::set<std::string> used;
  for (const auto& f : formulas) f->collect_atoms(used);
  return Theory(std::move(formulas),
                Signature({used.begin(), used.end()}));
}

Theory Theory::with_signature(Signature wider) const {
  if (!signature_.subset_of(wider)) {
    throw std::invalid_argument("with_signature: new signature not a superset");
  }
  return Theory(formulas_, std::move(wider));
}

Theory Theory::unite(const Theory& a, const Theory& b) {
  std::vector<Formula::Ref> fs = a.formulas_;
  fs.insert(fs.end(), b.formulas_.begin(), b.formulas_.end());
  return Theory(std::move(fs),
                Signature::unite(a.signature_, b.signature_));
}

// ---------------------------------------------------------------------------
// Program

bool Rule::operator<(const Rule& o) const {
  return std::tie(head_pos, head_neg, body_pos, body_neg) <
         std::tie(o.head_pos, o.head_neg, o.body_pos, o.body_neg);
}

namespace {

void normalize_rule(Rule& r) {
  for (auto* v : {&r.head_pos, &r.head_neg, &r.body_pos, &r.body_neg}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  if (r.head_pos.empty() && r.head_neg.empty() && r.body_pos.empty() &&
      r.body_neg.empty()) {
    throw std::invalid_argument("rule with empty head and empty body");
  }
}

}  // namespace

Program::Program(std::vector<Rule> rules, Signature signature)
    : rules_(std::move(rules)), signature_(std::move(signature)) {
  for (auto& r : rules_) normalize_rule(r);
  std::sort(rules_.begin(), rules_.end());
  rules_.erase(std::unique(rules_.begin(), rules_.end()), rules_.end());
  for (const auto& r : rules_) {
    for (const auto* v : {&r.head_pos, &r.head_neg, &r.body_pos, &r.body_neg}) {
      for (const auto& a : *v) {
        if (!signature_.contains(a)) {
          throw std::invalid_argument("rule atom outside signature: " + a);
        }
      }
    }
  }
}

Program Program::over_own_atoms(std::vector<Rule> rules) {
  std::set<std::string> used;
  for (const auto& r : rules) {
    for (const auto* v : {&r.head_pos, &r.head_neg, &r.body_pos, &r.body_neg}) {
      used.insert(v->begin(), v->end());
    }
  }
  return Program(std::move(rules), Signature({used.begin(), used.end()}));
}

Program Program::with_signature(Signature wider) const {
  if (!signature_.subset_of(wider)) {
    throw std::invalid_argument("with_signature: new signature not a superset");
  }
  return Program(rules_, std::move(wider));
}

std::string to_string(const Rule& r) {
  std::string out;
  bool first = true;
  for (const auto& a : r.head_pos) {
    if (!first) out += " | ";
    out += a;
    first = false;
  }
  for (const auto& a : r.head_neg) {
    if (!first) out += " | ";
    out += "not " + a;
    first = false;
  }
  if (!r.body_pos.empty() || !r.body_neg.empty()) {
    out += first ? ":- " : " :- ";
    first = true;
    for (const auto& a : r.body_pos) {
      if (!first) out += ", ";
      out += a;
      first = false;
    }
    for (const auto& a : r.body_neg) {
      if (!first) out += ", ";
      out += "not " + a;
      first = false;
    }
  }
  return out;
}

std::string to_string(const Program& p) {
  std::string out;
  for (const auto& r : p.rules()) {
    out += to_string(r);
    out += ".\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

using detail::Lexer;
using detail::Tok;

// Recursive-descent theory parser. Precedence, tightest first:
// '-', '&', '|', '->' (right-assoc), '<->' (left-assoc).
struct TheoryParser {
  explicit TheoryParser(Lexer& lx) : lx(lx) {}
  Lexer& lx;

  Formula::Ref formula() { return equiv(); }

  Formula::Ref equiv() {
    Formula::Ref l = implication();
    while (lx.tok == Tok::Equiv) {
      lx.advance();
      Formula::Ref r = implication();
      l = Formula::conj(Formula::impl(l, r), Formula::impl(r, l));
    }
    return l;
  }

  Formula::Ref implication() {
    Formula::Ref l = disjunction();
    if (lx.tok == Tok::Impl) {
      lx.advance();
      return Formula::impl(std::move(l), implication());
    }
    return l;
  }

  Formula::Ref disjunction() {
    Formula::Ref l = conjunction();
    while (lx.tok == Tok::Or) {
      lx.advance();
      l = Formula::disj(std::move(l), conjunction());
    }
    return l;
  }

  Formula::Ref conjunction() {
    Formula::Ref l = unary();
    while (lx.tok == Tok::And) {
      lx.advance();
      l = Formula::conj(std::move(l), unary());
    }
    return l;
  }

  Formula::Ref unary() {
    switch (lx.tok) {
      case Tok::Neg:
        lx.advance();
        return Formula::neg(unary());
      case Tok::Bottom:
        lx.advance();
        return Formula::bottom();
      case Tok::Top:
        lx.advance();
        return Formula::top();
      case Tok::Ident: {
        std::string name = lx.ident;
        lx.advance();
        return Formula::atom(std::move(name));
      }
      case Tok::LParen: {
        lx.advance();
        Formula::Ref f = formula();
        if (lx.tok != Tok::RParen) lx.fail("expected ')'");
        lx.advance();
        return f;
      }
      case Tok::Var:
        lx.fail("variables are not allowed in propositional input");
      default:
        lx.fail("expected a formula");
    }
  }
};

}  // namespace

Theory parse_theory(const std::string& text) {
  Lexer lx(text);
  TheoryParser p(lx);
  std::vector<Formula::Ref> fs;
  while (lx.tok != Tok::End) {
    fs.push_back(p.formula());
    if (lx.tok != Tok::Dot) lx.fail("expected '.' after formula");
    lx.advance();
  }
  return Theory::over_own_atoms(std::move(fs));
}

Program parse_program(const std::string& text) {
  Lexer lx(text);
  std::vector<Rule> rules;
  while (lx.tok != Tok::End) {
    Rule r;
    // Head literals, '|'-separated; may be empty before ':-'.
    if (lx.tok != Tok::If) {
      for (;;) {
        bool negated = false;
        if (lx.tok == Tok::Not) {
          negated = true;
          lx.advance();
        }
        if (lx.tok != Tok::Ident) lx.fail("expected head atom");
        (negated ? r.head_neg : r.head_pos).push_back(lx.ident);
        lx.advance();
        if (lx.tok == Tok::Or) {
          lx.advance();
          continue;
        }
        break;
      }
    }
    if (lx.tok == Tok::If) {
      lx.advance();
      for (;;) {
        bool negated = false;
        if (lx.tok == Tok::Not) {
          negated = true;
          lx.advance();
        }
        if (lx.tok != Tok::Ident) lx.fail("expected body atom");
        (negated ? r.body_neg : r.body_pos).push_back(lx.ident);
        lx.advance();
        if (lx.tok == Tok::Comma) {
          lx.advance();
          continue;
        }
        break;
      }
    }
    if (lx.tok != Tok::Dot) lx.fail("expected '.' after rule");
    if (r.head_pos.empty() && r.head_neg.empty() && r.body_pos.empty() &&
        r.body_neg.empty()) {
      lx.fail("rule with empty head and empty body");
    }
    lx.advance();
    rules.push_back(std::move(r));
  }
  return Program::over_own_atoms(std::move(rules));
}

// ---------------------------------------------------------------------------
// Rule translation

Formula::Ref rule_to_formula(const Rule& r) {
  std::vector<Formula::Ref> body;
  for (const auto& a : r.body_pos) body.push_back(Formula::atom(a));
  for (const auto& a : r.body_neg) body.push_back(Formula::neg(Formula::atom(a)));
  std::vector<Formula::Ref> head;
  for (const auto& a : r.head_pos) head.push_back(Formula::atom(a));
  for (const auto& a : r.head_neg) head.push_back(Formula::neg(Formula::atom(a)));
  return Formula::impl(Formula::conj_all(body), Formula::disj_all(head));
}

Theory program_to_theory(const Program& p) {
  std::vector<Formula::Ref> fs;
  for (const auto& r : p.rules()) fs.push_back(rule_to_formula(r));
  return Theory(std::move(fs), p.signature());
}

// ---------------------------------------------------------------------------
// Factuality & polarity

bool is_factual(const Formula::Ref& f) {
  switch (f->kind()) {
    case Formula::Kind::Bottom:
    case Formula::Kind::Atom:
      return true;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return is_factual(f->left()) && is_factual(f->right());
    case Formula::Kind::Impl:
      return f->right()->kind() == Formula::Kind::Bottom &&
             is_factual(f->left());
  }
  return false;
}

bool is_factual(const Theory& t) {
  return std::all_of(t.formulas().begin(), t.formulas().end(),
                     [](const Formula::Ref& f) { return is_factual(f); });
}

namespace {

// crossed: the root path crossed at least one antecedent edge.
// in_cons: the occurrence lies inside the consequent of some implication.
// par_pos/par_neg: occurrence parity; entering an antecedent swaps the pair,
//          so antecedents of negative-parity implications (antecedents of
//          antecedents, however deeply the inner implication is nested)
//          count as positive.
void polarity_walk(const Formula::Ref& f, bool crossed, bool in_cons,
                   bool par_pos, bool par_neg, PolarityReport& out) {
  switch (f->kind()) {
    case Formula::Kind::Bottom:
      return;
    case Formula::Kind::Atom: {
      Polarity& p = out[f->atom_name()];
      p.may_occur_negative |= crossed;
      p.may_occur_positive |= !crossed || in_cons || par_pos;
      return;
    }
    case Formula::Kind::And:
    case Formula::Kind::Or:
      polarity_walk(f->left(), crossed, in_cons, par_pos, par_neg, out);
      polarity_walk(f->right(), crossed, in_cons, par_pos, par_neg, out);
      return;
    case Formula::Kind::Impl:
      polarity_walk(f->left(), true, in_cons, par_neg, true, out);
      polarity_walk(f->right(), crossed, true, true, par_neg, out);
      return;
  }
}

}  // namespace

PolarityReport atom_polarities(const Formula::Ref& f) {
  PolarityReport out;
  polarity_walk(f, false, false, true, false, out);
  return out;
}

bool is_apan_theory(const Theory& t, const Alphabets& ab, bool extended) {
  for (const auto& f : t.formulas()) {
    PolarityReport rep = atom_polarities(f);
    bool ok = true;
    for (const auto& [atom, pol] : rep) {
      if (pol.may_occur_positive && !ab.a_plus.count(atom)) ok = false;
      if (pol.may_occur_negative && !ab.a_minus.count(atom)) ok = false;
    }
    if (ok) continue;
    if (extended && is_factual(f)) {
      std::set<std::string> used;
      f->collect_atoms(used);
      bool all_plus = std::all_of(used.begin(), used.end(),
                                  [&](const std::string& a) {
                                    return ab.a_plus.count(a) != 0;
                                  });
      if (all_plus) continue;
    }
    return false;
  }
  return true;
}

}  // namespace hteq
