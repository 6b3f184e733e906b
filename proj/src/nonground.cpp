// Copyright (c) 2026 The hteq authors
// SPDX-License-Identifier: MIT

#include "hteq/nonground.hpp"

#include <algorithm>
#include <set>

#include "lexer.hpp"

namespace hteq {

namespace {

void note_atom(const NGAtom& a, std::map<std::string, std::size_t>& preds,
               std::set<std::string>& consts) {
  auto [it, inserted] = preds.emplace(a.pred, a.args.size());
  if (!inserted && it->second != a.args.size()) {
    throw ParseError("predicate '" + a.pred + "' used with arity " +
                         std::to_string(a.args.size()) + " and " +
                         std::to_string(it->second),
                     1, 1);
  }
  for (const Term& t : a.args) {
    if (!t.is_var) consts.insert(t.name);
  }
}

}  // namespace

NGProgram::NGProgram(std::vector<NGRule> rules) : rules_(std::move(rules)) {
  std::set<std::string> consts;
  for (const NGRule& r : rules_) {
    for (const auto* side : {&r.head_pos, &r.head_neg, &r.body_pos,
                             &r.body_neg}) {
      for (const NGAtom& a : *side) note_atom(a, preds_, consts);
    }
  }
  consts_.assign(consts.begin(), consts.end());
}

NGProgram NGProgram::unite(const NGProgram& a, const NGProgram& b) {
  std::vector<NGRule> rules = a.rules_;
  for (const NGRule& r : b.rules_) {
    if (std::find(rules.begin(), rules.end(), r) == rules.end()) {
      rules.push_back(r);
    }
  }
  return NGProgram(std::move(rules));
}

std::string to_string(const Term& t) { return t.name; }

std::string to_string(const NGAtom& a) {
  if (a.args.empty()) return a.pred;
  std::string out = a.pred + "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) out += ",";
    out += a.args[i].name;
  }
  return out + ")";
}

std::string to_string(const NGRule& r) {
  std::string out;
  for (std::size_t i = 0; i < r.head_pos.size(); ++i) {
    if (i) out += " | ";
    out += to_string(r.head_pos[i]);
  }
  for (std::size_t i = 0; i < r.head_neg.size(); ++i) {
    if (i || !r.head_pos.empty()) out += " | ";
    out += "not " + to_string(r.head_neg[i]);
  }
  if (!r.body_pos.empty() || !r.body_neg.empty()) {
    out += " :- ";
    for (std::size_t i = 0; i < r.body_pos.size(); ++i) {
      if (i) out += ", ";
      out += to_string(r.body_pos[i]);
    }
    for (std::size_t i = 0; i < r.body_neg.size(); ++i) {
      if (i || !r.body_pos.empty()) out += ", ";
      out += "not " + to_string(r.body_neg[i]);
    }
  }
  return out + ".";
}

std::string to_string(const NGProgram& p) {
  std::string out;
  for (const NGRule& r : p.rules()) {
    out += to_string(r);
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

using detail::Lexer;
using detail::Tok;

// '=' never occurs in the grammar; scan for it up front (outside comments)
// to reject equality atoms with a pointed message.
void reject_equality(const std::string& text) {
  int line = 1, col = 1;
  bool in_comment = false;
  for (char c : text) {
    if (c == '\n') {
      ++line;
      col = 1;
      in_comment = false;
      continue;
    }
    if (c == '%') in_comment = true;
    if (!in_comment && c == '=') {
      throw ParseError(
          "equality is not supported (programs are equality-free)", line, col);
    }
    ++col;
  }
}

struct NGParser {
  explicit NGParser(const std::string& text) : lex(text) {}

  Lexer lex;

  Term term() {
    if (lex.tok == Tok::Var) {
      Term t{true, lex.ident};
      lex.advance();
      return t;
    }
    if (lex.tok == Tok::Ident) {
      Term t{false, lex.ident};
      lex.advance();
      if (lex.tok == Tok::LParen) {
        lex.fail("function terms are not supported (constants only)");
      }
      return t;
    }
    lex.fail("expected a term");
  }

  NGAtom atom() {
    if (lex.tok != Tok::Ident) lex.fail("expected a predicate name");
    NGAtom a;
    a.pred = lex.ident;
    lex.advance();
    if (lex.tok == Tok::LParen) {
      lex.advance();
      a.args.push_back(term());
      while (lex.tok == Tok::Comma) {
        lex.advance();
        a.args.push_back(term());
      }
      if (lex.tok != Tok::RParen) lex.fail("expected ')'");
      lex.advance();
    }
    return a;
  }

  NGRule rule() {
    NGRule r;
    bool constraint = false;
    if (lex.tok == Tok::If) {
      constraint = true;  // headless rule
    } else {
      for (;;) {
        if (lex.tok == Tok::Not) {
          lex.advance();
          r.head_neg.push_back(atom());
        } else {
          r.head_pos.push_back(atom());
        }
        if (lex.tok != Tok::Or) break;
        lex.advance();
      }
    }
    if (lex.tok == Tok::If) {
      lex.advance();
      if (lex.tok == Tok::Dot && constraint) {
        lex.fail("a constraint needs a body");
      }
      for (;;) {
        if (lex.tok == Tok::Not) {
          lex.advance();
          r.body_neg.push_back(atom());
        } else {
          r.body_pos.push_back(atom());
        }
        if (lex.tok != Tok::Comma) break;
        lex.advance();
      }
    }
    if (lex.tok != Tok::Dot) lex.fail("expected '.'");
    lex.advance();
    return r;
  }

  std::vector<NGRule> program() {
    std::vector<NGRule> out;
    while (lex.tok != Tok::End) out.push_back(rule());
    return out;
  }
};

std::set<std::string> vars_of(const std::vector<NGAtom>& atoms) {
  std::set<std::string> out;
  for (const NGAtom& a : atoms) {
    for (const Term& t : a.args) {
      if (t.is_var) out.insert(t.name);
    }
  }
  return out;
}

}  // namespace

NGProgram parse_ng_program(const std::string& text) {
  reject_equality(text);
  NGParser p(text);
  return NGProgram(p.program());
}

// ---------------------------------------------------------------------------
// Safety and grounding

bool is_safe(const NGRule& r) {
  std::set<std::string> pos = vars_of(r.body_pos);
  for (const auto* side : {&r.head_pos, &r.head_neg, &r.body_neg}) {
    for (const std::string& v : vars_of(*side)) {
      if (!pos.count(v)) return false;
    }
  }
  return true;
}

bool is_safe(const NGProgram& p) {
  return std::all_of(p.rules().begin(), p.rules().end(),
                     [](const NGRule& r) { return is_safe(r); });
}

std::vector<std::string> herbrand_universe(const NGProgram& p) {
  if (p.constants().empty()) return {"c"};
  return p.constants();
}

namespace {

std::string ground_name(const NGAtom& a,
                        const std::map<std::string, std::string>& sub) {
  if (a.args.empty()) return a.pred;
  std::string out = a.pred + "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) out += ",";
    const Term& t = a.args[i];
    out += t.is_var ? sub.at(t.name) : t.name;
  }
  return out + ")";
}

std::vector<std::string> ground_names(
    const std::vector<NGAtom>& atoms,
    const std::map<std::string, std::string>& sub) {
  std::vector<std::string> out;
  for (const NGAtom& a : atoms) out.push_back(ground_name(a, sub));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Signature ground_base(const std::map<std::string, std::size_t>& preds,
                      const std::vector<std::string>& universe,
                      const Limits& limits) {
  std::vector<std::string> atoms;
  for (const auto& [pred, arity] : preds) {
    // All arity-length tuples over the universe, odometer-style.
    std::vector<std::size_t> idx(arity, 0);
    for (;;) {
      NGAtom a;
      a.pred = pred;
      for (std::size_t i = 0; i < arity; ++i) {
        a.args.push_back({false, universe[idx[i]]});
      }
      atoms.push_back(to_string(a));
      if (atoms.size() > limits.max_atoms) {
        throw BoundError(atoms.size(), limits.max_atoms);
      }
      std::size_t i = arity;
      while (i > 0 && ++idx[i - 1] == universe.size()) idx[--i] = 0;
      if (i == 0) break;
    }
  }
  return Signature(std::move(atoms));
}

Program ground(const NGProgram& p, const std::vector<std::string>& universe,
               const Limits& limits) {
  std::vector<Rule> rules;
  for (const NGRule& r : p.rules()) {
    std::set<std::string> var_set;
    for (const auto* side : {&r.head_pos, &r.head_neg, &r.body_pos,
                             &r.body_neg}) {
      auto vs = vars_of(*side);
      var_set.insert(vs.begin(), vs.end());
    }
    std::vector<std::string> vars(var_set.begin(), var_set.end());

    std::vector<std::size_t> idx(vars.size(), 0);
    std::size_t instances = 0;
    for (;;) {
      std::map<std::string, std::string> sub;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        sub[vars[i]] = universe[idx[i]];
      }
      Rule g;
      g.head_pos = ground_names(r.head_pos, sub);
      g.head_neg = ground_names(r.head_neg, sub);
      g.body_pos = ground_names(r.body_pos, sub);
      g.body_neg = ground_names(r.body_neg, sub);
      rules.push_back(std::move(g));
      if (++instances > (std::size_t{1} << limits.max_atoms)) {
        throw BoundError(instances, limits.max_atoms);
      }
      std::size_t i = vars.size();
      while (i > 0 && ++idx[i - 1] == universe.size()) idx[--i] = 0;
      if (i == 0) break;
    }
  }
  Program out = Program::over_own_atoms(std::move(rules));
  limits.check(out.signature().size());
  return out;
}

std::vector<std::vector<std::string>> ordinary_answer_sets(
    const NGProgram& p, const Limits& limits) {
  Program g = ground(p, herbrand_universe(p), limits);
  std::vector<std::vector<std::string>> out;
  for (AtomMask m : answer_sets_program(g, g.signature(), limits)) {
    out.push_back(mask_atoms(m, g.signature()));
  }
  return out;
}

namespace {

std::vector<std::string> extended_universe(const NGProgram& p, std::size_t j) {
  std::vector<std::string> u = herbrand_universe(p);
  std::set<std::string> taken(u.begin(), u.end());
  for (std::size_t n = 1; j > 0; ++n) {
    std::string name = "u" + std::to_string(n);
    if (taken.count(name)) continue;
    u.push_back(name);
    --j;
  }
  std::sort(u.begin(), u.end());
  return u;
}

}  // namespace

std::vector<OpenAnswerSet> open_answer_sets(const NGProgram& p, std::size_t k,
                                            const Limits& limits) {
  std::vector<OpenAnswerSet> out;
  for (std::size_t j = 0; j <= k; ++j) {
    std::vector<std::string> u = extended_universe(p, j);
    Program g = ground(p, u, limits);
    for (AtomMask m : answer_sets_program(g, g.signature(), limits)) {
      out.push_back({u, mask_atoms(m, g.signature())});
    }
  }
  return out;
}

Verdict compare_uniform_models(const Theory& t1, const Theory& t2,
                               const Signature& sig, const Limits& limits) {
  // Relevant models for the uniform comparison: total models plus maximal
  // non-total ones (no model (X',Y) with X strictly between X' and Y).
  auto relevant = [&](const Theory& t) {
    InterpretationSet models = ht_models(t, sig, limits);
    InterpretationSet out;
    for (const auto& m : models.members) {
      if (m.total()) {
        out.members.push_back(m);
        continue;
      }
      bool maximal = true;
      for (const auto& m2 : models.members) {
        if (m2.there == m.there && m2.here != m.there &&
            m2.here != m.here && (m2.here & m.here) == m.here) {
          maximal = false;
          break;
        }
      }
      if (maximal) out.members.push_back(m);
    }
    return out;
  };
  InterpretationSet s1 = relevant(t1);
  InterpretationSet s2 = relevant(t2);
  Verdict v;
  if (s1 == s2) {
    v.equivalent = true;
    return v;
  }
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
  return v;
}

NGVerdict decide_uniform_nonground(const NGProgram& p1, const NGProgram& p2,
                                   std::size_t k, const Limits& limits) {
  NGProgram joint = NGProgram::unite(p1, p2);
  NGVerdict out;
  for (std::size_t j = 0; j <= k; ++j) {
    std::vector<std::string> u = extended_universe(joint, j);
    Signature base = ground_base(joint.predicates(), u, limits);
    Theory t1 = program_to_theory(ground(p1, u, limits)).with_signature(base);
    Theory t2 = program_to_theory(ground(p2, u, limits)).with_signature(base);
    Verdict v = compare_uniform_models(t1, t2, base, limits);
    ++out.universes_checked;
    if (!v.equivalent) {
      out.equivalent = false;
      out.universe = std::move(u);
      out.sig = base;
      out.witness = v.witness;
      out.witness_side = v.witness_side;
      return out;
    }
  }
  out.equivalent = true;
  return out;
}

}  // namespace hteq
