// Copyright (c) 2026 The hteq authors
// SPDX-License-Identifier: MIT

#include "hteq/oracle.hpp"

#include <algorithm>
#include <set>

namespace hteq {

void ContextPool::add(Theory t, std::string note) {
  contexts.push_back(std::move(t));
  notes.push_back(std::move(note));
}

std::vector<std::string> fresh_atoms(const Signature& taken, std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t n = 1; out.size() < k; ++n) {
    std::string name = "u" + std::to_string(n);
    if (!taken.contains(name)) out.push_back(name);
  }
  return out;
}

namespace {

Theory fact_theory(const std::vector<std::string>& atoms) {
  std::vector<Formula::Ref> fs;
  for (const auto& a : atoms) fs.push_back(Formula::atom(a));
  return Theory::over_own_atoms(std::move(fs));
}

std::string set_note(const std::vector<std::string>& atoms) {
  std::string out = "facts {";
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += ",";
    out += atoms[i];
  }
  return out + "}";
}

}  // namespace

ContextPool uniform_contexts(const Signature& l, std::size_t k_extra,
                             const Limits& limits) {
  std::vector<std::string> atoms = l.atoms();
  for (auto& u : fresh_atoms(l, k_extra)) atoms.push_back(std::move(u));
  limits.check(atoms.size());
  std::sort(atoms.begin(), atoms.end());

  ContextPool pool;
  pool.kind = ContextPool::Kind::Uniform;
  AtomMask full =
      atoms.empty() ? 0 : ((AtomMask{1} << atoms.size()) - 1);
  for (AtomMask m = 0;; ++m) {
    std::vector<std::string> chosen;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (m & (AtomMask{1} << i)) chosen.push_back(atoms[i]);
    }
    pool.add(fact_theory(chosen), set_note(chosen));
    if (m == full) break;
  }
  return pool;
}

ContextPool hyper_contexts(const Alphabets& ab, std::size_t budget,
                           const Limits& limits) {
  // Formula pool in canonical order: facts over A+, then a -> b with
  // a in A-, b in A+.
  std::vector<Formula::Ref> forms;
  std::vector<std::string> form_notes;
  for (const auto& b : ab.a_plus) {
    forms.push_back(Formula::atom(b));
    form_notes.push_back(b);
  }
  for (const auto& a : ab.a_minus) {
    for (const auto& b : ab.a_plus) {
      forms.push_back(Formula::impl(Formula::atom(a), Formula::atom(b)));
      form_notes.push_back(a + " -> " + b);
    }
  }

  ContextPool pool;
  pool.kind = ContextPool::Kind::Hyper;
  // Subsets of the formula pool by increasing size, each size in
  // lexicographic index order.
  std::vector<std::size_t> idx;
  auto emit = [&]() {
    std::vector<Formula::Ref> fs;
    std::string note = "{";
    for (std::size_t k = 0; k < idx.size(); ++k) {
      fs.push_back(forms[idx[k]]);
      if (k) note += ", ";
      note += form_notes[idx[k]];
    }
    note += "}";
    Theory t = Theory::over_own_atoms(std::move(fs));
    limits.check(t.signature().size());
    pool.add(std::move(t), std::move(note));
  };
  emit();  // the empty context
  for (std::size_t size = 1; size <= std::min(budget, forms.size()); ++size) {
    idx.assign(size, 0);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      emit();
      // next combination
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == forms.size() - (size - (i - 1))) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return pool;
}

ContextPool extend_with_factual(const ContextPool& pool,
                                const std::vector<Theory>& factual) {
  ContextPool out = pool;
  out.kind = ContextPool::Kind::ExtendedHyper;
  for (std::size_t f = 0; f < factual.size(); ++f) {
    std::string fnote = "factual#" + std::to_string(f);
    out.add(factual[f], fnote);
    for (std::size_t i = 0; i < pool.contexts.size(); ++i) {
      out.add(Theory::unite(pool.contexts[i], factual[f]),
              pool.notes[i] + " u " + fnote);
    }
  }
  return out;
}

namespace {

// Least answer set in the symmetric difference of the unions' answer sets,
// or absent when they coincide. `side` says which union has it.
struct AnswerSetDiff {
  AtomMask y;
  int side;
};

std::optional<AnswerSetDiff> answer_set_diff(const Theory& t1,
                                             const Theory& t2,
                                             const Theory& ctx,
                                             const Signature& sig,
                                             const Limits& limits) {
  InterpretationSet e1 =
      equilibrium_models(Theory::unite(t1, ctx), sig, limits);
  InterpretationSet e2 =
      equilibrium_models(Theory::unite(t2, ctx), sig, limits);
  std::size_t i = 0, j = 0;
  const auto& m1 = e1.members;
  const auto& m2 = e2.members;
  while (i < m1.size() || j < m2.size()) {
    if (j == m2.size() || (i < m1.size() && m1[i] < m2[j])) {
      return AnswerSetDiff{m1[i].there, 1};
    }
    if (i == m1.size() || m2[j] < m1[i]) {
      return AnswerSetDiff{m2[j].there, 2};
    }
    ++i;
    ++j;
  }
  return std::nullopt;
}

Signature joint_signature(const Theory& t1, const Theory& t2,
                          const Theory& ctx) {
  return Signature::unite(Signature::unite(t1.signature(), t2.signature()),
                          ctx.signature());
}

}  // namespace

bool answer_set_equivalent_under(const Theory& t1, const Theory& t2,
                                 const Theory& ctx, const Limits& limits) {
  return !answer_set_diff(t1, t2, ctx, joint_signature(t1, t2, ctx), limits)
              .has_value();
}

std::optional<Counterexample> search_counterexample(const Theory& t1,
                                                    const Theory& t2,
                                                    const ContextPool& pool,
                                                    const Limits& limits) {
  for (std::size_t i = 0; i < pool.contexts.size(); ++i) {
    const Theory& ctx = pool.contexts[i];
    Signature sig = joint_signature(t1, t2, ctx);
    if (auto d = answer_set_diff(t1, t2, ctx, sig, limits)) {
      return Counterexample{ctx, pool.notes[i], sig, d->y, d->side};
    }
  }
  return std::nullopt;
}

std::vector<Theory> proof_contexts(const Theory& t1, const Theory& t2,
                                   const Signature& sig, const Alphabets& ab,
                                   const Limits& limits) {
  AlphabetMasks masks = AlphabetMasks::from(ab, sig);
  HyperSet h1 = hyper_interpretations(t1, sig, masks, limits);
  HyperSet h2 = hyper_interpretations(t2, sig, masks, limits);

  std::vector<HTInterpretation> diff;
  std::set_symmetric_difference(
      h1.interpretations.members.begin(), h1.interpretations.members.end(),
      h2.interpretations.members.begin(), h2.interpretations.members.end(),
      std::back_inserter(diff));

  std::vector<Theory> out;
  std::set<std::string> seen;
  auto push = [&](std::vector<Formula::Ref> fs) {
    Theory t = Theory::over_own_atoms(std::move(fs));
    std::string key = to_string(t);
    if (seen.insert(key).second) out.push_back(std::move(t));
  };

  for (const auto& m : diff) {
    AtomMask xp = m.here & masks.a_plus;
    AtomMask yp = m.there & masks.a_plus;
    AtomMask alphas = (m.there & masks.a_minus) & ~m.here;
    AtomMask betas = yp & ~xp;
    std::vector<Formula::Ref> fs;
    for (const auto& a : mask_atoms(xp, sig)) fs.push_back(Formula::atom(a));
    for (const auto& a : mask_atoms(alphas, sig)) {
      for (const auto& b : mask_atoms(betas, sig)) {
        fs.push_back(Formula::impl(Formula::atom(a), Formula::atom(b)));
      }
    }
    push(std::move(fs));
    std::vector<Formula::Ref> total_fs;
    for (const auto& a : mask_atoms(yp, sig)) {
      total_fs.push_back(Formula::atom(a));
    }
    push(std::move(total_fs));
  }
  return out;
}

namespace {

std::optional<Counterexample> search_theories(
    const Theory& t1, const Theory& t2, const std::vector<Theory>& ctxs,
    const std::string& note, const Limits& limits) {
  for (const Theory& ctx : ctxs) {
    Signature sig = joint_signature(t1, t2, ctx);
    if (auto d = answer_set_diff(t1, t2, ctx, sig, limits)) {
      return Counterexample{ctx, note + " " + to_string(ctx), sig, d->y,
                            d->side};
    }
  }
  return std::nullopt;
}

ValidationResult settle(bool decided,
                        std::optional<Counterexample> counterexample) {
  ValidationResult r;
  r.decided_equivalent = decided;
  r.counterexample = std::move(counterexample);
  r.consistent = decided != r.counterexample.has_value();
  return r;
}

Alphabets full_alphabets(const Signature& sig) {
  Alphabets ab;
  for (const auto& a : sig.atoms()) {
    ab.a_plus.insert(a);
    ab.a_minus.insert(a);
  }
  return ab;
}

}  // namespace

ValidationResult validate_notion(const Theory& t1, const Theory& t2,
                                 EquivNotion e, const OracleConfig& cfg) {
  Signature sig = Signature::unite(t1.signature(), t2.signature());
  bool decided = decide_equivalence(t1, t2, sig, e, cfg.limits).equivalent;

  switch (e) {
    case EquivNotion::Classical: {
      // Brute force over worlds; a differing world is reported with the
      // empty context.
      cfg.limits.check(sig.size());
      Theory o1 = t1.with_signature(sig);
      Theory o2 = t2.with_signature(sig);
      AtomMask full = sig.size() == 0 ? 0 : ((AtomMask{1} << sig.size()) - 1);
      std::optional<Counterexample> ce;
      for (AtomMask w = 0;; ++w) {
        bool s1 = classical_sat(w, o1);
        bool s2 = classical_sat(w, o2);
        if (s1 != s2) {
          ce = Counterexample{Theory{}, "classical world", sig, w, s1 ? 1 : 2};
          break;
        }
        if (w == full) break;
      }
      return settle(decided, std::move(ce));
    }
    case EquivNotion::AnswerSet: {
      ContextPool pool;
      pool.kind = ContextPool::Kind::Uniform;
      pool.add(Theory{}, "{}");
      return settle(decided, search_counterexample(t1, t2, pool, cfg.limits));
    }
    case EquivNotion::Uniform: {
      ContextPool pool = uniform_contexts(sig, cfg.k_extra, cfg.limits);
      return settle(decided, search_counterexample(t1, t2, pool, cfg.limits));
    }
    case EquivNotion::Strong: {
      Alphabets ab = full_alphabets(sig);
      ContextPool pool = hyper_contexts(ab, cfg.budget, cfg.limits);
      auto ce = search_counterexample(t1, t2, pool, cfg.limits);
      if (!ce && !decided) {
        ce = search_theories(t1, t2, proof_contexts(t1, t2, sig, ab, cfg.limits),
                             "derived", cfg.limits);
      }
      return settle(decided, std::move(ce));
    }
  }
  return {};
}

ValidationResult validate_hyper(const Theory& t1, const Theory& t2,
                                const Alphabets& ab, const OracleConfig& cfg) {
  Signature sig = Signature::unite(t1.signature(), t2.signature());
  bool decided =
      decide_hyper(t1, t2, sig, AlphabetMasks::from(ab, sig), cfg.limits)
          .equivalent;
  ContextPool pool = hyper_contexts(ab, cfg.budget, cfg.limits);
  auto ce = search_counterexample(t1, t2, pool, cfg.limits);
  if (!ce && !decided) {
    ce = search_theories(t1, t2, proof_contexts(t1, t2, sig, ab, cfg.limits),
                         "derived", cfg.limits);
  }
  return settle(decided, std::move(ce));
}

// ---------------------------------------------------------------------------
// Corpora

std::vector<std::string> corpus_atoms(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (n <= 26) {
      out.push_back(std::string(1, static_cast<char>('a' + i)));
    } else {
      out.push_back("a" + std::to_string(i + 1));
    }
  }
  return out;
}

namespace {

// Drawing with rng() % n keeps corpora identical across standard libraries,
// unlike uniform_int_distribution.
std::size_t draw(std::mt19937& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

Formula::Ref random_formula(std::mt19937& rng,
                            const std::vector<std::string>& atoms,
                            std::size_t depth, bool factual) {
  if (depth == 0 || draw(rng, 4) == 0) {
    // Leaf: mostly atoms, occasionally #f.
    if (draw(rng, 8) == 0) return Formula::bottom();
    return Formula::atom(atoms[draw(rng, atoms.size())]);
  }
  switch (draw(rng, factual ? 3 : 4)) {
    case 0:
      return Formula::conj(random_formula(rng, atoms, depth - 1, factual),
                           random_formula(rng, atoms, depth - 1, factual));
    case 1:
      return Formula::disj(random_formula(rng, atoms, depth - 1, factual),
                           random_formula(rng, atoms, depth - 1, factual));
    case 2:
      return Formula::neg(random_formula(rng, atoms, depth - 1, factual));
    default:
      return Formula::impl(random_formula(rng, atoms, depth - 1, false),
                           random_formula(rng, atoms, depth - 1, false));
  }
}

}  // namespace

Theory random_theory(std::mt19937& rng, const CorpusConfig& cfg) {
  std::vector<std::string> atoms = corpus_atoms(cfg.atoms);
  std::size_t count =
      cfg.min_formulas + draw(rng, cfg.max_formulas - cfg.min_formulas + 1);
  std::vector<Formula::Ref> fs;
  for (std::size_t i = 0; i < count; ++i) {
    fs.push_back(random_formula(rng, atoms, cfg.max_depth, false));
  }
  return Theory(std::move(fs), Signature(atoms));
}

Program random_program(std::mt19937& rng, const CorpusConfig& cfg) {
  std::vector<std::string> atoms = corpus_atoms(cfg.atoms);
  std::size_t count =
      cfg.min_formulas + draw(rng, cfg.max_formulas - cfg.min_formulas + 1);
  std::vector<Rule> rules;
  for (std::size_t i = 0; i < count; ++i) {
    Rule r;
    // At least one head literal; each atom lands in at most one slot.
    r.head_pos.push_back(atoms[draw(rng, atoms.size())]);
    for (const auto& a : atoms) {
      switch (draw(rng, 6)) {
        case 0:
          r.head_pos.push_back(a);
          break;
        case 1:
          r.head_neg.push_back(a);
          break;
        case 2:
          r.body_pos.push_back(a);
          break;
        case 3:
          r.body_neg.push_back(a);
          break;
        default:
          break;  // atom unused
      }
    }
    auto tidy = [](std::vector<std::string>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    tidy(r.head_pos);
    tidy(r.head_neg);
    tidy(r.body_pos);
    tidy(r.body_neg);
    rules.push_back(std::move(r));
  }
  return Program(std::move(rules), Signature(atoms));
}

Theory random_factual_theory(std::mt19937& rng,
                             const std::vector<std::string>& atoms,
                             std::size_t max_formulas) {
  std::vector<Formula::Ref> fs;
  std::size_t count = 1 + draw(rng, max_formulas);
  for (std::size_t i = 0; i < count; ++i) {
    fs.push_back(random_formula(rng, atoms, 2, true));
  }
  return Theory::over_own_atoms(std::move(fs));
}

}  // namespace hteq
