// Copyright (c) 2026 The hteq authors
// SPDX-License-Identifier: MIT

#ifndef HTEQ_ORACLE_HPP
#define HTEQ_ORACLE_HPP

#include <optional>
#include <random>

#include "hteq/equiv.hpp"
#include "hteq/hyper.hpp"

namespace hteq {

/// A finite family of context theories to test equivalence against, with a
/// provenance note per context.
struct ContextPool {
  enum class Kind { Uniform, Hyper, ExtendedHyper };

  Kind kind = Kind::Uniform;
  std::vector<Theory> contexts;
  std::vector<std::string> notes;  // parallel to contexts

  void add(Theory t, std::string note);
};

/// Fresh atom names u1, u2, ... that avoid collisions with `taken`.
std::vector<std::string> fresh_atoms(const Signature& taken, std::size_t k);

/// All subsets of L extended by k_extra fresh atoms, as fact theories.
ContextPool uniform_contexts(const Signature& l, std::size_t k_extra,
                             const Limits& limits = {});

/// All theories of at most `budget` formulas drawn from the facts over A+
/// and the implications a -> b with a in A-, b in A+.
ContextPool hyper_contexts(const Alphabets& ab, std::size_t budget,
                           const Limits& limits = {});

/// Extends a hyper pool with factual contexts: each given factual theory by
/// itself and unioned with every base context.
ContextPool extend_with_factual(const ContextPool& pool,
                                const std::vector<Theory>& factual);

/// Same answer sets of t1 u ctx and t2 u ctx over the joint signature.
bool answer_set_equivalent_under(const Theory& t1, const Theory& t2,
                                 const Theory& ctx, const Limits& limits = {});

struct Counterexample {
  Theory context;
  std::string note;
  Signature sig;        // joint signature the answer set refers to
  AtomMask answer_set;  // least differing answer set
  int side;             // 1 or 2: which union has it
};

/// First context (pool order) on which the answer sets of the unions differ.
std::optional<Counterexample> search_counterexample(const Theory& t1,
                                                    const Theory& t2,
                                                    const ContextPool& pool,
                                                    const Limits& limits = {});

/// Contexts in the shape used by the constructive completeness arguments,
/// derived from the symmetric difference of the hyperequivalence
/// interpretation sets: facts X|A+ together with a -> b for a in Y|A- \ X,
/// b in Y|A+ \ X, plus the bare fact sets X|A+ and Y|A+.
std::vector<Theory> proof_contexts(const Theory& t1, const Theory& t2,
                                   const Signature& sig, const Alphabets& ab,
                                   const Limits& limits = {});

struct OracleConfig {
  std::size_t k_extra = 1;  // uniform pools
  std::size_t budget = 4;   // hyper pools
  Limits limits;
};

struct ValidationResult {
  bool decided_equivalent = false;
  std::optional<Counterexample> counterexample;
  /// "not equivalent" came with a distinguishing context found, and
  /// "equivalent" with none; a false value is a hard failure.
  bool consistent = false;
};

/// Checks the characteristic-set decision for a notion against the
/// brute-force backend for that notion: classical-model enumeration for
/// classical, the empty context for answer-set, the uniform pool for uniform
/// and the full-alphabet hyper pool for strong.
ValidationResult validate_notion(const Theory& t1, const Theory& t2,
                                 EquivNotion e, const OracleConfig& cfg = {});

/// Checks decide_hyper against the hyper context pool (plus proof-shaped
/// contexts when the decision is "not equivalent").
ValidationResult validate_hyper(const Theory& t1, const Theory& t2,
                                const Alphabets& ab,
                                const OracleConfig& cfg = {});

// ---------------------------------------------------------------------------
// Deterministic corpora

struct CorpusConfig {
  std::size_t atoms = 3;         // named a, b, c, ...
  std::size_t min_formulas = 1;
  std::size_t max_formulas = 3;
  std::size_t max_depth = 3;
};

std::vector<std::string> corpus_atoms(std::size_t n);

/// Seed-reproducible random theory / program / factual theory. Only rng()
/// draws are used, so output is identical across standard libraries.
Theory random_theory(std::mt19937& rng, const CorpusConfig& cfg = {});
Program random_program(std::mt19937& rng, const CorpusConfig& cfg = {});
Theory random_factual_theory(std::mt19937& rng,
                             const std::vector<std::string>& atoms,
                             std::size_t max_formulas);

}  // namespace hteq

#endif  // HTEQ_ORACLE_HPP
