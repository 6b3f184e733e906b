// Copyright (c) 2026 The hteq authors
// SPDX-License-Identifier: MIT

// hteq: equivalence checking for propositional theories and disjunctive
// programs under answer-set semantics, via here-and-there countermodel and
// equivalence-interpretation characterizations.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "hteq/equiv.hpp"
#include "hteq/hyper.hpp"
#include "hteq/nonground.hpp"
#include "hteq/oracle.hpp"
#include "hteq/syntax.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr const char* kSchema = "hteq-report-1";

using nlohmann::ordered_json;
using namespace hteq;

struct Input {
  std::string path;
  bool is_program = false;
  Theory theory;  // programs are kept as their theory translation
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// kind: auto | theory | program
Input load_input(const std::string& path, const std::string& kind) {
  Input in;
  in.path = path;
  std::string text = slurp(path);
  if (kind == "theory") {
    in.theory = parse_theory(text);
    return in;
  }
  if (kind == "program") {
    in.is_program = true;
    in.theory = program_to_theory(parse_program(text));
    return in;
  }
  try {
    in.theory = parse_theory(text);
  } catch (const ParseError& theory_err) {
    try {
      in.is_program = true;
      in.theory = program_to_theory(parse_program(text));
    } catch (const ParseError&) {
      throw theory_err;  // report the theory reading of the input
    }
  }
  return in;
}

Limits make_limits(std::size_t max_atoms_flag) {
  Limits l;
  if (const char* env = std::getenv("HTEQ_MAX_ATOMS")) {
    l.max_atoms = static_cast<std::size_t>(std::strtoul(env, nullptr, 10));
  }
  if (max_atoms_flag != 0) l.max_atoms = max_atoms_flag;
  return l;
}

// "@all" expands to every atom of the signature.
Alphabets make_alphabets(const std::vector<std::string>& aplus,
                         const std::vector<std::string>& aminus,
                         const Signature& sig) {
  auto expand = [&](const std::vector<std::string>& in,
                    std::set<std::string>& out) {
    for (const auto& a : in) {
      if (a == "@all") {
        out.insert(sig.atoms().begin(), sig.atoms().end());
      } else {
        out.insert(a);
      }
    }
  };
  Alphabets ab;
  expand(aplus, ab.a_plus);
  expand(aminus, ab.a_minus);
  return ab;
}

ordered_json interp_json(const HTInterpretation& m, const Signature& sig) {
  return {{"here", mask_atoms(m.here, sig)}, {"there", mask_atoms(m.there, sig)}};
}

std::string theory_text(const Theory& t) {
  std::string out;
  for (const auto& f : t.formulas()) {
    out += to_string(f);
    out += ".\n";
  }
  return out;
}

EquivNotion notion_of(const std::string& mode) {
  if (mode == "classical") return EquivNotion::Classical;
  if (mode == "answer-set") return EquivNotion::AnswerSet;
  if (mode == "strong") return EquivNotion::Strong;
  return EquivNotion::Uniform;
}

// ---------------------------------------------------------------------------
// check

struct CheckOpts {
  std::string file1, file2;
  std::string mode = "strong";
  std::string kind = "auto";
  std::vector<std::string> aplus, aminus;
  std::size_t extra_atoms = 0;
  std::size_t max_atoms = 0;
  bool json = false;
};

int run_check(const CheckOpts& o) {
  Limits limits = make_limits(o.max_atoms);
  Input i1 = load_input(o.file1, o.kind);
  Input i2 = load_input(o.file2, o.kind);
  if (i1.is_program != i2.is_program) {
    std::cerr << "error: inputs must both be theories or both be programs\n";
    return 2;
  }
  Signature sig =
      Signature::unite(i1.theory.signature(), i2.theory.signature());
  if (o.extra_atoms > 0) {
    std::vector<std::string> atoms = sig.atoms();
    for (auto& u : fresh_atoms(sig, o.extra_atoms)) atoms.push_back(u);
    sig = Signature(std::move(atoms));
  }

  Verdict v;
  ordered_json sets;
  if (o.mode == "hyper") {
    Alphabets ab = make_alphabets(o.aplus, o.aminus, sig);
    AlphabetMasks masks = AlphabetMasks::from(ab, sig);
    v = decide_hyper(i1.theory, i2.theory, sig, masks, limits);
    sets["hyper_1"] =
        hyper_interpretations(i1.theory, sig, masks, limits)
            .interpretations.members.size();
    sets["hyper_2"] =
        hyper_interpretations(i2.theory, sig, masks, limits)
            .interpretations.members.size();
  } else {
    EquivNotion e = notion_of(o.mode);
    v = decide_equivalence(i1.theory, i2.theory, sig, e, limits);
    sets["e_family_1"] = characteristic_set(i1.theory, sig, e,
                                            CharFamily::EquivalenceInterpretations,
                                            limits)
                             .members.size();
    sets["e_family_2"] = characteristic_set(i2.theory, sig, e,
                                            CharFamily::EquivalenceInterpretations,
                                            limits)
                             .members.size();
    sets["c_family_1"] =
        characteristic_set(i1.theory, sig, e, CharFamily::Countermodels, limits)
            .members.size();
    sets["c_family_2"] =
        characteristic_set(i2.theory, sig, e, CharFamily::Countermodels, limits)
            .members.size();
  }

  if (o.json) {
    ordered_json rep;
    rep["schema"] = kSchema;
    rep["tool"] = {{"name", "hteq"}, {"version", kVersion}};
    rep["mode"] = o.mode;
    rep["inputs"] = {o.file1, o.file2};
    rep["signature"] = sig.atoms();
    rep["verdict"] = v.equivalent ? "equivalent" : "not-equivalent";
    if (v.witness) {
      rep["witness"] = interp_json(*v.witness, sig);
      rep["witness_side"] = v.witness_side;
    }
    rep["set_sizes"] = sets;
    std::cout << rep.dump(2) << "\n";
  } else {
    std::cout << (v.equivalent ? "equivalent" : "not equivalent") << "\n";
    if (v.witness) {
      std::cout << "witness: " << to_string(*v.witness, sig) << " (in input "
                << v.witness_side << " only)\n";
    }
  }
  return v.equivalent ? 0 : 1;
}

// ---------------------------------------------------------------------------
// models

struct ModelsOpts {
  std::string file;
  std::string which = "models";
  std::string kind = "auto";
  std::vector<std::string> aplus, aminus;
  std::size_t max_atoms = 0;
  bool json = false;
};

int run_models(const ModelsOpts& o) {
  Limits limits = make_limits(o.max_atoms);
  Input in = load_input(o.file, o.kind);
  const Theory& t = in.theory;
  const Signature& sig = t.signature();

  InterpretationSet set;
  if (o.which == "models") {
    set = ht_models(t, sig, limits);
  } else if (o.which == "countermodels" || o.which == "Cs") {
    set = countermodels(t, sig, limits);
  } else if (o.which == "hyper") {
    Alphabets ab = make_alphabets(o.aplus, o.aminus, sig);
    set = hyper_interpretations(t, sig, AlphabetMasks::from(ab, sig), limits)
              .interpretations;
  } else {
    static const std::map<std::string, std::pair<EquivNotion, CharFamily>>
        kinds = {
            {"Es", {EquivNotion::Strong, CharFamily::EquivalenceInterpretations}},
            {"Eu", {EquivNotion::Uniform, CharFamily::EquivalenceInterpretations}},
            {"Ea", {EquivNotion::AnswerSet, CharFamily::EquivalenceInterpretations}},
            {"Ec", {EquivNotion::Classical, CharFamily::EquivalenceInterpretations}},
            {"Cu", {EquivNotion::Uniform, CharFamily::Countermodels}},
            {"Ca", {EquivNotion::AnswerSet, CharFamily::Countermodels}},
            {"Cc", {EquivNotion::Classical, CharFamily::Countermodels}},
        };
    auto it = kinds.find(o.which);
    if (it == kinds.end()) {
      std::cerr << "error: unknown set '" << o.which << "'\n";
      return 2;
    }
    set = characteristic_set(t, sig, it->second.first, it->second.second,
                             limits);
  }

  if (o.json) {
    ordered_json rep;
    rep["schema"] = kSchema;
    rep["tool"] = {{"name", "hteq"}, {"version", kVersion}};
    rep["input"] = o.file;
    rep["which"] = o.which;
    rep["signature"] = sig.atoms();
    rep["members"] = ordered_json::array();
    for (const auto& m : set.members) {
      rep["members"].push_back(interp_json(m, sig));
    }
    std::cout << rep.dump(2) << "\n";
  } else {
    for (const auto& m : set.members) {
      std::cout << to_string(m, sig) << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// transform

struct TransformOpts {
  std::string file;
  std::string kind = "dual";
  std::string phi;  // gamma-phi only
};

int run_transform(const TransformOpts& o) {
  if (o.kind == "to-theory") {
    Program p = parse_program(slurp(o.file));
    std::cout << theory_text(program_to_theory(p));
    return 0;
  }
  Theory t = parse_theory(slurp(o.file));
  if (o.kind == "dual") {
    std::cout << to_string(dual_theory(t, t.signature())) << ".\n";
    return 0;
  }
  if (o.kind == "tau") {
    std::cout << theory_text(tau_epsilon(t.signature()));
    return 0;
  }
  if (o.kind == "gamma-phi") {
    if (o.phi.empty()) {
      std::cerr << "error: gamma-phi needs --phi\n";
      return 2;
    }
    Theory phi_t = parse_theory(o.phi + (o.phi.back() == '.' ? "" : "."));
    if (phi_t.size() != 1) {
      std::cerr << "error: --phi must be a single formula\n";
      return 2;
    }
    std::cout << theory_text(gamma_phi(t, phi_t.formulas()[0], t.signature()));
    return 0;
  }
  std::cerr << "error: unknown transform '" << o.kind << "'\n";
  return 2;
}

// ---------------------------------------------------------------------------
// validate

struct ValidateOpts {
  std::size_t pairs = 200;
  std::size_t atoms = 3;
  std::uint32_t seed = 1;
  std::size_t budget = 4;
  std::size_t k_extra = 1;
  std::size_t jobs = 1;
  std::size_t max_atoms = 0;
  bool json = false;
  bool invert = false;  // self-test: flip every decision
};

int run_validate(const ValidateOpts& o) {
  Limits limits = make_limits(o.max_atoms);
  OracleConfig cfg;
  cfg.k_extra = o.k_extra;
  cfg.budget = o.budget;
  cfg.limits = limits;

  // Corpus generation is serial so reports do not depend on --jobs.
  CorpusConfig corpus;
  corpus.atoms = o.atoms;
  std::mt19937 rng(o.seed);
  std::vector<std::pair<Theory, Theory>> pairs;
  for (std::size_t i = 0; i < o.pairs; ++i) {
    Theory t1 = random_theory(rng, corpus);
    Theory t2;
    switch (i % 4) {
      case 0:
        t2 = t1;  // guaranteed-equivalent pairs
        break;
      case 1:
        t2 = Theory::unite(t1, random_theory(rng, corpus));
        break;
      default:
        t2 = random_theory(rng, corpus);
        break;
    }
    pairs.emplace_back(std::move(t1), std::move(t2));
  }

  static const EquivNotion notions[] = {
      EquivNotion::Classical, EquivNotion::AnswerSet, EquivNotion::Strong,
      EquivNotion::Uniform};

  struct PairOutcome {
    std::array<ValidationResult, 4> results;
  };
  std::vector<PairOutcome> outcomes(pairs.size());

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t n = 0; n < 4; ++n) {
        outcomes[i].results[n] =
            validate_notion(pairs[i].first, pairs[i].second, notions[n], cfg);
      }
    }
  };

  std::size_t jobs = std::max<std::size_t>(1, o.jobs);
  if (jobs == 1 || pairs.size() < 2) {
    work(0, pairs.size());
  } else {
    std::vector<std::thread> threads;
    std::size_t chunk = (pairs.size() + jobs - 1) / jobs;
    for (std::size_t b = 0; b < pairs.size(); b += chunk) {
      threads.emplace_back(work, b, std::min(b + chunk, pairs.size()));
    }
    for (auto& th : threads) th.join();
  }

  std::size_t discrepancies = 0;
  ordered_json details = ordered_json::array();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t n = 0; n < 4; ++n) {
      ValidationResult r = outcomes[i].results[n];
      if (o.invert) r.decided_equivalent = !r.decided_equivalent;
      bool consistent = r.decided_equivalent != r.counterexample.has_value();
      if (!consistent) {
        ++discrepancies;
        if (details.size() < 10) {
          details.push_back(
              {{"pair", i},
               {"notion", to_string(notions[n])},
               {"decided", r.decided_equivalent ? "equivalent"
                                                : "not-equivalent"},
               {"counterexample_found", r.counterexample.has_value()},
               {"theory_1", theory_text(pairs[i].first)},
               {"theory_2", theory_text(pairs[i].second)}});
        }
      }
    }
  }

  if (o.json) {
    ordered_json rep;
    rep["schema"] = kSchema;
    rep["tool"] = {{"name", "hteq"}, {"version", kVersion}};
    rep["mode"] = "validate";
    rep["seed"] = o.seed;
    rep["pairs"] = o.pairs;
    rep["atoms"] = o.atoms;
    rep["budget"] = o.budget;
    rep["k_extra"] = o.k_extra;
    rep["notions"] = {"classical", "answer-set", "strong", "uniform"};
    rep["checks"] = o.pairs * 4;
    rep["discrepancies"] = discrepancies;
    rep["details"] = details;
    std::cout << rep.dump(2) << "\n";
  } else {
    std::cout << "validated " << o.pairs << " pairs x 4 notions: "
              << discrepancies << " discrepancies\n";
  }
  return discrepancies == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// check-ng

struct CheckNgOpts {
  std::string file1, file2;
  std::string mode = "uniform";
  std::size_t extra_consts = 2;
  std::size_t max_atoms = 0;
  bool json = false;
};

int run_check_ng(const CheckNgOpts& o) {
  Limits limits = make_limits(o.max_atoms);
  NGProgram p1 = parse_ng_program(slurp(o.file1));
  NGProgram p2 = parse_ng_program(slurp(o.file2));
  NGVerdict v = decide_uniform_nonground(p1, p2, o.extra_consts, limits);

  if (o.json) {
    ordered_json rep;
    rep["schema"] = kSchema;
    rep["tool"] = {{"name", "hteq"}, {"version", kVersion}};
    rep["mode"] = "check-ng/" + o.mode;
    rep["inputs"] = {o.file1, o.file2};
    rep["extra_consts"] = o.extra_consts;
    rep["universes_checked"] = v.universes_checked;
    rep["verdict"] = v.equivalent ? "equivalent" : "not-equivalent";
    if (v.equivalent) {
      rep["note"] =
          "equivalent over all searched universes; no completeness claim "
          "beyond the searched range";
    } else {
      rep["universe"] = v.universe;
      if (v.witness) {
        rep["witness"] = interp_json(*v.witness, v.sig);
        rep["witness_side"] = v.witness_side;
      }
    }
    std::cout << rep.dump(2) << "\n";
  } else {
    if (v.equivalent) {
      std::cout << "equivalent (over the Herbrand universe plus up to "
                << o.extra_consts
                << " fresh constants; no claim beyond that range)\n";
    } else {
      std::cout << "not equivalent\n";
      std::cout << "universe: {";
      for (std::size_t i = 0; i < v.universe.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << v.universe[i];
      }
      std::cout << "}\n";
      if (v.witness) {
        std::cout << "witness: " << to_string(*v.witness, v.sig)
                  << " (in input " << v.witness_side << " only)\n";
      }
    }
  }
  return v.equivalent ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equivalence of theories and programs under answer-set "
               "semantics (here-and-there characterizations)"};
  app.set_version_flag("--version", std::string("hteq ") + kVersion);
  app.require_subcommand(1);

  CheckOpts check;
  auto* c = app.add_subcommand("check", "decide equivalence of two inputs");
  c->add_option("file1", check.file1)->required();
  c->add_option("file2", check.file2)->required();
  c->add_option("--mode", check.mode)
      ->check(CLI::IsMember(
          {"classical", "answer-set", "strong", "uniform", "hyper"}));
  c->add_option("--kind", check.kind)
      ->check(CLI::IsMember({"auto", "theory", "program"}));
  c->add_option("--aplus", check.aplus)->delimiter(',');
  c->add_option("--aminus", check.aminus)->delimiter(',');
  c->add_option("--extra-atoms", check.extra_atoms);
  c->add_option("--max-atoms", check.max_atoms);
  c->add_flag("--json", check.json);

  ModelsOpts models;
  auto* m = app.add_subcommand("models", "list characteristic sets");
  m->add_option("file", models.file)->required();
  m->add_option("--which", models.which)
      ->check(CLI::IsMember({"models", "countermodels", "Cs", "Es", "Eu", "Ea",
                             "Ec", "Cu", "Ca", "Cc", "hyper"}));
  m->add_option("--kind", models.kind)
      ->check(CLI::IsMember({"auto", "theory", "program"}));
  m->add_option("--aplus", models.aplus)->delimiter(',');
  m->add_option("--aminus", models.aminus)->delimiter(',');
  m->add_option("--max-atoms", models.max_atoms);
  m->add_flag("--json", models.json);

  TransformOpts transform;
  auto* t = app.add_subcommand("transform", "print derived theories");
  t->add_option("file", transform.file)->required();
  t->add_option("--kind", transform.kind)
      ->check(CLI::IsMember({"dual", "gamma-phi", "tau", "to-theory"}));
  t->add_option("--phi", transform.phi);

  ValidateOpts validate;
  auto* v = app.add_subcommand(
      "validate", "cross-check decisions against the brute-force oracle");
  v->add_option("--pairs", validate.pairs);
  v->add_option("--atoms", validate.atoms);
  v->add_option("--seed", validate.seed);
  v->add_option("--budget", validate.budget);
  v->add_option("--k-extra", validate.k_extra);
  v->add_option("--jobs", validate.jobs);
  v->add_option("--max-atoms", validate.max_atoms);
  v->add_flag("--json", validate.json);
  v->add_flag("--self-test-invert", validate.invert)
      ->group("");  // hidden: harness self-test

  CheckNgOpts check_ng;
  auto* n = app.add_subcommand(
      "check-ng", "decide uniform equivalence of non-ground programs");
  n->add_option("file1", check_ng.file1)->required();
  n->add_option("file2", check_ng.file2)->required();
  n->add_option("--mode", check_ng.mode)->check(CLI::IsMember({"uniform"}));
  n->add_option("--extra-consts", check_ng.extra_consts);
  n->add_option("--max-atoms", check_ng.max_atoms);
  n->add_flag("--json", check_ng.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c) return run_check(check);
    if (*m) return run_models(models);
    if (*t) return run_transform(transform);
    if (*v) return run_validate(validate);
    if (*n) return run_check_ng(check_ng);
  } catch (const BoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
