#include "gjl/generate.hpp"

#include <array>

namespace gjl {

Term random_term(Rng& rng, std::size_t max_depth, unsigned constants, unsigned variables) {
  if (max_depth <= 1 || rng.below(3) == 0) {
    if (rng.flip()) return Term::constant(1 + static_cast<unsigned>(rng.below(constants)));
    return Term::variable(1 + static_cast<unsigned>(rng.below(variables)));
  }
  switch (rng.below(4)) {
    case 0:
      return Term::sum(random_term(rng, max_depth - 1, constants, variables),
                       random_term(rng, max_depth - 1, constants, variables));
    case 1:
      return Term::app(random_term(rng, max_depth - 1, constants, variables),
                       random_term(rng, max_depth - 1, constants, variables));
    case 2:
      return Term::bang(random_term(rng, max_depth - 1, constants, variables));
    default:
      return Term::query(random_term(rng, max_depth - 1, constants, variables));
  }
}

JFormula random_jformula(Rng& rng, std::size_t max_depth, unsigned atoms,
                         std::size_t term_depth) {
  if (max_depth <= 1 || rng.below(4) == 0) {
    if (rng.below(5) == 0) return JFormula::bottom();
    return JFormula::atom(1 + static_cast<unsigned>(rng.below(atoms)));
  }
  switch (rng.below(4)) {
    case 0:
      return JFormula::implies(random_jformula(rng, max_depth - 1, atoms, term_depth),
                               random_jformula(rng, max_depth - 1, atoms, term_depth));
    case 1:
      return JFormula::conj(random_jformula(rng, max_depth - 1, atoms, term_depth),
                            random_jformula(rng, max_depth - 1, atoms, term_depth));
    case 2:
      return JFormula::holds(random_term(rng, term_depth),
                             random_jformula(rng, max_depth - 1, atoms, term_depth));
    default:
      return JFormula::negation(random_jformula(rng, max_depth - 1, atoms, term_depth));
  }
}

MFormula random_mformula(Rng& rng, std::size_t max_depth, unsigned atoms) {
  if (max_depth <= 1 || rng.below(4) == 0) {
    if (rng.below(5) == 0) return MFormula::bottom();
    return MFormula::atom(1 + static_cast<unsigned>(rng.below(atoms)));
  }
  switch (rng.below(4)) {
    case 0:
      return MFormula::implies(random_mformula(rng, max_depth - 1, atoms),
                               random_mformula(rng, max_depth - 1, atoms));
    case 1:
      return MFormula::conj(random_mformula(rng, max_depth - 1, atoms),
                            random_mformula(rng, max_depth - 1, atoms));
    case 2:
      return MFormula::box(random_mformula(rng, max_depth - 1, atoms));
    default:
      return MFormula::negation(random_mformula(rng, max_depth - 1, atoms));
  }
}

TruthValue random_truth_value(Rng& rng) {
  static const std::array<TruthValue, 7> grid = {
      TruthValue::zero(),        TruthValue::ratio(1, 4), TruthValue::ratio(1, 3),
      TruthValue::ratio(1, 2),   TruthValue::ratio(2, 3), TruthValue::ratio(3, 4),
      TruthValue::one(),
  };
  return grid[rng.below(grid.size())];
}

Valuation random_valuation(Rng& rng, unsigned atoms) {
  Valuation v{random_truth_value(rng)};
  const std::size_t n = rng.below(atoms + 1);
  for (std::size_t i = 0; i < n; ++i) {
    v.set(1 + static_cast<unsigned>(rng.below(atoms)), random_truth_value(rng));
  }
  return v;
}

namespace {

bool factive_class(ModelClass c) {
  return c == ModelClass::GMT || c == ModelClass::GMLP || c == ModelClass::GMT45;
}

} // namespace

std::optional<Model> random_model_for_class(Rng& rng, ModelClass cls, std::size_t attempts) {
  if (cls == ModelClass::GMT45) return std::nullopt; // factivity + (?) has no finite members
  if (factive_class(cls)) {
    // Factivity pins E(t,bot) to 0, and the sum condition then pins every
    // value to 0: the finitely-described factive models are exactly E == 0.
    Model m{FiniteEvidence{TruthValue::zero(), {}}, random_valuation(rng)};
    if (rng.flip()) {
      auto& fin = std::get<FiniteEvidence>(m.evidence);
      fin.overrides.emplace(
          EvidenceKey{random_term(rng, 2), random_jformula(rng, 2)}, TruthValue::zero());
    }
    return m;
  }
  for (std::size_t a = 0; a < attempts; ++a) {
    Model m{FiniteEvidence{}, random_valuation(rng)};
    auto& fin = std::get<FiniteEvidence>(m.evidence);
    if (rng.below(4) == 0) {
      m.evidence = AllOnesEvidence{};
    } else {
      fin.default_value = random_truth_value(rng);
      const std::size_t n = rng.below(4);
      for (std::size_t i = 0; i < n; ++i) {
        TruthValue v = random_truth_value(rng);
        if (v > fin.default_value) v = fin.default_value; // the sum condition caps overrides
        fin.overrides.emplace(EvidenceKey{random_term(rng, 2), random_jformula(rng, 2)}, v);
      }
    }
    if (check_model_class(m, cls)) return m;
  }
  return std::nullopt;
}

JFormula random_axiom_instance(Rng& rng, SchemeName scheme) {
  const JFormula f0 = random_jformula(rng, 2, 3, 1);
  const JFormula f1 = random_jformula(rng, 2, 3, 1);
  const JFormula f2 = random_jformula(rng, 2, 3, 1);
  const Term t0 = random_term(rng, 1);
  const Term t1 = random_term(rng, 1);
  using F = JFormula;
  switch (scheme) {
    case SchemeName::A1:
      return F::implies(F::implies(f0, f1),
                        F::implies(F::implies(f1, f2), F::implies(f0, f2)));
    case SchemeName::A2:
      return F::implies(F::conj(f0, f1), f0);
    case SchemeName::A3:
      return F::implies(F::conj(f0, f1), F::conj(f1, f0));
    case SchemeName::A5a:
      return F::implies(F::implies(f0, F::implies(f1, f2)),
                        F::implies(F::conj(f0, f1), f2));
    case SchemeName::A5b:
      return F::implies(F::implies(F::conj(f0, f1), f2),
                        F::implies(f0, F::implies(f1, f2)));
    case SchemeName::A6:
      return F::implies(F::implies(F::implies(f0, f1), f2),
                        F::implies(F::implies(F::implies(f1, f0), f2), f2));
    case SchemeName::A7:
      return F::implies(F::bottom(), f0);
    case SchemeName::G4:
      return F::implies(f0, F::conj(f0, f0));
    case SchemeName::J:
      return F::implies(
          F::holds(t0, F::implies(f0, f1)),
          F::implies(F::holds(t1, f0), F::holds(Term::app(t0, t1), f1)));
    case SchemeName::Plus1:
      return F::implies(F::holds(t0, f0), F::holds(Term::sum(t0, t1), f0));
    case SchemeName::Plus2:
      return F::implies(F::holds(t1, f0), F::holds(Term::sum(t0, t1), f0));
    case SchemeName::F:
      return F::implies(F::holds(t0, f0), f0);
    case SchemeName::Bang:
      return F::implies(F::holds(t0, f0),
                        F::holds(Term::bang(t0), F::holds(t0, f0)));
    case SchemeName::Query: {
      const JFormula not_t = F::negation(F::holds(t0, f0));
      return F::implies(not_t, F::holds(Term::query(t0), not_t));
    }
    default:
      return F::implies(F::bottom(), f0); // modal-only names fall back to A7 shape
  }
}

JFormula random_axiom_instance(Rng& rng, JCalc calculus) {
  const auto& schemes = schemes_of(calculus);
  return random_axiom_instance(rng, schemes[rng.below(schemes.size())]);
}

JProof random_proof(Rng& rng, JCalc calculus, const ConstantSpec& cs,
                    std::size_t max_lines, unsigned max_assumptions) {
  JProof proof{calculus, cs, {}};
  const unsigned assumptions =
      max_assumptions == 0 ? 0 : static_cast<unsigned>(rng.below(max_assumptions + 1));
  for (unsigned k = 1; k <= assumptions; ++k) {
    proof.steps.push_back({random_jformula(rng, 2, 2, 1), StepRule::Assume, k});
  }
  while (proof.steps.size() < max_lines) {
    const auto choice = rng.below(3);
    if (choice == 0) {
      const auto& schemes = schemes_of(calculus);
      const SchemeName s = schemes[rng.below(schemes.size())];
      proof.steps.push_back({random_axiom_instance(rng, s), StepRule::Axiom, 0, s});
    } else if (choice == 1 && cs.is_total()) {
      JFormula inst = random_axiom_instance(rng, calculus);
      const std::size_t chain = 1 + rng.below(2);
      for (std::size_t c = 0; c < chain; ++c) {
        inst = JFormula::holds(Term::constant(1 + static_cast<unsigned>(rng.below(3))), inst);
      }
      proof.steps.push_back({inst, StepRule::CS});
    } else {
      // Look for a modus ponens opportunity in the pool.
      bool placed = false;
      for (std::size_t i = 0; i < proof.steps.size() && !placed; ++i) {
        const JFormula& maj = proof.steps[i].formula;
        if (maj.kind() != JKind::Implies) continue;
        for (std::size_t j = 0; j < proof.steps.size(); ++j) {
          if (proof.steps[j].formula == maj.left()) {
            proof.steps.push_back(
                {maj.right(), StepRule::MP, 0, SchemeName::A1, i, j});
            placed = true;
            break;
          }
        }
      }
      if (!placed) {
        proof.steps.push_back(
            {random_axiom_instance(rng, SchemeName::G4), StepRule::Axiom, 0, SchemeName::G4});
      }
    }
  }
  // Guarantee at least one modus ponens so lifting exercises the (J) path:
  // G4 over the last line plus the line itself.
  const JFormula last = proof.steps.back().formula;
  const JFormula g4 = JFormula::implies(last, JFormula::conj(last, last));
  proof.steps.push_back({g4, StepRule::Axiom, 0, SchemeName::G4});
  proof.steps.push_back({JFormula::conj(last, last), StepRule::MP, 0, SchemeName::A1,
                         proof.steps.size() - 1, proof.steps.size() - 2});
  return proof;
}

// ---------------------------------------------------------------------------
// Provability universes

namespace {

struct UniqueKeys {
  std::vector<EvidenceKey>& out;
  std::set<EvidenceKey> seen;

  explicit UniqueKeys(std::vector<EvidenceKey>& target) : out(target) {
    seen.insert(out.begin(), out.end());
  }
  void push(EvidenceKey key) {
    if (seen.insert(key).second) out.push_back(std::move(key));
  }
  std::size_t size() const { return out.size(); }
};

// Certified family: provable pairs plus sum/bang/chain closure partners.
// Every insertion decides the formula and its justified form, so the class
// check never meets an unresolved lookup on these pairs.
void add_certified_pair(TheoremhoodOracle& oracle, UniqueKeys& out, const Term& t,
                        const JFormula& f) {
  if (oracle.decide(f) != Decision::Theorem) return;
  if (oracle.decide(JFormula::holds(t, f)) != Decision::Theorem) return;
  out.push(EvidenceKey{t, f});
}

} // namespace

UniverseBuild build_provability_universe(TheoremhoodOracle& oracle, Rng& rng,
                                         std::size_t target_size,
                                         const std::vector<EvidenceKey>& seed_pairs,
                                         std::size_t cs_sample_size) {
  UniverseBuild out;
  UniqueKeys pairs(out.pairs);
  for (const EvidenceKey& key : seed_pairs) {
    if (oracle.decide(key.formula) == Decision::Undecided) {
      out.error = "seed formula undecided: " + key.formula.to_string();
      return out;
    }
    // A refuted core settles the pair at x; otherwise the justified form
    // must be decided too.
    if (oracle.decide(key.formula) == Decision::Theorem &&
        oracle.decide(JFormula::holds(key.term, key.formula)) == Decision::Undecided) {
      out.error = "seed pair undecided: (" + key.term.to_string() + ", " +
                  key.formula.to_string() + ")";
      return out;
    }
    pairs.push(key);
  }
  const std::size_t seeded = pairs.size();

  // Certified batch: axiom instances under c1, chained members, and sum/bang
  // closure partners; aligned G4 items exercise the application condition.
  const std::size_t certified_target = target_size / 3;
  std::size_t guard = 0;
  while (pairs.size() < seeded + certified_target && guard++ < 4 * target_size) {
    const JFormula inst = random_axiom_instance(rng, oracle.calculus());
    const Term c1 = Term::constant(1);
    add_certified_pair(oracle, pairs, c1, inst);
    switch (rng.below(4)) {
      case 0:
        add_certified_pair(oracle, pairs, Term::constant(2), JFormula::holds(c1, inst));
        break;
      case 1:
        add_certified_pair(oracle, pairs, Term::sum(c1, random_term(rng, 1)), inst);
        break;
      case 2:
        add_certified_pair(oracle, pairs, Term::bang(c1), JFormula::holds(c1, inst));
        break;
      default: {
        // (c1, G4@inst) next to (c1, inst): the application condition then
        // resolves E(c1*c1, inst & inst) through synthesized proofs.
        const JFormula g4 = JFormula::implies(inst, JFormula::conj(inst, inst));
        add_certified_pair(oracle, pairs, c1, g4);
        break;
      }
    }
  }

  // Refuted batch: random formulas with a certified refutation, under random
  // terms; the x value settles their side of every condition.
  guard = 0;
  while (pairs.size() < target_size && guard++ < 16 * target_size) {
    const JFormula phi = random_jformula(rng, 3, 3, 2);
    if (oracle.decide(phi) != Decision::NonTheorem) continue;
    pairs.push(EvidenceKey{random_term(rng, 2), phi});
  }
  if (pairs.size() < target_size) {
    out.error = "could not populate the sampling universe";
    return out;
  }

  // Constant-specification sample: distinct chains over axiom instances.
  std::set<JFormula> sample_seen;
  guard = 0;
  while (out.cs_sample.size() < cs_sample_size && guard++ < 16 * cs_sample_size) {
    JFormula member = JFormula::holds(
        Term::constant(1 + static_cast<unsigned>(rng.below(3))),
        random_axiom_instance(rng, oracle.calculus()));
    const std::size_t extra = rng.below(3);
    for (std::size_t k = 0; k < extra; ++k) {
      member = JFormula::holds(Term::constant(1 + static_cast<unsigned>(rng.below(3))), member);
    }
    if (sample_seen.insert(member).second) out.cs_sample.push_back(member);
  }
  if (out.cs_sample.size() < cs_sample_size) {
    out.error = "could not populate the specification sample";
    return out;
  }
  return out;
}

} // namespace gjl
