#include "gjl/models.hpp"

namespace gjl {

TheoremhoodOracle::TheoremhoodOracle(XLogic logic, bool auto_extend)
    : logic_(logic), cs_(ConstantSpec::total(calculus_of(logic))), auto_extend_(auto_extend) {}

OraclePtr TheoremhoodOracle::with_standard_stock(XLogic logic) {
  auto oracle = std::make_shared<TheoremhoodOracle>(logic);
  const ModelClass cls = model_class_of(logic);
  const bool star = logic == XLogic::GLP_TCS;
  auto add = [&](Valuation v) {
    oracle->add_stock_witness({Model{AllOnesEvidence{}, std::move(v)}, cls, star});
  };
  add(Valuation{TruthValue::zero()});
  add(Valuation{TruthValue::one()});
  add(Valuation{TruthValue::ratio(1, 2)});
  Valuation lo1{TruthValue::zero()};
  lo1.set(1, TruthValue::one());
  add(lo1);
  Valuation hi1{TruthValue::one()};
  hi1.set(1, TruthValue::zero());
  add(hi1);
  Valuation lo2{TruthValue::zero()};
  lo2.set(2, TruthValue::one());
  add(lo2);
  return oracle;
}

std::string TheoremhoodOracle::validate_witness(const JFormula& f,
                                                const RefutationWitness& w) const {
  if (std::holds_alternative<XRootedEvidence>(w.model.evidence) ||
      std::holds_alternative<CrispShiftedEvidence>(w.model.evidence)) {
    return "refutation witnesses must have finitely-described evidence";
  }
  if (logic_ == XLogic::GJ45_TCS) {
    if (w.star || w.cls != ModelClass::GM45)
      return "GJ45_TCS refutations use GM45 models under the standard evaluation";
  } else {
    const bool star_route = w.star && w.cls == ModelClass::GM4;
    const bool plain_route = !w.star && w.cls == ModelClass::GMLP;
    if (!star_route && !plain_route)
      return "GLP_TCS refutations use GM4 models under |.|* (or GMLP models under |.|)";
  }
  const ClassVerdict cls_verdict = check_model_class(w.model, w.cls);
  if (!cls_verdict) {
    return "witness model fails the " + to_string(w.cls) + " check: " +
           (cls_verdict.violation ? cls_verdict.violation->to_string() : cls_verdict.error);
  }
  const CSRespectVerdict cs_verdict = check_cs_respect(w.model, cs_, {});
  if (!cs_verdict) {
    return "witness model does not respect the constant specification: " + cs_verdict.reason;
  }
  const TruthValue value = w.star ? eval_star(w.model, f) : eval(w.model, f);
  if (value.is_one()) {
    return "witness does not refute the formula (evaluates to 1)";
  }
  return "";
}

std::string TheoremhoodOracle::add_theorem(const JFormula& f, JProof proof) {
  if (nontheorems_.count(f))
    return "inconsistent certificates: formula already has a refutation";
  if (theorems_.count(f)) return "";
  if (proof.calculus != calculus()) return "proof is in the wrong calculus";
  if (!proof.cs.is_total() || proof.cs.base() != calculus())
    return "proof must use the total constant specification of " + to_string(calculus());
  const ProofVerdict verdict = check_proof(proof);
  if (!verdict)
    return "proof does not check (line " + std::to_string(verdict.line) + ": " +
           verdict.reason + ")";
  if (!verdict.assumption_sets.back().empty())
    return "theorem certificates must not depend on assumptions";
  if (!(proof.conclusion() == f)) return "proof concludes a different formula";
  theorems_.emplace(f, std::move(proof));
  return "";
}

std::string TheoremhoodOracle::add_nontheorem(const JFormula& f, RefutationWitness w) {
  if (theorems_.count(f)) return "inconsistent certificates: formula already has a proof";
  if (nontheorems_.count(f)) return "";
  if (std::string err = validate_witness(f, w); !err.empty()) return err;
  nontheorems_.emplace(f, std::move(w));
  return "";
}

std::string TheoremhoodOracle::add_stock_witness(RefutationWitness w) {
  // Same validation as a certificate, minus the per-formula refutation value.
  if (std::holds_alternative<XRootedEvidence>(w.model.evidence) ||
      std::holds_alternative<CrispShiftedEvidence>(w.model.evidence)) {
    return "stock witnesses must have finitely-described evidence";
  }
  const ClassVerdict cls_verdict = check_model_class(w.model, w.cls);
  if (!cls_verdict)
    return "stock model fails the class check: " +
           (cls_verdict.violation ? cls_verdict.violation->to_string() : cls_verdict.error);
  const CSRespectVerdict cs_verdict = check_cs_respect(w.model, cs_, {});
  if (!cs_verdict) return "stock model does not respect the specification: " + cs_verdict.reason;
  stock_.push_back(std::move(w));
  return "";
}

Decision TheoremhoodOracle::query(const JFormula& f) const {
  if (theorems_.count(f)) return Decision::Theorem;
  if (nontheorems_.count(f)) return Decision::NonTheorem;
  return Decision::Undecided;
}

const JProof* TheoremhoodOracle::theorem_proof(const JFormula& f) const {
  auto it = theorems_.find(f);
  return it == theorems_.end() ? nullptr : &it->second;
}

const RefutationWitness* TheoremhoodOracle::refutation(const JFormula& f) const {
  auto it = nontheorems_.find(f);
  return it == nontheorems_.end() ? nullptr : &it->second;
}

Decision TheoremhoodOracle::decide(const JFormula& f) {
  used_.insert(f);
  const Decision q = query(f);
  if (q != Decision::Undecided) return q;
  if (!auto_extend_) return Decision::Undecided;
  if (try_prove(f)) return Decision::Theorem;
  if (try_refute(f)) return Decision::NonTheorem;
  return Decision::Undecided;
}

namespace {

// Appends the steps of `part` (a closed proof) to `proof`, fixing premise
// indices; returns the index of its concluding line.
std::size_t splice_proof(JProof& proof, const JProof& part) {
  const std::size_t offset = proof.steps.size();
  for (JStep st : part.steps) {
    if (st.rule == StepRule::MP) {
      st.premise_i += offset;
      st.premise_j += offset;
    }
    proof.steps.push_back(std::move(st));
  }
  return proof.steps.size() - 1;
}

} // namespace

bool TheoremhoodOracle::try_prove(const JFormula& f) {
  if (theorems_.count(f)) return true;
  if (const auto scheme = matching_scheme(calculus(), f)) {
    JProof proof{calculus(), cs_, {{f, StepRule::Axiom, 0, *scheme}}};
    return add_theorem(f, std::move(proof)).empty();
  }
  if (cs_.contains(f)) {
    JProof proof{calculus(), cs_, {{f, StepRule::CS}}};
    return add_theorem(f, std::move(proof)).empty();
  }
  if (f.kind() == JKind::Holds && try_prove_holds(f.term(), f.left())) return true;
  // Modus ponens over stored certificates.
  for (const auto& [known, known_proof] : theorems_) {
    if (known.kind() != JKind::Implies || !(known.right() == f)) continue;
    const auto minor_it = theorems_.find(known.left());
    if (minor_it == theorems_.end()) continue;
    JProof proof{calculus(), cs_, {}};
    const std::size_t major = splice_proof(proof, known_proof);
    const std::size_t minor = splice_proof(proof, minor_it->second);
    proof.steps.push_back({f, StepRule::MP, 0, SchemeName::A1, major, minor});
    return add_theorem(f, std::move(proof)).empty();
  }
  return false;
}

bool TheoremhoodOracle::try_prove_holds(const Term& t, const JFormula& body) {
  const JFormula goal = JFormula::holds(t, body);
  if (theorems_.count(goal)) return true;
  if (cs_.contains(goal)) {
    JProof proof{calculus(), cs_, {{goal, StepRule::CS}}};
    return add_theorem(goal, std::move(proof)).empty();
  }
  const auto& schemes = schemes_of(calculus());
  auto has_scheme = [&](SchemeName s) {
    return std::find(schemes.begin(), schemes.end(), s) != schemes.end();
  };

  switch (t.kind()) {
    case TermKind::Sum: {
      // t:phi -> [t+s]:phi (either summand suffices).
      for (int side = 0; side < 2; ++side) {
        const Term part = side == 0 ? t.left() : t.right();
        const JFormula premise = JFormula::holds(part, body);
        if (decide(premise) != Decision::Theorem) continue;
        JProof proof{calculus(), cs_, {}};
        const std::size_t prem = splice_proof(proof, *theorem_proof(premise));
        proof.steps.push_back({JFormula::implies(premise, goal), StepRule::Axiom, 0,
                               side == 0 ? SchemeName::Plus1 : SchemeName::Plus2});
        proof.steps.push_back(
            {goal, StepRule::MP, 0, SchemeName::A1, proof.steps.size() - 1, prem});
        return add_theorem(goal, std::move(proof)).empty();
      }
      return false;
    }
    case TermKind::App: {
      // u:(alpha -> body) plus v:alpha compose through (J).
      const Term u = t.left(), v = t.right();
      for (const auto& [known, known_proof] : theorems_) {
        if (known.kind() != JKind::Holds || !(known.term() == u)) continue;
        const JFormula& inner = known.left();
        if (inner.kind() != JKind::Implies || !(inner.right() == body)) continue;
        const JFormula alpha = inner.left();
        const JFormula minor = JFormula::holds(v, alpha);
        if (decide(minor) != Decision::Theorem) continue;
        JProof proof{calculus(), cs_, {}};
        const std::size_t major_line = splice_proof(proof, *theorem_proof(known));
        const std::size_t minor_line = splice_proof(proof, *theorem_proof(minor));
        const JFormula j_axiom =
            JFormula::implies(known, JFormula::implies(minor, goal));
        proof.steps.push_back({j_axiom, StepRule::Axiom, 0, SchemeName::J});
        proof.steps.push_back({JFormula::implies(minor, goal), StepRule::MP, 0,
                               SchemeName::A1, proof.steps.size() - 1, major_line});
        proof.steps.push_back(
            {goal, StepRule::MP, 0, SchemeName::A1, proof.steps.size() - 1, minor_line});
        return add_theorem(goal, std::move(proof)).empty();
      }
      return false;
    }
    case TermKind::Bang: {
      if (!has_scheme(SchemeName::Bang)) return false;
      if (body.kind() != JKind::Holds || !(body.term() == t.inner())) return false;
      const JFormula premise = body; // u:chi, goal is !u:u:chi
      if (decide(premise) != Decision::Theorem) return false;
      JProof proof{calculus(), cs_, {}};
      const std::size_t prem = splice_proof(proof, *theorem_proof(premise));
      proof.steps.push_back(
          {JFormula::implies(premise, goal), StepRule::Axiom, 0, SchemeName::Bang});
      proof.steps.push_back(
          {goal, StepRule::MP, 0, SchemeName::A1, proof.steps.size() - 1, prem});
      return add_theorem(goal, std::move(proof)).empty();
    }
    case TermKind::Query: {
      if (!has_scheme(SchemeName::Query)) return false;
      // body must be ~u:chi with u the queried term.
      if (!body.is_negation() || body.left().kind() != JKind::Holds) return false;
      if (!(body.left().term() == t.inner())) return false;
      if (decide(body) != Decision::Theorem) return false;
      JProof proof{calculus(), cs_, {}};
      const std::size_t prem = splice_proof(proof, *theorem_proof(body));
      proof.steps.push_back(
          {JFormula::implies(body, goal), StepRule::Axiom, 0, SchemeName::Query});
      proof.steps.push_back(
          {goal, StepRule::MP, 0, SchemeName::A1, proof.steps.size() - 1, prem});
      return add_theorem(goal, std::move(proof)).empty();
    }
    case TermKind::Constant:
    case TermKind::Variable:
      return false; // constants are covered by the CS membership test above
  }
  return false;
}

bool TheoremhoodOracle::try_refute(const JFormula& f) {
  for (const RefutationWitness& w : stock_) {
    const TruthValue value = w.star ? eval_star(w.model, f) : eval(w.model, f);
    if (!value.is_one()) {
      return add_nontheorem(f, w).empty();
    }
  }
  // Single-override witnesses: pin one justified pair of f below 1 and let
  // everything else sit at evidence 1; validation rejects unsound candidates.
  std::vector<std::pair<Term, JFormula>> pairs;
  f.collect_holds(pairs);
  const ModelClass cls = model_class_of(logic_);
  const bool star = logic_ == XLogic::GLP_TCS;
  const TruthValue values[] = {TruthValue::ratio(1, 2), TruthValue::zero()};
  const TruthValue valuations[] = {TruthValue::one(), TruthValue::zero(),
                                   TruthValue::ratio(1, 2)};
  for (const auto& [t, body] : pairs) {
    for (const TruthValue& v : values) {
      for (const TruthValue& e : valuations) {
        FiniteEvidence ev{TruthValue::one(), {}};
        ev.overrides.emplace(EvidenceKey{t, body}, v);
        RefutationWitness w{Model{std::move(ev), Valuation{e}}, cls, star};
        if (validate_witness(f, w).empty()) {
          return add_nontheorem(f, std::move(w)).empty();
        }
      }
    }
  }
  return false;
}

} // namespace gjl
