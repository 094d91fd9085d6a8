#include "gjl/models.hpp"

#include <algorithm>

namespace gjl {

std::string to_string(ModelClass c) {
  switch (c) {
    case ModelClass::GM: return "GM";
    case ModelClass::GMT: return "GMT";
    case ModelClass::GM4: return "GM4";
    case ModelClass::GMLP: return "GMLP";
    case ModelClass::GM45: return "GM45";
    case ModelClass::GMT45: return "GMT45";
  }
  return "?";
}

std::optional<ModelClass> parse_model_class(std::string_view s) {
  if (s == "GM") return ModelClass::GM;
  if (s == "GMT") return ModelClass::GMT;
  if (s == "GM4") return ModelClass::GM4;
  if (s == "GMLP") return ModelClass::GMLP;
  if (s == "GM45") return ModelClass::GM45;
  if (s == "GMT45") return ModelClass::GMT45;
  return std::nullopt;
}

std::string to_string(XLogic l) {
  return l == XLogic::GJ45_TCS ? "GJ45_TCS" : "GLP_TCS";
}

std::optional<XLogic> parse_xlogic(std::string_view s) {
  if (s == "GJ45_TCS") return XLogic::GJ45_TCS;
  if (s == "GLP_TCS") return XLogic::GLP_TCS;
  return std::nullopt;
}

JCalc calculus_of(XLogic l) { return l == XLogic::GJ45_TCS ? JCalc::GJ45 : JCalc::GLP; }

ModelClass model_class_of(XLogic l) {
  return l == XLogic::GJ45_TCS ? ModelClass::GM45 : ModelClass::GM4;
}

UndecidedError::UndecidedError(Term t, JFormula f)
    : std::runtime_error("undecided evidence at (" + t.to_string() + ", " +
                         f.to_string() + ")"),
      term_(std::move(t)),
      formula_(std::move(f)) {}

// ---------------------------------------------------------------------------
// Crispness

namespace {

bool is_zero_or_one(const TruthValue& v) { return v.is_zero() || v.is_one(); }

} // namespace

bool Model::is_crisp() const {
  if (!is_zero_or_one(valuation.default_value())) return false;
  for (const auto& [atom, v] : valuation.overrides()) {
    if (!is_zero_or_one(v)) return false;
  }
  if (std::holds_alternative<AllOnesEvidence>(evidence) ||
      std::holds_alternative<CrispShiftedEvidence>(evidence))
    return true;
  if (const auto* fin = std::get_if<FiniteEvidence>(&evidence)) {
    if (!is_zero_or_one(fin->default_value)) return false;
    for (const auto& [key, v] : fin->overrides) {
      if (!is_zero_or_one(v)) return false;
    }
    return true;
  }
  return false; // x-rooted evidence takes the interior value x
}

// ---------------------------------------------------------------------------
// Evidence lookup and evaluation

namespace {

TruthValue finite_lookup(const FiniteEvidence& e, const Term& t, const JFormula& f) {
  auto it = e.overrides.find(EvidenceKey{t, f});
  return it == e.overrides.end() ? e.default_value : it->second;
}

TruthValue oracle_pair_value(TheoremhoodOracle& oracle, const Term& t, const JFormula& f,
                             const TruthValue& when_certified,
                             const TruthValue& when_refuted) {
  // 1 iff both the formula and its justified form are provable; the
  // complement value applies as soon as either conjunct is refuted.
  const Decision d_phi = oracle.decide(f);
  if (d_phi == Decision::NonTheorem) return when_refuted;
  const JFormula t_phi = JFormula::holds(t, f);
  const Decision d_t = oracle.decide(t_phi);
  if (d_t == Decision::NonTheorem) return when_refuted;
  if (d_phi == Decision::Theorem && d_t == Decision::Theorem) return when_certified;
  throw UndecidedError(t, f);
}

} // namespace

TruthValue evidence_lookup(const Model& m, const Term& t, const JFormula& f) {
  if (const auto* fin = std::get_if<FiniteEvidence>(&m.evidence))
    return finite_lookup(*fin, t, f);
  if (std::holds_alternative<AllOnesEvidence>(m.evidence)) return TruthValue::one();
  if (const auto* xr = std::get_if<XRootedEvidence>(&m.evidence)) {
    if (!xr->oracle) throw std::runtime_error("x-rooted evidence has no oracle attached");
    return oracle_pair_value(*xr->oracle, t, f, TruthValue::one(), xr->x);
  }
  const auto& cs = std::get<CrispShiftedEvidence>(m.evidence);
  if (cs.to_one) return TruthValue::one();
  if (!cs.oracle) throw std::runtime_error("crisp-shifted evidence has no oracle attached");
  return oracle_pair_value(*cs.oracle, t, f, TruthValue::one(), TruthValue::zero());
}

TruthValue eval(const Model& m, const JFormula& phi) {
  switch (phi.kind()) {
    case JKind::Bottom:
      return TruthValue::zero();
    case JKind::Atom:
      return m.valuation(phi.index());
    case JKind::Implies: {
      // A zero antecedent settles the residuum at 1 whatever the consequent,
      // so undecided evidence on the right is never demanded in that case.
      const TruthValue lhs = eval(m, phi.left());
      if (lhs.is_zero()) return TruthValue::one();
      return residuum(lhs, eval(m, phi.right()));
    }
    case JKind::And:
      return tnorm(eval(m, phi.left()), eval(m, phi.right()));
    case JKind::Holds:
      return evidence_lookup(m, phi.term(), phi.left());
  }
  return TruthValue::zero();
}

TruthValue eval_star(const Model& m, const JFormula& phi) {
  switch (phi.kind()) {
    case JKind::Bottom:
      return TruthValue::zero();
    case JKind::Atom:
      return m.valuation(phi.index());
    case JKind::Implies: {
      const TruthValue lhs = eval_star(m, phi.left());
      if (lhs.is_zero()) return TruthValue::one();
      return residuum(lhs, eval_star(m, phi.right()));
    }
    case JKind::And:
      return tnorm(eval_star(m, phi.left()), eval_star(m, phi.right()));
    case JKind::Holds:
      return tnorm(evidence_lookup(m, phi.term(), phi.left()), eval_star(m, phi.left()));
  }
  return TruthValue::zero();
}

TruthValue eval_set(const Model& m, const std::vector<JFormula>& gamma, bool star) {
  TruthValue out = TruthValue::one(); // empty infimum in [0,1]
  for (const JFormula& phi : gamma) {
    out = tnorm(out, star ? eval_star(m, phi) : eval(m, phi));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Class membership: exact decision for finite evidence

std::string ClassViolation::to_string() const {
  std::string out = condition + " fails at t=" + t.to_string();
  if (s) out += ", s=" + s->to_string();
  out += ", phi=" + phi.to_string();
  if (psi) out += ", psi=" + psi->to_string();
  out += ": " + lhs.to_string() + " > " + rhs.to_string();
  return out;
}

namespace {

struct FiniteView {
  TruthValue def;
  const std::map<EvidenceKey, TruthValue>* overrides;
  static const std::map<EvidenceKey, TruthValue>& empty() {
    static const std::map<EvidenceKey, TruthValue> e;
    return e;
  }

  TruthValue lookup(const Term& t, const JFormula& f) const {
    auto it = overrides->find(EvidenceKey{t, f});
    return it == overrides->end() ? def : it->second;
  }
};

std::optional<FiniteView> finite_view(const Model& m) {
  if (const auto* fin = std::get_if<FiniteEvidence>(&m.evidence))
    return FiniteView{fin->default_value, &fin->overrides};
  if (std::holds_alternative<AllOnesEvidence>(m.evidence))
    return FiniteView{TruthValue::one(), &FiniteView::empty()};
  if (const auto* cs = std::get_if<CrispShiftedEvidence>(&m.evidence)) {
    if (cs->to_one) return FiniteView{TruthValue::one(), &FiniteView::empty()};
  }
  return std::nullopt;
}

// Symbols not occurring in any override key; instantiating a quantifier with
// them pins the lookup to the default value.
unsigned fresh_atom_index(const FiniteView& v) {
  unsigned mx = 0;
  for (const auto& [key, val] : *v.overrides)
    mx = std::max(mx, key.formula.max_atom_index());
  return mx + 1;
}

unsigned fresh_term_index(const FiniteView& v) {
  unsigned mx = 0;
  for (const auto& [key, val] : *v.overrides) {
    mx = std::max(mx, key.term.max_symbol_index());
    mx = std::max(mx, key.formula.max_term_symbol_index());
  }
  return mx + 1;
}

// (i)  E(t, phi->psi) (.) E(s, phi) <= E(t*s, psi).
// A violation needs an override above the right-hand side on each factor
// whose key is pinned, so the candidate set is finite: override pairs with
// matching implication shape, plus app-headed overrides below the default
// (any fresh phi then violates) or below some override on the left factor.
std::optional<ClassViolation> check_condition_app(const FiniteView& v, std::size_t& n) {
  for (const auto& [key_t, a] : *v.overrides) {
    if (key_t.formula.kind() != JKind::Implies) continue;
    for (const auto& [key_s, b] : *v.overrides) {
      if (!(key_s.formula == key_t.formula.left())) continue;
      ++n;
      const TruthValue lhs = tnorm(a, b);
      const TruthValue rhs =
          v.lookup(Term::app(key_t.term, key_s.term), key_t.formula.right());
      if (lhs > rhs)
        return ClassViolation{"(i)", key_t.term, key_s.term, key_s.formula,
                              key_t.formula.right(), lhs, rhs};
    }
  }
  for (const auto& [key, r] : *v.overrides) {
    if (key.term.kind() != TermKind::App) continue;
    const Term t = key.term.left(), s = key.term.right();
    ++n;
    if (v.def > r) {
      const JFormula fresh = JFormula::atom(fresh_atom_index(v));
      return ClassViolation{"(i)", t, s, fresh, key.formula, v.def, r};
    }
    for (const auto& [key_t, a] : *v.overrides) {
      if (!(key_t.term == t) || key_t.formula.kind() != JKind::Implies) continue;
      if (!(key_t.formula.right() == key.formula)) continue;
      ++n;
      const JFormula phi = key_t.formula.left();
      const TruthValue lhs = tnorm(a, v.lookup(s, phi));
      if (lhs > r)
        return ClassViolation{"(i)", t, s, phi, key.formula, lhs, r};
    }
  }
  return std::nullopt;
}

// (ii) E(t, phi) (+) E(s, phi) <= E(t+s, phi).
// Any override strictly above the default already violates: sum it with a
// fresh term and the right-hand side stays at the default.
std::optional<ClassViolation> check_condition_sum(const FiniteView& v, std::size_t& n) {
  for (const auto& [key, a] : *v.overrides) {
    ++n;
    if (a > v.def) {
      const Term fresh = Term::variable(fresh_term_index(v));
      return ClassViolation{"(ii)", key.term, fresh, key.formula, std::nullopt, a, v.def};
    }
  }
  for (const auto& [key, r] : *v.overrides) {
    if (key.term.kind() != TermKind::Sum) continue;
    ++n;
    const TruthValue lhs =
        tconorm(v.lookup(key.term.left(), key.formula), v.lookup(key.term.right(), key.formula));
    if (lhs > r)
      return ClassViolation{"(ii)", key.term.left(), key.term.right(), key.formula,
                            std::nullopt, lhs, r};
  }
  return std::nullopt;
}

// (!)  E(t, phi) <= E(!t, t:phi).
std::optional<ClassViolation> check_condition_bang(const FiniteView& v, std::size_t& n) {
  for (const auto& [key, a] : *v.overrides) {
    ++n;
    const TruthValue rhs = v.lookup(Term::bang(key.term), JFormula::holds(key.term, key.formula));
    if (a > rhs)
      return ClassViolation{"(!)", key.term, std::nullopt, key.formula, std::nullopt, a, rhs};
  }
  for (const auto& [key, r] : *v.overrides) {
    if (key.term.kind() != TermKind::Bang || key.formula.kind() != JKind::Holds) continue;
    if (!(key.formula.term() == key.term.inner())) continue;
    ++n;
    const TruthValue lhs = v.lookup(key.term.inner(), key.formula.left());
    if (lhs > r)
      return ClassViolation{"(!)", key.term.inner(), std::nullopt, key.formula.left(),
                            std::nullopt, lhs, r};
  }
  return std::nullopt;
}

// (?)  ~E(t, phi) <= E(?t, ~t:phi). With default 0 this is unsatisfiable for
// finitely-described evidence: infinitely many pairs would need value 1.
std::optional<ClassViolation> check_condition_query(const FiniteView& v, std::size_t& n) {
  if (v.def.is_zero()) {
    ++n;
    const Term fresh_t = Term::variable(fresh_term_index(v));
    const JFormula fresh_f = JFormula::atom(fresh_atom_index(v));
    const TruthValue rhs =
        v.lookup(Term::query(fresh_t), JFormula::negation(JFormula::holds(fresh_t, fresh_f)));
    return ClassViolation{"(?)", fresh_t, std::nullopt, fresh_f, std::nullopt,
                          TruthValue::one(), rhs};
  }
  for (const auto& [key, a] : *v.overrides) {
    if (!a.is_zero()) continue;
    ++n;
    const TruthValue rhs =
        v.lookup(Term::query(key.term), JFormula::negation(JFormula::holds(key.term, key.formula)));
    if (!rhs.is_one())
      return ClassViolation{"(?)", key.term, std::nullopt, key.formula, std::nullopt,
                            TruthValue::one(), rhs};
  }
  return std::nullopt;
}

// (T)  E(t, phi) <= |phi|. A positive default fails at (t, bot); with default
// 0 only overridden pairs need the evaluation comparison.
std::optional<ClassViolation> check_condition_factive(const Model& m, const FiniteView& v,
                                                      std::size_t& n) {
  if (!v.def.is_zero()) {
    ++n;
    return ClassViolation{"(T)", Term::variable(fresh_term_index(v)), std::nullopt,
                          JFormula::bottom(), std::nullopt, v.def, TruthValue::zero()};
  }
  for (const auto& [key, a] : *v.overrides) {
    ++n;
    const TruthValue rhs = eval(m, key.formula);
    if (a > rhs)
      return ClassViolation{"(T)", key.term, std::nullopt, key.formula, std::nullopt, a, rhs};
  }
  return std::nullopt;
}

bool class_has_factivity(ModelClass c) {
  return c == ModelClass::GMT || c == ModelClass::GMLP || c == ModelClass::GMT45;
}
bool class_has_bang(ModelClass c) {
  return c == ModelClass::GM4 || c == ModelClass::GMLP || c == ModelClass::GM45 ||
         c == ModelClass::GMT45;
}
bool class_has_query(ModelClass c) {
  return c == ModelClass::GM45 || c == ModelClass::GMT45;
}

ClassVerdict check_exact(const Model& m, ModelClass cls, const FiniteView& v) {
  ClassVerdict out;
  out.sampled = false;
  std::size_t n = 0;
  std::optional<ClassViolation> bad = check_condition_app(v, n);
  if (!bad) bad = check_condition_sum(v, n);
  if (!bad && class_has_bang(cls)) bad = check_condition_bang(v, n);
  if (!bad && class_has_query(cls)) bad = check_condition_query(v, n);
  if (!bad && class_has_factivity(cls)) bad = check_condition_factive(m, v, n);
  out.checked_instances = n;
  out.ok = !bad.has_value();
  out.violation = std::move(bad);
  return out;
}

// Sampled check against a finite universe of (term, formula) pairs. For
// x-rooted evidence every value lies in {x, 1}, so a left-hand side at or
// below x cannot exceed any right-hand side; those instances are settled
// without resolving the right-hand lookup, mirroring the case split in the
// well-definedness argument.
ClassVerdict check_sampled(const Model& m, ModelClass cls,
                           const std::vector<EvidenceKey>& universe) {
  ClassVerdict out;
  out.sampled = true;
  std::size_t n = 0;

  std::optional<TruthValue> interior;
  if (const auto* xr = std::get_if<XRootedEvidence>(&m.evidence)) interior = xr->x;

  auto settled_low = [&](const TruthValue& lhs) {
    if (lhs.is_zero()) return true;
    return interior && lhs <= *interior;
  };
  auto fail = [&](ClassViolation viol) {
    out.ok = false;
    out.violation = std::move(viol);
    out.checked_instances = n;
    return out;
  };

  // (i)
  for (const auto& kt : universe) {
    if (kt.formula.kind() != JKind::Implies) continue;
    for (const auto& ks : universe) {
      if (!(ks.formula == kt.formula.left())) continue;
      ++n;
      const TruthValue lhs = tnorm(evidence_lookup(m, kt.term, kt.formula),
                                   evidence_lookup(m, ks.term, ks.formula));
      if (settled_low(lhs)) continue;
      const TruthValue rhs =
          evidence_lookup(m, Term::app(kt.term, ks.term), kt.formula.right());
      if (lhs > rhs)
        return fail({"(i)", kt.term, ks.term, ks.formula, kt.formula.right(), lhs, rhs});
    }
  }
  // (ii)
  for (const auto& kt : universe) {
    for (const auto& ks : universe) {
      if (!(ks.formula == kt.formula)) continue;
      ++n;
      const TruthValue lhs = tconorm(evidence_lookup(m, kt.term, kt.formula),
                                     evidence_lookup(m, ks.term, ks.formula));
      if (settled_low(lhs)) continue;
      const TruthValue rhs =
          evidence_lookup(m, Term::sum(kt.term, ks.term), kt.formula);
      if (lhs > rhs)
        return fail({"(ii)", kt.term, ks.term, kt.formula, std::nullopt, lhs, rhs});
    }
  }
  // (!)
  if (class_has_bang(cls)) {
    for (const auto& k : universe) {
      ++n;
      const TruthValue lhs = evidence_lookup(m, k.term, k.formula);
      if (settled_low(lhs)) continue;
      const TruthValue rhs =
          evidence_lookup(m, Term::bang(k.term), JFormula::holds(k.term, k.formula));
      if (lhs > rhs)
        return fail({"(!)", k.term, std::nullopt, k.formula, std::nullopt, lhs, rhs});
    }
  }
  // (?)
  if (class_has_query(cls)) {
    for (const auto& k : universe) {
      ++n;
      if (interior) continue; // values are x or 1, both positive: ~E = 0
      const TruthValue ev = evidence_lookup(m, k.term, k.formula);
      const TruthValue lhs = wneg(ev);
      if (lhs.is_zero()) continue;
      const TruthValue rhs = evidence_lookup(
          m, Term::query(k.term), JFormula::negation(JFormula::holds(k.term, k.formula)));
      if (lhs > rhs)
        return fail({"(?)", k.term, std::nullopt, k.formula, std::nullopt, lhs, rhs});
    }
  }
  // (T)
  if (class_has_factivity(cls)) {
    for (const auto& k : universe) {
      ++n;
      const TruthValue lhs = evidence_lookup(m, k.term, k.formula);
      if (lhs.is_zero()) continue;
      const TruthValue rhs = eval(m, k.formula);
      if (lhs > rhs)
        return fail({"(T)", k.term, std::nullopt, k.formula, std::nullopt, lhs, rhs});
    }
  }
  out.ok = true;
  out.checked_instances = n;
  return out;
}

} // namespace

ClassVerdict check_model_class(const Model& m, ModelClass cls,
                               const std::vector<EvidenceKey>* universe) {
  if (auto v = finite_view(m)) return check_exact(m, cls, *v);
  if (!universe || universe->empty()) {
    ClassVerdict out;
    out.error = "oracle-backed evidence requires a sampling universe";
    return out;
  }
  return check_sampled(m, cls, *universe);
}

std::optional<ClassViolation> check_evidence_condition(const Model& m, EvidenceCondition c) {
  const auto v = finite_view(m);
  if (!v) throw std::invalid_argument("single-condition checks need finite evidence");
  std::size_t n = 0;
  switch (c) {
    case EvidenceCondition::App: return check_condition_app(*v, n);
    case EvidenceCondition::Sum: return check_condition_sum(*v, n);
    case EvidenceCondition::Bang: return check_condition_bang(*v, n);
    case EvidenceCondition::Query: return check_condition_query(*v, n);
    case EvidenceCondition::Factivity: return check_condition_factive(m, *v, n);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Constant specification respect

CSRespectVerdict check_cs_respect(const Model& m, const ConstantSpec& cs,
                                  const std::vector<JFormula>& sample) {
  CSRespectVerdict out;
  const auto view = finite_view(m);
  if (view && !cs.is_total()) {
    // Finite against finite: decide over every member.
    for (const JFormula& member : cs.members()) {
      ++out.checked;
      if (!view->lookup(member.term(), member.left()).is_one()) {
        out.reason = "E(" + member.term().to_string() + ", " +
                     member.left().to_string() + ") != 1";
        return out;
      }
    }
    out.ok = true;
    return out;
  }
  if (view && cs.is_total()) {
    // Non-overridden members sit at the default, so it must be 1; overridden
    // members must not have been lowered.
    ++out.checked;
    if (!view->def.is_one()) {
      out.reason = "default evidence " + view->def.to_string() +
                   " leaves total-specification members below 1";
      return out;
    }
    for (const auto& [key, val] : *view->overrides) {
      ++out.checked;
      if (val.is_one()) continue;
      if (key.term.kind() == TermKind::Constant &&
          cs.contains(JFormula::holds(key.term, key.formula))) {
        out.reason = "override E(" + key.term.to_string() + ", " +
                     key.formula.to_string() + ") = " + val.to_string() +
                     " lowers a specification member";
        return out;
      }
    }
    out.ok = true;
    return out;
  }
  // Oracle-backed evidence: sampled.
  for (const JFormula& member : sample) {
    ++out.checked;
    if (!cs.contains(member)) {
      out.reason = "sample formula is not a specification member: " + member.to_string();
      return out;
    }
    if (member.kind() != JKind::Holds) {
      out.reason = "malformed member: " + member.to_string();
      return out;
    }
    const TruthValue v = evidence_lookup(m, member.term(), member.left());
    if (!v.is_one()) {
      out.reason = "E(" + member.term().to_string() + ", " + member.left().to_string() +
                   ") = " + v.to_string();
      return out;
    }
  }
  out.ok = true;
  return out;
}

// ---------------------------------------------------------------------------
// x-rooted models and crisp shifts

Model make_x_rooted(const TruthValue& x, XLogic logic, OraclePtr oracle) {
  if (x.is_zero() || x.is_one())
    throw std::invalid_argument("x-rooted models require 0 < x < 1; for the boundary "
                                "values use crisp_shift");
  Model m{XRootedEvidence{x, logic, std::move(oracle)}, Valuation{x}};
  return m;
}

Model crisp_shift(CrispDirection direction, XLogic logic, OraclePtr oracle) {
  const bool to_one = direction == CrispDirection::ToOne;
  Model m{CrispShiftedEvidence{to_one, logic, std::move(oracle)},
          Valuation{to_one ? TruthValue::one() : TruthValue::zero()}};
  return m;
}

// ---------------------------------------------------------------------------
// Evaluator transformations

TransformResult normal_to_pre(const Model& m) {
  if (!finite_view(m)) {
    return {std::nullopt, "normal_to_pre requires finitely-described evidence"};
  }
  const ClassVerdict verdict = check_model_class(m, ModelClass::GMT);
  if (!verdict) {
    return {std::nullopt, "model is not factive: " +
                              (verdict.violation ? verdict.violation->to_string()
                                                 : verdict.error)};
  }
  return {m, ""};
}

TransformResult pre_to_normal(const Model& m, const std::vector<JFormula>& universe) {
  const auto view = finite_view(m);
  if (!view) {
    return {std::nullopt, "pre_to_normal requires finitely-described evidence"};
  }
  std::set<EvidenceKey> keys;
  for (const auto& [key, val] : *view->overrides) {
    keys.insert(key);
    std::vector<std::pair<Term, JFormula>> nested;
    key.formula.collect_holds(nested);
    for (auto& [t, f] : nested) keys.insert(EvidenceKey{t, f});
  }
  for (const JFormula& phi : universe) {
    std::vector<std::pair<Term, JFormula>> nested;
    phi.collect_holds(nested);
    for (auto& [t, f] : nested) keys.insert(EvidenceKey{t, f});
  }
  FiniteEvidence out{TruthValue::zero(), {}};
  for (const EvidenceKey& key : keys) {
    out.overrides.emplace(key,
                          tnorm(view->lookup(key.term, key.formula), eval_star(m, key.formula)));
  }
  return {Model{std::move(out), m.valuation}, ""};
}

// ---------------------------------------------------------------------------
// Subterm / subformula enumeration

namespace {

void subterms_into(const Term& t, std::vector<Term>& out) {
  out.push_back(t);
  switch (t.kind()) {
    case TermKind::Constant:
    case TermKind::Variable:
      return;
    case TermKind::Bang:
    case TermKind::Query:
      subterms_into(t.inner(), out);
      return;
    case TermKind::Sum:
    case TermKind::App:
      subterms_into(t.left(), out);
      subterms_into(t.right(), out);
      return;
  }
}

void subformulas_into(const JFormula& f, std::vector<JFormula>& out) {
  out.push_back(f);
  switch (f.kind()) {
    case JKind::Bottom:
    case JKind::Atom:
      return;
    case JKind::Holds:
      subformulas_into(f.left(), out);
      return;
    case JKind::Implies:
    case JKind::And:
      subformulas_into(f.left(), out);
      subformulas_into(f.right(), out);
      return;
  }
}

template <typename T>
void dedupe(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

std::vector<Term> collect_subterms(const Term& t) {
  std::vector<Term> out;
  subterms_into(t, out);
  dedupe(out);
  return out;
}

std::vector<JFormula> collect_subformulas(const JFormula& phi) {
  std::vector<JFormula> out;
  subformulas_into(phi, out);
  dedupe(out);
  return out;
}

} // namespace gjl
