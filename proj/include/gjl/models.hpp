#ifndef GJL_MODELS_HPP
#define GJL_MODELS_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gjl/algebra.hpp"
#include "gjl/calculus.hpp"
#include "gjl/syntax.hpp"

namespace gjl {

enum class ModelClass { GM, GMT, GM4, GMLP, GM45, GMT45 };

std::string to_string(ModelClass c);
std::optional<ModelClass> parse_model_class(std::string_view);

/// Total atom valuation: overrides on top of a default value.
class Valuation {
public:
  Valuation() : default_(TruthValue::one()) {}
  explicit Valuation(TruthValue def) : default_(std::move(def)) {}

  void set(unsigned atom, TruthValue v) { overrides_[atom] = std::move(v); }
  const TruthValue& operator()(unsigned atom) const {
    auto it = overrides_.find(atom);
    return it == overrides_.end() ? default_ : it->second;
  }
  const TruthValue& default_value() const { return default_; }
  const std::map<unsigned, TruthValue>& overrides() const { return overrides_; }

private:
  TruthValue default_;
  std::map<unsigned, TruthValue> overrides_;
};

struct EvidenceKey {
  Term term;
  JFormula formula;
  auto operator<=>(const EvidenceKey&) const = default;
};

enum class XLogic { GJ45_TCS, GLP_TCS };

std::string to_string(XLogic l);
std::optional<XLogic> parse_xlogic(std::string_view);
JCalc calculus_of(XLogic l);
/// GM45 for GJ45_TCS, GM4 for GLP_TCS (the class their x-rooted models live in).
ModelClass model_class_of(XLogic l);

class TheoremhoodOracle;
using OraclePtr = std::shared_ptr<TheoremhoodOracle>;

/// Evidence function descriptions. FiniteSpec and AllOnes are total and
/// exactly decidable; XRooted and CrispShifted consult a provability oracle.
struct FiniteEvidence {
  TruthValue default_value;
  std::map<EvidenceKey, TruthValue> overrides;
};
struct AllOnesEvidence {};
struct XRootedEvidence {
  TruthValue x; // 0 < x < 1
  XLogic logic;
  OraclePtr oracle;
};
struct CrispShiftedEvidence {
  bool to_one; // false: x moved to 0
  XLogic logic;
  OraclePtr oracle;
};

using EvidenceSpec =
    std::variant<FiniteEvidence, AllOnesEvidence, XRootedEvidence, CrispShiftedEvidence>;

struct Model {
  EvidenceSpec evidence;
  Valuation valuation;

  bool is_crisp() const;
};

/// Raised when an oracle-backed lookup cannot be certified either way.
class UndecidedError : public std::runtime_error {
public:
  UndecidedError(Term t, JFormula f);
  const Term& term() const { return term_; }
  const JFormula& formula() const { return formula_; }

private:
  Term term_;
  JFormula formula_;
};

enum class Decision { Theorem, NonTheorem, Undecided };

/// A non-theorem certificate: a class-checked, specification-respecting model
/// in which the formula evaluates below 1 (under |.|* when star is set,
/// which is the sound route for GLP over GM4).
struct RefutationWitness {
  Model model;
  ModelClass cls;
  bool star = false;
};

/// Certificate store for theoremhood in GJ45_TCS or GLP_TCS. Theoremhood is
/// never guessed: proofs certify theorems, validated refutation models certify
/// non-theorems, and everything else is undecided. With auto_extend enabled,
/// decide() may add certificates produced by bounded instantiation of the
/// calculus schemes and by a battery of stock refutation models.
class TheoremhoodOracle {
public:
  explicit TheoremhoodOracle(XLogic logic, bool auto_extend = true);

  /// Oracle with the default stock of refutation valuations installed.
  static OraclePtr with_standard_stock(XLogic logic);

  XLogic logic() const { return logic_; }
  JCalc calculus() const { return calculus_of(logic_); }
  const ConstantSpec& cs() const { return cs_; }

  /// Validates and stores; returns an error message on rejection.
  std::string add_theorem(const JFormula& f, JProof proof);
  std::string add_nontheorem(const JFormula& f, RefutationWitness w);
  std::string add_stock_witness(RefutationWitness w);

  Decision query(const JFormula& f) const;
  /// query(), then bounded certificate synthesis when enabled.
  Decision decide(const JFormula& f);

  const JProof* theorem_proof(const JFormula& f) const;
  const RefutationWitness* refutation(const JFormula& f) const;

  bool auto_extend() const { return auto_extend_; }
  void set_auto_extend(bool v) { auto_extend_ = v; }

  /// Formulas decided since construction, for self-contained reports.
  const std::set<JFormula>& decided_formulas() const { return used_; }

  std::size_t theorem_count() const { return theorems_.size(); }
  std::size_t nontheorem_count() const { return nontheorems_.size(); }

private:
  std::string validate_witness(const JFormula& f, const RefutationWitness& w) const;
  bool try_prove(const JFormula& f);
  bool try_prove_holds(const Term& t, const JFormula& body);
  bool try_refute(const JFormula& f);

  XLogic logic_;
  ConstantSpec cs_;
  bool auto_extend_;
  std::map<JFormula, JProof> theorems_;
  std::map<JFormula, RefutationWitness> nontheorems_;
  std::vector<RefutationWitness> stock_;
  std::set<JFormula> used_;
};

/// Evidence lookup; throws UndecidedError for unresolved oracle-backed pairs.
TruthValue evidence_lookup(const Model& m, const Term& t, const JFormula& f);

TruthValue eval(const Model& m, const JFormula& phi);
TruthValue eval_star(const Model& m, const JFormula& phi);
TruthValue eval_set(const Model& m, const std::vector<JFormula>& gamma, bool star);

struct ClassViolation {
  std::string condition; // "(i)", "(ii)", "(!)", "(?)", "(T)"
  Term t;
  std::optional<Term> s;
  JFormula phi;
  std::optional<JFormula> psi;
  TruthValue lhs, rhs;

  std::string to_string() const;
};

struct ClassVerdict {
  bool ok = false;
  std::optional<ClassViolation> violation;
  bool sampled = false;
  std::size_t checked_instances = 0;
  std::string error; // set when the check could not run at all

  explicit operator bool() const { return ok; }
};

/// FiniteSpec and AllOnes evidence: exact decision (universe ignored).
/// Oracle-backed evidence: sampled check, universe required.
ClassVerdict check_model_class(const Model& m, ModelClass cls,
                               const std::vector<EvidenceKey>* universe = nullptr);

enum class EvidenceCondition { App, Sum, Bang, Query, Factivity };

/// Exact single-condition decision for finitely-described evidence;
/// nullopt when the condition holds. Throws for oracle-backed evidence.
std::optional<ClassViolation> check_evidence_condition(const Model& m, EvidenceCondition c);

struct CSRespectVerdict {
  bool ok = false;
  std::string reason;
  std::size_t checked = 0;
  explicit operator bool() const { return ok; }
};

/// E(c,phi) = 1 for the specification's members: exact for finite evidence
/// (total scan against a finite CS, override scan against a total CS),
/// sample-based for oracle-backed evidence.
CSRespectVerdict check_cs_respect(const Model& m, const ConstantSpec& cs,
                                  const std::vector<JFormula>& sample);

/// x-rooted provability model: constant valuation x, evidence 1 on
/// certified (provable, t-provable) pairs and x elsewhere. Requires 0 < x < 1.
Model make_x_rooted(const TruthValue& x, XLogic logic, OraclePtr oracle);

enum class CrispDirection { ToZero, ToOne };

/// The x-rooted model with x moved to the boundary; the result is crisp.
Model crisp_shift(CrispDirection direction, XLogic logic, OraclePtr oracle);

struct TransformResult {
  std::optional<Model> model;
  std::string error;
  explicit operator bool() const { return model.has_value(); }
};

/// Identity on factive models; the contract is evaluator agreement, so the
/// precondition (a GMT-class model) is checked here.
TransformResult normal_to_pre(const Model& m);

/// E'(t,phi) = E(t,phi) (x) |phi|*, materialized on the override keys and on
/// every justified-subformula pair of the given universe; default 0.
TransformResult pre_to_normal(const Model& m, const std::vector<JFormula>& universe);

/// All subterms of t, including t.
std::vector<Term> collect_subterms(const Term& t);
/// All subformulas of phi, including phi.
std::vector<JFormula> collect_subformulas(const JFormula& phi);

} // namespace gjl

#endif
