#ifndef GJL_DEMOS_HPP
#define GJL_DEMOS_HPP

#include <string>
#include <vector>

#include "gjl/generate.hpp"
#include "gjl/models.hpp"

namespace gjl {

/// A machine-checked reproduction of one countermodel argument: the model,
/// its class and specification verdicts, the evaluated instance, and the
/// certificates needed to re-check all of it from the serialized report.
struct Demonstration {
  std::string name;
  TruthValue x;
  Term t = Term::variable(1);
  Term s = Term::variable(2);
  unsigned atom = 1;
  XLogic logic = XLogic::GJ45_TCS;
  bool star = false;
  JFormula instance = JFormula::bottom();
  Model model;
  ModelClass checked_class = ModelClass::GM45;
  ClassVerdict class_verdict;
  CSRespectVerdict cs_verdict;
  std::vector<EvidenceKey> universe;
  std::vector<JFormula> cs_sample;
  TruthValue evaluation;
  std::vector<std::pair<std::string, TruthValue>> intermediates;
  std::string conclusion;

  std::string to_text() const;
  std::string to_structured() const; // JSON
};

struct DemoOptions {
  std::uint64_t seed = 1;
  std::size_t universe_size = 48;
  std::size_t cs_sample_size = 20;
};

/// ~~t:p -> s:~~p evaluates to exactly x in the x-rooted GJ45_TCS model.
/// Throws std::invalid_argument for x outside (0,1) and std::runtime_error if
/// any embedded verdict fails.
Demonstration demo_z_failure_no_factivity(const TruthValue& x, const Term& t, const Term& s,
                                          unsigned atom = 1, const DemoOptions& opt = {});

/// The |.|* variant over the x-rooted GLP_TCS model (GM4 class check).
/// Targets are restricted to propositional atoms.
Demonstration demo_z_failure_with_factivity(const TruthValue& x, const Term& t, const Term& s,
                                            unsigned atom = 1, const DemoOptions& opt = {});

/// Moving x to a boundary restores the realized instances: at 1 every
/// instance evaluates to 1; at 0 the internalization term r makes
/// ~~t:phi -> (r*t):~~phi evaluate to 1, on both evidence branches.
Demonstration demo_crisp_recovery(CrispDirection direction, const DemoOptions& opt = {});

struct GapReport {
  JCalc jcalc = JCalc::GJ;
  MCalc mcalc = MCalc::GK;
  MProof z_proof{MCalc::GK, {}};
  Demonstration counterexample;
  std::string note;

  std::string to_text() const;
  std::string to_structured() const; // JSON
};

/// The strictness witness for one projection pair: a checked modal proof of
/// ~~[]p -> []~~p next to the counterexample demonstration for its realized
/// shapes, plus the containment note.
GapReport demo_theorem_gap(JCalc jcalc, const DemoOptions& opt = {});

struct RecheckResult {
  bool ok = false;
  std::vector<std::string> checks; // "[ok|FAIL] description"
  explicit operator bool() const { return ok; }
};

/// Re-validates a structured demonstration or gap report from the file
/// contents alone: certificates are re-verified and the class check,
/// specification sample and evaluation are re-run with synthesis disabled.
RecheckResult recheck_structured_report(const std::string& json_text);

} // namespace gjl

#endif
