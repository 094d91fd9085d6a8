#ifndef GJL_CALCULUS_HPP
#define GJL_CALCULUS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gjl/syntax.hpp"

namespace gjl {

enum class JCalc { GJ, GJT, GJ4, GLP, GJ45, GJT45 };
enum class MCalc { GK, GT, GK4, GS4, GK45 };

std::string to_string(JCalc c);
std::string to_string(MCalc c);
std::optional<JCalc> parse_jcalc(std::string_view);
std::optional<MCalc> parse_mcalc(std::string_view);

/// Justification calculi map onto modal calculi line by line;
/// GJT45 has no modal counterpart here.
std::optional<MCalc> modal_counterpart(JCalc c);

enum class SchemeName {
  A1, A2, A3, A5a, A5b, A6, A7, G4,          // propositional core, both languages
  J, Plus1, Plus2, F, Bang, Query,            // justification schemes
  K, Z, T, Four, NegIntro,                    // modal schemes
};

std::string to_string(SchemeName s);
std::optional<SchemeName> parse_scheme_name(std::string_view);

const std::vector<SchemeName>& schemes_of(JCalc c);
const std::vector<SchemeName>& schemes_of(MCalc c);

struct JBindings {
  std::map<int, JFormula> formulas;
  std::map<int, Term> terms;
};

struct MBindings {
  std::map<int, MFormula> formulas;
};

/// One-sided matching of a scheme template against a concrete formula.
std::optional<JBindings> match_scheme(SchemeName s, const JFormula& phi);
std::optional<MBindings> match_scheme(SchemeName s, const MFormula& phi);

bool is_axiom_instance(JCalc c, const JFormula& phi);
bool is_axiom_instance(MCalc c, const MFormula& phi);
std::optional<SchemeName> matching_scheme(JCalc c, const JFormula& phi);

/// Constant specification: either an explicit finite member set or the total
/// specification over a base calculus. Members have the shape
/// c_{i_n}: ... :c_{i_1}:phi with phi an axiom instance of the base calculus.
class ConstantSpec {
public:
  static ConstantSpec total(JCalc base);
  struct FiniteResult;
  /// Validates member shape against the base calculus and downward closure.
  static FiniteResult finite(JCalc base, std::vector<JFormula> members);

  bool is_total() const { return total_; }
  JCalc base() const { return base_; }
  const std::vector<JFormula>& members() const { return members_; }

  bool contains(const JFormula& phi) const;

  /// Constant c with c:phi in CS, for an axiom instance phi.
  /// Total specification: always c1.
  std::optional<unsigned> constant_for_axiom(const JFormula& axiom_instance) const;
  /// Constant c' with c':member in CS, for a member formula.
  /// Total specification: c_{k+1} where k is the member's chain length.
  std::optional<unsigned> chain_constant(const JFormula& member) const;

  /// Chain length n of c_{i_n}:...:c_{i_1}:phi, or nullopt if not a member shape.
  std::optional<std::size_t> chain_length(const JFormula& phi) const;

private:
  explicit ConstantSpec(JCalc base) : base_(base), total_(true) {}
  ConstantSpec(JCalc base, std::vector<JFormula> members)
      : base_(base), total_(false), members_(std::move(members)) {}

  JCalc base_;
  bool total_;
  std::vector<JFormula> members_;
};

struct ConstantSpec::FiniteResult {
  std::optional<ConstantSpec> cs;
  std::string error;
};

enum class StepRule { Assume, Axiom, MP, CS, NBox };

struct JStep {
  JFormula formula;
  StepRule rule;
  unsigned assume_index = 0; // Assume
  SchemeName scheme = SchemeName::A1; // Axiom
  std::size_t premise_i = 0, premise_j = 0; // MP (0-based line refs)
};

struct MStep {
  MFormula formula;
  StepRule rule;
  unsigned assume_index = 0;
  SchemeName scheme = SchemeName::A1;
  std::size_t premise_i = 0, premise_j = 0; // MP and NBox (i only)
};

struct JProof {
  JCalc calculus;
  ConstantSpec cs;
  std::vector<JStep> steps;

  const JFormula& conclusion() const { return steps.back().formula; }
};

struct MProof {
  MCalc calculus;
  std::vector<MStep> steps;

  const MFormula& conclusion() const { return steps.back().formula; }
};

struct ProofVerdict {
  bool ok = false;
  std::size_t line = 0; // 1-based line of the first failure
  std::string reason;
  /// Per line: sorted assumption indices the line depends on.
  std::vector<std::vector<unsigned>> assumption_sets;
  /// Assumption index -> formula, as introduced by Assume lines.
  std::map<unsigned, JFormula> j_assumptions;
  std::map<unsigned, MFormula> m_assumptions;

  explicit operator bool() const { return ok; }
};

ProofVerdict check_proof(const JProof& proof);
ProofVerdict check_proof(const MProof& proof);

struct LiftResult {
  Term term;
  JProof proof;
  std::string error; // non-empty on failure
  explicit operator bool() const { return error.empty(); }
};

/// Lifting: from a proof of phi under assumptions psi_1..psi_n and terms
/// t_1..t_n, builds t and a proof of t:phi from {t_i:psi_i}. Requires an
/// axiomatically appropriate constant specification (total, or a finite one
/// that happens to cover every instance used).
LiftResult lift(const JProof& input, const std::vector<Term>& terms);

/// Lifting with no assumptions.
LiftResult internalize(const JProof& input);

struct ProjectionResult {
  std::optional<MProof> proof;
  std::string error;
  explicit operator bool() const { return proof.has_value(); }
};

/// Line-wise translation into the corresponding modal calculus. The output
/// concludes the forgetful projection of the input conclusion.
ProjectionResult project_proof(const JProof& input);

/// Fixed Hilbert derivation of theta -> theta over the propositional core.
/// Appended to `proof`; returns the (0-based) index of the concluding line.
std::size_t append_identity_derivation(MProof& proof, const MFormula& theta);
std::size_t append_identity_derivation(JProof& proof, const JFormula& theta);

/// Fixed Hilbert derivation of phi -> ~~phi (13 lines over the core schemes).
JProof derive_double_negation_intro(JCalc calculus, const ConstantSpec& cs,
                                    const JFormula& phi);

} // namespace gjl

#endif
