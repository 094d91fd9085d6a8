#include "gjl/demos.hpp"

#include <stdexcept>

#include "gjl/io.hpp"
#include "gjl/parse.hpp"
#include "json.hpp"

namespace gjl {

namespace {

using nlohmann::json;

JFormula realized_z_instance(const Term& t, const Term& s, unsigned atom) {
  const JFormula p = JFormula::atom(atom);
  return JFormula::implies(JFormula::negation(JFormula::negation(JFormula::holds(t, p))),
                           JFormula::holds(s, JFormula::negation(JFormula::negation(p))));
}

std::vector<EvidenceKey> demonstration_seed_pairs(const Term& t, const Term& s,
                                                  const JFormula& instance) {
  std::vector<Term> terms = collect_subterms(t);
  for (const Term& sub : collect_subterms(s)) terms.push_back(sub);
  std::vector<EvidenceKey> out;
  for (const Term& term : terms) {
    for (const JFormula& f : collect_subformulas(instance)) {
      out.push_back(EvidenceKey{term, f});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error("demonstration invariant failed: " + what);
}

Demonstration run_z_failure(const TruthValue& x, const Term& t, const Term& s, unsigned atom,
                            XLogic logic, const DemoOptions& opt) {
  if (x.is_zero() || x.is_one() || x > TruthValue::one()) {
    throw std::invalid_argument("x must lie strictly between 0 and 1; the boundary "
                                "behaviour is demo_crisp_recovery's");
  }
  Demonstration demo;
  demo.logic = logic;
  demo.star = logic == XLogic::GLP_TCS;
  demo.name = demo.star ? "z_failure_with_factivity" : "z_failure_no_factivity";
  demo.x = x;
  demo.t = t;
  demo.s = s;
  demo.atom = atom;
  demo.instance = realized_z_instance(t, s, atom);
  demo.checked_class = model_class_of(logic);

  OraclePtr oracle = TheoremhoodOracle::with_standard_stock(logic);
  demo.model = make_x_rooted(x, logic, oracle);

  Rng rng(opt.seed);
  UniverseBuild universe = build_provability_universe(
      *oracle, rng, opt.universe_size, demonstration_seed_pairs(t, s, demo.instance),
      opt.cs_sample_size);
  require(bool(universe), universe.error);
  demo.universe = std::move(universe.pairs);
  demo.cs_sample = std::move(universe.cs_sample);

  demo.class_verdict = check_model_class(demo.model, demo.checked_class, &demo.universe);
  require(bool(demo.class_verdict),
          "class check: " + (demo.class_verdict.violation
                                 ? demo.class_verdict.violation->to_string()
                                 : demo.class_verdict.error));
  demo.cs_verdict = check_cs_respect(demo.model, oracle->cs(), demo.cs_sample);
  require(bool(demo.cs_verdict), "specification respect: " + demo.cs_verdict.reason);

  const JFormula p = JFormula::atom(atom);
  const JFormula t_p = JFormula::holds(t, p);
  const JFormula nn_p = JFormula::negation(JFormula::negation(p));
  if (demo.star) {
    demo.evaluation = eval_star(demo.model, demo.instance);
    demo.intermediates = {
        {"|" + t_p.to_string() + "|*", eval_star(demo.model, t_p)},
        {"|~~" + t_p.to_string() + "|*",
         eval_star(demo.model, JFormula::negation(JFormula::negation(t_p)))},
        {"|" + JFormula::holds(s, nn_p).to_string() + "|*",
         eval_star(demo.model, JFormula::holds(s, nn_p))},
    };
  } else {
    demo.evaluation = eval(demo.model, demo.instance);
    demo.intermediates = {
        {"|" + t_p.to_string() + "|", eval(demo.model, t_p)},
        {"|~~" + t_p.to_string() + "|",
         eval(demo.model, JFormula::negation(JFormula::negation(t_p)))},
        {"|" + JFormula::holds(s, nn_p).to_string() + "|",
         eval(demo.model, JFormula::holds(s, nn_p))},
    };
  }
  require(demo.evaluation == x, "evaluation must equal x exactly");
  demo.conclusion =
      "the realized instance " + demo.instance.to_string() + " evaluates to " +
      x.to_string() + " < 1 in the " + x.to_string() + "-rooted " + to_string(logic) +
      " model, so it is not a theorem; the claim for the supplied terms is checked "
      "here, the fully general statement over all terms and specifications is the "
      "countermodel argument itself";
  return demo;
}

} // namespace

Demonstration demo_z_failure_no_factivity(const TruthValue& x, const Term& t, const Term& s,
                                          unsigned atom, const DemoOptions& opt) {
  return run_z_failure(x, t, s, atom, XLogic::GJ45_TCS, opt);
}

Demonstration demo_z_failure_with_factivity(const TruthValue& x, const Term& t, const Term& s,
                                            unsigned atom, const DemoOptions& opt) {
  return run_z_failure(x, t, s, atom, XLogic::GLP_TCS, opt);
}

Demonstration demo_crisp_recovery(CrispDirection direction, const DemoOptions& opt) {
  (void)opt;
  Demonstration demo;
  demo.logic = XLogic::GJ45_TCS;
  demo.star = false;
  demo.checked_class = ModelClass::GM45;
  OraclePtr oracle = TheoremhoodOracle::with_standard_stock(demo.logic);
  demo.model = crisp_shift(direction, demo.logic, oracle);

  if (direction == CrispDirection::ToOne) {
    demo.name = "crisp_recovery_to_one";
    demo.x = TruthValue::one();
    demo.t = Term::variable(1);
    demo.s = Term::variable(2);
    const std::vector<std::tuple<Term, Term, unsigned>> instances = {
        {Term::variable(1), Term::variable(2), 1},
        {Term::variable(1), Term::variable(1), 2},
        {Term::constant(1), Term::variable(3), 3},
    };
    for (const auto& [t, s, atom] : instances) {
      const JFormula inst = realized_z_instance(t, s, atom);
      const TruthValue v = eval(demo.model, inst);
      demo.intermediates.emplace_back("|" + inst.to_string() + "|", v);
      require(v.is_one(), "instance must evaluate to 1 at the crisp boundary");
    }
    demo.instance = realized_z_instance(Term::variable(1), Term::variable(2), 1);
    demo.evaluation = TruthValue::one();
    demo.conclusion = "with x moved to 1 the model is crisp and every realized "
                      "instance of the scheme evaluates to 1";
  } else {
    demo.name = "crisp_recovery_to_zero";
    demo.x = TruthValue::zero();
    // phi: a theorem (an instance of bot -> p1); r internalizes phi -> ~~phi.
    const JFormula phi = JFormula::implies(JFormula::bottom(), JFormula::atom(1));
    const JProof dn = derive_double_negation_intro(JCalc::GJ45, oracle->cs(), phi);
    const LiftResult internalized = internalize(dn);
    require(bool(internalized), internalized.error);
    const Term r = internalized.term;
    require(oracle->add_theorem(JFormula::holds(r, dn.conclusion()),
                                internalized.proof).empty(),
            "internalized proof must certify");
    // ~~phi, by modus ponens from the double negation introduction.
    JProof nn{JCalc::GJ45, oracle->cs(), dn.steps};
    nn.steps.push_back({phi, StepRule::Axiom, 0, SchemeName::A7});
    nn.steps.push_back({JFormula::negation(JFormula::negation(phi)), StepRule::MP, 0,
                        SchemeName::A1, nn.steps.size() - 2, nn.steps.size() - 1});
    require(oracle->add_theorem(nn.conclusion(), nn).empty(),
            "double negation of the theorem must certify");

    demo.t = Term::constant(1);
    demo.s = Term::app(r, Term::constant(1));
    demo.atom = 1;
    const JFormula nn_phi = JFormula::negation(JFormula::negation(phi));
    // Certified branch: E0(c1, phi) = 1.
    const JFormula certified = JFormula::implies(
        JFormula::negation(JFormula::negation(JFormula::holds(Term::constant(1), phi))),
        JFormula::holds(Term::app(r, Term::constant(1)), nn_phi));
    // Zero branch: E0(x1, phi) = 0, the antecedent collapses.
    const JFormula zero_branch = JFormula::implies(
        JFormula::negation(JFormula::negation(JFormula::holds(Term::variable(1), phi))),
        JFormula::holds(Term::app(r, Term::variable(1)), nn_phi));
    demo.instance = certified;
    const TruthValue v1 = eval(demo.model, certified);
    const TruthValue v2 = eval(demo.model, zero_branch);
    demo.intermediates.emplace_back("|" + certified.to_string() + "|", v1);
    demo.intermediates.emplace_back("|" + zero_branch.to_string() + "|", v2);
    require(v1.is_one(), "certified branch must evaluate to 1");
    require(v2.is_one(), "zero branch must evaluate to 1");
    demo.evaluation = v1;
    demo.conclusion =
        "with x moved to 0, ~~t:phi -> (r*t):~~phi evaluates to 1 with r = " +
        r.to_string() + " obtained by internalization, on both evidence branches";
  }
  demo.class_verdict.ok = true; // no class claim accompanies the crisp shift
  demo.class_verdict.sampled = true;
  demo.cs_verdict.ok = true;
  require(demo.model.is_crisp(), "shifted model must be crisp");
  return demo;
}

GapReport demo_theorem_gap(JCalc jcalc, const DemoOptions& opt) {
  GapReport report;
  report.jcalc = jcalc;
  const auto mc = modal_counterpart(jcalc);
  if (!mc) throw std::invalid_argument(to_string(jcalc) + " has no modal counterpart");
  report.mcalc = *mc;

  const MFormula p = MFormula::atom(1);
  const MFormula z_instance = MFormula::implies(
      MFormula::negation(MFormula::negation(MFormula::box(p))),
      MFormula::box(MFormula::negation(MFormula::negation(p))));
  report.z_proof = MProof{*mc, {{z_instance, StepRule::Axiom, 0, SchemeName::Z}}};
  require(bool(check_proof(report.z_proof)), "modal (Z) proof must check");

  const bool factive = jcalc == JCalc::GJT || jcalc == JCalc::GLP;
  const TruthValue half = TruthValue::ratio(1, 2);
  report.counterexample =
      factive ? demo_z_failure_with_factivity(half, Term::variable(1), Term::variable(2), 1, opt)
              : demo_z_failure_no_factivity(half, Term::variable(1), Term::variable(2), 1, opt);
  report.note =
      "projection containment holds line by line (project-proof); the displayed modal "
      "theorem has no realization of the shape ~~t:p -> s:~~p at the supplied terms, "
      "witnessed by the embedded model, so the containment is strict";
  return report;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

json demonstration_to_json(const Demonstration& d) {
  json j;
  j["kind"] = "demonstration";
  j["name"] = d.name;
  j["x"] = d.x.to_string();
  j["t"] = d.t.to_string();
  j["s"] = d.s.to_string();
  j["atom"] = d.atom;
  j["logic"] = to_string(d.logic);
  j["star"] = d.star;
  j["instance"] = d.instance.to_string();
  j["model"] = write_model_text(d.model);
  j["checked_class"] = to_string(d.checked_class);
  j["class_verdict"] = {{"ok", d.class_verdict.ok},
                        {"sampled", d.class_verdict.sampled},
                        {"checked_instances", d.class_verdict.checked_instances}};
  j["cs_verdict"] = {{"ok", d.cs_verdict.ok}, {"checked", d.cs_verdict.checked}};
  j["universe"] = json::array();
  for (const EvidenceKey& key : d.universe) {
    j["universe"].push_back({{"term", key.term.to_string()},
                             {"formula", key.formula.to_string()}});
  }
  j["cs_sample"] = json::array();
  for (const JFormula& f : d.cs_sample) j["cs_sample"].push_back(f.to_string());
  j["evaluation"] = d.evaluation.to_string();
  j["intermediates"] = json::array();
  for (const auto& [label, value] : d.intermediates) {
    j["intermediates"].push_back({{"label", label}, {"value", value.to_string()}});
  }
  j["conclusion"] = d.conclusion;

  const OraclePtr oracle = [&]() -> OraclePtr {
    if (const auto* xr = std::get_if<XRootedEvidence>(&d.model.evidence)) return xr->oracle;
    if (const auto* cs = std::get_if<CrispShiftedEvidence>(&d.model.evidence)) return cs->oracle;
    return nullptr;
  }();
  if (oracle) j["oracle"] = json::parse(write_oracle_text(*oracle));
  return j;
}

std::string verdict_line(bool ok, const std::string& what) {
  return std::string(ok ? "  [accept] " : "  [reject] ") + what + "\n";
}

} // namespace

std::string Demonstration::to_text() const {
  std::string out;
  out += "demonstration " + name + "\n";
  out += "  x = " + x.to_string() + ", t = " + t.to_string() + ", s = " + s.to_string() +
         ", atom = p" + std::to_string(atom) + "\n";
  out += "  instance: " + instance.to_string() + "\n";
  if (!universe.empty()) {
    out += verdict_line(class_verdict.ok,
                        to_string(checked_class) + " class check (" +
                            std::to_string(class_verdict.checked_instances) +
                            " sampled instances)");
  }
  if (!cs_sample.empty()) {
    out += verdict_line(cs_verdict.ok, "constant specification respect (" +
                                           std::to_string(cs_verdict.checked) + " members)");
  }
  out += "  evaluation" + std::string(star ? " |.|*" : " |.|") + " = " +
         evaluation.to_string() + "\n";
  for (const auto& [label, value] : intermediates) {
    out += "    " + label + " = " + value.to_string() + "\n";
  }
  out += "  conclusion: " + conclusion + "\n";
  return out;
}

std::string Demonstration::to_structured() const {
  return demonstration_to_json(*this).dump(2) + "\n";
}

std::string GapReport::to_text() const {
  std::string out;
  out += "gap report " + to_string(jcalc) + " vs " + to_string(mcalc) + "\n";
  out += "  modal theorem: " + z_proof.conclusion().to_string() + " (proof checks: " +
         (check_proof(z_proof).ok ? "yes" : "NO") + ")\n";
  out += counterexample.to_text();
  out += "  note: " + note + "\n";
  return out;
}

std::string GapReport::to_structured() const {
  json j;
  j["kind"] = "gap_report";
  j["justification_calculus"] = to_string(jcalc);
  j["modal_calculus"] = to_string(mcalc);
  j["modal_proof"] = write_proof_text(z_proof);
  j["note"] = note;
  j["demonstration"] = demonstration_to_json(counterexample);
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Re-checking structured reports

namespace {

void check_into(RecheckResult& out, bool ok, const std::string& what) {
  out.checks.push_back(std::string(ok ? "[ok]   " : "[FAIL] ") + what);
  if (!ok) out.ok = false;
}

void recheck_demonstration(RecheckResult& out, const json& j) {
  const auto logic = parse_xlogic(j.at("logic").get<std::string>());
  if (!logic) {
    check_into(out, false, "known logic");
    return;
  }
  // Certificates are re-validated on load; synthesis stays off so the report
  // must carry everything it uses.
  OraclePtr oracle;
  try {
    oracle = read_oracle_text(j.at("oracle").dump());
  } catch (const std::exception& e) {
    check_into(out, false, std::string("oracle certificates re-validate: ") + e.what());
    return;
  }
  oracle->set_auto_extend(false);
  check_into(out, true, "oracle certificates re-validate (" +
                            std::to_string(oracle->theorem_count()) + " proofs, " +
                            std::to_string(oracle->nontheorem_count()) + " refutations)");

  ParsedModel parsed = read_model_text(j.at("model").get<std::string>());
  if (auto* xr = std::get_if<XRootedEvidence>(&parsed.model.evidence)) xr->oracle = oracle;
  if (auto* cs = std::get_if<CrispShiftedEvidence>(&parsed.model.evidence)) cs->oracle = oracle;

  std::vector<EvidenceKey> universe;
  for (const auto& entry : j.value("universe", json::array())) {
    universe.push_back(EvidenceKey{parse_term(entry.at("term").get<std::string>()),
                                   parse_jformula(entry.at("formula").get<std::string>())});
  }
  std::vector<JFormula> cs_sample;
  for (const auto& entry : j.value("cs_sample", json::array())) {
    cs_sample.push_back(parse_jformula(entry.get<std::string>()));
  }

  const auto cls = parse_model_class(j.at("checked_class").get<std::string>());
  if (!cls) {
    check_into(out, false, "known model class");
    return;
  }
  try {
    if (!universe.empty()) {
      const ClassVerdict v = check_model_class(parsed.model, *cls, &universe);
      check_into(out, v.ok, to_string(*cls) + " class check over " +
                                std::to_string(universe.size()) + " embedded pairs");
    }
    if (!cs_sample.empty()) {
      const CSRespectVerdict v = check_cs_respect(parsed.model, oracle->cs(), cs_sample);
      check_into(out, v.ok, "specification respect over the embedded sample");
    }
    const JFormula instance = parse_jformula(j.at("instance").get<std::string>());
    const bool star = j.value("star", false);
    const TruthValue reported = *TruthValue::parse(j.at("evaluation").get<std::string>());
    const TruthValue recomputed =
        star ? eval_star(parsed.model, instance) : eval(parsed.model, instance);
    check_into(out, recomputed == reported,
               "evaluation recomputes to " + reported.to_string());
    // Intermediate labels have the shape |<formula>| or |<formula>|*;
    // recompute each one.
    std::size_t intermediates_ok = 0;
    bool intermediates_bad = false;
    for (const auto& entry : j.value("intermediates", json::array())) {
      const std::string label = entry.at("label").get<std::string>();
      if (label.size() < 3 || label.front() != '|') continue;
      bool entry_star = false;
      std::string formula_text;
      if (label.back() == '*' && label[label.size() - 2] == '|') {
        entry_star = true;
        formula_text = label.substr(1, label.size() - 3);
      } else if (label.back() == '|') {
        formula_text = label.substr(1, label.size() - 2);
      } else {
        continue;
      }
      const JFormula f = parse_jformula(formula_text);
      const TruthValue want = *TruthValue::parse(entry.at("value").get<std::string>());
      const TruthValue got =
          entry_star ? eval_star(parsed.model, f) : eval(parsed.model, f);
      if (got == want) {
        ++intermediates_ok;
      } else {
        intermediates_bad = true;
      }
    }
    if (intermediates_ok > 0 || intermediates_bad) {
      check_into(out, !intermediates_bad,
                 std::to_string(intermediates_ok) + " intermediate value(s) recompute");
    }
  } catch (const std::exception& e) {
    check_into(out, false, std::string("recheck evaluation: ") + e.what());
  }
}

} // namespace

RecheckResult recheck_structured_report(const std::string& json_text) {
  RecheckResult out;
  out.ok = true;
  json j;
  try {
    j = json::parse(json_text);
  } catch (const std::exception& e) {
    check_into(out, false, std::string("report parses: ") + e.what());
    return out;
  }
  try {
    const std::string kind = j.value("kind", "");
    if (kind == "gap_report") {
      AnyProof proof = read_proof_text(j.at("modal_proof").get<std::string>());
      if (const MProof* mp = std::get_if<MProof>(&proof)) {
        check_into(out, check_proof(*mp).ok, "modal proof checks");
        const auto mc = parse_mcalc(j.at("modal_calculus").get<std::string>());
        check_into(out, mc && mp->calculus == *mc, "modal proof is in the declared calculus");
        const MFormula expected = parse_mformula("~~[]p1 -> []~~p1");
        check_into(out, mp->conclusion() == expected,
                   "modal proof concludes ~~[]p1 -> []~~p1");
      } else {
        check_into(out, false, "modal proof is a modal-calculus proof");
      }
      recheck_demonstration(out, j.at("demonstration"));
    } else if (kind == "demonstration") {
      recheck_demonstration(out, j);
    } else {
      check_into(out, false, "recognized report kind");
    }
  } catch (const std::exception& e) {
    check_into(out, false, std::string("report is well-formed: ") + e.what());
  }
  return out;
}

} // namespace gjl
