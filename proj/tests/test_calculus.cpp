#include "doctest.h"

#include "gjl/calculus.hpp"
#include "gjl/generate.hpp"
#include "gjl/parse.hpp"

using namespace gjl;

TEST_CASE("scheme matching") {
  const auto g4 = match_scheme(SchemeName::G4, parse_jformula("p1 -> (p1 & p1)"));
  REQUIRE(g4);
  CHECK(g4->formulas.at(0) == JFormula::atom(1));

  const auto j = match_scheme(SchemeName::J,
                              parse_jformula("x1:(p1->p2) -> (x2:p1 -> (x1*x2):p2)"));
  REQUIRE(j);
  CHECK(j->terms.at(0) == Term::variable(1));
  CHECK(j->terms.at(1) == Term::variable(2));
  CHECK(j->formulas.at(0) == JFormula::atom(1));
  CHECK(j->formulas.at(1) == JFormula::atom(2));

  CHECK(!match_scheme(SchemeName::G4, parse_jformula("p1 -> (p2 & p2)")));
  CHECK(!match_scheme(SchemeName::J, parse_jformula("x1:(p1->p2) -> (x2:p1 -> (x2*x1):p2)")));
  CHECK(match_scheme(SchemeName::Query,
                     parse_jformula("~x1:p1 -> ?x1:~x1:p1")));
  CHECK(match_scheme(SchemeName::Z, parse_mformula("~~[]p1 -> []~~p1")));
  CHECK(match_scheme(SchemeName::NegIntro, parse_mformula("~[]p1 -> []~[]p1")));
  CHECK(!match_scheme(SchemeName::Z, parse_mformula("~~[]p1 -> []~~p2")));
}

TEST_CASE("matching agrees with instantiation over subtree bindings") {
  // A formula is an instance exactly when some assignment of its own
  // subtrees to the metavariables reproduces it; matching must agree.
  Rng rng(3);
  const std::vector<SchemeName> schemes = {SchemeName::A1, SchemeName::A2, SchemeName::A5b,
                                           SchemeName::G4, SchemeName::J, SchemeName::Plus2,
                                           SchemeName::Bang};
  for (int i = 0; i < 12; ++i) {
    // alternate between arbitrary formulas (mostly non-instances) and
    // genuine axiom instances
    const JFormula f = (i % 2 == 0)
                           ? random_jformula(rng, 3, 2, 1)
                           : random_axiom_instance(rng, schemes[i % schemes.size()]);
    // brute force: instantiate each scheme with every combination of
    // subformulas/subterms of f and compare
    std::vector<JFormula> subs;
    for (const JFormula& s : collect_subformulas(f)) subs.push_back(s);
    std::vector<Term> terms = {Term::constant(1), Term::variable(1)};
    std::vector<std::pair<Term, JFormula>> holds;
    f.collect_holds(holds);
    for (const auto& [t, body] : holds) terms.push_back(t);
    for (const SchemeName s : schemes) {
      bool brute = false;
      for (const JFormula& f0 : subs)
        for (const JFormula& f1 : subs)
          for (const JFormula& f2 : subs)
            for (const Term& t0 : terms)
              for (const Term& t1 : terms) {
                Rng fixed(0);
                (void)fixed;
                // rebuild the instance by hand
                JFormula inst = JFormula::bottom();
                using F = JFormula;
                switch (s) {
                  case SchemeName::A1:
                    inst = F::implies(F::implies(f0, f1),
                                      F::implies(F::implies(f1, f2), F::implies(f0, f2)));
                    break;
                  case SchemeName::A2:
                    inst = F::implies(F::conj(f0, f1), f0);
                    break;
                  case SchemeName::A5b:
                    inst = F::implies(F::implies(F::conj(f0, f1), f2),
                                      F::implies(f0, F::implies(f1, f2)));
                    break;
                  case SchemeName::G4:
                    inst = F::implies(f0, F::conj(f0, f0));
                    break;
                  case SchemeName::J:
                    inst = F::implies(
                        F::holds(t0, F::implies(f0, f1)),
                        F::implies(F::holds(t1, f0), F::holds(Term::app(t0, t1), f1)));
                    break;
                  case SchemeName::Plus2:
                    inst = F::implies(F::holds(t1, f0), F::holds(Term::sum(t0, t1), f0));
                    break;
                  case SchemeName::Bang:
                    inst = F::implies(F::holds(t0, f0),
                                      F::holds(Term::bang(t0), F::holds(t0, f0)));
                    break;
                  default:
                    break;
                }
                if (inst == f) brute = true;
              }
      CHECK(match_scheme(s, f).has_value() == brute);
    }
  }
}

TEST_CASE("total constant specification") {
  const ConstantSpec tcs = ConstantSpec::total(JCalc::GJ45);
  CHECK(tcs.contains(parse_jformula("c1:(bot -> p1)")));
  CHECK(tcs.contains(parse_jformula("c7:c3:c1:(bot -> p1)")));
  CHECK(!tcs.contains(parse_jformula("c1:p1")));          // core not an axiom
  CHECK(!tcs.contains(parse_jformula("x1:(bot -> p1)"))); // variable head
  CHECK(!tcs.contains(parse_jformula("c1:(x1:p1 -> p1)"))); // (F) is not in GJ45
  CHECK(ConstantSpec::total(JCalc::GJT45).contains(parse_jformula("c1:(x1:p1 -> p1)")));
  CHECK(*tcs.constant_for_axiom(parse_jformula("bot -> p1")) == 1);
  CHECK(*tcs.chain_constant(parse_jformula("c5:(bot -> p1)")) == 2);
  CHECK(*tcs.chain_constant(parse_jformula("c5:c9:(bot -> p1)")) == 3);
}

TEST_CASE("finite constant specification validation") {
  const JFormula ax = parse_jformula("bot -> p1");
  auto ok = ConstantSpec::finite(
      JCalc::GJ, {JFormula::holds(Term::constant(1), ax),
                  JFormula::holds(Term::constant(2), JFormula::holds(Term::constant(1), ax))});
  REQUIRE(ok.cs);
  CHECK(ok.cs->contains(JFormula::holds(Term::constant(1), ax)));
  CHECK(!ok.cs->contains(JFormula::holds(Term::constant(3), ax)));

  // missing the inner chain breaks downward closure
  auto closure = ConstantSpec::finite(
      JCalc::GJ, {JFormula::holds(Term::constant(2), JFormula::holds(Term::constant(1), ax))});
  CHECK(!closure.cs);
  CHECK(closure.error.find("downward closure") != std::string::npos);

  auto shape = ConstantSpec::finite(JCalc::GJ, {parse_jformula("c1:p1")});
  CHECK(!shape.cs);
}

TEST_CASE("proof checking accepts and rejects") {
  const ConstantSpec empty_cs = ConstantSpec::finite(JCalc::GJ, {}).cs.value();

  JProof a7{JCalc::GJ, empty_cs, {{parse_jformula("bot -> p1"), StepRule::Axiom, 0,
                                   SchemeName::A7}}};
  CHECK(check_proof(a7).ok);

  // (F) is not available in GJ
  JProof f_in_gj{JCalc::GJ, empty_cs, {{parse_jformula("x1:p1 -> p1"), StepRule::Axiom, 0,
                                        SchemeName::F}}};
  const auto fv = check_proof(f_in_gj);
  CHECK(!fv.ok);
  CHECK(fv.line == 1);
  CHECK(fv.reason.find("not in calculus") != std::string::npos);

  // N[] applied to a line with assumptions
  MProof bad_nbox{MCalc::GK, {}};
  bad_nbox.steps.push_back({parse_mformula("p1"), StepRule::Assume, 1});
  bad_nbox.steps.push_back({parse_mformula("[]p1"), StepRule::NBox, 0, SchemeName::A1, 0});
  const auto nv = check_proof(bad_nbox);
  CHECK(!nv.ok);
  CHECK(nv.reason.find("pure theorems") != std::string::npos);

  // modus ponens bookkeeping: assumption sets accumulate
  JProof mp{JCalc::GJ, empty_cs, {}};
  mp.steps.push_back({parse_jformula("p1 -> p2"), StepRule::Assume, 1});
  mp.steps.push_back({parse_jformula("p1"), StepRule::Assume, 2});
  mp.steps.push_back({parse_jformula("p2"), StepRule::MP, 0, SchemeName::A1, 0, 1});
  const auto mv = check_proof(mp);
  CHECK(mv.ok);
  CHECK(mv.assumption_sets[2] == std::vector<unsigned>{1, 2});

  // mismatched modus ponens
  JProof bad_mp{JCalc::GJ, empty_cs, {}};
  bad_mp.steps.push_back({parse_jformula("p1 -> p2"), StepRule::Assume, 1});
  bad_mp.steps.push_back({parse_jformula("p3"), StepRule::Assume, 2});
  bad_mp.steps.push_back({parse_jformula("p2"), StepRule::MP, 0, SchemeName::A1, 0, 1});
  CHECK(!check_proof(bad_mp).ok);

  // reused assumption index with a different formula
  JProof bad_assume{JCalc::GJ, empty_cs, {}};
  bad_assume.steps.push_back({parse_jformula("p1"), StepRule::Assume, 1});
  bad_assume.steps.push_back({parse_jformula("p2"), StepRule::Assume, 1});
  CHECK(!check_proof(bad_assume).ok);

  // CS rule against the specification
  JProof cs_line{JCalc::GJ45, ConstantSpec::total(JCalc::GJ45),
                 {{parse_jformula("c1:(bot -> p1)"), StepRule::CS}}};
  CHECK(check_proof(cs_line).ok);
  JProof bad_cs{JCalc::GJ45, empty_cs, {{parse_jformula("c1:(bot -> p1)"), StepRule::CS}}};
  CHECK(!check_proof(bad_cs).ok);
}

TEST_CASE("lifting base cases") {
  const ConstantSpec tcs = ConstantSpec::total(JCalc::GJ45);

  // single assumption: t:psi from t:psi
  JProof assume{JCalc::GJ45, tcs, {{parse_jformula("p1"), StepRule::Assume, 1}}};
  const LiftResult lifted = lift(assume, {Term::variable(1)});
  REQUIRE(bool(lifted));
  CHECK(lifted.term == Term::variable(1));
  CHECK(lifted.proof.conclusion() == parse_jformula("x1:p1"));
  CHECK(check_proof(lifted.proof).ok);

  // axiom line: constant via the CS rule
  JProof axiom{JCalc::GJ45, tcs, {{parse_jformula("p1 -> (p1 & p1)"), StepRule::Axiom, 0,
                                   SchemeName::G4}}};
  const LiftResult c = internalize(axiom);
  REQUIRE(bool(c));
  CHECK(c.term == Term::constant(1));
  CHECK(c.proof.steps.size() == 1);
  CHECK(c.proof.conclusion() == parse_jformula("c1:(p1 -> (p1 & p1))"));
  CHECK(check_proof(c.proof).ok);

  // CS line: next chain constant
  JProof cs_line{JCalc::GJ45, tcs, {{parse_jformula("c1:(bot -> p1)"), StepRule::CS}}};
  const LiftResult chained = internalize(cs_line);
  REQUIRE(bool(chained));
  CHECK(chained.term == Term::constant(2));
  CHECK(chained.proof.conclusion() == parse_jformula("c2:c1:(bot -> p1)"));
}

TEST_CASE("lifting modus ponens") {
  const ConstantSpec tcs = ConstantSpec::total(JCalc::GJ45);
  JProof mp{JCalc::GJ45, tcs, {}};
  mp.steps.push_back({parse_jformula("p1 -> p2"), StepRule::Assume, 1});
  mp.steps.push_back({parse_jformula("p1"), StepRule::Assume, 2});
  mp.steps.push_back({parse_jformula("p2"), StepRule::MP, 0, SchemeName::A1, 0, 1});
  const LiftResult lifted = lift(mp, {Term::variable(1), Term::variable(2)});
  REQUIRE(bool(lifted));
  CHECK(lifted.term == Term::app(Term::variable(1), Term::variable(2)));
  CHECK(lifted.proof.conclusion() == parse_jformula("(x1*x2):p2"));
  const auto verdict = check_proof(lifted.proof);
  CHECK(verdict.ok);
  // conclusion depends on both justified assumptions
  CHECK(verdict.assumption_sets.back() == std::vector<unsigned>{1, 2});
  CHECK(verdict.j_assumptions.at(1) == parse_jformula("x1:(p1 -> p2)"));
  CHECK(verdict.j_assumptions.at(2) == parse_jformula("x2:p1"));
}

TEST_CASE("lifting under a finite constant specification") {
  const JFormula g4 = parse_jformula("p1 -> (p1 & p1)");
  auto fcs = ConstantSpec::finite(JCalc::GJ, {JFormula::holds(Term::constant(5), g4)});
  REQUIRE(fcs.cs);
  JProof axiom{JCalc::GJ, *fcs.cs, {{g4, StepRule::Axiom, 0, SchemeName::G4}}};
  const LiftResult lifted = internalize(axiom);
  REQUIRE(bool(lifted));
  CHECK(lifted.term == Term::constant(5));
  CHECK(check_proof(lifted.proof).ok);

  // a different axiom instance has no covering constant
  JProof other{JCalc::GJ, *fcs.cs,
               {{parse_jformula("p2 -> (p2 & p2)"), StepRule::Axiom, 0, SchemeName::G4}}};
  CHECK(!internalize(other));
}

TEST_CASE("negative introspection is GK45-only") {
  const MFormula neg_intro = parse_mformula("~[]p1 -> []~[]p1");
  MProof in_gk45{MCalc::GK45, {{neg_intro, StepRule::Axiom, 0, SchemeName::NegIntro}}};
  CHECK(check_proof(in_gk45).ok);
  MProof in_gk{MCalc::GK, {{neg_intro, StepRule::Axiom, 0, SchemeName::NegIntro}}};
  const auto v = check_proof(in_gk);
  CHECK(!v.ok);
  CHECK(v.reason.find("not in calculus") != std::string::npos);
}

TEST_CASE("internalization rejects assumptions and missing constants") {
  const ConstantSpec tcs = ConstantSpec::total(JCalc::GJ45);
  JProof assume{JCalc::GJ45, tcs, {{parse_jformula("p1"), StepRule::Assume, 1}}};
  CHECK(!internalize(assume));

  const ConstantSpec empty_cs = ConstantSpec::finite(JCalc::GJ, {}).cs.value();
  JProof axiom{JCalc::GJ, empty_cs, {{parse_jformula("bot -> p1"), StepRule::Axiom, 0,
                                      SchemeName::A7}}};
  const LiftResult missing = internalize(axiom);
  CHECK(!missing);
  CHECK(missing.error.find("no constant") != std::string::npos);
}

TEST_CASE("double negation introduction template") {
  const ConstantSpec tcs = ConstantSpec::total(JCalc::GJ45);
  for (const char* text : {"p1", "bot -> p1", "x1:p1 & p2"}) {
    const JFormula phi = parse_jformula(text);
    const JProof proof = derive_double_negation_intro(JCalc::GJ45, tcs, phi);
    CHECK(check_proof(proof).ok);
    CHECK(proof.conclusion() ==
          JFormula::implies(phi, JFormula::negation(JFormula::negation(phi))));
  }
}

TEST_CASE("lift round trip on random proofs") {
  Rng rng(21);
  const ConstantSpec tcs = ConstantSpec::total(JCalc::GJ45);
  for (int i = 0; i < 30; ++i) {
    const JProof input = random_proof(rng, JCalc::GJ45, tcs, 6, 3);
    REQUIRE(check_proof(input).ok);
    const LiftResult lifted = lift(
        input, {Term::variable(1), Term::variable(2), Term::variable(3)});
    REQUIRE(bool(lifted));
    const auto verdict = check_proof(lifted.proof);
    CHECK(verdict.ok);
    CHECK(lifted.proof.conclusion() == JFormula::holds(lifted.term, input.conclusion()));
  }
}

TEST_CASE("proof projection examples") {
  // factivity instance: t:p1 -> p1 in GJT maps to []p1 -> p1 in GT
  JProof f_proof{JCalc::GJT, ConstantSpec::finite(JCalc::GJT, {}).cs.value(),
                 {{parse_jformula("x1:p1 -> p1"), StepRule::Axiom, 0, SchemeName::F}}};
  const ProjectionResult gt = project_proof(f_proof);
  REQUIRE(bool(gt));
  CHECK(gt.proof->calculus == MCalc::GT);
  CHECK(gt.proof->conclusion() == parse_mformula("[]p1 -> p1"));
  CHECK(check_proof(*gt.proof).ok);

  // a (+) instance projects to an inline identity derivation
  JProof plus{JCalc::GJ, ConstantSpec::finite(JCalc::GJ, {}).cs.value(),
              {{parse_jformula("x1:p1 -> (x1+x2):p1"), StepRule::Axiom, 0, SchemeName::Plus1}}};
  const ProjectionResult gk = project_proof(plus);
  REQUIRE(bool(gk));
  CHECK(gk.proof->conclusion() == parse_mformula("[]p1 -> []p1"));
  CHECK(gk.proof->steps.size() == 5);
  CHECK(check_proof(*gk.proof).ok);

  // a CS line becomes N[] over the projected axiom
  JProof cs_line{JCalc::GJ45, ConstantSpec::total(JCalc::GJ45),
                 {{parse_jformula("c2:c1:(bot -> p1)"), StepRule::CS}}};
  const ProjectionResult gk45 = project_proof(cs_line);
  REQUIRE(bool(gk45));
  CHECK(gk45.proof->calculus == MCalc::GK45);
  CHECK(gk45.proof->conclusion() == parse_mformula("[][](bot -> p1)"));
  CHECK(check_proof(*gk45.proof).ok);

  // no modal counterpart for GJT45
  JProof t45{JCalc::GJT45, ConstantSpec::total(JCalc::GJT45),
             {{parse_jformula("bot -> p1"), StepRule::Axiom, 0, SchemeName::A7}}};
  CHECK(!project_proof(t45));
}

TEST_CASE("projection of random proofs checks and concludes the projection") {
  Rng rng(31);
  const std::vector<JCalc> calcs = {JCalc::GJ, JCalc::GJT, JCalc::GJ4, JCalc::GLP,
                                    JCalc::GJ45};
  for (int i = 0; i < 40; ++i) {
    const JCalc calc = calcs[i % calcs.size()];
    const JProof input = random_proof(rng, calc, ConstantSpec::total(calc), 7, 2);
    REQUIRE(check_proof(input).ok);
    const ProjectionResult projected = project_proof(input);
    REQUIRE(bool(projected));
    CHECK(check_proof(*projected.proof).ok);
    CHECK(projected.proof->conclusion() == forgetful_projection(input.conclusion()));
  }
}
