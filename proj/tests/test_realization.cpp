#include "doctest.h"

#include "gjl/demos.hpp"
#include "gjl/parse.hpp"

using namespace gjl;

TEST_CASE("z-failure demonstration without factivity") {
  const Demonstration d = demo_z_failure_no_factivity(
      TruthValue::ratio(1, 2), Term::variable(1), Term::variable(2));
  CHECK(d.evaluation == TruthValue::ratio(1, 2));
  CHECK(d.class_verdict.ok);
  CHECK(d.cs_verdict.ok);
  CHECK(d.instance == parse_jformula("~~x1:p1 -> x2:~~p1"));
  REQUIRE(d.intermediates.size() == 3);
  CHECK(d.intermediates[0].second == TruthValue::ratio(1, 2));
  CHECK(d.intermediates[1].second == TruthValue::one());
  CHECK(d.intermediates[2].second == TruthValue::ratio(1, 2));

  CHECK_THROWS_AS(demo_z_failure_no_factivity(TruthValue::one(), Term::variable(1),
                                              Term::variable(2)),
                  std::invalid_argument);
}

TEST_CASE("z-failure demonstration with factivity") {
  const Demonstration d = demo_z_failure_with_factivity(
      TruthValue::ratio(1, 3), Term::variable(5), Term::variable(7));
  CHECK(d.star);
  CHECK(d.checked_class == ModelClass::GM4);
  CHECK(d.evaluation == TruthValue::ratio(1, 3));
  REQUIRE(d.intermediates.size() == 3);
  CHECK(d.intermediates[0].second == TruthValue::ratio(1, 3)); // x (.) x
  CHECK(d.intermediates[1].second == TruthValue::one());
  CHECK(d.intermediates[2].second == TruthValue::ratio(1, 3)); // x (.) 1
}

TEST_CASE("compound terms work in the demonstrations") {
  const Demonstration d = demo_z_failure_no_factivity(
      TruthValue::ratio(9, 10), Term::constant(1), Term::variable(3));
  CHECK(d.evaluation == TruthValue::ratio(9, 10));
}

TEST_CASE("crisp recovery") {
  const Demonstration one = demo_crisp_recovery(CrispDirection::ToOne);
  CHECK(one.evaluation == TruthValue::one());
  REQUIRE(one.intermediates.size() == 3);
  for (const auto& [label, value] : one.intermediates) CHECK(value == TruthValue::one());

  const Demonstration zero = demo_crisp_recovery(CrispDirection::ToZero);
  CHECK(zero.evaluation == TruthValue::one());
  REQUIRE(zero.intermediates.size() == 2);
  for (const auto& [label, value] : zero.intermediates) CHECK(value == TruthValue::one());
  // s is r*t with r the internalized double-negation-introduction term
  CHECK(zero.s.kind() == TermKind::App);
}

TEST_CASE("gap reports for every correspondence") {
  for (const JCalc jc : {JCalc::GJ, JCalc::GJT, JCalc::GJ4, JCalc::GLP, JCalc::GJ45}) {
    DemoOptions opt;
    opt.universe_size = 32;
    const GapReport report = demo_theorem_gap(jc, opt);
    CHECK(report.mcalc == *modal_counterpart(jc));
    CHECK(check_proof(report.z_proof).ok);
    CHECK(report.z_proof.conclusion() == parse_mformula("~~[]p1 -> []~~p1"));
    CHECK(report.counterexample.evaluation == TruthValue::ratio(1, 2));

    const RecheckResult recheck = recheck_structured_report(report.to_structured());
    CHECK(recheck.ok);
  }
  CHECK_THROWS_AS(demo_theorem_gap(JCalc::GJT45), std::invalid_argument);
}

TEST_CASE("structured demonstrations recheck from text alone") {
  const Demonstration d = demo_z_failure_no_factivity(
      TruthValue::ratio(1, 2), Term::variable(1), Term::variable(2));
  const RecheckResult r = recheck_structured_report(d.to_structured());
  CHECK(r.ok);

  // tampering with the reported value must fail the recheck
  std::string tampered = d.to_structured();
  const auto pos = tampered.find("\"evaluation\": \"1/2\"");
  REQUIRE(pos != std::string::npos);
  tampered.replace(pos, 19, "\"evaluation\": \"1/3\"");
  CHECK(!recheck_structured_report(tampered).ok);
}
