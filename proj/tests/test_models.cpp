#include "doctest.h"

#include "gjl/generate.hpp"
#include "gjl/io.hpp"
#include "gjl/models.hpp"
#include "gjl/parse.hpp"

using namespace gjl;

namespace {

Model finite_model(TruthValue default_e, TruthValue default_E,
                   std::vector<std::pair<EvidenceKey, TruthValue>> overrides = {}) {
  FiniteEvidence ev{std::move(default_E), {}};
  for (auto& [k, v] : overrides) ev.overrides.emplace(std::move(k), std::move(v));
  return Model{std::move(ev), Valuation{std::move(default_e)}};
}

} // namespace

TEST_CASE("evaluation clauses") {
  Model m = finite_model(TruthValue::ratio(1, 2), TruthValue::ratio(1, 2));
  m.valuation.set(1, TruthValue::ratio(1, 3));
  m.valuation.set(2, TruthValue::ratio(2, 3));
  CHECK(eval(m, parse_jformula("bot")) == TruthValue::zero());
  CHECK(eval(m, parse_jformula("p1 & p2")) == TruthValue::ratio(1, 3));
  CHECK(eval(m, parse_jformula("p2 -> p1")) == TruthValue::ratio(1, 3));
  CHECK(eval(m, parse_jformula("p1 -> p2")) == TruthValue::one());
  CHECK(eval(m, parse_jformula("~p1")) == TruthValue::zero());
  CHECK(eval(m, parse_jformula("x1:p1")) == TruthValue::ratio(1, 2));
}

TEST_CASE("alternative evaluation") {
  // |t:phi|* = E(t,phi) (x) |phi|*
  Model m = finite_model(TruthValue::ratio(1, 2), TruthValue::one());
  CHECK(eval_star(m, parse_jformula("x1:p1")) == TruthValue::ratio(1, 2));
  CHECK(eval_star(m, parse_jformula("x1:bot")) == TruthValue::zero());
  CHECK(eval(m, parse_jformula("x1:bot")) == TruthValue::one()); // the two differ here
}

TEST_CASE("set evaluation") {
  Model m = finite_model(TruthValue::one(), TruthValue::one());
  m.valuation.set(1, TruthValue::ratio(1, 3));
  m.valuation.set(2, TruthValue::ratio(2, 3));
  CHECK(eval_set(m, {}, false) == TruthValue::one());
  CHECK(eval_set(m, {parse_jformula("p1"), parse_jformula("p2")}, false) ==
        TruthValue::ratio(1, 3));
  CHECK(eval_set(m, {parse_jformula("bot")}, false) == TruthValue::zero());
}

TEST_CASE("exact class checks") {
  // all-ones evidence is in every class without factivity
  Model ones{AllOnesEvidence{}, Valuation{TruthValue::ratio(1, 2)}};
  CHECK(check_model_class(ones, ModelClass::GM45).ok);
  CHECK(check_model_class(ones, ModelClass::GM).ok);
  CHECK(!check_model_class(ones, ModelClass::GMT).ok); // E(t,bot)=1 > 0

  // the application condition rejects a lowered app-headed pair
  Model app = finite_model(TruthValue::ratio(1, 2), TruthValue::ratio(1, 2),
                           {{EvidenceKey{parse_term("x1*x2"), JFormula::atom(2)},
                             TruthValue::ratio(1, 4)}});
  const ClassVerdict v = check_model_class(app, ModelClass::GM);
  REQUIRE(!v.ok);
  CHECK(v.violation->condition == "(i)");
  CHECK(v.violation->t == Term::variable(1));
  CHECK(v.violation->s == Term::variable(2));
  CHECK(v.violation->psi == JFormula::atom(2));
  CHECK(v.violation->lhs == TruthValue::ratio(1, 2));
  CHECK(v.violation->rhs == TruthValue::ratio(1, 4));

  // an override above the default breaks the sum condition
  Model above = finite_model(TruthValue::one(), TruthValue::ratio(1, 2),
                             {{EvidenceKey{parse_term("x1"), JFormula::atom(1)},
                               TruthValue::one()}});
  const ClassVerdict sum = check_model_class(above, ModelClass::GM);
  REQUIRE(!sum.ok);
  CHECK(sum.violation->condition == "(ii)");

  // bang condition
  Model bang = finite_model(TruthValue::one(), TruthValue::one(),
                            {{EvidenceKey{parse_term("!x1"), parse_jformula("x1:p1")},
                              TruthValue::ratio(1, 2)}});
  CHECK(check_model_class(bang, ModelClass::GM).ok);
  const ClassVerdict bv = check_model_class(bang, ModelClass::GM4);
  REQUIRE(!bv.ok);
  CHECK(bv.violation->condition == "(!)");

  // query condition: zero default is unsatisfiable
  Model zero = finite_model(TruthValue::one(), TruthValue::zero());
  const ClassVerdict qv = check_model_class(zero, ModelClass::GM45);
  REQUIRE(!qv.ok);
  CHECK(qv.violation->condition == "(?)");
  // but a positive uniform default passes
  Model half = finite_model(TruthValue::one(), TruthValue::ratio(1, 2));
  CHECK(check_model_class(half, ModelClass::GM45).ok);

  // factivity forces default 0
  Model fac = finite_model(TruthValue::one(), TruthValue::ratio(1, 2));
  const ClassVerdict fv = check_model_class(fac, ModelClass::GMT);
  REQUIRE(!fv.ok);
  CHECK(fv.violation->condition == "(T)");
  CHECK(fv.violation->phi == JFormula::bottom());
  Model fac0 = finite_model(TruthValue::one(), TruthValue::zero());
  CHECK(check_model_class(fac0, ModelClass::GMT).ok);
}

TEST_CASE("violation witnesses violate their condition directly") {
  // brute-force re-evaluation of the reported instantiation
  Rng rng(17);
  std::size_t rejected = 0;
  for (int i = 0; i < 300; ++i) {
    FiniteEvidence ev{random_truth_value(rng), {}};
    const std::size_t n = rng.below(4);
    for (std::size_t k = 0; k < n; ++k) {
      ev.overrides.emplace(EvidenceKey{random_term(rng, 2), random_jformula(rng, 2, 2, 1)},
                           random_truth_value(rng));
    }
    Model m{std::move(ev), random_valuation(rng)};
    for (const ModelClass cls :
         {ModelClass::GM, ModelClass::GM4, ModelClass::GM45, ModelClass::GMT}) {
      const ClassVerdict v = check_model_class(m, cls);
      if (v.ok) continue;
      ++rejected;
      REQUIRE(v.violation);
      const ClassViolation& w = *v.violation;
      if (w.condition == "(i)") {
        const TruthValue lhs =
            tnorm(evidence_lookup(m, w.t, JFormula::implies(w.phi, *w.psi)),
                  evidence_lookup(m, *w.s, w.phi));
        CHECK(lhs == w.lhs);
        CHECK(evidence_lookup(m, Term::app(w.t, *w.s), *w.psi) == w.rhs);
        CHECK(lhs > w.rhs);
      } else if (w.condition == "(ii)") {
        const TruthValue lhs = tconorm(evidence_lookup(m, w.t, w.phi),
                                       evidence_lookup(m, *w.s, w.phi));
        CHECK(lhs > evidence_lookup(m, Term::sum(w.t, *w.s), w.phi));
      } else if (w.condition == "(!)") {
        CHECK(evidence_lookup(m, w.t, w.phi) >
              evidence_lookup(m, Term::bang(w.t), JFormula::holds(w.t, w.phi)));
      } else if (w.condition == "(?)") {
        CHECK(wneg(evidence_lookup(m, w.t, w.phi)) >
              evidence_lookup(m, Term::query(w.t),
                              JFormula::negation(JFormula::holds(w.t, w.phi))));
      } else if (w.condition == "(T)") {
        CHECK(evidence_lookup(m, w.t, w.phi) > eval(m, w.phi));
      }
    }
  }
  CHECK(rejected > 50); // the generator must actually exercise rejections
}

TEST_CASE("constant specification respect") {
  const ConstantSpec tcs = ConstantSpec::total(JCalc::GJ45);
  Model ones{AllOnesEvidence{}, Valuation{TruthValue::one()}};
  CHECK(check_cs_respect(ones, tcs, {}).ok);

  // default 1/2 against a finite specification: the member sits at 1/2
  const auto fcs = ConstantSpec::finite(
      JCalc::GJ, {parse_jformula("c1:(p1 -> (p1 & p1))")});
  REQUIRE(fcs.cs);
  Model half = finite_model(TruthValue::one(), TruthValue::ratio(1, 2));
  const CSRespectVerdict r = check_cs_respect(half, *fcs.cs, {});
  CHECK(!r.ok);

  // default 1 with a lowered member override fails against the total spec
  Model lowered = finite_model(TruthValue::one(), TruthValue::one(),
                               {{EvidenceKey{Term::constant(1), parse_jformula("bot -> p1")},
                                 TruthValue::ratio(1, 2)}});
  CHECK(!check_cs_respect(lowered, tcs, {}).ok);
  // lowering a non-member is fine
  Model fine = finite_model(TruthValue::one(), TruthValue::one(),
                            {{EvidenceKey{Term::variable(1), parse_jformula("bot -> p1")},
                              TruthValue::ratio(1, 2)}});
  CHECK(check_cs_respect(fine, tcs, {}).ok);
}

TEST_CASE("x-rooted model basics") {
  CHECK_THROWS_AS(make_x_rooted(TruthValue::one(), XLogic::GJ45_TCS, nullptr),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_x_rooted(TruthValue::zero(), XLogic::GJ45_TCS, nullptr),
                  std::invalid_argument);

  OraclePtr oracle = TheoremhoodOracle::with_standard_stock(XLogic::GJ45_TCS);
  const Model m = make_x_rooted(TruthValue::ratio(1, 2), XLogic::GJ45_TCS, oracle);
  CHECK(m.valuation(1) == TruthValue::ratio(1, 2));
  CHECK(m.valuation(99) == TruthValue::ratio(1, 2));
  CHECK(!m.is_crisp());

  // the paper's pivotal values
  CHECK(eval(m, parse_jformula("~~x1:p1 -> x2:~~p1")) == TruthValue::ratio(1, 2));
  CHECK(eval(m, parse_jformula("x1:p1")) == TruthValue::ratio(1, 2));
  CHECK(eval(m, parse_jformula("c1:(bot -> p1)")) == TruthValue::one());
  CHECK(eval(m, parse_jformula("bot")) == TruthValue::zero());
}

TEST_CASE("x-rooted evaluations are three-valued") {
  OraclePtr oracle = TheoremhoodOracle::with_standard_stock(XLogic::GJ45_TCS);
  const TruthValue x = TruthValue::ratio(1, 3);
  const Model m = make_x_rooted(x, XLogic::GJ45_TCS, oracle);
  Rng rng(23);
  std::size_t decided = 0;
  for (int i = 0; i < 200; ++i) {
    const JFormula phi = random_jformula(rng, 4, 2, 1);
    try {
      const TruthValue v = eval(m, phi);
      ++decided;
      CHECK((v.is_zero() || v.is_one() || v == x));
    } catch (const UndecidedError&) {
      // sampling may hit pairs outside the certificate reach; that is an
      // error by design, not a wrong value
    }
  }
  CHECK(decided > 150);
}

TEST_CASE("sampled class check of the x-rooted model") {
  OraclePtr oracle = TheoremhoodOracle::with_standard_stock(XLogic::GJ45_TCS);
  const Model m = make_x_rooted(TruthValue::ratio(1, 2), XLogic::GJ45_TCS, oracle);
  Rng rng(5);
  const UniverseBuild build = build_provability_universe(*oracle, rng, 50, {});
  REQUIRE(bool(build));
  REQUIRE(build.pairs.size() >= 50);
  const ClassVerdict v = check_model_class(m, ModelClass::GM45, &build.pairs);
  CHECK(v.ok);
  CHECK(v.sampled);
  const CSRespectVerdict r = check_cs_respect(m, oracle->cs(), build.cs_sample);
  CHECK(r.ok);
  CHECK(r.checked == build.cs_sample.size());
}

TEST_CASE("no finitely-described model satisfies factivity plus negative introspection") {
  // factivity pins the default at 0 (witness (t, bot)); at default 0 the
  // query condition needs value 1 on infinitely many pairs
  Rng rng(61);
  for (int i = 0; i < 300; ++i) {
    FiniteEvidence ev{random_truth_value(rng), {}};
    const std::size_t n = rng.below(4);
    for (std::size_t k = 0; k < n; ++k) {
      ev.overrides.emplace(EvidenceKey{random_term(rng, 2), random_jformula(rng, 2, 2, 1)},
                           random_truth_value(rng));
    }
    Model m{std::move(ev), random_valuation(rng)};
    const ClassVerdict v = check_model_class(m, ModelClass::GMT45);
    CHECK(!v.ok);
    CHECK((v.violation->condition == "(T)" || v.violation->condition == "(?)" ||
           v.violation->condition == "(i)" || v.violation->condition == "(ii)" ||
           v.violation->condition == "(!)"));
  }
  Model ones{AllOnesEvidence{}, Valuation{TruthValue::one()}};
  CHECK(!check_model_class(ones, ModelClass::GMT45).ok);
  CHECK(!random_model_for_class(rng, ModelClass::GMT45).has_value());
}

TEST_CASE("the x-rooted model is never factive") {
  // E_x(t, bot) = x > 0 = |bot|, so the GMT check must reject
  OraclePtr oracle = TheoremhoodOracle::with_standard_stock(XLogic::GJ45_TCS);
  const Model m = make_x_rooted(TruthValue::ratio(1, 2), XLogic::GJ45_TCS, oracle);
  const std::vector<EvidenceKey> universe = {
      EvidenceKey{Term::variable(1), JFormula::bottom()}};
  const ClassVerdict v = check_model_class(m, ModelClass::GMT, &universe);
  REQUIRE(!v.ok);
  CHECK(v.violation->condition == "(T)");
  CHECK(v.violation->phi == JFormula::bottom());
  CHECK(v.violation->lhs == TruthValue::ratio(1, 2));
  CHECK(v.violation->rhs == TruthValue::zero());
}

TEST_CASE("exact accept is sound under random instantiation") {
  // fuzz the other direction of the decision procedure: an accepted model
  // must survive arbitrary sampled instantiations of every condition
  Rng rng(59);
  std::size_t accepted = 0;
  for (int i = 0; i < 200; ++i) {
    const auto m = random_model_for_class(rng, ModelClass::GM45);
    if (!m) continue;
    ++accepted;
    for (int k = 0; k < 40; ++k) {
      const Term t = random_term(rng, 3);
      const Term s = random_term(rng, 3);
      const JFormula phi = random_jformula(rng, 3, 2, 2);
      const JFormula psi = random_jformula(rng, 3, 2, 2);
      CHECK(tnorm(evidence_lookup(*m, t, JFormula::implies(phi, psi)),
                  evidence_lookup(*m, s, phi)) <=
            evidence_lookup(*m, Term::app(t, s), psi));
      CHECK(tconorm(evidence_lookup(*m, t, phi), evidence_lookup(*m, s, phi)) <=
            evidence_lookup(*m, Term::sum(t, s), phi));
      CHECK(evidence_lookup(*m, t, phi) <=
            evidence_lookup(*m, Term::bang(t), JFormula::holds(t, phi)));
      CHECK(wneg(evidence_lookup(*m, t, phi)) <=
            evidence_lookup(*m, Term::query(t),
                            JFormula::negation(JFormula::holds(t, phi))));
    }
  }
  CHECK(accepted >= 150);
}

TEST_CASE("set evaluation under the alternative semantics") {
  Model m = finite_model(TruthValue::ratio(2, 3), TruthValue::ratio(1, 2));
  // |x1:p1|* = 1/2 (x) 2/3 = 1/2 while |p1|* = 2/3
  CHECK(eval_set(m, {parse_jformula("x1:p1"), parse_jformula("p1")}, true) ==
        TruthValue::ratio(1, 2));
  CHECK(eval_set(m, {}, true) == TruthValue::one());
}

TEST_CASE("crisp shift") {
  OraclePtr oracle = TheoremhoodOracle::with_standard_stock(XLogic::GJ45_TCS);
  const Model one = crisp_shift(CrispDirection::ToOne, XLogic::GJ45_TCS, oracle);
  CHECK(one.is_crisp());
  CHECK(eval(one, parse_jformula("~~x1:p1 -> x2:~~p1")) == TruthValue::one());

  const Model zero = crisp_shift(CrispDirection::ToZero, XLogic::GJ45_TCS, oracle);
  CHECK(zero.is_crisp());
  CHECK(eval(zero, parse_jformula("x1:p1")) == TruthValue::zero());
  CHECK(eval(zero, parse_jformula("c1:(bot -> p1)")) == TruthValue::one());
}

TEST_CASE("normal_to_pre requires factivity and preserves evaluations") {
  Model fac = finite_model(TruthValue::ratio(1, 2), TruthValue::zero());
  const TransformResult ok = normal_to_pre(fac);
  REQUIRE(bool(ok));
  Rng rng(29);
  for (int i = 0; i < 100; ++i) {
    const JFormula phi = random_jformula(rng, 5, 3, 1);
    CHECK(eval(fac, phi) == eval_star(*ok.model, phi));
  }
  CHECK(eval(fac, parse_jformula("x1:p1")) == TruthValue::zero());

  Model nonfac = finite_model(TruthValue::one(), TruthValue::ratio(1, 2));
  CHECK(!normal_to_pre(nonfac));
}

TEST_CASE("pre_to_normal materializes the starred evidence") {
  // E(x1, bot) = 1 becomes 0
  Model n = finite_model(TruthValue::ratio(1, 2), TruthValue::one());
  const std::vector<JFormula> universe = {parse_jformula("x1:bot"),
                                          parse_jformula("x1:p1 -> x2:x1:p1")};
  const TransformResult t = pre_to_normal(n, universe);
  REQUIRE(bool(t));
  CHECK(evidence_lookup(*t.model, parse_term("x1"), JFormula::bottom()) ==
        TruthValue::zero());
  // agreement on the supplied universe
  for (const JFormula& phi : universe) {
    CHECK(eval(*t.model, phi) == eval_star(n, phi));
  }
  // the transformed model is factive on its materialized keys
  const auto& fin = std::get<FiniteEvidence>(t.model->evidence);
  CHECK(fin.default_value == TruthValue::zero());
  for (const auto& [key, value] : fin.overrides) {
    CHECK(value <= eval(*t.model, key.formula));
  }
}

TEST_CASE("pre_to_normal carries the bang clause on materialized pairs") {
  Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    const auto n = random_model_for_class(rng, ModelClass::GM4);
    REQUIRE(n);
    std::vector<JFormula> universe;
    for (int k = 0; k < 3; ++k) universe.push_back(random_jformula(rng, 4, 3, 1));
    const TransformResult t = pre_to_normal(*n, universe);
    REQUIRE(bool(t));
    const auto& fin = std::get<FiniteEvidence>(t.model->evidence);
    for (const auto& [key, value] : fin.overrides) {
      // E'(t,phi) <= E'(!t, t:phi), both sides by the defining identity
      const TruthValue rhs =
          tnorm(evidence_lookup(*n, Term::bang(key.term), JFormula::holds(key.term, key.formula)),
                eval_star(*n, JFormula::holds(key.term, key.formula)));
      CHECK(value <= rhs);
    }
  }
}

TEST_CASE("evaluator equivalence on factive models") {
  Rng rng(37);
  for (int i = 0; i < 100; ++i) {
    const auto m = random_model_for_class(rng, ModelClass::GMT);
    REQUIRE(m);
    for (int k = 0; k < 5; ++k) {
      const JFormula phi = random_jformula(rng, 5, 3, 1);
      CHECK(eval(*m, phi) == eval_star(*m, phi));
    }
  }
}

TEST_CASE("pre-model equivalence through the transformation") {
  Rng rng(43);
  for (int i = 0; i < 100; ++i) {
    const auto cls = (i % 2 == 0) ? ModelClass::GM : ModelClass::GM4;
    const auto n = random_model_for_class(rng, cls);
    REQUIRE(n);
    std::vector<JFormula> universe;
    for (int k = 0; k < 4; ++k) universe.push_back(random_jformula(rng, 4, 3, 1));
    const TransformResult t = pre_to_normal(*n, universe);
    REQUIRE(bool(t));
    for (const JFormula& phi : universe) {
      CHECK(eval_star(*n, phi) == eval(*t.model, phi));
    }
  }
}

TEST_CASE("oracle certificate discipline") {
  auto oracle = std::make_shared<TheoremhoodOracle>(XLogic::GJ45_TCS, false);
  // no stock, no synthesis: everything is undecided
  CHECK(oracle->decide(parse_jformula("p1")) == Decision::Undecided);
  const Model m = make_x_rooted(TruthValue::ratio(1, 2), XLogic::GJ45_TCS, oracle);
  CHECK_THROWS_AS(eval(m, parse_jformula("x1:p1")), UndecidedError);

  // a wrong-class witness is rejected
  RefutationWitness bad{Model{AllOnesEvidence{}, Valuation{TruthValue::zero()}},
                        ModelClass::GM4, false};
  CHECK(!oracle->add_nontheorem(parse_jformula("p1"), bad).empty());
  // a sound witness is accepted, then the lookup resolves
  RefutationWitness good{Model{AllOnesEvidence{}, Valuation{TruthValue::zero()}},
                         ModelClass::GM45, false};
  CHECK(oracle->add_nontheorem(parse_jformula("p1"), good).empty());
  CHECK(oracle->decide(parse_jformula("p1")) == Decision::NonTheorem);
  CHECK(eval(m, parse_jformula("x1:p1")) == TruthValue::ratio(1, 2));

  // a witness that does not refute is rejected
  RefutationWitness vacuous{Model{AllOnesEvidence{}, Valuation{TruthValue::one()}},
                            ModelClass::GM45, false};
  CHECK(!oracle->add_nontheorem(parse_jformula("p2 -> p2"), vacuous).empty());

  // inconsistent certificates are refused
  const ConstantSpec tcs = ConstantSpec::total(JCalc::GJ45);
  JProof proof{JCalc::GJ45, tcs, {{parse_jformula("bot -> p1"), StepRule::Axiom, 0,
                                   SchemeName::A7}}};
  CHECK(oracle->add_theorem(parse_jformula("bot -> p1"), proof).empty());
  RefutationWitness w2{Model{AllOnesEvidence{}, Valuation{TruthValue::zero()}},
                       ModelClass::GM45, false};
  CHECK(!oracle->add_nontheorem(parse_jformula("bot -> p1"), w2).empty());
}

TEST_CASE("oracle-backed evidence without an oracle is an error, not a crash") {
  const ParsedModel parsed = read_model_text("evidence = x_rooted 1/2 GJ45_TCS\n");
  CHECK_THROWS_AS(eval(parsed.model, parse_jformula("x1:p1")), std::runtime_error);
  const ParsedModel crisp = read_model_text("evidence = crisp_shifted to_zero GJ45_TCS\n");
  CHECK_THROWS_AS(eval(crisp.model, parse_jformula("x1:p1")), std::runtime_error);
}

TEST_CASE("model file round trip") {
  Model m = finite_model(TruthValue::ratio(1, 2), TruthValue::ratio(1, 3),
                         {{EvidenceKey{parse_term("x1+c2"), parse_jformula("~p1 & p2")},
                           TruthValue::ratio(1, 4)}});
  m.valuation.set(3, TruthValue::one());
  const ParsedModel back = read_model_text(write_model_text(m));
  CHECK(write_model_text(back.model) == write_model_text(m));
  CHECK(eval(back.model, parse_jformula("(x1+c2):(~p1 & p2)")) == TruthValue::ratio(1, 4));

  const ParsedModel xr = read_model_text("evidence = x_rooted 2/3 GLP_TCS\ndefault_e = 2/3\n");
  CHECK(std::holds_alternative<XRootedEvidence>(xr.model.evidence));
  CHECK_THROWS(read_model_text("evidence = x_rooted 1 GJ45_TCS\n"));
  CHECK_THROWS(read_model_text("nonsense\n"));
}
