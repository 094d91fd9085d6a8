#include "doctest.h"

#include "gjl/generate.hpp"
#include "gjl/parse.hpp"
#include "gjl/syntax.hpp"

using namespace gjl;

TEST_CASE("justification formula parsing") {
  const JFormula p1 = JFormula::atom(1);
  CHECK(parse_jformula("x1:p1 -> p1") ==
        JFormula::implies(JFormula::holds(Term::variable(1), p1), p1));

  // ~~x1:p1 -> x2:~~p1 desugars negations into implications to bot.
  const JFormula expected = JFormula::implies(
      JFormula::negation(JFormula::negation(JFormula::holds(Term::variable(1), p1))),
      JFormula::holds(Term::variable(2), JFormula::negation(JFormula::negation(p1))));
  CHECK(parse_jformula("~~x1:p1 -> x2:~~p1") == expected);

  CHECK_THROWS_AS(parse_jformula("p1 ->"), ParseError);
  try {
    parse_jformula("p1 ->");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5); // end of input
    CHECK(!e.expected().empty());
  }
}

TEST_CASE("modal formula parsing") {
  const MFormula p1 = MFormula::atom(1);
  CHECK(parse_mformula("~~[]p1 -> []~~p1") ==
        MFormula::implies(MFormula::negation(MFormula::negation(MFormula::box(p1))),
                          MFormula::box(MFormula::negation(MFormula::negation(p1)))));
  CHECK(parse_mformula("[](p1->p2) -> ([]p1 -> []p2)") ==
        MFormula::implies(MFormula::box(MFormula::implies(p1, MFormula::atom(2))),
                          MFormula::implies(MFormula::box(p1),
                                            MFormula::box(MFormula::atom(2)))));
  CHECK_THROWS_AS(parse_mformula("[[p1"), ParseError);
}

TEST_CASE("grammar corners") {
  // top is sugar for bot -> bot
  CHECK(parse_jformula("top") == JFormula::top());
  // t: binds the smallest following formula
  CHECK(parse_jformula("x1:p1 & p2") ==
        JFormula::conj(JFormula::holds(Term::variable(1), JFormula::atom(1)),
                       JFormula::atom(2)));
  // parenthesized terms before a colon
  CHECK(parse_jformula("(x1+x2):p1") ==
        JFormula::holds(Term::sum(Term::variable(1), Term::variable(2)), JFormula::atom(1)));
  // -> is right associative, & left associative and tighter
  CHECK(parse_jformula("p1 -> p2 -> p3") ==
        JFormula::implies(JFormula::atom(1),
                          JFormula::implies(JFormula::atom(2), JFormula::atom(3))));
  CHECK(parse_jformula("p1 & p2 & p3 -> p1") ==
        JFormula::implies(JFormula::conj(JFormula::conj(JFormula::atom(1), JFormula::atom(2)),
                                         JFormula::atom(3)),
                          JFormula::atom(1)));
  // term operators: * tighter than +, unary tightest
  CHECK(parse_term("x1 + x2 * x3") ==
        Term::sum(Term::variable(1), Term::app(Term::variable(2), Term::variable(3))));
  CHECK(parse_term("!x1 * x2") == Term::app(Term::bang(Term::variable(1)), Term::variable(2)));
  // !t : t:phi nests as a term applied to a justified formula
  CHECK(parse_jformula("!x1:x1:p1") ==
        JFormula::holds(Term::bang(Term::variable(1)),
                        JFormula::holds(Term::variable(1), JFormula::atom(1))));
}

TEST_CASE("round trip on random trees") {
  Rng rng(11);
  for (int i = 0; i < 400; ++i) {
    const JFormula f = random_jformula(rng, 8, 4, 3);
    CHECK(parse_jformula(f.to_string()) == f);
    const MFormula g = random_mformula(rng, 8, 4);
    CHECK(parse_mformula(g.to_string()) == g);
    const Term t = random_term(rng, 5);
    CHECK(parse_term(t.to_string()) == t);
  }
}

TEST_CASE("forgetful projection") {
  // axiom-shaped examples
  CHECK(forgetful_projection(parse_jformula("x1:(p1->p2) -> (x2:p1 -> (x1*x2):p2)")) ==
        parse_mformula("[](p1->p2) -> ([]p1 -> []p2)"));
  CHECK(forgetful_projection(parse_jformula("x1:p1 -> (x1+x2):p1")) ==
        parse_mformula("[]p1 -> []p1"));
  CHECK(forgetful_projection(parse_jformula("p1")) == parse_mformula("p1"));
}

TEST_CASE("projection is a homomorphism") {
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    const JFormula a = random_jformula(rng, 5);
    const JFormula b = random_jformula(rng, 5);
    CHECK(forgetful_projection(JFormula::conj(a, b)) ==
          MFormula::conj(forgetful_projection(a), forgetful_projection(b)));
    CHECK(forgetful_projection(JFormula::implies(a, b)) ==
          MFormula::implies(forgetful_projection(a), forgetful_projection(b)));
    CHECK(forgetful_projection(a).count_boxes() == a.count_holds());
  }
}

TEST_CASE("projection of formula sets is the image set") {
  // distinct formulas can collide after projection
  const JFormula a = parse_jformula("x1:p1");
  const JFormula b = parse_jformula("x2:p1");
  const std::vector<JFormula> gamma = {a, b};
  std::vector<MFormula> image;
  for (const auto& f : gamma) image.push_back(forgetful_projection(f));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  CHECK(image.size() == 1);
  CHECK(image[0] == parse_mformula("[]p1"));
}

TEST_CASE("modal polarities") {
  const auto neg = modal_polarities(parse_mformula("[]p1 -> p1"));
  REQUIRE(neg.size() == 1);
  CHECK(neg[0].polarity == Polarity::Negative);
  CHECK(neg[0].path == OccurrencePath{0});

  const auto pos = modal_polarities(parse_mformula("p1 -> []p1"));
  REQUIRE(pos.size() == 1);
  CHECK(pos[0].polarity == Polarity::Positive);

  // ~[]p1 is []p1 -> bot: one antecedent descent, so negative
  const auto under_neg = modal_polarities(parse_mformula("~[]p1"));
  REQUIRE(under_neg.size() == 1);
  CHECK(under_neg[0].polarity == Polarity::Negative);

  // nesting: box under box keeps polarity, antecedent flips twice
  const auto nested = modal_polarities(parse_mformula("([]p1 -> p2) -> [][]p3"));
  REQUIRE(nested.size() == 3);
  CHECK(nested[0].polarity == Polarity::Positive); // antecedent of antecedent
  CHECK(nested[1].polarity == Polarity::Positive);
  CHECK(nested[2].polarity == Polarity::Positive);
}

TEST_CASE("realization checking") {
  CHECK(check_realization(parse_jformula("x1:p1 -> p1"), parse_mformula("[]p1 -> p1"),
                          true).ok);
  const auto non_variable = check_realization(parse_jformula("(x1*x2):p1 -> p1"),
                                              parse_mformula("[]p1 -> p1"), true);
  CHECK(!non_variable.ok);
  CHECK(non_variable.reason.find("non-variable") != std::string::npos);
  // without the normality requirement the same pair passes
  CHECK(check_realization(parse_jformula("(x1*x2):p1 -> p1"),
                          parse_mformula("[]p1 -> p1"), false).ok);
  const auto mismatch =
      check_realization(parse_jformula("x1:p1"), parse_mformula("[]p2"), false);
  CHECK(!mismatch.ok);
  CHECK(mismatch.reason.find("mismatch") != std::string::npos);
}

TEST_CASE("pathological nesting is a parse error, not a crash") {
  const std::string deep(100000, '~');
  CHECK_THROWS_AS(parse_jformula(deep + "p1"), ParseError);
  const std::string parens(100000, '(');
  CHECK_THROWS_AS(parse_mformula(parens + "p1"), ParseError);
  // well under the limit still parses
  std::string nested = "p1";
  for (int i = 0; i < 1000; ++i) nested = "~" + nested;
  CHECK(parse_jformula(nested).depth() == 1001);
}

TEST_CASE("symbol indices start at 1") {
  CHECK_THROWS_AS(Term::constant(0), std::invalid_argument);
  CHECK_THROWS_AS(Term::variable(0), std::invalid_argument);
  CHECK_THROWS_AS(JFormula::atom(0), std::invalid_argument);
  CHECK_THROWS_AS(MFormula::atom(0), std::invalid_argument);
  CHECK_THROWS_AS(parse_jformula("p0"), ParseError);
  CHECK_THROWS_AS(parse_term("x0"), ParseError);
}

TEST_CASE("printing uses the negation abbreviation") {
  CHECK(parse_jformula("p1 -> bot").to_string() == "~p1");
  CHECK(parse_jformula("top").to_string() == "~bot");
  CHECK(parse_mformula("~(p1 -> p2)").to_string() == "~(p1 -> p2)");
}
