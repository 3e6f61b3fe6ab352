#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "extbayes/logic.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace extbayes;
using fx::rat;

TEST_CASE("parsing the core grammar") {
  Formula f = parse_formula("!(rain & cold)");
  CHECK(f == Formula::negate(
                 Formula::conj(Formula::prop("rain"), Formula::prop("cold"))));
  CHECK(parse_formula("T") == Formula::truth());
  CHECK(parse_formula("F") == Formula::falsity());
  CHECK(parse_formula("  a &b& c ") ==
        Formula::conj(Formula::conj(Formula::prop("a"), Formula::prop("b")),
                      Formula::prop("c")));
}

TEST_CASE("sugar desugars at parse time") {
  // a|b is !(!a & !b)
  CHECK(parse_formula("a | b") ==
        Formula::negate(Formula::conj(Formula::negate(Formula::prop("a")),
                                      Formula::negate(Formula::prop("b")))));
  // a->b is !(a & !b)
  CHECK(parse_formula("a -> b") ==
        Formula::negate(
            Formula::conj(Formula::prop("a"),
                          Formula::negate(Formula::prop("b")))));
  // Right associativity of ->
  CHECK(parse_formula("a -> b -> c") ==
        parse_formula("a -> (b -> c)"));
  CHECK(parse_formula("a -> b -> c") != parse_formula("(a -> b) -> c"));
  // Precedence: ! binds tighter than &, & tighter than |, | tighter than ->
  CHECK(parse_formula("!a & b | c -> d") ==
        parse_formula("(((!a) & b) | c) -> d"));
}

TEST_CASE("syntax errors carry a position") {
  CHECK_THROWS_AS(parse_formula("a & | b"), SyntaxError);
  try {
    parse_formula("a & | b");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_formula(""), SyntaxError);
  CHECK_THROWS_AS(parse_formula("(a"), SyntaxError);
  CHECK_THROWS_AS(parse_formula("a b"), SyntaxError);
}

TEST_CASE("format emits re-parsable core syntax") {
  gen::Rng rng(51);
  std::vector<std::string> props = {"a", "b", "c", "dd"};
  for (int i = 0; i < 2000; ++i) {
    Formula f = gen::random_formula(rng, props, 6);
    CHECK(parse_formula(format_formula(f)) == f);
  }
}

TEST_CASE("valuation space and truth sets") {
  std::vector<std::string> props = {"c", "v"};
  SpacePtr space = valuation_space(props);
  REQUIRE(space->size() == 4);
  Event tc = truth_set(parse_formula("c"), props, space);
  CHECK(tc.size() == 2);
  for (std::size_t s : tc.members()) CHECK((s & 1) == 1);  // c is bit 0

  std::vector<std::string> ab = {"a", "b"};
  SpacePtr sab = valuation_space(ab);
  CHECK(truth_set(parse_formula("!(a & b)"), ab, sab).size() == 3);
  CHECK(truth_set(parse_formula("!(a & b)"), ab, sab) ==
        truth_set(parse_formula("!a | !b"), ab, sab));  // De Morgan
  CHECK(truth_set(parse_formula("T"), ab, sab) == Event::full(sab));
  CHECK(truth_set(parse_formula("F"), ab, sab) == Event::empty(sab));
  CHECK_THROWS_AS(truth_set(parse_formula("z"), ab, sab),
                  UnknownPropositionError);
}

TEST_CASE("truth sets are a homomorphism onto the valuation space") {
  gen::Rng rng(52);
  std::vector<std::string> props = {"p", "q", "r", "s"};
  SpacePtr space = valuation_space(props);
  for (int i = 0; i < 2000; ++i) {
    Formula f = gen::random_formula(rng, props, 6);
    Formula g = gen::random_formula(rng, props, 6);
    Event tf = truth_set(f, props, space);
    CHECK(truth_set(Formula::negate(f), props, space) == tf.complement());
    CHECK(truth_set(Formula::conj(f, g), props, space) ==
          tf.intersect(truth_set(g, props, space)));
    // Against pointwise recursive evaluation.
    for (std::size_t st = 0; st < space->size(); ++st)
      CHECK(tf.contains(st) == oracle::eval_formula(f, props, st));
  }
}

TEST_CASE("entailment is semantic inclusion") {
  std::vector<std::string> props = {"rain", "cold"};
  CHECK(entails(parse_formula("rain & cold"), parse_formula("rain"), props));
  CHECK(!entails(parse_formula("rain"), parse_formula("rain & cold"), props));
  CHECK(entails(parse_formula("rain"), parse_formula("T"), props));
  CHECK(entails(parse_formula("F"), parse_formula("rain"), props));

  gen::Rng rng(53);
  SpacePtr space = valuation_space(props);
  for (int i = 0; i < 1000; ++i) {
    Formula f = gen::random_formula(rng, props, 5);
    Formula g = gen::random_formula(rng, props, 5);
    Formula h = gen::random_formula(rng, props, 5);
    CHECK(entails(f, f, props));  // reflexive
    if (entails(f, g, props) && entails(g, h, props))
      CHECK(entails(f, h, props));  // transitive
    bool mutual = entails(f, g, props) && entails(g, f, props);
    CHECK(mutual == (truth_set(f, props, space) == truth_set(g, props, space)));
  }
}

TEST_CASE("scenario compilation produces a refinement chain") {
  SyntacticScenario sc;
  sc.props = {"c", "v"};
  sc.periods.push_back(
      {{"c"},
       {{parse_formula("c"), rat(1, 4)}, {parse_formula("!c"), rat(3, 4)}}});
  sc.periods.push_back({{"c", "v"},
                        {{parse_formula("c & !v"), rat(1, 2)},
                         {parse_formula("!c & !v"), rat(1, 2)}}});
  Chain chain = compile_scenario(sc);
  REQUIRE(chain.length() == 2);
  CHECK(chain.stages()[0].space()->size() == 4);
  CHECK(chain.stages()[0].algebra().atom_count() == 2);
  CHECK(chain.stages()[1].algebra().atom_count() == 4);
  CHECK(chain.stages()[1].algebra().refines(chain.stages()[0].algebra()));

  // Equal awareness in both periods: plain conditioning territory.
  SyntacticScenario flat;
  flat.props = {"c"};
  flat.periods.push_back(
      {{"c"},
       {{parse_formula("c"), rat(1, 2)}, {parse_formula("!c"), rat(1, 2)}}});
  flat.periods.push_back({{"c"}, {{parse_formula("c"), rat(1)}}});
  Chain fc = compile_scenario(flat);
  CHECK(fc.stages()[0].algebra() == fc.stages()[1].algebra());
  CHECK(classify_update(UpdatePair(fc.stages()[0], fc.stages()[1])).status ==
        UpdateStatus::Bayesian);
}

TEST_CASE("compilation errors") {
  SyntacticScenario shrink;
  shrink.props = {"a", "b"};
  shrink.periods.push_back(
      {{"a"},
       {{parse_formula("a"), rat(1, 2)}, {parse_formula("!a"), rat(1, 2)}}});
  shrink.periods.push_back({{}, {{parse_formula("T"), rat(1)}}});
  CHECK_THROWS_AS(compile_scenario(shrink), AwarenessShrinkError);

  SyntacticScenario mismatch;
  mismatch.props = {"a", "b"};
  // "a & b" is not an atom of the algebra generated by {a} alone.
  mismatch.periods.push_back({{"a"}, {{parse_formula("a & b"), rat(1)}}});
  CHECK_THROWS_AS(compile_scenario(mismatch), MassAlgebraMismatchError);
}

TEST_CASE("the disease story re-encoded propositionally") {
  // wA = no disease, wB / wC = which disease, v2 = the late-discovered variant.
  SyntacticScenario sc;
  sc.props = {"dB", "dC", "v2"};
  sc.periods.push_back({{"dB", "dC"},
                        {{parse_formula("!dB & !dC"), rat(1, 2)},
                         {parse_formula("dB & !dC"), rat(1, 4)},
                         {parse_formula("!dB & dC"), rat(1, 4)}}});
  sc.periods.push_back({{"dB", "dC", "v2"},
                        {{parse_formula("!dB & !dC & !v2"), rat(4, 7)},
                         {parse_formula("dB & !dC & !v2"), rat(2, 7)},
                         {parse_formula("!dB & dC & !v2"), rat(1, 7)}}});
  Chain chain = compile_scenario(sc);
  UpdateReport r =
      classify_update(UpdatePair(chain.stages()[0], chain.stages()[1]));
  CHECK(r.status == UpdateStatus::EbPositive);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->beta == rat(7, 8));
}

TEST_CASE("logically equivalent formulas give identical events") {
  gen::Rng rng(54);
  std::vector<std::string> props = {"x", "y"};
  SpacePtr space = valuation_space(props);
  CHECK(truth_set(parse_formula("x -> y"), props, space) ==
        truth_set(parse_formula("!x | y"), props, space));
  CHECK(truth_set(parse_formula("!(x | y)"), props, space) ==
        truth_set(parse_formula("!x & !y"), props, space));
  CHECK(truth_set(parse_formula("x & x"), props, space) ==
        truth_set(parse_formula("x"), props, space));
}
