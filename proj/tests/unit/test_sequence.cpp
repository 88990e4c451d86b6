#include <random>

#include "doctest.h"
#include "gpw/sequence.hpp"
#include "oracles.hpp"

using namespace gpw;

TEST_SUITE_BEGIN("sequence");

TEST_CASE("parsing the paper's literals") {
  const BidirectiveSequence up = parse_sequence("1^w;(EERR)^w");
  CHECK(up.delta_preperiod().empty());
  CHECK(up.delta_period().str() == "1");
  CHECK(up.theta_period() == std::vector<Antimorphism>{Antimorphism::E, Antimorphism::E,
                                                       Antimorphism::R, Antimorphism::R});
  CHECK(up.delta(5) == 1);
  CHECK(up.theta(1) == Antimorphism::E);
  CHECK(up.theta(4) == Antimorphism::R);
  CHECK(up.theta(5) == Antimorphism::E);

  const BidirectiveSequence norm = parse_sequence("1010(1)^w;RERE(RREE)^w");
  CHECK(norm.delta_preperiod().str() == "1010");
  CHECK(norm.theta(2) == Antimorphism::E);
  CHECK(norm.theta(6) == Antimorphism::R);

  CHECK(parse_sequence(" ( 0 1 1 )^w ; (EER)^w ").delta_period().str() == "011");
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_sequence("01^w"), parse_error);
  CHECK_THROWS_AS(parse_sequence("(01)^w;()^w"), parse_error);
  CHECK_THROWS_AS(parse_sequence("(01)^w;(RX)^w"), parse_error);
  CHECK_THROWS_AS(parse_sequence("(01)^w;(RE)"), parse_error);
  CHECK_THROWS_AS(parse_sequence("2^w;R^w"), parse_error);
  try {
    parse_sequence("(01)^w;(RE)^x");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.position() > 7);
  }
}

TEST_CASE("render produces canonical, parseable literals") {
  CHECK(render_sequence(parse_sequence("1^w;(EERR)^w")) == "(1)^w;(EERR)^w");
  CHECK(render_sequence(parse_sequence("011011(011)^w;EEREER(EER)^w")) ==
        "(011)^w;(EER)^w");
  CHECK(render_sequence(parse_sequence("1010(1)^w;RERE(RREE)^w")) ==
        "1010(1)^w;RERE(RREE)^w");
  CHECK(render_sequence(parse_sequence("0110(1010)^w;RERE(RERE)^w")) == "01(10)^w;(RE)^w");
}

TEST_CASE("render round-trip is stable") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 500; ++iter) {
    const BidirectiveSequence s = gpw::testing::random_sequence(rng, 4, 4);
    const std::string rendered = render_sequence(s);
    const BidirectiveSequence reparsed = parse_sequence(rendered);
    CHECK(equivalent(s, reparsed));
    CHECK(render_sequence(reparsed) == rendered);
  }
}

TEST_CASE("equivalence is term-by-term stream equality") {
  CHECK(equivalent(parse_sequence("1^w;(EERR)^w"), parse_sequence("11(11)^w;EE(RREE)^w")));
  CHECK_FALSE(equivalent(parse_sequence("1^w;(EERR)^w"), parse_sequence("1^w;(EER)^w")));
  CHECK_FALSE(equivalent(parse_sequence("0^w;R^w"), parse_sequence("1^w;R^w")));

  std::mt19937_64 rng(32);
  for (int iter = 0; iter < 300; ++iter) {
    const BidirectiveSequence a = gpw::testing::random_sequence(rng, 4, 4);
    const BidirectiveSequence b = gpw::testing::random_sequence(rng, 4, 4);
    bool same_terms = true;
    for (std::size_t i = 1; i <= 40 && same_terms; ++i) same_terms = a.term(i) == b.term(i);
    // 40 terms decide equality for these sizes: preperiods <= 4, pair periods <= lcm(4,4).
    CHECK(equivalent(a, b) == same_terms);
  }
}

TEST_CASE("period must be nonempty") {
  CHECK_THROWS_AS(BidirectiveSequence(Word{}, Word{}, {}, {Antimorphism::R}),
                  std::invalid_argument);
  CHECK_THROWS_AS(BidirectiveSequence(Word{}, Word::from_string("0"), {}, {}),
                  std::invalid_argument);
}

TEST_SUITE_END();
