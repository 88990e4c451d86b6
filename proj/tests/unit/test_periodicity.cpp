#include <random>

#include "doctest.h"
#include "gpw/normalize.hpp"
#include "gpw/periodicity.hpp"
#include "oracles.hpp"

using namespace gpw;

namespace {

BidirectiveSequence seq(const char* literal) { return parse_sequence(literal); }

Word W(const char* s) { return Word::from_string(s); }

}  // namespace

TEST_SUITE_BEGIN("periodicity");

TEST_CASE("condition: paper examples") {
  CHECK(satisfies_condition(seq("(011)^w;(EER)^w")).holds);
  CHECK_FALSE(satisfies_condition(seq("1^w;(EERR)^w")).holds);

  const ConditionResult constant = satisfies_condition(seq("0^w;R^w"));
  REQUIRE(constant.holds);
  CHECK(constant.witness->theta == Antimorphism::R);
  CHECK(constant.witness->letter == 0);
  CHECK(constant.witness->n0 == 0);
}

TEST_CASE("condition refutation returns differing alignment indices") {
  const ConditionResult r = satisfies_condition(seq("1^w;(EERR)^w"));
  REQUIRE_FALSE(r.holds);
  REQUIRE(r.refutation.has_value());
  const auto [n_zero, n_one] = *r.refutation;
  auto bit = [&](std::size_t n) {
    const BidirectiveSequence s = seq("1^w;(EERR)^w");
    return (s.delta(n + 1) == 1 ? 1 : 0) ^ (s.theta(n) == Antimorphism::R ? 1 : 0);
  };
  CHECK(bit(n_zero) == 0);
  CHECK(bit(n_one) == 1);
}

TEST_CASE("primitive root") {
  CHECK(primitive_root(W("01100110")) == W("0110"));
  CHECK(primitive_root(W("0110")) == W("0110"));
  CHECK(primitive_root(W("000000")) == W("0"));
  CHECK(primitive_root(W("010010")) == W("010"));
  CHECK(primitive_root(W("0100101")) == W("0100101"));
}

TEST_CASE("period extraction: paper example ((011)^w,(EER)^w) -> 0110") {
  CHECK(extract_period(seq("(011)^w;(EER)^w")) == W("0110"));
}

TEST_CASE("period extraction: constant-theta cases") {
  CHECK(extract_period(seq("0^w;R^w")) == W("0"));
  CHECK(extract_period(seq("10^w;R^w")) == W("10"));
  CHECK(extract_period(seq("0^w;E^w")) == W("01"));
}

TEST_CASE("extraction requires the condition") {
  CHECK_THROWS_AS(extract_period(seq("1^w;(EERR)^w")), std::invalid_argument);
}

TEST_CASE("is_periodic: paper verdicts") {
  const PeriodicityVerdict periodic = is_periodic(seq("(011)^w;(EER)^w"));
  CHECK(periodic.periodic);
  CHECK(*periodic.period == W("0110"));
  CHECK(periodic.witness.has_value());

  const PeriodicityVerdict aperiodic = is_periodic(seq("1^w;(EERR)^w"));
  CHECK_FALSE(aperiodic.periodic);
  CHECK_FALSE(aperiodic.period.has_value());
  CHECK(aperiodic.refutation.has_value());

  CHECK_FALSE(is_periodic(seq("(01)^w;R^w")).periodic);
}

TEST_CASE("morse-hedlund oracle") {
  Word periodic_prefix;
  while (periodic_prefix.size() < 256) periodic_prefix.append(W("0110"));
  const MorseHedlundVerdict evidence = morse_hedlund_oracle(periodic_prefix, 8);
  CHECK(evidence.periodic_evidence);
  CHECK(evidence.evidence_length == 4);
  CHECK(*evidence.period == W("0110"));

  const Word up = generate_word_prefix(seq("1^w;(EERR)^w"), 4096);
  CHECK_FALSE(morse_hedlund_oracle(up, 64).periodic_evidence);

  const MorseHedlundVerdict trivial = morse_hedlund_oracle(Word::filled(64, 0), 4);
  CHECK(trivial.periodic_evidence);
  CHECK(trivial.evidence_length == 1);
  CHECK(*trivial.period == W("0"));

  CHECK_THROWS_AS(morse_hedlund_oracle(W("0101"), 64), std::invalid_argument);
}

TEST_CASE("extracted periods are primitive and tile from the start") {
  std::mt19937_64 rng(51);
  int periodic_count = 0;
  for (int iter = 0; iter < 120; ++iter) {
    const BidirectiveSequence s = gpw::testing::random_sequence(rng, 3, 3);
    const PeriodicityVerdict verdict = is_periodic(s);
    if (!verdict.periodic) continue;
    ++periodic_count;
    const Word& period = *verdict.period;
    CHECK(primitive_root(period) == period);
    const Word sample = generate_word_prefix(s, 10 * period.size());
    for (std::size_t i = 0; i < sample.size(); ++i) {
      REQUIRE(sample[i] == period[i % period.size()]);
    }
  }
  CHECK(periodic_count > 5);
}

TEST_CASE("normalization preserves the verdict") {
  std::mt19937_64 rng(52);
  for (int iter = 0; iter < 50; ++iter) {
    const BidirectiveSequence s = gpw::testing::random_sequence(rng, 4, 4);
    const NormalizationResult norm = normalize(s);
    REQUIRE(norm.closed_form_found);
    CHECK(is_periodic(s).periodic == is_periodic(norm.normalized()).periodic);
  }
}

TEST_CASE("verdict agrees with the empirical oracle at desk scale") {
  std::mt19937_64 rng(53);
  for (int iter = 0; iter < 40; ++iter) {
    const BidirectiveSequence s = gpw::testing::random_sequence(rng, 4, 4);
    const Word prefix = generate_word_prefix(s, 1 << 13);
    const MorseHedlundVerdict oracle = morse_hedlund_oracle(prefix, 256);
    CHECK(is_periodic(s).periodic == oracle.periodic_evidence);
  }
}

TEST_SUITE_END();
