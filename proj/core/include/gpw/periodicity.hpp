#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "gpw/closure.hpp"
#include "gpw/sequence.hpp"
#include "gpw/word.hpp"

namespace gpw {

/// Witness of the periodicity condition: delta_{n+1} = a <=> theta_n = theta
/// for all n > n0.
struct ConditionWitness {
  Letter letter;
  Antimorphism theta;
  std::size_t n0;
};

struct ConditionResult {
  bool holds;
  std::optional<ConditionWitness> witness;
  /// Two indices n with opposite alignment bits, refuting the condition.
  std::optional<std::pair<std::size_t, std::size_t>> refutation;
};

/// Decides the periodicity condition exactly by scanning one aligned full
/// period beyond both preperiods: the bit [delta_{n+1}=1] xor [theta_n=R]
/// must be eventually constant.
ConditionResult satisfies_condition(const BidirectiveSequence& seq);

/// Primitive (shortest) period p of a periodic word, w = p^(|w|/|p|) ... only
/// meaningful here as the primitive root of a finite word.
Word primitive_root(const Word& w);

/// Explicit primitive period of u(seq); requires satisfies_condition.
/// Verified against the generated word before returning.
Word extract_period(const BidirectiveSequence& seq, std::size_t growth_cap = kDefaultGrowthCap);

struct PeriodicityVerdict {
  bool periodic;
  std::optional<ConditionWitness> witness;
  std::optional<Word> period;  // primitive
  std::optional<std::pair<std::size_t, std::size_t>> refutation;
};

PeriodicityVerdict is_periodic(const BidirectiveSequence& seq,
                               std::size_t growth_cap = kDefaultGrowthCap);

struct MorseHedlundVerdict {
  bool periodic_evidence;
  /// Smallest n with C(n) <= n when evidence was found.
  std::size_t evidence_length;
  /// Smallest period of the inspected prefix, by brute force.
  std::optional<Word> period;
};

/// Empirical oracle on a finite prefix: reports periodicity evidence when
/// C(n) <= n for some n <= n_max. Requires |word_prefix| >= 4 n_max.
MorseHedlundVerdict morse_hedlund_oracle(const Word& word_prefix, std::size_t n_max);

}  // namespace gpw
