#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gpw/closure.hpp"
#include "gpw/sequence.hpp"
#include "gpw/word.hpp"

/// Closed-form constructions and checks specific to the word
/// u(1^w, (EERR)^w), whose complexity exceeds 4n for every n >= 10.
namespace gpw::counterexample {

BidirectiveSequence sequence();

/// The prefix w_k of u(1^w, (EERR)^w), k >= 1.
Word prefix(std::size_t k, std::size_t growth_cap = kDefaultGrowthCap);

/// w_1..w_k.
std::vector<Word> prefixes(std::size_t k, std::size_t growth_cap = kDefaultGrowthCap);

/// A prefix guaranteed to contain every factor of u of the given length:
/// w_{m+2} contains all factors of length at most |w_m-5|.
Word sufficient_prefix(std::size_t factor_length, std::size_t growth_cap = kDefaultGrowthCap);

/// Verifies the four recurrences tying w_{4k+1}..w_{4k+4} to earlier
/// prefixes, with w_z = epsilon for z <= 0.
bool recurrence_check(std::size_t k, std::size_t growth_cap = kDefaultGrowthCap);

enum class WeakFamily { s_4k_plus_1, s_4k_plus_3 };

/// The weak bispecial s_{4k+1} (an R-palindrome) or s_{4k+3} (an
/// E-palindrome) built from the closed formulas, k >= 1.
Word weak_bispecial(std::size_t k, WeakFamily family,
                    std::size_t growth_cap = kDefaultGrowthCap);

/// w_{4k+1} and w_{4k+3} are strong bispecials: all four two-sided extensions
/// occur (inside a prefix that provably contains all factors of that length),
/// 1 w_{4k+1} 0 is central in w_{4(k+1)+1} and 0 w_{4k+3} 0 in w_{4(k+1)+3}.
bool strong_bispecial_check(std::size_t k, std::size_t growth_cap = kDefaultGrowthCap);

/// |s_{4k+1}| < |w_{4k+1}| < |s_{4k+3}| < |w_{4k+3}| < |s_{4(k+1)+1}|, k >= 1.
bool length_interleaving_check(std::size_t k, std::size_t growth_cap = kDefaultGrowthCap);

/// p_{4k+1} is a suffix of s_{4k+1} and a prefix of w_{4k}; p_{4k+3} a suffix
/// of s_{4k+3} and a prefix of w_{4k+2}. k >= 1.
bool p_suffix_check(std::size_t k, std::size_t growth_cap = kDefaultGrowthCap);

struct CounterexampleReport {
  std::size_t n_min = 10;
  std::size_t n_max = 0;
  /// Lengths n in [n_min, n_max] with C(n) <= 4n or unsaturated counts.
  std::vector<std::size_t> violations;
  std::int64_t c10 = 0;
  std::int64_t delta_c9 = 0;
  std::size_t bispecial_family_k_max = 0;
  std::size_t recurrence_k_max = 0;

  bool passed() const { return violations.empty() && c10 == 42 && delta_c9 == 6; }
};

/// Asserts C(n) > 4n for 10 <= n <= n_max on saturated counts, plus the two
/// point values C(10) = 42 and dC(9) = 6. Requires n_max >= 10.
CounterexampleReport verify_4n(std::size_t n_max, std::size_t growth_cap = kDefaultGrowthCap);

}  // namespace gpw::counterexample
