#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "gpw/sequence.hpp"
#include "gpw/word.hpp"

namespace gpw {

/// Default cap on the length of a generated prefix. Closure length can double
/// per step, so runaway inputs would otherwise exhaust memory quickly.
inline constexpr std::size_t kDefaultGrowthCap = std::size_t{1} << 26;

class growth_cap_error : public std::runtime_error {
 public:
  explicit growth_cap_error(std::size_t cap)
      : std::runtime_error("prefix growth cap exceeded (" + std::to_string(cap) + " letters)") {}
};

/// Shortest R-palindrome having w as a prefix.
Word palindromic_closure(const Word& w);

/// Shortest E-palindrome having w as a prefix.
Word pseudopalindromic_closure(const Word& w);

Word generalized_closure(const Word& w, Antimorphism theta);

/// Letterwise substitution 0 -> 01, 1 -> 10.
Word thue_morse_image(const Word& w);

struct ChainStep {
  std::size_t index;  // k, starting at 1
  Letter letter;      // delta_k
  Antimorphism theta; // theta_k
  Word prefix;        // w_k
};

/// The sequence w_1..w_steps of pseudopalindromic prefixes, w_0 = epsilon
/// implied. Each w_{k+1} = closure(w_k . delta_{k+1}, theta_{k+1}).
struct PrefixChain {
  std::vector<ChainStep> steps;

  const Word& last() const { return steps.back().prefix; }
  /// w_k, with w_0 the empty word.
  Word prefix(std::size_t k) const { return k == 0 ? Word{} : steps.at(k - 1).prefix; }
};

PrefixChain generate_chain(const BidirectiveSequence& seq, std::size_t steps,
                           std::size_t growth_cap = kDefaultGrowthCap);

/// Prefix of u(delta, theta) of exactly `length` letters.
Word generate_word_prefix(const BidirectiveSequence& seq, std::size_t length,
                          std::size_t growth_cap = kDefaultGrowthCap);

}  // namespace gpw
