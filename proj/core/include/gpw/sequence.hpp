#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpw/word.hpp"

namespace gpw {

/// One term of a bidirective sequence.
struct SequenceTerm {
  Letter letter;
  Antimorphism theta;

  friend bool operator==(const SequenceTerm&, const SequenceTerm&) = default;
};

/// Eventually periodic pair of streams (delta over letters, theta over
/// antimorphisms), 1-indexed like the paper's delta_1 delta_2 ... and
/// theta_1 theta_2 ... Periods are nonempty; preperiods may be empty.
class BidirectiveSequence {
 public:
  BidirectiveSequence(Word delta_preperiod, Word delta_period,
                      std::vector<Antimorphism> theta_preperiod,
                      std::vector<Antimorphism> theta_period);

  const Word& delta_preperiod() const { return delta_pre_; }
  const Word& delta_period() const { return delta_per_; }
  const std::vector<Antimorphism>& theta_preperiod() const { return theta_pre_; }
  const std::vector<Antimorphism>& theta_period() const { return theta_per_; }

  Letter delta(std::size_t i) const {  // i >= 1
    const std::size_t k = i - 1;
    return k < delta_pre_.size() ? delta_pre_[k]
                                 : delta_per_[(k - delta_pre_.size()) % delta_per_.size()];
  }

  Antimorphism theta(std::size_t i) const {  // i >= 1
    const std::size_t k = i - 1;
    return k < theta_pre_.size() ? theta_pre_[k]
                                 : theta_per_[(k - theta_pre_.size()) % theta_per_.size()];
  }

  SequenceTerm term(std::size_t i) const { return {delta(i), theta(i)}; }

 private:
  Word delta_pre_;
  Word delta_per_;
  std::vector<Antimorphism> theta_pre_;
  std::vector<Antimorphism> theta_per_;
};

/// Builds a sequence from an explicit eventually periodic list of terms.
BidirectiveSequence sequence_from_terms(const std::vector<SequenceTerm>& preperiod,
                                        const std::vector<SequenceTerm>& period);

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses literals of the form `DELTA;THETA` where each side is
/// `prefix(period)^w`, the prefix optional and `1^w` short for `(1)^w`.
/// Whitespace is ignored. Throws parse_error with the offending position.
BidirectiveSequence parse_sequence(std::string_view literal);

/// Renders the canonical literal, period always parenthesized.
std::string render_sequence(const BidirectiveSequence& seq);

/// Canonical representation: minimal preperiod and primitive period of the
/// paired stream; per side the period is reduced to its primitive root and
/// the preperiod dropped when it absorbs completely into the period.
BidirectiveSequence canonical_form(const BidirectiveSequence& seq);

/// Term-by-term equality of the two infinite paired streams.
bool equivalent(const BidirectiveSequence& a, const BidirectiveSequence& b);

}  // namespace gpw
