#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gpw/closure.hpp"
#include "gpw/sequence.hpp"
#include "gpw/word.hpp"

namespace gpw {

enum class FactorClass {
  ordinary,
  left_special_only,
  right_special_only,
  bispecial_neutral,
  bispecial_weak,
  bispecial_strong,
};

/// Extension data of one factor w. Bit a of left_extensions is set when aw is
/// a factor, bit b of right_extensions when wb is, and bit 2a+b of
/// extension_pairs when awb is.
struct BispecialReport {
  Word factor;
  std::uint8_t extension_pairs = 0;
  std::uint8_t left_extensions = 0;
  std::uint8_t right_extensions = 0;
  int b_value = 0;
  FactorClass classification = FactorClass::ordinary;

  bool has_pair(Letter a, Letter b) const { return extension_pairs >> (2 * a + b) & 1; }
};

FactorClass classify_extensions(std::uint8_t pairs, std::uint8_t lext, std::uint8_t rext);

/// Distinct-factor index over a finite word, built on a suffix automaton.
/// Counts are exact for every n <= max_factor_length + 2; extension sets
/// (left extensions and two-sided pairs, hence B values and bispecial
/// classification) are exact w.r.t. the factor set of the indexed word for
/// every n <= max_factor_length.
class FactorIndex {
 public:
  FactorIndex(const Word& text, std::size_t max_factor_length);

  const Word& text() const { return text_; }
  std::size_t max_factor_length() const { return ext_cap_; }

  /// Number of distinct factors of length n, n <= max_factor_length + 2.
  std::int64_t count(std::size_t n) const;

  /// Extension report for a factor of length <= max_factor_length; nullopt
  /// when the word does not occur in the text.
  std::optional<BispecialReport> classify(const Word& factor) const;

  /// All bispecial factors of length exactly n, lexicographically sorted.
  std::vector<BispecialReport> bispecials(std::size_t n) const;

  /// All bispecial factors of length <= n_max, sorted by (length, lex).
  std::vector<BispecialReport> bispecials_up_to(std::size_t n_max) const;

  /// Sum of B(w) over all distinct factors of length n.
  std::int64_t b_sum(std::size_t n) const;

  /// Left special factors of length exactly n, lexicographically sorted.
  std::vector<Word> left_special_factors(std::size_t n) const;

 private:
  struct State {
    std::int32_t next[2];
    std::int32_t link;
    std::int32_t len;
    std::int32_t first_end;  // end position (inclusive) of one occurrence
  };

  void build_automaton();
  void enumerate_extensions();
  std::int32_t walk(const Word& factor) const;
  std::size_t factor_id(std::int32_t state, std::size_t len) const;
  BispecialReport report_for(std::int32_t state, std::size_t len) const;

  Word text_;
  std::size_t ext_cap_;    // lengths with full extension data
  std::size_t count_cap_;  // lengths with exact counts (= ext_cap_ + 2, clipped)
  std::vector<State> states_;
  std::vector<std::int64_t> counts_;             // C(n) for n <= count_cap_
  std::vector<std::vector<std::int32_t>> bucket_;  // states per factor length
  std::vector<std::size_t> id_base_;             // per-state id offset
  std::vector<std::uint8_t> pair_mask_;
  std::vector<std::uint8_t> lext_mask_;
};

/// C(n) of a finite word (exact distinct count, no automaton retained).
std::int64_t factor_count(const Word& word_prefix, std::size_t n);

/// C(0..n_max) of a finite word.
std::vector<std::int64_t> factor_counts(const Word& word_prefix, std::size_t n_max);

struct ComplexityRow {
  std::size_t n;
  std::int64_t c;
  std::int64_t dc;   // C(n+1) - C(n)
  std::int64_t d2c;  // dC(n+1) - dC(n)
  bool saturated;
};

struct ComplexityProfile {
  std::vector<ComplexityRow> rows;  // n = 0..n_max
  std::size_t prefix_length_used = 0;

  const ComplexityRow& row(std::size_t n) const { return rows.at(n); }
  bool saturated_up_to(std::size_t n) const;
};

/// Profile of a finite word. Saturation follows the doubling rule: length n
/// is trusted when the half-length prefix yields the same C(n) and identical
/// bispecial sets for every length <= n.
ComplexityProfile complexity_profile(const Word& word_prefix, std::size_t n_max);

struct ConsistencyResult {
  bool consistent;
  std::int64_t d2c;
  std::int64_t b_sum;
};

/// Checks the second-difference identity d2C(n) = sum of B(w) over length-n
/// factors. Meaningful on the saturated range only.
ConsistencyResult second_difference_consistency(const Word& word_prefix, std::size_t n);

/// Profile of the infinite word u(seq): grows the analyzed prefix by doubling
/// until the counts and bispecial sets for all n <= n_max agree across a
/// doubling, or the growth cap is reached (remaining lengths flagged
/// unsaturated; their counts are still valid lower bounds).
ComplexityProfile analyze_infinite(const BidirectiveSequence& seq, std::size_t n_max,
                                   std::size_t growth_cap = kDefaultGrowthCap);

/// Spec-level conveniences over a one-shot FactorIndex.
BispecialReport classify_factor(const Word& word_prefix, const Word& factor);
std::vector<BispecialReport> bispecials_up_to(const Word& word_prefix, std::size_t n_max);

/// Extension report of a single factor by occurrence scan, O(|word_prefix|)
/// regardless of factor length. Exact whenever word_prefix contains every
/// factor of u of length |factor| + 2.
BispecialReport classify_factor_scan(const Word& word_prefix, const Word& factor);

}  // namespace gpw
