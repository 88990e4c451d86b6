#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gpw {

/// A binary letter, 0 or 1.
using Letter = int;

constexpr Letter complement(Letter a) { return a ^ 1; }

/// The two involutory antimorphisms over {0,1}: R reverses, E reverses and
/// exchanges letters.
enum class Antimorphism : std::uint8_t { R, E };

constexpr Antimorphism opposite(Antimorphism t) {
  return t == Antimorphism::R ? Antimorphism::E : Antimorphism::R;
}

constexpr char to_char(Antimorphism t) { return t == Antimorphism::R ? 'R' : 'E'; }

/// Immutable-by-convention binary word. Letters are packed 64 per block so
/// that prefixes of 10^5..10^6 letters stay cheap to copy and compare.
class Word {
 public:
  Word() = default;

  static Word from_string(std::string_view text);
  static Word filled(std::size_t count, Letter a);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  Letter operator[](std::size_t i) const {
    return static_cast<Letter>((blocks_[i >> 6] >> (i & 63)) & 1u);
  }

  void push_back(Letter a);
  void append(const Word& tail);

  Word prefix(std::size_t count) const { return subword(0, count); }
  Word suffix(std::size_t count) const { return subword(size_ - count, count); }
  Word subword(std::size_t pos, std::size_t count) const;

  Word reversed() const;
  Word complemented() const;

  bool has_prefix(const Word& p) const;
  bool has_suffix(const Word& s) const;

  /// Strips a known prefix/suffix; throws std::invalid_argument when the word
  /// does not actually start/end with it. Free-group style cancellations in
  /// the prefix formulas must fail loudly, never silently misalign.
  Word without_prefix(const Word& p) const;
  Word without_suffix(const Word& s) const;

  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.size_ == b.size_ && a.blocks_ == b.blocks_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

  /// Lexicographic order (shorter prefix first).
  friend bool operator<(const Word& a, const Word& b);

  friend Word operator+(const Word& a, const Word& b) {
    Word r = a;
    r.append(b);
    return r;
  }

 private:
  std::vector<std::uint64_t> blocks_;
  std::size_t size_ = 0;
};

/// Applies the antimorphism: R(w) is the reversal, E(w) the complemented
/// reversal.
Word apply(Antimorphism t, const Word& w);

bool is_theta_palindrome(Antimorphism t, const Word& w);

/// Length of the longest suffix s of w with s = theta(s). Computed with one
/// failure-function pass: a suffix of w is a theta-palindrome iff it equals
/// the prefix of theta(w) of the same length.
std::size_t longest_theta_palindromic_suffix_length(Antimorphism t, const Word& w);

/// Split w = p.s at the longest theta-palindromic suffix s.
struct SuffixSplit {
  Word head;
  Word palindromic_suffix;
};
SuffixSplit longest_theta_palindromic_suffix(Antimorphism t, const Word& w);

/// Ascending list of all lengths l <= |w| whose prefix of w is a
/// theta-palindrome, 0 included.
std::vector<std::size_t> theta_palindromic_prefix_lengths(Antimorphism t, const Word& w);

/// All start positions (0-based, ascending) of pattern in text; KMP.
std::vector<std::size_t> occurrences(const Word& text, const Word& pattern);

bool contains(const Word& text, const Word& pattern);

/// True when factor sits centered in whole: whole = x.factor.y with |x| = |y|.
bool is_central_factor(const Word& factor, const Word& whole);

}  // namespace gpw
