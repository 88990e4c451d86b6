#include "gpw/word.hpp"

#include <algorithm>

namespace gpw {

namespace {

constexpr std::uint64_t low_mask(std::size_t bits) {
  return bits == 0 ? 0 : ~std::uint64_t{0} >> (64 - bits);
}

}  // namespace

Word Word::from_string(std::string_view text) {
  Word w;
  w.blocks_.reserve((text.size() + 63) / 64);
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("word literal may contain only '0' and '1'");
    }
    w.push_back(c - '0');
  }
  return w;
}

Word Word::filled(std::size_t count, Letter a) {
  Word w;
  w.size_ = count;
  w.blocks_.assign((count + 63) / 64, a ? ~std::uint64_t{0} : 0);
  if (a && count % 64 != 0) {
    w.blocks_.back() = low_mask(count % 64);
  }
  return w;
}

void Word::push_back(Letter a) {
  if (size_ % 64 == 0) {
    blocks_.push_back(0);
  }
  blocks_.back() |= std::uint64_t(a & 1) << (size_ & 63);
  ++size_;
}

void Word::append(const Word& tail) {
  if (tail.size_ == 0) return;
  if (&tail == this) {
    append(Word(tail));
    return;
  }
  const std::size_t off = size_ & 63;
  const std::size_t new_size = size_ + tail.size_;
  blocks_.resize((new_size + 63) / 64, 0);
  if (off == 0) {
    std::copy(tail.blocks_.begin(), tail.blocks_.end(),
              blocks_.begin() + static_cast<std::ptrdiff_t>(size_ / 64));
  } else {
    std::size_t dst = size_ / 64;
    for (std::size_t i = 0; i < tail.blocks_.size(); ++i) {
      blocks_[dst] |= tail.blocks_[i] << off;
      if (dst + 1 < blocks_.size()) {
        blocks_[dst + 1] = tail.blocks_[i] >> (64 - off);
      }
      ++dst;
    }
  }
  size_ = new_size;
}

Word Word::subword(std::size_t pos, std::size_t count) const {
  if (pos + count > size_) {
    throw std::out_of_range("subword out of range");
  }
  Word r;
  r.size_ = count;
  r.blocks_.assign((count + 63) / 64, 0);
  const std::size_t off = pos & 63;
  std::size_t src = pos / 64;
  for (std::size_t i = 0; i < r.blocks_.size(); ++i, ++src) {
    std::uint64_t v = blocks_[src] >> off;
    if (off != 0 && src + 1 < blocks_.size()) {
      v |= blocks_[src + 1] << (64 - off);
    }
    r.blocks_[i] = v;
  }
  if (count % 64 != 0) {
    r.blocks_.back() &= low_mask(count % 64);
  }
  return r;
}

Word Word::reversed() const {
  Word r;
  r.size_ = size_;
  r.blocks_.assign(blocks_.size(), 0);
  for (std::size_t i = 0; i < size_; ++i) {
    const std::size_t j = size_ - 1 - i;
    r.blocks_[j >> 6] |= std::uint64_t((*this)[i]) << (j & 63);
  }
  return r;
}

Word Word::complemented() const {
  Word r = *this;
  for (auto& b : r.blocks_) b = ~b;
  if (size_ % 64 != 0 && !r.blocks_.empty()) {
    r.blocks_.back() &= low_mask(size_ % 64);
  }
  return r;
}

bool Word::has_prefix(const Word& p) const {
  return p.size_ <= size_ && subword(0, p.size_) == p;
}

bool Word::has_suffix(const Word& s) const {
  return s.size_ <= size_ && subword(size_ - s.size_, s.size_) == s;
}

Word Word::without_prefix(const Word& p) const {
  if (!has_prefix(p)) {
    throw std::invalid_argument("without_prefix: not a prefix");
  }
  return subword(p.size_, size_ - p.size_);
}

Word Word::without_suffix(const Word& s) const {
  if (!has_suffix(s)) {
    throw std::invalid_argument("without_suffix: not a suffix");
  }
  return subword(0, size_ - s.size_);
}

std::string Word::str() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    s[i] = static_cast<char>('0' + (*this)[i]);
  }
  return s;
}

bool operator<(const Word& a, const Word& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

Word apply(Antimorphism t, const Word& w) {
  Word r = w.reversed();
  return t == Antimorphism::R ? r : r.complemented();
}

bool is_theta_palindrome(Antimorphism t, const Word& w) {
  const std::size_t n = w.size();
  if (t == Antimorphism::E && n % 2 != 0) return false;
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    const Letter mirrored = t == Antimorphism::R ? w[n - 1 - i] : complement(w[n - 1 - i]);
    if (w[i] != mirrored) return false;
  }
  return true;
}

std::size_t longest_theta_palindromic_suffix_length(Antimorphism t, const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) return 0;
  const Word pattern = apply(t, w);

  // KMP failure function of theta(w).
  std::vector<std::uint32_t> fail(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = fail[i - 1];
    while (k > 0 && pattern[i] != pattern[k]) k = fail[k - 1];
    if (pattern[i] == pattern[k]) ++k;
    fail[i] = static_cast<std::uint32_t>(k);
  }

  // Stream w through the matcher; the final state is the longest suffix of w
  // equal to a prefix of theta(w), which is exactly the longest
  // theta-palindromic suffix.
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Letter c = w[i];
    while (k > 0 && pattern[k] != c) k = fail[k - 1];
    if (pattern[k] == c) ++k;
  }
  return k;
}

SuffixSplit longest_theta_palindromic_suffix(Antimorphism t, const Word& w) {
  const std::size_t len = longest_theta_palindromic_suffix_length(t, w);
  return {w.prefix(w.size() - len), w.suffix(len)};
}

std::vector<std::size_t> occurrences(const Word& text, const Word& pattern) {
  std::vector<std::size_t> out;
  const std::size_t m = pattern.size();
  if (m == 0 || m > text.size()) return out;
  std::vector<std::uint32_t> fail(m, 0);
  for (std::size_t i = 1; i < m; ++i) {
    std::size_t k = fail[i - 1];
    while (k > 0 && pattern[i] != pattern[k]) k = fail[k - 1];
    if (pattern[i] == pattern[k]) ++k;
    fail[i] = static_cast<std::uint32_t>(k);
  }
  std::size_t k = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    while (k > 0 && pattern[k] != text[i]) k = fail[k - 1];
    if (pattern[k] == text[i]) ++k;
    if (k == m) {
      out.push_back(i + 1 - m);
      k = fail[k - 1];
    }
  }
  return out;
}

bool contains(const Word& text, const Word& pattern) {
  return pattern.empty() || !occurrences(text, pattern).empty();
}

bool is_central_factor(const Word& factor, const Word& whole) {
  if (factor.size() > whole.size() || (whole.size() - factor.size()) % 2 != 0) return false;
  const std::size_t margin = (whole.size() - factor.size()) / 2;
  return whole.subword(margin, factor.size()) == factor;
}

std::vector<std::size_t> theta_palindromic_prefix_lengths(Antimorphism t, const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) return {0};
  // Prefix p of length l is a theta-palindrome iff it equals the length-l
  // suffix of theta(w); those lengths are the borders of w '#' theta(w).
  const Word image = apply(t, w);
  const std::size_t m = 2 * n + 1;
  auto at = [&](std::size_t i) -> int {
    if (i < n) return w[i];
    if (i == n) return 2;  // separator
    return image[i - n - 1];
  };
  std::vector<std::uint32_t> fail(m, 0);
  for (std::size_t i = 1; i < m; ++i) {
    std::size_t k = fail[i - 1];
    while (k > 0 && at(i) != at(k)) k = fail[k - 1];
    if (at(i) == at(k)) ++k;
    fail[i] = static_cast<std::uint32_t>(k);
  }
  std::vector<std::size_t> lengths;
  for (std::size_t k = fail[m - 1]; k > 0; k = fail[k - 1]) {
    lengths.push_back(k);
  }
  lengths.push_back(0);
  std::reverse(lengths.begin(), lengths.end());
  return lengths;
}

}  // namespace gpw
