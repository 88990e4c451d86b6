#include "gpw/complexity.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gpw {

FactorClass classify_extensions(std::uint8_t pairs, std::uint8_t lext, std::uint8_t rext) {
  const bool left = lext == 3;
  const bool right = rext == 3;
  if (left && right) {
    const int b = std::popcount(pairs) - std::popcount(rext) - std::popcount(lext) + 1;
    if (b == -1) return FactorClass::bispecial_weak;
    if (b == 1) return FactorClass::bispecial_strong;
    return FactorClass::bispecial_neutral;
  }
  if (left) return FactorClass::left_special_only;
  if (right) return FactorClass::right_special_only;
  return FactorClass::ordinary;
}

FactorIndex::FactorIndex(const Word& text, std::size_t max_factor_length)
    : text_(text), ext_cap_(std::min(max_factor_length, text.size())) {
  count_cap_ = std::min(ext_cap_ + 2, text_.size());
  build_automaton();

  // Distinct factor counts per length: every non-initial state contributes one
  // factor for each length in [len(link)+1, len].
  counts_.assign(count_cap_ + 1, 0);
  std::vector<std::int64_t> diff(count_cap_ + 2, 0);
  for (std::size_t s = 1; s < states_.size(); ++s) {
    const std::size_t lo = static_cast<std::size_t>(states_[states_[s].link].len) + 1;
    const std::size_t hi = std::min<std::size_t>(states_[s].len, count_cap_);
    if (lo <= hi) {
      diff[lo] += 1;
      diff[hi + 1] -= 1;
    }
  }
  counts_[0] = 1;
  std::int64_t running = 0;
  for (std::size_t n = 1; n <= count_cap_; ++n) {
    running += diff[n];
    counts_[n] = running;
  }

  // Factor ids: bucket states by covered length, flat id per (state, length).
  bucket_.assign(count_cap_ + 1, {});
  id_base_.assign(states_.size(), 0);
  std::size_t total = 0;
  for (std::size_t s = 1; s < states_.size(); ++s) {
    const std::size_t lo = static_cast<std::size_t>(states_[states_[s].link].len) + 1;
    const std::size_t hi = std::min<std::size_t>(states_[s].len, count_cap_);
    if (lo > hi) continue;
    id_base_[s] = total - lo;
    total += hi - lo + 1;
    for (std::size_t n = lo; n <= hi; ++n) bucket_[n].push_back(static_cast<std::int32_t>(s));
  }
  pair_mask_.assign(total, 0);
  lext_mask_.assign(total, 0);
  enumerate_extensions();
}

void FactorIndex::build_automaton() {
  const std::size_t n = text_.size();
  states_.reserve(2 * n + 2);
  states_.push_back({{-1, -1}, -1, 0, -1});
  std::int32_t last = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Letter c = text_[i];
    const std::int32_t cur = static_cast<std::int32_t>(states_.size());
    states_.push_back({{-1, -1}, -1, states_[last].len + 1, static_cast<std::int32_t>(i)});
    std::int32_t p = last;
    while (p != -1 && states_[p].next[c] == -1) {
      states_[p].next[c] = cur;
      p = states_[p].link;
    }
    if (p == -1) {
      states_[cur].link = 0;
    } else {
      const std::int32_t q = states_[p].next[c];
      if (states_[p].len + 1 == states_[q].len) {
        states_[cur].link = q;
      } else {
        const std::int32_t clone = static_cast<std::int32_t>(states_.size());
        State cl = states_[q];
        cl.len = states_[p].len + 1;
        states_.push_back(cl);
        while (p != -1 && states_[p].next[c] == q) {
          states_[p].next[c] = clone;
          p = states_[p].link;
        }
        states_[q].link = clone;
        states_[cur].link = clone;
      }
    }
    last = cur;
  }
}

void FactorIndex::enumerate_extensions() {
  // For every distinct factor v (one per (state, length) pair), walk its
  // drop-first-letter word from the root. The state after |v|-2 steps is v's
  // middle, after |v|-1 steps its length-(|v|-1) suffix:
  //   v = a.w.b  contributes pair (a, b) to w,
  //   v = a.w    contributes left extension a to w.
  for (std::size_t n = 2; n <= count_cap_; ++n) {
    const bool want_pair = n >= 2 && n - 2 <= ext_cap_;
    const bool want_lext = n - 1 <= ext_cap_;
    if (!want_pair && !want_lext) continue;
    for (const std::int32_t s : bucket_[n]) {
      const std::size_t end = static_cast<std::size_t>(states_[s].first_end);
      const std::size_t start = end + 1 - n;
      const Letter first = text_[start];
      const Letter last_letter = text_[end];
      std::int32_t cur = 0;
      for (std::size_t t = 1; t < n; ++t) {
        cur = states_[cur].next[text_[start + t]];
        if (t == n - 2 && want_pair) {
          pair_mask_[factor_id(cur, n - 2)] |=
              static_cast<std::uint8_t>(1u << (2 * first + last_letter));
        }
      }
      if (want_lext) {
        lext_mask_[factor_id(cur, n - 1)] |= static_cast<std::uint8_t>(1u << first);
      }
    }
  }
}

std::int32_t FactorIndex::walk(const Word& factor) const {
  std::int32_t cur = 0;
  for (std::size_t i = 0; i < factor.size(); ++i) {
    cur = states_[cur].next[factor[i]];
    if (cur == -1) return -1;
  }
  return cur;
}

std::size_t FactorIndex::factor_id(std::int32_t state, std::size_t len) const {
  return id_base_[state] + len;
}

BispecialReport FactorIndex::report_for(std::int32_t state, std::size_t len) const {
  const std::size_t id = factor_id(state, len);
  BispecialReport r;
  const std::size_t end = static_cast<std::size_t>(states_[state].first_end);
  r.factor = text_.subword(end + 1 - len, len);
  r.extension_pairs = pair_mask_[id];
  r.left_extensions = lext_mask_[id];
  r.right_extensions = static_cast<std::uint8_t>((states_[state].next[0] != -1 ? 1 : 0) |
                                                 (states_[state].next[1] != -1 ? 2 : 0));
  r.b_value = std::popcount(r.extension_pairs) - std::popcount(r.right_extensions) -
              std::popcount(r.left_extensions) + 1;
  r.classification = classify_extensions(r.extension_pairs, r.left_extensions, r.right_extensions);
  return r;
}

std::int64_t FactorIndex::count(std::size_t n) const {
  if (n > count_cap_) throw std::out_of_range("factor length beyond indexed range");
  return counts_[n];
}

std::optional<BispecialReport> FactorIndex::classify(const Word& factor) const {
  if (factor.size() > ext_cap_ || factor.empty()) {
    throw std::out_of_range("factor length beyond indexed range");
  }
  const std::int32_t s = walk(factor);
  if (s == -1) return std::nullopt;
  BispecialReport r = report_for(s, factor.size());
  r.factor = factor;
  return r;
}

std::vector<BispecialReport> FactorIndex::bispecials(std::size_t n) const {
  if (n > ext_cap_) throw std::out_of_range("factor length beyond indexed range");
  std::vector<BispecialReport> out;
  if (n == 0 || n > count_cap_) return out;
  for (const std::int32_t s : bucket_[n]) {
    const std::size_t id = factor_id(s, n);
    const bool right = states_[s].next[0] != -1 && states_[s].next[1] != -1;
    if (right && lext_mask_[id] == 3) out.push_back(report_for(s, n));
  }
  std::sort(out.begin(), out.end(),
            [](const BispecialReport& a, const BispecialReport& b) { return a.factor < b.factor; });
  return out;
}

std::vector<BispecialReport> FactorIndex::bispecials_up_to(std::size_t n_max) const {
  std::vector<BispecialReport> out;
  for (std::size_t n = 1; n <= std::min(n_max, ext_cap_); ++n) {
    auto batch = bispecials(n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

std::int64_t FactorIndex::b_sum(std::size_t n) const {
  if (n > ext_cap_) throw std::out_of_range("factor length beyond indexed range");
  if (n == 0) return 0;
  std::int64_t sum = 0;
  for (const std::int32_t s : bucket_[n]) {
    const std::size_t id = factor_id(s, n);
    const int rext = (states_[s].next[0] != -1 ? 1 : 0) + (states_[s].next[1] != -1 ? 1 : 0);
    sum += std::popcount(pair_mask_[id]) - rext - std::popcount(lext_mask_[id]) + 1;
  }
  return sum;
}

std::vector<Word> FactorIndex::left_special_factors(std::size_t n) const {
  if (n > ext_cap_) throw std::out_of_range("factor length beyond indexed range");
  std::vector<Word> out;
  if (n == 0) return out;
  for (const std::int32_t s : bucket_[n]) {
    if (lext_mask_[factor_id(s, n)] == 3) {
      const std::size_t end = static_cast<std::size_t>(states_[s].first_end);
      out.push_back(text_.subword(end + 1 - n, n));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t factor_count(const Word& word_prefix, std::size_t n) {
  if (n > word_prefix.size()) throw std::out_of_range("factor length exceeds prefix");
  return factor_counts(word_prefix, n)[n];
}

std::vector<std::int64_t> factor_counts(const Word& word_prefix, std::size_t n_max) {
  const FactorIndex index(word_prefix, n_max >= 2 ? n_max - 2 : 0);
  std::vector<std::int64_t> out(n_max + 1, 0);
  for (std::size_t n = 0; n <= std::min(n_max, word_prefix.size()); ++n) out[n] = index.count(n);
  return out;
}

bool ComplexityProfile::saturated_up_to(std::size_t n) const {
  for (std::size_t i = 0; i <= n && i < rows.size(); ++i) {
    if (!rows[i].saturated) return false;
  }
  return true;
}

namespace {

// Length-indexed bispecial fingerprints of an index, for the saturation rule.
std::vector<std::vector<BispecialReport>> bispecial_table(const FactorIndex& index,
                                                          std::size_t n_max) {
  std::vector<std::vector<BispecialReport>> table(n_max + 1);
  for (std::size_t n = 1; n <= n_max; ++n) table[n] = index.bispecials(n);
  return table;
}

bool same_bispecials(const std::vector<BispecialReport>& a, const std::vector<BispecialReport>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].factor != b[i].factor || a[i].extension_pairs != b[i].extension_pairs ||
        a[i].left_extensions != b[i].left_extensions ||
        a[i].right_extensions != b[i].right_extensions) {
      return false;
    }
  }
  return true;
}

ComplexityProfile profile_from(const FactorIndex& full, const FactorIndex& half,
                               std::size_t n_max) {
  const std::size_t full_counts = std::min(full.max_factor_length() + 2, full.text().size());
  const std::size_t half_counts = std::min(half.max_factor_length() + 2, half.text().size());
  const std::size_t ext_cap = std::min(n_max, full.max_factor_length());

  ComplexityProfile profile;
  profile.prefix_length_used = full.text().size();
  profile.rows.reserve(n_max + 1);

  const auto full_bis = bispecial_table(full, ext_cap);
  const auto half_bis = bispecial_table(half, std::min(ext_cap, half.max_factor_length()));

  bool bis_agree = true;
  for (std::size_t n = 0; n <= n_max; ++n) {
    ComplexityRow row{n, 0, 0, 0, false};
    if (n <= full_counts) row.c = full.count(n);
    if (n + 1 <= full_counts) row.dc = full.count(n + 1) - full.count(n);
    if (n + 2 <= full_counts) {
      row.d2c = full.count(n + 2) - 2 * full.count(n + 1) + full.count(n);
    }
    if (n >= 1 && n <= ext_cap) {
      bis_agree = bis_agree && n <= half.max_factor_length() &&
                  same_bispecials(full_bis[n], half_bis[n]);
    }
    row.saturated = n <= full_counts && n <= half_counts &&
                    full.count(n) == half.count(n) && bis_agree;
    profile.rows.push_back(row);
  }
  return profile;
}

}  // namespace

ComplexityProfile complexity_profile(const Word& word_prefix, std::size_t n_max) {
  if (n_max + 2 > word_prefix.size()) {
    throw std::out_of_range("complexity_profile: prefix shorter than n_max + 2");
  }
  const FactorIndex full(word_prefix, n_max);
  const FactorIndex half(word_prefix.prefix(word_prefix.size() / 2), n_max);
  return profile_from(full, half, n_max);
}

ConsistencyResult second_difference_consistency(const Word& word_prefix, std::size_t n) {
  const FactorIndex index(word_prefix, n);
  const std::int64_t d2c = index.count(n + 2) - 2 * index.count(n + 1) + index.count(n);
  const std::int64_t bsum = index.b_sum(n);
  return {d2c == bsum, d2c, bsum};
}

ComplexityProfile analyze_infinite(const BidirectiveSequence& seq, std::size_t n_max,
                                   std::size_t growth_cap) {
  std::size_t length = 64;
  while (length < 4 * (n_max + 2)) length *= 2;
  length = std::min(length, growth_cap);

  // A single doubling can agree on an undercount (both prefixes missing the
  // same late factor), so a length is trusted only when two consecutive
  // doublings agree on it.
  Word prefix = generate_word_prefix(seq, length, growth_cap);
  FactorIndex prev(prefix, n_max);
  std::vector<char> prev_agreement;
  while (true) {
    const std::size_t next_length = length * 2;
    if (next_length > growth_cap) {
      const FactorIndex half(prefix.prefix(length / 2), n_max);
      ComplexityProfile profile = profile_from(prev, half, n_max);
      for (std::size_t n = 0; n < profile.rows.size(); ++n) {
        profile.rows[n].saturated =
            profile.rows[n].saturated && n < prev_agreement.size() && prev_agreement[n];
      }
      return profile;
    }
    prefix = generate_word_prefix(seq, next_length, growth_cap);
    FactorIndex cur(prefix, n_max);
    ComplexityProfile profile = profile_from(cur, prev, n_max);
    std::vector<char> agreement(profile.rows.size());
    for (std::size_t n = 0; n < profile.rows.size(); ++n) {
      agreement[n] = profile.rows[n].saturated ? 1 : 0;
      profile.rows[n].saturated = profile.rows[n].saturated && n < prev_agreement.size() &&
                                  prev_agreement[n];
    }
    if (profile.saturated_up_to(n_max)) return profile;
    length = next_length;
    prev = std::move(cur);
    prev_agreement = std::move(agreement);
  }
}

BispecialReport classify_factor(const Word& word_prefix, const Word& factor) {
  const FactorIndex index(word_prefix, factor.size());
  auto report = index.classify(factor);
  if (!report) throw std::invalid_argument("classify_factor: factor does not occur in prefix");
  return *report;
}

std::vector<BispecialReport> bispecials_up_to(const Word& word_prefix, std::size_t n_max) {
  return FactorIndex(word_prefix, n_max).bispecials_up_to(n_max);
}

BispecialReport classify_factor_scan(const Word& word_prefix, const Word& factor) {
  if (!contains(word_prefix, factor)) {
    throw std::invalid_argument("classify_factor_scan: factor does not occur in prefix");
  }
  BispecialReport r;
  r.factor = factor;
  for (const std::size_t pos : occurrences(word_prefix, factor)) {
    const bool has_left = pos > 0;
    const bool has_right = pos + factor.size() < word_prefix.size();
    if (has_left) r.left_extensions |= 1u << word_prefix[pos - 1];
    if (has_right) r.right_extensions |= 1u << word_prefix[pos + factor.size()];
    if (has_left && has_right) {
      r.extension_pairs |=
          1u << (2 * word_prefix[pos - 1] + word_prefix[pos + factor.size()]);
    }
  }
  r.b_value = std::popcount(r.extension_pairs) - std::popcount(r.right_extensions) -
              std::popcount(r.left_extensions) + 1;
  r.classification = classify_extensions(r.extension_pairs, r.left_extensions, r.right_extensions);
  return r;
}

}  // namespace gpw
