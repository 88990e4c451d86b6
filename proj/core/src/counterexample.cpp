#include "gpw/counterexample.hpp"

#include <stdexcept>

#include "gpw/complexity.hpp"

namespace gpw::counterexample {

namespace {

// w_k with the empty-word convention for k <= 0 (indices are signed so the
// k = 0 recurrences can reach w_{-2}).
Word prefix_or_empty(const std::vector<Word>& ws, std::ptrdiff_t k) {
  if (k <= 0) return Word{};
  return ws.at(static_cast<std::size_t>(k) - 1);
}

std::vector<Word> chain_words(std::size_t k, std::size_t growth_cap) {
  const PrefixChain chain = generate_chain(sequence(), k, growth_cap);
  std::vector<Word> ws;
  ws.reserve(k);
  for (const auto& step : chain.steps) ws.push_back(step.prefix);
  return ws;
}

Word word_10() {
  Word w;
  w.push_back(1);
  w.push_back(0);
  return w;
}

Word word_010() { return Word::from_string("010"); }

}  // namespace

BidirectiveSequence sequence() {
  return BidirectiveSequence(Word{}, Word::from_string("1"), {},
                             {Antimorphism::E, Antimorphism::E, Antimorphism::R,
                              Antimorphism::R});
}

Word prefix(std::size_t k, std::size_t growth_cap) {
  if (k == 0) throw std::invalid_argument("prefix index starts at 1");
  return chain_words(k, growth_cap).back();
}

std::vector<Word> prefixes(std::size_t k, std::size_t growth_cap) {
  return chain_words(k, growth_cap);
}

Word sufficient_prefix(std::size_t factor_length, std::size_t growth_cap) {
  const BidirectiveSequence seq = sequence();
  Word current;
  std::size_t k = 0;
  while (current.size() < factor_length) {
    ++k;
    current.push_back(seq.delta(k));
    current = generalized_closure(current, seq.theta(k));
    if (current.size() > growth_cap) throw growth_cap_error(growth_cap);
  }
  // w_{k+7} contains all factors of length <= |w_k|.
  for (std::size_t i = k + 1; i <= k + 7; ++i) {
    current.push_back(seq.delta(i));
    current = generalized_closure(current, seq.theta(i));
    if (current.size() > growth_cap) throw growth_cap_error(growth_cap);
  }
  return current;
}

bool recurrence_check(std::size_t k, std::size_t growth_cap) {
  const std::vector<Word> ws = chain_words(4 * k + 4, growth_cap);
  const auto w = [&](std::ptrdiff_t i) { return prefix_or_empty(ws, i); };
  const std::ptrdiff_t k4 = static_cast<std::ptrdiff_t>(4 * k);

  const Word r1 = w(k4) + word_10() + apply(Antimorphism::E, w(k4));
  if (r1 != w(k4 + 1)) return false;

  const Word r2 = w(k4 + 1) + w(k4 + 1).without_prefix(w(k4 - 2));
  if (r2 != w(k4 + 2)) return false;

  const Word r3 = w(k4 + 2) + apply(Antimorphism::R, w(k4 + 2)).without_prefix(word_010());
  if (r3 != w(k4 + 3)) return false;

  const Word r4 = w(k4 + 3) + w(k4 + 3).without_prefix(w(k4));
  return r4 == w(k4 + 4);
}

Word weak_bispecial(std::size_t k, WeakFamily family, std::size_t growth_cap) {
  if (k == 0) throw std::invalid_argument("weak bispecial families start at k = 1");
  const std::vector<Word> ws = chain_words(4 * k + 1, growth_cap);
  const auto w = [&](std::size_t i) { return ws.at(i - 1); };
  const std::size_t p = 4 * (k - 1);  // 4(k-1)

  if (family == WeakFamily::s_4k_plus_1) {
    // s_{4k+1} = R(w_{4(k-1)+1}) w_{4(k-1)}^{-1} w_{4(k-1)+3} w_{4(k-1)}^{-1} w_{4(k-1)+1}
    const Word base = p == 0 ? Word{} : w(p);
    return apply(Antimorphism::R, w(p + 1)) + w(p + 3).without_prefix(base) +
           w(p + 1).without_prefix(base);
  }
  // s_{4k+3} = E(w_{4(k-1)+3}) w_{4k-2}^{-1} w_{4k+1} w_{4k-2}^{-1} w_{4(k-1)+3}
  return apply(Antimorphism::E, w(p + 3)) + w(4 * k + 1).without_prefix(w(4 * k - 2)) +
         w(p + 3).without_prefix(w(4 * k - 2));
}

namespace {

bool all_four_extensions_occur(const Word& factor, const Word& text) {
  for (Letter a : {0, 1}) {
    for (Letter b : {0, 1}) {
      Word ext;
      ext.push_back(a);
      ext.append(factor);
      ext.push_back(b);
      if (!contains(text, ext)) return false;
    }
  }
  return true;
}

}  // namespace

bool strong_bispecial_check(std::size_t k, std::size_t growth_cap) {
  const std::vector<Word> ws = chain_words(4 * (k + 1) + 3, growth_cap);
  const auto w = [&](std::size_t i) { return ws.at(i - 1); };

  // All four extensions of a strong bispecial occur; searching a prefix that
  // contains every factor of that length makes the test exact.
  const Word text = sufficient_prefix(w(4 * k + 3).size() + 2, growth_cap);
  if (!all_four_extensions_occur(w(4 * k + 1), text)) return false;
  if (!all_four_extensions_occur(w(4 * k + 3), text)) return false;

  Word central1;
  central1.push_back(1);
  central1.append(w(4 * k + 1));
  central1.push_back(0);
  if (!is_central_factor(central1, w(4 * (k + 1) + 1))) return false;

  Word central3;
  central3.push_back(0);
  central3.append(w(4 * k + 3));
  central3.push_back(0);
  return is_central_factor(central3, w(4 * (k + 1) + 3));
}

bool length_interleaving_check(std::size_t k, std::size_t growth_cap) {
  if (k == 0) throw std::invalid_argument("length interleaving starts at k = 1");
  const std::vector<Word> ws = chain_words(4 * k + 3, growth_cap);
  const auto w = [&](std::size_t i) { return ws.at(i - 1); };
  const std::size_t s1 = weak_bispecial(k, WeakFamily::s_4k_plus_1, growth_cap).size();
  const std::size_t s3 = weak_bispecial(k, WeakFamily::s_4k_plus_3, growth_cap).size();
  const std::size_t s1_next = weak_bispecial(k + 1, WeakFamily::s_4k_plus_1, growth_cap).size();
  return s1 < w(4 * k + 1).size() && w(4 * k + 1).size() < s3 && s3 < w(4 * k + 3).size() &&
         w(4 * k + 3).size() < s1_next;
}

bool p_suffix_check(std::size_t k, std::size_t growth_cap) {
  if (k == 0) throw std::invalid_argument("p factors start at k = 1");
  const std::vector<Word> ws = chain_words(4 * k + 2, growth_cap);
  const auto w = [&](std::size_t i) { return ws.at(i - 1); };
  const std::size_t p = 4 * (k - 1);
  const Word base = p == 0 ? Word{} : w(p);

  const Word p1 = w(p + 3) + w(p + 1).without_prefix(base);
  const Word s1 = weak_bispecial(k, WeakFamily::s_4k_plus_1, growth_cap);
  if (!s1.has_suffix(p1) || !w(4 * k).has_prefix(p1)) return false;

  const Word p3 = w(4 * k + 1) + w(p + 3).without_prefix(w(4 * k - 2));
  const Word s3 = weak_bispecial(k, WeakFamily::s_4k_plus_3, growth_cap);
  return s3.has_suffix(p3) && w(4 * k + 2).has_prefix(p3);
}

CounterexampleReport verify_4n(std::size_t n_max, std::size_t growth_cap) {
  if (n_max < 10) throw std::invalid_argument("verify_4n requires n_max >= 10");
  CounterexampleReport report;
  report.n_max = n_max;

  const ComplexityProfile profile = analyze_infinite(sequence(), n_max, growth_cap);
  // The doubling heuristic is cross-checked against the prefix that provably
  // contains every factor of length <= n_max.
  const std::vector<std::int64_t> exact =
      factor_counts(sufficient_prefix(n_max, growth_cap), n_max);
  report.c10 = exact[10];
  report.delta_c9 = exact[10] - exact[9];
  for (std::size_t n = 10; n <= n_max; ++n) {
    const ComplexityRow& row = profile.row(n);
    if (!row.saturated || row.c != exact[n] || row.c <= static_cast<std::int64_t>(4 * n)) {
      report.violations.push_back(n);
    }
  }
  return report;
}

}  // namespace gpw::counterexample
