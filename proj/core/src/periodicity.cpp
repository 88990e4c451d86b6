#include "gpw/periodicity.hpp"

#include <numeric>
#include <stdexcept>

#include "gpw/complexity.hpp"
#include "gpw/normalize.hpp"

namespace gpw {

namespace {

int alignment_bit(const BidirectiveSequence& seq, std::size_t n) {
  return (seq.delta(n + 1) == 1 ? 1 : 0) ^ (seq.theta(n) == Antimorphism::R ? 1 : 0);
}

}  // namespace

ConditionResult satisfies_condition(const BidirectiveSequence& seq) {
  // b_n = [delta_{n+1}=1] xor [theta_n=R] is eventually periodic; it is
  // eventually constant iff it is constant over one aligned full period
  // beyond both preperiods.
  const std::size_t pre = std::max(seq.delta_preperiod().size(), seq.theta_preperiod().size());
  const std::size_t per =
      std::lcm(seq.delta_period().size(), seq.theta_period().size());
  const std::size_t start = pre + 1;

  const int value = alignment_bit(seq, start);
  for (std::size_t n = start + 1; n < start + per; ++n) {
    if (alignment_bit(seq, n) != value) {
      // Indices with opposite bits realize the negated condition.
      std::size_t n_zero = value == 0 ? start : n;
      std::size_t n_one = value == 1 ? start : n;
      return {false, std::nullopt, std::make_pair(n_zero, n_one)};
    }
  }

  // Minimal n0: last position (within the decided range) whose bit differs.
  std::size_t n0 = 0;
  for (std::size_t n = start - 1; n >= 1; --n) {
    if (alignment_bit(seq, n) != value) {
      n0 = n;
      break;
    }
  }
  // The four witness combinations collapse to two: constant 0 is the
  // (a=1, theta=R) class, constant 1 the (a=0, theta=R) class.
  const ConditionWitness witness{value == 1 ? 0 : 1, Antimorphism::R, n0};
  return {true, witness, std::nullopt};
}

Word primitive_root(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d <= n / 2; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
    if (ok) return w.prefix(d);
  }
  return w;
}

namespace {

// Complement morphism E.R = R.E: exchanges letters without reversing.
Word exchange_image(const Word& w) { return w.complemented(); }

Word period_case_constant_theta(const BidirectiveSequence& seq, std::size_t growth_cap) {
  // Theta eventually constant: align n0 past both preperiods with
  // theta_{n0} equal to the eventual antimorphism, then the period is
  // w_{n0+1} w_{n0}^{-1}.
  const std::size_t pre = std::max(seq.delta_preperiod().size(), seq.theta_preperiod().size());
  const std::size_t span = pre + std::lcm(seq.delta_period().size(), seq.theta_period().size());
  const Antimorphism theta = seq.theta(span + 1);
  const Letter a = seq.delta(span + 1);
  std::size_t n0 = 1;
  for (std::size_t i = span; i >= 1; --i) {
    if (seq.theta(i) != theta || seq.delta(i + 1) != a) {
      n0 = i + 1;
      break;
    }
  }
  if (seq.theta(n0) != theta) ++n0;
  const PrefixChain chain = generate_chain(seq, n0 + 1, growth_cap);
  return primitive_root(chain.prefix(n0 + 1).without_suffix(chain.prefix(n0)));
}

Word period_case_alternating(const BidirectiveSequence& seq, std::size_t growth_cap) {
  // Both E and R occur infinitely often: normalize first; the normalized
  // sequence has the shape (nu (a a')^w, th (t' t)^w).
  const NormalizationResult norm = normalize(seq);
  if (!norm.closed_form_found) {
    throw std::logic_error("normalization did not fold to a closed form");
  }
  const BidirectiveSequence& ns = *norm.closed_form;
  const std::size_t pre =
      std::max(ns.delta_preperiod().size(), ns.theta_preperiod().size());
  // Align so that theta_{n0} equals the antimorphism at n0+2; extending by
  // one term always suffices in the alternating tail.
  std::size_t n0 = std::max<std::size_t>(pre, 1);
  if (ns.theta(n0) != ns.theta(n0 + 2)) ++n0;
  if (ns.theta(n0) != ns.theta(n0 + 2)) {
    throw std::logic_error("normalized sequence lacks the alternating tail shape");
  }
  const PrefixChain chain = generate_chain(ns, n0 + 1, growth_cap);
  const Word w_n0 = chain.prefix(n0);
  const Word w_n1 = chain.prefix(n0 + 1);
  Word candidate = w_n1 + exchange_image(w_n1.without_prefix(w_n0));
  return primitive_root(candidate.without_suffix(w_n0));
}

bool theta_period_constant(const BidirectiveSequence& seq) {
  const auto& per = seq.theta_period();
  for (const Antimorphism t : per) {
    if (t != per.front()) return false;
  }
  return true;
}

}  // namespace

Word extract_period(const BidirectiveSequence& seq, std::size_t growth_cap) {
  const ConditionResult condition = satisfies_condition(seq);
  if (!condition.holds) {
    throw std::invalid_argument("extract_period requires the periodicity condition");
  }
  const Word period = theta_period_constant(seq)
                          ? period_case_constant_theta(seq, growth_cap)
                          : period_case_alternating(seq, growth_cap);

  // The word is purely periodic; the candidate must tile it from the start.
  const Word sample = generate_word_prefix(seq, 10 * period.size(), growth_cap);
  for (std::size_t i = 0; i < sample.size(); ++i) {
    if (sample[i] != period[i % period.size()]) {
      throw std::logic_error("extracted period does not tile the generated word");
    }
  }
  return period;
}

PeriodicityVerdict is_periodic(const BidirectiveSequence& seq, std::size_t growth_cap) {
  const ConditionResult condition = satisfies_condition(seq);
  if (!condition.holds) {
    return {false, std::nullopt, std::nullopt, condition.refutation};
  }
  return {true, condition.witness, extract_period(seq, growth_cap), std::nullopt};
}

MorseHedlundVerdict morse_hedlund_oracle(const Word& word_prefix, std::size_t n_max) {
  if (word_prefix.size() < 4 * n_max) {
    throw std::invalid_argument("morse_hedlund_oracle: prefix shorter than 4 n_max");
  }
  const std::vector<std::int64_t> counts = factor_counts(word_prefix, n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (counts[n] <= static_cast<std::int64_t>(n)) {
      // Smallest period of the prefix, by brute force.
      for (std::size_t p = 1; p <= word_prefix.size(); ++p) {
        bool ok = true;
        for (std::size_t i = p; i < word_prefix.size() && ok; ++i) {
          ok = word_prefix[i] == word_prefix[i - p];
        }
        if (ok) {
          return {true, n, word_prefix.prefix(p)};
        }
      }
    }
  }
  return {false, 0, std::nullopt};
}

}  // namespace gpw
