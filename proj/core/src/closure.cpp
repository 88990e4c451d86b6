#include "gpw/closure.hpp"

namespace gpw {

namespace {

// w = p.s with s the longest theta-palindromic suffix; the closure is
// p.s.theta(p) = w.theta(p).
Word closure_impl(Antimorphism theta, const Word& w) {
  const std::size_t suffix_len = longest_theta_palindromic_suffix_length(theta, w);
  Word result = w;
  result.append(apply(theta, w.prefix(w.size() - suffix_len)));
  return result;
}

}  // namespace

Word palindromic_closure(const Word& w) { return closure_impl(Antimorphism::R, w); }

Word pseudopalindromic_closure(const Word& w) { return closure_impl(Antimorphism::E, w); }

Word generalized_closure(const Word& w, Antimorphism theta) { return closure_impl(theta, w); }

Word thue_morse_image(const Word& w) {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter a = w[i];
    out.push_back(a);
    out.push_back(complement(a));
  }
  return out;
}

PrefixChain generate_chain(const BidirectiveSequence& seq, std::size_t steps,
                           std::size_t growth_cap) {
  PrefixChain chain;
  chain.steps.reserve(steps);
  Word current;
  for (std::size_t k = 1; k <= steps; ++k) {
    if (current.size() >= growth_cap) throw growth_cap_error(growth_cap);
    current.push_back(seq.delta(k));
    current = closure_impl(seq.theta(k), current);
    if (current.size() > growth_cap) throw growth_cap_error(growth_cap);
    chain.steps.push_back({k, seq.delta(k), seq.theta(k), current});
  }
  return chain;
}

Word generate_word_prefix(const BidirectiveSequence& seq, std::size_t length,
                          std::size_t growth_cap) {
  Word current;
  for (std::size_t k = 1; current.size() < length; ++k) {
    if (current.size() >= growth_cap) throw growth_cap_error(growth_cap);
    current.push_back(seq.delta(k));
    current = closure_impl(seq.theta(k), current);
    if (current.size() > growth_cap && current.size() < length) {
      throw growth_cap_error(growth_cap);
    }
  }
  return current.prefix(length);
}

}  // namespace gpw
