#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gpw/sequence.hpp"
#include "gpw/word.hpp"

namespace gpw {

/// The rewrite rules of the normalization theorem. The three prefix rules
/// fire first (repeatedly, until none matches); the factor rule is then
/// applied left to right.
enum class RewriteRule {
  prefix_rr,      // (a a', RR)        -> (a a' a, RER)
  prefix_run_e,   // (a^i, R^{i-1}E)   -> (a^i a', R^i E)
  prefix_run_ee,  // (a^i a'a', R^iEE) -> (a^i a'a' a, R^i ERE)
  factor,         // (a b b', t t't')  -> (a b b' b, t t' t t')
};

struct RewriteEvent {
  RewriteRule rule;
  std::size_t position;  // 1-based index of the first term of the match
};

struct NormalizationResult {
  /// Canonical eventually periodic form; absent when cycle detection did not
  /// succeed within the horizon.
  std::optional<BidirectiveSequence> closed_form;
  bool closed_form_found = false;
  /// First `horizon` normalized terms, always valid.
  std::vector<SequenceTerm> horizon_terms;
  std::vector<RewriteEvent> rewrite_log;

  const BidirectiveSequence& normalized() const { return closed_form.value(); }
};

/// Normalizes a bidirective sequence so that the prefix chain of the
/// generated word captures every E- and R-palindromic prefix, without
/// changing the word itself.
NormalizationResult normalize(const BidirectiveSequence& seq, std::size_t horizon = 512);

struct NormalizationCheck {
  bool normalized;
  /// For a negative answer, the shortest pseudopalindromic prefix of the word
  /// missing from the prefix chain.
  std::optional<Word> missed_prefix;
};

/// Semantic check over `horizon_steps` closure iterations: every E- and
/// R-palindromic prefix of w_horizon must appear among the chain prefixes.
NormalizationCheck is_normalized(const BidirectiveSequence& seq, std::size_t horizon_steps);

/// Syntactic check: no forbidden prefix shape and no factor
/// (a b b', theta theta' theta') among the first `horizon_terms` terms.
bool syntactic_normal_check(const BidirectiveSequence& seq, std::size_t horizon_terms);

}  // namespace gpw
