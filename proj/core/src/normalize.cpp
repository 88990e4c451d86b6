#include "gpw/normalize.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "gpw/closure.hpp"

namespace gpw {

namespace {

// Serves the input stream with a rewritable finite prefix: the prefix rules
// mutate `buffer`, everything past it comes untouched from the original
// sequence starting at `next_index`.
struct TermSource {
  const BidirectiveSequence& seq;
  std::vector<SequenceTerm> buffer;
  std::size_t next_index = 1;   // next original term to pull into the buffer
  std::size_t served = 0;       // buffer terms already handed out

  void materialize(std::size_t count) {
    while (buffer.size() < count) {
      buffer.push_back(seq.term(next_index));
      ++next_index;
    }
  }

  bool buffer_exhausted() const { return served >= buffer.size(); }

  SequenceTerm next() {
    if (served < buffer.size()) return buffer[served++];
    SequenceTerm t = seq.term(next_index);
    ++next_index;
    ++served;
    return t;
  }
};

// Position (1-based) of the first E within the eventually periodic theta
// stream, or 0 when theta is R^omega.
std::size_t first_e_position(const BidirectiveSequence& seq) {
  const std::size_t bound = seq.theta_preperiod().size() + seq.theta_period().size();
  for (std::size_t i = 1; i <= bound; ++i) {
    if (seq.theta(i) == Antimorphism::E) return i;
  }
  return 0;
}

// Applies the three prefix rules until none matches. They are mutually
// exclusive at any moment and at most a few fire in total.
void apply_prefix_rules(TermSource& src, std::vector<RewriteEvent>& log) {
  const std::size_t first_e_bound = first_e_position(src.seq);
  for (int round = 0; round < 8; ++round) {
    src.materialize(2);
    auto& buf = src.buffer;

    // (a a', RR) -> (a a' a, RER)
    if (buf[0].theta == Antimorphism::R && buf[1].theta == Antimorphism::R &&
        buf[1].letter == complement(buf[0].letter)) {
      buf[1].theta = Antimorphism::E;
      buf.insert(buf.begin() + 2, {buf[0].letter, Antimorphism::R});
      log.push_back({RewriteRule::prefix_rr, 1});
      continue;
    }

    // Locate the first E in the current (possibly already rewritten) stream.
    std::size_t j = 0;
    const std::size_t bound = std::max<std::size_t>(buf.size(), first_e_bound + 4);
    for (std::size_t i = 1; i <= bound; ++i) {
      src.materialize(i);
      if (buf[i - 1].theta == Antimorphism::E) {
        j = i;
        break;
      }
    }
    if (j == 0) break;  // theta = R^omega, no run rule can match

    const Letter a = buf[0].letter;
    auto constant_run = [&](std::size_t count) {
      for (std::size_t i = 0; i < count; ++i) {
        if (buf[i].letter != a) return false;
      }
      return true;
    };

    // (a^i, R^{i-1}E) -> (a^i a', R^i E) with i = j
    if (constant_run(j)) {
      buf[j - 1] = {a, Antimorphism::R};
      buf.insert(buf.begin() + static_cast<std::ptrdiff_t>(j), {complement(a), Antimorphism::E});
      log.push_back({RewriteRule::prefix_run_e, 1});
      continue;
    }

    // (a^i a'a', R^i EE) -> (a^i a'a' a, R^i ERE) with i = j-1 >= 1
    if (j >= 2) {
      src.materialize(j + 1);
      if (constant_run(j - 1) && buf[j - 1].letter == complement(a) &&
          buf[j].letter == complement(a) && buf[j].theta == Antimorphism::E) {
        buf[j] = {complement(a), Antimorphism::R};
        buf.insert(buf.begin() + static_cast<std::ptrdiff_t>(j + 1), {a, Antimorphism::E});
        log.push_back({RewriteRule::prefix_run_ee, 1});
        continue;
      }
    }
    break;
  }
}

bool forbidden_factor(const SequenceTerm& t1, const SequenceTerm& t2, const SequenceTerm& t3) {
  return t2.theta == opposite(t1.theta) && t3.theta == t2.theta &&
         t3.letter == complement(t2.letter);
}

}  // namespace

NormalizationResult normalize(const BidirectiveSequence& seq, std::size_t horizon) {
  NormalizationResult result;
  TermSource src{seq, {}, 1, 0};
  apply_prefix_rules(src, result.rewrite_log);

  const std::size_t delta_pre = seq.delta_preperiod().size();
  const std::size_t theta_pre = seq.theta_preperiod().size();
  const std::size_t delta_per = seq.delta_period().size();
  const std::size_t theta_per = seq.theta_period().size();

  std::vector<SequenceTerm> out;
  auto ensure = [&](std::size_t count) {
    while (out.size() < count) out.push_back(src.next());
  };

  // Scan state at window p: the two fixed terms plus the phase of the next
  // input pull. Recurrence of a state means the output repeats from there on.
  using ScanState = std::tuple<int, int, std::size_t, std::size_t>;
  std::map<ScanState, std::size_t> seen;
  std::optional<std::pair<std::size_t, std::size_t>> cycle;  // [start, end)

  auto encode = [](const SequenceTerm& t) {
    return (t.letter << 1) | (t.theta == Antimorphism::E ? 1 : 0);
  };

  std::size_t p = 0;  // 0-based window start
  while (out.size() < horizon + 2 && !cycle) {
    // Memoize only once pulls come from the periodic zone of the original
    // sequence (buffer exhausted, both preperiods passed).
    if (out.size() == p + 2 && src.buffer_exhausted() && src.next_index > delta_pre &&
        src.next_index > theta_pre) {
      ScanState state{encode(out[p]), encode(out[p + 1]),
                      (src.next_index - 1 - delta_pre) % delta_per,
                      (src.next_index - 1 - theta_pre) % theta_per};
      auto [it, inserted] = seen.emplace(state, p);
      if (!inserted) {
        cycle = {it->second, p};
        break;
      }
    }
    ensure(p + 3);
    if (forbidden_factor(out[p], out[p + 1], out[p + 2])) {
      out[p + 2] = {complement(out[p + 1].letter), out[p].theta};
      out.push_back(out[p + 1]);
      result.rewrite_log.push_back({RewriteRule::factor, p + 1});
      p += 2;
    } else {
      p += 1;
    }
  }

  if (cycle) {
    const auto [start, end] = *cycle;
    std::vector<SequenceTerm> pre(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(start));
    std::vector<SequenceTerm> per(out.begin() + static_cast<std::ptrdiff_t>(start),
                                  out.begin() + static_cast<std::ptrdiff_t>(end));
    const BidirectiveSequence folded = canonical_form(sequence_from_terms(pre, per));
    result.closed_form = folded;
    result.closed_form_found = true;
    result.horizon_terms.reserve(horizon);
    for (std::size_t i = 1; i <= horizon; ++i) result.horizon_terms.push_back(folded.term(i));
  } else {
    result.closed_form_found = false;
    result.horizon_terms.assign(out.begin(),
                                out.begin() + static_cast<std::ptrdiff_t>(
                                                  std::min(horizon, out.size())));
  }
  return result;
}

NormalizationCheck is_normalized(const BidirectiveSequence& seq, std::size_t horizon_steps) {
  const PrefixChain chain = generate_chain(seq, horizon_steps);
  const Word& word = chain.last();

  std::set<std::size_t> chain_lengths;
  chain_lengths.insert(0);
  for (const auto& step : chain.steps) chain_lengths.insert(step.prefix.size());

  std::set<std::size_t> palindromic;
  for (Antimorphism t : {Antimorphism::R, Antimorphism::E}) {
    for (std::size_t len : theta_palindromic_prefix_lengths(t, word)) palindromic.insert(len);
  }
  for (std::size_t len : palindromic) {
    if (!chain_lengths.contains(len)) {
      return {false, word.prefix(len)};
    }
  }
  return {true, std::nullopt};
}

bool syntactic_normal_check(const BidirectiveSequence& seq, std::size_t horizon_terms) {
  // Forbidden prefix shapes are exactly the left-hand sides of the three
  // prefix rules.
  if (seq.theta(1) == Antimorphism::R && seq.theta(2) == Antimorphism::R &&
      seq.delta(2) == complement(seq.delta(1))) {
    return false;
  }
  std::size_t j = 0;
  for (std::size_t i = 1; i <= horizon_terms; ++i) {
    if (seq.theta(i) == Antimorphism::E) {
      j = i;
      break;
    }
  }
  if (j != 0) {
    const Letter a = seq.delta(1);
    bool run = true;
    for (std::size_t i = 1; i < j && run; ++i) run = seq.delta(i) == a;
    if (run && seq.delta(j) == a) return false;  // (a^i, R^{i-1}E)
    if (run && j >= 2 && seq.delta(j) == complement(a) &&
        seq.delta(j + 1) == complement(a) && seq.theta(j + 1) == Antimorphism::E) {
      return false;  // (a^i a'a', R^i EE)
    }
  }
  for (std::size_t i = 1; i + 2 <= horizon_terms; ++i) {
    if (forbidden_factor(seq.term(i), seq.term(i + 1), seq.term(i + 2))) return false;
  }
  return true;
}

}  // namespace gpw
