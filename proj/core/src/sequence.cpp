#include "gpw/sequence.hpp"

#include <algorithm>
#include <numeric>

namespace gpw {

namespace {

std::size_t lcm_size(std::size_t a, std::size_t b) { return a / std::gcd(a, b) * b; }

// Smallest d dividing terms.size() with terms = (terms[0..d))^(n/d).
template <typename T>
std::size_t primitive_root_length(const std::vector<T>& terms) {
  const std::size_t n = terms.size();
  for (std::size_t d = 1; d <= n / 2; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = terms[i] == terms[i - d];
    if (ok) return d;
  }
  return n;
}

// Minimal-preperiod form: pops preperiod terms that equal the last period
// term, rotating the period accordingly.
template <typename T>
void absorb_preperiod(std::vector<T>& pre, std::vector<T>& per) {
  while (!pre.empty() && pre.back() == per.back()) {
    per.insert(per.begin(), per.back());
    per.pop_back();
    pre.pop_back();
  }
}

struct PairForm {
  std::vector<SequenceTerm> pre;
  std::vector<SequenceTerm> per;
};

PairForm canonical_pairs(const BidirectiveSequence& seq) {
  PairForm f;
  const std::size_t pre_len =
      std::max(seq.delta_preperiod().size(), seq.theta_preperiod().size());
  const std::size_t per_len = lcm_size(seq.delta_period().size(), seq.theta_period().size());
  for (std::size_t i = 1; i <= pre_len; ++i) f.pre.push_back(seq.term(i));
  for (std::size_t i = pre_len + 1; i <= pre_len + per_len; ++i) f.per.push_back(seq.term(i));
  f.per.resize(primitive_root_length(f.per));
  absorb_preperiod(f.pre, f.per);
  f.per.resize(primitive_root_length(f.per));
  return f;
}

}  // namespace

BidirectiveSequence::BidirectiveSequence(Word delta_preperiod, Word delta_period,
                                         std::vector<Antimorphism> theta_preperiod,
                                         std::vector<Antimorphism> theta_period)
    : delta_pre_(std::move(delta_preperiod)),
      delta_per_(std::move(delta_period)),
      theta_pre_(std::move(theta_preperiod)),
      theta_per_(std::move(theta_period)) {
  if (delta_per_.empty() || theta_per_.empty()) {
    throw std::invalid_argument("bidirective sequence periods must be nonempty");
  }
}

BidirectiveSequence sequence_from_terms(const std::vector<SequenceTerm>& preperiod,
                                        const std::vector<SequenceTerm>& period) {
  Word dpre, dper;
  std::vector<Antimorphism> tpre, tper;
  for (const auto& t : preperiod) {
    dpre.push_back(t.letter);
    tpre.push_back(t.theta);
  }
  for (const auto& t : period) {
    dper.push_back(t.letter);
    tper.push_back(t.theta);
  }
  return BidirectiveSequence(std::move(dpre), std::move(dper), std::move(tpre),
                             std::move(tper));
}

namespace {

struct SideLiteral {
  std::string pre;
  std::string per;
};

SideLiteral parse_side(std::string_view s, std::size_t base, std::string_view alphabet) {
  SideLiteral out;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg, std::size_t at) { throw parse_error(msg, base + at); };
  auto is_symbol = [&](char c) { return alphabet.find(c) != std::string_view::npos; };

  while (i < s.size() && is_symbol(s[i])) {
    out.pre.push_back(s[i]);
    ++i;
  }
  if (i < s.size() && s[i] == '(') {
    ++i;
    while (i < s.size() && is_symbol(s[i])) {
      out.per.push_back(s[i]);
      ++i;
    }
    if (i >= s.size() || s[i] != ')') fail("expected ')'", i);
    ++i;
  } else {
    // `1^w` form: the last prefix symbol is the period.
    if (out.pre.empty()) fail("expected symbol or '('", i);
    out.per.push_back(out.pre.back());
    out.pre.pop_back();
  }
  if (out.per.empty()) fail("period must be nonempty", i);
  if (i + 1 >= s.size() || s[i] != '^' || s[i + 1] != 'w') fail("expected '^w'", i);
  i += 2;
  if (i != s.size()) fail("trailing characters after '^w'", i);
  return out;
}

}  // namespace

BidirectiveSequence parse_sequence(std::string_view literal) {
  std::string text;
  text.reserve(literal.size());
  for (char c : literal) {
    if (c != ' ' && c != '\t') text.push_back(c);
  }
  const std::size_t semi = text.find(';');
  if (semi == std::string::npos) {
    throw parse_error("expected ';' separating delta and theta sides", text.size());
  }
  const SideLiteral delta = parse_side(std::string_view(text).substr(0, semi), 0, "01");
  const SideLiteral theta =
      parse_side(std::string_view(text).substr(semi + 1), semi + 1, "RE");

  auto thetas = [](const std::string& s) {
    std::vector<Antimorphism> v;
    for (char c : s) v.push_back(c == 'R' ? Antimorphism::R : Antimorphism::E);
    return v;
  };
  return BidirectiveSequence(Word::from_string(delta.pre), Word::from_string(delta.per),
                             thetas(theta.pre), thetas(theta.per));
}

namespace {

template <typename T, typename Render>
std::string render_side(std::vector<T> pre, std::vector<T> per, Render render) {
  per.resize(primitive_root_length(per));
  // Drop the preperiod only when it absorbs completely into the period.
  std::vector<T> pre2 = pre;
  std::vector<T> per2 = per;
  absorb_preperiod(pre2, per2);
  if (pre2.empty()) {
    pre = std::move(pre2);
    per = std::move(per2);
  }
  std::string out;
  for (const T& t : pre) out.push_back(render(t));
  out.push_back('(');
  for (const T& t : per) out.push_back(render(t));
  out += ")^w";
  return out;
}

}  // namespace

std::string render_sequence(const BidirectiveSequence& seq) {
  const PairForm f = canonical_pairs(seq);
  std::vector<Letter> dpre, dper;
  std::vector<Antimorphism> tpre, tper;
  for (const auto& t : f.pre) {
    dpre.push_back(t.letter);
    tpre.push_back(t.theta);
  }
  for (const auto& t : f.per) {
    dper.push_back(t.letter);
    tper.push_back(t.theta);
  }
  return render_side(dpre, dper, [](Letter a) { return static_cast<char>('0' + a); }) + ";" +
         render_side(tpre, tper, [](Antimorphism t) { return to_char(t); });
}

BidirectiveSequence canonical_form(const BidirectiveSequence& seq) {
  const PairForm f = canonical_pairs(seq);
  return sequence_from_terms(f.pre, f.per);
}

bool equivalent(const BidirectiveSequence& a, const BidirectiveSequence& b) {
  const PairForm fa = canonical_pairs(a);
  const PairForm fb = canonical_pairs(b);
  return fa.pre == fb.pre && fa.per == fb.per;
}

}  // namespace gpw
