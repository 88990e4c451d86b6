#include "oracles.hpp"

#include <algorithm>

namespace gpw::testing {

std::string theta_image(Antimorphism t, const std::string& w) {
  std::string out(w.rbegin(), w.rend());
  if (t == Antimorphism::E) {
    for (char& c : out) c = c == '0' ? '1' : '0';
  }
  return out;
}

bool brute_is_theta_palindrome(Antimorphism t, const std::string& w) {
  return w == theta_image(t, w);
}

std::size_t brute_palindromic_suffix_length(Antimorphism t, const std::string& w) {
  for (std::size_t len = w.size(); len > 0; --len) {
    if (brute_is_theta_palindrome(t, w.substr(w.size() - len))) return len;
  }
  return 0;
}

std::string brute_closure(Antimorphism t, const std::string& w) {
  for (std::size_t target = w.size(); target <= 2 * w.size(); ++target) {
    // Complete w to length `target` by the mirror constraint
    // x[i] = op(x[target-1-i]); fail on conflicts inside w.
    std::string x(target, '?');
    std::copy(w.begin(), w.end(), x.begin());
    bool ok = true;
    for (std::size_t i = 0; i < target && ok; ++i) {
      if (x[i] == '?') continue;
      const char mirrored =
          t == Antimorphism::R ? x[i] : (x[i] == '0' ? '1' : '0');
      char& slot = x[target - 1 - i];
      if (slot == '?') {
        slot = mirrored;
      } else if (slot != mirrored) {
        ok = false;
      }
    }
    if (!ok) continue;
    std::replace(x.begin(), x.end(), '?', '0');
    if (brute_is_theta_palindrome(t, x) && x.compare(0, w.size(), w) == 0) return x;
  }
  // Unreachable: w . theta(w) is always a theta-palindrome of length 2|w|.
  return w + theta_image(t, w);
}

BruteFactorTable::BruteFactorTable(const std::string& text, std::size_t n_max_in)
    : n_max(n_max_in), factors_by_length(n_max_in + 1) {
  factors_by_length[0].insert("");
  for (std::size_t n = 1; n <= n_max && n <= text.size(); ++n) {
    for (std::size_t i = 0; i + n <= text.size(); ++i) {
      factors_by_length[n].insert(text.substr(i, n));
    }
  }
  for (std::size_t n = 1; n <= n_max && n <= text.size(); ++n) {
    for (const std::string& w : factors_by_length[n]) {
      BruteFactorData d;
      for (char a : {'0', '1'}) {
        if (n + 1 <= text.size() && text.find(a + w) != std::string::npos) {
          d.left.insert(std::string(1, a));
        }
        if (n + 1 <= text.size() && text.find(w + a) != std::string::npos) {
          d.right.insert(std::string(1, a));
        }
        for (char b : {'0', '1'}) {
          if (n + 2 <= text.size() && text.find(a + w + b) != std::string::npos) {
            d.pairs.insert({a, b});
          }
        }
      }
      data.emplace(w, std::move(d));
    }
  }
}

std::int64_t BruteFactorTable::count(std::size_t n) const {
  return static_cast<std::int64_t>(factors_by_length.at(n).size());
}

const BruteFactorData* BruteFactorTable::find(const std::string& factor) const {
  const auto it = data.find(factor);
  return it == data.end() ? nullptr : &it->second;
}

int BruteFactorTable::b_value(const std::string& factor) const {
  const BruteFactorData* d = find(factor);
  return static_cast<int>(d->pairs.size()) - static_cast<int>(d->right.size()) -
         static_cast<int>(d->left.size()) + 1;
}

std::vector<std::string> BruteFactorTable::bispecials(std::size_t n) const {
  std::vector<std::string> out;
  for (const std::string& w : factors_by_length.at(n)) {
    const BruteFactorData* d = find(w);
    if (d->left.size() == 2 && d->right.size() == 2) out.push_back(w);
  }
  return out;
}

std::size_t brute_smallest_period(const std::string& text) {
  for (std::size_t p = 1; p <= text.size(); ++p) {
    bool ok = true;
    for (std::size_t i = p; i < text.size() && ok; ++i) ok = text[i] == text[i - p];
    if (ok) return p;
  }
  return text.size();
}

BidirectiveSequence random_sequence(std::mt19937_64& rng, std::size_t max_pre,
                                    std::size_t max_per) {
  std::uniform_int_distribution<std::size_t> pre_len(0, max_pre);
  std::uniform_int_distribution<std::size_t> per_len(1, max_per);
  std::uniform_int_distribution<int> bit(0, 1);

  Word dpre, dper;
  std::vector<Antimorphism> tpre, tper;
  for (std::size_t i = pre_len(rng); i > 0; --i) dpre.push_back(bit(rng));
  for (std::size_t i = per_len(rng); i > 0; --i) dper.push_back(bit(rng));
  for (std::size_t i = pre_len(rng); i > 0; --i) {
    tpre.push_back(bit(rng) ? Antimorphism::E : Antimorphism::R);
  }
  for (std::size_t i = per_len(rng); i > 0; --i) {
    tper.push_back(bit(rng) ? Antimorphism::E : Antimorphism::R);
  }
  return BidirectiveSequence(std::move(dpre), std::move(dper), std::move(tpre),
                             std::move(tper));
}

Word random_word(std::mt19937_64& rng, std::size_t length) {
  std::uniform_int_distribution<int> bit(0, 1);
  Word w;
  for (std::size_t i = 0; i < length; ++i) w.push_back(bit(rng));
  return w;
}

}  // namespace gpw::testing
