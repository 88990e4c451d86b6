// gpw: generate, normalize and analyze binary generalized pseudostandard
// words given as bidirective-sequence literals like "01(10)^w;(RE)^w".

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gpw/complexity.hpp"
#include "gpw/counterexample.hpp"
#include "gpw/normalize.hpp"
#include "gpw/periodicity.hpp"

using json = nlohmann::ordered_json;
using namespace gpw;
namespace cx = gpw::counterexample;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t growth_cap_from_env() {
  const char* env = std::getenv("PSEUDO_GROWTH_CAP");
  if (env == nullptr || *env == '\0') return kDefaultGrowthCap;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0' || value == 0) {
    throw UsageError("PSEUDO_GROWTH_CAP must be a positive integer");
  }
  return static_cast<std::size_t>(value);
}

// Long words wrap at 53 letters per line, the appendix layout.
void print_wrapped(std::ostream& os, const std::string& letters) {
  for (std::size_t i = 0; i < letters.size(); i += 53) {
    os << letters.substr(i, 53) << '\n';
  }
  if (letters.empty()) os << '\n';
}

const char* rule_name(RewriteRule rule) {
  switch (rule) {
    case RewriteRule::prefix_rr: return "prefix-rr";
    case RewriteRule::prefix_run_e: return "prefix-run-e";
    case RewriteRule::prefix_run_ee: return "prefix-run-ee";
    case RewriteRule::factor: return "factor";
  }
  return "?";
}

json make_envelope(const std::string& command, json input) {
  json out;
  out["command"] = command;
  out["input"] = std::move(input);
  out["result"] = json::object();
  out["diagnostics"] = json::array();
  return out;
}

void emit(const json& envelope) { std::cout << envelope.dump(2) << '\n'; }

// ---------------------------------------------------------------- generate

int cmd_generate(const std::string& literal, std::optional<std::size_t> steps,
                 std::optional<std::size_t> length, const std::string& format,
                 std::size_t cap) {
  if (steps.has_value() == length.has_value()) {
    throw UsageError("generate needs exactly one of --steps or --length");
  }
  const BidirectiveSequence seq = parse_sequence(literal);
  json envelope = make_envelope("generate", {{"literal", literal}});

  if (steps) {
    const PrefixChain chain = generate_chain(seq, *steps, cap);
    if (format == "json") {
      json rows = json::array();
      for (const ChainStep& step : chain.steps) {
        rows.push_back({{"index", step.index},
                        {"letter", std::to_string(step.letter)},
                        {"theta", std::string(1, to_char(step.theta))},
                        {"length", step.prefix.size()},
                        {"prefix", step.prefix.str()}});
      }
      envelope["result"] = {{"steps", std::move(rows)}};
      emit(envelope);
    } else {
      for (const ChainStep& step : chain.steps) {
        std::cout << "k=" << step.index << " delta=" << step.letter
                  << " theta=" << to_char(step.theta) << " len=" << step.prefix.size()
                  << '\n';
        print_wrapped(std::cout, step.prefix.str());
      }
    }
  } else {
    const Word prefix = generate_word_prefix(seq, *length, cap);
    if (format == "json") {
      envelope["result"] = {{"length", prefix.size()}, {"prefix", prefix.str()}};
      emit(envelope);
    } else {
      print_wrapped(std::cout, prefix.str());
    }
  }
  return kExitOk;
}

// --------------------------------------------------------------- normalize

int cmd_normalize(const std::string& literal, std::size_t horizon,
                  const std::string& format, std::size_t cap) {
  (void)cap;
  const BidirectiveSequence seq = parse_sequence(literal);
  const NormalizationResult result = normalize(seq, horizon);

  json rewrites = json::array();
  for (const RewriteEvent& event : result.rewrite_log) {
    rewrites.push_back({{"rule", rule_name(event.rule)}, {"position", event.position}});
  }

  if (format == "json") {
    json envelope = make_envelope("normalize", {{"literal", literal}, {"horizon", horizon}});
    envelope["result"]["closed_form_found"] = result.closed_form_found;
    if (result.closed_form_found) {
      envelope["result"]["normalized"] = render_sequence(result.normalized());
    }
    std::string terms_delta, terms_theta;
    for (const SequenceTerm& term : result.horizon_terms) {
      terms_delta.push_back(static_cast<char>('0' + term.letter));
      terms_theta.push_back(to_char(term.theta));
    }
    envelope["result"]["horizon_delta"] = terms_delta;
    envelope["result"]["horizon_theta"] = terms_theta;
    envelope["result"]["rewrites"] = std::move(rewrites);
    if (!result.closed_form_found) {
      envelope["diagnostics"].push_back("no closed form within the horizon");
    }
    emit(envelope);
  } else {
    if (result.closed_form_found) {
      std::cout << render_sequence(result.normalized()) << '\n';
    } else {
      std::cout << "no closed form within horizon " << horizon << "; explicit terms:\n";
      std::string terms_delta, terms_theta;
      for (const SequenceTerm& term : result.horizon_terms) {
        terms_delta.push_back(static_cast<char>('0' + term.letter));
        terms_theta.push_back(to_char(term.theta));
      }
      print_wrapped(std::cout, terms_delta);
      print_wrapped(std::cout, terms_theta);
    }
    for (const RewriteEvent& event : result.rewrite_log) {
      std::cout << "rewrite " << rule_name(event.rule) << " at term " << event.position
                << '\n';
    }
  }
  return kExitOk;
}

// ------------------------------------------------------------- periodicity

int cmd_periodicity(const std::string& literal, const std::string& format,
                    std::size_t cap) {
  const BidirectiveSequence seq = parse_sequence(literal);
  const PeriodicityVerdict verdict = is_periodic(seq, cap);

  if (format == "json") {
    json envelope = make_envelope("periodicity", {{"literal", literal}});
    envelope["result"]["periodic"] = verdict.periodic;
    if (verdict.periodic) {
      envelope["result"]["period"] = verdict.period->str();
      envelope["result"]["period_length"] = verdict.period->size();
      envelope["result"]["witness"] = {
          {"letter", std::to_string(verdict.witness->letter)},
          {"theta", std::string(1, to_char(verdict.witness->theta))},
          {"n0", verdict.witness->n0}};
    } else {
      envelope["result"]["refutation"] = {{"n_first", verdict.refutation->first},
                                          {"n_second", verdict.refutation->second}};
    }
    emit(envelope);
  } else if (verdict.periodic) {
    std::cout << "periodic\n";
    std::cout << "period (length " << verdict.period->size() << "):\n";
    print_wrapped(std::cout, verdict.period->str());
    std::cout << "witness: delta_{n+1} = " << verdict.witness->letter
              << " <=> theta_n = " << to_char(verdict.witness->theta) << " for all n > "
              << verdict.witness->n0 << '\n';
  } else {
    std::cout << "aperiodic\n";
    std::cout << "refutation: alignment bit differs at n = " << verdict.refutation->first
              << " and n = " << verdict.refutation->second << '\n';
  }
  return kExitOk;
}

// -------------------------------------------------------------- complexity

void write_svg(const std::string& path, const ComplexityProfile& profile) {
  std::ofstream svg(path);
  if (!svg) throw UsageError("cannot open SVG output path: " + path);

  const double width = 800, height = 520, margin = 60;
  const std::size_t n_max = profile.rows.size() - 1;
  std::int64_t top = 1;
  for (const ComplexityRow& row : profile.rows) top = std::max(top, row.c);
  top = std::max<std::int64_t>(top, static_cast<std::int64_t>(4 * n_max));

  const auto x = [&](double n) { return margin + n / static_cast<double>(n_max) * (width - 2 * margin); };
  const auto y = [&](double c) { return height - margin - c / static_cast<double>(top) * (height - 2 * margin); };

  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\""
      << width - margin << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin
      << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";

  svg << "<polyline fill=\"none\" stroke=\"#888\" stroke-dasharray=\"6 4\" points=\""
      << x(0) << "," << y(0) << " " << x(static_cast<double>(n_max)) << ","
      << y(static_cast<double>(4 * n_max)) << "\"/>\n";
  svg << "<text x=\"" << width - margin - 40 << "\" y=\"" << y(4.0 * n_max) - 8
      << "\" font-size=\"12\" fill=\"#888\">4n</text>\n";

  svg << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
  for (const ComplexityRow& row : profile.rows) {
    svg << x(static_cast<double>(row.n)) << "," << y(static_cast<double>(row.c)) << " ";
  }
  svg << "\"/>\n";
  svg << "<text x=\"" << margin << "\" y=\"" << margin - 16
      << "\" font-size=\"12\">C(n), prefix length " << profile.prefix_length_used
      << "</text>\n";
  svg << "<text x=\"" << width / 2 << "\" y=\"" << height - margin + 32
      << "\" font-size=\"12\">n (0.." << n_max << ")</text>\n";
  svg << "</svg>\n";
}

int cmd_complexity(const std::string& literal, std::size_t n_max, const std::string& format,
                   const std::string& svg_path, std::size_t cap) {
  if (n_max < 1) throw UsageError("--n-max must be at least 1");
  const BidirectiveSequence seq = parse_sequence(literal);
  ComplexityProfile profile;
  std::string cap_note;
  try {
    profile = analyze_infinite(seq, n_max, cap);
  } catch (const growth_cap_error& e) {
    cap_note = e.what();
  }
  if (!cap_note.empty()) {
    std::cerr << "growth cap exceeded before analysis completed\n";
    return kExitResourceCap;
  }
  if (!svg_path.empty()) write_svg(svg_path, profile);

  const bool partial = !profile.saturated_up_to(n_max);
  if (format == "json") {
    json envelope = make_envelope("complexity", {{"literal", literal}, {"n_max", n_max}});
    json rows = json::array();
    for (const ComplexityRow& row : profile.rows) {
      rows.push_back({{"n", row.n},
                      {"c", row.c},
                      {"dc", row.dc},
                      {"d2c", row.d2c},
                      {"saturated", row.saturated}});
    }
    envelope["result"]["prefix_length_used"] = profile.prefix_length_used;
    envelope["result"]["rows"] = std::move(rows);
    if (partial) {
      envelope["diagnostics"].push_back(
          "some rows are unsaturated; counts there are lower bounds");
    }
    emit(envelope);
  } else if (format == "csv") {
    std::cout << "n,C,dC,d2C,saturated\n";
    for (const ComplexityRow& row : profile.rows) {
      std::cout << row.n << ',' << row.c << ',' << row.dc << ',' << row.d2c << ','
                << (row.saturated ? "true" : "false") << '\n';
    }
  } else {
    std::cout << "prefix length used: " << profile.prefix_length_used << '\n';
    std::cout << "   n          C         dC        d2C  saturated\n";
    for (const ComplexityRow& row : profile.rows) {
      std::printf("%4zu %10lld %10lld %10lld  %s\n", row.n, static_cast<long long>(row.c),
                  static_cast<long long>(row.dc), static_cast<long long>(row.d2c),
                  row.saturated ? "yes" : "no");
    }
    if (partial) std::cout << "(unsaturated rows are lower bounds)\n";
  }
  return kExitOk;
}

// --------------------------------------------------------------- verify-4n

int cmd_verify_4n(std::size_t n_max, std::size_t k_max, const std::string& format,
                  std::size_t cap) {
  if (n_max < 10) throw UsageError("--n-max must be at least 10");
  cx::CounterexampleReport report = cx::verify_4n(n_max, cap);
  report.recurrence_k_max = k_max;
  report.bispecial_family_k_max = k_max;

  bool recurrences_ok = true, strong_ok = true, weak_ok = true, interleaving_ok = true;
  for (std::size_t k = 0; k <= k_max; ++k) {
    recurrences_ok = recurrences_ok && cx::recurrence_check(k, cap);
    strong_ok = strong_ok && cx::strong_bispecial_check(k, cap);
  }
  for (std::size_t k = 1; k <= k_max; ++k) {
    const Word s1 = cx::weak_bispecial(k, cx::WeakFamily::s_4k_plus_1, cap);
    const Word s3 = cx::weak_bispecial(k, cx::WeakFamily::s_4k_plus_3, cap);
    const Word text = cx::sufficient_prefix(s3.size() + 2, cap);
    weak_ok = weak_ok &&
              classify_factor_scan(text, s1).classification == FactorClass::bispecial_weak &&
              classify_factor_scan(text, s3).classification == FactorClass::bispecial_weak;
    interleaving_ok = interleaving_ok && cx::length_interleaving_check(k, cap);
  }
  const bool ok =
      report.passed() && recurrences_ok && strong_ok && weak_ok && interleaving_ok;

  if (format == "json") {
    json envelope = make_envelope("verify-4n", {{"n_max", n_max}, {"k_max", k_max}});
    envelope["result"] = {{"c10", report.c10},
                          {"delta_c9", report.delta_c9},
                          {"violations", report.violations},
                          {"recurrences_ok", recurrences_ok},
                          {"strong_bispecials_ok", strong_ok},
                          {"weak_bispecials_ok", weak_ok},
                          {"length_interleaving_ok", interleaving_ok},
                          {"passed", ok}};
    emit(envelope);
  } else {
    std::cout << "C(10) = " << report.c10 << ", dC(9) = " << report.delta_c9 << '\n';
    std::cout << "C(n) > 4n for 10 <= n <= " << n_max << ": "
              << (report.violations.empty() ? "yes" : "VIOLATED") << '\n';
    for (const std::size_t n : report.violations) std::cout << "  violation at n = " << n << '\n';
    std::cout << "prefix recurrences (k <= " << k_max << "): "
              << (recurrences_ok ? "ok" : "FAILED") << '\n';
    std::cout << "strong bispecials (k <= " << k_max << "): " << (strong_ok ? "ok" : "FAILED")
              << '\n';
    std::cout << "weak bispecials (k <= " << k_max << "): " << (weak_ok ? "ok" : "FAILED")
              << '\n';
    std::cout << "length interleaving (k <= " << k_max << "): "
              << (interleaving_ok ? "ok" : "FAILED") << '\n';
    std::cout << (ok ? "PASS" : "FAIL") << '\n';
  }
  return ok ? kExitOk : kExitVerificationFailure;
}

// ------------------------------------------------------------------- sweep

int cmd_sweep(std::size_t count, std::uint64_t seed, std::size_t n_max,
              std::size_t prefix_length, const std::string& format, std::size_t cap) {
  if (prefix_length < 4 * n_max) {
    throw UsageError("--prefix-length must be at least 4 times --n-max");
  }
  std::mt19937_64 rng(seed);
  json mismatches = json::array();
  for (std::size_t i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> pre_len(0, 4), per_len(1, 4);
    std::uniform_int_distribution<int> bit(0, 1);
    Word dpre, dper;
    std::vector<Antimorphism> tpre, tper;
    for (std::size_t j = pre_len(rng); j > 0; --j) dpre.push_back(bit(rng));
    for (std::size_t j = per_len(rng); j > 0; --j) dper.push_back(bit(rng));
    for (std::size_t j = pre_len(rng); j > 0; --j) {
      tpre.push_back(bit(rng) ? Antimorphism::E : Antimorphism::R);
    }
    for (std::size_t j = per_len(rng); j > 0; --j) {
      tper.push_back(bit(rng) ? Antimorphism::E : Antimorphism::R);
    }
    const BidirectiveSequence seq(dpre, dper, tpre, tper);
    const bool decided = is_periodic(seq, cap).periodic;
    const bool empirical =
        morse_hedlund_oracle(generate_word_prefix(seq, prefix_length, cap), n_max)
            .periodic_evidence;
    if (decided != empirical) {
      mismatches.push_back({{"literal", render_sequence(seq)},
                            {"decided_periodic", decided},
                            {"oracle_periodic", empirical}});
    }
  }

  const bool ok = mismatches.empty();
  if (format == "json") {
    json envelope = make_envelope(
        "sweep", {{"count", count}, {"seed", seed}, {"n_max", n_max},
                  {"prefix_length", prefix_length}});
    envelope["result"] = {{"agreements", count - mismatches.size()},
                          {"mismatches", std::move(mismatches)}};
    emit(envelope);
  } else {
    std::cout << (count - mismatches.size()) << "/" << count
              << " verdicts agree with the empirical oracle (seed " << seed << ")\n";
    for (const auto& m : mismatches) {
      std::cout << "mismatch: " << m["literal"].get<std::string>() << '\n';
    }
  }
  return ok ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binary generalized pseudostandard words: generation, normalization, "
               "periodicity and factor complexity"};
  app.require_subcommand(1);

  std::string literal, format = "text", svg_path;
  std::optional<std::size_t> steps, length;
  std::size_t horizon = 512, n_max = 64, k_max = 2, count = 200, prefix_length = 1 << 14;
  std::uint64_t seed = 1;

  CLI::App* generate = app.add_subcommand("generate", "generate chain prefixes or a word prefix");
  generate->add_option("literal", literal, "bidirective sequence, e.g. \"1^w;(EERR)^w\"")
      ->required();
  generate->add_option("--steps", steps, "number of closure iterations");
  generate->add_option("--length", length, "exact prefix length in letters");
  generate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* normalize_cmd = app.add_subcommand("normalize", "normalize a bidirective sequence");
  normalize_cmd->add_option("literal", literal)->required();
  normalize_cmd->add_option("--horizon", horizon, "terms to produce before giving up");
  normalize_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* periodicity_cmd = app.add_subcommand("periodicity", "decide periodicity, extract the period");
  periodicity_cmd->add_option("literal", literal)->required();
  periodicity_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* complexity_cmd = app.add_subcommand("complexity", "factor complexity profile");
  complexity_cmd->add_option("literal", literal)->required();
  complexity_cmd->add_option("--n-max", n_max, "largest factor length")->required();
  complexity_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"table", "csv", "json"}));
  complexity_cmd->add_option("--svg", svg_path, "write a C(n) chart with the 4n reference");

  CLI::App* verify = app.add_subcommand("verify-4n", "verify C(n) > 4n for u(1^w,(EERR)^w)");
  verify->add_option("--n-max", n_max, "largest length checked (>= 10)")->required();
  verify->add_option("--k-max", k_max, "bispecial/recurrence family range");
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* sweep = app.add_subcommand("sweep", "randomized periodicity-vs-oracle sweep");
  sweep->add_option("--count", count, "number of random sequences");
  sweep->add_option("--seed", seed, "random seed");
  sweep->add_option("--n-max", n_max, "oracle factor-length bound");
  sweep->add_option("--prefix-length", prefix_length, "oracle prefix length");
  sweep->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    const std::size_t cap = growth_cap_from_env();
    if (generate->parsed()) return cmd_generate(literal, steps, length, format, cap);
    if (normalize_cmd->parsed()) return cmd_normalize(literal, horizon, format, cap);
    if (periodicity_cmd->parsed()) return cmd_periodicity(literal, format, cap);
    if (complexity_cmd->parsed()) {
      return cmd_complexity(literal, n_max, format == "text" ? "table" : format, svg_path,
                            cap);
    }
    if (verify->parsed()) return cmd_verify_4n(n_max, k_max, format, cap);
    if (sweep->parsed()) return cmd_sweep(count, seed, n_max, prefix_length, format, cap);
  } catch (const parse_error& e) {
    std::cerr << "parse error at position " << e.position() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const growth_cap_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResourceCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
