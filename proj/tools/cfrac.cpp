/* SPDX-License-Identifier: Apache-2.0 */

// cfrac: evaluate and verify the continued fractions for x*cot(x) and
// sec(x) + tan(x).
//
// Exit codes: 0 success, 1 usage error, 2 numeric failure, 3 verification
// failure.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cfrac/cf_core.hpp"
#include "cfrac/exact/ratfunc.hpp"
#include "cfrac/exact/series.hpp"
#include "cfrac/exact/verify.hpp"
#include "cfrac/expansions.hpp"
#include "table.hpp"

namespace {

using namespace cfrac;
using cli::Cell;
using cli::Format;
using cli::Table;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitVerify = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<double> parse_decimal(std::string_view s) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
  return v;
}

/// Decimal ("0.25", "-1e-3") or rational ("p/q") input.
double parse_real(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (auto v = parse_decimal(s)) return *v;
    throw UsageError("cannot parse x = '" + s + "'");
  }
  const auto p = parse_decimal(std::string_view(s).substr(0, slash));
  const auto q = parse_decimal(std::string_view(s).substr(slash + 1));
  if (!p || !q) throw UsageError("cannot parse x = '" + s + "'");
  if (*q == 0.0) throw UsageError("zero denominator in x = '" + s + "'");
  return *p / *q;
}

/// The three function names share two term streams; "cot" is xcot divided by x.
struct Function {
  std::string name;
  CfSpec spec;
  bool divide_by_x = false;

  static Function lookup(const std::string& name) {
    if (name == "sec-tan") return {name, sec_tan_flat_spec(), false};
    if (name == "xcot") return {name, cot_cf(), false};
    if (name == "cot") return {name, cot_cf(), true};
    throw UsageError("unknown function '" + name + "'");
  }

  double finish(double v, double x) const {
    if (!divide_by_x) return v;
    if (std::fabs(x) < kPoleThreshold) {
      throw DivisionNearZero("DivisionNearZero: cot has a pole at x = 0");
    }
    return v / x;
  }

  /// The adaptive reference: nested evaluator for sec-tan, adaptive backward
  /// recurrence otherwise.
  EvalReport adaptive(double x, double rel_err) const {
    EvalReport r = name == "sec-tan" ? sec_tan(x, rel_err) : eval_adaptive(spec, x, rel_err);
    r.value = finish(r.value, x);
    return r;
  }
};

const std::map<std::string, Format> kFormats{
    {"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}};

const std::vector<std::string> kFunctions{"sec-tan", "xcot", "cot"};

struct EvalArgs {
  std::string function;
  std::string x;
  std::string method = "adaptive";
  std::size_t depth = 32;
  double rel_err = 1e-12;
  Format format = Format::text;
};

int cmd_eval(const EvalArgs& a) {
  const Function fn = Function::lookup(a.function);
  const double x = parse_real(a.x);
  EvalReport r;
  if (a.method == "adaptive") {
    r = fn.adaptive(x, a.rel_err);
  } else if (a.method == "lentz") {
    r = eval_lentz(fn.spec, x, a.rel_err, std::max<std::size_t>(a.depth, 2));
    r.value = fn.finish(r.value, x);
  } else {
    r = eval_fixed(fn.spec, x, a.depth, a.method == "forward" ? Method::forward : Method::backward);
    r.value = fn.finish(r.value, x);
  }
  Table t{{"function", "x", "value", "depth", "est_rel_err", "method"}, {}};
  t.rows.push_back({fn.name, x, r.value, static_cast<std::int64_t>(r.depth), r.est_rel_err,
                    a.method});
  cli::print_record(std::cout, t, a.format);
  return kExitOk;
}

int cmd_convergents(const EvalArgs& a) {
  const Function fn = Function::lookup(a.function);
  const double x = parse_real(a.x);
  if (a.depth == 0) throw UsageError("--depth must be >= 1");
  const std::vector<double> h = eval_forward(fn.spec, x, a.depth);
  Table t{{"n", "value", "delta"}, {}};
  double previous = fn.finish(fn.spec.leading.at(x), x);
  for (std::size_t n = 0; n < h.size(); ++n) {
    const double v = fn.finish(h[n], x);
    t.rows.push_back({static_cast<std::int64_t>(n + 1), v, std::fabs(v - previous)});
    previous = v;
  }
  cli::print_table(std::cout, t, a.format);
  return kExitOk;
}

int cmd_study(const EvalArgs& a) {
  const Function fn = Function::lookup(a.function);
  const double x = parse_real(a.x);
  if (a.depth == 0) throw UsageError("--max-depth must be >= 1");
  const double reference = fn.adaptive(x, 1e-14).value;
  Table t{{"depth", "value", "abs_err"}, {}};
  for (std::size_t d = 1; d <= a.depth; d *= 2) {
    const double v = fn.finish(eval_backward(fn.spec, x, d), x);
    t.rows.push_back({static_cast<std::int64_t>(d), v, std::fabs(v - reference)});
  }
  cli::print_table(std::cout, t, a.format);
  return kExitOk;
}

int cmd_terms(const std::string& function, std::size_t count, Format format) {
  const Function fn = Function::lookup(function);
  Table t{{"k", "a", "b"}, {}};
  for (std::size_t k = 1; k <= count; ++k) {
    const TermPair p = fn.spec.terms(k);
    t.rows.push_back({static_cast<std::int64_t>(k), p.a.to_string(), p.b.to_string()});
  }
  cli::print_table(std::cout, t, format);
  return kExitOk;
}

int cmd_series(std::size_t order, Format format) {
  using namespace cfrac::exact;
  const std::size_t depth = 2 * order + 3;
  if (depth > kMaxExactDepth) {
    throw UsageError("--order must be at most " + std::to_string((kMaxExactDepth - 3) / 2));
  }
  const SeriesCoeffs s = series_from_ratfunc(convergent_exact(sec_tan_flat_spec(), depth), order);
  Table t{{"n", "zigzag", "coefficient"}, {}};
  bool consistent = true;
  for (std::size_t n = 0; n <= order; ++n) {
    const BigInt z = zigzag(n);
    BigRat expected(z, factorial(n));
    expected.canonicalize();
    consistent = consistent && expected == s.coeffs[n];
    t.rows.push_back({static_cast<std::int64_t>(n), z.get_str(), to_string(s.coeffs[n])});
  }
  cli::print_table(std::cout, t, format);
  if (!consistent) {
    std::cerr << "series coefficients disagree with zigzag(n)/n!\n";
    return kExitVerify;
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string suite = "all";
  exact::VerifyOptions opts;
  Format format = Format::text;
};

int cmd_verify(const VerifyArgs& a) {
  using exact::Suite;
  std::vector<Suite> suites;
  if (a.suite == "all") {
    suites = {Suite::eq4, Suite::eq6, Suite::pairing, Suite::flatten, Suite::series};
  } else {
    for (Suite s : {Suite::eq4, Suite::eq6, Suite::pairing, Suite::flatten, Suite::series}) {
      if (exact::to_string(s) == a.suite) suites.push_back(s);
    }
  }
  if (a.opts.trials == 0) throw UsageError("--trials must be >= 1");

  Table t{{"suite", "passed", "detail"}, {}};
  bool all_passed = true;
  for (Suite s : suites) {
    const exact::SuiteResult r = exact::run_suite(s, a.opts);
    all_passed = all_passed && r.passed;
    t.rows.push_back({std::string(exact::to_string(s)), r.passed, r.detail});
  }

  if (a.format == Format::json) {
    nlohmann::json out;
    out["seed"] = a.opts.seed;
    out["passed"] = all_passed;
    out["suites"] = nlohmann::json::array();
    for (std::size_t r = 0; r < t.rows.size(); ++r) out["suites"].push_back(cli::row_json(t, r));
    std::cout << out.dump() << '\n';
  } else {
    if (a.format == Format::text) std::cout << "seed " << a.opts.seed << '\n';
    cli::print_table(std::cout, t, a.format);
    if (a.format == Format::text) {
      std::cout << (all_passed ? "all suites passed" : "VERIFICATION FAILED") << '\n';
    }
  }
  return all_passed ? kExitOk : kExitVerify;
}

void add_format(CLI::App* sub, Format& format) {
  sub->add_option("--format", format, "Output format: text, csv or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continued-fraction evaluation of x*cot(x) and sec(x) + tan(x)", "cfrac"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate a function at x");
  eval->add_option("function", eval_args.function, "sec-tan, xcot or cot")
      ->required()
      ->check(CLI::IsMember(kFunctions));
  eval->add_option("--x", eval_args.x, "Argument, decimal or p/q")->required();
  eval->add_option("--method", eval_args.method, "adaptive, backward, forward or lentz")
      ->check(CLI::IsMember({"adaptive", "backward", "forward", "lentz"}));
  eval->add_option("--depth", eval_args.depth,
                   "Depth for backward/forward; term cap for lentz")
      ->check(CLI::PositiveNumber);
  eval->add_option("--rel-err", eval_args.rel_err,
                   "Target relative error (adaptive) or stopping tolerance (lentz)")
      ->check(CLI::PositiveNumber);
  add_format(eval, eval_args.format);

  EvalArgs conv_args;
  conv_args.depth = 10;
  auto* convergents = app.add_subcommand("convergents", "Table of forward-recurrence convergents");
  convergents->add_option("function", conv_args.function)->required()->check(CLI::IsMember(kFunctions));
  convergents->add_option("--x", conv_args.x, "Argument, decimal or p/q")->required();
  convergents->add_option("--depth", conv_args.depth, "Number of convergents");
  add_format(convergents, conv_args.format);

  std::size_t order = 12;
  Format series_format = Format::text;
  auto* series = app.add_subcommand("series", "Exact Maclaurin coefficients of sec(x) + tan(x)");
  series->add_option("--order", order, "Highest power of x");
  add_format(series, series_format);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Exact verification of the derivation steps");
  verify->add_option("suite", verify_args.suite, "eq4, eq6, pairing, flatten, series or all")
      ->check(CLI::IsMember({"eq4", "eq6", "pairing", "flatten", "series", "all"}));
  verify->add_option("--trials", verify_args.opts.trials, "Random points per identity");
  verify->add_option("--seed", verify_args.opts.seed, "Seed for the random points");
  verify->add_option("--max-level", verify_args.opts.max_level, "eq4/eq6 check k = 0..N");
  verify->add_flag("--mutant", verify_args.opts.mutant,
                   "Check deliberately corrupted identities instead (must fail)");
  add_format(verify, verify_args.format);

  std::string terms_function;
  std::size_t count = 8;
  Format terms_format = Format::text;
  auto* terms = app.add_subcommand("terms", "List partial numerators and denominators");
  terms->add_option("function", terms_function)->required()->check(CLI::IsMember(kFunctions));
  terms->add_option("--count", count, "Number of terms");
  add_format(terms, terms_format);

  EvalArgs study_args;
  study_args.depth = 64;
  auto* study = app.add_subcommand("study", "Error against depth 1, 2, 4, ..., max-depth");
  study->add_option("function", study_args.function)->required()->check(CLI::IsMember(kFunctions));
  study->add_option("--x", study_args.x, "Argument, decimal or p/q")->required();
  study->add_option("--max-depth", study_args.depth, "Largest depth");
  add_format(study, study_args.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::string context;
  try {
    if (*eval) {
      context = eval_args.function + ", x = " + eval_args.x;
      return cmd_eval(eval_args);
    }
    if (*convergents) {
      context = conv_args.function + ", x = " + conv_args.x;
      return cmd_convergents(conv_args);
    }
    if (*series) return cmd_series(order, series_format);
    if (*verify) return cmd_verify(verify_args);
    if (*terms) return cmd_terms(terms_function, count, terms_format);
    if (*study) {
      context = study_args.function + ", x = " + study_args.x;
      return cmd_study(study_args);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cfrac::Error& e) {
    std::cerr << "error: " << e.what();
    if (!context.empty()) std::cerr << " [" << context << "]";
    std::cerr << '\n';
    return kExitNumeric;
  }
  return kExitUsage;
}
