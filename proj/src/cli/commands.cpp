#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "tetra/bignum.hpp"
#include "tetra/cli.hpp"
#include "tetra/decadic.hpp"
#include "tetra/errors.hpp"
#include "tetra/oracle.hpp"
#include "tetra/speed.hpp"
#include "tetra/stability.hpp"
#include "tetra/tower.hpp"

namespace tetra::cli {

namespace {

using nlohmann::json;

// Thrown for malformed command-line values that CLI11 cannot see.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

BigUint parse_base(const std::string& text) {
  try {
    return BigUint::from_decimal(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

json speed_json(const SpeedResult& r) {
  return r.undefined() ? json(nullptr) : json(*r.speed);
}

std::string speed_text(const SpeedResult& r) {
  return r.undefined() ? "undefined" : std::to_string(*r.speed);
}

template <typename T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream s;
  s << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? "," : "") << xs[i];
  s << ']';
  return s.str();
}

// What a command produces: the report plus its human-readable rendering.
struct Outcome {
  Report report;
  std::string text;
};

Outcome cmd_speed(const std::string& a_text) {
  const Base a(parse_base(a_text));
  const SpeedResult exact = speed_exact(a);
  const SpeedResult thm = speed_mod100_split(a);
  const SpeedResult cor = speed_mod20_split(a);
  const bool agree = exact.speed == thm.speed && exact.speed == cor.speed;

  std::optional<std::uint64_t> tv;
  if (!a.is(0) && !a.is(1) && a.mod(10) != 0) tv = tilde_v(a);

  Outcome o;
  o.report.command = "speed";
  o.report.inputs = {{"a", a_text}};
  o.report.result = {{"V", speed_json(exact)},
                     {"undefined", exact.undefined()},
                     {"tilde_v", tv ? json(*tv) : json(nullptr)},
                     {"V_mod100_split", speed_json(thm)},
                     {"V_mod20_split", speed_json(cor)},
                     {"agree", agree},
                     {"tier", to_string(tier_of(exact))}};
  o.report.provenance = exact.rule;
  if (!agree) {
    o.report.status = "error";
    o.report.code = kExitVerificationFailure;
    o.report.message = "closed forms disagree";
  }
  std::ostringstream s;
  s << "V(" << a_text << ") = " << speed_text(exact) << "\n"
    << "rule: " << exact.rule << "\n"
    << "tilde_v: " << (tv ? std::to_string(*tv) : std::string("-")) << "\n";
  if (!agree) {
    s << "DISAGREEMENT: mod-100 split gives " << speed_text(thm) << ", mod-20 split gives "
      << speed_text(cor) << "\n";
  }
  o.text = s.str();
  return o;
}

Outcome cmd_sequence(const std::string& a_text, std::optional<std::uint64_t> max_b,
                     const OracleOptions& opts) {
  const BigUint a = parse_base(a_text);
  std::uint64_t height = 8;
  if (max_b) {
    height = *max_b;
  } else if (a.mod_u64(10) != 0 || a.is_zero()) {
    height = certifying_height(a);
  }
  const SpeedSequence seq = speed_sequence(a, height, opts);

  Outcome o;
  o.report.command = "sequence";
  o.report.inputs = {{"a", a_text}, {"max_b", height}, {"budget", opts.max_digits}};
  o.report.result = {{"speeds", seq.speeds},
                     {"frozen", seq.frozen},
                     {"bbar", seq.stabilized_at ? json(*seq.stabilized_at) : json(nullptr)},
                     {"certified", seq.certified}};
  o.report.provenance = "oracle: common trailing digits of ^b a and ^(b+1) a";
  std::ostringstream s;
  s << "V(" << a_text << ", 1.." << height << ") = " << join(seq.speeds) << "\n"
    << "#S(" << a_text << ", 1.." << height << ") = " << join(seq.frozen) << "\n"
    << "bbar: " << (seq.stabilized_at ? std::to_string(*seq.stabilized_at) : std::string("-"))
    << (seq.certified ? " (certified)" : "") << "\n";
  o.text = s.str();
  return o;
}

json count_json(const StableCount& c) {
  if (c.kind == CountKind::Exact) return {{"kind", "exact"}, {"value", c.value}};
  return {{"kind", "bounded"}, {"lower", c.lower}, {"upper", c.upper}};
}

Outcome cmd_stable(const std::string& a_text, std::uint64_t b, bool no_oracle,
                   const OracleOptions& opts) {
  const Base a(parse_base(a_text));
  const StableCount c = stable_count(a, b, opts, !no_oracle);
  Outcome o;
  o.report.command = "stable";
  o.report.inputs = {{"a", a_text}, {"b", b}, {"oracle", !no_oracle}};
  o.report.result = count_json(c);
  o.report.provenance = c.formula;
  std::ostringstream s;
  s << "#S(" << a_text << ", " << b << ") = ";
  if (c.kind == CountKind::Exact) {
    s << c.value;
  } else {
    s << "[" << c.lower << ", " << c.upper << "]";
  }
  s << "\nformula: " << c.formula << "\n";
  o.text = s.str();
  return o;
}

Outcome cmd_ratio(const std::string& a_text, std::uint64_t b, const OracleOptions& opts) {
  const Base a(parse_base(a_text));
  const StableRatio r = stable_ratio(a, b, opts);
  Outcome o;
  o.report.command = "ratio";
  o.report.inputs = {{"a", a_text}, {"b", b}};
  o.report.result = {{"numerator", r.numerator},
                     {"denominator", r.denominator.to_decimal()},
                     {"value", r.approx()}};
  o.report.provenance = "stable digits / decimal length of ^b a";
  o.text = "R(" + a_text + ", " + std::to_string(b) + ") = " + std::to_string(r.numerator) + "/" +
           r.denominator.to_decimal() + " ~ " + std::to_string(r.approx()) + "\n";
  return o;
}

Outcome cmd_min_height(const std::string& a_text, std::uint64_t target, const OracleOptions& opts) {
  const Base a(parse_base(a_text));
  const HeightPlan plan = min_height(a, target, opts);
  Outcome o;
  o.report.command = "min-height";
  o.report.inputs = {{"a", a_text}, {"target", target}};
  o.report.result = {{"target", plan.target}, {"height", plan.height}};
  o.report.provenance = "measured prefix sums, then linear growth by V(a)";
  o.text = "smallest b with #S(" + a_text + ", b) >= " + std::to_string(target) + ": " +
           std::to_string(plan.height) + "\n";
  return o;
}

Outcome cmd_classify(const std::string& a_text) {
  const Base a(parse_base(a_text));
  const Tier t = classify_tier(a);
  Outcome o;
  o.report.command = "classify";
  o.report.inputs = {{"a", a_text}};
  o.report.result = {{"tier", to_string(t)}};
  o.report.provenance = "residues mod 25, 40 and 1000";
  o.text = a_text + ": " + to_string(t) + "\n";
  return o;
}

Outcome cmd_alpha(const std::string& tag_text, std::size_t n) {
  AlphaTag tag = [&] {
    try {
      return AlphaTag::parse(tag_text);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  const AlphaDigits d = alpha_digits(tag, n);
  Outcome o;
  o.report.command = "alpha";
  o.report.inputs = {{"tag", tag.str()}, {"n", n}};
  o.report.result = {{"digits", d.digits}};
  o.report.provenance = "combination of lim 5^(2^k) and lim 2^(5^k)";
  o.text = d.digits + "\n";
  return o;
}

Outcome cmd_tower(const std::string& a_text, std::uint64_t b, std::uint64_t digits) {
  const BigUint a = parse_base(a_text);
  const BigUint r = tetration_mod(a, b, digits);
  std::string padded = r.to_decimal();
  if (padded.size() < digits) padded.insert(0, digits - padded.size(), '0');
  Outcome o;
  o.report.command = "tower";
  o.report.inputs = {{"a", a_text}, {"b", b}, {"digits", digits}};
  o.report.result = {{"residue", padded}};
  o.report.provenance = "CRT over 2^N and 5^N with Carmichael exponent reduction";
  o.text = padded + "\n";
  return o;
}

Outcome cmd_key_digit(const std::string& a_text, const std::string& tag_text) {
  const BigUint a = parse_base(a_text);
  const AlphaTag tag = AlphaTag::parse(tag_text);
  const KeyDigitReport k = key_digit(a, tag);
  Outcome o;
  o.report.command = "key-digit";
  o.report.inputs = {{"a", a_text}, {"tag", tag.str()}};
  o.report.result = {{"l", k.l}, {"s_l", k.s_l}, {"diff", k.diff}};
  o.report.provenance = "first position where a and alpha_" + tag.str() + " differ";
  o.text = "l = " + std::to_string(k.l) + ", s_l = " + std::to_string(k.s_l) +
           ", s_l - alpha[l] = " + std::to_string(k.diff) + "\n";
  return o;
}

Outcome cmd_bbar(const std::string& a_text, const OracleOptions& opts) {
  const Base a(parse_base(a_text));
  const std::uint64_t measured = measure_bbar(a.value(), opts);
  const std::uint64_t bound = a.is(1) ? 2 : bbar_bound(a);
  Outcome o;
  o.report.command = "bbar";
  o.report.inputs = {{"a", a_text}};
  o.report.result = {{"measured", measured}, {"bound", bound}};
  o.report.provenance = "oracle run to tilde_v(a)+3";
  o.text = "bbar(" + a_text + ") = " + std::to_string(measured) + " (bound " +
           std::to_string(bound) + ")\n";
  return o;
}

Outcome cmd_shape(const std::string& a_text, const OracleOptions& opts) {
  const Base a(parse_base(a_text));
  const ShapeReport r = stable_shape(a, opts);
  Outcome o;
  o.report.command = "shape";
  o.report.inputs = {{"a", a_text}};
  o.report.result = {{"shape", to_string(r.shape)},
                     {"V", r.speed},
                     {"bbar", r.bbar},
                     {"count_at_bbar", r.count_at_bbar},
                     {"count_after_bbar", r.count_after_bbar}};
  o.report.provenance = r.selected_by_second_speed ? "V(a,2) compared with V(a)"
                                                   : "offset of #S(a,bbar) from bbar*V";
  o.text = "#S(" + a_text + ", b >= " + std::to_string(r.bbar) +
           ") = " + to_string(r.shape) + " with V = " + std::to_string(r.speed) + "\n";
  return o;
}

// ---- verify ---------------------------------------------------------------

struct Failure {
  std::string a;
  std::string check;
  std::string expected;
  std::string actual;
};

struct BaseOutcome {
  bool skipped = false;
  std::uint64_t checks = 0;
  std::vector<Failure> failures;
  std::optional<std::string> budget_error;
};

BaseOutcome verify_base(const BigUint& value, std::uint64_t max_b, const OracleOptions& opts) {
  BaseOutcome out;
  if (value.mod_u64(10) == 0) {
    out.skipped = true;
    return out;
  }
  const Base a(value);
  const std::string name = value.to_decimal();
  auto expect = [&](bool ok, const std::string& check, const std::string& expected,
                    const std::string& actual) {
    ++out.checks;
    if (!ok) out.failures.push_back({name, check, expected, actual});
  };

  try {
    const SpeedResult exact = speed_exact(a);
    const SpeedResult thm = speed_mod100_split(a);
    const SpeedResult cor = speed_mod20_split(a);
    expect(exact.speed == thm.speed, "mod-100 split", speed_text(exact), speed_text(thm));
    expect(exact.speed == cor.speed, "mod-20 split", speed_text(exact), speed_text(cor));
    if (a.is(1)) return out;

    const std::uint64_t height = std::max(certifying_height(value), max_b);
    const SpeedSequence seq = speed_sequence(value, height, opts);
    expect(seq.certified, "speed settles by tilde_v+2", "certified", "not certified");
    if (!seq.certified) return out;
    const std::uint64_t v = exact.value();
    expect(seq.speeds.back() == v, "oracle speed", std::to_string(v), std::to_string(seq.speeds.back()));

    const std::uint64_t bound = bbar_bound(a);
    expect(*seq.stabilized_at <= bound, "bbar bound", "<= " + std::to_string(bound),
           std::to_string(*seq.stabilized_at));

    const Tier tier = classify_tier(a);
    expect(tier == tier_of(exact), "tier", to_string(tier_of(exact)), to_string(tier));

    const unsigned m10 = a.mod(10);
    const bool coprime = m10 == 1 || m10 == 3 || m10 == 7 || m10 == 9;
    for (std::uint64_t b = 2; b <= max_b; ++b) {
      const std::uint64_t measured = seq.frozen[b - 1];
      const std::string at = " at b=" + std::to_string(b);
      if (coprime) {
        const StableCount c = stable_bounds(a, b);
        expect(c.contains(measured), "bounds" + at,
               "[" + std::to_string(c.lower) + "," + std::to_string(c.upper) + "]",
               std::to_string(measured));
        expect(c.upper - c.lower <= v + 1, "bound width" + at, "<= " + std::to_string(v + 1),
               std::to_string(c.upper - c.lower));
      } else {
        const StableCount c = stable_exact(a, b);
        expect(c.value == measured, "exact count" + at, std::to_string(c.value), std::to_string(measured));
      }
    }
  } catch (const BudgetExceeded& e) {
    out.budget_error = name + ": " + e.what();
  } catch (const std::exception& e) {
    out.failures.push_back({name, "exception", "-", e.what()});
  }
  return out;
}

std::pair<BigUint, BigUint> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like LO..HI");
  BigUint lo = parse_base(text.substr(0, dots));
  BigUint hi = parse_base(text.substr(dots + 2));
  if (hi < lo) throw UsageError("empty range " + text);
  return {std::move(lo), std::move(hi)};
}

Outcome cmd_verify(const std::string& range, std::uint64_t max_b, unsigned workers,
                   const OracleOptions& opts) {
  const auto [lo, hi] = parse_range(range);
  const BigUint span = hi - lo;
  if (!span.fits_u64() || span.to_u64() >= (std::uint64_t{1} << 40)) throw UsageError("range too large");
  const std::uint64_t count = span.to_u64() + 1;
  if (max_b < 2) throw UsageError("--max-b must be at least 2");
  workers = std::max(1U, workers);

  std::vector<BaseOutcome> outcomes(count);
  const std::uint64_t shard = (count + workers - 1) / workers;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * shard;
    const std::uint64_t end = std::min(count, begin + shard);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] {
      for (std::uint64_t i = begin; i < end; ++i) {
        outcomes[i] = verify_base(lo + BigUint(i), max_b, opts);
      }
    });
  }
  for (auto& t : pool) t.join();

  std::uint64_t bases = 0, skipped = 0, checks = 0;
  json failures = json::array();
  std::vector<std::string> budget_errors;
  for (const auto& oc : outcomes) {
    if (oc.skipped) {
      ++skipped;
      continue;
    }
    ++bases;
    checks += oc.checks;
    for (const auto& f : oc.failures) {
      failures.push_back({{"a", f.a}, {"check", f.check}, {"expected", f.expected}, {"actual", f.actual}});
    }
    if (oc.budget_error) budget_errors.push_back(*oc.budget_error);
  }

  Outcome o;
  o.report.command = "verify";
  o.report.inputs = {{"range", range}, {"max_b", max_b}, {"budget", opts.max_digits}};
  o.report.result = {{"bases", bases},
                     {"skipped", skipped},
                     {"checks", checks},
                     {"failures", failures},
                     {"budget_errors", budget_errors}};
  o.report.provenance = "closed forms against the modular tower oracle";
  if (!failures.empty()) {
    o.report.status = "error";
    o.report.code = kExitVerificationFailure;
    o.report.message = std::to_string(failures.size()) + " verification failures";
  } else if (!budget_errors.empty()) {
    o.report.status = "error";
    o.report.code = kExitBudget;
    o.report.message = "needs-larger-budget for " + std::to_string(budget_errors.size()) + " bases";
  }
  std::ostringstream s;
  s << "verified " << bases << " bases (" << skipped << " multiples of 10 skipped), " << checks
    << " checks, " << failures.size() << " failures\n";
  for (const auto& f : failures) {
    s << "  a=" << f["a"].get<std::string>() << " " << f["check"].get<std::string>()
      << ": expected " << f["expected"].get<std::string>() << ", got "
      << f["actual"].get<std::string>() << "\n";
  }
  for (const auto& b : budget_errors) s << "  budget: " << b << "\n";
  o.text = s.str();
  return o;
}

Outcome error_outcome(const std::string& command, int code, const std::string& message) {
  Outcome o;
  o.report.command = command;
  o.report.status = "error";
  o.report.code = code;
  o.report.message = message;
  o.text = "error: " + message + "\n";
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Congruence speed and stable digits of integer tetration", "tetra"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  std::string out_path;
  OracleOptions opts;
  app.add_flag("--json", as_json, "Emit a JSON report instead of text");
  app.add_option("--out", out_path, "Also write the JSON report to this file");
  app.add_option("--budget", opts.max_digits, "Largest digit window the oracle may use")
      ->check(CLI::PositiveNumber);

  std::string a_text, tag_text, range = "2..2000";
  std::uint64_t b = 1, target = 0, digits = 1;
  std::optional<std::uint64_t> max_b;
  std::uint64_t verify_max_b = 8;
  unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  bool no_oracle = false;
  std::function<Outcome()> action;
  std::string command;

  auto base_arg = [&](CLI::App* sub) { sub->add_option("a", a_text, "Tetration base")->required(); };

  auto* speed = app.add_subcommand("speed", "Constant congruence speed V(a)");
  base_arg(speed);
  speed->callback([&] { command = "speed"; action = [&] { return cmd_speed(a_text); }; });

  auto* sequence = app.add_subcommand("sequence", "Measured V(a,1..B) and frozen digit counts");
  base_arg(sequence);
  sequence->add_option("--max-b", max_b, "Largest height (default tilde_v(a)+3)");
  sequence->callback([&] {
    command = "sequence";
    action = [&] { return cmd_sequence(a_text, max_b, opts); };
  });

  auto* stable = app.add_subcommand("stable", "Number of stable digits #S(a,b)");
  base_arg(stable);
  stable->add_option("b", b, "Height")->required()->check(CLI::PositiveNumber);
  stable->add_flag("--no-oracle", no_oracle, "Closed forms only (bounds for coprime bases)");
  stable->callback([&] {
    command = "stable";
    action = [&] { return cmd_stable(a_text, b, no_oracle, opts); };
  });

  auto* ratio = app.add_subcommand("ratio", "Stable digits over the length of ^b a");
  base_arg(ratio);
  ratio->add_option("b", b, "Height")->required()->check(CLI::PositiveNumber);
  ratio->callback([&] { command = "ratio"; action = [&] { return cmd_ratio(a_text, b, opts); }; });

  auto* min_h = app.add_subcommand("min-height", "Smallest height with at least T stable digits");
  base_arg(min_h);
  min_h->add_option("target", target, "Required number of stable digits")->required();
  min_h->callback([&] {
    command = "min-height";
    action = [&] { return cmd_min_height(a_text, target, opts); };
  });

  auto* classify = app.add_subcommand("classify", "Speed tier from residues alone");
  base_arg(classify);
  classify->callback([&] { command = "classify"; action = [&] { return cmd_classify(a_text); }; });

  auto* alpha = app.add_subcommand("alpha", "Trailing digits of a 10-adic solution of y^5 = y");
  alpha->add_option("tag", tag_text, "Last two digits, e.g. 51")->required();
  alpha->add_option("n", digits, "Number of digits")->required()->check(CLI::PositiveNumber);
  alpha->callback([&] { command = "alpha"; action = [&] { return cmd_alpha(tag_text, digits); }; });

  auto* tower = app.add_subcommand("tower", "^b a modulo 10^N");
  base_arg(tower);
  tower->add_option("b", b, "Height")->required()->check(CLI::PositiveNumber);
  tower->add_option("digits", digits, "N")->required()->check(CLI::PositiveNumber);
  tower->callback([&] { command = "tower"; action = [&] { return cmd_tower(a_text, b, digits); }; });

  auto* key = app.add_subcommand("key-digit", "Key digit of a against an alpha constant");
  base_arg(key);
  key->add_option("tag", tag_text, "Last two digits of the constant")->required();
  key->callback([&] { command = "key-digit"; action = [&] { return cmd_key_digit(a_text, tag_text); }; });

  auto* bbar = app.add_subcommand("bbar", "Measured height of speed constancy and its bound");
  base_arg(bbar);
  bbar->callback([&] { command = "bbar"; action = [&] { return cmd_bbar(a_text, opts); }; });

  auto* shape = app.add_subcommand("shape", "Linear law of #S(a,b) for a base coprime to 10");
  base_arg(shape);
  shape->callback([&] { command = "shape"; action = [&] { return cmd_shape(a_text, opts); }; });

  auto* verify = app.add_subcommand("verify", "Scan a range of bases against the oracle");
  verify->add_option("--range", range, "LO..HI (default 2..2000)");
  verify->add_option("--max-b", verify_max_b, "Largest height for stable-digit checks");
  verify->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  verify->callback([&] {
    command = "verify";
    action = [&] { return cmd_verify(range, verify_max_b, workers, opts); };
  });

  std::vector<const char*> argv{"tetra"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  opts.initial_digits = std::min(opts.initial_digits, opts.max_digits);

  Outcome outcome;
  try {
    outcome = action();
  } catch (const BudgetExceeded& e) {
    outcome = error_outcome(command, kExitBudget, e.what());
  } catch (const std::invalid_argument& e) {
    outcome = error_outcome(command, kExitUsage, e.what());
  } catch (const std::exception& e) {
    outcome = error_outcome(command, kExitVerificationFailure, e.what());
  }

  if (as_json) {
    out << outcome.report.dump();
  } else if (outcome.report.status == "ok") {
    out << outcome.text;
  } else {
    out << outcome.text;
    if (outcome.text.rfind("error:", 0) != 0) err << "error: " << outcome.report.message << "\n";
  }
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) {
      err << "error: cannot write " << out_path << "\n";
      return kExitUsage;
    }
    file << outcome.report.dump();
  }
  return outcome.report.code;
}

}  // namespace tetra::cli
