// fatpoints command-line tool: exact degree bounds, proof-chain sweeps, and
// empirical initial degrees for fat-point ideals over prime fields.
//
// Exit codes: 0 success; 1 usage error; 2 degree-cap exhausted or an
// algebraic sign left indeterminate; 3 software fault (an unconditional
// theorem failed on computed data).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <fatpoints/algebraic.hpp>
#include <fatpoints/bounds.hpp>
#include <fatpoints/exactnum.hpp>
#include <fatpoints/interpolation.hpp>
#include <fatpoints/verify.hpp>
#include <fatpoints/version.hpp>

namespace {

namespace bounds = fatpoints::bounds;
namespace interpolation = fatpoints::interpolation;
namespace verify = fatpoints::verify;
using fatpoints::algebraic::AlgebraicExpr;
using fatpoints::algebraic::Sign;
using fatpoints::exactnum::BigInt;
using fatpoints::exactnum::Rational;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCapOrIndeterminate = 2;
constexpr int kExitSoftwareFault = 3;

enum class Format { Text, Json, Csv };

const char* bool_name(bool b) { return b ? "true" : "false"; }

const char* sign_name(Sign s) {
  switch (s) {
    case Sign::Negative:
      return "Negative";
    case Sign::Zero:
      return "Zero";
    case Sign::Positive:
      return "Positive";
    default:
      return "Indeterminate";
  }
}

const char* mss_name(bounds::MssComparison c) {
  switch (c) {
    case bounds::MssComparison::OnlyNew:
      return "OnlyNew";
    case bounds::MssComparison::OnlyMSS:
      return "OnlyMSS";
    case bounds::MssComparison::Both:
      return "Both";
    default:
      return "Neither";
  }
}

std::string dec(const BigInt& v) { return v.get_str(); }
std::string dec(const Rational& v) { return v.get_str(); }
std::string dec(std::uint64_t v) { return std::to_string(v); }
std::string dec(unsigned v) { return std::to_string(v); }

BigInt parse_big(const std::string& text, const char* flag) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument(std::string(flag) +
                                ": expected a nonnegative decimal integer, got '" +
                                text + "'");
  }
  return BigInt(text);
}

unsigned machine_mult(const BigInt& m) {
  if (m < 1 || m.fits_ulong_p() == 0 ||
      m.get_ui() > std::numeric_limits<unsigned>::max()) {
    throw std::invalid_argument(
        "--m: multiplicity too large for an empirical computation");
  }
  return static_cast<unsigned>(m.get_ui());
}

/// Renders an algebraic number as a polynomial in theta, lowest power first.
std::string expr_text(const AlgebraicExpr& x) {
  const auto& c = x.coeffs();
  std::string out;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) {
      continue;
    }
    Rational mag = c[j] < 0 ? Rational(-c[j]) : c[j];
    const bool neg = c[j] < 0;
    std::string term;
    if (j == 0) {
      term = mag.get_str();
    } else {
      const std::string power = j == 1 ? "theta" : "theta^" + std::to_string(j);
      term = (mag == 1) ? power : mag.get_str() + "*" + power;
    }
    if (out.empty()) {
      out = (neg ? "-" : "") + term;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

ordered_json expr_json(const AlgebraicExpr& x) {
  ordered_json j;
  j["radicand"] = dec(x.radicand());
  j["degree"] = std::to_string(x.degree());
  ordered_json coeffs = ordered_json::array();
  for (const Rational& c : x.coeffs()) {
    coeffs.push_back(c.get_str());
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

std::string expr_csv(const AlgebraicExpr& x) {
  std::string coeffs;
  for (const Rational& c : x.coeffs()) {
    if (!coeffs.empty()) {
      coeffs += ';';
    }
    coeffs += c.get_str();
  }
  return dec(x.radicand()) + ":" + std::to_string(x.degree()) + ":" + coeffs;
}

ordered_json envelope(const char* command, ordered_json inputs,
                      ordered_json results, ordered_json verdicts) {
  ordered_json j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["results"] = std::move(results);
  j["verdicts"] = std::move(verdicts);
  j["version"] = fatpoints::kVersion;
  return j;
}

void print_json(const ordered_json& j) { std::cout << j.dump() << "\n"; }

// ---------------------------------------------------------------------------
// Shared option bundles
// ---------------------------------------------------------------------------

struct InstanceArgs {
  std::string n_text;
  std::string s_text;
  std::string m_text = "1";

  bounds::Instance instance() const {
    bounds::Instance inst;
    const BigInt n_big = parse_big(n_text, "--n");
    if (n_big < 1 || n_big.fits_ulong_p() == 0 ||
        n_big.get_ui() > std::numeric_limits<unsigned>::max()) {
      throw std::invalid_argument("--n: out of supported range");
    }
    inst.n = static_cast<unsigned>(n_big.get_ui());
    inst.s = parse_big(s_text, "--s");
    inst.m = parse_big(m_text, "--m");
    bounds::validate(inst);
    return inst;
  }
};

struct SampleArgs {
  InstanceArgs inst_args;
  std::uint64_t prime = interpolation::kDefaultPrime;
  std::uint64_t seed = 0;
  unsigned cap = 0;
  std::string points_file;
  std::string save_points;

  struct Resolved {
    interpolation::PointSet points;
    bounds::Instance instance;
    bool from_file = false;
  };

  Resolved resolve(unsigned m) const {
    Resolved r;
    if (!points_file.empty()) {
      std::ifstream in(points_file);
      if (!in) {
        throw std::invalid_argument("--points-file: cannot open '" + points_file +
                                    "'");
      }
      r.points = interpolation::read_point_set(in);
      r.from_file = true;
      r.instance.n = r.points.n;
      r.instance.s = BigInt(static_cast<unsigned long>(r.points.points.size()));
    } else {
      if (inst_args.n_text.empty() || inst_args.s_text.empty()) {
        throw std::invalid_argument(
            "--n and --s are required unless --points-file is given");
      }
      bounds::Instance inst;
      const BigInt n_big = parse_big(inst_args.n_text, "--n");
      if (n_big < 1 || n_big.fits_ulong_p() == 0 ||
          n_big.get_ui() > std::numeric_limits<unsigned>::max()) {
        throw std::invalid_argument("--n: out of supported range");
      }
      r.instance.n = static_cast<unsigned>(n_big.get_ui());
      r.instance.s = parse_big(inst_args.s_text, "--s");
      const auto modulus = interpolation::PrimeModulus::checked(prime);
      r.points = interpolation::sample_points(r.instance.n, r.instance.s,
                                              modulus, seed);
    }
    r.instance.m = BigInt(m);
    bounds::validate(r.instance);
    if (!save_points.empty()) {
      std::ofstream out(save_points);
      if (!out) {
        throw std::invalid_argument("--save-points: cannot open '" +
                                    save_points + "' for writing");
      }
      interpolation::write_point_set(out, r.points);
    }
    return r;
  }

  ordered_json inputs_json(const Resolved& r,
                           const std::optional<unsigned>& m) const {
    ordered_json in;
    if (r.from_file) {
      in["points_file"] = points_file;
    }
    in["n"] = dec(r.instance.n);
    in["s"] = dec(r.instance.s);
    if (m) {
      in["m"] = dec(*m);
    }
    in["prime"] = dec(r.points.prime);
    if (!r.from_file) {
      in["seed"] = dec(seed);
    }
    if (cap != 0) {
      in["cap"] = dec(cap);
    }
    return in;
  }
};

void add_format_option(CLI::App* sub, Format& fmt) {
  static const std::map<std::string, Format> kFormats{
      {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
  sub->add_option("--format", fmt, "Output format: text, json, or csv")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

void add_instance_options(CLI::App* sub, InstanceArgs& args, bool m_required) {
  sub->add_option("--n", args.n_text, "Ambient projective dimension (>= 1)")
      ->required();
  sub->add_option("--s", args.s_text, "Number of points (>= 1)")->required();
  auto* m_opt = sub->add_option("--m", args.m_text, "Multiplicity (>= 1)");
  if (m_required) {
    m_opt->required();
  }
}

void add_sample_options(CLI::App* sub, SampleArgs& args) {
  auto* n_opt = sub->add_option("--n", args.inst_args.n_text,
                                "Ambient projective dimension (>= 1)");
  auto* s_opt =
      sub->add_option("--s", args.inst_args.s_text, "Number of points (>= 1)");
  auto* prime_opt = sub->add_option(
      "--prime", args.prime, "Field modulus, prime, 3 <= p < 2^62 (default 2^31-1)");
  auto* seed_opt =
      sub->add_option("--seed", args.seed, "PRNG seed for point sampling");
  sub->add_option("--cap", args.cap,
                  "Degree-scan cap (0 = automatic safe bound)");
  auto* file_opt = sub->add_option(
      "--points-file", args.points_file,
      "Read points from this file instead of sampling (replaces --n/--s/--prime/--seed)");
  sub->add_option("--save-points", args.save_points,
                  "Write the point set used to this file");
  file_opt->excludes(n_opt)->excludes(s_opt)->excludes(prime_opt)->excludes(
      seed_opt);
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

int run_bounds(const InstanceArgs& args, Format fmt) {
  const bounds::Instance inst = args.instance();
  const bounds::BoundReport report = bounds::bound_report(inst);

  bool factors_ok = true;
  for (const auto& fr : report.factor_results) {
    factors_ok = factors_ok && fr.holds;
  }

  switch (fmt) {
    case Format::Text: {
      std::cout << "delta: " << dec(report.delta) << "\n";
      std::cout << "k_bound: " << dec(report.k_bound) << "\n";
      if (report.condition_holds) {
        std::cout << "condition: " << bool_name(*report.condition_holds) << "\n";
      }
      if (report.sufficient_holds) {
        std::cout << "sufficient: " << bool_name(*report.sufficient_holds)
                  << "\n";
      }
      for (const auto& fr : report.factor_results) {
        std::cout << "factor_" << fr.i << ": " << bool_name(fr.holds) << "\n";
      }
      if (report.mss_comparison) {
        std::cout << "mss: " << mss_name(*report.mss_comparison) << "\n";
      }
      break;
    }
    case Format::Json: {
      ordered_json inputs;
      inputs["n"] = dec(inst.n);
      inputs["s"] = dec(inst.s);
      inputs["m"] = dec(inst.m);
      ordered_json results;
      results["delta"] = dec(report.delta);
      results["k_bound"] = dec(report.k_bound);
      ordered_json verdicts;
      if (report.condition_holds) {
        verdicts["condition"] = *report.condition_holds;
      }
      if (report.sufficient_holds) {
        verdicts["sufficient"] = *report.sufficient_holds;
      }
      if (!report.factor_results.empty()) {
        ordered_json factors = ordered_json::array();
        for (const auto& fr : report.factor_results) {
          ordered_json f;
          f["i"] = dec(fr.i);
          f["holds"] = fr.holds;
          factors.push_back(std::move(f));
        }
        verdicts["factors"] = std::move(factors);
      }
      if (report.mss_comparison) {
        verdicts["mss"] = mss_name(*report.mss_comparison);
      }
      print_json(envelope("bounds", std::move(inputs), std::move(results),
                          std::move(verdicts)));
      break;
    }
    case Format::Csv: {
      std::cout << "n,s,m,delta,k_bound,condition,sufficient,factors_ok,mss\n";
      std::cout << dec(inst.n) << ',' << dec(inst.s) << ',' << dec(inst.m) << ','
                << dec(report.delta) << ',' << dec(report.k_bound) << ','
                << (report.condition_holds ? bool_name(*report.condition_holds)
                                           : "")
                << ','
                << (report.sufficient_holds
                        ? bool_name(*report.sufficient_holds)
                        : "")
                << ','
                << (report.factor_results.empty() ? "" : bool_name(factors_ok))
                << ','
                << (report.mss_comparison ? mss_name(*report.mss_comparison)
                                          : "")
                << "\n";
      break;
    }
  }
  return kExitOk;
}

int run_max_m(const std::string& n_text, const std::string& s_text, Format fmt) {
  const BigInt n_big = parse_big(n_text, "--n");
  if (n_big < 2 || n_big.fits_ulong_p() == 0 ||
      n_big.get_ui() > std::numeric_limits<unsigned>::max()) {
    throw std::invalid_argument("--n: need 2 <= n within machine range");
  }
  const unsigned n = static_cast<unsigned>(n_big.get_ui());
  const BigInt s = parse_big(s_text, "--s");
  const bounds::MaxMult result = bounds::max_m(n, s);

  std::string kind;
  switch (result.kind) {
    case bounds::MaxMult::Kind::None:
      kind = "none";
      break;
    case bounds::MaxMult::Kind::Unbounded:
      kind = "unbounded";
      break;
    case bounds::MaxMult::Kind::Bounded:
      kind = "bounded";
      break;
  }

  switch (fmt) {
    case Format::Text:
      if (result.kind == bounds::MaxMult::Kind::Bounded) {
        std::cout << dec(result.value) << "\n";
      } else {
        std::cout << kind << "\n";
      }
      break;
    case Format::Json: {
      ordered_json inputs;
      inputs["n"] = dec(n);
      inputs["s"] = dec(s);
      ordered_json results;
      results["kind"] = kind;
      if (result.kind == bounds::MaxMult::Kind::Bounded) {
        results["max_m"] = dec(result.value);
      }
      print_json(envelope("max-m", std::move(inputs), std::move(results),
                          ordered_json::object()));
      break;
    }
    case Format::Csv:
      std::cout << "n,s,kind,max_m\n";
      std::cout << dec(n) << ',' << dec(s) << ',' << kind << ','
                << (result.kind == bounds::MaxMult::Kind::Bounded
                        ? dec(result.value)
                        : "")
                << "\n";
      break;
  }
  return kExitOk;
}

int run_alpha(const SampleArgs& args, const std::string& m_text, Format fmt) {
  const unsigned m = machine_mult(parse_big(m_text, "--m"));
  const auto resolved = args.resolve(m);
  const unsigned cap =
      args.cap != 0
          ? args.cap
          : interpolation::default_degree_cap(resolved.instance.n,
                                              resolved.instance.s, m);
  const interpolation::AlphaResult result =
      interpolation::alpha_of(resolved.points, m, cap);

  switch (fmt) {
    case Format::Text:
      std::cout << result.alpha << "\n";
      break;
    case Format::Json: {
      ordered_json results;
      results["alpha"] = dec(result.alpha);
      ordered_json ranks = ordered_json::array();
      for (const auto& [d, rank] : result.ranks) {
        ordered_json r;
        r["d"] = dec(d);
        r["rank"] = std::to_string(rank);
        ranks.push_back(std::move(r));
      }
      results["ranks"] = std::move(ranks);
      print_json(envelope("alpha",
                          args.inputs_json(resolved, m),
                          std::move(results), ordered_json::object()));
      break;
    }
    case Format::Csv:
      std::cout << "n,s,m,prime,seed,alpha\n";
      std::cout << dec(resolved.instance.n) << ',' << dec(resolved.instance.s)
                << ',' << dec(m) << ',' << dec(resolved.points.prime) << ','
                << (resolved.from_file ? "" : dec(args.seed)) << ','
                << result.alpha << "\n";
      break;
  }
  return kExitOk;
}

int run_sequence(const SampleArgs& args, unsigned max_mult, Format fmt) {
  if (max_mult < 1) {
    throw std::invalid_argument("--max-mult: must be >= 1");
  }
  const auto resolved = args.resolve(1);
  const auto rows =
      interpolation::waldschmidt_sequence(resolved.points, max_mult, args.cap);

  switch (fmt) {
    case Format::Text:
      for (const auto& row : rows) {
        std::cout << row.m << ' ' << row.alpha << ' ' << dec(row.ratio) << "\n";
      }
      break;
    case Format::Json: {
      ordered_json results;
      ordered_json jrows = ordered_json::array();
      for (const auto& row : rows) {
        ordered_json r;
        r["m"] = dec(row.m);
        r["alpha"] = dec(row.alpha);
        r["ratio"] = dec(row.ratio);
        jrows.push_back(std::move(r));
      }
      results["rows"] = std::move(jrows);
      ordered_json inputs = args.inputs_json(resolved, std::nullopt);
      inputs["max_mult"] = dec(max_mult);
      print_json(envelope("sequence", std::move(inputs), std::move(results),
                          ordered_json::object()));
      break;
    }
    case Format::Csv:
      std::cout << "m,alpha,ratio\n";
      for (const auto& row : rows) {
        std::cout << row.m << ',' << row.alpha << ',' << dec(row.ratio) << "\n";
      }
      break;
  }
  return kExitOk;
}

int run_verify(const SampleArgs& args, const std::string& m_text, Format fmt) {
  const unsigned m = machine_mult(parse_big(m_text, "--m"));
  const auto resolved = args.resolve(m);
  verify::ExperimentReport report =
      verify::run_instance(resolved.points, m, args.cap);
  if (!resolved.from_file) {
    report.seed = args.seed;
  }
  const bool chud = (m == 1);

  switch (fmt) {
    case Format::Text: {
      std::cout << "alpha: " << report.alpha << "\n";
      std::cout << "delta: " << dec(report.delta) << "\n";
      if (report.k_bound) {
        std::cout << "k_bound: " << dec(*report.k_bound) << "\n";
      }
      if (report.condition_holds) {
        std::cout << "condition: " << bool_name(*report.condition_holds) << "\n";
      }
      std::cout << "demailly_ratio: " << dec(report.demailly_ratio) << "\n";
      if (chud) {
        std::cout << "chudnovsky_ratio: " << dec(report.demailly_ratio) << "\n";
      }
      std::cout << "thm_a_ok: " << bool_name(report.thm_a_ok) << "\n";
      if (report.thm_b_ok) {
        std::cout << "thm_b_ok: " << bool_name(*report.thm_b_ok) << "\n";
      }
      std::cout << "ratio_le_k: " << bool_name(report.ratio_le_k) << "\n";
      if (chud) {
        std::cout << "chudnovsky_ok: " << bool_name(report.ratio_le_k) << "\n";
      }
      break;
    }
    case Format::Json: {
      ordered_json results;
      results["alpha"] = dec(report.alpha);
      results["delta"] = dec(report.delta);
      if (report.k_bound) {
        results["k_bound"] = dec(*report.k_bound);
      }
      results["demailly_ratio"] = dec(report.demailly_ratio);
      if (chud) {
        results["chudnovsky_ratio"] = dec(report.demailly_ratio);
      }
      ordered_json verdicts;
      verdicts["thm_a_ok"] = report.thm_a_ok;
      if (report.condition_holds) {
        verdicts["condition_holds"] = *report.condition_holds;
      }
      if (report.thm_b_ok) {
        verdicts["thm_b_ok"] = *report.thm_b_ok;
      }
      verdicts["ratio_le_k"] = report.ratio_le_k;
      if (chud) {
        verdicts["chudnovsky_ok"] = report.ratio_le_k;
      }
      print_json(envelope("verify", args.inputs_json(resolved, m),
                          std::move(results), std::move(verdicts)));
      break;
    }
    case Format::Csv: {
      std::cout << "n,s,m,prime,seed,alpha,delta,k_bound,condition,"
                   "demailly_ratio,thm_a_ok,thm_b_ok,ratio_le_k\n";
      std::cout << dec(resolved.instance.n) << ',' << dec(resolved.instance.s)
                << ',' << dec(m) << ',' << dec(report.prime) << ','
                << (resolved.from_file ? "" : dec(report.seed)) << ','
                << report.alpha << ',' << dec(report.delta) << ','
                << (report.k_bound ? dec(*report.k_bound) : "") << ','
                << (report.condition_holds
                        ? bool_name(*report.condition_holds)
                        : "")
                << ',' << dec(report.demailly_ratio) << ','
                << bool_name(report.thm_a_ok) << ','
                << (report.thm_b_ok ? bool_name(*report.thm_b_ok) : "") << ','
                << bool_name(report.ratio_le_k) << "\n";
      break;
    }
  }
  return kExitOk;
}

int run_sweep(unsigned n_min, unsigned n_max, std::uint64_t s_max,
              std::uint64_t m_max, unsigned threads, Format fmt) {
  const unsigned use_threads = threads == 0 ? 1 : threads;
  const auto row_csv = [](const verify::SweepRow& r) {
    std::cout << r.n << ',' << r.s << ',' << r.m << ','
              << bool_name(r.condition_holds) << ','
              << bool_name(r.sufficient_holds) << ',' << bool_name(r.factor_ok)
              << ',' << mss_name(r.mss_class) << ',' << bool_name(r.violation)
              << "\n";
  };

  verify::SweepSummary summary;
  switch (fmt) {
    case Format::Json: {
      ordered_json inputs;
      inputs["n_min"] = dec(n_min);
      inputs["n_max"] = dec(n_max);
      inputs["s_max"] = dec(s_max);
      inputs["m_max"] = dec(m_max);
      inputs["threads"] = dec(use_threads);
      std::cout << "{\"command\":\"sweep\",\"inputs\":" << inputs.dump()
                << ",\"results\":{\"rows\":[";
      bool first = true;
      summary = verify::theorem_sweep(
          n_min, n_max, s_max, m_max, use_threads,
          [&first](const verify::SweepRow& r) {
            ordered_json j;
            j["n"] = std::to_string(r.n);
            j["s"] = std::to_string(r.s);
            j["m"] = std::to_string(r.m);
            j["condition"] = r.condition_holds;
            j["sufficient"] = r.sufficient_holds;
            j["factor_ok"] = r.factor_ok;
            j["mss"] = mss_name(r.mss_class);
            j["violation"] = r.violation;
            if (!first) {
              std::cout << ',';
            }
            first = false;
            std::cout << j.dump();
          });
      ordered_json verdicts;
      verdicts["violations"] = std::to_string(summary.violations);
      verdicts["rows"] = std::to_string(summary.rows);
      std::cout << "]},\"verdicts\":" << verdicts.dump() << ",\"version\":\""
                << fatpoints::kVersion << "\"}\n";
      break;
    }
    case Format::Csv: {
      std::cout << "n,s,m,condition,sufficient,factor_ok,mss,violation\n";
      summary =
          verify::theorem_sweep(n_min, n_max, s_max, m_max, use_threads, row_csv);
      std::cerr << "rows=" << summary.rows
                << " violations=" << summary.violations << "\n";
      break;
    }
    case Format::Text: {
      summary = verify::theorem_sweep(
          n_min, n_max, s_max, m_max, use_threads,
          [](const verify::SweepRow& r) {
            if (r.violation) {
              std::cout << "violation: n=" << r.n << " s=" << r.s
                        << " m=" << r.m << "\n";
            }
          });
      std::cout << "rows: " << summary.rows << "\n";
      std::cout << "violations: " << summary.violations << "\n";
      break;
    }
  }
  return kExitOk;
}

int run_certificate(const InstanceArgs& args, Format fmt) {
  const bounds::Instance inst = args.instance();
  const bounds::Certificate cert = bounds::certificate(inst);

  bool indeterminate = cert.sign_A == Sign::Indeterminate ||
                       cert.sign_C_min == Sign::Indeterminate ||
                       (cert.sign_f && *cert.sign_f == Sign::Indeterminate) ||
                       (cert.sign_g && *cert.sign_g == Sign::Indeterminate);

  switch (fmt) {
    case Format::Text: {
      std::cout << "theta: " << dec(inst.s) << "^(1/" << inst.n << ")\n";
      std::cout << "A: " << expr_text(cert.A) << "\n";
      std::cout << "sign_A: " << sign_name(cert.sign_A) << "\n";
      std::cout << "B: " << expr_text(cert.B) << "\n";
      for (std::size_t i = 0; i < cert.C_list.size(); ++i) {
        std::cout << "C_" << i << ": " << expr_text(cert.C_list[i]) << "\n";
      }
      std::cout << "C_min: " << expr_text(cert.C_min) << "\n";
      std::cout << "sign_C_min: " << sign_name(cert.sign_C_min) << "\n";
      if (cert.f) {
        std::cout << "f: " << expr_text(*cert.f) << "\n";
        std::cout << "sign_f: " << sign_name(*cert.sign_f) << "\n";
      }
      if (cert.g) {
        std::cout << "g: " << expr_text(*cert.g) << "\n";
        std::cout << "sign_g: " << sign_name(*cert.sign_g) << "\n";
      }
      if (cert.boundary_m) {
        std::cout << "boundary_m: " << expr_text(*cert.boundary_m) << "\n";
      }
      break;
    }
    case Format::Json: {
      ordered_json inputs;
      inputs["n"] = dec(inst.n);
      inputs["s"] = dec(inst.s);
      inputs["m"] = dec(inst.m);
      ordered_json results;
      results["A"] = expr_json(cert.A);
      results["B"] = expr_json(cert.B);
      ordered_json clist = ordered_json::array();
      for (const auto& ci : cert.C_list) {
        clist.push_back(expr_json(ci));
      }
      results["C_list"] = std::move(clist);
      results["C_min"] = expr_json(cert.C_min);
      if (cert.f) {
        results["f"] = expr_json(*cert.f);
      }
      if (cert.g) {
        results["g"] = expr_json(*cert.g);
      }
      if (cert.boundary_m) {
        results["boundary_m"] = expr_json(*cert.boundary_m);
      }
      ordered_json verdicts;
      verdicts["sign_A"] = sign_name(cert.sign_A);
      verdicts["sign_C_min"] = sign_name(cert.sign_C_min);
      if (cert.sign_f) {
        verdicts["sign_f"] = sign_name(*cert.sign_f);
      }
      if (cert.sign_g) {
        verdicts["sign_g"] = sign_name(*cert.sign_g);
      }
      print_json(envelope("certificate", std::move(inputs), std::move(results),
                          std::move(verdicts)));
      break;
    }
    case Format::Csv: {
      std::cout << "name,radicand,degree,coeffs,sign\n";
      const auto row = [](const std::string& name, const AlgebraicExpr& x,
                          const char* sign) {
        const std::string packed = expr_csv(x);
        const auto first = packed.find(':');
        const auto second = packed.find(':', first + 1);
        std::cout << name << ',' << packed.substr(0, first) << ','
                  << packed.substr(first + 1, second - first - 1) << ','
                  << packed.substr(second + 1) << ',' << sign << "\n";
      };
      row("A", cert.A, sign_name(cert.sign_A));
      row("B", cert.B, "");
      for (std::size_t i = 0; i < cert.C_list.size(); ++i) {
        row("C_" + std::to_string(i), cert.C_list[i], "");
      }
      row("C_min", cert.C_min, sign_name(cert.sign_C_min));
      if (cert.f) {
        row("f", *cert.f, sign_name(*cert.sign_f));
      }
      if (cert.g) {
        row("g", *cert.g, sign_name(*cert.sign_g));
      }
      if (cert.boundary_m) {
        row("boundary_m", *cert.boundary_m, "");
      }
      break;
    }
  }
  return indeterminate ? kExitCapOrIndeterminate : kExitOk;
}

int run_compare(const InstanceArgs& args, Format fmt) {
  const bounds::Instance inst = args.instance();
  if (inst.n < 2) {
    throw std::invalid_argument("compare: requires n >= 2");
  }
  const bounds::MssComparison cls = bounds::compare_mss(inst);
  const bounds::RootData rd = bounds::root_data(inst.s, inst.n);
  const bool mss_holds = rd.k >= inst.m + 1;
  const bool condition_holds = bounds::demailly_condition(inst);

  switch (fmt) {
    case Format::Text:
      std::cout << mss_name(cls) << "\n";
      break;
    case Format::Json: {
      ordered_json inputs;
      inputs["n"] = dec(inst.n);
      inputs["s"] = dec(inst.s);
      inputs["m"] = dec(inst.m);
      ordered_json results;
      results["k"] = dec(rd.k);
      ordered_json verdicts;
      verdicts["condition_holds"] = condition_holds;
      verdicts["mss_holds"] = mss_holds;
      verdicts["mss_class"] = mss_name(cls);
      print_json(envelope("compare", std::move(inputs), std::move(results),
                          std::move(verdicts)));
      break;
    }
    case Format::Csv:
      std::cout << "n,s,m,k,condition_holds,mss_holds,mss_class\n";
      std::cout << dec(inst.n) << ',' << dec(inst.s) << ',' << dec(inst.m) << ','
                << dec(rd.k) << ',' << bool_name(condition_holds) << ','
                << bool_name(mss_holds) << ',' << mss_name(cls) << "\n";
      break;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{
      "fatpoints: exact symbolic-power degree bounds, proof-chain "
      "verification, and empirical initial degrees over prime fields"};
  app.require_subcommand(1);
  app.set_version_flag("--version", fatpoints::kVersion);

  int exit_code = kExitOk;

  // bounds
  InstanceArgs bounds_args;
  Format bounds_fmt = Format::Text;
  auto* sub_bounds = app.add_subcommand(
      "bounds",
      "All degree bounds and proof-chain checks for one instance. CSV "
      "columns: n,s,m,delta,k_bound,condition,sufficient,factors_ok,mss");
  add_instance_options(sub_bounds, bounds_args, /*m_required=*/true);
  add_format_option(sub_bounds, bounds_fmt);
  sub_bounds->callback(
      [&]() { exit_code = run_bounds(bounds_args, bounds_fmt); });

  // max-m
  std::string maxm_n, maxm_s;
  Format maxm_fmt = Format::Text;
  auto* sub_maxm = app.add_subcommand(
      "max-m",
      "Largest multiplicity covered by the degree-bound assumption. CSV "
      "columns: n,s,kind,max_m");
  sub_maxm->add_option("--n", maxm_n, "Ambient projective dimension (>= 2)")
      ->required();
  sub_maxm->add_option("--s", maxm_s, "Number of points (>= 1)")->required();
  add_format_option(sub_maxm, maxm_fmt);
  sub_maxm->callback(
      [&]() { exit_code = run_max_m(maxm_n, maxm_s, maxm_fmt); });

  // alpha
  SampleArgs alpha_args;
  std::string alpha_m;
  Format alpha_fmt = Format::Text;
  auto* sub_alpha = app.add_subcommand(
      "alpha",
      "Least degree of a form vanishing to order m at the sampled points. "
      "CSV columns: n,s,m,prime,seed,alpha");
  add_sample_options(sub_alpha, alpha_args);
  sub_alpha->add_option("--m", alpha_m, "Multiplicity (>= 1)")->required();
  add_format_option(sub_alpha, alpha_fmt);
  sub_alpha->callback(
      [&]() { exit_code = run_alpha(alpha_args, alpha_m, alpha_fmt); });

  // sequence
  SampleArgs seq_args;
  unsigned seq_max_mult = 0;
  Format seq_fmt = Format::Text;
  auto* sub_seq = app.add_subcommand(
      "sequence",
      "alpha and alpha/m for m = 1..M on one point set. CSV columns: "
      "m,alpha,ratio");
  add_sample_options(sub_seq, seq_args);
  sub_seq->add_option("--max-mult", seq_max_mult, "Largest multiplicity M (>= 1)")
      ->required();
  add_format_option(sub_seq, seq_fmt);
  sub_seq->callback(
      [&]() { exit_code = run_sequence(seq_args, seq_max_mult, seq_fmt); });

  // verify
  SampleArgs verify_args;
  std::string verify_m;
  Format verify_fmt = Format::Text;
  auto* sub_verify = app.add_subcommand(
      "verify",
      "Empirical alpha against every proven bound for one instance. CSV "
      "columns: n,s,m,prime,seed,alpha,delta,k_bound,condition,"
      "demailly_ratio,thm_a_ok,thm_b_ok,ratio_le_k");
  add_sample_options(sub_verify, verify_args);
  sub_verify->add_option("--m", verify_m, "Multiplicity (>= 1)")->required();
  add_format_option(sub_verify, verify_fmt);
  sub_verify->callback(
      [&]() { exit_code = run_verify(verify_args, verify_m, verify_fmt); });

  // sweep
  unsigned sweep_n_min = 2, sweep_n_max = 2, sweep_threads = 1;
  std::uint64_t sweep_s_max = 1, sweep_m_max = 1;
  Format sweep_fmt = Format::Text;
  auto* sub_sweep = app.add_subcommand(
      "sweep",
      "Exact proof-chain check over a full (n, s, m) grid. CSV columns: "
      "n,s,m,condition,sufficient,factor_ok,mss,violation (summary on "
      "stderr); text prints violations plus a summary");
  sub_sweep->add_option("--n-min", sweep_n_min, "Smallest n (>= 2)");
  sub_sweep->add_option("--n-max", sweep_n_max, "Largest n")->required();
  sub_sweep->add_option("--s-max", sweep_s_max, "Largest s (from 1)")
      ->required();
  sub_sweep->add_option("--m-max", sweep_m_max, "Largest m (from 1)")
      ->required();
  sub_sweep->add_option("--threads", sweep_threads,
                        "Worker threads (output independent of the count)");
  add_format_option(sub_sweep, sweep_fmt);
  sub_sweep->callback([&]() {
    exit_code = run_sweep(sweep_n_min, sweep_n_max, sweep_s_max, sweep_m_max,
                          sweep_threads, sweep_fmt);
  });

  // certificate
  InstanceArgs cert_args;
  Format cert_fmt = Format::Text;
  auto* sub_cert = app.add_subcommand(
      "certificate",
      "Proof coefficients A, B, C_i, C_min (and f, g, boundary_m when the "
      "root is irrational) as exact algebraic numbers with sign verdicts. "
      "CSV columns: name,radicand,degree,coeffs,sign");
  add_instance_options(sub_cert, cert_args, /*m_required=*/false);
  add_format_option(sub_cert, cert_fmt);
  sub_cert->callback(
      [&]() { exit_code = run_certificate(cert_args, cert_fmt); });

  // compare
  InstanceArgs compare_args;
  Format compare_fmt = Format::Text;
  auto* sub_compare = app.add_subcommand(
      "compare",
      "Which sufficient condition holds: the degree-bound assumption vs "
      "k >= m+1. CSV columns: n,s,m,k,condition_holds,mss_holds,mss_class");
  add_instance_options(sub_compare, compare_args, /*m_required=*/true);
  add_format_option(sub_compare, compare_fmt);
  sub_compare->callback(
      [&]() { exit_code = run_compare(compare_args, compare_fmt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const verify::SoftwareFault& e) {
    std::cerr << "software fault: " << e.what() << "\n";
    return kExitSoftwareFault;
  } catch (const interpolation::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCapOrIndeterminate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}
