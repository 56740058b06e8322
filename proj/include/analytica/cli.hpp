#ifndef ANALYTICA_CLI_HPP
#define ANALYTICA_CLI_HPP

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "analytica/analytica.hpp"
#include "analytica/io.hpp"

namespace analytica {

/// Run-wide defaults: every sampled operation takes its seed from here, and
/// every report records it.
struct RunConfig {
  std::string default_scalar_kind = "rational";
  double float_tolerance = kDefaultRelTol;
  int default_order = 64;
  std::uint64_t seed = kDefaultSeed;
  std::string output_format = "text";

  void validate() const {
    if (!(float_tolerance > 0)) throw error("float tolerance must be positive");
  }
};

namespace cli_detail {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;

inline std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag_seed,
                                  const RunConfig& config) {
  if (flag_seed) return *flag_seed;
  if (const char* env = std::getenv("ANALYTICA_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw parse_error("ANALYTICA_SEED must be an unsigned integer");
    }
  }
  return config.seed;
}

inline WeightSeq<Rational> rational_weight_family(const std::string& name) {
  if (name == "inverse-factorial") return WeightSeq<Rational>::inverse_factorial();
  const std::string prefix = "scaled-inverse-factorial:";
  if (name.rfind(prefix, 0) == 0) {
    Rational c = parse_rational(name.substr(prefix.size()));
    return WeightSeq<Rational>::scaled_inverse_factorial(c);
  }
  if (name == "gaussian")
    throw parse_error("the gaussian family is float64-only; rational series need a rational family");
  throw parse_error("unknown weight family '" + name +
                    "' (expected inverse-factorial or scaled-inverse-factorial:C)");
}

inline WeightSeq<double> float_weight_family(const std::string& name) {
  if (name == "inverse-factorial") return WeightSeq<double>::inverse_factorial();
  if (name == "gaussian") return WeightSeq<double>::gaussian();
  const std::string prefix = "scaled-inverse-factorial:";
  if (name.rfind(prefix, 0) == 0)
    return WeightSeq<double>::scaled_inverse_factorial(to_double(parse_rational(name.substr(prefix.size()))));
  throw parse_error("unknown weight family '" + name + "'");
}

inline std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string part =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    out.push_back(parse_rational(part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

inline PNorm parse_pnorm(const std::string& p) {
  if (p == "1") return PNorm::one;
  if (p == "2") return PNorm::two;
  if (p == "inf") return PNorm::infinity;
  throw parse_error("p must be one of 1, 2, inf");
}

/// "p:r1,r2,..." -> space parameters.
inline SpaceParams<Rational> parse_space(const std::string& text) {
  std::size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw parse_error("space argument must look like p:r1,r2 with p in {1,2,inf}");
  return SpaceParams<Rational>{parse_pnorm(text.substr(0, colon)),
                               PolyRadius<Rational>(parse_rational_list(text.substr(colon + 1)))};
}

inline std::vector<std::string> parse_args_vector(const json& arr) {
  std::vector<std::string> out;
  for (const auto& e : arr) out.push_back(e.get<std::string>());
  return out;
}

inline std::vector<Rational> parse_vector_json(const json& arr) {
  std::vector<Rational> v;
  for (const auto& e : arr) {
    if (!e.is_string()) throw parse_error("vector entries must be 'p/q' strings");
    v.push_back(parse_rational(e.get<std::string>()));
  }
  return v;
}

}  // namespace cli_detail

/// Routes a full argv (prog name excluded) to the subcommands; returns the
/// process exit code: 0 success, 1 check failure, 2 usage or parse error.
inline int dispatch(std::vector<std::string> args, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
  using namespace cli_detail;

  CLI::App app{"analysis toolkit for truncated power series, symmetric multilinear forms, "
               "and weighted sequence-space bounds"};
  app.require_subcommand(1);

  RunConfig config;
  config.validate();
  std::optional<std::uint64_t> seed_flag;
  app.add_option("--seed", seed_flag, "seed for sampled checks (env ANALYTICA_SEED overrides the default)");

  int exit_code = kExitOk;

  // analyze: weighted boundedness + root-test radius estimate for a series
  {
    auto* cmd = app.add_subcommand("analyze", "weighted boundedness test and radius estimate");
    auto series_path = std::make_shared<std::string>();
    auto family = std::make_shared<std::string>("inverse-factorial");
    auto eps_text = std::make_shared<std::string>("1");
    cmd->add_option("--series", *series_path, "series JSON file (or - for stdin)")->required();
    cmd->add_option("--weights", *family,
                    "weight family (inverse-factorial | scaled-inverse-factorial:C | gaussian, "
                    "gaussian for float64 series only)");
    cmd->add_option("--eps", *eps_text, "positive rational eps");
    cmd->callback([series_path, family, eps_text, &out]() {
      SeriesValue sv = parse_series_file(*series_path);
      json doc{{"schema_version", 1},
               {"command", "analyze"},
               {"kind", series_kind(sv)},
               {"weights", *family},
               {"eps", *eps_text}};
      int order = 0;
      double radius = 0.0;
      if (std::holds_alternative<TruncatedSeries<Rational>>(sv)) {
        const auto& series = std::get<TruncatedSeries<Rational>>(sv);
        doc["boundedness"] = boundedness_to_json(
            weight_boundedness_test(series, rational_weight_family(*family),
                                    parse_rational(*eps_text)));
        order = series.order();
        if (order >= 8) radius = radius_lower_bound(series);
      } else {
        const auto& series = std::get<TruncatedSeries<double>>(sv);
        doc["boundedness"] = boundedness_to_json(
            weight_boundedness_test(series, float_weight_family(*family),
                                    to_double(parse_rational(*eps_text))));
        order = series.order();
        if (order >= 8) radius = radius_lower_bound(series);
      }
      if (order >= 8)
        doc["radius_lower_bound"] = std::isinf(radius) ? json("inf") : json(radius);
      out << doc.dump(2) << "\n";
    });
  }

  // witness: the radius-zero block construction
  {
    auto* cmd = app.add_subcommand("witness", "construct the radius-zero weight witness");
    auto series_path = std::make_shared<std::string>();
    auto n_max = std::make_shared<int>(4);
    cmd->add_option("--series", *series_path, "series JSON file")->required();
    cmd->add_option("--n-max", *n_max, "number of blocks to close")->required();
    cmd->callback([series_path, n_max, &out, &exit_code]() {
      SeriesValue sv = parse_series_file(*series_path);
      if (!std::holds_alternative<TruncatedSeries<Rational>>(sv))
        throw parse_error("witness expects a rational series");
      json doc{{"schema_version", 1}, {"command", "witness"}, {"n_max", *n_max}};
      try {
        auto w = nonanalytic_witness(std::get<TruncatedSeries<Rational>>(sv), *n_max);
        doc["ok"] = w.subadditive && w.block_inequalities;
        doc["witness"] = witness_to_json(w);
        if (!(w.subadditive && w.block_inequalities)) exit_code = kExitCheckFailure;
      } catch (const insufficient_prefix_error& e) {
        doc["ok"] = false;
        doc["error"] = e.what();
        doc["failing_block"] = e.block();
        exit_code = kExitCheckFailure;
      }
      out << doc.dump(2) << "\n";
    });
  }

  // diverge: the l^1 combination with pinned coefficients
  {
    auto* cmd = app.add_subcommand("diverge", "construct a divergence combination for a germ family");
    auto family_path = std::make_shared<std::string>();
    auto m_max = std::make_shared<int>(4);
    cmd->add_option("--family", *family_path, "germ family JSON file")->required();
    cmd->add_option("--m-max", *m_max, "number of selection steps")->required();
    cmd->callback([family_path, m_max, &out, &exit_code]() {
      GermFamily fam = parse_family_json(load_json_file(*family_path));
      json doc{{"schema_version", 1}, {"command", "diverge"}, {"m_max", *m_max}};
      try {
        auto w = divergence_combination(fam, *m_max);
        doc["ok"] = w.bounds_verified;
        doc["witness"] = divergence_to_json(w);
        if (!w.bounds_verified) exit_code = kExitCheckFailure;
      } catch (const insufficient_family_error& e) {
        doc["ok"] = false;
        doc["error"] = e.what();
        doc["failing_m"] = e.m();
        exit_code = kExitCheckFailure;
      }
      out << doc.dump(2) << "\n";
    });
  }

  // polarize: recover multilinear values from diagonal data
  {
    auto* cmd = app.add_subcommand("polarize", "evaluate a polarization formula for a stored form");
    auto form_path = std::make_shared<std::string>();
    auto route = std::make_shared<std::string>();
    auto args_path = std::make_shared<std::string>();
    cmd->add_option("--form", *form_path, "symmetric form JSON file")->required();
    cmd->add_option("--route", *route, "eps | binom | scaled")->required();
    cmd->add_option("--args", *args_path, "argument JSON file")->required();
    cmd->callback([form_path, route, args_path, &out]() {
      SymForm<Rational> f = parse_form_json(load_json_file(*form_path));
      json doc = load_json_file(*args_path);
      auto diag = [&f](const std::vector<Rational>& x) { return f.diagonal(x); };
      Rational value;
      if (*route == "eps") {
        if (!doc.contains("x0") || !doc.contains("args"))
          throw parse_error("route eps needs fields 'x0' and 'args'");
        std::vector<std::vector<Rational>> arg_vectors;
        for (const auto& row : doc["args"]) arg_vectors.push_back(parse_vector_json(row));
        value = polarize_eps(diag, f.degree(), parse_vector_json(doc["x0"]), arg_vectors);
      } else if (*route == "binom" || *route == "scaled") {
        if (!doc.contains("a") || !doc.contains("x"))
          throw parse_error("routes binom/scaled need fields 'a' and 'x'");
        auto a = parse_vector_json(doc["a"]);
        auto x = parse_vector_json(doc["x"]);
        value = *route == "binom" ? polarize_binom(diag, f.degree(), a, x)
                                  : polarize_scaled(diag, f.degree(), a, x);
      } else {
        throw parse_error("unknown route '" + *route + "'");
      }
      out << json{{"schema_version", 1}, {"command", "polarize"}, {"route", *route},
                  {"value", rational_to_string(value)}}
                 .dump(2)
          << "\n";
    });
  }

  // compose: Taylor coefficients of f o c from jet data
  {
    auto* cmd = app.add_subcommand("compose", "compose a map jet with curve coefficients");
    auto jet_path = std::make_shared<std::string>();
    auto curve_path = std::make_shared<std::string>();
    auto order = std::make_shared<int>(4);
    cmd->add_option("--f-jet", *jet_path, "jet JSON file")->required();
    cmd->add_option("--curve", *curve_path, "curve coefficients JSON file")->required();
    cmd->add_option("-L,--order", *order, "output truncation order")->required();
    cmd->callback([jet_path, curve_path, order, &out]() {
      auto jet = parse_jet_json(load_json_file(*jet_path));
      auto curve = parse_curve_json(load_json_file(*curve_path));
      auto series = compose_jet(jet, curve, *order);
      out << series_to_json(series).dump(2) << "\n";
    });
  }

  // partition-sum: the collapsed multinomial sum
  {
    auto* cmd = app.add_subcommand("partition-sum",
                                   "sum of k!/prod m_n! over partitions of l into k parts");
    auto k = std::make_shared<int>();
    auto l = std::make_shared<int>();
    cmd->add_option("-k", *k, "number of parts")->required();
    cmd->add_option("-l", *l, "partition total")->required();
    cmd->callback([k, l, &out]() { out << multinomial_partition_sum(*k, *l).str() << "\n"; });
  }

  // norm: weighted p-norm of a finite-support element
  {
    auto* cmd = app.add_subcommand("norm", "weighted p-norm of an element");
    auto element_path = std::make_shared<std::string>();
    auto radius_text = std::make_shared<std::string>();
    auto p_text = std::make_shared<std::string>("1");
    cmd->add_option("--element", *element_path, "element JSON file")->required();
    cmd->add_option("--radius", *radius_text, "comma-separated positive rationals")->required();
    cmd->add_option("-p", *p_text, "1 | 2 | inf");
    cmd->callback([element_path, radius_text, p_text, &out]() {
      auto el = parse_element_json(load_json_file(*element_path));
      auto radius = parse_rational_list(*radius_text);
      PNorm p = parse_pnorm(*p_text);
      json doc{{"schema_version", 1}, {"command", "norm"}, {"p", *p_text}};
      if (p == PNorm::two) {
        WeightedElement<double> fel;
        fel.n = el.n;
        for (const auto& [alpha, v] : el.entries) fel.entries[alpha] = to_double(v);
        std::vector<double> fr;
        for (const auto& r : radius) fr.push_back(to_double(r));
        doc["value"] = lpr_norm(fel, PolyRadius<double>(fr), p);
      } else {
        doc["value"] =
            rational_to_string(lpr_norm(el, PolyRadius<Rational>(radius), p));
      }
      out << doc.dump(2) << "\n";
    });
  }

  // inclusion: certified operator-norm bound between weighted spaces
  {
    auto* cmd = app.add_subcommand("inclusion", "operator-norm bound for an inclusion map");
    auto from_text = std::make_shared<std::string>();
    auto to_text = std::make_shared<std::string>();
    cmd->add_option("--from", *from_text, "source space p:r1,r2,...")->required();
    cmd->add_option("--to", *to_text, "target space p:r1,r2,...")->required();
    cmd->callback([from_text, to_text, &out]() {
      auto from_params = parse_space(*from_text);
      auto to_params = parse_space(*to_text);
      auto bound = inclusion_norm_bound(from_params, to_params);
      json doc{{"schema_version", 1}, {"command", "inclusion"},
               {"from", *from_text},   {"to", *to_text}};
      doc["inclusion"] = bound.has_value();
      if (bound) {
        doc["bound"] = rational_to_string(*bound);
        // The product bound for a strictly smaller radius is a derived
        // surrogate constant, not a computed operator norm.
        doc["certificate"] = from_params.radius.r == to_params.radius.r
                                 ? "norm-monotonicity"
                                 : "geometric-product-surrogate";
      }
      out << doc.dump(2) << "\n";
    });
  }

  // cauchy: coefficient bounds from circle samples of a built-in model
  {
    auto* cmd = app.add_subcommand("cauchy", "coefficient bounds M/rho^k from circle samples");
    auto model_name = std::make_shared<std::string>();
    auto rho_text = std::make_shared<std::string>();
    auto grid = std::make_shared<int>(256);
    auto k_max = std::make_shared<int>(40);
    cmd->add_option("--model", *model_name,
                    "one | geometric | exp | reciprocal-one-plus-square")->required();
    cmd->add_option("--rho", *rho_text, "circle radius (rational)")->required();
    cmd->add_option("--grid", *grid, "angular grid size");
    cmd->add_option("--k-max", *k_max, "largest bounded index");
    cmd->callback([model_name, rho_text, grid, k_max, &out, &exit_code]() {
      auto model = holo_model_by_name(*model_name);
      if (!model) throw parse_error("unknown model '" + *model_name + "'");
      double rho = to_double(parse_rational(*rho_text));
      auto samples = sample_circle_modulus(*model, 0.0, rho, *grid);
      auto bounds = cauchy_coeff_bound(samples, rho, *k_max);
      bool respected = true;
      for (int k = 0; k <= *k_max; ++k)
        if (std::abs(holo_model_coefficient(*model, k)) >
            bounds[static_cast<std::size_t>(k)] * (1.0 + 1e-12))
          respected = false;
      json doc{{"schema_version", 1},
               {"command", "cauchy"},
               {"model", *model_name},
               {"rho", *rho_text},
               {"grid", *grid},
               {"max_modulus", *std::max_element(samples.begin(), samples.end())},
               {"bounds", scalar_vector_to_json(bounds)},
               {"coefficients_respect_bounds", respected}};
      out << doc.dump(2) << "\n";
      if (!respected) exit_code = kExitCheckFailure;
    });
  }

  // gallery: the verified counterexample reproductions
  {
    auto* cmd = app.add_subcommand("gallery", "run the verified example gallery");
    auto* run = cmd->add_subcommand("run", "execute examples and report per-check verdicts");
    auto only = std::make_shared<std::string>();
    auto as_json = std::make_shared<bool>(false);
    auto as_text = std::make_shared<bool>(false);
    run->add_option("--only", *only, "run a single example id");
    run->add_flag("--json", *as_json, "machine-readable output");
    run->add_flag("--text", *as_text, "human-readable output (default)");
    run->add_option("--seed", seed_flag, "seed for sampled checks");
    run->callback([only, as_json, &seed_flag, &config, &out, &exit_code]() {
      std::uint64_t seed = resolve_seed(seed_flag, config);
      std::optional<std::string> filter;
      if (!only->empty()) filter = *only;
      auto reports = run_gallery(seed, filter);
      if (filter && reports.empty())
        throw parse_error("unknown example id '" + *filter + "'");
      bool all_ok = true;
      for (const auto& rep : reports) all_ok = all_ok && rep.all_passed();
      if (*as_json) {
        json arr = json::array();
        for (const auto& rep : reports) arr.push_back(example_report_to_json(rep));
        out << json{{"schema_version", 1}, {"seed", seed}, {"all_passed", all_ok},
                    {"reports", arr}}
                   .dump(2)
            << "\n";
      } else {
        out << "gallery (seed " << seed << ")\n";
        for (const auto& rep : reports) {
          out << rep.example_id << (rep.all_passed() ? "  OK" : "  FAILED") << "\n";
          for (const auto& c : rep.checks)
            out << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name << ": " << c.detail
                << "\n";
        }
      }
      if (!all_ok) exit_code = kExitCheckFailure;
    });
    cmd->require_subcommand(1);
  }

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}

}  // namespace analytica

#endif  // ANALYTICA_CLI_HPP
