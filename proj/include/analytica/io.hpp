#ifndef ANALYTICA_IO_HPP
#define ANALYTICA_IO_HPP

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "analytica/composition.hpp"
#include "analytica/convergence.hpp"
#include "analytica/errors.hpp"
#include "analytica/gallery.hpp"
#include "analytica/multilinear.hpp"
#include "analytica/scalar.hpp"
#include "analytica/seq_spaces.hpp"
#include "analytica/series.hpp"

namespace analytica {

using json = nlohmann::json;

/// Parses "p" or "p/q" with q != 0; the stored value is canonical (lowest
/// terms, positive denominator) regardless of the input spelling.
inline Rational parse_rational(const std::string& text) {
  auto bad = [&](const std::string& why) -> void {
    throw parse_error("bad rational literal '" + text + "': " + why);
  };
  auto parse_int = [&](const std::string& part) -> BigInt {
    std::size_t i = 0;
    if (i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
    if (i == part.size()) bad("missing digits");
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') bad("unexpected character");
    return BigInt(part);
  };
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  BigInt p = parse_int(text.substr(0, slash));
  BigInt q = parse_int(text.substr(slash + 1));
  if (q == 0) bad("zero denominator");
  return Rational(p) / Rational(q);
}

/// Canonical form: lowest terms, positive denominator, "/1" omitted.
inline std::string rational_to_string(const Rational& q) { return q.str(); }

inline json scalar_to_json(const Rational& v) { return rational_to_string(v); }
inline json scalar_to_json(double v) { return v; }

template <class S>
json scalar_vector_to_json(const std::vector<S>& values) {
  json arr = json::array();
  for (const S& v : values) arr.push_back(scalar_to_json(v));
  return arr;
}

using SeriesValue = std::variant<TruncatedSeries<Rational>, TruncatedSeries<double>>;

inline std::string series_kind(const SeriesValue& s) {
  return std::holds_alternative<TruncatedSeries<Rational>>(s) ? "rational" : "float64";
}

inline json series_to_json(const TruncatedSeries<Rational>& s) {
  return json{{"kind", "rational"},
              {"order", s.order()},
              {"coeffs", scalar_vector_to_json(s.coeffs())}};
}

inline json series_to_json(const TruncatedSeries<double>& s) {
  return json{{"kind", "float64"},
              {"order", s.order()},
              {"coeffs", scalar_vector_to_json(s.coeffs())}};
}

inline json series_to_json(const SeriesValue& s) {
  return std::visit([](const auto& v) { return series_to_json(v); }, s);
}

inline SeriesValue parse_series_json(const json& j) {
  if (!j.is_object()) throw parse_error("series document must be a JSON object");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw parse_error("series needs a string field 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  if (!j.contains("order") || !j["order"].is_number_integer())
    throw parse_error("series needs an integer field 'order'");
  const long long order = j["order"].get<long long>();
  if (order < 0) throw parse_error("series order must be >= 0, got " + std::to_string(order));
  if (!j.contains("coeffs") || !j["coeffs"].is_array())
    throw parse_error("series needs an array field 'coeffs'");
  const auto& arr = j["coeffs"];
  if (static_cast<long long>(arr.size()) != order + 1)
    throw parse_error("coeffs length " + std::to_string(arr.size()) +
                      " does not equal order+1 = " + std::to_string(order + 1));

  if (kind == "rational") {
    std::vector<Rational> c;
    c.reserve(arr.size());
    for (const auto& e : arr) {
      if (!e.is_string()) throw parse_error("rational coefficients must be 'p/q' strings");
      c.push_back(parse_rational(e.get<std::string>()));
    }
    return TruncatedSeries<Rational>(std::move(c));
  }
  if (kind == "float64") {
    std::vector<double> c;
    c.reserve(arr.size());
    for (const auto& e : arr) {
      if (!e.is_number()) throw parse_error("float64 coefficients must be JSON numbers");
      c.push_back(e.get<double>());
    }
    return TruncatedSeries<double>(std::move(c));
  }
  throw parse_error("unknown series kind '" + kind + "' (expected rational or float64)");
}

/// Reads JSON from a file, or from stdin when the path is "-".
inline json load_json_file(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

inline SeriesValue parse_series_file(const std::string& path) {
  try {
    return parse_series_json(load_json_file(path));
  } catch (const parse_error& e) {
    throw parse_error(std::string(e.what()) + " [while reading " + path + "]");
  }
}

/// Coefficientwise sum on dynamically typed series; mixing kinds is the
/// kind-mismatch error of the series contract.
inline SeriesValue series_value_add(const SeriesValue& a, const SeriesValue& b) {
  if (a.index() != b.index()) throw kind_mismatch_error(series_kind(a), series_kind(b));
  if (std::holds_alternative<TruncatedSeries<Rational>>(a))
    return series_add(std::get<TruncatedSeries<Rational>>(a), std::get<TruncatedSeries<Rational>>(b));
  return series_add(std::get<TruncatedSeries<double>>(a), std::get<TruncatedSeries<double>>(b));
}

inline SeriesValue series_value_product(const SeriesValue& a, const SeriesValue& b) {
  if (a.index() != b.index()) throw kind_mismatch_error(series_kind(a), series_kind(b));
  if (std::holds_alternative<TruncatedSeries<Rational>>(a))
    return cauchy_product(std::get<TruncatedSeries<Rational>>(a),
                          std::get<TruncatedSeries<Rational>>(b));
  return cauchy_product(std::get<TruncatedSeries<double>>(a), std::get<TruncatedSeries<double>>(b));
}

inline MultiIndex parse_multi_index(const std::string& key, int dim) {
  MultiIndex alpha;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(part, &pos);
      if (pos != part.size() || v < 0) throw std::invalid_argument(part);
      alpha.push_back(v);
    } catch (const std::exception&) {
      throw parse_error("bad multi-index component '" + part + "' in key '" + key + "'");
    }
  }
  if (static_cast<int>(alpha.size()) != dim)
    throw parse_error("multi-index '" + key + "' needs exactly " + std::to_string(dim) +
                      " components");
  return alpha;
}

inline std::string multi_index_key(const MultiIndex& alpha) {
  std::string key;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i) key += ',';
    key += std::to_string(alpha[i]);
  }
  return key;
}

inline SymForm<Rational> parse_form_json(const json& j) {
  if (!j.is_object()) throw parse_error("form document must be a JSON object");
  if (!j.contains("degree") || !j.contains("dim"))
    throw parse_error("form needs integer fields 'degree' and 'dim'");
  SymForm<Rational> f(j["degree"].get<int>(), j["dim"].get<int>());
  if (j.contains("coeffs")) {
    if (!j["coeffs"].is_object()) throw parse_error("form coeffs must be an object");
    for (const auto& [key, value] : j["coeffs"].items()) {
      if (!value.is_string()) throw parse_error("form coefficients must be 'p/q' strings");
      f.set(parse_multi_index(key, f.dim()), parse_rational(value.get<std::string>()));
    }
  }
  return f;
}

inline json form_to_json(const SymForm<Rational>& f) {
  json coeffs = json::object();
  for (const auto& [alpha, c] : f.coefficients())
    coeffs[multi_index_key(alpha)] = rational_to_string(c);
  return json{{"degree", f.degree()}, {"dim", f.dim()}, {"coeffs", coeffs}};
}

inline JetOfMap<Rational> parse_jet_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("forms"))
    throw parse_error("jet needs fields 'dim' and 'forms'");
  JetOfMap<Rational> jet;
  jet.dim = j["dim"].get<int>();
  for (const auto& fj : j["forms"]) jet.forms.push_back(parse_form_json(fj));
  jet.validate();
  return jet;
}

inline CurveCoefficients<Rational> parse_curve_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("coeffs"))
    throw parse_error("curve needs fields 'dim' and 'coeffs'");
  CurveCoefficients<Rational> c;
  c.dim = j["dim"].get<int>();
  for (const auto& row : j["coeffs"]) {
    std::vector<Rational> v;
    for (const auto& e : row) {
      if (!e.is_string()) throw parse_error("curve coefficients must be 'p/q' strings");
      v.push_back(parse_rational(e.get<std::string>()));
    }
    c.coeffs.push_back(std::move(v));
  }
  c.validate();
  return c;
}

inline GermFamily parse_family_json(const json& j) {
  if (!j.is_object() || !j.contains("k_max") || !j.contains("members"))
    throw parse_error("family needs fields 'k_max' and 'members'");
  GermFamily fam;
  fam.k_max = j["k_max"].get<int>();
  for (const auto& row : j["members"]) {
    std::vector<Rational> v;
    for (const auto& e : row) {
      if (!e.is_string()) throw parse_error("family coefficients must be 'p/q' strings");
      v.push_back(parse_rational(e.get<std::string>()));
    }
    fam.members.push_back(std::move(v));
  }
  fam.validate();
  return fam;
}

inline WeightedElement<Rational> parse_element_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw parse_error("element needs fields 'n' and 'entries'");
  WeightedElement<Rational> el;
  el.n = j["n"].get<int>();
  for (const auto& [key, value] : j["entries"].items()) {
    if (!value.is_string()) throw parse_error("element entries must be 'p/q' strings");
    el.entries[parse_multi_index(key, el.n)] = parse_rational(value.get<std::string>());
  }
  el.validate();
  return el;
}

inline json element_to_json(const WeightedElement<Rational>& el) {
  json entries = json::object();
  for (const auto& [alpha, v] : el.entries)
    entries[multi_index_key(alpha)] = rational_to_string(v);
  return json{{"n", el.n}, {"entries", entries}};
}

template <class S>
json boundedness_to_json(const BoundednessReport<S>& rep) {
  return json{{"bounded", rep.bounded},
              {"sup", scalar_to_json(rep.sup)},
              {"arg_max", rep.arg_max},
              {"values", scalar_vector_to_json(rep.values)}};
}

template <class S>
json witness_to_json(const NonanalyticWitness<S>& w) {
  json blocks = json::array();
  for (const auto& b : w.blocks)
    blocks.push_back(json{{"n", b.n},
                          {"k_begin", b.k_begin},
                          {"k_end", b.k_end},
                          {"block_sum", scalar_to_json(b.block_sum)}});
  return json{{"blocks", blocks},
              {"table", scalar_vector_to_json(w.table)},
              {"subadditive", w.subadditive},
              {"block_inequalities", w.block_inequalities}};
}

inline json divergence_to_json(const DivergenceWitness& w) {
  json terms = json::array();
  for (const auto& t : w.terms)
    terms.push_back(json{{"m", t.m},
                         {"k", t.k},
                         {"member", t.member},
                         {"coefficient", rational_to_string(t.coefficient)},
                         {"t", rational_to_string(t.t)},
                         {"lower_bound", rational_to_string(t.lower_bound)}});
  return json{{"terms", terms},
              {"combined", scalar_vector_to_json(w.combined)},
              {"bounds_verified", w.bounds_verified},
              {"finite_family_restriction", w.finite_family_restriction}};
}

inline json example_report_to_json(const ExampleReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back(json{{"name", c.name},
                          {"passed", c.passed},
                          {"detail", c.detail},
                          {"tolerance", c.tolerance}});
  return json{{"example_id", rep.example_id},
              {"seed", rep.seed},
              {"all_passed", rep.all_passed()},
              {"checks", checks}};
}

}  // namespace analytica

#endif  // ANALYTICA_IO_HPP
