#pragma once

// JSON-shaped records: campaign spec parsing, report serialization, and a
// writer that prints every double with 17 significant digits.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fhardy/errors.hpp"
#include "fhardy/quadrature.hpp"
#include "fhardy/verify.hpp"

namespace fhardy {

using Json = nlohmann::ordered_json;

namespace detail {

inline void write_string(std::string& out, const std::string& s) {
  // reuse the library's escaping for strings only
  out += Json(s).dump();
}

inline void write_json(std::string& out, const Json& j) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        write_string(out, it.key());
        out += ':';
        write_json(out, it.value());
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        write_json(out, j[i]);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        break;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      break;
    }
    default:
      out += j.dump();
  }
}

}  // namespace detail

/// Compact single-line rendering; doubles as %.17g, non-finite doubles as null.
inline std::string dump_json(const Json& j) {
  std::string out;
  detail::write_json(out, j);
  return out;
}

inline Json to_json(const EnergyReport& r) {
  return Json{{"value", r.value}, {"error_estimate", r.error_estimate}, {"evaluations", r.evaluations}};
}

inline Json to_json(const QuadConfig& c) {
  return Json{{"rel_tol", c.rel_tol},
              {"abs_tol", c.abs_tol},
              {"max_refinements", c.max_refinements},
              {"grading_ratio", c.grading_ratio},
              {"panel_order", c.panel_order},
              {"max_evaluations", c.max_evaluations}};
}

inline Json to_json(const HardyParams& p) {
  return Json{{"N", p.dim()},  {"p", p.p()},         {"s", p.s()},
              {"ps", p.ps()},  {"alpha", p.alpha()}, {"regime", to_string(p.regime())}};
}

inline Json to_json(const CheckRecord& r) {
  Json values = Json::object();
  Json series = Json::object();
  // repeated names (curves) become arrays
  std::vector<std::string> order;
  for (const auto& v : r.values) {
    if (values.contains(v.name)) {
      if (!series.contains(v.name)) series[v.name] = Json::array({values[v.name]});
      series[v.name].push_back(v.value);
    } else {
      values[v.name] = v.value;
      order.push_back(v.name);
    }
  }
  Json flat = Json::object();
  for (const auto& name : order) flat[name] = series.contains(name) ? series[name] : values[name];
  return Json{{"check", to_string(r.check)},
              {"N", r.dim},
              {"p", r.p},
              {"s", r.s},
              {"subject", r.subject},
              {"status", r.status},
              {"message", r.message},
              {"values", flat},
              {"error_budget", r.error_budget}};
}

inline Json to_json(const VerificationReport& report) {
  Json records = Json::array();
  for (const auto& r : report.records) records.push_back(to_json(r));
  return Json{{"records", records},
              {"notices", report.notices},
              {"summary",
               {{"total", report.summary.total},
                {"passed", report.summary.passed},
                {"failed", report.summary.failed},
                {"skipped", report.summary.skipped},
                {"errors", report.summary.errors}}},
              {"reproducibility",
               {{"seed", report.seed}, {"quadrature", to_json(report.quadrature)}, {"version", report.version}}}};
}

namespace detail {

inline std::vector<double> parse_number_list(const std::string& text, const std::string& context) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParameterError(ErrorKind::invalid_argument, "bad number '" + item + "' in " + context);
    }
  }
  return out;
}

}  // namespace detail

/// "hat", "hat:0,1,2", "ground_state:0.1", "piecewise:0,1,2;1,0.5,0" or
/// "piecewise:0,1,2;1,0.5,0;0.3" (knots; values; boundary power).
inline ProfileSpec parse_profile(const std::string& text) {
  ProfileSpec spec;
  const auto colon = text.find(':');
  spec.kind = text.substr(0, colon);
  if (colon == std::string::npos) return spec;
  const std::string rest = text.substr(colon + 1);
  if (spec.kind != "piecewise") {
    spec.args = detail::parse_number_list(rest, text);
    return spec;
  }
  std::vector<std::string> parts;
  std::stringstream ss(rest);
  std::string part;
  while (std::getline(ss, part, ';')) parts.push_back(part);
  if (parts.size() < 2 || parts.size() > 3)
    throw ParameterError(ErrorKind::invalid_argument, "piecewise profile needs knots;values[;power]");
  spec.knots = detail::parse_number_list(parts[0], text);
  spec.values = detail::parse_number_list(parts[1], text);
  if (parts.size() == 3) {
    const auto b = detail::parse_number_list(parts[2], text);
    if (b.size() != 1) throw ParameterError(ErrorKind::invalid_argument, "one boundary power expected");
    spec.boundary_power = b[0];
  }
  return spec;
}

inline Json to_json(const ProfileSpec& spec) {
  Json j{{"kind", spec.kind}};
  if (!spec.args.empty()) j["args"] = spec.args;
  if (!spec.knots.empty()) j["knots"] = spec.knots;
  if (!spec.values.empty()) j["values"] = spec.values;
  if (spec.boundary_power) j["boundary_power"] = *spec.boundary_power;
  return j;
}

namespace detail {

template <class T>
void read_field(const Json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("field '") + key + "': " + e.what());
  }
}

inline ProfileSpec profile_from_json(const Json& j) {
  if (j.is_string()) return parse_profile(j.get<std::string>());
  if (!j.is_object()) throw ConfigError("profile entries must be strings or objects");
  ProfileSpec spec;
  read_field(j, "kind", spec.kind);
  read_field(j, "args", spec.args);
  read_field(j, "knots", spec.knots);
  read_field(j, "values", spec.values);
  if (j.contains("boundary_power")) {
    double b = 0.0;
    read_field(j, "boundary_power", b);
    spec.boundary_power = b;
  }
  return spec;
}

}  // namespace detail

/// CampaignSpec from a JSON document. Unknown keys are rejected.
inline CampaignSpec campaign_from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("campaign document must be an object");
  static const std::vector<std::string> known{"grid",    "profiles",   "random_profiles", "checks",
                                              "quadrature", "seed",   "thresholds",      "eps_grid",
                                              "el_points",  "n_grid", "samples",         "m_values"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(known.begin(), known.end(), it.key()) == known.end())
      throw ConfigError("unknown campaign field '" + it.key() + "'");

  CampaignSpec spec;
  if (j.contains("grid")) {
    const Json& g = j.at("grid");
    if (!g.is_object()) throw ConfigError("'grid' must be an object");
    detail::read_field(g, "N", spec.dims);
    detail::read_field(g, "p", spec.ps);
    detail::read_field(g, "s", spec.ss);
  }
  if (j.contains("profiles")) {
    if (!j.at("profiles").is_array()) throw ConfigError("'profiles' must be an array");
    spec.profiles.clear();
    for (const Json& p : j.at("profiles")) spec.profiles.push_back(detail::profile_from_json(p));
  }
  detail::read_field(j, "random_profiles", spec.random_profiles);
  if (j.contains("checks")) {
    std::vector<std::string> names;
    detail::read_field(j, "checks", names);
    spec.checks.clear();
    for (const auto& n : names) {
      const auto k = parse_check(n);
      if (!k) throw ConfigError("unknown check '" + n + "'");
      spec.checks.push_back(*k);
    }
  }
  if (j.contains("quadrature")) {
    const Json& q = j.at("quadrature");
    detail::read_field(q, "rel_tol", spec.quadrature.rel_tol);
    detail::read_field(q, "abs_tol", spec.quadrature.abs_tol);
    detail::read_field(q, "max_refinements", spec.quadrature.max_refinements);
    detail::read_field(q, "grading_ratio", spec.quadrature.grading_ratio);
    detail::read_field(q, "panel_order", spec.quadrature.panel_order);
    detail::read_field(q, "max_evaluations", spec.quadrature.max_evaluations);
  }
  detail::read_field(j, "seed", spec.seed);
  if (j.contains("thresholds")) {
    const Json& t = j.at("thresholds");
    Thresholds& th = spec.thresholds;
    detail::read_field(t, "inequality_rel_slack", th.inequality_rel_slack);
    detail::read_field(t, "identity_safety", th.identity_safety);
    detail::read_field(t, "identity_rel_cap", th.identity_rel_cap);
    detail::read_field(t, "el_rel_tol", th.el_rel_tol);
    detail::read_field(t, "sharpness_contraction", th.sharpness_contraction);
    detail::read_field(t, "nd_target_rel", th.nd_target_rel);
    detail::read_field(t, "nd_sigmas", th.nd_sigmas);
    detail::read_field(t, "reduction_rel_tol", th.reduction_rel_tol);
    detail::read_field(t, "scaling_rel_tol", th.scaling_rel_tol);
  }
  detail::read_field(j, "eps_grid", spec.eps_grid);
  detail::read_field(j, "el_points", spec.el_points);
  detail::read_field(j, "n_grid", spec.n_grid);
  detail::read_field(j, "samples", spec.samples);
  detail::read_field(j, "m_values", spec.m_values);
  try {
    spec.validate();
  } catch (const ParameterError& e) {
    throw ConfigError(e.what());
  }
  return spec;
}

inline CampaignSpec load_campaign(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open campaign file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("cannot parse '" + path + "': " + e.what());
  }
  return campaign_from_json(j);
}

}  // namespace fhardy
