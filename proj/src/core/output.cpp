// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include "ets/output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "ets/error.hpp"

namespace ets {
namespace {

using nlohmann::ordered_json;

constexpr const char* kHeader = "family,inequality,V,d,eta,value,err,lr_bound,quantum_max,violated";

// JSON cannot hold NaN; a finite value is stored as the double nearest its
// 12-digit text so both formats carry the same number.
ordered_json json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::stod(format_number(v));
}

double parse_number(const std::string& s) {
  if (s == "nan") return std::nan("");
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) raise(ErrorCode::Io, "malformed number '" + s + "'");
  return v;
}

ordered_json angles_json(const AngleSet& a) {
  ordered_json out = ordered_json::array();
  for (const auto& party : a) {
    ordered_json p = ordered_json::array();
    for (const auto& r : party) p.push_back({{"theta", json_number(r.theta)}, {"phase", json_number(r.phase)}});
    out.push_back(p);
  }
  return out;
}

const char* angle_mode_name(AngleMode m) {
  switch (m) {
    case AngleMode::Canonical: return "canonical";
    case AngleMode::Optimize: return "optimize";
    case AngleMode::Explicit: return "explicit";
  }
  return "canonical";
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  raise(ErrorCode::InvalidArgument, "unknown output format '" + std::string(name) + "'");
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s(buf);
  for (auto& c : s) {
    if (c == ',') c = '.';  // guard against a non-C numeric locale
  }
  return s;
}

std::vector<OutputRecord> to_records(std::span<const SweepResult> results) {
  std::vector<OutputRecord> out;
  for (const auto& res : results) {
    const auto& spec = inequality_spec(res.plan.inequality);
    for (const auto& r : res.rows) {
      out.push_back({std::string(family_name(res.plan.family)), std::string(inequality_name(res.plan.inequality)), r.V,
                     r.d, r.eta, r.value, r.err, spec.lr_bound, spec.quantum_max, r.violated});
    }
  }
  return out;
}

void write_csv(std::span<const SweepResult> results, std::ostream& os) {
  os << kHeader << '\n';
  for (const auto& r : to_records(results)) {
    os << r.family << ',' << r.inequality << ',' << format_number(r.V) << ',' << format_number(r.d) << ','
       << format_number(r.eta) << ',' << format_number(r.value) << ',' << format_number(r.err) << ','
       << format_number(r.lr_bound) << ',' << format_number(r.quantum_max) << ','
       << (r.violated ? "true" : "false") << '\n';
  }
}

void write_json(std::span<const SweepResult> results, std::ostream& os, std::string_view label) {
  ordered_json meta;
  meta["tool"] = "ets";
  meta["version"] = ETS_VERSION_STRING;
  if (!label.empty()) meta["label"] = std::string(label);
  ordered_json sweeps = ordered_json::array();
  ordered_json rows = ordered_json::array();
  for (const auto& res : results) {
    const auto& p = res.plan;
    ordered_json s;
    s["family"] = std::string(family_name(p.family));
    s["inequality"] = std::string(inequality_name(p.inequality));
    s["evaluator"] = p.evaluator == Evaluator::ClosedForm ? "closed-form" : "numeric";
    s["angle_mode"] = angle_mode_name(p.angle_mode);
    if (p.angle_mode == AngleMode::Optimize) s["restarts"] = p.restarts;
    s["cfg"] = {{"nodes_per_axis", p.cfg.nodes_per_axis},
                {"mc_samples", p.cfg.mc_samples},
                {"mc_seed", p.cfg.mc_seed},
                {"method", std::string(method_name(p.cfg.method))},
                {"rel_tol", p.cfg.rel_tol},
                {"normalization", std::string(normalization_name(p.cfg.normalization))}};
    if (!res.rows.empty() && p.angle_mode != AngleMode::Optimize) {
      s["angle_provenance"] = res.rows.front().provenance;
      s["angles"] = angles_json(res.rows.front().angles);
    }
    sweeps.push_back(s);

    const auto& spec = inequality_spec(p.inequality);
    for (const auto& r : res.rows) {
      ordered_json row;
      row["family"] = s["family"];
      row["inequality"] = s["inequality"];
      row["V"] = json_number(r.V);
      row["d"] = json_number(r.d);
      row["eta"] = json_number(r.eta);
      row["value"] = json_number(r.value);
      row["err"] = json_number(r.err);
      row["lr_bound"] = json_number(spec.lr_bound);
      row["quantum_max"] = json_number(spec.quantum_max);
      row["violated"] = r.violated;
      row["status"] = r.failed ? "failed" : "ok";
      if (r.failed) row["error"] = r.error;
      if (p.angle_mode == AngleMode::Optimize && !r.failed) {
        row["provenance"] = r.provenance;
        row["angles"] = angles_json(r.angles);
      }
      rows.push_back(row);
    }
  }
  meta["sweeps"] = sweeps;
  ordered_json doc;
  doc["metadata"] = meta;
  doc["rows"] = rows;
  os << doc.dump(2) << '\n';
}

void write_results(std::span<const SweepResult> results, std::ostream& os, OutputFormat fmt, std::string_view label) {
  if (fmt == OutputFormat::Csv) {
    write_csv(results, os);
  } else {
    write_json(results, os, label);
  }
}

void write_results_file(std::span<const SweepResult> results, const std::string& path, OutputFormat fmt,
                        std::string_view label) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) raise(ErrorCode::Io, "cannot open '" + path + "' for writing");
  write_results(results, f, fmt, label);
  f.flush();
  if (!f) raise(ErrorCode::Io, "write to '" + path + "' failed");
}

std::vector<OutputRecord> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kHeader) raise(ErrorCode::Io, "missing or unexpected CSV header");
  std::vector<OutputRecord> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (f.size() != 10) raise(ErrorCode::Io, "CSV row does not have 10 columns");
    if (f[9] != "true" && f[9] != "false") raise(ErrorCode::Io, "bad violated flag '" + f[9] + "'");
    out.push_back({f[0], f[1], parse_number(f[2]), parse_number(f[3]), parse_number(f[4]), parse_number(f[5]),
                   parse_number(f[6]), parse_number(f[7]), parse_number(f[8]), f[9] == "true"});
  }
  return out;
}

std::vector<OutputRecord> read_json(std::istream& is) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(is);
  } catch (const std::exception& e) {
    raise(ErrorCode::Io, std::string("malformed JSON: ") + e.what());
  }
  auto num = [](const ordered_json& j) { return j.is_null() ? std::nan("") : j.get<double>(); };
  std::vector<OutputRecord> out;
  try {
    for (const auto& r : doc.at("rows")) {
      out.push_back({r.at("family").get<std::string>(), r.at("inequality").get<std::string>(), num(r.at("V")),
                     num(r.at("d")), num(r.at("eta")), num(r.at("value")), num(r.at("err")), num(r.at("lr_bound")),
                     num(r.at("quantum_max")), r.at("violated").get<bool>()});
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    raise(ErrorCode::Io, std::string("unexpected JSON layout: ") + e.what());
  }
  return out;
}

}  // namespace ets
