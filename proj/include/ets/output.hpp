// Copyright 2026 The ETS Simulator Authors
// SPDX-License-Identifier: Apache-2.0

/// CSV and JSON serialization of sweep results.
///
/// CSV columns: family, inequality, V, d, eta, value, err, lr_bound,
/// quantum_max, violated. Numbers use 12 significant digits with '.' as the
/// decimal separator; failed rows carry "nan" in value and err. JSON holds
/// the same rows plus a metadata object.

#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ets/sweeps.hpp"

namespace ets {

enum class OutputFormat { Csv, Json };

OutputFormat parse_format(std::string_view name);

/// printf("%.12g") in the C locale; "nan", "inf", "-inf" for non-finite values.
std::string format_number(double v);

/// One flat row as written to disk.
struct OutputRecord {
  std::string family;
  std::string inequality;
  double V = 0.0;
  double d = 0.0;
  double eta = 0.0;
  double value = 0.0;
  double err = 0.0;
  double lr_bound = 0.0;
  double quantum_max = 0.0;
  bool violated = false;
};

std::vector<OutputRecord> to_records(std::span<const SweepResult> results);

void write_csv(std::span<const SweepResult> results, std::ostream& os);
void write_json(std::span<const SweepResult> results, std::ostream& os, std::string_view label = "");
void write_results(std::span<const SweepResult> results, std::ostream& os, OutputFormat fmt,
                   std::string_view label = "");

/// Throws Io when the file cannot be written.
void write_results_file(std::span<const SweepResult> results, const std::string& path, OutputFormat fmt,
                        std::string_view label = "");

std::vector<OutputRecord> read_csv(std::istream& is);
std::vector<OutputRecord> read_json(std::istream& is);

}  // namespace ets
