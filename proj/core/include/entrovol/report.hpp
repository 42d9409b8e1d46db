// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "entrovol/dispersion.hpp"
#include "entrovol/entropy.hpp"
#include "entrovol/probability.hpp"
#include "entrovol/returns_stats.hpp"

namespace entrovol {

enum class OutputFormat { Table, Csv, Json };

/// One report run: input files, entropic indices, histogram layout, output
/// shape. Mirrors the CLI flags one to one.
struct RunConfig {
  struct Input {
    std::string label;
    std::string path;
  };

  std::vector<Input> inputs;
  std::vector<double> q_values = {1.4, 1.45, 1.5};
  /// Cells per histogram; empty means the square-root rule
  /// ceil(sqrt(number of returns)) per series.
  std::optional<std::size_t> bins;
  /// Common explicit histogram range; empty means per-series min..max.
  std::optional<HistogramSpec::Range> range;
  OutputFormat format = OutputFormat::Table;
  bool skip_bad_rows = false;
  bool keep_going = false;
};

/// Everything reported for one series.
struct SeriesReport {
  std::string label;
  SummaryStats stats;
  DispersionReport dispersion;
  double shannon = 0;
  std::vector<std::pair<double, double>> tsallis;  // (q, S_q)
  std::size_t bins_used = 0;
};

struct Report {
  std::vector<SeriesReport> series;      // input order
  std::vector<double> q_values;          // as configured
  std::vector<std::string> errors;       // per-input failures (keep_going)
  std::size_t rows_skipped = 0;          // across all inputs
};

/// Loads every input and assembles the full report. Inputs are processed
/// in order; without keep_going the first failure is rethrown, with it the
/// failure is recorded in Report::errors and processing continues.
///
/// Throws Error(InvalidArgument) for an invalid config (no inputs, empty
/// or duplicated q values).
[[nodiscard]] Report run_report(const RunConfig& cfg);

/// Fixed-point table, statistics as rows and series as columns, 4 decimal
/// places. Undefined RSD prints as "n/a".
[[nodiscard]] std::string render_table(const Report& report);

/// One row per series, full round-trip precision. Undefined RSD is an
/// empty field.
[[nodiscard]] std::string render_csv(const Report& report);

/// JSON list of {label, stats{...}, dispersion{std_dev, rsd},
/// entropy{shannon, tsallis{q: value}}}; full precision, null RSD when
/// undefined.
[[nodiscard]] std::string render_json(const Report& report);

[[nodiscard]] std::string render(const Report& report, OutputFormat format);

/// Shortest decimal form that parses back to exactly the same double.
[[nodiscard]] std::string format_full(double value);

}  // namespace entrovol
