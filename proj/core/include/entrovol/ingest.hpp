// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "entrovol/price_series.hpp"

namespace entrovol {

/// Column mapping and row-rejection policy for CSV loading.
struct CsvOptions {
  std::string date_column = "date";
  std::string close_column = "close";
  /// With skip_bad_rows set, rows whose date or close field is empty,
  /// unparsable, or non-positive are dropped instead of failing the load.
  bool skip_bad_rows = false;
  /// Series label; defaults to the file stem when empty.
  std::string label;
};

/// Per-load diagnostics, filled when a report pointer is passed to load_csv.
struct CsvLoadReport {
  std::size_t rows_skipped = 0;
  std::vector<std::size_t> skipped_lines;  // 1-based file line numbers
};

/// Loads a comma-separated file with a header row into a PriceSeries.
///
/// Required columns are named by `options` (extra columns are ignored),
/// dates must be ISO-8601 `YYYY-MM-DD`, closes must parse as positive
/// decimals. Rows are sorted by date if the file is unsorted. Errors carry
/// the offending 1-based file line where applicable.
///
/// Throws Error with code MissingColumn, UnparsableDate, NonPositivePrice,
/// DuplicateDate or TooFewRows.
[[nodiscard]] PriceSeries load_csv(const std::filesystem::path& path,
                                   const CsvOptions& options = {},
                                   CsvLoadReport* report = nullptr);

/// Writes `date,close` rows (full round-trip precision) with a header.
/// Reloading the written file yields a PriceSeries equal to `series`.
void save_csv(const PriceSeries& series, const std::filesystem::path& path);

}  // namespace entrovol
