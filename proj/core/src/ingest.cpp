// SPDX-License-Identifier: Apache-2.0
#include "entrovol/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <string_view>
#include <utility>

#include "entrovol/error.hpp"
#include "format_util.hpp"

namespace entrovol {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

std::optional<double> parse_close(std::string_view field) {
  if (field.empty()) return std::nullopt;
  double value = 0;
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

struct ParsedRow {
  Date date;
  double close;
  std::size_t line;  // 1-based file line, header included
};

}  // namespace

PriceSeries load_csv(const std::filesystem::path& path, const CsvOptions& options,
                     CsvLoadReport* report) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::InvalidArgument, "cannot open " + path.string());
  }

  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorCode::MissingColumn, path.string() + ": empty file, no header row");
  }
  if (line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);  // UTF-8 BOM
  if (!line.empty() && line.back() == '\r') line.pop_back();

  const auto header = split_fields(line);
  auto column_of = [&](const std::string& name) -> std::size_t {
    const auto it = std::find(header.begin(), header.end(), std::string_view(name));
    if (it == header.end()) {
      throw Error(ErrorCode::MissingColumn,
                  path.string() + ": no \"" + name + "\" column in header");
    }
    return std::size_t(it - header.begin());
  };
  const std::size_t date_col = column_of(options.date_column);
  const std::size_t close_col = column_of(options.close_column);

  CsvLoadReport local_report;
  auto reject = [&](std::size_t line_no, ErrorCode code, const std::string& what) {
    if (options.skip_bad_rows) {
      local_report.rows_skipped++;
      local_report.skipped_lines.push_back(line_no);
      return;
    }
    throw Error(code, path.string() + " line " + std::to_string(line_no) + ": " + what,
                line_no);
  };

  std::vector<ParsedRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;

    const auto fields = split_fields(line);
    const auto date_field =
        date_col < fields.size() ? fields[date_col] : std::string_view{};
    const auto close_field =
        close_col < fields.size() ? fields[close_col] : std::string_view{};

    const auto date = parse_date(date_field);
    if (!date) {
      reject(line_no, ErrorCode::UnparsableDate,
             "unparsable date \"" + std::string(date_field) + "\"");
      continue;
    }
    const auto close = parse_close(close_field);
    if (!close) {
      reject(line_no, ErrorCode::NonPositivePrice,
             "missing or unparsable close \"" + std::string(close_field) + "\"");
      continue;
    }
    if (!(*close > 0.0)) {
      reject(line_no, ErrorCode::NonPositivePrice,
             "non-positive close " + std::string(close_field));
      continue;
    }
    rows.push_back({*date, *close, line_no});
  }

  std::stable_sort(rows.begin(), rows.end(), [](const ParsedRow& a, const ParsedRow& b) {
    return std::chrono::sys_days(a.date) < std::chrono::sys_days(b.date);
  });
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].date == rows[i - 1].date) {
      const auto dup_line = std::max(rows[i].line, rows[i - 1].line);
      throw Error(ErrorCode::DuplicateDate,
                  path.string() + " line " + std::to_string(dup_line) +
                      ": duplicate date " + format_date(rows[i].date),
                  dup_line);
    }
  }
  if (rows.size() < 2) {
    throw Error(ErrorCode::TooFewRows, path.string() + ": " +
                                           std::to_string(rows.size()) +
                                           " usable rows, need at least 2");
  }

  std::vector<Observation> observations;
  observations.reserve(rows.size());
  for (const auto& row : rows) observations.push_back({row.date, row.close});

  if (report) *report = std::move(local_report);
  const std::string label = options.label.empty() ? path.stem().string() : options.label;
  return PriceSeries(label, std::move(observations));
}

void save_csv(const PriceSeries& series, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  }
  out << "date,close\n";
  for (const auto& obs : series.observations()) {
    out << format_date(obs.date) << ',' << detail::format_double(obs.close) << '\n';
  }
  if (!out.flush()) {
    throw Error(ErrorCode::InvalidArgument, "write failed for " + path.string());
  }
}

}  // namespace entrovol
