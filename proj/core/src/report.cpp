// SPDX-License-Identifier: Apache-2.0
#include "entrovol/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "entrovol/error.hpp"
#include "entrovol/ingest.hpp"
#include "format_util.hpp"

namespace entrovol {

namespace {

std::size_t default_bins(std::size_t n_returns) {
  // Square-root rule. The cell count is a convention, not a law; callers
  // who need cross-series comparability should pin --bins explicitly.
  return std::size_t(std::ceil(std::sqrt(double(n_returns))));
}

void validate_config(const RunConfig& cfg) {
  if (cfg.inputs.empty()) {
    throw Error(ErrorCode::InvalidArgument, "no input files given");
  }
  if (cfg.q_values.empty()) {
    throw Error(ErrorCode::InvalidArgument, "at least one q value is required");
  }
  for (std::size_t i = 0; i < cfg.q_values.size(); ++i) {
    for (std::size_t j = i + 1; j < cfg.q_values.size(); ++j) {
      if (cfg.q_values[i] == cfg.q_values[j]) {
        throw Error(ErrorCode::InvalidArgument,
                    "duplicate q value " + detail::format_double(cfg.q_values[i]));
      }
    }
  }
  if (cfg.bins && *cfg.bins < 1) {
    throw Error(ErrorCode::InvalidArgument, "--bins must be at least 1");
  }
}

SeriesReport analyze_one(const RunConfig& cfg, const RunConfig::Input& input,
                         const std::vector<EntropicIndex>& qs,
                         std::size_t& rows_skipped) {
  CsvOptions options;
  options.skip_bad_rows = cfg.skip_bad_rows;
  options.label = input.label;
  CsvLoadReport load_report;
  const PriceSeries prices = load_csv(input.path, options, &load_report);
  rows_skipped += load_report.rows_skipped;

  const ReturnSeries returns = log_returns(prices);
  const HistogramSpec spec =
      cfg.range ? HistogramSpec(cfg.bins ? *cfg.bins : default_bins(returns.size()),
                                *cfg.range)
                : HistogramSpec(cfg.bins ? *cfg.bins : default_bins(returns.size()));
  const ProbDist dist = histogram_prob(returns.values(), spec);
  const EntropyReport entropy = make_entropy_report(returns.label(), dist, qs);

  SeriesReport report;
  report.label = returns.label();
  report.stats = summary_stats(returns);
  report.dispersion = dispersion_report(returns);
  report.shannon = entropy.shannon;
  report.tsallis = entropy.tsallis;
  report.bins_used = dist.support_size();
  return report;
}

}  // namespace

Report run_report(const RunConfig& cfg) {
  validate_config(cfg);

  std::vector<EntropicIndex> qs;
  qs.reserve(cfg.q_values.size());
  for (double q : cfg.q_values) qs.emplace_back(q);

  Report report;
  report.q_values = cfg.q_values;
  for (const auto& input : cfg.inputs) {
    try {
      report.series.push_back(analyze_one(cfg, input, qs, report.rows_skipped));
    } catch (const Error& e) {
      // Ingest errors already name the file; give the rest the same context.
      std::string message = e.what();
      if (message.find(input.path) == std::string::npos) {
        message = input.path + ": " + message;
      }
      if (!cfg.keep_going) {
        if (e.row()) throw Error(e.code(), message, *e.row());
        throw Error(e.code(), message);
      }
      report.errors.push_back(message);
    }
  }
  return report;
}

namespace {

std::string fixed4(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", value);
  return buf;
}

std::vector<std::string> stat_row_names(const Report& report) {
  std::vector<std::string> names = {"Mean",     "Median",      "Maximum",
                                    "Minimum",  "Skewness",    "Kurtosis",
                                    "Jarque-Bera", "Probability", "Std. Dev.",
                                    "RSD (%)",  "Shannon"};
  for (double q : report.q_values) {
    names.push_back("Tsallis (q=" + detail::format_double(q) + ")");
  }
  return names;
}

std::string stat_cell(const SeriesReport& s, std::size_t row,
                      const std::vector<double>& q_values) {
  switch (row) {
    case 0: return fixed4(s.stats.mean);
    case 1: return fixed4(s.stats.median);
    case 2: return fixed4(s.stats.maximum);
    case 3: return fixed4(s.stats.minimum);
    case 4: return fixed4(s.stats.skewness);
    case 5: return fixed4(s.stats.kurtosis);
    case 6: return fixed4(s.stats.jarque_bera);
    case 7: return fixed4(s.stats.jb_p_value);
    case 8: return fixed4(s.dispersion.std_dev);
    case 9: return s.dispersion.rsd ? fixed4(*s.dispersion.rsd) : "n/a";
    case 10: return fixed4(s.shannon);
    default: {
      const double q = q_values[row - 11];
      for (const auto& [tq, value] : s.tsallis) {
        if (tq == q) return fixed4(value);
      }
      return "n/a";  // unreachable for reports built by run_report
    }
  }
}

}  // namespace

std::string render_table(const Report& report) {
  const auto rows = stat_row_names(report);
  const std::size_t n_cols = report.series.size() + 1;

  // Assemble all cells first, then size the columns to fit.
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{"Statistic"};
  for (const auto& s : report.series) header.push_back(s.label);
  grid.push_back(header);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<std::string> line{rows[r]};
    for (const auto& s : report.series) {
      line.push_back(stat_cell(s, r, report.q_values));
    }
    grid.push_back(line);
  }

  std::vector<std::size_t> widths(n_cols, 0);
  for (const auto& line : grid) {
    for (std::size_t c = 0; c < n_cols; ++c) {
      widths[c] = std::max(widths[c], line[c].size());
    }
  }

  std::ostringstream out;
  for (std::size_t l = 0; l < grid.size(); ++l) {
    const auto& line = grid[l];
    for (std::size_t c = 0; c < n_cols; ++c) {
      if (c == 0) {
        out << line[c] << std::string(widths[c] - line[c].size(), ' ');
      } else {
        out << "  " << std::string(widths[c] - line[c].size(), ' ') << line[c];
      }
    }
    out << '\n';
    if (l == 0) {
      std::size_t total = widths[0];
      for (std::size_t c = 1; c < n_cols; ++c) total += widths[c] + 2;
      out << std::string(total, '-') << '\n';
    }
  }
  return out.str();
}

std::string render_csv(const Report& report) {
  std::ostringstream out;
  out << "label,n,mean,median,maximum,minimum,skewness,kurtosis,jarque_bera,"
         "jb_p_value,std_dev,rsd,shannon";
  for (double q : report.q_values) {
    out << ",tsallis_" << detail::format_double(q);
  }
  out << '\n';

  for (const auto& s : report.series) {
    out << s.label << ',' << s.stats.n << ',' << detail::format_double(s.stats.mean)
        << ',' << detail::format_double(s.stats.median) << ','
        << detail::format_double(s.stats.maximum) << ','
        << detail::format_double(s.stats.minimum) << ','
        << detail::format_double(s.stats.skewness) << ','
        << detail::format_double(s.stats.kurtosis) << ','
        << detail::format_double(s.stats.jarque_bera) << ','
        << detail::format_double(s.stats.jb_p_value) << ','
        << detail::format_double(s.dispersion.std_dev) << ',';
    if (s.dispersion.rsd) out << detail::format_double(*s.dispersion.rsd);
    out << ',' << detail::format_double(s.shannon);
    for (const auto& [q, value] : s.tsallis) {
      (void)q;
      out << ',' << detail::format_double(value);
    }
    out << '\n';
  }
  return out.str();
}

std::string render_json(const Report& report) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& s : report.series) {
    nlohmann::ordered_json entry;
    entry["label"] = s.label;
    entry["stats"] = {{"n", s.stats.n},
                      {"mean", s.stats.mean},
                      {"median", s.stats.median},
                      {"maximum", s.stats.maximum},
                      {"minimum", s.stats.minimum},
                      {"skewness", s.stats.skewness},
                      {"kurtosis", s.stats.kurtosis},
                      {"jarque_bera", s.stats.jarque_bera},
                      {"jb_p_value", s.stats.jb_p_value}};
    entry["dispersion"] = {{"std_dev", s.dispersion.std_dev},
                           {"rsd", s.dispersion.rsd ? nlohmann::ordered_json(*s.dispersion.rsd)
                                                    : nlohmann::ordered_json(nullptr)}};
    nlohmann::ordered_json tsallis = nlohmann::ordered_json::object();
    for (const auto& [q, value] : s.tsallis) {
      tsallis[detail::format_double(q)] = value;
    }
    entry["entropy"] = {{"shannon", s.shannon}, {"tsallis", tsallis}};
    doc.push_back(entry);
  }
  return doc.dump(2) + "\n";
}

std::string render(const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Table: return render_table(report);
    case OutputFormat::Csv: return render_csv(report);
    case OutputFormat::Json: return render_json(report);
  }
  return {};
}

std::string format_full(double value) { return detail::format_double(value); }

}  // namespace entrovol
