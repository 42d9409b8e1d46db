// SPDX-License-Identifier: Apache-2.0
//
// entrovol — measures stock-index volatility from closing-price CSVs two
// ways: linear dispersion (standard deviation, RSD) and information
// dispersion (Shannon and Tsallis entropy over equidistant-cell
// histograms).

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entrovol/entropy.hpp"
#include "entrovol/error.hpp"
#include "entrovol/ingest.hpp"
#include "entrovol/report.hpp"
#include "entrovol/synthetic.hpp"

namespace {

std::string label_from_path(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

bool parse_q_list(const std::string& text, std::vector<double>& out) {
  out.clear();
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece =
        text.substr(start, comma == std::string::npos ? comma : comma - start);
    try {
      std::size_t used = 0;
      out.push_back(std::stod(piece, &used));
      if (used != piece.size()) return false;
    } catch (const std::exception&) {
      return false;
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return !out.empty();
}

int run_report_command(const std::vector<std::string>& files, entrovol::RunConfig cfg,
                       const std::string& q_text, const std::string& range_text,
                       const std::string& format_text) {
  for (const auto& file : files) {
    cfg.inputs.push_back({label_from_path(file), file});
  }

  if (!q_text.empty() && !parse_q_list(q_text, cfg.q_values)) {
    std::cerr << "error: --q expects a comma-separated list of reals, got \"" << q_text
              << "\"\n";
    return 2;
  }

  if (!range_text.empty()) {
    const auto colon = range_text.find(':');
    double lo = 0, hi = 0;
    try {
      std::size_t lo_end = 0, hi_end = 0;
      lo = std::stod(range_text.substr(0, colon), &lo_end);
      hi = std::stod(range_text.substr(colon + 1), &hi_end);
      if (colon == std::string::npos || lo_end != colon ||
          hi_end != range_text.size() - colon - 1) {
        throw std::invalid_argument(range_text);
      }
    } catch (const std::exception&) {
      std::cerr << "error: --range expects lo:hi, got \"" << range_text << "\"\n";
      return 2;
    }
    cfg.range = entrovol::HistogramSpec::Range{lo, hi};
  }

  if (format_text == "table") {
    cfg.format = entrovol::OutputFormat::Table;
  } else if (format_text == "csv") {
    cfg.format = entrovol::OutputFormat::Csv;
  } else {
    cfg.format = entrovol::OutputFormat::Json;
  }

  for (double q : cfg.q_values) {
    try {
      if (entrovol::EntropicIndex index(q); !index.finite_variance_range()) {
        std::cerr << "note: q=" << q
                  << " lies outside [1, 5/3), the finite-variance range\n";
      }
    } catch (const entrovol::Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 2;
    }
  }

  try {
    const entrovol::Report report = entrovol::run_report(cfg);
    if (report.rows_skipped > 0) {
      std::cerr << "warning: skipped " << report.rows_skipped << " bad row(s)\n";
    }
    for (const auto& message : report.errors) {
      std::cerr << "error: " << message << '\n';
    }
    if (report.errors.empty() || cfg.keep_going) {
      std::cout << entrovol::render(report, cfg.format);
    }
    return report.errors.empty() ? 0 : 1;
  } catch (const entrovol::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

int run_gen_synthetic(const entrovol::SyntheticSpec& spec, const std::string& out_path) {
  try {
    const entrovol::PriceSeries series = entrovol::synthetic_price_series(spec);
    entrovol::save_csv(series, out_path);
    std::cerr << "wrote " << series.size() << " rows to " << out_path << '\n';
    return 0;
  } catch (const entrovol::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Stock-index volatility: linear dispersion and entropy from price CSVs"};
  app.require_subcommand(1);

  // ---- report ----
  auto* report_cmd = app.add_subcommand(
      "report", "Analyze one or more CSV price files and print a report");
  std::vector<std::string> files;
  entrovol::RunConfig cfg;
  std::string q_text;
  std::string range_text;
  std::string format_text = "table";
  std::size_t bins = 0;
  report_cmd->add_option("files", files, "CSV files with date and close columns")
      ->required()
      ->check(CLI::ExistingFile);
  report_cmd->add_option(
      "--q", q_text, "Comma-separated entropic indices (default 1.4,1.45,1.5)");
  report_cmd
      ->add_option("--bins", bins,
                   "Histogram cells; default ceil(sqrt(#returns)) per series")
      ->check(CLI::PositiveNumber);
  report_cmd->add_option("--range", range_text,
                         "Common histogram range lo:hi (default per-series min..max)");
  report_cmd->add_option("--format", format_text, "Output format (default table)")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  report_cmd->add_flag("--skip-bad-rows", cfg.skip_bad_rows,
                       "Drop unparsable or non-positive rows instead of failing");
  report_cmd->add_flag("--keep-going", cfg.keep_going,
                       "Emit partial results when some inputs fail");

  // ---- gen-synthetic ----
  auto* gen_cmd = app.add_subcommand(
      "gen-synthetic", "Write a seeded Gaussian-random-walk price CSV");
  entrovol::SyntheticSpec spec;
  std::string out_path;
  std::string start_date_text;
  gen_cmd->add_option("--out", out_path, "Output CSV path")->required();
  gen_cmd->add_option("--label", spec.label, "Series label (default: synthetic)");
  gen_cmd->add_option("--rows", spec.observations, "Number of price rows (default 1000)");
  gen_cmd->add_option("--seed", spec.seed, "RNG seed (default 1)");
  gen_cmd->add_option("--volatility", spec.volatility,
                      "Daily log-return std dev (default 0.01)");
  gen_cmd->add_option("--drift", spec.drift, "Daily log-return mean (default 0)");
  gen_cmd->add_option("--start-price", spec.start_price, "First close (default 100)");
  gen_cmd->add_option("--start-date", start_date_text,
                      "First date, YYYY-MM-DD (default 2000-01-03)");

  CLI11_PARSE(app, argc, argv);

  if (report_cmd->parsed()) {
    if (bins > 0) cfg.bins = bins;
    return run_report_command(files, std::move(cfg), q_text, range_text, format_text);
  }

  if (!start_date_text.empty()) {
    const auto date = entrovol::parse_date(start_date_text);
    if (!date) {
      std::cerr << "error: --start-date expects YYYY-MM-DD, got \"" << start_date_text
                << "\"\n";
      return 2;
    }
    spec.start_date = *date;
  }
  return run_gen_synthetic(spec, out_path);
}
