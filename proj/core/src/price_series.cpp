// SPDX-License-Identifier: Apache-2.0
#include "entrovol/price_series.hpp"

#include <cctype>
#include <cstdio>

#include "entrovol/error.hpp"

namespace entrovol {

namespace {

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return !s.empty();
}

}  // namespace

std::optional<Date> parse_date(std::string_view text) {
  // Strict YYYY-MM-DD: fixed widths, no whitespace, no signs.
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  const auto y = text.substr(0, 4);
  const auto m = text.substr(5, 2);
  const auto d = text.substr(8, 2);
  if (!all_digits(y) || !all_digits(m) || !all_digits(d)) return std::nullopt;

  auto to_int = [](std::string_view s) {
    int v = 0;
    for (char c : s) v = v * 10 + (c - '0');
    return v;
  };
  const Date date{std::chrono::year{to_int(y)}, std::chrono::month{unsigned(to_int(m))},
                  std::chrono::day{unsigned(to_int(d))}};
  if (!date.ok()) return std::nullopt;
  return date;
}

std::string format_date(Date date) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", int(date.year()),
                unsigned(date.month()), unsigned(date.day()));
  return buf;
}

PriceSeries::PriceSeries(std::string label, std::vector<Observation> observations)
    : label_(std::move(label)), observations_(std::move(observations)) {
  if (observations_.size() < 2) {
    throw Error(ErrorCode::TooFewRows,
                "price series needs at least 2 observations, got " +
                    std::to_string(observations_.size()));
  }
  for (std::size_t i = 0; i < observations_.size(); ++i) {
    const auto& obs = observations_[i];
    if (!(obs.close > 0.0)) {
      throw Error(ErrorCode::NonPositivePrice,
                  "non-positive close " + std::to_string(obs.close) + " on " +
                      format_date(obs.date));
    }
    if (i > 0) {
      const auto prev = observations_[i - 1].date;
      if (obs.date == prev) {
        throw Error(ErrorCode::DuplicateDate, "duplicate date " + format_date(obs.date));
      }
      if (std::chrono::sys_days(obs.date) < std::chrono::sys_days(prev)) {
        throw Error(ErrorCode::InvalidArgument,
                    "observations not sorted by date at " + format_date(obs.date));
      }
    }
  }
}

}  // namespace entrovol
