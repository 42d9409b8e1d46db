// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace entrovol::detail {

/// Shortest decimal string that round-trips to the same double.
inline std::string format_double(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  (void)ec;  // 32 bytes always suffice for shortest form
  return std::string(buf, ptr);
}

}  // namespace entrovol::detail
