// SPDX-License-Identifier: Apache-2.0
//
// Minimal process runner for CLI integration tests.
#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace testutil {

struct ExecResult {
  int exit_code;
  std::string out;
  std::string err;
};

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::filesystem::path scratch_dir() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() /
             ("entrovol_tests_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

inline std::filesystem::path scratch_file(const std::string& name) {
  static std::atomic<int> counter{0};
  return scratch_dir() / (std::to_string(counter++) + "_" + name);
}

/// Runs `command` through the shell, capturing stdout/stderr separately.
inline ExecResult run_command(const std::string& command) {
  const auto out_path = scratch_file("stdout.txt");
  const auto err_path = scratch_file("stderr.txt");
  const std::string full =
      command + " > " + out_path.string() + " 2> " + err_path.string();
  const int status = std::system(full.c_str());
  ExecResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = read_file(out_path);
  result.err = read_file(err_path);
  return result;
}

/// Path of the entrovol binary under test, provided by ctest.
inline std::string cli_path() {
  const char* path = std::getenv("ENTROVOL_CLI");
  if (!path) throw std::runtime_error("ENTROVOL_CLI not set");
  return path;
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

}  // namespace testutil
