#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace leemodel::cli {

// Exit statuses of the leemodel executable.
enum Exit : int { kOk = 0, kVerifyFailed = 1, kConfigError = 2, kNumericalError = 3 };

struct Options {
  std::filesystem::path config;
  std::optional<std::filesystem::path> out;
  std::optional<double> tol;
};

int cmd_sigma(const Options& opt);
int cmd_boundstate(const Options& opt);
int cmd_verify(const Options& opt);
int cmd_limit_study(const Options& opt);

/// Parses the command line and dispatches. Never throws.
int run(int argc, char** argv);

}  // namespace leemodel::cli
