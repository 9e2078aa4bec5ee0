#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qlogic::cli {

inline constexpr std::string_view kToolName = "qlogic";
inline constexpr std::string_view kVersion = "0.1.0";

enum ExitCode : int { kHolds = 0, kFails = 1, kInvalidInput = 2, kAborted = 3 };

/// Runs one command; `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Splits a --parts list on top-level commas, so "{1},{2}" gives two labels.
std::vector<std::string> split_labels(std::string_view csv);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

}  // namespace qlogic::cli
