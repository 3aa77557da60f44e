#pragma once

#include <string>

#include "cqg/experiments.hpp"

namespace cqg::cli {

/// Exit codes: 0 every contract held, 1 contract failure, 2 usage error.
int run(int argc, char** argv);

/// Copy of `doc` without "elapsed_ms" keys (at any depth) or "content_hash".
Json strip_timing(const Json& doc);

/// Hex SHA-256 of strip_timing(doc).dump().
std::string content_hash(const Json& doc);

std::string to_csv(const Json& records);

}  // namespace cqg::cli
