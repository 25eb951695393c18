#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "session.hpp"

namespace charp::cli {

using Json = nlohmann::ordered_json;

enum class Status { Ok, Error, Unresolved };

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitError = 2;
inline constexpr int kExitUnresolved = 3;

struct CommandResult {
  std::string command;
  Status status = Status::Ok;
  int exit_code = kExitOk;
  /// Ideals appear as reduced-basis generator strings.
  Json payload = Json::object();
  /// Error text when status is Error.
  std::string message;

  Json to_json() const;
  /// Line-oriented projection of to_json(); one generator per line.
  std::string to_text() const;
};

struct Options {
  std::string command;
  bool json = false;
  std::optional<std::string> session;

  std::optional<std::string> ring, ideal, poly, u, d, r, b, c, by, with, max_ideal;
  unsigned e = 1, k = 1, n = 0, h = 0;
  std::optional<unsigned> p;
  unsigned max_e = 16, level = 6, k_max = 8;
  std::vector<std::string> min_primes, separators, targets, closures;
};

/// Parses argv (without the program name). Throws Error on bad usage.
Options parse_arguments(const std::vector<std::string>& argv);

CommandResult execute(const Session& session, const Options& options);

/// parse_arguments + execute; every failure becomes a result with status Error.
CommandResult run_command(const Session& session, const std::vector<std::string>& argv);

std::string usage();

}  // namespace charp::cli
