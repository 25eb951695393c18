#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "charp/charp.hpp"

namespace charp::cli {

/// Session file problem, located by 1-based line and column.
class SessionError : public Error {
 public:
  SessionError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Named rings, ideals, polynomials and minimal-prime lists. Ideals and
/// polynomials live in the ring declared most recently before them.
struct Session {
  std::map<std::string, RingPtr> rings;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, Polynomial> polys;
  std::map<std::string, std::vector<Ideal>> minprimes;
  /// Last declared ring, used for expressions given on the command line.
  RingPtr current_ring;
  std::string current_ring_name;

  bool empty() const noexcept {
    return rings.empty() && ideals.empty() && polys.empty() && minprimes.empty();
  }
};

Session parse_session(std::string_view text);
Session load_session(const std::filesystem::path& path);

/// `F INT [ VAR {, VAR} ] [order (lex|grevlex)]`, the right-hand side of a ring statement.
RingPtr parse_ring_spec(std::string_view text);

}  // namespace charp::cli
