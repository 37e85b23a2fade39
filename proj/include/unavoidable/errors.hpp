#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unavoidable {

// Invalid arguments are reported with std::invalid_argument; the types below
// cover the remaining failure classes.

// A construction would exceed a configured size limit.
class capacity_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

// An exhaustive search ran out of its node budget before deciding.
class search_budget_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computed quantity violated an internal consistency requirement.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace unavoidable
