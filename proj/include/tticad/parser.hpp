#pragma once

// Text input: polynomial expressions and problem files.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tticad/polynomial.hpp"

namespace tticad {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses an expression over the given variable names (names[i] is x_{i+1}).
/// Division is allowed only by nonzero constants.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names,
                            int line = 1);

enum class Relation { Eq, Neq, Lt, Le, Gt, Ge };

struct RawConstraint {
  Polynomial lhs;  // constraint is lhs REL 0
  Relation rel;
};

/// Parses "a = b", "a < b" etc. into lhs - rhs REL 0.
RawConstraint parse_relation(const std::string& text, const std::vector<std::string>& names,
                             int line = 1);

enum class Mode { Tti, Sign };

struct Problem {
  std::vector<std::string> variables;  // lowest first
  std::vector<std::vector<RawConstraint>> systems;
  std::vector<std::string> system_text;
  Mode mode = Mode::Tti;
  std::optional<std::string> order;
};

/// Problem file format:
///   # comment
///   variables: x, y        (lowest variable first)
///   mode: tti | sign
///   order: 2,1[2,1]
///   system: x^2 + y^2 = 4 && (x-3)^2 < y + 3
Problem parse_problem(const std::string& text);

}  // namespace tticad
