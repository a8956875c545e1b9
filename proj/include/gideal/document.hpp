#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gideal/error.hpp"
#include "gideal/monomial_ideal.hpp"

namespace gideal {

/// Syntax or name-resolution failure at a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct NamedIdeal {
  std::string name;
  MonomialIdeal ideal;
  bool operator==(const NamedIdeal&) const = default;
};

/// A ring declaration followed by named ideals over it. The order of the
/// variable names fixes coordinate indexing: variable k omits from P<k>.
class IdealDocument {
 public:
  IdealDocument(std::vector<std::string> vars, std::vector<NamedIdeal> ideals);

  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<NamedIdeal>& ideals() const { return ideals_; }
  /// Throws Error if no ideal has that name.
  const MonomialIdeal& ideal(std::string_view name) const;

  bool operator==(const IdealDocument&) const = default;

 private:
  std::vector<std::string> vars_;
  std::vector<NamedIdeal> ideals_;
};

/// Grammar:
///   ring <n> vars <name>(, <name>)*;
///   ideal <name> = <mono>(, <mono>)*;   (one or more)
/// where <mono> is `1`, `0` (alone: the zero ideal) or a `*`-separated
/// product of `var` / `var^exp`. Whitespace is free and `#` starts a comment.
IdealDocument parse_document(std::string_view text);

/// Canonical text: one statement per line, generators in canonical order.
std::string format_document(const IdealDocument& doc);

/// Parses a bare generator list such as "x^2*y, z" over the given names.
MonomialIdeal parse_ideal(std::string_view generators, const std::vector<std::string>& names);

}  // namespace gideal
