#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wedgelab/polynomial.hpp"

namespace wedgelab {

/// Syntax or lookup failure while parsing polynomial text.  position is the
/// 1-based character offset of the offending token.
class parse_error : public std::runtime_error {
  public:
    parse_error(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

/// The set of variables a parse is allowed to mention.
class VariableTable {
  public:
    VariableTable() = default;
    explicit VariableTable(const std::vector<Variable>& vars)
        : vars_(vars.begin(), vars.end()) {}

    void add(const Variable& v) { vars_.insert(v); }
    bool contains(const Variable& v) const { return vars_.count(v) > 0; }
    const std::set<Variable>& variables() const { return vars_; }

  private:
    std::set<Variable> vars_;
};

/// Grammar: sums/differences of products of powers; atoms are integer or
/// rational literals (`7`, `3/4`), variable names (`x`, `x_(2)`, `x_(1,0)`),
/// and parenthesized subexpressions.  Whitespace-insensitive.  The printed
/// form of any Polynomial parses back to the same canonical value.
Polynomial parse_polynomial(std::string_view text, const VariableTable& table);

}  // namespace wedgelab
