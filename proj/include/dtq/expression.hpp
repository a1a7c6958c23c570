#pragma once

// Textual expressions over the generator alphabet:
//   expr   := term (('+'|'-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | factor
//   factor := primary ('^' int)?
//   primary:= integer ('/' integer)? | 'q' | generator | '(' expr ')'

#include <string>
#include <string_view>
#include <vector>

#include "dtq/algebra.hpp"

namespace dtq {

struct Expression {
  enum class Kind { Number, Q, Generator, Power, Product, Sum, Negate };

  Kind kind = Kind::Number;
  Rational number;          // Number
  Gen generator = Gen::a;   // Generator
  Exponent exponent = 1;    // Q, Generator, Power
  std::vector<Expression> children;
  std::vector<int> signs;   // Sum: +1 / -1 per child

  friend bool operator==(const Expression& lhs, const Expression& rhs);
};

/// Parses `text`; when `algebra` is given, generator names are checked
/// against it (UnknownGenerator) and negative powers against invertibility.
Expression parse_expression(std::string_view text, const Algebra* algebra = nullptr);
std::string print_expression(const Expression& e);
Element evaluate(const Expression& e, const AlgebraPtr& algebra);
Element parse_element(std::string_view text, const AlgebraPtr& algebra);

}  // namespace dtq
