#include "dtq/expression.hpp"

#include <cctype>

#include "dtq/error.hpp"

namespace dtq {

bool operator==(const Expression& lhs, const Expression& rhs) {
  return lhs.kind == rhs.kind && lhs.number == rhs.number && lhs.generator == rhs.generator &&
         lhs.exponent == rhs.exponent && lhs.children == rhs.children && lhs.signs == rhs.signs;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Algebra* algebra) : text_(text), algebra_(algebra) {}

  Expression parse() {
    Expression e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  Exponent signed_integer() {
    bool parenthesised = accept('(');
    bool negative = accept('-');
    std::string d = digits();
    if (parenthesised) expect(')');
    Exponent value = 0;
    try {
      value = std::stoll(d);
    } catch (const std::out_of_range&) {
      throw Error(ErrorKind::ExponentOverflow, "exponent " + d + " does not fit 64 bits");
    }
    return negative ? -value : value;
  }

  Expression expr() {
    Expression sum;
    sum.kind = Expression::Kind::Sum;
    sum.children.push_back(term());
    sum.signs.push_back(1);
    while (true) {
      if (accept('+')) {
        sum.signs.push_back(1);
      } else if (accept('-')) {
        sum.signs.push_back(-1);
      } else {
        break;
      }
      sum.children.push_back(term());
    }
    if (sum.children.size() == 1) return std::move(sum.children[0]);
    return sum;
  }

  Expression term() {
    Expression product;
    product.kind = Expression::Kind::Product;
    product.children.push_back(unary());
    while (accept('*')) product.children.push_back(unary());
    if (product.children.size() == 1) return std::move(product.children[0]);
    return product;
  }

  Expression unary() {
    if (accept('-')) {
      Expression neg;
      neg.kind = Expression::Kind::Negate;
      neg.children.push_back(unary());
      return neg;
    }
    return factor();
  }

  Expression factor() {
    skip();
    std::size_t start = pos_;
    Expression base = primary();
    if (!accept('^')) return base;
    Exponent k = signed_integer();
    switch (base.kind) {
      case Expression::Kind::Q:
        base.exponent = k;
        return base;
      case Expression::Kind::Generator:
        if (k < 0 && !inverse_letter(base.generator)) {
          throw Error(ErrorKind::NegativePower, std::string(gen_name(base.generator)) +
                                                    " is not invertible (position " + std::to_string(start) + ")");
        }
        base.exponent = k;
        return base;
      default: {
        if (k < 0) throw Error(ErrorKind::NegativePower, "negative power of a compound expression");
        Expression power;
        power.kind = Expression::Kind::Power;
        power.exponent = k;
        power.children.push_back(std::move(base));
        return power;
      }
    }
  }

  Expression primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expression inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Expression number;
      number.kind = Expression::Kind::Number;
      std::string numerator = digits();
      std::string denominator = "1";
      if (accept('/')) denominator = digits();
      if (denominator.find_first_not_of('0') == std::string::npos) fail("zero denominator");
      number.number = Rational(numerator + "/" + denominator);
      number.number.canonicalize();
      return number;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "q") {
        Expression e;
        e.kind = Expression::Kind::Q;
        return e;
      }
      auto g = gen_from_name(name);
      if (!g || (algebra_ && !algebra_->has_letter(*g))) {
        throw Error(ErrorKind::UnknownGenerator,
                    "'" + name + "' at position " + std::to_string(start) +
                        (algebra_ ? " is not a generator of " + algebra_->name() : " is not a generator"));
      }
      Expression e;
      e.kind = Expression::Kind::Generator;
      e.generator = *g;
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Algebra* algebra_;
  std::size_t pos_ = 0;
};

bool needs_parens_in_product(const Expression& e) {
  return e.kind == Expression::Kind::Sum || e.kind == Expression::Kind::Negate;
}

}  // namespace

Expression parse_expression(std::string_view text, const Algebra* algebra) { return Parser(text, algebra).parse(); }

std::string print_expression(const Expression& e) {
  switch (e.kind) {
    case Expression::Kind::Number:
      return e.number.get_str();
    case Expression::Kind::Q:
      return e.exponent == 1 ? "q" : "q^" + std::to_string(e.exponent);
    case Expression::Kind::Generator: {
      std::string name(gen_name(e.generator));
      return e.exponent == 1 ? name : name + "^" + std::to_string(e.exponent);
    }
    case Expression::Kind::Power:
      return "(" + print_expression(e.children[0]) + ")^" + std::to_string(e.exponent);
    case Expression::Kind::Product: {
      std::string out;
      for (const auto& child : e.children) {
        if (!out.empty()) out += "*";
        out += needs_parens_in_product(child) ? "(" + print_expression(child) + ")" : print_expression(child);
      }
      return out;
    }
    case Expression::Kind::Sum: {
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        std::string piece = print_expression(e.children[i]);
        if (e.children[i].kind == Expression::Kind::Sum) piece = "(" + piece + ")";
        if (i == 0) {
          out = e.signs[i] < 0 ? "-" + piece : piece;
        } else {
          out += (e.signs[i] < 0 ? " - " : " + ") + piece;
        }
      }
      return out;
    }
    case Expression::Kind::Negate: {
      const Expression& child = e.children[0];
      bool wrap = child.kind == Expression::Kind::Sum;
      return "-" + (wrap ? "(" + print_expression(child) + ")" : print_expression(child));
    }
  }
  return "";
}

Element evaluate(const Expression& e, const AlgebraPtr& algebra) {
  switch (e.kind) {
    case Expression::Kind::Number:
      return Element::scalar(algebra, QScalar(e.number));
    case Expression::Kind::Q:
      return Element::scalar(algebra, QScalar::q_power(e.exponent));
    case Expression::Kind::Generator:
      return Element::from_word(algebra, power_word(e.generator, e.exponent));
    case Expression::Kind::Power:
      return evaluate(e.children[0], algebra).pow(static_cast<int>(e.exponent));
    case Expression::Kind::Product: {
      Element out = evaluate(e.children[0], algebra);
      for (std::size_t i = 1; i < e.children.size(); ++i) out = out * evaluate(e.children[i], algebra);
      return out;
    }
    case Expression::Kind::Sum: {
      Element out(algebra);
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        Element term = evaluate(e.children[i], algebra);
        if (e.signs[i] < 0) {
          out -= term;
        } else {
          out += term;
        }
      }
      return out;
    }
    case Expression::Kind::Negate:
      return -evaluate(e.children[0], algebra);
  }
  return Element(algebra);
}

Element parse_element(std::string_view text, const AlgebraPtr& algebra) {
  return evaluate(parse_expression(text, algebra.get()), algebra);
}

}  // namespace dtq
