#include "sunit/expr.hpp"

#include <cctype>

#include "sunit/error.hpp"

namespace sunit {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Field& field, std::int64_t bound)
      : text_(text), field_(field), bound_(bound) {}

  ExprPtr parse() {
    skip();
    if (pos_ == text_.size()) error("empty expression");
    ExprPtr e = expr();
    skip();
    if (pos_ != text_.size()) error(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::SyntaxError, "syntax error at position " + std::to_string(pos_) + ": " + what);
  }

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

  static ExprPtr node(Expr::Kind k, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->args = std::move(args);
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      if (accept('+'))
        lhs = node(Expr::Kind::Add, {lhs, term()});
      else if (accept('-'))
        lhs = node(Expr::Kind::Sub, {lhs, term()});
      else
        return lhs;
    }
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    for (;;) {
      if (accept('*'))
        lhs = node(Expr::Kind::Mul, {lhs, unary()});
      else if (accept('/'))
        lhs = node(Expr::Kind::Div, {lhs, unary()});
      else
        return lhs;
    }
  }

  ExprPtr unary() {
    if (accept('-')) return node(Expr::Kind::Neg, {unary()});
    return factor();
  }

  ExprPtr factor() {
    ExprPtr base = atom();
    if (!accept('^')) return base;
    skip();
    const bool negative = accept('-');
    skip();
    if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) error("expected an integer exponent");
    std::int64_t e = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      e = e * 10 + (text_[pos_++] - '0');
      if (e > bound_) fail(ErrorKind::Overflow, "exponent exceeds the bound " + std::to_string(bound_));
    }
    skip();
    if (pos_ < text_.size() && text_[pos_] == '^') error("chained '^' needs parentheses");
    auto p = std::make_shared<Expr>();
    p->kind = Expr::Kind::Pow;
    p->exponent = negative ? -e : e;
    p->args = {base};
    return p;
  }

  ExprPtr atom() {
    skip();
    if (pos_ == text_.size()) error("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      if (!accept(')')) error("expected ')'");
      return e;
    }
    if (c == 'T') {
      ++pos_;
      return node(Expr::Kind::Variable, {});
    }
    if (c == 'a') {
      if (field_.s() == 1) error("'a' names the generator of a non-prime field");
      ++pos_;
      return node(Expr::Kind::Generator, {});
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        v = (v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0')) % field_.p();
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Constant;
      e->value = static_cast<Field::Elem>(v);
      return e;
    }
    error(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const Field& field_;
  std::int64_t bound_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(std::string_view text, const Field& field, std::int64_t exponent_bound) {
  return Parser(text, field, exponent_bound).parse();
}

RatFunc eval_expr(const Expr& e, const Field& field) {
  switch (e.kind) {
    case Expr::Kind::Constant: return RatFunc::constant(field, e.value);
    case Expr::Kind::Variable: return RatFunc::variable(field);
    case Expr::Kind::Generator: return RatFunc::constant(field, field.generator());
    case Expr::Kind::Add: return eval_expr(*e.args[0], field) + eval_expr(*e.args[1], field);
    case Expr::Kind::Sub: return eval_expr(*e.args[0], field) - eval_expr(*e.args[1], field);
    case Expr::Kind::Mul: return eval_expr(*e.args[0], field) * eval_expr(*e.args[1], field);
    case Expr::Kind::Div: {
      const RatFunc d = eval_expr(*e.args[1], field);
      if (d.is_zero()) fail(ErrorKind::DivisionByZero, "division by a zero subexpression");
      return eval_expr(*e.args[0], field) / d;
    }
    case Expr::Kind::Neg: return -eval_expr(*e.args[0], field);
    case Expr::Kind::Pow: {
      const RatFunc b = eval_expr(*e.args[0], field);
      if (b.is_zero() && e.exponent < 0) fail(ErrorKind::DivisionByZero, "negative power of zero");
      return b.pow(e.exponent);
    }
  }
  fail(ErrorKind::InternalInconsistency, "unknown expression node");
}

std::string print_expr(const RatFunc& x) { return x.to_string(); }

std::string describe(const Expr& e) {
  auto bin = [&](const char* name) { return std::string(name) + "(" + describe(*e.args[0]) + "," + describe(*e.args[1]) + ")"; };
  switch (e.kind) {
    case Expr::Kind::Constant: return std::to_string(e.value);
    case Expr::Kind::Variable: return "T";
    case Expr::Kind::Generator: return "a";
    case Expr::Kind::Add: return bin("add");
    case Expr::Kind::Sub: return bin("sub");
    case Expr::Kind::Mul: return bin("mul");
    case Expr::Kind::Div: return bin("div");
    case Expr::Kind::Neg: return "neg(" + describe(*e.args[0]) + ")";
    case Expr::Kind::Pow: return "pow(" + describe(*e.args[0]) + "," + std::to_string(e.exponent) + ")";
  }
  return "?";
}

RatFunc parse_value(std::string_view text, const Field& field) { return eval_expr(*parse_expr(text, field), field); }

std::vector<RatFunc> parse_value_list(std::string_view text, const Field& field) {
  std::vector<RatFunc> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.push_back(parse_value(text.substr(start, i - start), field));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace sunit
