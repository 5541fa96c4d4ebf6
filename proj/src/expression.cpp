// Copyright 2026 The torusinv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "torusinv/expression.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace torusinv {

namespace {

struct Token {
  enum class Type { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

  Type type;
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    const std::size_t column = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
        ++j;
      tokens.push_back({Token::Type::Number, std::string(src.substr(i, j - i)), column});
      i = j;
      continue;
    }
    if (c == 'X' || c == 'Y' || c == 'n') {
      tokens.push_back({Token::Type::Ident, std::string(1, c), column});
      ++i;
      continue;
    }
    Token::Type type;
    switch (c) {
      case '+': type = Token::Type::Plus; break;
      case '-': type = Token::Type::Minus; break;
      case '*': type = Token::Type::Star; break;
      case '/': type = Token::Type::Slash; break;
      case '^': type = Token::Type::Caret; break;
      case '(': type = Token::Type::LParen; break;
      case ')': type = Token::Type::RParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", column);
    }
    tokens.push_back({type, std::string(1, c), column});
    ++i;
  }
  tokens.push_back({Token::Type::End, "", src.size() + 1});
  return tokens;
}

using NodePtr = std::unique_ptr<Expression>;

NodePtr make_constant(Rational value) {
  auto node = std::make_unique<Expression>();
  node->kind = Expression::Kind::Constant;
  node->value = std::move(value);
  return node;
}

NodePtr make_variable(char name) {
  auto node = std::make_unique<Expression>();
  node->kind = Expression::Kind::Variable;
  node->variable = name;
  return node;
}

NodePtr make_unary(Expression::Kind kind, NodePtr operand) {
  auto node = std::make_unique<Expression>();
  node->kind = kind;
  node->lhs = std::move(operand);
  return node;
}

NodePtr make_binary(Expression::Kind kind, NodePtr lhs, NodePtr rhs) {
  auto node = std::make_unique<Expression>();
  node->kind = kind;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return node;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ParsedExpression parse() {
    ParsedExpression out;
    out.root = parse_expr();
    if (peek().type != Token::Type::End)
      throw ParseError("unexpected trailing input", peek().column);
    out.uses_xy = uses_xy_;
    out.uses_n = uses_n_;
    return out;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool accept(Token::Type type) {
    if (peek().type != type) return false;
    ++pos_;
    return true;
  }

  NodePtr parse_expr() {
    NodePtr node = parse_term();
    while (true) {
      if (accept(Token::Type::Plus))
        node = make_binary(Expression::Kind::Add, std::move(node), parse_term());
      else if (accept(Token::Type::Minus))
        node = make_binary(Expression::Kind::Subtract, std::move(node), parse_term());
      else
        return node;
    }
  }

  NodePtr parse_term() {
    NodePtr node = parse_factor();
    while (accept(Token::Type::Star))
      node = make_binary(Expression::Kind::Multiply, std::move(node), parse_factor());
    return node;
  }

  NodePtr parse_factor() {
    NodePtr node = parse_atom();
    if (accept(Token::Type::Caret)) {
      const Token& exp = peek();
      if (exp.type != Token::Type::Number)
        throw ParseError("expected a nonnegative integer exponent", exp.column);
      advance();
      unsigned long value = 0;
      try {
        value = std::stoul(exp.text);
      } catch (const std::out_of_range&) {
        throw ParseError("exponent out of range", exp.column);
      }
      auto power = make_unary(Expression::Kind::Power, std::move(node));
      power->exponent = static_cast<unsigned>(value);
      node = std::move(power);
    }
    return node;
  }

  NodePtr parse_atom() {
    const Token& tok = peek();
    switch (tok.type) {
      case Token::Type::Number: {
        advance();
        const Integer numerator(tok.text);
        if (accept(Token::Type::Slash)) {
          const Token& den = peek();
          if (den.type != Token::Type::Number)
            throw ParseError("expected an integer denominator", den.column);
          advance();
          const Integer denominator(den.text);
          if (denominator == 0)
            throw ParseError("zero denominator in rational literal", den.column);
          return make_constant(Rational(numerator, denominator));
        }
        return make_constant(Rational(numerator));
      }
      case Token::Type::Ident: {
        advance();
        const char name = tok.text[0];
        if (name == 'n') {
          if (uses_xy_)
            throw ParseError("expression mixes X,Y with n", tok.column);
          uses_n_ = true;
        } else {
          if (uses_n_)
            throw ParseError("expression mixes X,Y with n", tok.column);
          uses_xy_ = true;
        }
        return make_variable(name);
      }
      case Token::Type::LParen: {
        advance();
        NodePtr inner = parse_expr();
        if (!accept(Token::Type::RParen))
          throw ParseError("expected ')'", peek().column);
        return inner;
      }
      case Token::Type::Minus: {
        advance();
        return make_unary(Expression::Kind::Negate, parse_atom());
      }
      default:
        throw ParseError("expected a value", tok.column);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  bool uses_xy_ = false;
  bool uses_n_ = false;
};

}  // namespace

ParsedExpression parse_expression(std::string_view source) {
  return Parser(tokenize(source)).parse();
}

RawBivariate to_bivariate(const Expression& expr) {
  switch (expr.kind) {
    case Expression::Kind::Constant:
      return RawBivariate::constant(expr.value);
    case Expression::Kind::Variable:
      if (expr.variable == 'X') return RawBivariate::x();
      if (expr.variable == 'Y') return RawBivariate::y();
      throw std::logic_error("n inside an X,Y expression");
    case Expression::Kind::Add:
      return to_bivariate(*expr.lhs) + to_bivariate(*expr.rhs);
    case Expression::Kind::Subtract:
      return to_bivariate(*expr.lhs) - to_bivariate(*expr.rhs);
    case Expression::Kind::Multiply:
      return to_bivariate(*expr.lhs) * to_bivariate(*expr.rhs);
    case Expression::Kind::Power:
      return pow(to_bivariate(*expr.lhs), expr.exponent);
    case Expression::Kind::Negate:
      return -to_bivariate(*expr.lhs);
  }
  throw std::logic_error("unreachable expression kind");
}

UniPoly to_function_poly(const Expression& expr) {
  switch (expr.kind) {
    case Expression::Kind::Constant:
      return UniPoly::constant(Var::N, expr.value);
    case Expression::Kind::Variable:
      if (expr.variable == 'n') return UniPoly::variable(Var::N);
      throw std::logic_error("X or Y inside an n expression");
    case Expression::Kind::Add:
      return to_function_poly(*expr.lhs) + to_function_poly(*expr.rhs);
    case Expression::Kind::Subtract:
      return to_function_poly(*expr.lhs) - to_function_poly(*expr.rhs);
    case Expression::Kind::Multiply:
      return to_function_poly(*expr.lhs) * to_function_poly(*expr.rhs);
    case Expression::Kind::Power:
      return pow(to_function_poly(*expr.lhs), expr.exponent);
    case Expression::Kind::Negate:
      return -to_function_poly(*expr.lhs);
  }
  throw std::logic_error("unreachable expression kind");
}

}  // namespace torusinv
