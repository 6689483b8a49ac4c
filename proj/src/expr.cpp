// Copyright 2026 The hetsim authors
// SPDX-License-Identifier: Apache-2.0

#include "hetsim/expr.hpp"

#include <cctype>
#include <limits>

#include "hetsim/errors.hpp"

namespace hetsim {

namespace {

// Recursive-descent evaluator. When `params` is null only syntax is checked
// and identifiers evaluate to 1.
class Parser {
 public:
  Parser(std::string_view text, const ParamMap* params) : text_(text), params_(params) {}

  long long run() {
    long long v = expr();
    skip_ws();
    if (pos_ != text_.size()) syntax_error("trailing input");
    return v;
  }

 private:
  [[noreturn]] void syntax_error(const std::string& what) {
    fail(Errc::malformed_spec, "expression '" + std::string(text_) + "': " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  long long checked(__int128 v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min()) {
      fail(Errc::numeric_overflow, "expression value out of range");
    }
    return static_cast<long long>(v);
  }

  long long expr() {
    long long v = term();
    for (;;) {
      if (eat('+')) {
        v = checked(static_cast<__int128>(v) + term());
      } else if (eat('-')) {
        v = checked(static_cast<__int128>(v) - term());
      } else {
        return v;
      }
    }
  }

  long long term() {
    long long v = factor();
    for (;;) {
      if (eat('*')) {
        v = checked(static_cast<__int128>(v) * factor());
      } else if (eat('/')) {
        long long d = factor();
        if (d == 0) fail(Errc::division_by_zero, "expression '" + std::string(text_) + "'");
        if (v % d != 0) {
          fail(Errc::inexact_division,
               "expression '" + std::string(text_) + "': " + std::to_string(v) + "/" + std::to_string(d));
        }
        v /= d;
      } else {
        return v;
      }
    }
  }

  long long factor() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      long long v = expr();
      if (!eat(')')) syntax_error("missing ')'");
      return v;
    }
    if (c == '-') {
      ++pos_;
      return checked(-static_cast<__int128>(factor()));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      __int128 v = 0;
      int digits = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + (text_[pos_] - '0');
        if (++digits > 18) fail(Errc::numeric_overflow, "integer literal too long");
        ++pos_;
      }
      return checked(v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (params_ == nullptr) return 1;
      auto it = params_->find(name);
      if (it == params_->end()) {
        fail(Errc::unbound_parameter, "parameter '" + name + "' has no binding");
      }
      return it->second;
    }
    syntax_error("unexpected character");
  }

  std::string_view text_;
  const ParamMap* params_;
  size_t pos_ = 0;
};

}  // namespace

long long eval_expr(std::string_view expr, const ParamMap& params) {
  return Parser(expr, &params).run();
}

long long eval_positive(std::string_view expr, const ParamMap& params) {
  long long v = eval_expr(expr, params);
  if (v <= 0) {
    fail(Errc::non_positive_result,
         "expression '" + std::string(expr) + "' evaluates to " + std::to_string(v));
  }
  return v;
}

void validate_expr(std::string_view expr) { Parser(expr, nullptr).run(); }

}  // namespace hetsim
