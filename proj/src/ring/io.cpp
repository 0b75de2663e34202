// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermice/ring/io.hpp"

#include <cctype>
#include <stdexcept>

namespace fermice::ring {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_poly: " + what + " at offset " + std::to_string(pos_) +
                                " in \"" + s_ + "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    while (true) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    while (true) {
      if (eat('*')) {
        acc *= unary();
      } else if (eat('/')) {
        MultiPoly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-scalar or zero");
        acc *= Scalar(1) / d.constant_term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  int integer_exponent() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    if (eat('(')) {
      int e = integer_exponent();
      if (!eat(')')) fail("expected ')'");
      return neg ? -e : e;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    if (pos_ - start > 6) fail("exponent too large");
    int e = std::stoi(s_.substr(start, pos_ - start));
    return neg ? -e : e;
  }

  MultiPoly power() {
    skip_ws();
    if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const VarId v = parse_var(s_.substr(start, pos_ - start));
      int e = 1;
      if (eat('^')) e = integer_exponent();
      return MultiPoly::var(v, e);
    }
    MultiPoly base;
    if (eat('(')) {
      base = expr();
      if (!eat(')')) fail("expected ')'");
    } else {
      base = number();
    }
    if (eat('^')) {
      int e = integer_exponent();
      if (e < 0) {
        if (base.size() != 1) fail("negative power of a non-monomial");
        const auto& [m, c] = *base.terms().begin();
        return MultiPoly(m.inverse(), Scalar(1) / c).pow(static_cast<unsigned>(-e));
      }
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  MultiPoly number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected number, variable or '('");
    return MultiPoly(Scalar(mpz_class(s_.substr(start, pos_ - start))));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const std::string& text) { return Parser(text).parse(); }

Scalar parse_scalar(const std::string& text) {
  MultiPoly p = parse_poly(text);
  if (!p.is_constant()) throw std::invalid_argument("not a rational: " + text);
  return p.constant_term();
}

nlohmann::json poly_to_json(const MultiPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json exps = nlohmann::json::object();
    for (const auto& [v, e] : m.factors()) exps[v.name()] = e;
    arr.push_back({{"coeff", c.get_str()}, {"exponents", exps}});
  }
  return arr;
}

MultiPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  MultiPoly p;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("exponents")) {
      throw std::invalid_argument("polynomial JSON term needs coeff and exponents");
    }
    const Scalar c = parse_scalar(term.at("coeff").get<std::string>());
    std::vector<Monomial::Factor> f;
    for (const auto& [name, e] : term.at("exponents").items()) {
      f.emplace_back(parse_var(name), e.get<int>());
    }
    p.add_term(Monomial(std::move(f)), c);
  }
  return p;
}

std::map<VarId, MultiPoly> parse_assignments(const std::string& text) {
  std::map<VarId, MultiPoly> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(start, comma - start);
    if (!item.empty()) {
      const std::size_t eq = item.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("expected var=value, got " + item);
      out[parse_var(item.substr(0, eq))] = MultiPoly(parse_scalar(item.substr(eq + 1)));
    }
    start = comma + 1;
  }
  return out;
}

}  // namespace fermice::ring
