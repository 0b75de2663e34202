// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermice/ring/multipoly.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace fermice::ring {

MultiPoly::MultiPoly(long c) : MultiPoly(Scalar(c)) {}

namespace {

// mpq_class(num, den) does not reduce on construction.
Scalar reduced(const Scalar& c) {
  Scalar r = c;
  if (mpz_cmp_ui(r.get_den_mpz_t(), 1) != 0) r.canonicalize();
  return r;
}

}  // namespace

MultiPoly::MultiPoly(const Scalar& c) {
  if (c != 0) terms_.emplace(Monomial{}, reduced(c));
}

MultiPoly::MultiPoly(const Monomial& m, const Scalar& c) {
  if (c != 0) terms_.emplace(m, reduced(c));
}

MultiPoly MultiPoly::var(VarId v, int exponent) { return MultiPoly(Monomial::var(v, exponent)); }

Scalar MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

void MultiPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, reduced(c));
  if (!inserted) {
    it->second += reduced(c);
    if (it->second == 0) terms_.erase(it);
  }
}

int MultiPoly::min_exponent(VarId v) const {
  if (terms_.empty()) return 0;
  int lo = std::numeric_limits<int>::max();
  for (const auto& [m, c] : terms_) lo = std::min(lo, m.exponent(v));
  return lo;
}

int MultiPoly::max_exponent(VarId v) const {
  if (terms_.empty()) return 0;
  int hi = std::numeric_limits<int>::min();
  for (const auto& [m, c] : terms_) hi = std::max(hi, m.exponent(v));
  return hi;
}

int MultiPoly::max_degree_in(VarClass cls) const {
  if (terms_.empty()) return 0;
  int hi = std::numeric_limits<int>::min();
  for (const auto& [m, c] : terms_) hi = std::max(hi, m.degree_in(cls));
  return hi;
}

int MultiPoly::min_degree_in(VarClass cls) const {
  if (terms_.empty()) return 0;
  int lo = std::numeric_limits<int>::max();
  for (const auto& [m, c] : terms_) lo = std::min(lo, m.degree_in(cls));
  return lo;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

MultiPoly operator-(MultiPoly a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1L);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::shifted(const Monomial& m) const {
  MultiPoly out;
  for (const auto& [mm, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), mm * m, c);
  return out;
}

MultiPoly MultiPoly::substitute(const std::map<VarId, MultiPoly>& values) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    MultiPoly term(c);
    std::vector<Monomial::Factor> kept;
    for (const auto& [v, e] : m.factors()) {
      auto it = values.find(v);
      if (it == values.end()) {
        kept.emplace_back(v, e);
        continue;
      }
      const MultiPoly& val = it->second;
      if (e >= 0) {
        term *= val.pow(static_cast<unsigned>(e));
      } else {
        if (val.size() != 1) {
          throw std::domain_error("cannot substitute a non-monomial for " + v.name() +
                                  " under a negative exponent");
        }
        const auto& [vm, vc] = *val.terms_.begin();
        Scalar inv = 1 / vc;
        term *= MultiPoly(vm.inverse(), inv).pow(static_cast<unsigned>(-e));
      }
    }
    out += term.shifted(Monomial(std::move(kept)));
  }
  return out;
}

MultiPoly MultiPoly::filter(const std::function<bool(const Monomial&)>& keep) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    if (keep(m)) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Scalar mag = abs(c);
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      s += mag.get_str();
    } else if (mag == 1) {
      s += m.to_string();
    } else {
      s += mag.get_str() + '*' + m.to_string();
    }
  }
  return s;
}

}  // namespace fermice::ring
