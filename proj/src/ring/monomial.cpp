// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermice/ring/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace fermice::ring {

char class_letter(VarClass c) {
  switch (c) {
    case VarClass::x: return 'x';
    case VarClass::y: return 'y';
    case VarClass::t: return 't';
    case VarClass::z: return 'z';
  }
  return '?';
}

std::string VarId::name() const {
  return std::string(1, class_letter(cls)) + std::to_string(index);
}

VarId parse_var(const std::string& text) {
  if (text.size() < 2) throw std::invalid_argument("bad variable name: " + text);
  VarClass cls;
  switch (text[0]) {
    case 'x': cls = VarClass::x; break;
    case 'y': cls = VarClass::y; break;
    case 't': cls = VarClass::t; break;
    case 'z': cls = VarClass::z; break;
    default: throw std::invalid_argument("bad variable name: " + text);
  }
  int index = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("bad variable name: " + text);
    index = index * 10 + (text[i] - '0');
    if (index > 1000000) throw std::invalid_argument("variable index too large: " + text);
  }
  if (index < 1) throw std::invalid_argument("variable index must be positive: " + text);
  return {cls, index};
}

Monomial::Monomial(std::initializer_list<Factor> factors) : factors_(factors) { canonicalize(); }

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) { canonicalize(); }

Monomial Monomial::var(VarId v, int exponent) { return Monomial{{v, exponent}}; }

void Monomial::canonicalize() {
  for (const auto& [v, e] : factors_) {
    if (v.index < 1) throw std::invalid_argument("variable index must be positive");
    (void)e;
  }
  std::sort(factors_.begin(), factors_.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  std::vector<Factor> merged;
  merged.reserve(factors_.size());
  for (const auto& f : factors_) {
    if (!merged.empty() && merged.back().first == f.first) {
      merged.back().second += f.second;
    } else {
      merged.push_back(f);
    }
  }
  std::erase_if(merged, [](const Factor& f) { return f.second == 0; });
  degree_ = 0;
  for (const auto& [v, e] : merged) {
    if (e < 0 && !allows_negative_exponent(v.cls)) {
      throw std::domain_error("negative exponent not allowed for " + v.name());
    }
    degree_ += e;
  }
  factors_ = std::move(merged);
}

int Monomial::degree_in(VarClass c) const {
  int d = 0;
  for (const auto& [v, e] : factors_) {
    if (v.cls == c) d += e;
  }
  return d;
}

int Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const VarId& key) { return f.first < key; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::inverse() const {
  std::vector<Factor> inv = factors_;
  for (auto& f : inv) f.second = -f.second;
  return Monomial(std::move(inv));
}

Monomial Monomial::pow(int e) const {
  std::vector<Factor> out = factors_;
  for (auto& f : out) f.second *= e;
  return Monomial(std::move(out));
}

Monomial Monomial::restricted_to(VarClass c) const {
  std::vector<Factor> out;
  for (const auto& f : factors_) {
    if (f.first.cls == c) out.push_back(f);
  }
  return Monomial(std::move(out));
}

Monomial Monomial::without(VarClass c) const {
  std::vector<Factor> out;
  for (const auto& f : factors_) {
    if (f.first.cls != c) out.push_back(f);
  }
  return Monomial(std::move(out));
}

namespace {

template <typename Pick>
Monomial combine(const Monomial& a, const Monomial& b, Pick pick) {
  std::vector<Monomial::Factor> out;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].first < fb[j].first)) {
      out.emplace_back(fa[i].first, pick(fa[i].second, 0));
      ++i;
    } else if (i == fa.size() || fb[j].first < fa[i].first) {
      out.emplace_back(fb[j].first, pick(0, fb[j].second));
      ++j;
    } else {
      out.emplace_back(fa[i].first, pick(fa[i].second, fb[j].second));
      ++i;
      ++j;
    }
  }
  return Monomial(std::move(out));
}

}  // namespace

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](int p, int q) { return std::min(p, q); });
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](int p, int q) { return std::max(p, q); });
}

bool Monomial::divides(const Monomial& other) const {
  const Monomial g = gcd(*this, other);
  return g == *this;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](int p, int q) { return p + q; });
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += '*';
    s += v.name();
    if (e != 1) s += '^' + std::to_string(e);
  }
  return s;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].first < fb[j].first)) {
      return fa[i].second > 0;
    }
    if (i == fa.size() || fb[j].first < fa[i].first) {
      return fb[j].second < 0;
    }
    if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second;
    ++i;
    ++j;
  }
  return false;
}

}  // namespace fermice::ring
