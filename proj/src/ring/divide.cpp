// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermice/ring/divide.hpp"

#include <stdexcept>

namespace fermice::ring {

namespace {

// Componentwise minimum exponent over all terms.
Monomial floor_monomial(const MultiPoly& p) {
  auto it = p.terms().begin();
  Monomial g = it->first;
  for (++it; it != p.terms().end(); ++it) g = Monomial::gcd(g, it->first);
  return g;
}

Monomial quotient_monomial(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Factor> f = b.factors();
  for (auto& [v, e] : f) e = -e;
  for (const auto& fa : a.factors()) f.push_back(fa);
  return Monomial(std::move(f));
}

MultiPoly reduce_by(const MultiPoly& p, const Monomial& floor) {
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) out.add_term(quotient_monomial(m, floor), c);
  return out;
}

}  // namespace

std::optional<MultiPoly> exact_divide(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) throw std::domain_error("exact_divide: division by the zero polynomial");
  if (p.is_zero()) return MultiPoly{};

  const Monomial fp = floor_monomial(p);
  const Monomial fq = floor_monomial(q);
  // Both shifted polynomials have all exponents >= 0 and no monomial content.
  MultiPoly rem = reduce_by(p, fp);
  const MultiPoly divisor = reduce_by(q, fq);

  const auto& [lead_m, lead_c] = *divisor.terms().begin();
  MultiPoly quot;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms().begin();
    if (!lead_m.divides(rm)) return std::nullopt;
    MultiPoly step(quotient_monomial(rm, lead_m), rc / lead_c);
    rem -= divisor * step;
    quot += step;
  }

  try {
    Monomial scale = quotient_monomial(fp, fq);
    return quot.shifted(scale);
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

}  // namespace fermice::ring
