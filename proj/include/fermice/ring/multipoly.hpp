// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <string>

#include "fermice/ring/monomial.hpp"

namespace fermice::ring {

/// Exact rational. GMP keeps it in lowest terms with a positive denominator.
using Scalar = mpq_class;

/// Sparse multivariate Laurent polynomial over the rationals. Terms are held
/// in descending graded lexicographic order; zero coefficients are never
/// stored, so the zero polynomial has no terms.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Scalar, GrlexGreater>;

  MultiPoly() = default;
  MultiPoly(long c);  // NOLINT(google-explicit-constructor)
  MultiPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
  explicit MultiPoly(const Monomial& m, const Scalar& c = 1);

  static MultiPoly var(VarId v, int exponent = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of m; zero when absent.
  Scalar coefficient(const Monomial& m) const;

  /// Returns the constant if the polynomial has no non-constant terms.
  bool is_constant() const;
  Scalar constant_term() const { return coefficient(Monomial{}); }

  void add_term(const Monomial& m, const Scalar& c);

  /// Minimum and maximum exponent of v across all terms (0 for the zero poly).
  int min_exponent(VarId v) const;
  int max_exponent(VarId v) const;
  int max_degree_in(VarClass c) const;
  int min_degree_in(VarClass c) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Scalar& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Scalar& c) { return a *= c; }
  friend MultiPoly operator*(const Scalar& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator-(MultiPoly a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  MultiPoly pow(unsigned e) const;

  /// Multiplies every term by a monomial.
  MultiPoly shifted(const Monomial& m) const;

  /// Replaces variables by polynomials. A variable with a negative exponent
  /// can only be replaced by a single-term polynomial; otherwise
  /// std::domain_error is thrown.
  MultiPoly substitute(const std::map<VarId, MultiPoly>& values) const;

  /// Keeps the terms for which keep(monomial) is true.
  MultiPoly filter(const std::function<bool(const Monomial&)>& keep) const;

  /// Canonical text form, e.g. "3/2*x1^2*t1 - x1^-2 + 1".
  std::string to_string() const;

 private:
  Terms terms_;
};

inline MultiPoly operator-(MultiPoly a, long c) { return a -= MultiPoly(c); }
inline MultiPoly operator+(MultiPoly a, long c) { return a += MultiPoly(c); }

/// Convenience constructors.
inline MultiPoly X(int i) { return MultiPoly::var(VarId::x(i)); }
inline MultiPoly Y(int i) { return MultiPoly::var(VarId::y(i)); }
inline MultiPoly T(int i) { return MultiPoly::var(VarId::t(i)); }
inline MultiPoly Z(int i) { return MultiPoly::var(VarId::z(i)); }

}  // namespace fermice::ring
