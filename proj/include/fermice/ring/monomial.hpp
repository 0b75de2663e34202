// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace fermice::ring {

/// Symbol classes. Declaration order is the variable order used by the
/// canonical term order.
enum class VarClass : std::uint8_t { x, y, t, z };

/// Only x- and z-class variables may carry negative exponents.
constexpr bool allows_negative_exponent(VarClass c) {
  return c == VarClass::x || c == VarClass::z;
}

char class_letter(VarClass c);

struct VarId {
  VarClass cls = VarClass::x;
  int index = 1;

  friend constexpr auto operator<=>(const VarId&, const VarId&) = default;

  static constexpr VarId x(int i) { return {VarClass::x, i}; }
  static constexpr VarId y(int i) { return {VarClass::y, i}; }
  static constexpr VarId t(int i) { return {VarClass::t, i}; }
  static constexpr VarId z(int i) { return {VarClass::z, i}; }

  std::string name() const;
};

/// Parses "x3", "t12", ... Throws std::invalid_argument on anything else.
VarId parse_var(const std::string& text);

/// Power product of variables with integer exponents. Factors are kept sorted
/// by VarId with no zero exponents, so equality is structural.
class Monomial {
 public:
  using Factor = std::pair<VarId, int>;

  Monomial() = default;
  Monomial(std::initializer_list<Factor> factors);
  explicit Monomial(std::vector<Factor> factors);

  static Monomial var(VarId v, int exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  int degree() const { return degree_; }
  int degree_in(VarClass c) const;
  int exponent(VarId v) const;
  bool is_one() const { return factors_.empty(); }

  /// Throws std::domain_error when a y- or t-class factor would go negative.
  Monomial inverse() const;

  /// Every exponent multiplied by e; same domain rule as inverse().
  Monomial pow(int e) const;

  Monomial restricted_to(VarClass c) const;
  Monomial without(VarClass c) const;

  /// Componentwise minimum / maximum of exponents (absent factors count as 0).
  static Monomial gcd(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);

  /// True when every exponent of *this is <= the matching exponent of other.
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }

  std::string to_string() const;

 private:
  void canonicalize();

  std::vector<Factor> factors_;
  int degree_ = 0;
};

/// Graded lexicographic order, descending. Used as the std::map comparator
/// so that iteration walks terms from the leading term down.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

}  // namespace fermice::ring
