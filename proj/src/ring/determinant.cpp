// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermice/ring/determinant.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace fermice::ring {

namespace {

class Expander {
 public:
  explicit Expander(const PolyMatrix& m) : m_(m), n_(m.size()) {}

  // Determinant of the minor formed by rows [n - popcount(cols), n) and the
  // columns in the bitmask cols.
  const MultiPoly& minor(unsigned cols) {
    auto it = memo_.find(cols);
    if (it != memo_.end()) return it->second;
    MultiPoly det;
    if (cols == 0) {
      det = MultiPoly(1L);
    } else {
      const std::size_t row = n_ - static_cast<std::size_t>(std::popcount(cols));
      int sign = 1;
      for (std::size_t c = 0; c < n_; ++c) {
        if (!(cols & (1U << c))) continue;
        const MultiPoly& entry = m_[row][c];
        if (!entry.is_zero()) {
          const MultiPoly& sub = minor(cols & ~(1U << c));
          if (!sub.is_zero()) {
            MultiPoly term = entry * sub;
            if (sign > 0) {
              det += term;
            } else {
              det -= term;
            }
          }
        }
        sign = -sign;
      }
    }
    return memo_.emplace(cols, std::move(det)).first->second;
  }

 private:
  const PolyMatrix& m_;
  std::size_t n_;
  std::unordered_map<unsigned, MultiPoly> memo_;
};

}  // namespace

MultiPoly poly_det(const PolyMatrix& m, std::size_t cap) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("poly_det: matrix is not square");
  }
  if (n > cap) {
    throw std::invalid_argument("poly_det: size " + std::to_string(n) + " exceeds cap " +
                                std::to_string(cap));
  }
  if (n == 0) return MultiPoly(1L);
  Expander ex(m);
  return ex.minor((1U << n) - 1U);
}

}  // namespace fermice::ring
