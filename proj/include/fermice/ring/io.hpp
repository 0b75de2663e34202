// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "fermice/ring/multipoly.hpp"

namespace fermice::ring {

/// Parses the canonical text form and general expressions built from
/// rationals, variables, + - * /, ^ (integer exponents), and parentheses.
/// Division is only allowed by a scalar. Throws std::invalid_argument.
MultiPoly parse_poly(const std::string& text);

/// Parses a rational such as "3", "-2/5". Throws std::invalid_argument.
Scalar parse_scalar(const std::string& text);

/// [{"coeff": "3/2", "exponents": {"x1": 2, "t1": 1}}, ...] in canonical order.
nlohmann::json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j);

/// Parses "t1=0,x2=1/2" into a substitution map.
std::map<VarId, MultiPoly> parse_assignments(const std::string& text);

}  // namespace fermice::ring
