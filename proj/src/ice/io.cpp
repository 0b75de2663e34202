// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermice/ice/io.hpp"

#include <stdexcept>

namespace fermice::ice {

using nlohmann::json;

namespace {

Bits bits_from_json(const json& j, const char* key) {
  try {
    return j.at(key).get<Bits>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("ice json: bad field '") + key + "': " + e.what());
  }
}

StrictPartition lambda_from_json(const json& j) {
  try {
    return j.at("lambda").get<StrictPartition>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("ice json: bad lambda: ") + e.what());
  }
}

}  // namespace

json pattern_to_json(const GTPattern& p) { return json{{"rows", p.rows}}; }

GTPattern pattern_from_json(const json& j) {
  GTPattern p;
  try {
    p.rows = j.at("rows").get<std::vector<StrictPartition>>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("pattern json: ") + e.what());
  }
  if (!p.valid()) throw std::invalid_argument("pattern json: not a strict GT pattern");
  return p;
}

json state_to_json(const IceState& s) {
  return json{{"lambda", s.lambda},
              {"rows", s.rows},
              {"cols", s.cols},
              {"vertical_edges", s.vertical},
              {"horizontal_edges", s.horizontal},
              {"pattern", ice_to_pattern(s).rows}};
}

IceState state_from_json(const json& j) {
  IceState s;
  s.lambda = lambda_from_json(j);
  try {
    s.rows = j.at("rows").get<int>();
    s.cols = j.at("cols").get<int>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("ice json: ") + e.what());
  }
  s.vertical = bits_from_json(j, "vertical_edges");
  s.horizontal = bits_from_json(j, "horizontal_edges");
  const GTPattern p = ice_to_pattern(s);
  if (j.contains("pattern") && j["pattern"].get<std::vector<StrictPartition>>() != p.rows) {
    throw std::invalid_argument("ice json: pattern disagrees with the edges");
  }
  return s;
}

json bend_state_to_json(const BendIceState& s) {
  json bends = json::array();
  for (auto b : s.bend_up) bends.push_back(b != 0 ? "up" : "down");
  return json{{"lambda", s.lambda},
              {"rows", 2 * s.pairs},
              {"cols", s.cols},
              {"vertical_edges", s.vertical},
              {"horizontal_edges", s.horizontal},
              {"bends", bends},
              {"pattern", bend_levels(s)}};
}

BendIceState bend_state_from_json(const json& j) {
  BendIceState s;
  s.lambda = lambda_from_json(j);
  s.pairs = static_cast<int>(s.lambda.size());
  try {
    if (j.at("rows").get<int>() != 2 * s.pairs) throw std::invalid_argument("bend json: rows != 2n");
    s.cols = j.at("cols").get<int>();
    for (const auto& b : j.at("bends")) {
      const auto v = b.get<std::string>();
      if (v != "up" && v != "down") throw std::invalid_argument("bend json: bend must be up or down");
      s.bend_up.push_back(v == "up" ? 1 : 0);
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bend json: ") + e.what());
  }
  s.vertical = bits_from_json(j, "vertical_edges");
  s.horizontal = bits_from_json(j, "horizontal_edges");
  const BendLevels levels = bend_levels(s);
  if (j.contains("pattern") && j["pattern"].get<BendLevels>() != levels) {
    throw std::invalid_argument("bend json: pattern disagrees with the edges");
  }
  return s;
}

}  // namespace fermice::ice
