#pragma once

/**
 * @file io.hpp
 * @brief JSON interchange for nets:
 *   {"p": 11, "components": [[[x, y, z], ...], ...], "metadata": {...}}
 * Coordinates are integers; a parsed document is always re-verified.
 */

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "latin.hpp"
#include "nets.hpp"

namespace knets {

struct NetDocument {
  i64 p = 0;
  std::vector<std::vector<std::array<i64, 3>>> components;
  nlohmann::json metadata = nlohmann::json::object();
  bool char_exception = false;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline nlohmann::json point_json(const ProjPoint& P) { return {P[0].value(), P[1].value(), P[2].value()}; }
inline nlohmann::json line_json(const ProjLine& l) { return {l[0].value(), l[1].value(), l[2].value()}; }

/// Canonical form: components in net order, points sorted within each.
inline NetDocument to_document(const DualNet& net, nlohmann::json metadata = nlohmann::json::object()) {
  NetDocument d;
  d.p = net.field().p();
  for (const auto& c : net.components()) {
    auto& out = d.components.emplace_back();
    for (const auto& P : c) out.push_back({P[0].value(), P[1].value(), P[2].value()});
  }
  d.metadata = std::move(metadata);
  d.char_exception = net.char_exception();
  if (d.char_exception) d.metadata["characteristic_exception"] = true;
  return d;
}

inline nlohmann::json to_json(const NetDocument& d) {
  nlohmann::json j;
  j["p"] = d.p;
  j["components"] = d.components;
  if (!d.metadata.empty()) j["metadata"] = d.metadata;
  return j;
}

inline NetDocument parse_document(const nlohmann::json& j) {
  NetDocument d;
  try {
    if (!j.is_object()) throw ParseError("net document must be a JSON object");
    if (!j.contains("p") || !j["p"].is_number_integer()) throw ParseError("missing integer field \"p\"");
    if (!j.contains("components") || !j["components"].is_array()) throw ParseError("missing array \"components\"");
    d.p = j["p"].get<i64>();
    for (const auto& c : j["components"]) {
      if (!c.is_array()) throw ParseError("component must be an array of points");
      auto& out = d.components.emplace_back();
      for (const auto& P : c) {
        if (!P.is_array() || P.size() != 3) throw ParseError("point must be an array of 3 integers");
        std::array<i64, 3> xyz{};
        for (std::size_t i = 0; i < 3; ++i) {
          if (!P[i].is_number_integer()) throw ParseError("coordinates must be integers");
          xyz[i] = P[i].get<i64>();
        }
        out.push_back(xyz);
      }
    }
    if (j.contains("metadata")) d.metadata = j["metadata"];
    d.char_exception = d.metadata.is_object() && d.metadata.value("characteristic_exception", false);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  return d;
}

inline NetDocument parse_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  return parse_document(j);
}

/// Field and projective points of a document; throws on invalid p or zero points.
inline std::vector<Component> document_components(const NetDocument& d) {
  Field F = Field::of(d.p);
  std::vector<Component> comps;
  for (const auto& c : d.components) {
    auto& out = comps.emplace_back();
    for (const auto& xyz : c) out.push_back(ProjPoint(F, xyz[0], xyz[1], xyz[2]));
  }
  return comps;
}

inline VerifyReport check_document(const NetDocument& d) {
  return check_net(Field::of(d.p), document_components(d), d.char_exception);
}

inline DualNet load_net(const NetDocument& d) {
  return DualNet::verify(Field::of(d.p), document_components(d), d.char_exception);
}

inline nlohmann::json latin_json(const LatinSquare& L) { return L.cells(); }

}  // namespace knets
