#pragma once

// JSON dialect for colourings and digraphs:
//   colouring: {"blocks": [[[i, j], ...], ...]}
//   digraph:   {"k": 4, "cycles": [[[tail, head], ...], ...]}

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "genbell/colouring.hpp"
#include "genbell/eulerian.hpp"

namespace genbell {

using json = nlohmann::json;

inline json to_json(Colouring const& c) {
  json blocks = json::array();
  for (auto const& block : c.blocks) {
    json b = json::array();
    for (auto v : block) {
      b.push_back({v.clique, v.position});
    }
    blocks.push_back(std::move(b));
  }
  return json{{"blocks", std::move(blocks)}};
}

inline json to_json(LabelledEulerianDigraph const& d) {
  json cycles = json::array();
  for (auto const& cycle : d.cycles) {
    json c = json::array();
    for (auto e : cycle) {
      c.push_back({e.tail, e.head});
    }
    cycles.push_back(std::move(c));
  }
  return json{{"k", d.vertex_count}, {"cycles", std::move(cycles)}};
}

namespace detail {

  inline unsigned positive_index(json const& j, char const* what) {
    if (!j.is_number_integer() || j.get<long long>() < 1 || j.get<long long>() > 1000000000LL) {
      throw std::invalid_argument(std::string("expected a positive integer for ") + what +
                                  ", got " + j.dump());
    }
    return static_cast<unsigned>(j.get<long long>());
  }

  inline json const& pair_array(json const& j, char const* what) {
    if (!j.is_array() || j.size() != 2) {
      throw std::invalid_argument(std::string("expected a pair for ") + what + ", got " + j.dump());
    }
    return j;
  }

}  // namespace detail

inline Colouring colouring_from_json(json const& j) {
  if (!j.is_object() || !j.contains("blocks") || !j.at("blocks").is_array()) {
    throw std::invalid_argument("colouring JSON needs a \"blocks\" array");
  }
  Colouring c;
  for (auto const& block : j.at("blocks")) {
    if (!block.is_array()) {
      throw std::invalid_argument("colouring block must be an array");
    }
    Block b;
    for (auto const& v : block) {
      auto const& p = detail::pair_array(v, "vertex");
      b.push_back({detail::positive_index(p[0], "clique index"),
                   detail::positive_index(p[1], "vertex position")});
    }
    c.blocks.push_back(std::move(b));
  }
  return c;
}

inline LabelledEulerianDigraph digraph_from_json(json const& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("cycles") || !j.at("cycles").is_array()) {
    throw std::invalid_argument("digraph JSON needs \"k\" and a \"cycles\" array");
  }
  LabelledEulerianDigraph d;
  d.vertex_count = detail::positive_index(j.at("k"), "k");
  for (auto const& cycle : j.at("cycles")) {
    if (!cycle.is_array()) {
      throw std::invalid_argument("digraph cycle must be an array");
    }
    Cycle c;
    for (auto const& e : cycle) {
      auto const& p = detail::pair_array(e, "edge");
      c.push_back({detail::positive_index(p[0], "edge tail"), detail::positive_index(p[1], "edge head")});
    }
    d.cycles.push_back(std::move(c));
  }
  return d;
}

}  // namespace genbell
