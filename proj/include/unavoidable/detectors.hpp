#pragma once

#include <array>
#include <sstream>
#include <stdexcept>
#include <string>

namespace unavoidable {

// The three unavoidable induced structures, as named in detector orders.
enum class Structure { tree, clique, biclique };

/// Priority among the three outcomes wherever a stage could report more
/// than one of them.
using DetectorOrder = std::array<Structure, 3>;

// Tree first; biclique before clique because K_2 is a single edge and would
// otherwise shadow K_{2,2} in every graph that has one.
inline constexpr DetectorOrder default_detector_order{Structure::tree, Structure::biclique,
                                                      Structure::clique};

inline const char* to_string(Structure s) {
  switch (s) {
    case Structure::tree: return "path";
    case Structure::clique: return "clique";
    case Structure::biclique: return "biclique";
  }
  return "?";
}

/// Parses "path,clique,biclique" ("tree" is accepted for "path").
inline DetectorOrder parse_detector_order(const std::string& text) {
  DetectorOrder order{};
  std::array<bool, 3> seen{};
  std::istringstream in(text);
  std::string item;
  std::size_t count = 0;
  while (std::getline(in, item, ',')) {
    Structure s;
    if (item == "path" || item == "tree") s = Structure::tree;
    else if (item == "clique") s = Structure::clique;
    else if (item == "biclique") s = Structure::biclique;
    else throw std::invalid_argument("unknown detector '" + item + "'");
    if (count == 3 || seen[static_cast<std::size_t>(s)])
      throw std::invalid_argument("detector order must list path, clique and biclique once each");
    seen[static_cast<std::size_t>(s)] = true;
    order[count++] = s;
  }
  if (count != 3)
    throw std::invalid_argument("detector order must list path, clique and biclique once each");
  return order;
}

inline std::string format_detector_order(const DetectorOrder& order) {
  return std::string(to_string(order[0])) + "," + to_string(order[1]) + "," + to_string(order[2]);
}

}  // namespace unavoidable
