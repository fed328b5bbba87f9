/// @file network.hpp
/// Two-terminal undirected network whose edges carry components.
#pragma once

#include <set>
#include <string>
#include <vector>

namespace rbdkit {

/// Nodes are perfect junctions; only edges fail.
struct NetworkEdge {
  std::string id;
  std::string a;
  std::string b;
  std::string component_id;

  friend bool operator==(const NetworkEdge&, const NetworkEdge&) = default;
};

struct Network {
  std::set<std::string> nodes;
  std::vector<NetworkEdge> edges;
  std::string source;
  std::string terminal;

  /// Adds an edge and registers its endpoints as nodes.
  void add_edge(std::string id, std::string a, std::string b,
                std::string component_id);

  friend bool operator==(const Network&, const Network&) = default;
};

/// The bridge of five edges between source "s" and terminal "t" with mid
/// points "u" and "v": ids[0] s-u, ids[1] s-v, ids[2] u-v (cross-link),
/// ids[3] u-t, ids[4] v-t. Edge ids equal the component ids.
Network bridge_network(const std::vector<std::string>& component_ids);

}  // namespace rbdkit
