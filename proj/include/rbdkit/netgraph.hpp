/// @file netgraph.hpp
/// Exact two-terminal availability of general networks.
///
/// Series-parallel reductions are applied to a fixpoint; whatever core is
/// left is factored on a pivot edge,
///
///   A = A_p * A(network with p contracted) + (1 - A_p) * A(network without p),
///
/// which generalizes conditioning a bridge on its cross-link to arbitrary
/// topologies. Worst-case cost is exponential in the number of pivots, so
/// the recursion depth is bounded.
#pragma once

#include <cstdint>
#include <optional>

#include "rbdkit/model.hpp"
#include "rbdkit/network.hpp"
#include "rbdkit/probability.hpp"

namespace rbdkit {

/// Result of reduce(). Edges fused by a reduction get a synthetic id such as
/// "(a|b)" (parallel) or "(a.b)" (series) and use that id as their component
/// id; their availabilities live in `synthetic`.
struct Reduction {
  Network network;
  Environment synthetic;
  /// False when the terminal cannot be reached from the source at all.
  bool connected = true;
};

/// Applies, until nothing changes: self-loop removal, removal of edges
/// outside the source's connected part, parallel-edge merging, degree-1
/// pruning and degree-2 series fusion of internal nodes. Each pass performs
/// the first applicable rule in that order, scanning edges and nodes in
/// list order.
Reduction reduce(const Network& net, const Environment& env);

struct FactoringOptions {
  /// Maximum nesting of pivot decisions before ResourceError is thrown.
  int max_pivot_depth = 30;
  /// When set, pivots are drawn uniformly from the remaining edges with a
  /// SplitMix64 stream seeded by this value instead of the default rule.
  std::optional<std::uint64_t> random_pivot_seed;
};

/// Default pivot: the edge with the highest sum of endpoint degrees, ties
/// broken by the lexicographically smallest edge id.
Probability eval_network(const Network& net, const Environment& env,
                         const FactoringOptions& options = {});

}  // namespace rbdkit
