/// @file analysis.hpp
/// Whole-model entry points that dispatch on the kind of system structure.
#pragma once

#include <cstddef>

#include "rbdkit/model.hpp"
#include "rbdkit/netgraph.hpp"
#include "rbdkit/oracle.hpp"
#include "rbdkit/probability.hpp"

namespace rbdkit {

/// Exact system availability: eval_block for diagrams, eval_network for
/// networks. Component availabilities come from make_environment().
Probability evaluate(const Model& m, const FactoringOptions& options = {});

std::size_t instance_count(const Model& m);

Enumeration enumerate(const Model& m,
                      std::size_t cap = kDefaultEnumerationCap);

MonteCarloResult monte_carlo_availability(const Model& m,
                                          const MonteCarloOptions& options);

}  // namespace rbdkit
