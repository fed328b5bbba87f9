/// @file analysis.cpp
#include "rbdkit/analysis.hpp"

#include "rbdkit/eval.hpp"

namespace rbdkit {

Probability evaluate(const Model& m, const FactoringOptions& options) {
  Environment env = make_environment(m);
  if (const auto* block = std::get_if<Block>(&m.system))
    return eval_block(*block, env);
  return eval_network(std::get<Network>(m.system), env, options);
}

std::size_t instance_count(const Model& m) {
  return std::visit([](const auto& s) { return instance_count(s); }, m.system);
}

Enumeration enumerate(const Model& m, std::size_t cap) {
  Environment env = make_environment(m);
  return std::visit([&](const auto& s) { return enumerate(s, env, cap); },
                    m.system);
}

MonteCarloResult monte_carlo_availability(const Model& m,
                                          const MonteCarloOptions& options) {
  Environment env = make_environment(m);
  return std::visit(
      [&](const auto& s) { return monte_carlo_availability(s, env, options); },
      m.system);
}

}  // namespace rbdkit
