/// @file oracle.cpp
#include "rbdkit/oracle.hpp"

#include <cmath>
#include <map>
#include <string>
#include <thread>
#include <utility>

#include "rbdkit/error.hpp"

namespace rbdkit {
namespace {

bool st_connected(int nodes, const std::vector<std::pair<int, int>>& edges,
                  const std::vector<bool>& working, int source, int terminal) {
  std::vector<bool> seen(nodes, false);
  std::vector<int> stack{source};
  seen[source] = true;
  while (!stack.empty()) {
    int node = stack.back();
    stack.pop_back();
    if (node == terminal) return true;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!working[i]) continue;
      auto [a, b] = edges[i];
      int next = a == node ? b : b == node ? a : -1;
      if (next >= 0 && !seen[next]) {
        seen[next] = true;
        stack.push_back(next);
      }
    }
  }
  return false;
}

bool block_works(const Block& b, const StateVector& s, std::size_t& cursor) {
  if (b.kind() == BlockKind::kLeaf) return s[cursor++];
  std::vector<bool> child;
  child.reserve(b.children().size());
  for (const auto& c : b.children()) child.push_back(block_works(c, s, cursor));
  long up = 0;
  for (bool c : child) up += c;
  switch (b.kind()) {
    case BlockKind::kSeries:
      return up == static_cast<long>(child.size());
    case BlockKind::kParallel:
      return up > 0;
    case BlockKind::kKofN:
      return up >= b.k();
    case BlockKind::kBridge: {
      // s=0, u=1, v=2, t=3; left column s-u, s-v; cross u-v; right u-t, v-t.
      static const std::vector<std::pair<int, int>> kBridge = {
          {0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
      return st_connected(4, kBridge, child, 0, 3);
    }
    case BlockKind::kLeaf:
      break;
  }
  return false;
}

struct CompiledNetwork {
  int nodes = 0;
  int source = 0;
  int terminal = 0;
  std::vector<std::pair<int, int>> edges;

  explicit CompiledNetwork(const Network& net) {
    std::map<std::string, int, std::less<>> handle;
    auto id = [&](const std::string& name) {
      auto [it, inserted] = handle.emplace(name, static_cast<int>(handle.size()));
      return it->second;
    };
    source = id(net.source);
    terminal = id(net.terminal);
    for (const auto& e : net.edges) edges.emplace_back(id(e.a), id(e.b));
    nodes = static_cast<int>(handle.size());
  }

  bool works(const StateVector& s) const {
    return source == terminal || st_connected(nodes, edges, s, source, terminal);
  }
};

void require_size(const StateVector& s, std::size_t n) {
  if (s.size() != n)
    throw StructureError("state vector has " + std::to_string(s.size()) +
                         " entries, structure has " + std::to_string(n) +
                         " instances");
}

const Probability& lookup(const Environment& env, const std::string& id) {
  auto it = env.find(id);
  if (it == env.end())
    throw EvaluationError("no availability for component '" + id + "'");
  return it->second;
}

std::vector<Probability> instance_availabilities(const Block& b,
                                                 const Environment& env) {
  std::vector<Probability> out;
  for (const auto& id : leaves(b)) out.push_back(lookup(env, id));
  return out;
}

std::vector<Probability> instance_availabilities(const Network& net,
                                                 const Environment& env) {
  std::vector<Probability> out;
  for (const auto& e : net.edges) out.push_back(lookup(env, e.component_id));
  return out;
}

template <class Works>
Enumeration enumerate_states(const std::vector<Probability>& p, std::size_t cap,
                             Works works) {
  const std::size_t n = p.size();
  if (n > cap || n > 62)
    throw ResourceError(std::to_string(n) +
                        " instances exceed the enumeration cap of " +
                        std::to_string(std::min<std::size_t>(cap, 62)) +
                        "; use Monte Carlo mode instead");
  const std::uint64_t count = std::uint64_t{1} << n;
  double up_mass = 0.0;
  double down_mass = 0.0;
  StateVector state(n);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    double weight = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      bool up = (mask >> i) & 1U;
      state[i] = up;
      weight *= up ? p[i].value() : p[i].complement();
    }
    (works(state) ? up_mass : down_mass) += weight;
  }
  Enumeration out;
  out.total_mass = up_mass + down_mass;
  out.availability = Probability::from_parts(up_mass, down_mass);
  out.states = count;
  return out;
}

template <class Works>
MonteCarloResult sample(const std::vector<Probability>& p,
                        const MonteCarloOptions& options, Works works) {
  if (options.samples == 0)
    throw ValidationError("Monte Carlo needs at least one sample");
  const unsigned workers = options.workers == 0 ? 1 : options.workers;

  SplitMix64 master(options.seed);
  std::vector<std::uint64_t> seeds(workers);
  for (auto& s : seeds) s = master.next();

  std::vector<std::uint64_t> hits(workers, 0);
  auto run = [&](unsigned w) {
    std::uint64_t budget = options.samples / workers +
                           (w < options.samples % workers ? 1 : 0);
    SplitMix64 rng(seeds[w]);
    StateVector state(p.size());
    std::uint64_t h = 0;
    for (std::uint64_t i = 0; i < budget; ++i) {
      for (std::size_t j = 0; j < p.size(); ++j)
        state[j] = rng.uniform() < p[j].value();
      h += works(state);
    }
    hits[w] = h;
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  MonteCarloResult out;
  out.samples = options.samples;
  for (auto h : hits) out.hits += h;
  double n = static_cast<double>(out.samples);
  double estimate = static_cast<double>(out.hits) / n;
  out.estimate = Probability::from_parts(
      estimate, static_cast<double>(out.samples - out.hits) / n);
  out.half_width_95 = 1.96 * std::sqrt(estimate * (1.0 - estimate) / n);
  return out;
}

}  // namespace

std::size_t instance_count(const Block& b) { return leaves(b).size(); }
std::size_t instance_count(const Network& net) { return net.edges.size(); }

bool structure_function(const Block& b, const StateVector& s) {
  require_size(s, instance_count(b));
  std::size_t cursor = 0;
  return block_works(b, s, cursor);
}

bool structure_function(const Network& net, const StateVector& s) {
  require_size(s, instance_count(net));
  return CompiledNetwork(net).works(s);
}

Enumeration enumerate(const Block& b, const Environment& env,
                      std::size_t cap) {
  return enumerate_states(instance_availabilities(b, env), cap,
                          [&](const StateVector& s) {
                            std::size_t cursor = 0;
                            return block_works(b, s, cursor);
                          });
}

Enumeration enumerate(const Network& net, const Environment& env,
                      std::size_t cap) {
  CompiledNetwork compiled(net);
  return enumerate_states(
      instance_availabilities(net, env), cap,
      [&](const StateVector& s) { return compiled.works(s); });
}

Probability enumerate_availability(const Block& b, const Environment& env,
                                   std::size_t cap) {
  return enumerate(b, env, cap).availability;
}

Probability enumerate_availability(const Network& net, const Environment& env,
                                   std::size_t cap) {
  return enumerate(net, env, cap).availability;
}

MonteCarloResult monte_carlo_availability(const Block& b,
                                          const Environment& env,
                                          const MonteCarloOptions& options) {
  return sample(instance_availabilities(b, env), options,
                [&](const StateVector& s) {
                  std::size_t cursor = 0;
                  return block_works(b, s, cursor);
                });
}

MonteCarloResult monte_carlo_availability(const Network& net,
                                          const Environment& env,
                                          const MonteCarloOptions& options) {
  CompiledNetwork compiled(net);
  return sample(instance_availabilities(net, env), options,
                [&](const StateVector& s) { return compiled.works(s); });
}

}  // namespace rbdkit
