/// @file netgraph.cpp
#include "rbdkit/netgraph.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rbdkit/error.hpp"
#include "rbdkit/eval.hpp"
#include "rbdkit/oracle.hpp"

namespace rbdkit {

void Network::add_edge(std::string id, std::string a, std::string b,
                       std::string component_id) {
  nodes.insert(a);
  nodes.insert(b);
  edges.push_back(
      {std::move(id), std::move(a), std::move(b), std::move(component_id)});
}

Network bridge_network(const std::vector<std::string>& component_ids) {
  if (component_ids.size() != 5)
    throw StructureError("bridge network needs 5 components");
  Network net;
  net.source = "s";
  net.terminal = "t";
  const char* ends[5][2] = {
      {"s", "u"}, {"s", "v"}, {"u", "v"}, {"u", "t"}, {"v", "t"}};
  for (int i = 0; i < 5; ++i)
    net.add_edge(component_ids[i], ends[i][0], ends[i][1], component_ids[i]);
  return net;
}

namespace {

struct Edge {
  std::string id;
  int a = 0;
  int b = 0;
  Probability p;
  std::string component;
  bool synthetic = false;
};

// Working copy with integer node handles. Nodes never disappear from the
// handle space; a node is "present" while some edge touches it.
struct Graph {
  int nodes = 0;
  int source = 0;
  int terminal = 0;
  std::vector<Edge> edges;

  std::vector<int> degrees() const {
    std::vector<int> deg(nodes, 0);
    for (const auto& e : edges) {
      ++deg[e.a];
      ++deg[e.b];
    }
    return deg;
  }
};

bool remove_self_loops(Graph& g) {
  auto it = std::remove_if(g.edges.begin(), g.edges.end(),
                           [](const Edge& e) { return e.a == e.b; });
  bool changed = it != g.edges.end();
  g.edges.erase(it, g.edges.end());
  return changed;
}

std::vector<bool> reachable_from_source(const Graph& g) {
  std::vector<bool> seen(g.nodes, false);
  std::vector<int> stack{g.source};
  seen[g.source] = true;
  while (!stack.empty()) {
    int node = stack.back();
    stack.pop_back();
    for (const auto& e : g.edges) {
      int next = e.a == node ? e.b : e.b == node ? e.a : -1;
      if (next >= 0 && !seen[next]) {
        seen[next] = true;
        stack.push_back(next);
      }
    }
  }
  return seen;
}

bool remove_unreachable(Graph& g, const std::vector<bool>& seen) {
  auto it = std::remove_if(g.edges.begin(), g.edges.end(),
                           [&](const Edge& e) { return !seen[e.a]; });
  bool changed = it != g.edges.end();
  g.edges.erase(it, g.edges.end());
  return changed;
}

bool merge_parallel(Graph& g) {
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    auto key = std::minmax(g.edges[i].a, g.edges[i].b);
    for (std::size_t j = i + 1; j < g.edges.size(); ++j) {
      if (std::minmax(g.edges[j].a, g.edges[j].b) != key) continue;
      Edge& first = g.edges[i];
      const Probability pair[] = {first.p, g.edges[j].p};
      first.p = eval_parallel(pair);
      first.id = "(" + first.id + "|" + g.edges[j].id + ")";
      first.component = first.id;
      first.synthetic = true;
      g.edges.erase(g.edges.begin() + static_cast<long>(j));
      return true;
    }
  }
  return false;
}

bool prune_or_fuse(Graph& g) {
  std::vector<int> deg = g.degrees();
  for (int node = 0; node < g.nodes; ++node) {
    if (node == g.source || node == g.terminal) continue;
    if (deg[node] == 1) {
      g.edges.erase(std::find_if(g.edges.begin(), g.edges.end(),
                                 [&](const Edge& e) {
                                   return e.a == node || e.b == node;
                                 }));
      return true;
    }
    if (deg[node] == 2) {
      std::size_t first = g.edges.size();
      std::size_t second = g.edges.size();
      for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (g.edges[i].a != node && g.edges[i].b != node) continue;
        (first == g.edges.size() ? first : second) = i;
      }
      Edge& e1 = g.edges[first];
      const Edge& e2 = g.edges[second];
      int end1 = e1.a == node ? e1.b : e1.a;
      int end2 = e2.a == node ? e2.b : e2.a;
      const Probability chain[] = {e1.p, e2.p};
      e1.p = eval_series(chain);
      e1.id = "(" + e1.id + "." + e2.id + ")";
      e1.a = end1;
      e1.b = end2;
      e1.component = e1.id;
      e1.synthetic = true;
      g.edges.erase(g.edges.begin() + static_cast<long>(second));
      return true;
    }
  }
  return false;
}

// Returns false when the terminal is unreachable.
bool reduce_graph(Graph& g) {
  for (;;) {
    if (remove_self_loops(g)) continue;
    std::vector<bool> seen = reachable_from_source(g);
    if (!seen[g.terminal]) {
      g.edges.clear();
      return false;
    }
    if (remove_unreachable(g, seen)) continue;
    if (merge_parallel(g)) continue;
    if (prune_or_fuse(g)) continue;
    return true;
  }
}

Graph to_graph(const Network& net, const Environment& env) {
  std::map<std::string, int, std::less<>> handle;
  for (const auto& n : net.nodes) handle.emplace(n, static_cast<int>(handle.size()));
  auto node = [&](const std::string& name) {
    auto it = handle.find(name);
    if (it == handle.end())
      throw StructureError("node '" + name + "' is not in the network");
    return it->second;
  };
  Graph g;
  g.nodes = static_cast<int>(handle.size());
  g.source = node(net.source);
  g.terminal = node(net.terminal);
  if (g.source == g.terminal)
    throw StructureError("source and terminal must differ");
  for (const auto& e : net.edges) {
    auto it = env.find(e.component_id);
    if (it == env.end())
      throw EvaluationError("no availability for component '" +
                            e.component_id + "'");
    g.edges.push_back({e.id, node(e.a), node(e.b), it->second, e.component_id});
  }
  return g;
}

std::size_t default_pivot(const Graph& g) {
  std::vector<int> deg = g.degrees();
  std::size_t best = 0;
  int best_score = -1;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    int score = deg[g.edges[i].a] + deg[g.edges[i].b];
    if (score > best_score ||
        (score == best_score && g.edges[i].id < g.edges[best].id)) {
      best = i;
      best_score = score;
    }
  }
  return best;
}

class Factoring {
 public:
  explicit Factoring(const FactoringOptions& options) : options_(options) {
    if (options.random_pivot_seed) rng_.emplace(*options.random_pivot_seed);
  }

  Probability eval(Graph g, int depth) {
    if (!reduce_graph(g)) return Probability(0.0);
    if (g.edges.size() == 1) return g.edges.front().p;
    // A reduced, connected network always has >= 1 edge; more than one
    // means an irreducible core remains.
    if (depth >= options_.max_pivot_depth)
      throw ResourceError(
          "pivot depth limit of " + std::to_string(options_.max_pivot_depth) +
          " reached; use the Monte Carlo oracle for networks this large");

    std::size_t pivot = rng_ ? rng_->below(g.edges.size()) : default_pivot(g);
    Edge edge = g.edges[pivot];

    Graph deleted = g;
    deleted.edges.erase(deleted.edges.begin() + static_cast<long>(pivot));

    Probability merged_result;
    if (std::minmax(edge.a, edge.b) == std::minmax(g.source, g.terminal)) {
      merged_result = Probability(1.0);
    } else {
      Graph merged = std::move(g);
      merged.edges.erase(merged.edges.begin() + static_cast<long>(pivot));
      int keep = edge.a;
      int drop = edge.b;
      if (drop == merged.source || drop == merged.terminal) std::swap(keep, drop);
      for (auto& e : merged.edges) {
        if (e.a == drop) e.a = keep;
        if (e.b == drop) e.b = keep;
      }
      merged_result = eval(std::move(merged), depth + 1);
    }
    Probability deleted_result = eval(std::move(deleted), depth + 1);

    return condition(edge.p, merged_result, deleted_result);
  }

 private:
  FactoringOptions options_;
  std::optional<SplitMix64> rng_;
};

}  // namespace

Reduction reduce(const Network& net, const Environment& env) {
  Graph g = to_graph(net, env);
  std::vector<std::string> names(net.nodes.begin(), net.nodes.end());

  Reduction out;
  out.connected = reduce_graph(g);
  out.network.source = net.source;
  out.network.terminal = net.terminal;
  out.network.nodes.insert(net.source);
  out.network.nodes.insert(net.terminal);
  for (const auto& e : g.edges) {
    if (e.synthetic) out.synthetic.emplace(e.component, e.p);
    out.network.add_edge(e.id, names[e.a], names[e.b], e.component);
  }
  return out;
}

Probability eval_network(const Network& net, const Environment& env,
                         const FactoringOptions& options) {
  return Factoring(options).eval(to_graph(net, env), 0);
}

}  // namespace rbdkit
