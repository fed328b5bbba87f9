/// @file model.cpp
#include "rbdkit/model.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "rbdkit/error.hpp"

namespace rbdkit {

void Model::add_component(Component c) {
  if (c.id.empty()) throw ValidationError("component id must not be empty");
  if (components.count(c.id))
    throw ValidationError("duplicate component '" + c.id + "'");
  std::string id = c.id;
  components.emplace(std::move(id), std::move(c));
}

const char* to_string(Severity s) {
  return s == Severity::kError ? "error" : "warning";
}

namespace {

class Validator {
 public:
  explicit Validator(const Model& m) : model_(m) {}

  std::vector<Diagnostic> run() {
    for (const auto& [id, c] : model_.components) check_component(c);
    if (const auto* block = std::get_if<Block>(&model_.system)) {
      check_block(*block, "system");
    } else {
      check_network(std::get<Network>(model_.system));
    }
    for (const auto& [id, c] : model_.components) {
      if (!used_.count(id))
        warn("components/" + id, "unused component '" + id + "'");
    }
    return std::move(out_);
  }

 private:
  void error(std::string path, std::string msg) {
    out_.push_back({Severity::kError, std::move(path), std::move(msg)});
  }
  void warn(std::string path, std::string msg) {
    out_.push_back({Severity::kWarning, std::move(path), std::move(msg)});
  }

  void check_component(const Component& c) {
    try {
      component_availability(c);
    } catch (const Error& e) {
      error("components/" + c.id, e.what());
    }
  }

  void reference(const std::string& id, const std::string& path) {
    if (model_.components.count(id)) {
      used_.insert(id);
    } else {
      error(path, "unresolved component '" + id + "'");
    }
  }

  void check_block(const Block& b, const std::string& path) {
    switch (b.kind()) {
      case BlockKind::kLeaf:
        reference(b.component_id(), path);
        return;
      case BlockKind::kBridge:
        if (b.children().size() != 5)
          error(path, "bridge needs exactly 5 blocks");
        break;
      case BlockKind::kKofN: {
        auto n = static_cast<long>(b.children().size());
        if (n == 0) {
          error(path, "kofn has no blocks");
        } else if (b.k() < 1) {
          error(path, "k must be at least 1");
        } else if (b.k() > n) {
          error(path, "k exceeds N (k = " + std::to_string(b.k()) +
                          ", N = " + std::to_string(n) + ")");
        }
        break;
      }
      case BlockKind::kSeries:
      case BlockKind::kParallel:
        if (b.children().empty())
          error(path, std::string(to_string(b.kind())) + " has no blocks");
        break;
    }
    for (std::size_t i = 0; i < b.children().size(); ++i)
      check_block(b.children()[i], path + "/" + std::to_string(i));
  }

  void check_network(const Network& net) {
    if (net.source.empty() || !net.nodes.count(net.source))
      error("network", "source node '" + net.source + "' is not in the network");
    if (net.terminal.empty() || !net.nodes.count(net.terminal))
      error("network",
            "terminal node '" + net.terminal + "' is not in the network");
    if (net.source == net.terminal)
      error("network", "source and terminal must differ");
    if (net.edges.empty()) error("network", "network has no edges");

    std::set<std::string> ids;
    for (std::size_t i = 0; i < net.edges.size(); ++i) {
      const auto& e = net.edges[i];
      std::string path = "network/edge[" + std::to_string(i) + "]";
      if (!ids.insert(e.id).second)
        error(path, "duplicate edge id '" + e.id + "'");
      if (!net.nodes.count(e.a) || !net.nodes.count(e.b))
        error(path, "edge endpoint is not a network node");
      reference(e.component_id, path);
    }

    if (!net.source.empty() && !net.terminal.empty() &&
        net.source != net.terminal && !connected(net))
      warn("network",
           "terminal is unreachable from source even with every component "
           "working; availability is 0");
  }

  static bool connected(const Network& net) {
    std::set<std::string> seen{net.source};
    std::vector<std::string> stack{net.source};
    while (!stack.empty()) {
      std::string node = std::move(stack.back());
      stack.pop_back();
      for (const auto& e : net.edges) {
        const std::string* next = nullptr;
        if (e.a == node) next = &e.b;
        else if (e.b == node) next = &e.a;
        if (next && seen.insert(*next).second) stack.push_back(*next);
      }
    }
    return seen.count(net.terminal) > 0;
  }

  const Model& model_;
  std::set<std::string> used_;
  std::vector<Diagnostic> out_;
};

}  // namespace

std::vector<Diagnostic> validate(const Model& m) { return Validator(m).run(); }

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) {
                       return d.severity == Severity::kError;
                     });
}

Environment make_environment(const Model& m) {
  Environment env;
  for (const auto& [id, c] : m.components)
    env.emplace(id, component_availability(c));
  return env;
}

}  // namespace rbdkit
