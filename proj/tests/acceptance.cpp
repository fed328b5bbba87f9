/// @file acceptance.cpp
/// Acceptance run: one PASS/FAIL line per criterion with the measured error.
/// Exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rbdkit/analysis.hpp"
#include "rbdkit/cli.hpp"
#include "rbdkit/dsl.hpp"
#include "rbdkit/eval.hpp"
#include "rbdkit/maintainability.hpp"
#include "rbdkit/netgraph.hpp"
#include "rbdkit/oracle.hpp"
#include "rbdkit/report.hpp"
#include "support/brute_force.hpp"
#include "support/random_models.hpp"

namespace {

using namespace rbdkit;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

double binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

Block bridge_block() {
  return Block::bridge(Block::leaf("c1"), Block::leaf("c2"), Block::leaf("c3"),
                       Block::leaf("c4"), Block::leaf("c5"));
}

// 1. Four nines from a typed decimal.
Outcome four_nines() {
  ParseResult r = parse_model("component a { availability = 0.9999 }\nsystem = a\n");
  if (!r.ok()) return {false, "model did not parse"};
  Probability a = evaluate(*r.model);
  auto n = nines(a);
  bool pass = a.complement() == 1.0e-4 && n == 4;
  return {pass, "unavailability " + format_sig17(a.complement()) + ", nines " +
                    (n ? std::to_string(*n) : "inf")};
}

// 2. Heterogeneous 2-of-3 against its polynomial.
Outcome two_of_three() {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    double a1 = u(rng), a2 = u(rng), a3 = u(rng);
    const Probability xs[] = {Probability(a1), Probability(a2), Probability(a3)};
    double poly = a1 * a2 + a1 * a3 + a2 * a3 - 2 * a1 * a2 * a3;
    worst = std::max(worst, std::abs(eval_kofn(2, xs).value() - poly));
  }
  return {worst < 1e-12, "max error " + fmt("%.3g", worst)};
}

// 3. Homogeneous k-of-n against the binomial tail.
Outcome homogeneous_kofn() {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    double a = u(rng);
    for (int n = 1; n <= 12; ++n) {
      std::vector<Probability> xs(n, Probability(a));
      for (int k = 1; k <= n; ++k) {
        double tail = 0.0;
        for (int i = k; i <= n; ++i)
          tail += binomial(n, i) * std::pow(a, i) * std::pow(1 - a, n - i);
        worst = std::max(worst, std::abs(eval_kofn(k, xs).value() - tail));
      }
    }
  }
  return {worst < 1e-12, "max error " + fmt("%.3g", worst)};
}

// 4. Bridge: closed form, factoring, expanded formula and enumeration.
Outcome bridge() {
  const std::vector<std::string> ids = {"c1", "c2", "c3", "c4", "c5"};
  const Network net = bridge_network(ids);
  const Block blk = bridge_block();
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    std::vector<double> a(5);
    Environment env;
    for (int j = 0; j < 5; ++j) {
      a[j] = u(rng);
      env.emplace(ids[j], Probability(a[j]));
    }
    double expanded =
        a[2] * (a[0] + a[1] - a[0] * a[1]) * (a[3] + a[4] - a[3] * a[4]) +
        (1 - a[2]) * (1 - (1 - a[0] * a[3]) * (1 - a[1] * a[4]));
    const double values[] = {
        eval_bridge(env.at("c1"), env.at("c2"), env.at("c3"), env.at("c4"),
                    env.at("c5")).value(),
        eval_network(net, env).value(),
        enumerate(blk, env).availability.value(),
        enumerate(net, env).availability.value(),
        testing::brute_force(a, testing::bridge_works),
    };
    for (double v : values) worst = std::max(worst, std::abs(v - expanded));
  }
  Environment nine;
  for (const auto& id : ids) nine.emplace(id, Probability(0.9));
  double closed = eval_bridge(nine.at("c1"), nine.at("c2"), nine.at("c3"),
                              nine.at("c4"), nine.at("c5")).value();
  double factored = eval_network(net, nine).value();
  double off = std::max(std::abs(closed - 0.97848), std::abs(factored - 0.97848));
  return {worst < 1e-10 && off <= 1e-12,
          "max error " + fmt("%.3g", worst) + ", all-0.9 gives " +
              format_sig17(closed) + " (off by " + fmt("%.3g", off) + ")"};
}

// 5. Mean down time and the derived availability.
Outcome mean_down_time_example() {
  MaintainabilityParams p{2, 4, 1, Probability(0.99), 168};
  double mdt = mean_down_time(p);
  Component c{"pump", DerivedAvailability{100000, p}};
  double a = component_availability(c).value();
  double expected = 100000.0 / 100008.68;
  double rel = std::abs(a - expected) / expected;
  return {mdt == 8.68 && rel <= 1e-15,
          "mdt " + format_shortest(mdt) + " h, relative error " + fmt("%.3g", rel)};
}

struct Corpus {
  std::vector<testing::RandomBlock> blocks;
  std::vector<testing::RandomNetwork> networks;
};

const Corpus& corpus() {
  static const Corpus c = [] {
    Corpus out;
    std::mt19937_64 rng(6);
    testing::BlockGenerator gen(rng, 4, 15);
    for (int i = 0; i < 500; ++i) out.blocks.push_back(gen());
    for (int i = 0; i < 200; ++i) out.networks.push_back(testing::random_network(rng, 12));
    return out;
  }();
  return c;
}

// 6. Exact evaluators against exhaustive enumeration.
Outcome oracle_fuzz() {
  double worst = 0.0;
  int failures = 0;
  for (const auto& rb : corpus().blocks) {
    double err = std::abs(eval_block(rb.block, rb.env).value() -
                          enumerate(rb.block, rb.env).availability.value());
    worst = std::max(worst, err);
    failures += err >= 1e-10;
  }
  for (const auto& rn : corpus().networks) {
    double err = std::abs(eval_network(rn.network, rn.env).value() -
                          enumerate(rn.network, rn.env).availability.value());
    worst = std::max(worst, err);
    failures += err >= 1e-10;
  }
  return {failures == 0, std::to_string(corpus().blocks.size()) + " trees, " +
                             std::to_string(corpus().networks.size()) +
                             " networks, max error " + fmt("%.3g", worst)};
}

// 7. Series/parallel sandwich and single-component monotonicity.
template <class System, class Eval>
void coherence(const System& sys, const Environment& env, Eval eval,
               std::mt19937_64& rng, int& sandwich, int& monotone) {
  std::vector<Probability> all;
  for (const auto& [id, p] : env) all.push_back(p);
  Probability a = eval(sys, env);
  if (eval_series(all).value() > a.value() || a.value() > eval_parallel(all).value())
    ++sandwich;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const auto& [id, p] : env) {
    Environment raised = env;
    raised[id] = Probability(p.value() + (1.0 - p.value()) * u(rng));
    Probability b = eval(sys, raised);
    if (b.value() < a.value() || b.complement() > a.complement()) ++monotone;
  }
}

Outcome coherence_properties() {
  std::mt19937_64 rng(7);
  int sandwich = 0, monotone = 0;
  for (const auto& rb : corpus().blocks)
    coherence(rb.block, rb.env,
              [](const Block& b, const Environment& e) { return eval_block(b, e); },
              rng, sandwich, monotone);
  for (const auto& rn : corpus().networks)
    coherence(rn.network, rn.env,
              [](const Network& n, const Environment& e) { return eval_network(n, e); },
              rng, sandwich, monotone);
  return {sandwich == 0 && monotone == 0,
          std::to_string(sandwich) + " sandwich and " + std::to_string(monotone) +
              " monotonicity violations"};
}

// 8. Seeded Monte Carlo on the bridge.
Outcome monte_carlo() {
  Environment env;
  for (const char* id : {"c1", "c2", "c3", "c4", "c5"}) env.emplace(id, Probability(0.9));
  MonteCarloOptions opts;
  opts.samples = 1'000'000;
  opts.seed = 7;
  MonteCarloResult first = monte_carlo_availability(bridge_block(), env, opts);
  MonteCarloResult second = monte_carlo_availability(bridge_block(), env, opts);
  double diff = std::abs(first.estimate.value() - 0.97848);
  bool same = first.hits == second.hits && first.estimate == second.estimate &&
              first.half_width_95 == second.half_width_95;
  return {diff <= 4 * first.half_width_95 && same,
          "estimate " + format_sig17(first.estimate.value()) + ", " +
              fmt("%.2f", diff / first.half_width_95) + " half-widths off, " +
              (same ? "reproducible" : "NOT reproducible")};
}

// 9. CLI output against stored goldens.
Outcome cli_goldens() {
  namespace fs = std::filesystem;
  const std::string model = RBDKIT_TEST_DATA_DIR "/bridge.rbd";
  struct Case {
    const char* golden;
    std::vector<std::string> args;
  };
  const std::vector<Case> cases = {
      {"eval.json", {"eval", model, "--format", "json"}},
      {"check.json", {"check", model, "--format", "json"}},
      {"oracle_enumerate.json", {"oracle", model, "--mode", "enumerate", "--format", "json"}},
      {"oracle_mc.json",
       {"oracle", model, "--mode", "mc", "--samples", "1000000", "--seed", "7", "--format", "json"}},
      {"whatif.json", {"whatif", model, "--set", "c3.availability=1.0", "--format", "json"}},
  };
  std::string mismatched;
  for (const auto& c : cases) {
    std::ifstream in(fs::path(RBDKIT_TEST_GOLDEN_DIR) / c.golden, std::ios::binary);
    std::stringstream expected;
    expected << in.rdbuf();
    std::ostringstream out, err;
    int code = cli::run(c.args, out, err);
    if (!in || code != cli::kOk || out.str() != expected.str())
      mismatched += std::string(mismatched.empty() ? "" : ", ") + c.golden;
  }
  return {mismatched.empty(), mismatched.empty()
                                  ? std::to_string(cases.size()) + " goldens byte-identical"
                                  : "mismatch: " + mismatched};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria = {
      {"four nines from availability 0.9999", four_nines},
      {"2-of-3 against its polynomial", two_of_three},
      {"homogeneous k-of-n against the binomial tail", homogeneous_kofn},
      {"bridge: closed form, factoring, expansion, enumeration", bridge},
      {"mean down time and derived availability", mean_down_time_example},
      {"random models against exhaustive enumeration", oracle_fuzz},
      {"sandwich bounds and monotonicity", coherence_properties},
      {"seeded Monte Carlo on the bridge", monte_carlo},
      {"CLI goldens", cli_goldens},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::printf("[%s] %zu. %s: %s (%.0f ms)\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].name, o.detail.c_str(), ms);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
