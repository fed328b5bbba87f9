/// @file oracle.hpp
/// Brute-force verification engines that share no code path with the exact
/// evaluators: exhaustive joint-state enumeration and a seeded Monte Carlo
/// sampler, both driven by the boolean structure function.
///
/// Instances are the leaf occurrences of a Block (depth-first, left to right,
/// as returned by leaves()) or the edges of a Network in list order. Repeated
/// references to one component are independent instances.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rbdkit/block.hpp"
#include "rbdkit/model.hpp"
#include "rbdkit/network.hpp"
#include "rbdkit/probability.hpp"

namespace rbdkit {

/// SplitMix64 (Steele, Lea, Flood 2014):
///
///   state += 0x9E3779B97F4A7C15
///   z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
///
/// Specified by its constants so other implementations can reproduce the
/// exact sample streams.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// next() % n; n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

/// Working (true) / failed (false) per instance.
using StateVector = std::vector<bool>;

std::size_t instance_count(const Block& b);
std::size_t instance_count(const Network& net);

/// Does the system work in state @p s? Series: all children; Parallel: any;
/// KofN: at least k; Bridge and Network: source-terminal connectivity over
/// working edges. Throws StructureError if @p s has the wrong size.
bool structure_function(const Block& b, const StateVector& s);
bool structure_function(const Network& net, const StateVector& s);

struct Enumeration {
  /// value: mass of working states; complement: mass of failed states.
  Probability availability;
  /// Mass over all 2^n states; 1 up to rounding.
  double total_mass = 0.0;
  std::uint64_t states = 0;
};

constexpr std::size_t kDefaultEnumerationCap = 20;

/// Sums the probability of every joint state in which the structure works.
/// Throws ResourceError when the instance count exceeds @p cap.
Enumeration enumerate(const Block& b, const Environment& env,
                      std::size_t cap = kDefaultEnumerationCap);
Enumeration enumerate(const Network& net, const Environment& env,
                      std::size_t cap = kDefaultEnumerationCap);

Probability enumerate_availability(const Block& b, const Environment& env,
                                   std::size_t cap = kDefaultEnumerationCap);
Probability enumerate_availability(const Network& net, const Environment& env,
                                   std::size_t cap = kDefaultEnumerationCap);

struct MonteCarloOptions {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  /// Sample budget split: worker w draws samples / workers draws, plus one
  /// for w < samples % workers. Worker w seeds its own SplitMix64 with the
  /// (w+1)-th output of SplitMix64(seed). Within a sample, instances draw in
  /// instance order and an instance works iff uniform() < availability.
  unsigned workers = 1;
};

struct MonteCarloResult {
  Probability estimate;
  /// 1.96 * sqrt(p (1 - p) / n).
  double half_width_95 = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
};

MonteCarloResult monte_carlo_availability(const Block& b,
                                          const Environment& env,
                                          const MonteCarloOptions& options);
MonteCarloResult monte_carlo_availability(const Network& net,
                                          const Environment& env,
                                          const MonteCarloOptions& options);

}  // namespace rbdkit
