/// @file eval.cpp
#include "rbdkit/eval.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "rbdkit/error.hpp"

namespace rbdkit {
namespace {

void require_nonempty(std::span<const Probability> avails, const char* what) {
  if (avails.empty())
    throw StructureError(std::string(what) + " of zero elements");
}

// 1 - prod(1 - x_i) evaluated as -expm1(sum log1p(-x_i)), accurate when the
// result is small.
double union_of_small(std::span<const Probability> avails, bool use_value) {
  double log_none = 0.0;
  for (const auto& a : avails)
    log_none += std::log1p(-(use_value ? a.value() : a.complement()));
  return -std::expm1(log_none);
}

}  // namespace

Probability eval_series(std::span<const Probability> avails) {
  require_nonempty(avails, "series");
  if (avails.size() == 1) return avails.front();
  double all_up = avails.front().value();
  for (std::size_t i = 1; i < avails.size(); ++i) all_up *= avails[i].value();
  double any_down = union_of_small(avails, /*use_value=*/false);
  return Probability::from_parts(all_up, any_down);
}

Probability eval_parallel(std::span<const Probability> avails) {
  require_nonempty(avails, "parallel");
  if (avails.size() == 1) return avails.front();
  double all_down = avails.front().complement();
  double best = avails.front().value();
  for (std::size_t i = 1; i < avails.size(); ++i) {
    all_down *= avails[i].complement();
    best = std::max(best, avails[i].value());
  }
  // The union is never below its most available member; the max only
  // absorbs rounding.
  double any_up = std::max(1.0 - all_down, best);
  return Probability::from_parts(any_up, all_down);
}

Probability eval_kofn(int k, std::span<const Probability> avails) {
  require_nonempty(avails, "kofn");
  auto n = static_cast<long>(avails.size());
  if (k < 1 || k > n)
    throw StructureError("kofn requires 1 <= k <= N (k = " +
                         std::to_string(k) + ", N = " + std::to_string(n) +
                         ")");
  if (k == n) return eval_series(avails);
  if (k == 1) return eval_parallel(avails);

  // dist[j] = P(exactly j of the elements folded so far work).
  std::vector<double> dist(avails.size() + 1, 0.0);
  dist[0] = 1.0;
  for (std::size_t i = 0; i < avails.size(); ++i) {
    double up = avails[i].value();
    double down = avails[i].complement();
    for (std::size_t j = i + 1; j > 0; --j)
      dist[j] = dist[j] * down + dist[j - 1] * up;
    dist[0] *= down;
  }
  double enough = 0.0;
  double short_of_k = 0.0;
  for (long j = 0; j <= n; ++j) (j >= k ? enough : short_of_k) += dist[j];
  return Probability::from_parts(enough, short_of_k);
}

Probability condition(Probability p, Probability if_works, Probability if_fails) {
  // a * X + (1 - a) * X is not always X in floating point; the gap form is
  // monotone in p under rounding.
  const double hi = std::max(if_works.value(), if_fails.value());
  const double lo_q = std::min(if_works.complement(), if_fails.complement());
  double value = if_fails.value();
  if (p.value() == 1.0) value = hi;
  else if (p.value() > 0.0) value = std::min(hi, value + p.value() * (hi - value));
  double complement = if_fails.complement();
  if (p.complement() == 0.0) complement = lo_q;
  else if (p.complement() < 1.0)
    complement = std::min(complement, lo_q + p.complement() * (complement - lo_q));
  return Probability::from_parts(value, complement);
}

Probability eval_bridge(Probability a1, Probability a2, Probability a3,
                        Probability a4, Probability a5) {
  // Cross-link working: the two columns are each a parallel pair, in series.
  const Probability left[] = {a1, a2};
  const Probability right[] = {a4, a5};
  const Probability columns[] = {eval_parallel(left), eval_parallel(right)};
  Probability linked = eval_series(columns);

  // Cross-link failed: two disjoint series paths in parallel.
  const Probability upper[] = {a1, a4};
  const Probability lower[] = {a2, a5};
  const Probability paths[] = {eval_series(upper), eval_series(lower)};
  Probability unlinked = eval_parallel(paths);

  return condition(a3, linked, unlinked);
}

Probability eval_block(const Block& b, const Environment& env) {
  if (b.kind() == BlockKind::kLeaf) {
    auto it = env.find(b.component_id());
    if (it == env.end())
      throw EvaluationError("no availability for component '" +
                            b.component_id() + "'");
    return it->second;
  }

  std::vector<Probability> child;
  child.reserve(b.children().size());
  for (const auto& c : b.children()) child.push_back(eval_block(c, env));

  switch (b.kind()) {
    case BlockKind::kSeries:
      return eval_series(child);
    case BlockKind::kParallel:
      return eval_parallel(child);
    case BlockKind::kKofN:
      return eval_kofn(b.k(), child);
    case BlockKind::kBridge:
      if (child.size() != 5) throw StructureError("bridge needs 5 blocks");
      return eval_bridge(child[0], child[1], child[2], child[3], child[4]);
    case BlockKind::kLeaf:
      break;
  }
  throw StructureError("unknown block kind");
}

}  // namespace rbdkit
