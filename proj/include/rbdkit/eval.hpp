/// @file eval.hpp
/// Exact availability of reliability block diagrams with independent
/// components.
///
/// Every function returns a Probability whose value follows the textbook
/// formula and whose complement is computed on the unavailability side
/// directly, so results close to 1 keep their significant digits in the
/// complement. Products and sums run left to right over the stored order;
/// results are bit-reproducible.
#pragma once

#include <span>

#include "rbdkit/block.hpp"
#include "rbdkit/model.hpp"
#include "rbdkit/probability.hpp"

namespace rbdkit {

/// All elements must work: prod(A_i).
Probability eval_series(std::span<const Probability> avails);

/// At least one element works: 1 - prod(1 - A_i).
Probability eval_parallel(std::span<const Probability> avails);

/// At least @p k of the independent elements work.
///
/// Heterogeneous availabilities are handled with the Poisson-binomial
/// counting recurrence (O(N^2)); for identical availabilities this is the
/// binomial tail sum_{i=k}^{N} C(N,i) A^i (1-A)^{N-i}. k == N and k == 1
/// delegate to eval_series and eval_parallel.
Probability eval_kofn(int k, std::span<const Probability> avails);

/// Total probability over one element p: p * if_works + (1 - p) * if_fails.
/// Requires if_works >= if_fails (a working element never hurts). Computed
/// as if_fails + p * (if_works - if_fails), and the complement likewise, so
/// rounding never makes the result fall as p rises; p == 0 and p == 1 return
/// the branches exactly.
Probability condition(Probability p, Probability if_works, Probability if_fails);

/// Five-element bridge conditioned on the cross-link a3:
///
///   A = a3 * (a1 + a2 - a1 a2)(a4 + a5 - a4 a5)
///     + (1 - a3) * (1 - (1 - a1 a4)(1 - a2 a5))
Probability eval_bridge(Probability a1, Probability a2, Probability a3,
                        Probability a4, Probability a5);

/// Recursive evaluation of @p b. Throws EvaluationError naming the
/// component when a leaf has no entry in @p env, StructureError for
/// malformed nodes.
Probability eval_block(const Block& b, const Environment& env);

}  // namespace rbdkit
