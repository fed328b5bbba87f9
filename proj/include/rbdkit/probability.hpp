/// @file probability.hpp
/// A probability value carried together with its complement.
#pragma once

#include <compare>

namespace rbdkit {

/// Probability in [0, 1] that also stores its complement.
///
/// Availability analysis mostly lives near 1, where `1 - p` loses the digits
/// that matter (unavailability, nines, downtime). Every Probability therefore
/// holds both the value and its complement, each computed as accurately as
/// the producing operation allows. The complement of a plain double is
/// computed from its shortest round-trip decimal form, so a value typed as
/// 0.9999 has complement exactly 1e-4 (the double nearest to it).
///
/// Construction accepts values up to 1e-12 outside [0, 1] and clamps them;
/// anything further out, or NaN, throws ValidationError.
class Probability {
 public:
  static constexpr double kTolerance = 1e-12;

  /// Zero.
  constexpr Probability() = default;

  explicit Probability(double value);

  /// Builds the probability whose complement is @p complement.
  static Probability from_complement(double complement);

  /// Builds from an independently computed value/complement pair. Both are
  /// range-checked; consistency between them is the caller's contract,
  /// except that an exact 0 on one side forces exactly 1 on the other.
  static Probability from_parts(double value, double complement);

  constexpr double value() const { return value_; }
  constexpr double complement() const { return complement_; }

  /// The complementary event. Exact involution.
  constexpr Probability operator~() const {
    Probability p;
    p.value_ = complement_;
    p.complement_ = value_;
    return p;
  }

  friend constexpr bool operator==(const Probability&,
                                   const Probability&) = default;

 private:
  double value_ = 0.0;
  double complement_ = 1.0;
};

/// Correctly rounded `1 - d`, where d is the shortest decimal string that
/// round-trips to @p x. Requires x in [0, 1].
double decimal_complement(double x);

}  // namespace rbdkit
