#pragma once

#include <complex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "tribodyn/rational.hpp"

namespace tribodyn {

/// Memoized Tribonacci numbers over a contiguous signed index range.
///
/// Starts at [0, 2] and grows on demand in either direction: forward with
/// T(n+3) = T(n+2) + T(n+1) + T(n), backward with T(n) = T(n+3) - T(n+2) - T(n+1).
/// Lookups take a shared lock; growth takes the exclusive lock.
class TribCache {
 public:
  TribCache();

  BigInt value(long n);

  /// Current [lo, hi] index range held in the cache.
  std::pair<long, long> range() const;

  /// Process-wide instance used by `trib()`.
  static TribCache& global();

 private:
  void grow_to(long n);

  mutable std::shared_mutex mutex_;
  std::vector<BigInt> forward_;   // forward_[i] = T(i)
  std::vector<BigInt> backward_;  // backward_[i] = T(-(i + 1))
};

/// Exact Tribonacci number for any signed index.
BigInt trib(long n);

struct CharacteristicRoots {
  double alpha = 0.0;
  std::complex<double> beta;
  std::complex<double> gamma;
};

/// Roots of x^3 - x^2 - x - 1. The real root is seeded from Cardano's radical
/// form and Newton-polished; the complex pair comes from quadratic deflation.
CharacteristicRoots characteristic_roots();

/// The same roots taken straight from the radical expressions (with the
/// primitive cube root of unity), without any refinement.
CharacteristicRoots characteristic_roots_radical();

/// Largest |n| accepted by `binet`.
inline constexpr long kBinetMaxIndex = 70;

/// Three-term Binet sum, real part. Throws IndexOutOfPrecisionRange for |n| > 70.
double binet(long n);

/// trib(n + r) / trib(n), evaluated exactly and rounded once. Throws
/// DivisionByZero when trib(n) is zero.
double ratio(long n, long r);

}  // namespace tribodyn
