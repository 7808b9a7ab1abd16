#include "tribodyn/tribonacci.hpp"

#include <cmath>
#include <mutex>
#include <string>

#include "cubic.hpp"
#include "tribodyn/errors.hpp"

namespace tribodyn {
namespace {

const detail::MonicCubic kTribonacciCubic{-1.0, -1.0, -1.0};

std::complex<double> omega() { return {-0.5, std::sqrt(3.0) / 2.0}; }

}  // namespace

TribCache::TribCache() : forward_{BigInt(0), BigInt(1), BigInt(1)} {}

TribCache& TribCache::global() {
  static TribCache cache;
  return cache;
}

std::pair<long, long> TribCache::range() const {
  std::shared_lock lock(mutex_);
  return {-static_cast<long>(backward_.size()), static_cast<long>(forward_.size()) - 1};
}

BigInt TribCache::value(long n) {
  {
    std::shared_lock lock(mutex_);
    if (n >= 0 && static_cast<std::size_t>(n) < forward_.size()) return forward_[n];
    if (n < 0 && static_cast<std::size_t>(-n - 1) < backward_.size()) return backward_[-n - 1];
  }
  std::unique_lock lock(mutex_);
  grow_to(n);
  return n >= 0 ? forward_[n] : backward_[-n - 1];
}

void TribCache::grow_to(long n) {
  auto at = [this](long k) -> const BigInt& {
    return k >= 0 ? forward_[k] : backward_[-k - 1];
  };
  while (n >= static_cast<long>(forward_.size())) {
    const long k = static_cast<long>(forward_.size());
    BigInt next = at(k - 1) + at(k - 2) + at(k - 3);
    forward_.push_back(std::move(next));
  }
  while (n < -static_cast<long>(backward_.size())) {
    const long k = -static_cast<long>(backward_.size()) - 1;
    BigInt next = at(k + 3) - at(k + 2) - at(k + 1);
    backward_.push_back(std::move(next));
  }
}

BigInt trib(long n) { return TribCache::global().value(n); }

CharacteristicRoots characteristic_roots_radical() {
  const double s33 = std::sqrt(33.0);
  const double u = std::cbrt(19.0 + 3.0 * s33);
  const double v = std::cbrt(19.0 - 3.0 * s33);
  const std::complex<double> w = omega();
  CharacteristicRoots r;
  r.alpha = (1.0 + u + v) / 3.0;
  r.beta = (1.0 + w * u + w * w * v) / 3.0;
  r.gamma = (1.0 + w * w * u + w * v) / 3.0;
  return r;
}

CharacteristicRoots characteristic_roots() {
  CharacteristicRoots r;
  r.alpha = detail::newton_polish(kTribonacciCubic, characteristic_roots_radical().alpha);
  const auto pair = detail::deflate(kTribonacciCubic, r.alpha);
  r.beta = pair[0];
  r.gamma = pair[1];
  return r;
}

double binet(long n) {
  if (n > kBinetMaxIndex || n < -kBinetMaxIndex) {
    throw Error(ErrorCode::IndexOutOfPrecisionRange,
                "binet: |n| = " + std::to_string(n < 0 ? -n : n) + " exceeds " +
                    std::to_string(kBinetMaxIndex));
  }
  const CharacteristicRoots r = characteristic_roots();
  const std::complex<double> a(r.alpha, 0.0);
  const std::complex<double> b = r.beta;
  const std::complex<double> g = r.gamma;
  const int e = static_cast<int>(n + 1);
  const std::complex<double> sum = std::pow(a, e) / ((a - b) * (a - g)) +
                                   std::pow(b, e) / ((b - a) * (b - g)) +
                                   std::pow(g, e) / ((g - a) * (g - b));
  return sum.real();
}

double ratio(long n, long r) {
  const BigInt den = trib(n);
  if (den == 0) {
    throw Error(ErrorCode::DivisionByZero, "ratio: trib(" + std::to_string(n) + ") is zero");
  }
  return Rational(trib(n + r), den).to_double();
}

}  // namespace tribodyn
