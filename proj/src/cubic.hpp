#pragma once

#include <array>
#include <complex>

namespace tribodyn::detail {

// Monic cubic x^3 + c2 x^2 + c1 x + c0.
struct MonicCubic {
  double c2, c1, c0;

  double operator()(double x) const { return ((x + c2) * x + c1) * x + c0; }
  double derivative(double x) const { return (3.0 * x + 2.0 * c2) * x + c1; }
};

inline constexpr int kNewtonMaxIterations = 50;
inline constexpr double kNewtonStepTolerance = 1e-15;

inline double newton_polish(const MonicCubic& p, double seed) {
  double x = seed;
  for (int i = 0; i < kNewtonMaxIterations; ++i) {
    const double d = p.derivative(x);
    if (d == 0.0) break;
    const double step = p(x) / d;
    x -= step;
    if (std::abs(step) < kNewtonStepTolerance) break;
  }
  return x;
}

// Remaining two roots after dividing out the real root r.
inline std::array<std::complex<double>, 2> deflate(const MonicCubic& p, double r) {
  const double b = p.c2 + r;
  const double c = p.c1 + r * b;
  const std::complex<double> disc = std::sqrt(std::complex<double>(b * b - 4.0 * c, 0.0));
  // Conjugate pair: positive imaginary part first.
  std::array<std::complex<double>, 2> roots{(-b + disc) / 2.0, (-b - disc) / 2.0};
  if (roots[0].imag() < roots[1].imag()) std::swap(roots[0], roots[1]);
  return roots;
}

}  // namespace tribodyn::detail
