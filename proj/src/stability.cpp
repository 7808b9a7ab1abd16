#include "tribodyn/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>
#include <gmpxx.h>

#include "cubic.hpp"
#include "tribodyn/errors.hpp"

namespace tribodyn {
namespace {

detail::MonicCubic equilibrium_polynomial(SystemKind kind) {
  return kind == SystemKind::Plus ? detail::MonicCubic{1.0, 1.0, -1.0}
                                  : detail::MonicCubic{-1.0, 1.0, 1.0};
}

// Roots of l^2 + p l + q, larger imaginary part first.
std::array<std::complex<double>, 2> quadratic_roots(double p, double q) {
  const std::complex<double> disc = std::sqrt(std::complex<double>(p * p - 4.0 * q, 0.0));
  return {(-p + disc) / 2.0, (-p - disc) / 2.0};
}

StabilityReport finish(Spectrum spectrum) {
  StabilityReport r;
  r.eigenvalues = spectrum;
  for (std::size_t i = 0; i < 4; ++i) r.moduli[i] = std::abs(spectrum[i]);
  r.verdict = classify(r.moduli);
  return r;
}

}  // namespace

double equilibrium_cubic(SystemKind kind, double v) { return equilibrium_polynomial(kind)(v); }

double equilibrium_radical(SystemKind kind) {
  const double s = 3.0 * std::sqrt(33.0);
  const double u = std::cbrt(s + 17.0);
  const double w = std::cbrt(s - 17.0);
  return kind == SystemKind::Plus ? (-1.0 + u - w) / 3.0 : (1.0 + w - u) / 3.0;
}

EquilibriumReport equilibrium(SystemKind kind) {
  const detail::MonicCubic p = equilibrium_polynomial(kind);
  EquilibriumReport r;
  r.kind = kind;
  r.value = detail::newton_polish(p, equilibrium_radical(kind));
  r.residual = std::abs(p(r.value));
  r.complex_pair = detail::deflate(p, r.value);
  return r;
}

Matrix4 jacobian(SystemKind kind) {
  const double v = equilibrium(kind).value;
  const double v3 = v * v * v;
  const double coupling = kind == SystemKind::Plus ? v - 1.0 : -(1.0 + v);
  const double lag = kind == SystemKind::Plus ? -v3 : v3;
  Matrix4 b;
  b << 0.0, lag, coupling, 0.0,
       1.0, 0.0, 0.0, 0.0,
       coupling, 0.0, 0.0, lag,
       0.0, 0.0, 1.0, 0.0;
  return b;
}

Matrix4 jacobian_unsimplified(SystemKind kind) {
  const double v = equilibrium(kind).value;
  double lag = 0.0;
  double coupling = 0.0;
  if (kind == SystemKind::Plus) {
    const double den = v * (v + 1.0) + 1.0;
    lag = -v / (den * den);
    coupling = -(1.0 + v) / (den * den);
  } else {
    const double den = v * (v - 1.0) + 1.0;
    lag = v / (den * den);
    coupling = (v - 1.0) / (den * den);
  }
  Matrix4 b;
  b << 0.0, lag, coupling, 0.0,
       1.0, 0.0, 0.0, 0.0,
       coupling, 0.0, 0.0, lag,
       0.0, 0.0, 1.0, 0.0;
  return b;
}

Spectrum eigenvalues(SystemKind kind) {
  const double v = equilibrium(kind).value;
  const double v3 = v * v * v;
  // plus:  (l^2 + (a-1) l + a^3)(l^2 - (a-1) l + a^3)
  // minus: (l^2 - (1+d) l - d^3)(l^2 + (1+d) l - d^3)
  const double p = kind == SystemKind::Plus ? v - 1.0 : -(1.0 + v);
  const double q = kind == SystemKind::Plus ? v3 : -v3;
  const auto first = quadratic_roots(p, q);
  const auto second = quadratic_roots(-p, q);
  return {first[0], first[1], second[0], second[1]};
}

Spectrum eigenvalues_general(const Matrix4& m) {
  Eigen::EigenSolver<Matrix4> solver(m, /*computeEigenvectors=*/false);
  const auto ev = solver.eigenvalues();
  return {ev[0], ev[1], ev[2], ev[3]};
}

double spectrum_distance(const Spectrum& a, const Spectrum& b) {
  std::array<bool, 4> used{};
  double worst = 0.0;
  for (const auto& x : a) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < 4; ++j) {
      if (used[j]) continue;
      const double d = std::abs(x - b[j]);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    used[best] = true;
    worst = std::max(worst, best_d);
  }
  return worst;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::LocallyAsymptoticallyStable: return "locally_asymptotically_stable";
    case Verdict::Unstable: return "unstable";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

Verdict classify(std::span<const double> moduli) {
  double largest = 0.0;
  for (double m : moduli) largest = std::max(largest, m);
  if (std::abs(largest - 1.0) <= kUnitCircleTolerance) return Verdict::Inconclusive;
  return largest < 1.0 ? Verdict::LocallyAsymptoticallyStable : Verdict::Unstable;
}

StabilityReport stability_verdict(SystemKind kind) {
  StabilityReport r = finish(eigenvalues(kind));
  r.kind = kind;
  r.equilibrium = equilibrium(kind).value;
  return r;
}

StabilityReport stability_verdict(const Matrix4& m) {
  StabilityReport r = finish(eigenvalues_general(m));
  r.equilibrium = std::numeric_limits<double>::quiet_NaN();
  return r;
}

ConvergenceResult convergence_test(SystemKind kind, const InitialConditions& inits, double tol,
                                   long n_max) {
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "convergence_test: tol must be > 0");
  }
  if (n_max < 0) {
    throw Error(ErrorCode::InvalidArgument,
                "convergence_test: n_max must be >= 0, got " + std::to_string(n_max));
  }
  const double target = equilibrium(kind).value;
  auto error_of = [target](const Rational& x, const Rational& y) {
    return std::max(std::abs(x.to_double() - target), std::abs(y.to_double() - target));
  };

  ConvergenceResult result;
  result.final_error = error_of(inits.x_0, inits.y_0);
  if (result.final_error < tol) {
    result.converged = true;
    return result;
  }
  Rational x_prev = inits.x_m1, x_cur = inits.x_0;
  Rational y_prev = inits.y_m1, y_cur = inits.y_0;
  for (long n = 0; n < n_max; ++n) {
    auto next = step(kind, x_prev, x_cur, y_prev, y_cur, n + 1);
    if (const auto* s = std::get_if<SingularityReport>(&next)) {
      throw Error(ErrorCode::ForbiddenEncounter,
                  "convergence_test: singular step " + std::to_string(s->step));
    }
    auto& state = std::get<NextState>(next);
    x_prev = std::exchange(x_cur, std::move(state.x));
    y_prev = std::exchange(y_cur, std::move(state.y));
    result.steps = n + 1;
    result.final_error = error_of(x_cur, y_cur);
    if (result.final_error < tol) {
      result.converged = true;
      break;
    }
  }
  return result;
}

std::vector<ErrorSample> error_profile(const Trajectory& trajectory, unsigned precision_bits) {
  const detail::MonicCubic p = equilibrium_polynomial(trajectory.kind());
  // Newton in extended precision, seeded from the double root.
  mpf_class v(equilibrium(trajectory.kind()).value, precision_bits);
  for (int i = 0; i < 20; ++i) {
    mpf_class f(((v + p.c2) * v + p.c1) * v + p.c0, precision_bits);
    mpf_class df((3 * v + 2 * p.c2) * v + p.c1, precision_bits);
    v -= f / df;
  }
  std::vector<ErrorSample> out;
  out.reserve(trajectory.points().size());
  for (const StatePoint& pt : trajectory.points()) {
    mpf_class ex(mpf_class(pt.x.raw(), precision_bits) - v, precision_bits);
    mpf_class ey(mpf_class(pt.y.raw(), precision_bits) - v, precision_bits);
    out.push_back({pt.n, std::max(std::abs(ex.get_d()), std::abs(ey.get_d()))});
  }
  return out;
}

double two_step_contraction_rate(std::span<const ErrorSample> profile, long from, long to) {
  if (to <= from || (to - from) % 2 != 0) {
    throw Error(ErrorCode::InvalidArgument, "two_step_contraction_rate: bad index window");
  }
  auto find = [&](long n) {
    for (const auto& s : profile) {
      if (s.n == n) return s.error;
    }
    throw Error(ErrorCode::InvalidArgument,
                "two_step_contraction_rate: index " + std::to_string(n) + " not in profile");
  };
  const double e_from = find(from);
  const double e_to = find(to);
  if (e_from == 0.0) return 0.0;
  return std::pow(e_to / e_from, 2.0 / static_cast<double>(to - from));
}

SweepSummary convergence_sweep(SystemKind kind, std::span<const InitialConditions> inits,
                               double tol, long n_max) {
  SweepSummary s;
  for (const auto& ic : inits) {
    ++s.attempted;
    try {
      const ConvergenceResult r = convergence_test(kind, ic, tol, n_max);
      if (r.converged) ++s.converged;
      if (r.final_error >= s.worst_error) {
        s.worst_error = r.final_error;
      }
      s.worst_steps = std::max(s.worst_steps, r.steps);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ForbiddenEncounter) throw;
      ++s.singular;
    }
  }
  return s;
}

}  // namespace tribodyn
