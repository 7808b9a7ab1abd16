#pragma once

#include <array>
#include <complex>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "tribodyn/dynamics.hpp"

namespace tribodyn {

/// Real fixed point (v, v) of a system together with the two non-real roots
/// of its equilibrium cubic: v^3 + v^2 + v - 1 (plus), v^3 - v^2 + v + 1 (minus).
struct EquilibriumReport {
  SystemKind kind = SystemKind::Plus;
  double value = 0.0;
  double residual = 0.0;
  std::array<std::complex<double>, 2> complex_pair{};
};

EquilibriumReport equilibrium(SystemKind kind);

/// Cardano value of the real equilibrium, before Newton refinement.
double equilibrium_radical(SystemKind kind);

/// Cubic whose real root is the equilibrium, evaluated at v.
double equilibrium_cubic(SystemKind kind, double v);

using Matrix4 = Eigen::Matrix4d;
using Spectrum = std::array<std::complex<double>, 4>;

/// Linearization about the equilibrium in the state (x_n, x_{n-1}, y_n, y_{n-1}),
/// with entries reduced using the equilibrium cubic.
Matrix4 jacobian(SystemKind kind);

/// Same matrix with entries written as raw partial derivatives, e.g. -a / (a (a + 1) + 1)^2.
Matrix4 jacobian_unsimplified(SystemKind kind);

/// Roots of the two quadratic factors of the characteristic polynomial.
Spectrum eigenvalues(SystemKind kind);

/// Eigenvalues of an arbitrary 4x4 real matrix (general dense solver).
Spectrum eigenvalues_general(const Matrix4& m);

/// Largest distance between two spectra after pairing each eigenvalue of `a`
/// with its nearest unused counterpart in `b`.
double spectrum_distance(const Spectrum& a, const Spectrum& b);

enum class Verdict { LocallyAsymptoticallyStable, Unstable, Inconclusive };

std::string_view to_string(Verdict v);

inline constexpr double kUnitCircleTolerance = 1e-12;

/// Linearized stability rule on eigenvalue moduli.
Verdict classify(std::span<const double> moduli);

struct StabilityReport {
  std::optional<SystemKind> kind;
  double equilibrium = 0.0;
  Spectrum eigenvalues{};
  std::array<double, 4> moduli{};
  Verdict verdict = Verdict::Inconclusive;
};

StabilityReport stability_verdict(SystemKind kind);

/// Applies the rule to any 4x4 matrix; `kind` is left empty.
StabilityReport stability_verdict(const Matrix4& m);

struct ConvergenceResult {
  bool converged = false;
  long steps = 0;
  double final_error = 0.0;
};

/// Iterates exactly and stops at the first n >= 0 with
/// max(|x_n - v|, |y_n - v|) < tol. Throws ForbiddenEncounter if the
/// trajectory turns singular first, InvalidArgument on tol <= 0 or n_max < 0.
ConvergenceResult convergence_test(SystemKind kind, const InitialConditions& inits, double tol,
                                   long n_max);

struct ErrorSample {
  long n = 0;
  double error = 0.0;
};

/// max(|x_n - v|, |y_n - v|) for every point of the trajectory, with the
/// subtraction carried out in `precision_bits`-bit floating point.
std::vector<ErrorSample> error_profile(const Trajectory& trajectory,
                                       unsigned precision_bits = 256);

/// Geometric-mean contraction per two indices between n = from and n = to
/// (to - from must be positive and even): (e_to / e_from)^(2 / (to - from)).
double two_step_contraction_rate(std::span<const ErrorSample> profile, long from, long to);

struct SweepSummary {
  std::size_t attempted = 0;
  std::size_t singular = 0;  // excluded: hit a forbidden step before converging
  std::size_t converged = 0;
  double worst_error = 0.0;  // largest final error among non-singular runs
  long worst_steps = 0;
};

SweepSummary convergence_sweep(SystemKind kind, std::span<const InitialConditions> inits,
                               double tol, long n_max);

}  // namespace tribodyn
