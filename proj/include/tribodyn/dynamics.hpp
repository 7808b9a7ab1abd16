#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "tribodyn/rational.hpp"

namespace tribodyn {

/// Plus:  x' = 1 / (y (x_prev + 1) + 1),   y' = 1 / (x (y_prev + 1) + 1)
/// Minus: x' = -1 / (y (x_prev - 1) + 1),  y' = -1 / (x (y_prev - 1) + 1)
enum class SystemKind { Plus, Minus };

std::string_view to_string(SystemKind kind);
std::optional<SystemKind> parse_system_kind(std::string_view name);

struct InitialConditions {
  Rational x_m1;  // x at n = -1
  Rational y_m1;
  Rational x_0;
  Rational y_0;

  /// Exchanges the roles of x and y.
  InitialConditions swapped() const { return {y_m1, x_m1, y_0, x_0}; }
  InitialConditions negated() const { return {-x_m1, -y_m1, -x_0, -y_0}; }

  friend bool operator==(const InitialConditions&, const InitialConditions&) = default;
};

enum class Denominator { X, Y, Both };

std::string_view to_string(Denominator which);

struct SingularityReport {
  long step = 0;  // index n + 1 that could not be computed
  Denominator which = Denominator::X;

  friend bool operator==(const SingularityReport&, const SingularityReport&) = default;
};

struct GrowthLimitReport {
  long step = 0;
  std::size_t digits = 0;
};

using Terminator = std::variant<SingularityReport, GrowthLimitReport>;

struct StatePoint {
  long n = 0;
  Rational x;
  Rational y;
};

struct NextState {
  Rational x;
  Rational y;
};

/// y_cur (x_prev + 1) + 1 for Plus, y_cur (x_prev - 1) + 1 for Minus.
Rational x_denominator(SystemKind kind, const Rational& x_prev, const Rational& y_cur);
/// x_cur (y_prev + 1) + 1 for Plus, x_cur (y_prev - 1) + 1 for Minus.
Rational y_denominator(SystemKind kind, const Rational& y_prev, const Rational& x_cur);

/// One simultaneous update from (x_{n-1}, x_n, y_{n-1}, y_n). `next_index` is
/// only used to label a singularity report.
std::variant<NextState, SingularityReport> step(SystemKind kind, const Rational& x_prev,
                                                const Rational& x_cur, const Rational& y_prev,
                                                const Rational& y_cur, long next_index = 1);

inline constexpr std::size_t kDefaultDigitLimit = 100000;

struct IterateOptions {
  std::size_t digit_limit = kDefaultDigitLimit;
};

class Trajectory {
 public:
  Trajectory(SystemKind kind, InitialConditions inits);

  SystemKind kind() const { return kind_; }
  const InitialConditions& inits() const { return inits_; }
  const std::vector<StatePoint>& points() const { return points_; }
  const std::optional<Terminator>& terminator() const { return terminator_; }

  /// Highest index present (0 when only the initial points exist).
  long last_index() const { return points_.back().n; }

  /// Point with sequence index n, or nullptr if outside the trajectory.
  const StatePoint* at(long n) const;

  std::optional<SingularityReport> singularity() const;

 private:
  friend Trajectory iterate(SystemKind, const InitialConditions&, long, const IterateOptions&);

  SystemKind kind_;
  InitialConditions inits_;
  std::vector<StatePoint> points_;
  std::optional<Terminator> terminator_;
};

/// Exact iteration through index n_max, stopping at the first singular step
/// or when a value exceeds the digit limit. Throws InvalidArgument if n_max < 0.
Trajectory iterate(SystemKind kind, const InitialConditions& inits, long n_max,
                   const IterateOptions& options = {});

/// First singular step index within n_max, if any.
std::optional<long> runtime_forbidden(SystemKind kind, const InitialConditions& inits, long n_max);

struct RandomInitsOptions {
  long max_abs_numerator = 9;
  long max_denominator = 9;
  /// When set, each component must satisfy |v| <= bound (rejection sampling).
  std::optional<long> bound;
};

/// Deterministic sample of rational initial conditions p/q, |p| <= max_abs_numerator,
/// 1 <= q <= max_denominator. Same seed, same sequence on every platform.
std::vector<InitialConditions> random_inits(std::uint64_t seed, std::size_t count,
                                            const RandomInitsOptions& options = {});

}  // namespace tribodyn
