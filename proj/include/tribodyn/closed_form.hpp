#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "tribodyn/dynamics.hpp"
#include "tribodyn/rational.hpp"

namespace tribodyn {

/// The four Tribonacci-indexed solution formulas. For branch parameter n >= 0,
/// XOdd/YOdd give the value at sequence index 2n - 1 and XEven/YEven at 2n.
enum class Branch { XOdd, XEven, YOdd, YEven };

inline constexpr Branch kAllBranches[] = {Branch::XOdd, Branch::XEven, Branch::YOdd,
                                          Branch::YEven};

std::string_view to_string(Branch branch);
long sequence_index(Branch branch, long n);

/// Unreduced numerator/denominator pair of a branch formula.
struct BranchFraction {
  Rational numerator;
  Rational denominator;
};

BranchFraction closed_fraction(SystemKind kind, Branch branch, long n,
                               const InitialConditions& inits);

/// Closed-form value of the solution on `branch` at parameter n.
///
/// Throws ZeroDenominator when the branch denominator vanishes, except at
/// n = 0 where the odd-branch formulas degenerate to the removable form
/// (x_{-1} y_0) / y_0 and the initial value itself is returned.
Rational closed_value(SystemKind kind, Branch branch, long n, const InitialConditions& inits);

/// Value at a sequence index (>= -1) through the matching branch.
Rational closed_value_at(SystemKind kind, bool y_component, long index,
                         const InitialConditions& inits);

/// A, B, C, D are the denominators of XOdd, XEven, YOdd, YEven respectively.
struct DenominatorQuad {
  Rational a;
  Rational b;
  Rational c;
  Rational d;
};

DenominatorQuad denominators(SystemKind kind, long n, const InitialConditions& inits);

enum class ForbiddenComponent { A, B, C, D };

std::string_view to_string(ForbiddenComponent which);
Branch branch_of(ForbiddenComponent which);

struct ForbiddenHit {
  long n = 0;
  ForbiddenComponent which = ForbiddenComponent::A;

  /// Sequence index whose computation divides by this expression.
  long step() const;

  friend bool operator==(const ForbiddenHit&, const ForbiddenHit&) = default;
};

/// First n in [1, n_max] where A_n, B_n, C_n or D_n is exactly zero. Within one
/// n the order is A, C, B, D, so hits come out in sequence-step order.
std::optional<ForbiddenHit> analytic_forbidden(SystemKind kind, const InitialConditions& inits,
                                               long n_max);

struct Discrepancy {
  long index = 0;
  bool y_component = false;
  std::optional<Rational> closed;  // empty when the formula's denominator vanished
  Rational iterated;
};

struct EquivalenceReport {
  SystemKind kind = SystemKind::Plus;
  long n_max = 0;
  long compared = 0;  // number of (index, component) values checked
  std::vector<Discrepancy> discrepancies;
  std::optional<long> runtime_onset;
  std::optional<ForbiddenHit> analytic_onset;  // restricted to steps <= n_max

  bool onset_agrees() const;
  bool ok() const { return discrepancies.empty() && onset_agrees(); }
};

/// Replays the solution formulas against exact iteration for every index up
/// to n_max that iteration reaches, and compares singularity onset.
EquivalenceReport equivalence_check(SystemKind kind, const InitialConditions& inits, long n_max);

}  // namespace tribodyn
