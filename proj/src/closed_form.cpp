#include "tribodyn/closed_form.hpp"

#include <string>

#include "tribodyn/errors.hpp"
#include "tribodyn/tribonacci.hpp"

namespace tribodyn {
namespace {

struct BilinearInputs {
  Rational product;  // x_{-1} y_0 or y_{-1} x_0
  Rational linear;   // y_0 or x_0
};

// XOdd and YEven are driven by (x_{-1} y_0, y_0); XEven and YOdd by (y_{-1} x_0, x_0).
BilinearInputs inputs_for(Branch branch, const InitialConditions& ic) {
  if (branch == Branch::XOdd || branch == Branch::YEven) return {ic.x_m1 * ic.y_0, ic.y_0};
  return {ic.y_m1 * ic.x_0, ic.x_0};
}

void require_nonnegative(long n, const char* what) {
  if (n < 0) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + ": n must be >= 0, got " + std::to_string(n));
  }
}

}  // namespace

std::string_view to_string(Branch branch) {
  switch (branch) {
    case Branch::XOdd: return "x_odd";
    case Branch::XEven: return "x_even";
    case Branch::YOdd: return "y_odd";
    case Branch::YEven: return "y_even";
  }
  return "unknown";
}

long sequence_index(Branch branch, long n) {
  return (branch == Branch::XOdd || branch == Branch::YOdd) ? 2 * n - 1 : 2 * n;
}

BranchFraction closed_fraction(SystemKind kind, Branch branch, long n,
                               const InitialConditions& inits) {
  require_nonnegative(n, "closed_fraction");
  // Every branch has the same shape in its own sequence index m:
  //   plus:  [T(m-1) w + (T(m+1) - T(m)) z + T(m)] / [T(m) w + (T(m-1) + T(m)) z + T(m+1)]
  //   minus: -[T(m-1) w + (T(m) - T(m+1)) z + T(m)] / [T(m) w - (T(m-1) + T(m)) z + T(m+1)]
  const long m = sequence_index(branch, n);
  const Rational t_prev(trib(m - 1), 1);
  const Rational t_cur(trib(m), 1);
  const Rational t_next(trib(m + 1), 1);
  const auto [w, z] = inputs_for(branch, inits);

  BranchFraction f;
  if (kind == SystemKind::Plus) {
    f.numerator = t_prev * w + (t_next - t_cur) * z + t_cur;
    f.denominator = t_cur * w + (t_prev + t_cur) * z + t_next;
  } else {
    f.numerator = -(t_prev * w + (t_cur - t_next) * z + t_cur);
    f.denominator = t_cur * w - (t_prev + t_cur) * z + t_next;
  }
#ifdef TRIBODYN_FAULT_INJECT_CLOSED_FORM
  // Negative-control build: off-by-one constant term from n = 3 on.
  if (n >= 3) f.numerator += 1;
#endif
  return f;
}

Rational closed_value(SystemKind kind, Branch branch, long n, const InitialConditions& inits) {
  const BranchFraction f = closed_fraction(kind, branch, n, inits);
  if (f.denominator.is_zero()) {
    if (n == 0 && f.numerator.is_zero()) {
      switch (branch) {
        case Branch::XOdd: return inits.x_m1;
        case Branch::YOdd: return inits.y_m1;
        case Branch::XEven: return inits.x_0;
        case Branch::YEven: return inits.y_0;
      }
    }
    throw Error(ErrorCode::ZeroDenominator, "closed form " + std::string(to_string(branch)) +
                                                " has zero denominator at n = " +
                                                std::to_string(n));
  }
  return f.numerator / f.denominator;
}

Rational closed_value_at(SystemKind kind, bool y_component, long index,
                         const InitialConditions& inits) {
  if (index < -1) {
    throw Error(ErrorCode::InvalidArgument,
                "closed_value_at: index must be >= -1, got " + std::to_string(index));
  }
  const bool odd = (index % 2) != 0;
  const long n = odd ? (index + 1) / 2 : index / 2;
  const Branch branch = y_component ? (odd ? Branch::YOdd : Branch::YEven)
                                    : (odd ? Branch::XOdd : Branch::XEven);
  return closed_value(kind, branch, n, inits);
}

DenominatorQuad denominators(SystemKind kind, long n, const InitialConditions& inits) {
  require_nonnegative(n, "denominators");
  // Forbidden-set expressions in their own indexing, kept apart from
  // closed_fraction so the two can be checked against each other.
  const Rational t0(trib(2 * n - 2), 1);
  const Rational t1(trib(2 * n - 1), 1);
  const Rational t2(trib(2 * n), 1);
  const Rational t3(trib(2 * n + 1), 1);
  const Rational s = kind == SystemKind::Plus ? 1 : -1;
  const Rational xy = inits.x_m1 * inits.y_0;
  const Rational yx = inits.y_m1 * inits.x_0;
  return {t1 * xy + s * (t0 + t1) * inits.y_0 + t2,
          t2 * yx + s * (t1 + t2) * inits.x_0 + t3,
          t1 * yx + s * (t0 + t1) * inits.x_0 + t2,
          t2 * xy + s * (t1 + t2) * inits.y_0 + t3};
}

std::string_view to_string(ForbiddenComponent which) {
  switch (which) {
    case ForbiddenComponent::A: return "A";
    case ForbiddenComponent::B: return "B";
    case ForbiddenComponent::C: return "C";
    case ForbiddenComponent::D: return "D";
  }
  return "?";
}

Branch branch_of(ForbiddenComponent which) {
  switch (which) {
    case ForbiddenComponent::A: return Branch::XOdd;
    case ForbiddenComponent::B: return Branch::XEven;
    case ForbiddenComponent::C: return Branch::YOdd;
    case ForbiddenComponent::D: return Branch::YEven;
  }
  return Branch::XOdd;
}

long ForbiddenHit::step() const { return sequence_index(branch_of(which), n); }

std::optional<ForbiddenHit> analytic_forbidden(SystemKind kind, const InitialConditions& inits,
                                               long n_max) {
  if (n_max < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "analytic_forbidden: n_max must be >= 1, got " + std::to_string(n_max));
  }
  for (long n = 1; n <= n_max; ++n) {
    const DenominatorQuad q = denominators(kind, n, inits);
    if (q.a.is_zero()) return ForbiddenHit{n, ForbiddenComponent::A};
    if (q.c.is_zero()) return ForbiddenHit{n, ForbiddenComponent::C};
    if (q.b.is_zero()) return ForbiddenHit{n, ForbiddenComponent::B};
    if (q.d.is_zero()) return ForbiddenHit{n, ForbiddenComponent::D};
  }
  return std::nullopt;
}

bool EquivalenceReport::onset_agrees() const {
  if (!runtime_onset && !analytic_onset) return true;
  return runtime_onset && analytic_onset && *runtime_onset == analytic_onset->step();
}

EquivalenceReport equivalence_check(SystemKind kind, const InitialConditions& inits, long n_max) {
  EquivalenceReport report;
  report.kind = kind;
  report.n_max = n_max;

  const Trajectory traj = iterate(kind, inits, n_max);
  for (const StatePoint& p : traj.points()) {
    for (const bool y_component : {false, true}) {
      const Rational& iterated = y_component ? p.y : p.x;
      std::optional<Rational> closed;
      try {
        closed = closed_value_at(kind, y_component, p.n, inits);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ZeroDenominator) throw;
      }
      ++report.compared;
      if (!closed || !(*closed == iterated)) {
        report.discrepancies.push_back({p.n, y_component, closed, iterated});
      }
    }
  }

  if (const auto s = traj.singularity()) report.runtime_onset = s->step;
  // A growth-limited run says nothing about singularities past its last step.
  long reach = n_max;
  if (traj.terminator()) {
    if (const auto* g = std::get_if<GrowthLimitReport>(&*traj.terminator())) reach = g->step - 1;
  }
  if (reach >= 1) {
    const auto hit = analytic_forbidden(kind, inits, (reach + 1) / 2);
    if (hit && hit->step() <= reach) report.analytic_onset = hit;
  }
  return report;
}

}  // namespace tribodyn
