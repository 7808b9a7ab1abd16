#include "tribodyn/dynamics.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "tribodyn/errors.hpp"

namespace tribodyn {
namespace {

Rational sign_of(SystemKind kind) { return kind == SystemKind::Plus ? 1 : -1; }

// Uniform integer in [0, span) from a 64-bit draw, via the high word of a
// 128-bit product. Bias is below 2^-50 for the spans used here.
std::uint64_t bounded(std::mt19937_64& gen, std::uint64_t span) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(gen()) * span) >> 64);
}

}  // namespace

std::string_view to_string(SystemKind kind) {
  return kind == SystemKind::Plus ? "plus" : "minus";
}

std::optional<SystemKind> parse_system_kind(std::string_view name) {
  if (name == "plus") return SystemKind::Plus;
  if (name == "minus") return SystemKind::Minus;
  return std::nullopt;
}

std::string_view to_string(Denominator which) {
  switch (which) {
    case Denominator::X: return "x_denominator";
    case Denominator::Y: return "y_denominator";
    case Denominator::Both: return "both";
  }
  return "unknown";
}

Rational x_denominator(SystemKind kind, const Rational& x_prev, const Rational& y_cur) {
  return y_cur * (x_prev + sign_of(kind)) + 1;
}

Rational y_denominator(SystemKind kind, const Rational& y_prev, const Rational& x_cur) {
  return x_cur * (y_prev + sign_of(kind)) + 1;
}

std::variant<NextState, SingularityReport> step(SystemKind kind, const Rational& x_prev,
                                                const Rational& x_cur, const Rational& y_prev,
                                                const Rational& y_cur, long next_index) {
  const Rational dx = x_denominator(kind, x_prev, y_cur);
  const Rational dy = y_denominator(kind, y_prev, x_cur);
  if (dx.is_zero() || dy.is_zero()) {
    const Denominator which = dx.is_zero() && dy.is_zero() ? Denominator::Both
                              : dx.is_zero()               ? Denominator::X
                                                           : Denominator::Y;
    return SingularityReport{next_index, which};
  }
  const Rational s = sign_of(kind);
  return NextState{s / dx, s / dy};
}

Trajectory::Trajectory(SystemKind kind, InitialConditions inits)
    : kind_(kind), inits_(std::move(inits)) {
  points_.push_back({-1, inits_.x_m1, inits_.y_m1});
  points_.push_back({0, inits_.x_0, inits_.y_0});
}

const StatePoint* Trajectory::at(long n) const {
  const long offset = n + 1;
  if (offset < 0 || offset >= static_cast<long>(points_.size())) return nullptr;
  return &points_[offset];
}

std::optional<SingularityReport> Trajectory::singularity() const {
  if (!terminator_) return std::nullopt;
  if (const auto* s = std::get_if<SingularityReport>(&*terminator_)) return *s;
  return std::nullopt;
}

Trajectory iterate(SystemKind kind, const InitialConditions& inits, long n_max,
                   const IterateOptions& options) {
  if (n_max < 0) {
    throw Error(ErrorCode::InvalidArgument, "n_max must be >= 0, got " + std::to_string(n_max));
  }
  Trajectory t(kind, inits);
  t.points_.reserve(static_cast<std::size_t>(std::min(n_max, 1L << 16)) + 2);
  for (long n = 0; n < n_max; ++n) {
    const StatePoint& prev = t.points_[t.points_.size() - 2];
    const StatePoint& cur = t.points_.back();
    auto next = step(kind, prev.x, cur.x, prev.y, cur.y, n + 1);
    if (auto* singular = std::get_if<SingularityReport>(&next)) {
      t.terminator_ = *singular;
      break;
    }
    auto& state = std::get<NextState>(next);
    const std::size_t digits = std::max(state.x.digits(), state.y.digits());
    if (digits > options.digit_limit) {
      t.terminator_ = GrowthLimitReport{n + 1, digits};
      break;
    }
    t.points_.push_back({n + 1, std::move(state.x), std::move(state.y)});
  }
  return t;
}

std::optional<long> runtime_forbidden(SystemKind kind, const InitialConditions& inits, long n_max) {
  const auto s = iterate(kind, inits, n_max).singularity();
  if (!s) return std::nullopt;
  return s->step;
}

std::vector<InitialConditions> random_inits(std::uint64_t seed, std::size_t count,
                                            const RandomInitsOptions& options) {
  if (options.max_abs_numerator < 0 || options.max_denominator < 1) {
    throw Error(ErrorCode::InvalidArgument, "random_inits: empty sampling range");
  }
  std::mt19937_64 gen(seed);
  const auto num_span = static_cast<std::uint64_t>(2 * options.max_abs_numerator + 1);
  const auto den_span = static_cast<std::uint64_t>(options.max_denominator);
  auto draw = [&]() {
    for (;;) {
      const long p = static_cast<long>(bounded(gen, num_span)) - options.max_abs_numerator;
      const long q = static_cast<long>(bounded(gen, den_span)) + 1;
      if (options.bound && (p < 0 ? -p : p) > *options.bound * q) continue;
      return Rational(BigInt(p), BigInt(q));
    }
  };
  std::vector<InitialConditions> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    InitialConditions ic;
    ic.x_m1 = draw();
    ic.y_m1 = draw();
    ic.x_0 = draw();
    ic.y_0 = draw();
    out.push_back(std::move(ic));
  }
  return out;
}

}  // namespace tribodyn
