#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "tribodyn/dynamics.hpp"
#include "tribodyn/errors.hpp"

using namespace tribodyn;

namespace {

InitialConditions ic(const char* xm, const char* ym, const char* x0, const char* y0) {
  return {Rational::parse(xm), Rational::parse(ym), Rational::parse(x0), Rational::parse(y0)};
}

const InitialConditions kZero = ic("0", "0", "0", "0");

}  // namespace

TEST_CASE("step from the all-zero state") {
  auto plus = step(SystemKind::Plus, 0, 0, 0, 0);
  REQUIRE(std::holds_alternative<NextState>(plus));
  CHECK(std::get<NextState>(plus).x == 1);
  CHECK(std::get<NextState>(plus).y == 1);

  auto minus = step(SystemKind::Minus, 0, 0, 0, 0);
  REQUIRE(std::holds_alternative<NextState>(minus));
  CHECK(std::get<NextState>(minus).x == -1);
  CHECK(std::get<NextState>(minus).y == -1);
}

TEST_CASE("step reports the vanishing denominator") {
  // Minus system, x_{-1} = 0, y_0 = 1: x_{-1} y_0 - y_0 + 1 = 0.
  auto r = step(SystemKind::Minus, /*x_prev=*/0, /*x_cur=*/0, /*y_prev=*/0, /*y_cur=*/1);
  REQUIRE(std::holds_alternative<SingularityReport>(r));
  CHECK(std::get<SingularityReport>(r) == SingularityReport{1, Denominator::X});

  auto y_side = step(SystemKind::Minus, 0, 1, 0, 0, 7);
  REQUIRE(std::holds_alternative<SingularityReport>(y_side));
  CHECK(std::get<SingularityReport>(y_side) == SingularityReport{7, Denominator::Y});

  // Plus, x_prev = -2, y_cur = 1 and y_prev = -2, x_cur = 1: both zero.
  auto both = step(SystemKind::Plus, -2, 1, -2, 1);
  REQUIRE(std::holds_alternative<SingularityReport>(both));
  CHECK(std::get<SingularityReport>(both).which == Denominator::Both);
}

TEST_CASE("step is a simultaneous update") {
  // A sequential update would feed the new x into y's formula.
  const Rational xp = Rational::parse("1/2"), xc = Rational::parse("2/3");
  const Rational yp = Rational::parse("-1/5"), yc = Rational::parse("3/7");
  auto r = std::get<NextState>(step(SystemKind::Plus, xp, xc, yp, yc));
  CHECK(r.x == Rational(1) / (yc * (xp + 1) + 1));
  CHECK(r.y == Rational(1) / (xc * (yp + 1) + 1));
}

TEST_CASE("iterate examples") {
  const Trajectory plus = iterate(SystemKind::Plus, kZero, 2);
  REQUIRE(plus.points().size() == 4);
  CHECK(plus.at(1)->x == 1);
  CHECK(plus.at(1)->y == 1);
  CHECK(plus.at(2)->x.str() == "1/2");
  CHECK(plus.at(2)->y.str() == "1/2");
  CHECK_FALSE(plus.terminator());

  const Trajectory minus = iterate(SystemKind::Minus, kZero, 2);
  CHECK(minus.at(1)->x == -1);
  CHECK(minus.at(1)->y == -1);
  CHECK(minus.at(2)->x.str() == "-1/2");

  for (auto kind : {SystemKind::Plus, SystemKind::Minus}) {
    const Trajectory t = iterate(kind, ic("1/2", "3", "-4/5", "7"), 0);
    REQUIRE(t.points().size() == 2);
    CHECK(t.points()[0].n == -1);
    CHECK(t.points()[1].n == 0);
    CHECK(t.points()[1].y == 7);
    CHECK_FALSE(t.terminator());
  }

  CHECK_THROWS_AS(iterate(SystemKind::Plus, kZero, -1), Error);
}

TEST_CASE("trajectory indices are consecutive and stop at a singularity") {
  const Trajectory t = iterate(SystemKind::Plus, ic("-7/2", "0", "0", "1"), 10);
  REQUIRE(t.singularity());
  CHECK(t.singularity()->step == 3);
  CHECK(t.last_index() == 2);
  for (std::size_t i = 0; i < t.points().size(); ++i) CHECK(t.points()[i].n == long(i) - 1);
  CHECK(t.at(3) == nullptr);
}

TEST_CASE("minus-system hand-derived second step") {
  // x_2 = -(y_{-1} x_0 - x_0 + 1) / (y_{-1} x_0 - 2 x_0 + 2)
  const InitialConditions c = ic("2/3", "3", "-1/4", "2");
  const Trajectory t = iterate(SystemKind::Minus, c, 2);
  const Rational expected = -(c.y_m1 * c.x_0 - c.x_0 + 1) / (c.y_m1 * c.x_0 - 2 * c.x_0 + 2);
  REQUIRE(t.at(2) != nullptr);
  CHECK(t.at(2)->x == expected);
}

TEST_CASE("runtime_forbidden examples") {
  CHECK_FALSE(runtime_forbidden(SystemKind::Plus, kZero, 100));
  CHECK(runtime_forbidden(SystemKind::Minus, ic("0", "0", "0", "1"), 10) == 1);
  // Denominators stay nonzero here through n = 10 (checked by the naive oracle too).
  CHECK_FALSE(runtime_forbidden(SystemKind::Minus, ic("0", "1", "1", "0"), 10));
  CHECK_FALSE(oracle::naive_iterate(SystemKind::Minus, ic("0", "1", "1", "0"), 10).singular_step);
}

TEST_CASE("growth limit terminator") {
  IterateOptions opts;
  opts.digit_limit = 12;
  const Trajectory t = iterate(SystemKind::Plus, ic("1/7", "2/9", "-3/8", "5/6"), 200, opts);
  REQUIRE(t.terminator());
  const auto* g = std::get_if<GrowthLimitReport>(&*t.terminator());
  REQUIRE(g != nullptr);
  CHECK(g->digits > 12);
  CHECK(g->step == t.last_index() + 1);
  CHECK_FALSE(t.singularity());
}

TEST_CASE("random_inits is deterministic and respects bounds") {
  const auto a = random_inits(42, 50);
  const auto b = random_inits(42, 50);
  CHECK(a == b);
  CHECK_FALSE(a == random_inits(43, 50));
  std::set<std::string> seen;
  for (const auto& c : a) {
    for (const Rational* r : {&c.x_m1, &c.y_m1, &c.x_0, &c.y_0}) {
      CHECK(abs(r->numerator()) <= 9);
      CHECK(r->denominator() <= 9);
      seen.insert(r->str());
    }
  }
  CHECK(seen.size() > 20);

  RandomInitsOptions bounded;
  bounded.bound = 5;
  for (const auto& c : random_inits(3, 200, bounded)) {
    for (const Rational* r : {&c.x_m1, &c.y_m1, &c.x_0, &c.y_0}) {
      CHECK(*r <= 5);
      CHECK(*r >= -5);
    }
  }
}

// Properties over generated initial conditions.

TEST_CASE("iteration matches the naive oracle and is reproducible") {
  for (auto kind : {SystemKind::Plus, SystemKind::Minus}) {
    for (const auto& c : random_inits(11, 60)) {
      const Trajectory t = iterate(kind, c, 40);
      const oracle::NaiveRun ref = oracle::naive_iterate(kind, c, 40);
      REQUIRE(t.points().size() == ref.x.size());
      for (std::size_t i = 0; i < ref.x.size(); ++i) {
        CHECK(t.points()[i].x.raw() == ref.x[i]);
        CHECK(t.points()[i].y.raw() == ref.y[i]);
      }
      CHECK(runtime_forbidden(kind, c, 40) == ref.singular_step);

      const Trajectory again = iterate(kind, c, 40);
      for (std::size_t i = 0; i < t.points().size(); ++i) {
        CHECK(again.points()[i].x.str() == t.points()[i].x.str());
        CHECK(again.points()[i].y.str() == t.points()[i].y.str());
      }
    }
  }
}

TEST_CASE("x/y exchange symmetry") {
  for (auto kind : {SystemKind::Plus, SystemKind::Minus}) {
    for (const auto& c : random_inits(12, 60)) {
      const Trajectory t = iterate(kind, c, 30);
      const Trajectory s = iterate(kind, c.swapped(), 30);
      REQUIRE(t.points().size() == s.points().size());
      for (std::size_t i = 0; i < t.points().size(); ++i) {
        CHECK(t.points()[i].x == s.points()[i].y);
        CHECK(t.points()[i].y == s.points()[i].x);
      }
    }
  }
}

TEST_CASE("minus system is the plus system under negation") {
  for (const auto& c : random_inits(13, 60)) {
    const Trajectory m = iterate(SystemKind::Minus, c, 30);
    const Trajectory p = iterate(SystemKind::Plus, c.negated(), 30);
    REQUIRE(m.points().size() == p.points().size());
    for (std::size_t i = 0; i < m.points().size(); ++i) {
      CHECK(m.points()[i].x == -p.points()[i].x);
      CHECK(m.points()[i].y == -p.points()[i].y);
    }
  }
}

TEST_CASE("singularity reports are sound") {
  int found = 0;
  for (auto kind : {SystemKind::Plus, SystemKind::Minus}) {
    RandomInitsOptions small;
    small.max_abs_numerator = 3;
    small.max_denominator = 3;
    for (const auto& c : random_inits(14, 400, small)) {
      const Trajectory t = iterate(kind, c, 30);
      const auto s = t.singularity();
      if (!s) continue;
      ++found;
      const StatePoint& prev = *t.at(s->step - 2);
      const StatePoint& cur = *t.at(s->step - 1);
      const bool x_zero = x_denominator(kind, prev.x, cur.y).is_zero();
      const bool y_zero = y_denominator(kind, prev.y, cur.x).is_zero();
      CHECK(x_zero == (s->which != Denominator::Y));
      CHECK(y_zero == (s->which != Denominator::X));
    }
  }
  CHECK(found > 10);
}

TEST_CASE("plus system from zero stays in (0, 1]") {
  // Empirical; no general claim is made.
  const Trajectory t = iterate(SystemKind::Plus, kZero, 200);
  int violations = 0;
  for (const auto& p : t.points()) {
    if (p.n < 1) continue;
    for (const Rational* v : {&p.x, &p.y}) {
      if (!(v->sign() > 0 && *v <= 1)) ++violations;
    }
  }
  CHECK(violations == 0);
}
