#include <doctest.h>

#include "oracle.hpp"
#include "tribodyn/closed_form.hpp"
#include "tribodyn/errors.hpp"

using namespace tribodyn;

namespace {

InitialConditions ic(const char* xm, const char* ym, const char* x0, const char* y0) {
  return {Rational::parse(xm), Rational::parse(ym), Rational::parse(x0), Rational::parse(y0)};
}

const InitialConditions kZero = ic("0", "0", "0", "0");

}  // namespace

TEST_CASE("branch parameter zero reproduces the initial values") {
  const InitialConditions c = ic("2/3", "-5/7", "4", "1/9");
  for (auto kind : {SystemKind::Plus, SystemKind::Minus}) {
    CHECK(closed_value(kind, Branch::XOdd, 0, c) == c.x_m1);
    CHECK(closed_value(kind, Branch::XEven, 0, c) == c.x_0);
    CHECK(closed_value(kind, Branch::YOdd, 0, c) == c.y_m1);
    CHECK(closed_value(kind, Branch::YEven, 0, c) == c.y_0);
  }
  // y_0 = 0 makes the odd x formula 0/0 at n = 0; the removable value is x_{-1}.
  const InitialConditions z = ic("3/4", "1/2", "0", "0");
  CHECK(closed_value(SystemKind::Plus, Branch::XOdd, 0, z) == z.x_m1);
  CHECK(closed_value(SystemKind::Minus, Branch::YOdd, 0, z) == z.y_m1);
}

TEST_CASE("closed-form examples") {
  // Minus, x_{-1} = 2, y_0 = 3: x_1 = -1 / (3 (2 - 1) + 1).
  const InitialConditions c = ic("2", "0", "0", "3");
  CHECK(closed_value(SystemKind::Minus, Branch::XOdd, 1, c).str() == "-1/4");

  CHECK(closed_value(SystemKind::Plus, Branch::XEven, 1, kZero).str() == "1/2");
  CHECK(closed_value_at(SystemKind::Plus, true, 2, kZero).str() == "1/2");
  CHECK(closed_value_at(SystemKind::Minus, false, -1, c) == c.x_m1);
  CHECK(sequence_index(Branch::XOdd, 3) == 5);
  CHECK(sequence_index(Branch::YEven, 3) == 6);
}

TEST_CASE("denominator examples") {
  const DenominatorQuad p = denominators(SystemKind::Plus, 1, kZero);
  CHECK(p.a == 1);
  CHECK(p.b == 2);
  CHECK(p.c == 1);
  CHECK(p.d == 2);

  CHECK(denominators(SystemKind::Minus, 1, kZero).a == 1);
  // T(-1) = 0 leaves A_0 = (T(-2) + T(-1)) y_0 + T(0) = y_0.
  CHECK(denominators(SystemKind::Plus, 0, kZero).a == 0);
}

TEST_CASE("closed-form zero denominator raises") {
  const InitialConditions c = ic("0", "0", "0", "1");
  CHECK(denominators(SystemKind::Minus, 1, c).a.is_zero());
  try {
    (void)closed_value(SystemKind::Minus, Branch::XOdd, 1, c);
    FAIL("expected ZeroDenominator");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroDenominator);
  }
}

TEST_CASE("analytic_forbidden examples") {
  CHECK_FALSE(analytic_forbidden(SystemKind::Plus, kZero, 50));

  const auto hit = analytic_forbidden(SystemKind::Minus, ic("0", "0", "0", "1"), 10);
  REQUIRE(hit);
  CHECK(*hit == ForbiddenHit{1, ForbiddenComponent::A});
  CHECK(hit->step() == 1);

  // Plus: A_2 = T(3) x_{-1} y_0 + (T(2) + T(3)) y_0 + T(4) = 2(-7/2) + 3 + 4 = 0.
  const InitialConditions p = ic("-7/2", "0", "0", "1");
  const auto hit2 = analytic_forbidden(SystemKind::Plus, p, 10);
  REQUIRE(hit2);
  CHECK(*hit2 == ForbiddenHit{2, ForbiddenComponent::A});
  CHECK(hit2->step() == 3);
  CHECK(runtime_forbidden(SystemKind::Plus, p, 10) == 3);

  CHECK_THROWS_AS(analytic_forbidden(SystemKind::Plus, kZero, 0), Error);
}

TEST_CASE("equivalence on fixed cases") {
  const EquivalenceReport plus = equivalence_check(SystemKind::Plus, kZero, 200);
  CHECK(plus.ok());
  CHECK(plus.compared == 2 * 202);
  CHECK_FALSE(plus.runtime_onset);

  const EquivalenceReport zero = equivalence_check(SystemKind::Minus, kZero, 0);
  CHECK(zero.ok());

  const EquivalenceReport sing = equivalence_check(SystemKind::Plus, ic("-7/2", "0", "0", "1"), 20);
  CHECK(sing.ok());
  CHECK(sing.runtime_onset == 3);
  REQUIRE(sing.analytic_onset);
  CHECK(sing.analytic_onset->step() == 3);
}

// Properties over generated initial conditions.

TEST_CASE("denominators match the explicit expressions") {
  for (auto kind : {SystemKind::Plus, SystemKind::Minus}) {
    for (const auto& c : random_inits(21, 40)) {
      for (long n = 0; n <= 30; ++n) {
        const DenominatorQuad q = denominators(kind, n, c);
        const oracle::Quad o = oracle::expanded_denominators(kind, n, c);
        CHECK(q.a.raw() == o.a);
        CHECK(q.b.raw() == o.b);
        CHECK(q.c.raw() == o.c);
        CHECK(q.d.raw() == o.d);
      }
    }
  }
}

TEST_CASE("closed form equals iteration") {
  for (auto kind : {SystemKind::Plus, SystemKind::Minus}) {
    for (const auto& c : random_inits(22, 100)) {
      const EquivalenceReport r = equivalence_check(kind, c, 100);
      CHECK(r.discrepancies.empty());
      CHECK(r.onset_agrees());
      if (!r.runtime_onset) CHECK(r.compared == 2 * 102);
    }
  }
}

TEST_CASE("closed form agrees with the naive oracle pointwise") {
  for (auto kind : {SystemKind::Plus, SystemKind::Minus}) {
    for (const auto& c : random_inits(23, 30)) {
      const oracle::NaiveRun ref = oracle::naive_iterate(kind, c, 40);
      for (std::size_t k = 0; k < ref.x.size(); ++k) {
        const long index = long(k) - 1;
        CHECK(closed_value_at(kind, false, index, c).raw() == ref.x[k]);
        CHECK(closed_value_at(kind, true, index, c).raw() == ref.y[k]);
      }
    }
  }
}

TEST_CASE("exchanging x and y exchanges the branch formulas") {
  for (auto kind : {SystemKind::Plus, SystemKind::Minus}) {
    for (const auto& c : random_inits(24, 40)) {
      for (long n = 1; n <= 20; ++n) {
        const DenominatorQuad q = denominators(kind, n, c);
        const DenominatorQuad s = denominators(kind, n, c.swapped());
        CHECK(q.a == s.c);
        CHECK(q.b == s.d);
        CHECK(q.c == s.a);
        CHECK(q.d == s.b);
      }
    }
  }
}

TEST_CASE("analytic and runtime onset coincide on a dense small grid") {
  RandomInitsOptions small;
  small.max_abs_numerator = 3;
  small.max_denominator = 2;
  int singular = 0;
  for (auto kind : {SystemKind::Plus, SystemKind::Minus}) {
    for (const auto& c : random_inits(25, 500, small)) {
      const auto hit = analytic_forbidden(kind, c, 15);
      const auto run = runtime_forbidden(kind, c, 30);
      if (hit) {
        ++singular;
        CHECK(run == hit->step());
      } else {
        CHECK_FALSE(run);
      }
    }
  }
  CHECK(singular > 20);
}

TEST_CASE("forbidden-set expressions equal the branch denominators") {
  for (auto kind : {SystemKind::Plus, SystemKind::Minus}) {
    for (const auto& c : random_inits(26, 40)) {
      for (long n = 0; n <= 25; ++n) {
        const DenominatorQuad q = denominators(kind, n, c);
        CHECK(q.a == closed_fraction(kind, Branch::XOdd, n, c).denominator);
        CHECK(q.b == closed_fraction(kind, Branch::XEven, n, c).denominator);
        CHECK(q.c == closed_fraction(kind, Branch::YOdd, n, c).denominator);
        CHECK(q.d == closed_fraction(kind, Branch::YEven, n, c).denominator);
      }
    }
  }
}
