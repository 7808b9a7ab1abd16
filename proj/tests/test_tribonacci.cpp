#include <doctest.h>

#include <cmath>
#include <thread>
#include <vector>

#include "oracle.hpp"
#include "tribodyn/errors.hpp"
#include "tribodyn/tribonacci.hpp"

using namespace tribodyn;

namespace {

// 60-digit reference for the real root of x^3 - x^2 - x - 1.
constexpr double kAlpha = 1.83928675521416113255185256465328660042417874609759224677876;

double cubic(double x) { return ((x - 1.0) * x - 1.0) * x - 1.0; }
std::complex<double> cubic(std::complex<double> x) { return ((x - 1.0) * x - 1.0) * x - 1.0; }

}  // namespace

TEST_CASE("trib initial values and examples") {
  CHECK(trib(0) == 0);
  CHECK(trib(1) == 1);
  CHECK(trib(2) == 1);
  CHECK(trib(10) == 149);
  CHECK(trib(-1) == 0);
  CHECK(trib(-2) == 1);
  CHECK(trib(-3) == -1);
}

TEST_CASE("trib agrees with an independent linear walk") {
  for (long n = -150; n <= 150; ++n) {
    CHECK_MESSAGE(trib(n) == oracle::trib(n), "n = " << n);
  }
}

TEST_CASE("recurrence holds exactly over [-200, 200]") {
  for (long n = -200; n <= 197; ++n) {
    CHECK(trib(n + 3) == trib(n + 2) + trib(n + 1) + trib(n));
  }
}

TEST_CASE("backward extension then forward recurrence reproduces T0..T2") {
  TribCache cache;
  for (long k : {5L, 17L, 60L}) {
    BigInt a = cache.value(-k), b = cache.value(-k + 1), c = cache.value(-k + 2);
    for (long n = -k; n < 0; ++n) {
      BigInt next = a + b + c;
      a = b;
      b = c;
      c = next;
    }
    CHECK(a == 0);
    CHECK(b == 1);
    CHECK(c == 1);
  }
}

TEST_CASE("cache grows symmetrically on demand") {
  TribCache cache;
  CHECK(cache.range() == std::pair<long, long>{0, 2});
  CHECK(cache.value(-5) == 2);
  CHECK(cache.range().first == -5);
  CHECK(cache.value(20) == 66012);
  CHECK(cache.range().second == 20);
}

TEST_CASE("concurrent readers and growth") {
  TribCache cache;
  std::vector<std::thread> threads;
  std::vector<int> ok(8, 0);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      bool good = true;
      for (long n = -300; n <= 300; n += 1 + t) good = good && cache.value(n) == oracle::trib(n);
      ok[t] = good;
    });
  }
  for (auto& th : threads) th.join();
  for (int v : ok) CHECK(v == 1);
}

TEST_CASE("characteristic roots") {
  const CharacteristicRoots r = characteristic_roots();
  CHECK(r.alpha == doctest::Approx(kAlpha).epsilon(1e-15));
  CHECK(r.alpha > 1.0);
  CHECK(std::abs(cubic(r.alpha)) < 1e-14);
  CHECK(std::abs(cubic(r.beta)) < 1e-12);
  CHECK(std::abs(cubic(r.gamma)) < 1e-12);
  CHECK(std::abs(r.beta) < 1.0);
  CHECK(std::abs(std::abs(r.beta) - std::abs(r.gamma)) < 1e-15);
  CHECK(r.beta == std::conj(r.gamma));
  CHECK(std::abs(r.alpha * r.beta * r.gamma - 1.0) < 1e-12);
  CHECK(std::abs(std::abs(r.beta) - std::pow(r.alpha, -0.5)) < 1e-10);

  const double bisected = oracle::bisect([](double x) { return cubic(x); }, 1.0, 2.0);
  CHECK(std::abs(r.alpha - bisected) < 1e-15);

  // The unrefined radical form is close but not as tight.
  const CharacteristicRoots radical = characteristic_roots_radical();
  CHECK(std::abs(radical.alpha - r.alpha) < 1e-13);
  CHECK(std::abs(radical.beta - r.beta) < 1e-12);
  CHECK(std::abs(radical.gamma - r.gamma) < 1e-12);
}

TEST_CASE("binet") {
  CHECK(std::abs(binet(0)) < 1e-9);
  CHECK(std::abs(binet(10) - 149.0) < 1e-6);
  CHECK(std::abs(binet(-3) + 1.0) < 1e-6);
  for (long n = -30; n <= 30; ++n) {
    CHECK_MESSAGE(std::abs(binet(n) - trib(n).get_d()) < 1e-6, "n = " << n);
  }
  CHECK_NOTHROW(binet(70));
  CHECK_NOTHROW(binet(-70));
  try {
    binet(71);
    FAIL("expected IndexOutOfPrecisionRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexOutOfPrecisionRange);
  }
  CHECK_THROWS_AS(binet(-71), Error);
}

TEST_CASE("ratio limits") {
  const double a = characteristic_roots().alpha;
  CHECK(std::abs(ratio(60, 1) - a) < 1e-10);
  CHECK(std::abs(ratio(60, 2) - a * a) < 1e-9);
  CHECK(ratio(2, 0) == 1.0);
  for (long r : {-2L, -1L, 1L, 2L}) CHECK(std::abs(ratio(60, r) - std::pow(a, r)) < 1e-8);

  for (long n : {0L, -1L}) {
    try {
      ratio(n, 1);
      FAIL("expected DivisionByZero");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DivisionByZero);
    }
  }
}

// The ratio error is a damped oscillation with period about 13 indices, so
// single steps are not monotone; the envelope over 13-index windows is.
TEST_CASE("ratio error envelope shrinks window over window") {
  constexpr unsigned kBits = 320;
  mpf_class alpha(kAlpha, kBits);
  for (int i = 0; i < 30; ++i) {
    alpha -= mpf_class((((alpha - 1) * alpha - 1) * alpha - 1) / ((3 * alpha - 2) * alpha - 1), kBits);
  }
  auto err = [&](long n) {
    mpf_class q(mpq_class(trib(n + 1), trib(n)), kBits);
    return std::abs(mpf_class(q - alpha, kBits).get_d());
  };
  constexpr long kWindow = 13;
  auto window_max = [&](long from) {
    double m = 0.0;
    for (long n = from; n < from + kWindow; ++n) m = std::max(m, err(n));
    return m;
  };
  for (long n = 10; n <= 180; ++n) {
    CHECK_MESSAGE(window_max(n + kWindow) < window_max(n), "n = " << n);
  }
}
