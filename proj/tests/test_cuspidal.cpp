#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "cmcensus/cuspidal.hpp"

using namespace cmcensus;

using Pts = std::vector<IntegralPoint>;

TEST_CASE("aj coefficient") {
  // B^2 = a_j A^3 must hold for the table representatives
  for (const auto& o : cm_table().orders()) {
    if (o.j == 0 || o.j == 1728) continue;
    const CuspidalCurve c = aj_coefficient(JValue::integer(o.j));
    const i128 a = o.rep.a;
    const i128 b = o.rep.b;
    CHECK(c.q * b * b == c.p * a * a * a);
  }
  const CuspidalCurve c864 = aj_coefficient(JValue::integer(864));
  CHECK(c864.p == 4);
  CHECK(c864.q == 27);
  const CuspidalCurve c287496 = aj_coefficient(JValue::integer(287496));
  CHECK(c287496.p * (27 * 287496) == c287496.q * 4 * (1728 - 287496));
  CHECK(gcd128(c287496.p, c287496.q) == 1);
  CHECK(c287496.q > 0);
  CHECK_THROWS(aj_coefficient(JValue::integer(0)));
  CHECK_THROWS(aj_coefficient(JValue::integer(1728)));
}

TEST_CASE("curve normalization") {
  const CuspidalCurve c = CuspidalCurve::make(6, -4);
  CHECK(c.p == -3);
  CHECK(c.q == 2);
  CHECK_THROWS(CuspidalCurve::make(0, 5));
  CHECK_THROWS(CuspidalCurve::make(1, 0));
}

TEST_CASE("enumerator examples") {
  CHECK(enumerate_integral_points(CuspidalCurve::make(-4, 27), 10) == Pts{{-3, -2}, {-3, 2}, {0, 0}});
  CHECK(enumerate_integral_points(CuspidalCurve::make(1, 1), 4) == Pts{{0, 0}, {1, -1}, {1, 1}, {4, -8}, {4, 8}});
  CHECK(enumerate_integral_points(CuspidalCurve::make(5, 1), 1) == Pts{{0, 0}});
  // y^2 = -x^3 forces x = -s^2: s = 1, 2, 3 within T = 10
  CHECK(brute_integral_points(CuspidalCurve::make(-1, 1), 10) ==
        Pts{{-9, -27}, {-9, 27}, {-4, -8}, {-4, 8}, {-1, -1}, {-1, 1}, {0, 0}});
  CHECK(brute_integral_points(CuspidalCurve::make(1, 1), 1) == Pts{{0, 0}, {1, -1}, {1, 1}});
  CHECK(enumerate_integral_points(CuspidalCurve::make(-4, 27), 1000) ==
        brute_integral_points(CuspidalCurve::make(-4, 27), 1000));
}

TEST_CASE("sigma bound") {
  CHECK(sigma_bound(CuspidalCurve::make(1, 1), 100) == doctest::Approx(20.0));
  CHECK(sigma_bound(CuspidalCurve::make(-4, 27), 10) == doctest::Approx(2 * 4 * std::sqrt(108.0) * std::sqrt(10.0)));
  CHECK(sigma_bound(CuspidalCurve::make(3, 4), 1) == doctest::Approx(2 * 3 * std::sqrt(12.0)));
}

TEST_CASE("enumerator equals oracle on random curves") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pd(-50, 50);
  std::uniform_int_distribution<int> qd(1, 50);
  int n = 0;
  while (n < 200) {
    const int p = pd(rng);
    const int q = qd(rng);
    if (p == 0 || std::gcd(p, q) != 1) continue;
    ++n;
    const CuspidalCurve c = CuspidalCurve::make(p, q);
    for (std::int64_t t : {10, 100, 1000}) {
      const Pts fast = enumerate_integral_points(c, t);
      REQUIRE(fast == brute_integral_points(c, t));
      CHECK(static_cast<double>(fast.size() - 1) <= sigma_bound(c, t));
      for (const auto& pt : fast) CHECK(c.q * pt.y * pt.y == c.p * pt.x * pt.x * pt.x);
    }
  }
}

TEST_CASE("large coefficients") {
  // j = -262537412640768000: the point (A, B) of the table representative lies on it
  const CuspidalCurve c = aj_coefficient(JValue::integer(-262537412640768000LL));
  const auto pts = enumerate_integral_points(c, 40'000'000);
  CHECK(std::find(pts.begin(), pts.end(), IntegralPoint{-34790720, -78984748304LL}) != pts.end());
  CHECK_THROWS(brute_integral_points(c, kBruteCuspidalCeiling + 1));
}
