#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "cmcensus/errors.hpp"
#include "cmcensus/family.hpp"
#include "cmcensus/numeric.hpp"
#include "cmcensus/twist.hpp"

using namespace cmcensus;

namespace {

const FixedCurve& fixed(std::int64_t j) {
  static const FixedCurveSet set = default_fixed_curves();
  for (const auto& f : set)
    if (f.j == j) return f;
  throw std::logic_error("missing j");
}

std::string temp_file(const std::string& name, const std::string& body) {
  const std::string path = "/tmp/cmcensus_test_" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("fixed curves") {
  for (const auto& f : default_fixed_curves()) {
    CHECK(f.n * f.m == 12);
    CHECK(j_invariant(f.curve) == JValue::integer(f.j));
    CHECK(f.height == naive_height(f.curve));
  }
  CHECK(fixed(0).n == 6);
  CHECK(fixed(1728).m == 3);
  CHECK(fixed(54000).n == 2);
  CHECK_THROWS(FixedCurve::make(0, {1, 0}));
  CHECK_THROWS(FixedCurve::make(5, {1, 1}));
  CHECK_THROWS(FixedCurve::make(0, {-3, 2}));
}

TEST_CASE("twist equations") {
  CHECK(twist_equation(fixed(0), 2) == Curve{0, 2});
  CHECK(twist_equation(fixed(1728), -3) == Curve{-3, 0});
  CHECK(twist_equation(fixed(54000), 2) == Curve{-60, 176});
  CHECK_THROWS(twist_equation(fixed(0), 0));
}

TEST_CASE("twist height law and j preservation") {
  CHECK(twist_height(fixed(0), 2) == 108);
  CHECK(twist_height(fixed(54000), 2) == 864000);
  for (const auto& f : default_fixed_curves()) {
    CHECK(twist_height(f, 1) == f.height);
    for (std::int64_t d = -100; d <= 100; ++d) {
      if (d == 0) continue;
      const Curve c = twist_equation(f, d);
      CHECK(twist_height(f, d) == naive_height(c));
      CHECK(j_invariant(c) == JValue::integer(f.j));
    }
  }
}

TEST_CASE("nth power free representative") {
  CHECK(nth_power_free_rep({4, 1}, 2) == 1);
  CHECK(nth_power_free_rep({8, 9}, 2) == 2);
  CHECK(nth_power_free_rep({-1, 1}, 6) == -1);
  CHECK(nth_power_free_rep({3, 4}, 2) == 3);
  CHECK(nth_power_free_rep({-2, 3}, 4) == -54);
  CHECK_THROWS(nth_power_free_rep({0, 1}, 2));
  CHECK_THROWS(nth_power_free_rep({1, 1}, 3));
  std::mt19937_64 rng(11);
  for (int n : {2, 4, 6}) {
    for (std::int64_t z : power_free_list(200, n)) {
      CHECK(nth_power_free_rep({z, 1}, n) == z);
      const std::int64_t c = static_cast<std::int64_t>(rng() % 5) + 2;
      std::int64_t cn = 1;
      for (int i = 0; i < n; ++i) cn *= c;
      CHECK(nth_power_free_rep({z * cn, 1}, n) == z);
      CHECK(nth_power_free_rep({z, cn}, n) == z);
    }
  }
}

TEST_CASE("twist bound and counts") {
  CHECK(twist_bound(fixed(0), 10'000'000'000ULL) == 19245);
  CHECK(twist_bound(fixed(54000), 10'000'000'000ULL) == 9);
  CHECK(count_ETj(fixed(0), 10'000'000'000ULL) == 37836);
  CHECK(count_ETj(fixed(54000), 10'000'000'000ULL) == 12);
  CHECK(count_ETj(fixed(54000), 10'000'000'000ULL) == count_Ej_fast(JValue::integer(54000), 10'000'000'000ULL));
  for (const auto& f : default_fixed_curves()) {
    if (f.height <= static_cast<i128>(UINT64_MAX)) {
      CHECK(count_ETj(f, static_cast<std::uint64_t>(f.height) - 1) == 0);
      CHECK(count_ETj(f, static_cast<std::uint64_t>(f.height)) == 2);
    } else {
      CHECK(count_ETj(f, UINT64_MAX) == 0);
    }
    // certificate N^m h <= X < (N+1)^m h
    const std::uint64_t x = 123'456'789'012ULL;
    const std::uint64_t n = twist_bound(f, x);
    CHECK(twist_height(f, static_cast<std::int64_t>(n + 1)) > static_cast<i128>(x));
    if (n > 0) CHECK(twist_height(f, static_cast<std::int64_t>(n)) <= static_cast<i128>(x));
  }
}

TEST_CASE("enumerate ETj") {
  const auto e0 = enumerate_ETj(fixed(0), 108);
  REQUIRE(e0.size() == 4);
  CHECK(e0[0].d == -2);
  CHECK(e0[3].d == 2);
  CHECK(enumerate_ETj(fixed(1728), 4).size() == 2);
  for (std::uint64_t x : {1'000'000ULL, 100'000'000ULL})
    for (const auto& f : default_fixed_curves()) CHECK(enumerate_ETj(f, x).size() == count_ETj(f, x));
  // j = 1728 bound grows as X^{1/3}; j = 0 as X^{1/2}: 1e16 pushes j = 0 past the list ceiling
  CHECK_THROWS_AS(enumerate_ETj(fixed(0), 10'000'000'000'000'000ULL), CeilingExceeded);
}

TEST_CASE("count ETcm") {
  const EtCounts et = count_ETcm(default_fixed_curves(), 10'000'000'000ULL);
  CHECK(et.count(0) == 37836);
  std::uint64_t sum = 0;
  for (auto c : et.per_j) {
    CHECK(c % 2 == 0);
    sum += c;
  }
  CHECK(sum == et.total);
  // smallest fixed height is 4, from (1,0): only D = +-1 at j = 1728 fit under 27
  CHECK(count_ETcm(default_fixed_curves(), 3).total == 0);
  CHECK(count_ETcm(default_fixed_curves(), 26).total == 2);
  CHECK(count_ETcm(default_fixed_curves(), 26).count(1728) == 2);
}

TEST_CASE("c constant") {
  CHECK(static_cast<double>(c_constant(fixed(0))) == doctest::Approx(0.3783386292).epsilon(1e-9));
  CHECK(static_cast<double>(c_constant(fixed(1728))) == doctest::Approx(1.1640894426).epsilon(1e-9));
  // C(j) X^{1/m} tracks 2 Q_n(N)
  for (const auto& f : default_fixed_curves()) {
    const std::uint64_t x = 1'000'000'000'000ULL;
    const double pred = static_cast<double>(c_constant(f)) * std::pow(static_cast<double>(x), 1.0 / f.m);
    const double got = static_cast<double>(count_ETj(f, x));
    CHECK(std::abs(pred - got) <= 4 * std::pow(static_cast<double>(x), 1.0 / 12) + 2);
  }
}

TEST_CASE("fixed curve file") {
  const auto set = load_fixed_curves(temp_file("ok.csv", "# override\nj,A,B\n1728,-1,0\n0,0,-2\n"));
  CHECK(set[*cm_table().index_of(1728)].curve == Curve{-1, 0});
  CHECK(set[*cm_table().index_of(0)].curve == Curve{0, -2});
  CHECK(set[*cm_table().index_of(54000)].curve == Curve{-15, 22});

  CHECK_THROWS_WITH_AS(load_fixed_curves(temp_file("bad.csv", "j,A,B\n1728,1,1\n")),
                       doctest::Contains("bad.csv:2"), std::invalid_argument);
  CHECK_THROWS_AS(load_fixed_curves(temp_file("hdr.csv", "A,B,j\n")), std::invalid_argument);
  CHECK_THROWS_AS(load_fixed_curves(temp_file("dup.csv", "j,A,B\n0,0,1\n0,0,2\n")), std::invalid_argument);
  CHECK_THROWS_AS(load_fixed_curves(temp_file("noncm.csv", "j,A,B\n5,1,1\n")), std::invalid_argument);
  CHECK_THROWS_AS(load_fixed_curves("/nonexistent/fixed.csv"), std::runtime_error);
}
