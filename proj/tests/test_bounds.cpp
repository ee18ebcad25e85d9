#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "halfint/bounds.hpp"
#include "halfint/errors.hpp"
#include "halfint/qexp_io.hpp"
#include "oracles.hpp"

using namespace halfint;

TEST_CASE("index values and the coset-counting oracle") {
  CHECK(gamma0_index(1) == 1);
  CHECK(gamma0_index(8) == 12);
  CHECK(gamma0_index(52) == 84);
  CHECK(gamma0_index(208) == 336);
  CHECK(gamma0_index(364) == 672);
  CHECK(gamma0_index(1456) == 2688);
  for (long n = 1; n <= 60; ++n) CHECK(gamma0_index(n) == oracles::p1_size(n));
}

TEST_CASE("index is multiplicative on coprime levels") {
  for (long m = 1; m <= 100; ++m) {
    for (long n = 1; n <= 100; ++n) {
      if (std::gcd(m, n) != 1) continue;
      CHECK(gamma0_index(m * n) == gamma0_index(m) * gamma0_index(n));
    }
  }
}

TEST_CASE("half-integral and Kohnen bounds") {
  SturmBound b78 = sturm_bound_halfint(7, 8);
  CHECK(b78.index == 12);
  CHECK(b78.bound == Rational(7, 2));
  CHECK(b78.floor == 3);

  CHECK(sturm_bound_halfint(3, 364).bound == Rational(84));
  CHECK(sturm_bound_halfint(3, 364).floor == 84);

  SturmBound b552 = sturm_bound_halfint(5, 52);
  CHECK(b552.bound == Rational(35, 2));
  CHECK(b552.floor == 17);

  CHECK(kohnen_bound(3, 364).bound == Rational(336));
  CHECK(kohnen_bound(3, 364).index == 2688);
  CHECK(kohnen_bound(5, 52).bound == Rational(70));
  CHECK(kohnen_bound(3, 4).bound == Rational(3));

  for (auto bad : {std::pair<long, long>{4, 8}, {3, 6}, {-3, 8}, {3, 0}}) {
    CHECK_THROWS_AS(sturm_bound_halfint(bad.first, bad.second), Error);
    CHECK_THROWS_AS(kohnen_bound(bad.first, bad.second), Error);
  }
}

TEST_CASE("floor comparison matches the exact rational comparison") {
  std::mt19937_64 rng(7200);
  std::uniform_int_distribution<long> kd(0, 14), nd(1, 100);
  for (int trial = 0; trial < 1000; ++trial) {
    long k = 2 * kd(rng) + 1;
    long n = 4 * nd(rng);
    SturmBound b = sturm_bound_halfint(k, n);
    // integers n satisfy n <= B exactly when n <= floor(B)
    for (long m = std::max(0L, b.floor - 2); m <= b.floor + 2; ++m) {
      bool exact = Rational(m) <= b.bound;
      bool floored = m <= b.floor;
      CHECK(exact == floored);
    }
  }
}

TEST_CASE("Kohnen bound dominates the plain bound") {
  for (long k = 1; k <= 21; k += 2)
    for (long n = 4; n <= 400; n += 4)
      CHECK(kohnen_bound(k, n).bound >= sturm_bound_halfint(k, n).bound);
}

TEST_CASE("vanishing test verdicts") {
  QExpansion zero10 = QExpansion::zero(NumberField::rationals(), 10);
  VanishingResult r = vanishing_test(zero10, 7, 8);
  CHECK(r.verdict == VanishingVerdict::CertifiedZero);

  QExpansion f = read_qexp_file(std::string(FIXTURES_DIR) + "/level8_f.qexp");
  r = vanishing_test(f, 7, 8);
  CHECK(r.verdict == VanishingVerdict::NonzeroAt);
  CHECK(r.index == 1);

  QExpansion f1 = read_qexp_file(std::string(FIXTURES_DIR) + "/ex364_f1.qexp");
  r = vanishing_test(f1, 3, 364);
  CHECK(r.verdict == VanishingVerdict::InsufficientPrecision);
  CHECK(r.index == 85);

  // metadata-driven overload
  r = vanishing_test(f);
  CHECK(r.verdict == VanishingVerdict::NonzeroAt);
}
