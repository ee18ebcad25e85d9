#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "halfint/character.hpp"
#include "halfint/errors.hpp"
#include "oracles.hpp"

using namespace halfint;

TEST_CASE("defining values") {
  DirichletCharacter m4 = DirichletCharacter::minus4();
  CHECK(m4.eval_int(1) == 1);
  CHECK(m4.eval_int(3) == -1);
  CHECK(m4.eval_int(2) == 0);
  CHECK(m4.modulus() == 4);
  CHECK(m4.order() == 2);
}

TEST_CASE("parity flag") {
  // minus4 is the odd character mod 4; kron:13 is even; kron:-4 is odd
  CHECK(!DirichletCharacter::minus4().is_even());
  CHECK(DirichletCharacter::kronecker(13).is_even());
  CHECK(!DirichletCharacter::kronecker(-4).is_even());
  CHECK(DirichletCharacter::trivial(8).is_even());
}

TEST_CASE("kronecker character mod 13") {
  DirichletCharacter chi = DirichletCharacter::kronecker(13);
  CHECK(chi.modulus() == 13);
  // squares mod 13 are {1,3,4,9,10,12}
  CHECK(chi.eval_int(3) == 1);
  CHECK(chi.eval_int(2) == -1);
  CHECK(chi.eval_int(13) == 0);
  CHECK(chi.order() == 2);
}

TEST_CASE("kronecker agrees with the Euler-criterion oracle at odd primes") {
  std::vector<long> primes;
  for (long p = 3; p < 100; p += 2) {
    bool is_prime = true;
    for (long d = 3; d * d <= p; d += 2)
      if (p % d == 0) is_prime = false;
    if (is_prime) primes.push_back(p);
  }
  for (long d : {13L, 5L, -7L, 8L, 12L, 3L, 6L, -5L, 21L}) {
    DirichletCharacter chi = DirichletCharacter::kronecker(d);
    for (long p : primes) {
      if (d % p == 0) continue;
      CHECK_MESSAGE(chi.eval_int(p) == oracles::euler_criterion(d, p),
                    "d=" << d << " p=" << p);
    }
  }
}

TEST_CASE("orders and powers") {
  CHECK(DirichletCharacter::trivial(8).order() == 1);
  DirichletCharacter m4 = DirichletCharacter::minus4();
  DirichletCharacter sq = m4.power(2);
  CHECK(sq.is_trivial());
  CHECK(sq.modulus() == 4);
  CHECK(sq == DirichletCharacter::trivial(4));
  CHECK(m4.power(3) == m4);
  CHECK(m4.power(0).is_trivial());
}

TEST_CASE("products") {
  DirichletCharacter p =
      DirichletCharacter::product(DirichletCharacter::trivial(8), DirichletCharacter::minus4());
  CHECK(p.modulus() == 8);
  CHECK(p.eval_int(3) == -1);
  CHECK(p.spec() == "prod(triv:8,minus4)");

  // trivial factors with compatible moduli are absorbed
  DirichletCharacter q =
      DirichletCharacter::product(DirichletCharacter::trivial(4), DirichletCharacter::minus4());
  CHECK(q == DirichletCharacter::minus4());

  DirichletCharacter t =
      DirichletCharacter::product(DirichletCharacter::trivial(8), DirichletCharacter::trivial(4));
  CHECK(t.spec() == "triv:8");

  DirichletCharacter chi13 = DirichletCharacter::kronecker(13);
  CHECK(DirichletCharacter::product(chi13, chi13) == DirichletCharacter::trivial(13));
}

TEST_CASE("spec strings round-trip") {
  for (const char* s : {"triv:8", "minus4", "kron:13", "kron:-7", "prod(triv:8,minus4)",
                        "prod(kron:13,prod(triv:8,minus4))"}) {
    DirichletCharacter c = DirichletCharacter::parse(s);
    CHECK(c.spec() == s);
    CHECK(DirichletCharacter::parse(c.spec()) == c);
  }
  CHECK_THROWS_AS(DirichletCharacter::parse("kron:0"), Error);
  CHECK_THROWS_AS(DirichletCharacter::parse("TRIV:8"), Error);
  CHECK_THROWS_AS(DirichletCharacter::parse("prod(triv:8)"), Error);
  CHECK_THROWS_AS(DirichletCharacter::parse("triv:x"), Error);
}

TEST_CASE("complete multiplicativity, exhaustive below 200") {
  std::vector<DirichletCharacter> chars{
      DirichletCharacter::trivial(8), DirichletCharacter::minus4(),
      DirichletCharacter::kronecker(13), DirichletCharacter::kronecker(12),
      DirichletCharacter::kronecker(-7), DirichletCharacter::kronecker(3),
      DirichletCharacter::parse("prod(triv:8,minus4)"),
      DirichletCharacter::parse("prod(kron:13,minus4)")};
  for (const auto& chi : chars) {
    long n_mod = chi.modulus();
    for (long m = 1; m < 200; ++m) {
      for (long n = 1; n < 200; ++n) {
        if (std::gcd(m * n, n_mod) != 1) continue;
        CHECK(chi.eval_int(m * n) == chi.eval_int(m) * chi.eval_int(n));
      }
    }
  }
}

TEST_CASE("periodicity and zero set") {
  std::vector<DirichletCharacter> chars{
      DirichletCharacter::trivial(6), DirichletCharacter::minus4(),
      DirichletCharacter::kronecker(13), DirichletCharacter::kronecker(3),
      DirichletCharacter::parse("prod(triv:8,minus4)")};
  for (const auto& chi : chars) {
    long n_mod = chi.modulus();
    for (long n = 0; n < 10 * n_mod; ++n) {
      CHECK(chi.eval_int(n + n_mod) == chi.eval_int(n));
      CHECK((chi.eval_int(n) == 0) == (std::gcd(n, n_mod) > 1 && n_mod > 1));
    }
  }
}

TEST_CASE("power by the order is trivial") {
  std::vector<DirichletCharacter> chars{
      DirichletCharacter::trivial(8), DirichletCharacter::minus4(),
      DirichletCharacter::kronecker(13), DirichletCharacter::parse("prod(triv:8,minus4)")};
  for (const auto& chi : chars) {
    DirichletCharacter t = chi.power(chi.order());
    for (long n = 0; n < 10 * chi.modulus(); ++n)
      CHECK(t.eval_int(n) == (std::gcd(n, chi.modulus()) == 1 || chi.modulus() == 1 ? 1 : 0));
  }
}
