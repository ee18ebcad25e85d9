#include "halfint/bounds.hpp"

#include "halfint/errors.hpp"

namespace halfint {

long gamma0_index(long n) {
  if (n < 1) fail(Errc::BadArgument, "level must be positive");
  long index = n;
  long rest = n;
  for (long p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    index = index / p * (p + 1);
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1) index = index / rest * (rest + 1);
  return index;
}

std::string SturmBound::kind_name() const {
  switch (kind) {
    case Kind::HalfIntegral: return "sturm";
    case Kind::Kohnen: return "kohnen";
    case Kind::Window: return "window";
  }
  return "?";
}

namespace {

void check_weight_level(long k, long n) {
  if (k < 1 || k % 2 == 0) fail(Errc::BadWeight, "weight numerator must be odd and positive");
  if (n < 1 || n % 4 != 0) fail(Errc::BadLevel, "level must be a positive multiple of 4");
}

long rational_floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q.get_si();
}

SturmBound make_bound(SturmBound::Kind kind, long k, long n, long index) {
  Rational b = Rational(k) * Rational(index) / Rational(24);
  b.canonicalize();
  return SturmBound{kind, k, n, index, b, rational_floor(b)};
}

}  // namespace

SturmBound sturm_bound_halfint(long k, long n) {
  check_weight_level(k, n);
  return make_bound(SturmBound::Kind::HalfIntegral, k, n, gamma0_index(n));
}

SturmBound kohnen_bound(long k, long n) {
  check_weight_level(k, n);
  return make_bound(SturmBound::Kind::Kohnen, k, n, gamma0_index(4 * n));
}

SturmBound window_bound(long k, long n, long upto) {
  check_weight_level(k, n);
  if (upto < 1) fail(Errc::BadArgument, "window bound must be positive");
  return SturmBound{SturmBound::Kind::Window, k, n, 0, Rational(upto), upto};
}

VanishingResult vanishing_test(const QExpansion& f, long k, long n) {
  SturmBound b = sturm_bound_halfint(k, n);
  if (f.prec() <= b.floor)
    return {VanishingVerdict::InsufficientPrecision, b.floor + 1, b};
  for (long m = 0; m <= b.floor; ++m)
    if (!f.coeff(m).is_zero()) return {VanishingVerdict::NonzeroAt, m, b};
  return {VanishingVerdict::CertifiedZero, -1, b};
}

VanishingResult vanishing_test(const QExpansion& f) {
  if (!f.meta()) fail(Errc::BadArgument, "series carries no metadata; pass k and N explicitly");
  return vanishing_test(f, f.meta()->weight_num, f.meta()->level);
}

}  // namespace halfint
