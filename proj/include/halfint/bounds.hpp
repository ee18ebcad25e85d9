#ifndef HALFINT_BOUNDS_HPP
#define HALFINT_BOUNDS_HPP

#include <string>

#include "halfint/qexpansion.hpp"
#include "halfint/rational.hpp"

namespace halfint {

/// Index [SL2(Z) : Gamma0(N)] = N * prod_{p | N} (1 + 1/p), exact integer
/// arithmetic (multiply by p+1, divide by p, one prime at a time).
long gamma0_index(long n);

/// An exact vanishing bound together with the data that produced it. For the
/// computed kinds, bound = k * index / 24 holds exactly, where index is the
/// Gamma0 index at level N (HalfIntegral) or 4N (Kohnen). Window bounds carry
/// a caller-chosen cutoff instead and have no index.
struct SturmBound {
  enum class Kind { HalfIntegral, Kohnen, Window };

  Kind kind;
  long k;
  long level;
  long index;  // 0 for Window
  Rational bound;
  long floor;

  std::string kind_name() const;
};

/// k odd >= 1, 4 | N; bound k*[SL2:Gamma0(N)]/24.
SturmBound sturm_bound_halfint(long k, long n);
/// Same weight/level checks; bound k*[SL2:Gamma0(4N)]/24.
SturmBound kohnen_bound(long k, long n);
/// Explicit caller-chosen cutoff for span certification on short data.
SturmBound window_bound(long k, long n, long upto);

enum class VanishingVerdict { CertifiedZero, NonzeroAt, InsufficientPrecision };

struct VanishingResult {
  VanishingVerdict verdict;
  /// NonzeroAt: least n <= floor(B) with a(n) != 0.
  /// InsufficientPrecision: the precision needed, floor(B) + 1.
  long index;
  SturmBound bound;
};

/// The executable vanishing test: a definitive verdict needs
/// prec > floor(B); otherwise InsufficientPrecision is returned even when a
/// nonzero coefficient is already visible. CertifiedZero is conditional on
/// the input being a genuine modular form of the stated weight and level,
/// which this library cannot check; reports carry that label.
VanishingResult vanishing_test(const QExpansion& f, long k, long n);
/// Same, taking k and N from the series metadata.
VanishingResult vanishing_test(const QExpansion& f);

}  // namespace halfint

#endif
