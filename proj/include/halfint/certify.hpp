#ifndef HALFINT_CERTIFY_HPP
#define HALFINT_CERTIFY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "halfint/bounds.hpp"
#include "halfint/qexpansion.hpp"

namespace halfint {

enum class CertKind { Span, Recovery, Kohnen, Kernel };

enum class Verdict {
  Certified,
  Recovered,
  KernelComputed,
  NotInSpan,
  NotInPlusSpace,
  ConsistentUpTo,
};

const char* cert_kind_name(CertKind k);
const char* verdict_name(Verdict v);

/// 0 = certified/success, 1 = definitive negative verdict,
/// 2 = indeterminate (window short of the bound).
int verdict_exit_code(Verdict v);

/// Machine-checkable outcome of a certification run. Deterministic: the same
/// inputs serialize byte-for-byte identically.
struct Certificate {
  CertKind kind;
  Verdict verdict;
  /// NotInSpan/NotInPlusSpace: least violating n. ConsistentUpTo: last row
  /// checked. Unused otherwise (-1).
  long verdict_index = -1;
  FieldPtr field;
  std::vector<FieldElement> lambdas;
  std::vector<long> pivot_rows;
  long residual_checked_rows = 0;
  std::optional<SturmBound> bound;
  std::vector<long> forbidden_residues;                 // Kohnen only
  std::vector<std::vector<FieldElement>> kernel_basis;  // Kernel only
  long induction_depth = 0;                             // Recovery only
  std::optional<QExpansion> reconstruction;
  std::vector<std::string> notes;

  int exit_code() const { return verdict_exit_code(verdict); }
  /// Canonical human-readable report.
  std::string report() const;
  /// Canonical machine format (line-oriented key/value text).
  std::string machine() const;
};

/// Term-by-term division: given product = factor * h with the factor's
/// leading coefficient nonzero, reconstructs h on the provable window
/// prec(h) = min(prec(product), prec(factor) + first(h)) - first(factor).
/// The certificate records the induction depth (number of coefficients
/// recovered).
std::pair<QExpansion, Certificate> recover_cofactor(const QExpansion& product,
                                                    const QExpansion& factor);

struct SpanOptions {
  /// Accept a data window shorter than floor(bound); the verdict weakens
  /// from Certified to ConsistentUpTo(last checked row).
  bool allow_short_window = false;
};

/// Writes target = sum lambda_i basis_i by solving on the first r
/// independent rows (lexicographically first set, deterministic), then
/// verifies the residual on every row both sides know. Certified requires
/// the full window 1..floor(bound); any residual violation yields NotInSpan
/// at the least violating index. Rational targets are coerced into the basis
/// field; anything else must match exactly.
Certificate certify_span(const std::vector<QExpansion>& basis, const QExpansion& target,
                         const SturmBound& bound, const SpanOptions& opts = {});

struct PivotPair {
  long m0;
  long n0;
};

/// Pivot indices for the 2-dimensional fast path: n0 = least index with
/// a1(n0) != 0; m0 = least index in a residue class mod 4 forbidden for the
/// plus-space at weight k/2 with a1(m0) = 0 and a2(m0) != 0. Both must lie
/// within min(prec, floor(kohnen bound)).
PivotPair select_pivots(const QExpansion& f1, const QExpansion& f2, long k, long n);

/// Triangular 2x2 solve at the pivots: lambda2 = a_f(m0)/a2(m0),
/// lambda1 = (a_f(n0) - lambda2 a2(n0))/a1(n0). Pivots come from
/// select_pivots.
Certificate certify_rank2(const QExpansion& f1, const QExpansion& f2, long k, long n,
                          const FieldElement& value_m0, const FieldElement& value_n0);

/// Same solve at caller-chosen pivots; throws PivotViolation when the
/// supplied series break a1(m0) = 0, a2(m0) != 0 or a1(n0) != 0.
Certificate certify_rank2_at(const QExpansion& f1, const QExpansion& f2, long k, long n, long m0,
                             long n0, const FieldElement& value_m0, const FieldElement& value_n0);

/// Plus-space membership scan: forbidden residues mod 4 are 2 and
/// (-1)^{(k+1)/2}. Certified needs the full window 1..floor(B'); a clean but
/// short window gives ConsistentUpTo(prec-1). The n = 2 (mod 4) half of the
/// scan is cross-checked through the V(2)U(2) - V(4)U(4) composite.
Certificate kohnen_check(const QExpansion& f, long k, long n);

struct EigenSliceInput {
  std::vector<QExpansion> basis;
  /// One entry per prime p: the images of each basis element under the
  /// weight-k/2 Hecke operator at p^2, ingested as data.
  std::vector<std::pair<long, std::vector<QExpansion>>> images;
  /// Aligned with images: the target eigenvalue for each prime.
  std::vector<std::pair<long, FieldElement>> eigenvalues;
};

/// Exact nullspace of the stacked rows image_i(n) - lambda_p * basis_i(n)
/// over n in [window_lo, window_hi], all supplied primes simultaneously.
Certificate eigenspace_kernel(const EigenSliceInput& input, long window_lo, long window_hi);

}  // namespace halfint

#endif
