#ifndef HALFINT_QEXPANSION_HPP
#define HALFINT_QEXPANSION_HPP

#include <optional>
#include <string>
#include <vector>

#include "halfint/character.hpp"
#include "halfint/numberfield.hpp"

namespace halfint {

/// (weight numerator, level, nebentypus). weight_num is always the numerator
/// over 2: an odd value k means weight k/2 (half-integral, level must be
/// divisible by 4), an even value 2w means integral weight w.
struct FormMeta {
  long weight_num;
  long level;
  DirichletCharacter character;

  bool half_integral() const { return weight_num % 2 != 0; }
  bool operator==(const FormMeta& rhs) const {
    return weight_num == rhs.weight_num && level == rhs.level && character == rhs.character;
  }
};

/// Validates the 4 | N constraint for half-integral weights.
void check_meta(const FormMeta& meta);

/// A truncated Fourier expansion sum a(n) q^n with coefficients stored
/// densely for first <= n < prec and known to be exact on that window;
/// a(n) = 0 for n < first. The canonical zero-to-precision object has
/// first == prec and no stored coefficients.
class QExpansion {
 public:
  QExpansion(FieldPtr field, long first, long prec, std::vector<FieldElement> coeffs,
             std::optional<FormMeta> meta = std::nullopt);

  static QExpansion zero(FieldPtr field, long prec, std::optional<FormMeta> meta = std::nullopt);

  const FieldPtr& field() const { return field_; }
  long first() const { return first_; }
  long prec() const { return prec_; }
  const std::optional<FormMeta>& meta() const { return meta_; }
  const std::vector<FieldElement>& stored_coeffs() const { return coeffs_; }
  const std::vector<std::string>& notes() const { return notes_; }

  /// a(n) for n < prec; throws PrecisionTooSmall beyond the window.
  FieldElement coeff(long n) const;
  bool is_zero() const;
  /// Least n with a(n) != 0, or prec if zero to precision.
  long order() const;

  /// Same series with leading zero coefficients stripped (first advanced);
  /// an all-zero series collapses to the canonical zero-to-precision object.
  QExpansion normalized() const;

  QExpansion with_meta(std::optional<FormMeta> meta) const;
  QExpansion with_notes(std::vector<std::string> notes) const;
  QExpansion truncated(long new_prec) const;

  /// Exact structural equality: field, window, coefficients, meta, notes.
  bool operator==(const QExpansion& rhs) const;
  bool operator!=(const QExpansion& rhs) const { return !(*this == rhs); }

 private:
  FieldPtr field_;
  long first_, prec_;
  std::vector<FieldElement> coeffs_;
  std::optional<FormMeta> meta_;
  std::vector<std::string> notes_;
};

QExpansion qx_add(const QExpansion& f, const QExpansion& g);
QExpansion qx_sub(const QExpansion& f, const QExpansion& g);
QExpansion qx_scale(const FieldElement& c, const QExpansion& f);

/// Cauchy product. Window: first = first_f + first_g,
/// prec = min(first_f + prec_g, first_g + prec_f). Metadata: weight
/// numerators add, level = lcm, character = product; callers multiplying by a
/// theta-type factor apply theta_product_meta themselves.
QExpansion qx_mul(const QExpansion& f, const QExpansion& g);

/// Metadata rule for multiplying a weight-k/2 form by the standard theta
/// series: weight numerator k+1, level lcm(N, 4), character twisted by the
/// (k+1)/2-th power of the nontrivial character mod 4.
FormMeta theta_product_meta(const FormMeta& meta);

/// 1 + 2q + 2q^4 + 2q^9 + ... to the given precision.
QExpansion theta(long prec);
/// (theta - V(4) theta) / 2, computed literally from that expression.
QExpansion theta1(long prec);
/// sum psi(n) b(n) q^{n^2} with b(0)=1, b(n)=2; psi should be even (the
/// parity is recorded on the character, callers may warn).
QExpansion theta_twisted(const DirichletCharacter& psi, long prec);

/// U(d): a(n) -> a(d n); prec becomes ceil(prec/d); metadata unchanged.
QExpansion op_u(long d, const QExpansion& f);
/// V(d): q^n -> q^{d n}; prec becomes d*(prec-1)+1; level multiplied by d.
QExpansion op_v(long d, const QExpansion& f);

/// Keeps exactly the terms with n = r (mod m); precision unchanged. With
/// check_via_uv set and (r, m) = (2, 4), the result is recomputed through
/// V(2)U(2) - V(4)U(4) and the two routes are asserted equal on their common
/// window.
QExpansion residue_slice(const QExpansion& f, long r, long m, bool check_via_uv = false);

/// Embeds a series with degree-1 (rational) coefficients into another field
/// as constants; the identity when the fields already match. No other
/// coercion exists: distinct extensions never mix.
QExpansion coerce_to_field(const QExpansion& f, const FieldPtr& field);

/// Largest window on which both series are known.
long common_prec(const QExpansion& f, const QExpansion& g);
/// Coefficientwise equality for all n < upto.
bool agree_below(const QExpansion& f, const QExpansion& g, long upto);

}  // namespace halfint

#endif
