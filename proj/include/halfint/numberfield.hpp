#ifndef HALFINT_NUMBERFIELD_HPP
#define HALFINT_NUMBERFIELD_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "halfint/rational.hpp"

namespace halfint {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Q or Q(alpha) = Q[x]/(m(x)) for a monic squarefree m with rational
/// coefficients. Degree 1 designates Q itself; the canonical presentation of Q
/// is m(x) = x. Irreducibility is not checked, only squarefreeness; a
/// reducible modulus still gives a consistent commutative ring and division
/// reports DivisionByZero on zero divisors.
class NumberField {
 public:
  /// minpoly is c0, c1, ..., c_d with c_d = 1.
  static FieldPtr create(std::vector<Rational> minpoly, std::string generator_name);

  /// Q presented as Q[x]/(x), generator name "a" (unused at degree 1).
  static FieldPtr rationals();

  long degree() const { return static_cast<long>(minpoly_.size()) - 1; }
  const std::vector<Rational>& minpoly() const { return minpoly_; }
  const std::string& generator_name() const { return generator_name_; }
  bool is_rationals() const { return degree() == 1; }

  /// Structural identity: equal minpoly. Generator names are labels only.
  bool same_field(const NumberField& other) const { return minpoly_ == other.minpoly_; }

  /// "Q" for the canonical degree-1 field, else "Q[x]/(c0,c1,...,1) name".
  std::string spec() const;

 private:
  NumberField(std::vector<Rational> minpoly, std::string generator_name)
      : minpoly_(std::move(minpoly)), generator_name_(std::move(generator_name)) {}

  std::vector<Rational> minpoly_;
  std::string generator_name_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

/// An element c0 + c1*alpha + ... + c_{d-1}*alpha^{d-1}; the coefficient
/// vector always has length exactly d.
class FieldElement {
 public:
  FieldElement(FieldPtr field, std::vector<Rational> coeffs);

  static FieldElement zero(const FieldPtr& field);
  static FieldElement one(const FieldPtr& field);
  static FieldElement generator(const FieldPtr& field);
  static FieldElement from_rational(const FieldPtr& field, const Rational& value);
  static FieldElement from_int(const FieldPtr& field, long value);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_one() const;

  /// Only valid over Q (degree 1).
  const Rational& rational_value() const;

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  bool operator==(const FieldElement& rhs) const;
  bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

  /// Comma-separated coefficient list, exactly d entries.
  std::string to_csv() const;
  /// Polynomial in the generator, ascending powers, e.g. "14/19 - 2/19*b".
  std::string to_poly_string() const;

  /// Parses a coefficient list (default separator ','); fewer than d entries
  /// are zero-padded, more than d is an error.
  static FieldElement parse_csv(const FieldPtr& field, std::string_view text, char sep = ',');

 private:
  void check_same_field(const FieldElement& rhs) const;

  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

}  // namespace halfint

#endif
