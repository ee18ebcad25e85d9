#include "halfint/numberfield.hpp"

#include <sstream>

#include "halfint/errors.hpp"

namespace halfint {

namespace {

// Dense polynomial over Q, lowest degree first. Trailing zeros trimmed.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

long deg(const Poly& p) { return static_cast<long>(p.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// a mod b, b nonzero. Plain long division over Q.
Poly poly_mod(Poly a, const Poly& b) {
  trim(a);
  while (deg(a) >= deg(b)) {
    Rational q = a.back() / b.back();
    long shift = deg(a) - deg(b);
    Poly t(shift, Rational(0));
    t.push_back(q);
    a = poly_sub(std::move(a), poly_mul(t, b));
  }
  return a;
}

Poly poly_derivative(const Poly& p) {
  Poly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(Rational(static_cast<long>(i)) * p[i]);
  trim(d);
  return d;
}

Poly make_monic(Poly p) {
  trim(p);
  if (p.empty()) return p;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a));
}

// Extended Euclid: returns (g, u) with u*a = g mod m, g = gcd(a, m) monic.
std::pair<Poly, Poly> poly_half_xgcd(const Poly& a, const Poly& m) {
  Poly r0 = m, r1 = a;
  Poly u0 = {}, u1 = {Rational(1)};
  trim(r1);
  while (!r1.empty()) {
    // quotient of r0 by r1
    Poly q;
    Poly rem = r0;
    trim(rem);
    while (deg(rem) >= deg(r1)) {
      Rational c = rem.back() / r1.back();
      long shift = deg(rem) - deg(r1);
      if (deg(q) < shift) q.resize(shift + 1, Rational(0));
      q[shift] += c;
      Poly t(shift, Rational(0));
      t.push_back(c);
      rem = poly_sub(std::move(rem), poly_mul(t, r1));
    }
    Poly u2 = poly_sub(u0, poly_mul(q, u1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  // normalize gcd to monic, scaling the cofactor the same way
  if (!r0.empty()) {
    Rational lead = r0.back();
    for (auto& c : r0) c /= lead;
    for (auto& c : u0) c /= lead;
  }
  return {std::move(r0), std::move(u0)};
}

}  // namespace

FieldPtr NumberField::create(std::vector<Rational> minpoly, std::string generator_name) {
  if (minpoly.size() < 2) fail(Errc::BadArgument, "minimal polynomial needs degree >= 1");
  if (minpoly.back() != 1) fail(Errc::NotMonic, "minimal polynomial is not monic");
  Poly g = poly_gcd(minpoly, poly_derivative(minpoly));
  if (deg(g) > 0) fail(Errc::NotSquarefree, "minimal polynomial is not squarefree");
  if (generator_name.empty()) generator_name = "a";
  return FieldPtr(new NumberField(std::move(minpoly), std::move(generator_name)));
}

FieldPtr NumberField::rationals() {
  static FieldPtr q = create({Rational(0), Rational(1)}, "a");
  return q;
}

std::string NumberField::spec() const {
  if (degree() == 1 && minpoly_[0] == 0) return "Q";
  std::ostringstream os;
  os << "Q[x]/(";
  for (size_t i = 0; i < minpoly_.size(); ++i) {
    if (i) os << ',';
    os << rational_to_string(minpoly_[i]);
  }
  os << ") " << generator_name_;
  return os.str();
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_field(*b);
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) fail(Errc::BadArgument, "null field");
  if (static_cast<long>(coeffs_.size()) != field_->degree())
    fail(Errc::BadArgument, "coefficient vector length does not match field degree");
}

FieldElement FieldElement::zero(const FieldPtr& field) {
  return FieldElement(field, std::vector<Rational>(field->degree(), Rational(0)));
}

FieldElement FieldElement::one(const FieldPtr& field) {
  std::vector<Rational> c(field->degree(), Rational(0));
  c[0] = 1;
  return FieldElement(field, std::move(c));
}

FieldElement FieldElement::generator(const FieldPtr& field) {
  if (field->degree() < 2)
    fail(Errc::BadArgument, "degree-1 field has no generator beyond the rationals");
  std::vector<Rational> c(field->degree(), Rational(0));
  c[1] = 1;
  return FieldElement(field, std::move(c));
}

FieldElement FieldElement::from_rational(const FieldPtr& field, const Rational& value) {
  std::vector<Rational> c(field->degree(), Rational(0));
  c[0] = value;
  return FieldElement(field, std::move(c));
}

FieldElement FieldElement::from_int(const FieldPtr& field, long value) {
  return from_rational(field, Rational(value));
}

bool FieldElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool FieldElement::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

const Rational& FieldElement::rational_value() const {
  if (field_->degree() != 1) fail(Errc::BadArgument, "element is not in a degree-1 field");
  return coeffs_[0];
}

void FieldElement::check_same_field(const FieldElement& rhs) const {
  if (!halfint::same_field(field_, rhs.field_))
    fail(Errc::FieldMismatch, "operands live in different fields (" + field_->spec() + " vs " +
                                  rhs.field_->spec() + ")");
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  check_same_field(rhs);
  std::vector<Rational> c = coeffs_;
  for (size_t i = 0; i < c.size(); ++i) c[i] += rhs.coeffs_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  check_same_field(rhs);
  std::vector<Rational> c = coeffs_;
  for (size_t i = 0; i < c.size(); ++i) c[i] -= rhs.coeffs_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-() const {
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x = -x;
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  check_same_field(rhs);
  Poly prod = poly_mul(coeffs_, rhs.coeffs_);
  Poly red = poly_mod(std::move(prod), field_->minpoly());
  red.resize(field_->degree(), Rational(0));
  return FieldElement(field_, std::move(red));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) fail(Errc::DivisionByZero, "division by zero");
  Poly a = coeffs_;
  trim(a);
  auto [g, u] = poly_half_xgcd(a, field_->minpoly());
  if (deg(g) != 0)
    fail(Errc::DivisionByZero, "element is a zero divisor modulo the minimal polynomial");
  // g is the constant 1 after normalization, so u*a = 1 mod m.
  Poly inv = poly_mod(std::move(u), field_->minpoly());
  inv.resize(field_->degree(), Rational(0));
  return FieldElement(field_, std::move(inv));
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
  check_same_field(rhs);
  return *this * rhs.inverse();
}

bool FieldElement::operator==(const FieldElement& rhs) const {
  return halfint::same_field(field_, rhs.field_) && coeffs_ == rhs.coeffs_;
}

std::string FieldElement::to_csv() const {
  std::ostringstream os;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ',';
    os << rational_to_string(coeffs_[i]);
  }
  return os.str();
}

std::string FieldElement::to_poly_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool wrote = false;
  const std::string& g = field_->generator_name();
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (!wrote) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool unit = (mag == 1);
    if (i == 0 || !unit) os << rational_to_string(mag);
    if (i >= 1) {
      if (!unit) os << '*';
      os << g;
      if (i >= 2) os << '^' << i;
    }
    wrote = true;
  }
  return os.str();
}

FieldElement FieldElement::parse_csv(const FieldPtr& field, std::string_view text, char sep) {
  std::vector<Rational> coeffs;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(sep, start);
    std::string_view tok =
        pos == std::string_view::npos ? text.substr(start) : text.substr(start, pos - start);
    coeffs.push_back(parse_rational(tok));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (static_cast<long>(coeffs.size()) > field->degree())
    fail(Errc::ParseError, "too many coefficients for field of degree " +
                               std::to_string(field->degree()));
  coeffs.resize(field->degree(), Rational(0));
  return FieldElement(field, std::move(coeffs));
}

}  // namespace halfint
