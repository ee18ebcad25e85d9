#include "halfint/qexpansion.hpp"

#include <algorithm>
#include <numeric>

#include "halfint/errors.hpp"

namespace halfint {

void check_meta(const FormMeta& meta) {
  if (meta.level < 1) fail(Errc::BadLevel, "level must be positive");
  if (meta.half_integral() && meta.level % 4 != 0)
    fail(Errc::BadLevel, "half-integral weight requires 4 | level, got level " +
                             std::to_string(meta.level));
}

QExpansion::QExpansion(FieldPtr field, long first, long prec, std::vector<FieldElement> coeffs,
                       std::optional<FormMeta> meta)
    : field_(std::move(field)), first_(first), prec_(prec), coeffs_(std::move(coeffs)),
      meta_(std::move(meta)) {
  if (!field_) fail(Errc::BadArgument, "null field");
  if (first_ < 0) fail(Errc::BadArgument, "negative first exponent");
  if (prec_ < first_) fail(Errc::BadArgument, "precision below first exponent");
  if (static_cast<long>(coeffs_.size()) != prec_ - first_)
    fail(Errc::BadArgument, "coefficient count must equal prec - first");
  for (const auto& c : coeffs_)
    if (!same_field(c.field(), field_)) fail(Errc::FieldMismatch, "coefficient in a different field");
  if (meta_) check_meta(*meta_);
}

QExpansion QExpansion::zero(FieldPtr field, long prec, std::optional<FormMeta> meta) {
  return QExpansion(std::move(field), prec, prec, {}, std::move(meta));
}

FieldElement QExpansion::coeff(long n) const {
  if (n >= prec_)
    fail(Errc::PrecisionTooSmall, "coefficient of q^" + std::to_string(n) +
                                      " is beyond the known window (prec " +
                                      std::to_string(prec_) + ")");
  if (n < first_) return FieldElement::zero(field_);
  return coeffs_[n - first_];
}

bool QExpansion::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

long QExpansion::order() const {
  for (long n = first_; n < prec_; ++n)
    if (!coeffs_[n - first_].is_zero()) return n;
  return prec_;
}

QExpansion QExpansion::normalized() const {
  long start = order();
  if (start == first_) return *this;
  std::vector<FieldElement> c(coeffs_.begin() + (start - first_), coeffs_.end());
  QExpansion out(field_, start, prec_, std::move(c), meta_);
  out.notes_ = notes_;
  return out;
}

QExpansion QExpansion::with_meta(std::optional<FormMeta> meta) const {
  QExpansion out(field_, first_, prec_, coeffs_, std::move(meta));
  out.notes_ = notes_;
  return out;
}

QExpansion QExpansion::with_notes(std::vector<std::string> notes) const {
  QExpansion out(field_, first_, prec_, coeffs_, meta_);
  out.notes_ = std::move(notes);
  return out;
}

QExpansion QExpansion::truncated(long new_prec) const {
  if (new_prec > prec_) fail(Errc::PrecisionTooSmall, "cannot extend a series by truncation");
  if (new_prec >= prec_) return *this;
  long f = std::min(first_, new_prec);
  std::vector<FieldElement> c(coeffs_.begin(), coeffs_.begin() + (new_prec - f));
  QExpansion out(field_, f, new_prec, std::move(c), meta_);
  out.notes_ = notes_;
  return out;
}

bool QExpansion::operator==(const QExpansion& rhs) const {
  return same_field(field_, rhs.field_) && first_ == rhs.first_ && prec_ == rhs.prec_ &&
         coeffs_ == rhs.coeffs_ && meta_ == rhs.meta_ && notes_ == rhs.notes_;
}

namespace {

void require_same_field(const QExpansion& f, const QExpansion& g) {
  if (!same_field(f.field(), g.field()))
    fail(Errc::FieldMismatch, "series live in different fields (" + f.field()->spec() + " vs " +
                                  g.field()->spec() + ")");
}

// Meta for a sum: weights must agree and the characters must coincide
// structurally; levels merge by lcm. Anything else drops the metadata.
std::optional<FormMeta> add_meta(const std::optional<FormMeta>& a, const std::optional<FormMeta>& b) {
  if (!a || !b) return std::nullopt;
  if (a->weight_num != b->weight_num || !(a->character == b->character)) return std::nullopt;
  return FormMeta{a->weight_num, std::lcm(a->level, b->level), a->character};
}

std::optional<FormMeta> mul_meta(const std::optional<FormMeta>& a, const std::optional<FormMeta>& b) {
  if (!a || !b) return std::nullopt;
  return FormMeta{a->weight_num + b->weight_num, std::lcm(a->level, b->level),
                  DirichletCharacter::product(a->character, b->character)};
}

}  // namespace

QExpansion qx_add(const QExpansion& f, const QExpansion& g) {
  require_same_field(f, g);
  long prec = std::min(f.prec(), g.prec());
  long first = std::min(std::min(f.first(), g.first()), prec);
  std::vector<FieldElement> c;
  c.reserve(prec - first);
  for (long n = first; n < prec; ++n) c.push_back(f.coeff(n) + g.coeff(n));
  return QExpansion(f.field(), first, prec, std::move(c), add_meta(f.meta(), g.meta())).normalized();
}

QExpansion qx_sub(const QExpansion& f, const QExpansion& g) {
  return qx_add(f, qx_scale(-FieldElement::one(g.field()), g));
}

QExpansion qx_scale(const FieldElement& c, const QExpansion& f) {
  if (!same_field(c.field(), f.field()))
    fail(Errc::FieldMismatch, "scalar lives in a different field");
  std::vector<FieldElement> out;
  out.reserve(f.stored_coeffs().size());
  for (const auto& a : f.stored_coeffs()) out.push_back(c * a);
  return QExpansion(f.field(), f.first(), f.prec(), std::move(out), f.meta()).normalized();
}

QExpansion qx_mul(const QExpansion& f, const QExpansion& g) {
  require_same_field(f, g);
  long prec = std::min(f.first() + g.prec(), g.first() + f.prec());
  long first = std::min(f.first() + g.first(), prec);
  std::vector<FieldElement> c(prec - first, FieldElement::zero(f.field()));
  for (long i = f.first(); i < f.prec(); ++i) {
    const FieldElement& a = f.stored_coeffs()[i - f.first()];
    if (a.is_zero()) continue;
    long jmax = std::min(g.prec(), prec - i);
    for (long j = g.first(); j < jmax; ++j) {
      const FieldElement& b = g.stored_coeffs()[j - g.first()];
      if (b.is_zero()) continue;
      c[i + j - first] = c[i + j - first] + a * b;
    }
  }
  return QExpansion(f.field(), first, prec, std::move(c), mul_meta(f.meta(), g.meta())).normalized();
}

FormMeta theta_product_meta(const FormMeta& meta) {
  if (!meta.half_integral()) fail(Errc::BadWeight, "theta product rule applies to odd weight numerators");
  check_meta(meta);
  long k = meta.weight_num;
  DirichletCharacter twist = DirichletCharacter::minus4().power((k + 1) / 2);
  return FormMeta{k + 1, std::lcm(meta.level, 4L),
                  DirichletCharacter::product(meta.character, twist)};
}

QExpansion theta(long prec) {
  if (prec < 1) fail(Errc::BadArgument, "theta needs precision >= 1");
  std::vector<FieldElement> c(prec, FieldElement::zero(NumberField::rationals()));
  c[0] = FieldElement::from_int(NumberField::rationals(), 1);
  for (long n = 1; n * n < prec; ++n)
    c[n * n] = FieldElement::from_int(NumberField::rationals(), 2);
  FormMeta meta{1, 4, DirichletCharacter::trivial(4)};
  return QExpansion(NumberField::rationals(), 0, prec, std::move(c), meta);
}

QExpansion theta1(long prec) {
  QExpansion t = theta(prec);
  QExpansion v = op_v(4, theta(prec));
  QExpansion diff = qx_sub(t, v);
  Rational half(1, 2);
  return qx_scale(FieldElement::from_rational(NumberField::rationals(), half), diff);
}

QExpansion theta_twisted(const DirichletCharacter& psi, long prec) {
  if (prec < 1) fail(Errc::BadArgument, "theta needs precision >= 1");
  FieldPtr q = NumberField::rationals();
  std::vector<FieldElement> c(prec, FieldElement::zero(q));
  for (long n = 0; n * n < prec; ++n) {
    long b = n == 0 ? 1 : 2;
    int v = psi.eval_int(n);
    if (v != 0) c[n * n] = FieldElement::from_int(q, b * v);
  }
  long m = psi.modulus();
  FormMeta meta{1, 4 * m * m, psi};
  return QExpansion(q, 0, prec, std::move(c), meta).normalized();
}

QExpansion op_u(long d, const QExpansion& f) {
  if (d < 1) fail(Errc::BadArgument, "U(d) needs d >= 1");
  long prec = (f.prec() + d - 1) / d;
  long first = std::min((f.first() + d - 1) / d, prec);
  std::vector<FieldElement> c;
  c.reserve(prec - first);
  for (long n = first; n < prec; ++n) c.push_back(f.coeff(d * n));
  return QExpansion(f.field(), first, prec, std::move(c), f.meta()).normalized();
}

QExpansion op_v(long d, const QExpansion& f) {
  if (d < 1) fail(Errc::BadArgument, "V(d) needs d >= 1");
  std::optional<FormMeta> meta = f.meta();
  if (meta) meta->level *= d;
  if (f.stored_coeffs().empty()) {
    long prec = f.prec() == 0 ? 0 : d * (f.prec() - 1) + 1;
    return QExpansion::zero(f.field(), prec, std::move(meta));
  }
  long prec = d * (f.prec() - 1) + 1;
  long first = d * f.first();
  std::vector<FieldElement> c(prec - first, FieldElement::zero(f.field()));
  for (long n = f.first(); n < f.prec(); ++n) c[d * n - first] = f.coeff(n);
  return QExpansion(f.field(), first, prec, std::move(c), std::move(meta)).normalized();
}

QExpansion residue_slice(const QExpansion& f, long r, long m, bool check_via_uv) {
  if (m < 1 || r < 0 || r >= m) fail(Errc::BadArgument, "residue_slice needs 0 <= r < m");
  std::vector<FieldElement> c;
  c.reserve(f.stored_coeffs().size());
  for (long n = f.first(); n < f.prec(); ++n)
    c.push_back(n % m == r ? f.coeff(n) : FieldElement::zero(f.field()));
  std::optional<FormMeta> meta = (m == 1) ? f.meta() : std::nullopt;
  QExpansion direct =
      QExpansion(f.field(), f.first(), f.prec(), std::move(c), std::move(meta)).normalized();
  if (check_via_uv && m == 4 && r == 2) {
    QExpansion via_uv = qx_sub(op_v(2, op_u(2, f)), op_v(4, op_u(4, f)));
    if (!agree_below(direct, via_uv, common_prec(direct, via_uv)))
      fail(Errc::BadArgument, "internal inconsistency: U/V composite disagrees with direct filter");
  }
  return direct;
}

QExpansion coerce_to_field(const QExpansion& f, const FieldPtr& field) {
  if (same_field(f.field(), field)) return f;
  if (f.field()->degree() != 1)
    fail(Errc::FieldMismatch, "cannot coerce " + f.field()->spec() + " into " + field->spec());
  std::vector<FieldElement> c;
  c.reserve(f.stored_coeffs().size());
  for (const auto& a : f.stored_coeffs())
    c.push_back(FieldElement::from_rational(field, a.coeffs()[0]));
  return QExpansion(field, f.first(), f.prec(), std::move(c), f.meta());
}

long common_prec(const QExpansion& f, const QExpansion& g) {
  return std::min(f.prec(), g.prec());
}

bool agree_below(const QExpansion& f, const QExpansion& g, long upto) {
  if (upto > common_prec(f, g))
    fail(Errc::PrecisionTooSmall, "comparison window exceeds known precision");
  for (long n = std::min(f.first(), g.first()); n < upto; ++n)
    if (f.coeff(n) != g.coeff(n)) return false;
  return true;
}

}  // namespace halfint
