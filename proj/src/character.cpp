#include "halfint/character.hpp"

#include <numeric>
#include <sstream>

#include "halfint/errors.hpp"

namespace halfint {

namespace {

long lcm_long(long a, long b) { return std::lcm(a, b); }

long positive_mod(long long n, long m) {
  long r = static_cast<long>(((n % m) + m) % m);
  return r;
}

int kronecker_symbol(long d, long n) {
  mpz_class bottom(n);
  return mpz_si_kronecker(d, bottom.get_mpz_t());
}

}  // namespace

DirichletCharacter::DirichletCharacter(
    Kind kind, long modulus, long d,
    std::shared_ptr<const std::pair<DirichletCharacter, DirichletCharacter>> parts)
    : kind_(kind), modulus_(modulus), d_(d), parts_(std::move(parts)) {
  finalize();
}

void DirichletCharacter::finalize() {
  // Order and parity by scanning one period; supported kinds take values in
  // {-1, 0, 1}, so a nontrivial character has order exactly 2.
  order_ = 1;
  for (long n = 0; n < modulus_; ++n) {
    if (eval_int(n) == -1) {
      order_ = 2;
      break;
    }
  }
  even_ = modulus_ <= 2 || eval_int(modulus_ - 1) == 1;
}

DirichletCharacter DirichletCharacter::trivial(long modulus) {
  if (modulus < 1) fail(Errc::BadArgument, "character modulus must be positive");
  return DirichletCharacter(Kind::Trivial, modulus, 0, nullptr);
}

DirichletCharacter DirichletCharacter::minus4() {
  return DirichletCharacter(Kind::Minus4, 4, 0, nullptr);
}

DirichletCharacter DirichletCharacter::kronecker(long d) {
  if (d == 0) fail(Errc::BadArgument, "kron:0 is not a Dirichlet character");
  long ad = d < 0 ? -d : d;
  long m = positive_mod(d, 4);
  long modulus = (m == 0 || m == 1) ? ad : 4 * ad;
  return DirichletCharacter(Kind::Kronecker, modulus, d, nullptr);
}

DirichletCharacter DirichletCharacter::product(const DirichletCharacter& a,
                                               const DirichletCharacter& b) {
  long m = lcm_long(a.modulus_, b.modulus_);
  if (a.kind_ == Kind::Trivial && m == b.modulus_) return b;
  if (b.kind_ == Kind::Trivial && m == a.modulus_) return a;
  if (a.kind_ == Kind::Trivial && b.kind_ == Kind::Trivial) return trivial(m);
  if (a == b) return trivial(m);  // order <= 2, so chi*chi is trivial
  auto parts = std::make_shared<const std::pair<DirichletCharacter, DirichletCharacter>>(a, b);
  return DirichletCharacter(Kind::Product, m, 0, std::move(parts));
}

int DirichletCharacter::eval_int(long long n) const {
  long r = positive_mod(n, modulus_);
  if (modulus_ > 1 && std::gcd(r, modulus_) != 1) return 0;
  switch (kind_) {
    case Kind::Trivial:
      return 1;
    case Kind::Minus4:
      return r % 4 == 1 ? 1 : -1;  // even residues already returned 0
    case Kind::Kronecker:
      if (modulus_ == 1) return 1;
      return kronecker_symbol(d_, r);
    case Kind::Product:
      return parts_->first.eval_int(r) * parts_->second.eval_int(r);
  }
  return 0;
}

FieldElement DirichletCharacter::eval_fe(long long n) const {
  return FieldElement::from_int(NumberField::rationals(), eval_int(n));
}

DirichletCharacter DirichletCharacter::power(long e) const {
  if (e < 0) e = -e;  // order <= 2: inverse equals the character itself
  return (e % order_ == 0) ? trivial(modulus_) : *this;
}

std::string DirichletCharacter::spec() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Trivial:
      os << "triv:" << modulus_;
      break;
    case Kind::Minus4:
      os << "minus4";
      break;
    case Kind::Kronecker:
      os << "kron:" << d_;
      break;
    case Kind::Product:
      os << "prod(" << parts_->first.spec() << ',' << parts_->second.spec() << ')';
      break;
  }
  return os.str();
}

namespace {

long parse_long_tail(std::string_view s, std::string_view what) {
  if (s.empty()) fail(Errc::ParseError, std::string("missing integer after '") + std::string(what) + "'");
  try {
    size_t used = 0;
    long v = std::stol(std::string(s), &used);
    if (used != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    fail(Errc::ParseError, "bad integer '" + std::string(s) + "' in character spec");
  }
}

}  // namespace

DirichletCharacter DirichletCharacter::parse(std::string_view spec) {
  if (spec == "minus4") return minus4();
  if (spec.rfind("triv:", 0) == 0) {
    long n = parse_long_tail(spec.substr(5), "triv:");
    if (n < 1) fail(Errc::ParseError, "trivial character needs a positive modulus");
    return trivial(n);
  }
  if (spec.rfind("kron:", 0) == 0) {
    long d = parse_long_tail(spec.substr(5), "kron:");
    if (d == 0) fail(Errc::ParseError, "kron:0 is not a Dirichlet character");
    return kronecker(d);
  }
  if (spec.rfind("prod(", 0) == 0 && spec.back() == ')') {
    std::string_view body = spec.substr(5, spec.size() - 6);
    // split at the top-level comma
    int depth = 0;
    for (size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '(') ++depth;
      else if (body[i] == ')') --depth;
      else if (body[i] == ',' && depth == 0)
        return product(parse(body.substr(0, i)), parse(body.substr(i + 1)));
    }
    fail(Errc::ParseError, "prod(...) needs two comma-separated character specs");
  }
  fail(Errc::ParseError, "unrecognized character spec '" + std::string(spec) + "'");
}

}  // namespace halfint
