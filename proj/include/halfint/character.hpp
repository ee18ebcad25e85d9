#ifndef HALFINT_CHARACTER_HPP
#define HALFINT_CHARACTER_HPP

#include <memory>
#include <string>
#include <string_view>

#include "halfint/numberfield.hpp"
#include "halfint/rational.hpp"

namespace halfint {

/// Exact Dirichlet characters of order 1 or 2: trivial characters, the
/// nontrivial character mod 4, Kronecker-symbol characters and products of
/// those. Values are in {-1, 0, 1}; chi(n) = 0 exactly when gcd(n, modulus) > 1.
/// Immutable and freely shareable.
class DirichletCharacter {
 public:
  static DirichletCharacter trivial(long modulus);
  /// The nontrivial character mod 4: 1 at n=1, -1 at n=3, 0 at even n.
  static DirichletCharacter minus4();
  /// chi_d(n) = Kronecker symbol (d/n). Modulus |d| when d = 0,1 (mod 4),
  /// else 4|d|; d = 0 is rejected.
  static DirichletCharacter kronecker(long d);
  /// Pointwise product on the lcm of the moduli; no conductor reduction
  /// beyond absorbing a trivial factor whose modulus divides the other's.
  static DirichletCharacter product(const DirichletCharacter& a, const DirichletCharacter& b);

  /// Grammar: `triv:N`, `minus4`, `kron:d`, `prod(spec,spec)`. Case-sensitive.
  static DirichletCharacter parse(std::string_view spec);
  std::string spec() const;

  long modulus() const { return modulus_; }
  int order() const { return order_; }
  bool is_even() const { return even_; }
  bool is_trivial() const { return order_ == 1; }

  int eval_int(long long n) const;
  Rational eval(long long n) const { return Rational(eval_int(n)); }
  /// Value as an element of Q.
  FieldElement eval_fe(long long n) const;

  DirichletCharacter power(long e) const;

  /// Structural equality (same canonical spec string).
  bool operator==(const DirichletCharacter& rhs) const { return spec() == rhs.spec(); }
  bool operator!=(const DirichletCharacter& rhs) const { return !(*this == rhs); }

 private:
  enum class Kind { Trivial, Minus4, Kronecker, Product };

  DirichletCharacter(Kind kind, long modulus, long d,
                     std::shared_ptr<const std::pair<DirichletCharacter, DirichletCharacter>> parts);
  void finalize();

  Kind kind_;
  long modulus_;
  long d_ = 0;  // Kronecker top argument
  std::shared_ptr<const std::pair<DirichletCharacter, DirichletCharacter>> parts_;
  int order_ = 1;
  bool even_ = true;
};

}  // namespace halfint

#endif
