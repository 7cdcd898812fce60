#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tdga/finite_field.hpp"

namespace tdga {

/// Dense univariate polynomial over F_q. coeffs()[i] is the coefficient of
/// x^i; trailing zeros are stripped, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  explicit Polynomial(const FieldParams& field) : field_(field) {}
  Polynomial(const FieldParams& field, std::vector<FieldElement> coeffs);

  static Polynomial from_values(const FieldParams& field, std::span<const std::uint64_t> values);
  static Polynomial constant(const FieldParams& field, std::uint64_t value);
  static Polynomial monomial(const FieldParams& field, std::size_t degree);
  /// x^n - 1.
  static Polynomial cyclic_modulus(const FieldParams& field, std::size_t n);

  const FieldParams& field() const { return field_; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  FieldElement leading() const;
  /// Coefficient of x^i, zero past the degree.
  FieldElement coeff(std::size_t i) const;

  Polynomial monic() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize();

  FieldParams field_;
  std::vector<FieldElement> coeffs_;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_sub(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
Polynomial poly_scale(const Polynomial& f, FieldElement c);

struct PolyDivision {
  Polynomial quotient;
  Polynomial remainder;
};

/// Throws DivisionByZero for a zero divisor.
PolyDivision poly_divmod(const Polynomial& f, const Polynomial& g);
Polynomial poly_rem(const Polynomial& f, const Polynomial& g);

/// Monic gcd. Throws std::invalid_argument if both inputs are zero.
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

struct ExtendedGcd {
  Polynomial gcd;  // monic
  Polynomial u;    // u*f + v*g == gcd
  Polynomial v;
};

ExtendedGcd poly_ext_gcd(const Polynomial& f, const Polynomial& g);

/// base^e mod modulus by repeated squaring.
Polynomial poly_powmod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus);

/// One class of irreducible factors: `count` distinct irreducibles of the
/// given degree, each appearing with exponent `multiplicity`.
struct FactorClass {
  std::size_t degree;
  std::size_t multiplicity;
  std::size_t count;

  friend bool operator==(const FactorClass&, const FactorClass&) = default;
};

/// Shape of the factorization of x^n - 1 over F_q, without the factors.
struct FactorProfile {
  std::size_t n;
  std::uint64_t q;
  std::vector<FactorClass> classes;  // ascending degree

  /// Sum of degree*multiplicity over all irreducible factors; equals n.
  std::size_t total_degree() const;
  /// Number of distinct irreducible factors.
  std::size_t distinct_factors() const;

  friend bool operator==(const FactorProfile&, const FactorProfile&) = default;
};

/// Degrees and multiplicities of the irreducible factors of x^n - 1.
///
/// Writes n = p^k * m with p = q not dividing m, so x^n - 1 = (x^m - 1)^(p^k),
/// and runs distinct-degree factorization on the square-free x^m - 1.
/// Throws std::invalid_argument for n == 0.
FactorProfile factor_profile_xn_minus_1(std::size_t n, const FieldParams& field);

}  // namespace tdga
