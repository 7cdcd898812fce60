#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tdga/finite_field.hpp"
#include "tdga/polynomial.hpp"

namespace tdga {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// n x n circulant matrix M_c over F_q, stored as its first column c.
/// Entry (i, j) is c[(i - j) mod n]; column j is c shifted down by j.
///
/// M_c b is the cyclic convolution c * b, so circulants of order n form the
/// ring F_q[x]/(x^n - 1) with M_c <-> c(x) = sum c_i x^i.
class Circulant {
 public:
  Circulant(const FieldParams& field, FieldVector col);
  static Circulant from_values(const FieldParams& field, std::span<const std::uint64_t> col);
  static Circulant identity(const FieldParams& field, std::size_t n);
  /// Cyclic downward shift by k (first column e_k).
  static Circulant shift(const FieldParams& field, std::size_t n, std::size_t k);

  const FieldParams& field() const { return field_; }
  std::size_t n() const { return col_.size(); }
  const FieldVector& col() const { return col_; }
  FieldElement entry(std::size_t i, std::size_t j) const;

  /// c(x) reduced representative in F_q[x].
  Polynomial as_polynomial() const;

  friend bool operator==(const Circulant&, const Circulant&) = default;

 private:
  FieldParams field_;
  FieldVector col_;
};

using DenseMatrix = std::vector<FieldVector>;  // row-major

DenseMatrix expand(const Circulant& c);

/// expand(c) * x as a cyclic convolution. Throws ParameterMismatch on length mismatch.
FieldVector circ_matvec(const Circulant& c, std::span<const FieldElement> x);
/// Circulant product; its first column is circ_matvec(a, b.col()).
Circulant circ_mul(const Circulant& a, const Circulant& b);

/// z_l(b, c) = sum_{i+j = l mod n} b_i c_j, i.e. M_c b. Satisfies M_{z(b,c)} = M_c M_b.
FieldVector z_vector(std::span<const FieldElement> b, std::span<const FieldElement> c);

/// gcd(c(x), x^n - 1) == 1.
bool circ_is_invertible(const Circulant& c);
/// Inverse via the extended Euclidean algorithm in F_q[x]/(x^n - 1).
/// Throws SingularCirculant.
Circulant circ_inverse(const Circulant& c);
/// Returns a with M_c a = w. Throws SingularCirculant.
FieldVector circ_solve(const Circulant& c, std::span<const FieldElement> w);

/// Number of invertible n x n circulants over F_q, from the factorization
/// profile of x^n - 1: prod (q^(d a) - q^(d (a - 1))) over irreducible factors.
BigInt count_invertible(std::size_t n, const FieldParams& field);
/// count_invertible / q^n, reduced.
BigRational prob_invertible(std::size_t n, const FieldParams& field);

enum class ColumnDistribution {
  uniform,     // all of F_q^n
  reversible,  // c_i == c_{n-i}
};

struct InvertibilityEstimate {
  std::uint64_t trials = 0;
  std::uint64_t invertible = 0;

  double fraction() const { return trials == 0 ? 0.0 : static_cast<double>(invertible) / static_cast<double>(trials); }
};

/// Monte Carlo invertibility rate of random circulants. Trial k draws its column
/// from the stream stream_seed(seed, k). Throws std::invalid_argument for trials == 0.
InvertibilityEstimate estimate_prob_invertible(std::size_t n, const FieldParams& field, std::uint64_t trials,
                                               std::uint64_t seed,
                                               ColumnDistribution distribution = ColumnDistribution::uniform);

}  // namespace tdga
