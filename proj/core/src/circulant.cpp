#include "tdga/circulant.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "tdga/errors.hpp"
#include "tdga/rng.hpp"

namespace tdga {

Circulant::Circulant(const FieldParams& field, FieldVector col) : field_(field), col_(std::move(col)) {
  if (col_.empty()) throw std::invalid_argument("circulant of order 0");
  for (const auto& c : col_) {
    if (c.modulus() != field_.q()) throw ParameterMismatch("circulant entry over a different field");
  }
}

Circulant Circulant::from_values(const FieldParams& field, std::span<const std::uint64_t> col) {
  FieldVector v;
  v.reserve(col.size());
  for (auto x : col) v.emplace_back(field, x);
  return {field, std::move(v)};
}

Circulant Circulant::identity(const FieldParams& field, std::size_t n) { return shift(field, n, 0); }

Circulant Circulant::shift(const FieldParams& field, std::size_t n, std::size_t k) {
  FieldVector v(n, FieldElement::zero(field));
  v.at(k % n) = FieldElement::one(field);
  return {field, std::move(v)};
}

FieldElement Circulant::entry(std::size_t i, std::size_t j) const {
  const std::size_t n = col_.size();
  return col_.at((i % n + n - j % n) % n);
}

Polynomial Circulant::as_polynomial() const { return Polynomial(field_, col_); }

DenseMatrix expand(const Circulant& c) {
  const std::size_t n = c.n();
  DenseMatrix m(n, FieldVector(n, FieldElement::zero(c.field())));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = c.entry(i, j);
  }
  return m;
}

FieldVector circ_matvec(const Circulant& c, std::span<const FieldElement> x) {
  const std::size_t n = c.n();
  if (x.size() != n) {
    throw ParameterMismatch("circulant of order " + std::to_string(n) + " applied to a vector of length " +
                            std::to_string(x.size()));
  }
  const std::uint64_t q = c.field().q();
  std::vector<std::uint64_t> acc(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j].modulus() != q) throw ParameterMismatch("vector entry over a different field");
    const std::uint64_t xj = x[j].value();
    if (xj == 0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t k = (i + j) % n;
      acc[k] = detail::addmod(acc[k], detail::mulmod(c.col()[i].value(), xj, q), q);
    }
  }
  FieldVector out;
  out.reserve(n);
  for (auto v : acc) out.emplace_back(c.field(), v);
  return out;
}

Circulant circ_mul(const Circulant& a, const Circulant& b) {
  if (a.field() != b.field()) throw ParameterMismatch("circulants over different fields");
  return {a.field(), circ_matvec(a, b.col())};
}

FieldVector z_vector(std::span<const FieldElement> b, std::span<const FieldElement> c) {
  if (b.size() != c.size()) throw ParameterMismatch("z-vector of vectors with different lengths");
  if (b.empty()) return {};
  const Circulant mc(c.front().field(), FieldVector(c.begin(), c.end()));
  return circ_matvec(mc, b);
}

bool circ_is_invertible(const Circulant& c) {
  const Polynomial g = poly_gcd(c.as_polynomial(), Polynomial::cyclic_modulus(c.field(), c.n()));
  return g.degree() == 0;
}

Circulant circ_inverse(const Circulant& c) {
  const Polynomial modulus = Polynomial::cyclic_modulus(c.field(), c.n());
  const ExtendedGcd eg = poly_ext_gcd(c.as_polynomial(), modulus);
  if (eg.gcd.degree() != 0) throw SingularCirculant();
  const Polynomial u = poly_rem(eg.u, modulus);
  FieldVector col(c.n(), FieldElement::zero(c.field()));
  for (std::size_t i = 0; i < u.coeffs().size(); ++i) col[i] = u.coeffs()[i];
  return {c.field(), std::move(col)};
}

FieldVector circ_solve(const Circulant& c, std::span<const FieldElement> w) {
  return circ_matvec(circ_inverse(c), w);
}

BigInt count_invertible(std::size_t n, const FieldParams& field) {
  const FactorProfile profile = factor_profile_xn_minus_1(n, field);
  const BigInt q = field.q();
  BigInt count = 1;
  for (const auto& cls : profile.classes) {
    const BigInt qd = boost::multiprecision::pow(q, static_cast<unsigned>(cls.degree));
    const BigInt lower = boost::multiprecision::pow(qd, static_cast<unsigned>(cls.multiplicity - 1));
    const BigInt per_factor = lower * qd - lower;
    count *= boost::multiprecision::pow(per_factor, static_cast<unsigned>(cls.count));
  }
  return count;
}

BigRational prob_invertible(std::size_t n, const FieldParams& field) {
  const BigInt total = boost::multiprecision::pow(BigInt(field.q()), static_cast<unsigned>(n));
  return BigRational(count_invertible(n, field), total);
}

InvertibilityEstimate estimate_prob_invertible(std::size_t n, const FieldParams& field, std::uint64_t trials,
                                               std::uint64_t seed, ColumnDistribution distribution) {
  if (trials == 0) throw std::invalid_argument("estimate needs at least one trial");
  if (n == 0) throw std::invalid_argument("circulant of order 0");
  InvertibilityEstimate est;
  est.trials = trials;
  for (std::uint64_t k = 0; k < trials; ++k) {
    Rng rng(stream_seed(seed, k));
    FieldVector col(n, FieldElement::zero(field));
    if (distribution == ColumnDistribution::uniform) {
      for (auto& x : col) x = sample_element(field, rng);
    } else {
      for (std::size_t i = 0; i <= n / 2; ++i) {
        col[i] = sample_element(field, rng);
        col[(n - i) % n] = col[i];
      }
    }
    if (circ_is_invertible(Circulant(field, std::move(col)))) ++est.invertible;
  }
  return est;
}

}  // namespace tdga
