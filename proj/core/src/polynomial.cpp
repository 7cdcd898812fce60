#include "tdga/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "tdga/errors.hpp"

namespace tdga {

Polynomial::Polynomial(const FieldParams& field, std::vector<FieldElement> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.modulus() != field_.q()) throw ParameterMismatch("polynomial coefficient over a different field");
  }
  normalize();
}

Polynomial Polynomial::from_values(const FieldParams& field, std::span<const std::uint64_t> values) {
  std::vector<FieldElement> coeffs;
  coeffs.reserve(values.size());
  for (auto v : values) coeffs.emplace_back(field, v);
  return Polynomial(field, std::move(coeffs));
}

Polynomial Polynomial::constant(const FieldParams& field, std::uint64_t value) {
  return Polynomial(field, {FieldElement(field, value)});
}

Polynomial Polynomial::monomial(const FieldParams& field, std::size_t degree) {
  std::vector<FieldElement> coeffs(degree + 1, FieldElement::zero(field));
  coeffs.back() = FieldElement::one(field);
  return Polynomial(field, std::move(coeffs));
}

Polynomial Polynomial::cyclic_modulus(const FieldParams& field, std::size_t n) {
  std::vector<FieldElement> coeffs(n + 1, FieldElement::zero(field));
  coeffs.front() = neg(FieldElement::one(field));
  coeffs.back() = add(coeffs.back(), FieldElement::one(field));
  return Polynomial(field, std::move(coeffs));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement Polynomial::leading() const {
  return coeffs_.empty() ? FieldElement::zero(field_) : coeffs_.back();
}

FieldElement Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : FieldElement::zero(field_);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return poly_scale(*this, inv(leading()));
}

namespace {

void check_same(const Polynomial& f, const Polynomial& g) {
  if (f.field() != g.field()) throw ParameterMismatch("polynomials over different fields");
}

}  // namespace

Polynomial poly_add(const Polynomial& f, const Polynomial& g) {
  check_same(f, g);
  const auto n = std::max(f.coeffs().size(), g.coeffs().size());
  std::vector<FieldElement> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(f.coeff(i) + g.coeff(i));
  return Polynomial(f.field(), std::move(out));
}

Polynomial poly_sub(const Polynomial& f, const Polynomial& g) {
  check_same(f, g);
  const auto n = std::max(f.coeffs().size(), g.coeffs().size());
  std::vector<FieldElement> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(f.coeff(i) - g.coeff(i));
  return Polynomial(f.field(), std::move(out));
}

Polynomial poly_scale(const Polynomial& f, FieldElement c) {
  std::vector<FieldElement> out;
  out.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) out.push_back(a * c);
  return Polynomial(f.field(), std::move(out));
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
  check_same(f, g);
  if (f.is_zero() || g.is_zero()) return Polynomial(f.field());
  std::vector<FieldElement> out(f.coeffs().size() + g.coeffs().size() - 1, FieldElement::zero(f.field()));
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
      out[i + j] = out[i + j] + f.coeffs()[i] * g.coeffs()[j];
    }
  }
  return Polynomial(f.field(), std::move(out));
}

PolyDivision poly_divmod(const Polynomial& f, const Polynomial& g) {
  check_same(f, g);
  if (g.is_zero()) throw DivisionByZero();
  const FieldParams& field = f.field();
  if (f.degree() < g.degree()) return {Polynomial(field), f};

  std::vector<FieldElement> rem = f.coeffs();
  std::vector<FieldElement> quot(f.coeffs().size() - g.coeffs().size() + 1, FieldElement::zero(field));
  const FieldElement lead_inv = inv(g.leading());
  const std::size_t dg = g.coeffs().size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const FieldElement factor = rem[k + dg] * lead_inv;
    quot[k] = factor;
    if (factor.is_zero()) continue;
    for (std::size_t j = 0; j <= dg; ++j) rem[k + j] = rem[k + j] - factor * g.coeffs()[j];
  }
  rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(dg), rem.end());
  return {Polynomial(field, std::move(quot)), Polynomial(field, std::move(rem))};
}

Polynomial poly_rem(const Polynomial& f, const Polynomial& g) { return poly_divmod(f, g).remainder; }

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
  check_same(f, g);
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  Polynomial a = f;
  Polynomial b = g;
  while (!b.is_zero()) {
    Polynomial r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtendedGcd poly_ext_gcd(const Polynomial& f, const Polynomial& g) {
  check_same(f, g);
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  const FieldParams& field = f.field();
  Polynomial r0 = f, r1 = g;
  Polynomial u0 = Polynomial::constant(field, 1), u1(field);
  Polynomial v0(field), v1 = Polynomial::constant(field, 1);
  while (!r1.is_zero()) {
    auto [quot, rem] = poly_divmod(r0, r1);
    Polynomial u2 = poly_sub(u0, poly_mul(quot, u1));
    Polynomial v2 = poly_sub(v0, poly_mul(quot, v1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    u0 = std::exchange(u1, std::move(u2));
    v0 = std::exchange(v1, std::move(v2));
  }
  const FieldElement scale = inv(r0.leading());
  return {poly_scale(r0, scale), poly_scale(u0, scale), poly_scale(v0, scale)};
}

Polynomial poly_powmod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus) {
  Polynomial result = poly_rem(Polynomial::constant(base.field(), 1), modulus);
  Polynomial b = poly_rem(base, modulus);
  while (e != 0) {
    if (e & 1) result = poly_rem(poly_mul(result, b), modulus);
    b = poly_rem(poly_mul(b, b), modulus);
    e >>= 1;
  }
  return result;
}

std::size_t FactorProfile::total_degree() const {
  std::size_t total = 0;
  for (const auto& c : classes) total += c.degree * c.multiplicity * c.count;
  return total;
}

std::size_t FactorProfile::distinct_factors() const {
  std::size_t total = 0;
  for (const auto& c : classes) total += c.count;
  return total;
}

FactorProfile factor_profile_xn_minus_1(std::size_t n, const FieldParams& field) {
  if (n == 0) throw std::invalid_argument("x^n - 1 needs n >= 1");
  const std::uint64_t p = field.q();
  std::size_t coprime = n;
  std::size_t multiplicity = 1;
  while (coprime % p == 0) {
    coprime /= p;
    multiplicity *= p;
  }

  std::map<std::size_t, std::size_t> counts;
  Polynomial rest = Polynomial::cyclic_modulus(field, coprime);
  const Polynomial x = Polynomial::monomial(field, 1);
  Polynomial frob = x;  // x^(q^d) mod rest
  for (std::size_t d = 1; rest.degree() >= static_cast<int>(2 * d); ++d) {
    frob = poly_powmod(frob, p, rest);
    const Polynomial g = poly_gcd(poly_sub(frob, x), rest);
    if (g.degree() > 0) {
      counts[d] += static_cast<std::size_t>(g.degree()) / d;
      rest = poly_divmod(rest, g).quotient;
      frob = poly_rem(frob, rest);
    }
  }
  if (rest.degree() > 0) counts[static_cast<std::size_t>(rest.degree())] += 1;

  FactorProfile profile{n, p, {}};
  for (const auto& [degree, count] : counts) profile.classes.push_back({degree, multiplicity, count});
  return profile;
}

}  // namespace tdga
