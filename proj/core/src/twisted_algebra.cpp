#include "tdga/twisted_algebra.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "tdga/errors.hpp"

namespace tdga {

AlgebraParams::AlgebraParams(const FieldParams& field, std::size_t n, FieldElement lambda)
    : field_(field), n_(n), lambda_(lambda) {
  if (lambda.modulus() != field.q()) throw ParameterMismatch("lambda is not an element of F_q");
  if (n == 0 || (2 * n) % field.q() != 0) {
    throw std::invalid_argument("q = " + std::to_string(field.q()) + " must divide 2n = " + std::to_string(2 * n));
  }
  if (lambda.is_zero() || is_square(lambda)) {
    throw std::invalid_argument("lambda = " + std::to_string(lambda.value()) + " must be a non-square in F_" +
                                std::to_string(field.q()));
  }
}

AlgebraParams::AlgebraParams(std::uint64_t q, std::size_t n, std::uint64_t lambda)
    : AlgebraParams(FieldParams(q), n, FieldElement(FieldParams(q), lambda)) {}

// ---------------------------------------------------------------------------
// D_2n

namespace {

void check_group_element(std::size_t n, GroupElement g) {
  if (g.rotation >= n) {
    throw ParameterMismatch("rotation exponent " + std::to_string(g.rotation) + " out of range for n = " +
                            std::to_string(n));
  }
}

}  // namespace

GroupElement group_mul(std::size_t n, GroupElement g, GroupElement h) {
  check_group_element(n, g);
  check_group_element(n, h);
  // x^i y^e * x^j y^f = x^(i + (-1)^e j) y^(e+f)
  const std::size_t j = g.reflection ? (n - h.rotation) % n : h.rotation;
  return {(g.rotation + j) % n, g.reflection != h.reflection};
}

GroupElement group_inv(std::size_t n, GroupElement g) {
  check_group_element(n, g);
  if (g.reflection) return g;
  return {(n - g.rotation) % n, false};
}

std::vector<GroupElement> group_elements(std::size_t n) {
  std::vector<GroupElement> out;
  out.reserve(2 * n);
  for (bool refl : {false, true}) {
    for (std::size_t i = 0; i < n; ++i) out.push_back({i, refl});
  }
  return out;
}

FieldElement cocycle(const AlgebraParams& params, GroupElement g, GroupElement h) {
  return g.reflection && h.reflection ? params.lambda() : FieldElement::one(params.field());
}

CocycleReport verify_cocycle(const AlgebraParams& params) {
  return verify_cocycle(params, [&params](GroupElement g, GroupElement h) { return cocycle(params, g, h); });
}

CocycleReport verify_cocycle(const AlgebraParams& params, const CocycleFn& alpha) {
  const std::size_t n = params.n();
  if (n > 256) throw std::length_error("cocycle verification enumerates (2n)^3 triples; n must be <= 256");

  CocycleReport report;
  report.normalized = alpha({0, false}, {0, false}) == FieldElement::one(params.field());

  const auto elems = group_elements(n);
  report.identity = true;
  for (const auto& g : elems) {
    for (const auto& h : elems) {
      const FieldElement a_gh = alpha(g, h);
      const GroupElement gh = group_mul(n, g, h);
      for (const auto& k : elems) {
        const FieldElement lhs = alpha(g, group_mul(n, h, k)) * alpha(h, k);
        const FieldElement rhs = alpha(gh, k) * a_gh;
        if (lhs != rhs) {
          report.identity = false;
          report.identity_violation = std::array{g, h, k};
          break;
        }
      }
      if (!report.identity) break;
    }
    if (!report.identity) break;
  }

  report.rotation_symmetric = true;
  report.reversible_symmetric = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t jmi = (j + n - i) % n;
      const std::size_t imj = (i + n - j) % n;
      const std::size_t nmi = (n - i) % n;
      if (alpha({i, false}, {jmi, false}) != alpha({jmi, false}, {i, false})) report.rotation_symmetric = false;
      const FieldElement lhs = alpha({imj, true}, {imj, true}) * alpha({i, true}, {imj, true});
      const FieldElement rhs = alpha({nmi, true}, {nmi, true}) * alpha({jmi, true}, {nmi, true});
      if (lhs != rhs) report.reversible_symmetric = false;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Elements

AlgebraElement::AlgebraElement(const AlgebraParams& params)
    : params_(params),
      avec_(params.n(), FieldElement::zero(params.field())),
      bvec_(params.n(), FieldElement::zero(params.field())) {}

AlgebraElement::AlgebraElement(const AlgebraParams& params, std::vector<FieldElement> avec,
                               std::vector<FieldElement> bvec)
    : params_(params), avec_(std::move(avec)), bvec_(std::move(bvec)) {
  if (avec_.size() != params_.n() || bvec_.size() != params_.n()) {
    throw ParameterMismatch("algebra element needs two coefficient vectors of length n = " +
                            std::to_string(params_.n()));
  }
  for (const auto* part : {&avec_, &bvec_}) {
    for (const auto& c : *part) {
      if (c.modulus() != params_.q()) throw ParameterMismatch("coefficient over a different field");
    }
  }
}

AlgebraElement AlgebraElement::from_values(const AlgebraParams& params, std::span<const std::uint64_t> avec,
                                           std::span<const std::uint64_t> bvec) {
  std::vector<FieldElement> a, b;
  a.reserve(avec.size());
  b.reserve(bvec.size());
  for (auto v : avec) a.push_back(params.element(v));
  for (auto v : bvec) b.push_back(params.element(v));
  return {params, std::move(a), std::move(b)};
}

AlgebraElement AlgebraElement::from_tuple(const AlgebraParams& params, std::span<const std::uint64_t> tuple) {
  const std::size_t n = params.n();
  if (tuple.size() != 2 * n) {
    throw ParameterMismatch("expected a " + std::to_string(2 * n) + "-tuple, got " + std::to_string(tuple.size()) +
                            " entries");
  }
  return from_values(params, tuple.first(n), tuple.subspan(n));
}

AlgebraElement AlgebraElement::one(const AlgebraParams& params) { return basis(params, {0, false}); }

AlgebraElement AlgebraElement::basis(const AlgebraParams& params, GroupElement g) {
  AlgebraElement e(params);
  e.set_coefficient(g, FieldElement::one(params.field()));
  return e;
}

FieldElement AlgebraElement::coefficient(GroupElement g) const {
  check_group_element(n(), g);
  return g.reflection ? bvec_[g.rotation] : avec_[g.rotation];
}

void AlgebraElement::set_coefficient(GroupElement g, FieldElement value) {
  check_group_element(n(), g);
  if (value.modulus() != params_.q()) throw ParameterMismatch("coefficient over a different field");
  (g.reflection ? bvec_ : avec_)[g.rotation] = value;
}

std::vector<std::uint64_t> AlgebraElement::to_tuple() const {
  std::vector<std::uint64_t> out;
  out.reserve(2 * n());
  for (const auto& c : avec_) out.push_back(c.value());
  for (const auto& c : bvec_) out.push_back(c.value());
  return out;
}

namespace {

bool all_zero(std::span<const FieldElement> v) {
  for (const auto& c : v) {
    if (!c.is_zero()) return false;
  }
  return true;
}

void check_same(const AlgebraElement& u, const AlgebraElement& v) {
  if (u.params() != v.params()) throw ParameterMismatch("algebra elements over different parameters");
}

std::vector<std::uint64_t> raw(std::span<const FieldElement> v) {
  std::vector<std::uint64_t> out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(c.value());
  return out;
}

std::vector<FieldElement> cooked(const FieldParams& field, const std::vector<std::uint64_t>& v) {
  std::vector<FieldElement> out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(field, x);
  return out;
}

}  // namespace

bool AlgebraElement::is_zero() const { return all_zero(avec_) && all_zero(bvec_); }
bool AlgebraElement::in_rotation_part() const { return all_zero(bvec_); }
bool AlgebraElement::in_reflection_part() const { return all_zero(avec_); }

// ---------------------------------------------------------------------------
// Arithmetic

AlgebraElement alg_mul(const AlgebraElement& u, const AlgebraElement& v) {
  check_same(u, v);
  const auto& params = u.params();
  const std::size_t n = params.n();
  const std::uint64_t q = params.q();
  const std::uint64_t lambda = params.lambda().value();
  const auto a = raw(u.avec()), b = raw(u.bvec()), c = raw(v.avec()), d = raw(v.bvec());

  std::vector<std::uint64_t> rot(n, 0), refl(n, 0), twisted(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t sum = (i + j) % n;
      const std::size_t diff = (i + n - j) % n;
      if (a[i] != 0) {
        rot[sum] = detail::addmod(rot[sum], detail::mulmod(a[i], c[j], q), q);
        refl[sum] = detail::addmod(refl[sum], detail::mulmod(a[i], d[j], q), q);
      }
      if (b[i] != 0) {
        twisted[diff] = detail::addmod(twisted[diff], detail::mulmod(b[i], d[j], q), q);
        refl[diff] = detail::addmod(refl[diff], detail::mulmod(b[i], c[j], q), q);
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) rot[k] = detail::addmod(rot[k], detail::mulmod(lambda, twisted[k], q), q);
  return {params, cooked(params.field(), rot), cooked(params.field(), refl)};
}

AlgebraElement alg_add(const AlgebraElement& u, const AlgebraElement& v) {
  check_same(u, v);
  std::vector<FieldElement> a(u.avec().begin(), u.avec().end()), b(u.bvec().begin(), u.bvec().end());
  for (std::size_t i = 0; i < u.n(); ++i) {
    a[i] = a[i] + v.avec()[i];
    b[i] = b[i] + v.bvec()[i];
  }
  return {u.params(), std::move(a), std::move(b)};
}

AlgebraElement alg_sub(const AlgebraElement& u, const AlgebraElement& v) {
  check_same(u, v);
  std::vector<FieldElement> a(u.avec().begin(), u.avec().end()), b(u.bvec().begin(), u.bvec().end());
  for (std::size_t i = 0; i < u.n(); ++i) {
    a[i] = a[i] - v.avec()[i];
    b[i] = b[i] - v.bvec()[i];
  }
  return {u.params(), std::move(a), std::move(b)};
}

AlgebraElement scalar_mul(FieldElement c, const AlgebraElement& u) {
  if (c.modulus() != u.params().q()) throw ParameterMismatch("scalar over a different field");
  std::vector<FieldElement> a(u.avec().begin(), u.avec().end()), b(u.bvec().begin(), u.bvec().end());
  for (auto& x : a) x = x * c;
  for (auto& x : b) x = x * c;
  return {u.params(), std::move(a), std::move(b)};
}

AlgebraElement adjunct(const AlgebraElement& u) {
  const std::size_t n = u.n();
  const FieldElement lambda = u.params().lambda();
  std::vector<FieldElement> a(n, FieldElement::zero(u.params().field()));
  std::vector<FieldElement> b(u.bvec().begin(), u.bvec().end());
  for (std::size_t i = 0; i < n; ++i) a[(n - i) % n] = u.avec()[i];
  for (auto& x : b) x = x * lambda;
  return {u.params(), std::move(a), std::move(b)};
}

AlgebraElement psi(const AlgebraElement& u) {
  if (!u.in_reflection_part()) throw SupportViolation("psi is defined on F_q^alpha C_n y only");
  return {u.params(), std::vector<FieldElement>(u.bvec().begin(), u.bvec().end()),
          std::vector<FieldElement>(u.n(), FieldElement::zero(u.params().field()))};
}

AlgebraElement psi_inv(const AlgebraElement& u) {
  if (!u.in_rotation_part()) throw SupportViolation("psi^-1 is defined on F_q^alpha C_n only");
  return {u.params(), std::vector<FieldElement>(u.n(), FieldElement::zero(u.params().field())),
          std::vector<FieldElement>(u.avec().begin(), u.avec().end())};
}

bool is_reversible(const AlgebraElement& u) {
  if (!u.in_reflection_part()) return false;
  const std::size_t n = u.n();
  for (std::size_t i = 1; i < n; ++i) {
    if (u.bvec()[i] != u.bvec()[n - i]) return false;
  }
  return true;
}

AlgebraElement sample_reversible(const AlgebraParams& params, Rng& rng) {
  const std::size_t n = params.n();
  std::vector<FieldElement> b(n, FieldElement::zero(params.field()));
  for (std::size_t i = 0; i <= n / 2; ++i) {
    b[i] = sample_element(params.field(), rng);
    b[(n - i) % n] = b[i];
  }
  return {params, std::vector<FieldElement>(n, FieldElement::zero(params.field())), std::move(b)};
}

AlgebraElement sample_rotation(const AlgebraParams& params, Rng& rng) {
  std::vector<FieldElement> a;
  a.reserve(params.n());
  for (std::size_t i = 0; i < params.n(); ++i) a.push_back(sample_element(params.field(), rng));
  return {params, std::move(a), std::vector<FieldElement>(params.n(), FieldElement::zero(params.field()))};
}

AlgebraElement sample_algebra_element(const AlgebraParams& params, Rng& rng) {
  std::vector<FieldElement> a, b;
  a.reserve(params.n());
  b.reserve(params.n());
  for (std::size_t i = 0; i < params.n(); ++i) a.push_back(sample_element(params.field(), rng));
  for (std::size_t i = 0; i < params.n(); ++i) b.push_back(sample_element(params.field(), rng));
  return {params, std::move(a), std::move(b)};
}

AlgebraElement star(const AlgebraElement& pt, const AlgebraElement& pt_other) {
  check_same(pt, pt_other);
  const AlgebraElement t = psi_inv(pt);
  const AlgebraElement t_other = psi_inv(pt_other);
  if (!is_reversible(t) || !is_reversible(t_other)) {
    throw SupportViolation("star is defined on psi images of reversible elements only");
  }
  return alg_mul(t, adjunct(t_other));
}

AlgebraElement act(const AlgebraElement& s, const AlgebraElement& t, const AlgebraElement& h) {
  check_same(s, t);
  check_same(s, h);
  if (!s.in_rotation_part()) throw SupportViolation("acting s must lie in F_q^alpha C_n");
  if (!is_reversible(t)) throw SupportViolation("acting t must be reversible");
  return alg_mul(alg_mul(s, h), t);
}

}  // namespace tdga
