#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tdga/finite_field.hpp"
#include "tdga/rng.hpp"

namespace tdga {

/// Parameters of the twisted dihedral group algebra F_q^alpha D_2n, where
/// alpha is the cocycle that equals lambda on pairs of reflections.
class AlgebraParams {
 public:
  /// Throws std::invalid_argument unless q | 2n and lambda is a non-square.
  AlgebraParams(const FieldParams& field, std::size_t n, FieldElement lambda);
  AlgebraParams(std::uint64_t q, std::size_t n, std::uint64_t lambda);

  const FieldParams& field() const { return field_; }
  std::uint64_t q() const { return field_.q(); }
  std::size_t n() const { return n_; }
  FieldElement lambda() const { return lambda_; }

  FieldElement element(std::uint64_t v) const { return {field_, v}; }

  friend bool operator==(const AlgebraParams&, const AlgebraParams&) = default;

 private:
  FieldParams field_;
  std::size_t n_;
  FieldElement lambda_;
};

/// x^rotation (reflection == false) or x^rotation * y (reflection == true) in D_2n.
struct GroupElement {
  std::size_t rotation = 0;
  bool reflection = false;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Product in D_2n = <x, y | x^n = y^2 = 1, y x y^-1 = x^-1>.
GroupElement group_mul(std::size_t n, GroupElement g, GroupElement h);
GroupElement group_inv(std::size_t n, GroupElement g);
/// All 2n group elements: rotations 0..n-1, then reflections 0..n-1.
std::vector<GroupElement> group_elements(std::size_t n);

/// alpha_lambda(g, h): lambda when both are reflections, 1 otherwise.
FieldElement cocycle(const AlgebraParams& params, GroupElement g, GroupElement h);

using CocycleFn = std::function<FieldElement(GroupElement, GroupElement)>;

struct CocycleReport {
  bool normalized = false;          // alpha(1, 1) == 1
  bool identity = false;            // alpha(g, hk) alpha(h, k) == alpha(gh, k) alpha(g, h)
  bool rotation_symmetric = false;  // alpha(x^i, x^(j-i)) == alpha(x^(j-i), x^i)
  bool reversible_symmetric = false;
  std::optional<std::array<GroupElement, 3>> identity_violation;

  bool ok() const { return normalized && identity && rotation_symmetric && reversible_symmetric; }
};

/// Exhaustively checks the 2-cocycle axioms and the two commutativity
/// conditions used by the protocol. Enumerates (2n)^3 triples, so n is
/// limited to 256 (std::length_error otherwise). The overload taking a
/// function checks an arbitrary candidate map instead of alpha_lambda.
CocycleReport verify_cocycle(const AlgebraParams& params);
CocycleReport verify_cocycle(const AlgebraParams& params, const CocycleFn& alpha);

/// Element sum_i a_i x^i + sum_i b_i x^i y. The a part (rotations) spans the
/// subalgebra F_q^alpha C_n and the b part spans F_q^alpha C_n y.
class AlgebraElement {
 public:
  explicit AlgebraElement(const AlgebraParams& params);
  AlgebraElement(const AlgebraParams& params, std::vector<FieldElement> avec, std::vector<FieldElement> bvec);

  static AlgebraElement from_values(const AlgebraParams& params, std::span<const std::uint64_t> avec,
                                    std::span<const std::uint64_t> bvec);
  /// Splits a 2n-tuple (a_0..a_{n-1}, b_0..b_{n-1}).
  static AlgebraElement from_tuple(const AlgebraParams& params, std::span<const std::uint64_t> tuple);
  static AlgebraElement one(const AlgebraParams& params);
  static AlgebraElement basis(const AlgebraParams& params, GroupElement g);

  const AlgebraParams& params() const { return params_; }
  std::size_t n() const { return params_.n(); }
  std::span<const FieldElement> avec() const { return avec_; }
  std::span<const FieldElement> bvec() const { return bvec_; }
  FieldElement coefficient(GroupElement g) const;
  void set_coefficient(GroupElement g, FieldElement value);

  /// 2n residues, a part first.
  std::vector<std::uint64_t> to_tuple() const;

  bool is_zero() const;
  bool in_rotation_part() const;    // b part zero
  bool in_reflection_part() const;  // a part zero

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  AlgebraParams params_;
  std::vector<FieldElement> avec_;
  std::vector<FieldElement> bvec_;
};

/// Twisted product, computed by the closed-form convolution
///   a'_k = sum_{i+j=k} a_i c_j + lambda sum_{i-j=k} b_i d_j
///   b'_k = sum_{i+j=k} a_i d_j + sum_{i-j=k} b_i c_j
/// for u = (a, b), v = (c, d), indices mod n.
AlgebraElement alg_mul(const AlgebraElement& u, const AlgebraElement& v);
AlgebraElement alg_add(const AlgebraElement& u, const AlgebraElement& v);
AlgebraElement alg_sub(const AlgebraElement& u, const AlgebraElement& v);
AlgebraElement scalar_mul(FieldElement c, const AlgebraElement& u);

inline AlgebraElement operator*(const AlgebraElement& u, const AlgebraElement& v) { return alg_mul(u, v); }
inline AlgebraElement operator+(const AlgebraElement& u, const AlgebraElement& v) { return alg_add(u, v); }
inline AlgebraElement operator-(const AlgebraElement& u, const AlgebraElement& v) { return alg_sub(u, v); }
inline AlgebraElement operator*(FieldElement c, const AlgebraElement& u) { return scalar_mul(c, u); }

/// sum_g u_g alpha(g, g^-1) g^-1: reverses the a part (x^i -> x^-i) and
/// scales the b part by lambda in place (reflections are involutions).
AlgebraElement adjunct(const AlgebraElement& u);

/// Moves the b part onto the a part. Throws SupportViolation if the a part is nonzero.
AlgebraElement psi(const AlgebraElement& u);
/// Inverse of psi. Throws SupportViolation if the b part is nonzero.
AlgebraElement psi_inv(const AlgebraElement& u);

/// Membership in the reversible subspace: a part zero and b_i == b_{n-i} for i >= 1.
bool is_reversible(const AlgebraElement& u);

/// Uniform element of the reversible subspace: b_0..b_{floor(n/2)} drawn, rest mirrored.
AlgebraElement sample_reversible(const AlgebraParams& params, Rng& rng);
/// Uniform element of F_q^alpha C_n.
AlgebraElement sample_rotation(const AlgebraParams& params, Rng& rng);
/// Uniform element of the whole algebra.
AlgebraElement sample_algebra_element(const AlgebraParams& params, Rng& rng);

/// psi(t) star psi(t') := t * adjunct(t'), for t, t' reversible. The inputs are
/// the psi images (a-supported). Throws SupportViolation otherwise.
AlgebraElement star(const AlgebraElement& pt, const AlgebraElement& pt_other);

/// (s, psi(t)) . h = s h t, for s in F_q^alpha C_n and t reversible.
/// Throws SupportViolation otherwise.
AlgebraElement act(const AlgebraElement& s, const AlgebraElement& t, const AlgebraElement& h);

}  // namespace tdga
