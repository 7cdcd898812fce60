#include "tdga/protocol.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "tdga/errors.hpp"

namespace tdga {

PublicParams::PublicParams(AlgebraParams algebra_, AlgebraElement h_) : algebra(std::move(algebra_)), h(std::move(h_)) {
  if (h.params() != algebra) throw std::invalid_argument("public element belongs to a different algebra");
  if (h.in_reflection_part()) throw std::invalid_argument("public element h needs a nonzero F_q^alpha C_n part");
  if (h.in_rotation_part()) throw std::invalid_argument("public element h needs a nonzero F_q^alpha C_n y part");
}

SecretKey::SecretKey(AlgebraElement s_, AlgebraElement t_) : s(std::move(s_)), t(std::move(t_)) {
  if (s.params() != t.params()) throw ParameterMismatch("secret key halves over different parameters");
  if (!s.in_rotation_part()) throw SupportViolation("secret s must lie in F_q^alpha C_n");
  if (!is_reversible(t)) throw SupportViolation("secret t must be reversible");
}

void validate_dimensions(std::size_t n, std::uint64_t q) {
  if (q < 3 || !is_prime(q)) throw std::invalid_argument("q = " + std::to_string(q) + " is not an odd prime");
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if ((2 * n) % q != 0) {
    throw std::invalid_argument("q = " + std::to_string(q) + " does not divide 2n = " + std::to_string(2 * n));
  }
}

PublicParams gen_params(std::size_t n, std::uint64_t q, std::uint64_t seed, const ParamsOverrides& overrides) {
  validate_dimensions(n, q);
  const FieldParams field(q);
  Rng rng(seed);

  FieldElement lambda = overrides.lambda ? FieldElement(field, *overrides.lambda) : sample_nonsquare(field, rng);
  const AlgebraParams algebra(field, n, lambda);

  if (overrides.h) return {algebra, AlgebraElement::from_tuple(algebra, *overrides.h)};

  AlgebraElement h(algebra);
  for (bool reflection : {false, true}) {
    bool nonzero = false;
    while (!nonzero) {
      for (std::size_t i = 0; i < n; ++i) {
        const FieldElement c = sample_element(field, rng);
        h.set_coefficient({i, reflection}, c);
        nonzero = nonzero || !c.is_zero();
      }
    }
  }
  return {algebra, std::move(h)};
}

SecretKey keygen(const PublicParams& params, Rng& rng) {
  AlgebraElement s = sample_rotation(params.algebra, rng);
  while (s.is_zero()) s = sample_rotation(params.algebra, rng);
  AlgebraElement t = sample_reversible(params.algebra, rng);
  while (t.is_zero()) t = sample_reversible(params.algebra, rng);
  return {std::move(s), std::move(t)};
}

PublicKey compute_pk(const SecretKey& sk, const PublicParams& params) {
  return {alg_mul(alg_mul(sk.s, params.h), sk.t)};
}

SharedKey derive_key(const SecretKey& sk, const PublicKey& peer, const PublicParams& params) {
  if (peer.pk.params() != params.algebra || sk.s.params() != params.algebra) {
    throw ParameterMismatch("key material does not match the public parameters");
  }
  return {alg_mul(alg_mul(sk.s, peer.pk), adjunct(sk.t))};
}

}  // namespace tdga
