#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tdga/rng.hpp"
#include "tdga/twisted_algebra.hpp"

namespace tdga {

/// Public parameters of the two-sided key exchange: the algebra and the
/// public element h = h1 + h2 with h1 in F_q^alpha C_n and h2 in F_q^alpha C_n y,
/// both nonzero.
struct PublicParams {
  AlgebraParams algebra;
  AlgebraElement h;

  /// Throws std::invalid_argument if either half of h is zero or h belongs
  /// to a different algebra.
  PublicParams(AlgebraParams algebra, AlgebraElement h);
};

/// (s, t) with s in F_q^alpha C_n and t in the reversible subspace.
struct SecretKey {
  AlgebraElement s;
  AlgebraElement t;

  /// Throws SupportViolation unless s is rotation-supported and t reversible.
  SecretKey(AlgebraElement s, AlgebraElement t);

  friend bool operator==(const SecretKey&, const SecretKey&) = default;
};

struct PublicKey {
  AlgebraElement pk;
  friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

struct SharedKey {
  AlgebraElement k;
  friend bool operator==(const SharedKey&, const SharedKey&) = default;
};

/// Forces parts of the generated parameters, e.g. to replay published instances.
struct ParamsOverrides {
  std::optional<std::uint64_t> lambda;
  std::optional<std::vector<std::uint64_t>> h;  // 2n-tuple
};

/// Checks that (n, q) is a usable parameter pair: q an odd prime, q | 2n, n >= 2.
/// Throws std::invalid_argument.
void validate_dimensions(std::size_t n, std::uint64_t q);

/// Draws lambda uniformly among the non-squares, then nonzero h1 and h2
/// uniformly. Deterministic in the seed.
PublicParams gen_params(std::size_t n, std::uint64_t q, std::uint64_t seed, const ParamsOverrides& overrides = {});

/// s uniform over F_q^alpha C_n, t uniform over the reversible subspace,
/// each redrawn while zero.
SecretKey keygen(const PublicParams& params, Rng& rng);

/// pk = s h t.
PublicKey compute_pk(const SecretKey& sk, const PublicParams& params);

/// K = s pk_peer adjunct(t).
SharedKey derive_key(const SecretKey& sk, const PublicKey& peer, const PublicParams& params);

}  // namespace tdga
