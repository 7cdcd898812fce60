#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "tdga/rng.hpp"

namespace tdga {

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t v);

/// The prime field F_q. Only odd primes q are accepted.
class FieldParams {
 public:
  /// Throws std::invalid_argument unless q is an odd prime.
  explicit FieldParams(std::uint64_t q);

  std::uint64_t q() const { return q_; }

  friend bool operator==(const FieldParams&, const FieldParams&) = default;

 private:
  struct Trusted {};
  FieldParams(Trusted, std::uint64_t q) : q_(q) {}
  friend class FieldElement;

  std::uint64_t q_;
};

/// Residue of F_q in canonical range [0, q). Carries its modulus so that
/// mixing elements of different fields is detected.
class FieldElement {
 public:
  FieldElement(const FieldParams& field, std::uint64_t value)
      : value_(value % field.q()), q_(field.q()) {}

  static FieldElement zero(const FieldParams& field) { return {field, 0}; }
  static FieldElement one(const FieldParams& field) { return {field, 1}; }

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return q_; }
  FieldParams field() const { return FieldParams(FieldParams::Trusted{}, q_); }
  bool is_zero() const { return value_ == 0; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  struct Raw {};
  FieldElement(Raw, std::uint64_t value, std::uint64_t q) : value_(value), q_(q) {}

  std::uint64_t value_;
  std::uint64_t q_;

  friend FieldElement add(FieldElement, FieldElement);
  friend FieldElement sub(FieldElement, FieldElement);
  friend FieldElement mul(FieldElement, FieldElement);
  friend FieldElement neg(FieldElement);
  friend FieldElement pow(FieldElement, std::uint64_t);
};

FieldElement add(FieldElement x, FieldElement y);
FieldElement sub(FieldElement x, FieldElement y);
FieldElement mul(FieldElement x, FieldElement y);
FieldElement neg(FieldElement x);
/// Square-and-multiply; 0^0 = 1.
FieldElement pow(FieldElement x, std::uint64_t e);
/// x^(q-2). Throws DivisionByZero on zero.
FieldElement inv(FieldElement x);

/// Euler's criterion: x^((q-1)/2) == 1. Throws DivisionByZero on zero.
bool is_square(FieldElement x);

/// Uniform draw from the (q-1)/2 quadratic non-residues.
FieldElement sample_nonsquare(const FieldParams& field, Rng& rng);

/// Uniform draw from F_q.
FieldElement sample_element(const FieldParams& field, Rng& rng);

using FieldVector = std::vector<FieldElement>;

inline FieldElement operator+(FieldElement x, FieldElement y) { return add(x, y); }
inline FieldElement operator-(FieldElement x, FieldElement y) { return sub(x, y); }
inline FieldElement operator*(FieldElement x, FieldElement y) { return mul(x, y); }
inline FieldElement operator-(FieldElement x) { return neg(x); }

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  // a, b < m; avoid overflow for m close to 2^64.
  return a >= m - b ? a - (m - b) : a + b;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : a + (m - b);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m);

}  // namespace detail

}  // namespace tdga
