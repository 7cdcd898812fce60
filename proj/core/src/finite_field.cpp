#include "tdga/finite_field.hpp"

#include <array>
#include <ostream>
#include <stdexcept>
#include <string>

#include "tdga/errors.hpp"

namespace tdga {

namespace detail {

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e != 0) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

}  // namespace detail

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (v % p == 0) return v == p;
  }
  std::uint64_t d = v - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These bases are a proven witness set for all n < 3.3e24.
  constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t a : bases) {
    std::uint64_t x = detail::powmod(a, d, v);
    if (x == 1 || x == v - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = detail::mulmod(x, x, v);
      if (x == v - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldParams::FieldParams(std::uint64_t q) : q_(q) {
  if (q == 2 || !is_prime(q)) {
    throw std::invalid_argument("field modulus must be an odd prime, got " + std::to_string(q));
  }
}

namespace {

void check_same(const FieldElement& x, const FieldElement& y) {
  if (x.modulus() != y.modulus()) {
    throw ParameterMismatch("field elements over F_" + std::to_string(x.modulus()) + " and F_" +
                            std::to_string(y.modulus()));
  }
}

}  // namespace

FieldElement add(FieldElement x, FieldElement y) {
  check_same(x, y);
  return {FieldElement::Raw{}, detail::addmod(x.value_, y.value_, x.q_), x.q_};
}

FieldElement sub(FieldElement x, FieldElement y) {
  check_same(x, y);
  return {FieldElement::Raw{}, detail::submod(x.value_, y.value_, x.q_), x.q_};
}

FieldElement mul(FieldElement x, FieldElement y) {
  check_same(x, y);
  return {FieldElement::Raw{}, detail::mulmod(x.value_, y.value_, x.q_), x.q_};
}

FieldElement neg(FieldElement x) {
  return {FieldElement::Raw{}, x.value_ == 0 ? 0 : x.q_ - x.value_, x.q_};
}

FieldElement pow(FieldElement x, std::uint64_t e) {
  return {FieldElement::Raw{}, detail::powmod(x.value_, e, x.q_), x.q_};
}

FieldElement inv(FieldElement x) {
  if (x.is_zero()) throw DivisionByZero();
  return pow(x, x.modulus() - 2);
}

bool is_square(FieldElement x) {
  if (x.is_zero()) throw DivisionByZero();
  return pow(x, (x.modulus() - 1) / 2).value() == 1;
}

FieldElement sample_element(const FieldParams& field, Rng& rng) {
  return {field, rng.below(field.q())};
}

FieldElement sample_nonsquare(const FieldParams& field, Rng& rng) {
  for (;;) {
    const FieldElement candidate{field, 1 + rng.below(field.q() - 1)};
    if (!is_square(candidate)) return candidate;
  }
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.value(); }

}  // namespace tdga
