#pragma once

// Shared helpers for the unit tests: terse constructors and seeded generators.

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "sunit/field.hpp"
#include "sunit/poly.hpp"

namespace sunit::testing {

/// Polynomial from integer coefficients, low to high, reduced into F_p.
inline Poly P(const Field& f, std::initializer_list<std::int64_t> coeffs) {
  std::vector<Field::Elem> c;
  for (auto v : coeffs) c.push_back(f.from_int(v));
  return Poly(f, std::move(c));
}

inline Poly random_poly(const Field& f, int max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<std::uint64_t> coeff(0, f.q() - 1);
  std::vector<Field::Elem> c(deg(rng) + 1);
  for (auto& x : c) x = static_cast<Field::Elem>(coeff(rng));
  return Poly(f, std::move(c));
}

inline Poly random_nonzero_poly(const Field& f, int max_degree, std::mt19937_64& rng) {
  for (;;) {
    Poly a = random_poly(f, max_degree, rng);
    if (!a.is_zero()) return a;
  }
}

/// Every monic polynomial of exactly the given degree.
inline std::vector<Poly> all_monic(const Field& f, int degree) {
  std::vector<Poly> out;
  std::uint64_t count = 1;
  for (int i = 0; i < degree; ++i) count *= f.q();
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<Field::Elem> c(degree + 1);
    std::uint64_t x = code;
    for (int i = 0; i < degree; ++i) {
      c[i] = static_cast<Field::Elem>(x % f.q());
      x /= f.q();
    }
    c[degree] = 1;
    out.emplace_back(f, std::move(c));
  }
  return out;
}

}  // namespace sunit::testing
