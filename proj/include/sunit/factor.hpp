#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sunit/poly.hpp"

namespace sunit {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2024u;

struct Factorization {
  Field::Elem unit = 1;
  /// Monic irreducible factors with multiplicities, sorted by the Poly order.
  std::vector<std::pair<Poly, unsigned>> factors;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Complete factorization over F_q: squarefree split, distinct-degree split,
/// then Cantor-Zassenhaus equal-degree splitting driven by a PRNG seeded with
/// `seed`. The canonical ordering makes the result independent of the seed.
Factorization factor(const Poly& a, std::uint64_t seed = kDefaultSeed);

/// Rabin's test. Throws ConstantInput for degree < 1.
bool is_irreducible(const Poly& a);

/// unit * prod f^e.
Poly expand(const Factorization& fac, const Field& field);

}  // namespace sunit
