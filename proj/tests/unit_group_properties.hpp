#pragma once

// Representative-set checks shared by the unit tests and the acceptance runner.

#include <cstdint>
#include <functional>

#include "sunit/hasse.hpp"
#include "sunit/unit_group.hpp"

namespace sunit::testing {

/// Calls fn on every word with entries in [lo, hi].
inline void for_each_word(std::size_t n, std::int64_t lo, std::int64_t hi, const std::function<void(const Word&)>& fn) {
  Word w(n, lo);
  for (;;) {
    fn(w);
    std::size_t i = 0;
    while (i < n && w[i] == hi) w[i++] = lo;
    if (i == n) return;
    ++w[i];
  }
}

/// Every product of generators with exponents in [-bound, bound] has exactly
/// one representative with the same residue key, and their quotient is in
/// the kernel. Returns the number of failing words.
inline int repset_completeness_failures(const SubgroupPresentation& g, const RepSet& r, std::int64_t bound) {
  int failures = 0;
  for_each_word(g.size(), -bound, bound, [&](const Word& w) {
    const auto key = residue_key(g, w, r.modulus);
    int hits = 0;
    for (const auto& k : r.keys) hits += (k == key);
    auto idx = r.find(key);
    if (hits != 1 || !idx) {
      ++failures;
      return;
    }
    const RatFunc quotient = g.evaluate(w) / r.elements[*idx];
    if (!kernel_element_check(quotient, g, r.m)) ++failures;
  });
  return failures;
}

/// True iff n is a power of p (including p^0 = 1).
inline bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace sunit::testing
