#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <shared_mutex>
#include <vector>

#include "sunit/ratfunc.hpp"

namespace sunit {

/// binom(n, k) mod p by Lucas' theorem.
std::uint32_t binom_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p) noexcept;

/// p^m for the subfield F_q(t^{p^m}); throws ResourceLimit above 2^16.
std::uint64_t subfield_exponent(const Field& field, unsigned m);

/// D^{(i)} on F_q[t]: t^n -> binom(n, i) t^{n-i}.
Poly hasse_derivative(const Poly& a, std::size_t i);

/// D^{(i)}(x): the coefficient of u^i in x(t + u).
RatFunc hasse_derivative(const RatFunc& x, std::size_t i);

/// D^{(0)}x, ..., D^{(n)}x from one truncated expansion of x(t + u).
struct TaylorJet {
  RatFunc center;
  std::vector<RatFunc> coeffs;

  std::size_t order() const noexcept { return coeffs.size() - 1; }
};

TaylorJet taylor_jet(const RatFunc& x, std::size_t n);

/// Marks the subfield k K^{p^m} = F_q(t^{p^m}) of K.
struct SubfieldDescriptor {
  unsigned m = 0;
};

/// Membership in F_q(t^{p^m}), decided twice: by the kernel of D^{(l)},
/// 1 <= l < p^m, and by exponent divisibility of the reduced fraction.
/// Throws InternalInconsistency if the two disagree.
bool in_power_subfield(const RatFunc& x, SubfieldDescriptor d);

/// Memo of jets keyed by element. Lookups return the same values as
/// `taylor_jet`; concurrent readers and writers are allowed.
class JetCache {
 public:
  TaylorJet get(const RatFunc& x, std::size_t n);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<RatFunc, TaylorJet> jets_;
};

}  // namespace sunit
