#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sunit {

/// The finite field F_q, q = p^s.
///
/// Elements are encoded as integers in [0, q): the base-p digits of the
/// encoding are the coefficients of the element in the power basis
/// 1, a, ..., a^{s-1}, where a is a root of the defining modulus. For s = 1
/// the encoding is the least nonnegative residue mod p.
///
/// Fields are interned: `Field::get` returns the same instance for the same
/// parameters for the lifetime of the process, so fields compare by address.
class Field {
 public:
  using Elem = std::uint32_t;

  /// Prime field F_p.
  static const Field& get(std::uint32_t p);
  /// F_{p^s} defined by a monic irreducible modulus of degree s over F_p
  /// (coefficients low to high). An empty modulus with s = 1 means F_p.
  static const Field& get(std::uint32_t p, std::uint32_t s,
                          const std::vector<Elem>& modulus);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t s() const noexcept { return s_; }
  std::uint64_t q() const noexcept { return q_; }
  /// Defining polynomial over F_p, low to high; {0, 1} when s = 1.
  const std::vector<Elem>& modulus() const noexcept { return modulus_; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  /// The class of an integer under Z -> F_p ⊂ F_q.
  Elem from_int(std::int64_t v) const noexcept;
  /// The generator a of F_q over F_p (only meaningful when s > 1).
  Elem generator() const noexcept { return s_ > 1 ? p_ : 0; }
  bool in_prime_subfield(Elem a) const noexcept { return a < p_; }

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  /// Inverse of Frobenius: the unique b with b^p = a.
  Elem pth_root(Elem a) const noexcept;

  /// Base-p digits of the encoding, low to high, length s.
  std::vector<Elem> digits(Elem a) const;
  Elem from_digits(const std::vector<Elem>& digits) const;

  std::string describe() const;

 private:
  Field(std::uint32_t p, std::uint32_t s, std::vector<Elem> modulus);
  void build_tables();

  std::uint32_t p_;
  std::uint32_t s_;
  std::uint64_t q_;
  std::vector<Elem> modulus_;
  // s > 1 only: discrete log tables with respect to a primitive element.
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace sunit
