#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sunit/poly.hpp"

namespace sunit {

/// An element of K = F_q(t) as a reduced fraction: monic denominator,
/// gcd(numerator, denominator) = 1, zero stored as 0/1.
class RatFunc {
 public:
  explicit RatFunc(const Field& field);
  RatFunc(const Poly& num);  // NOLINT(google-explicit-constructor): F_q[t] ⊂ K
  /// Normalizing constructor; throws DivisionByZero for a zero denominator.
  RatFunc(const Poly& num, const Poly& den);

  static RatFunc constant(const Field& field, Field::Elem c);
  static RatFunc variable(const Field& field);

  const Field& field() const noexcept { return num_.field(); }
  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_one(); }

  RatFunc inverse() const;
  RatFunc pow(std::int64_t e) const;
  RatFunc operator-() const { return RatFunc(-num_, den_, Reduced{}); }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  struct Reduced {};
  RatFunc(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

/// Orders by numerator then denominator (Poly order); used for sorted
/// containers and canonical report ordering.
bool operator<(const RatFunc& a, const RatFunc& b) noexcept;

/// rf_normalize.
RatFunc normalize(const Poly& num, const Poly& den);

/// A place of K/F_q: a monic irreducible polynomial, or the place at infinity.
class Place {
 public:
  static Place finite(const Poly& monic_irreducible);
  static Place infinity() { return Place(); }

  bool is_infinite() const noexcept { return !poly_.has_value(); }
  /// Only valid for finite places.
  const Poly& poly() const { return *poly_; }
  int degree() const noexcept { return poly_ ? poly_->degree() : 1; }
  std::string to_string() const;

  friend bool operator==(const Place& a, const Place& b) noexcept {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
    return *a.poly_ == *b.poly_;
  }
  /// Finite places first (in Poly order), infinity last.
  friend bool operator<(const Place& a, const Place& b) noexcept;

 private:
  Place() = default;
  explicit Place(Poly p) : poly_(std::move(p)) {}
  std::optional<Poly> poly_;
};

/// Finitely supported exponent map on places; zero exponents are not stored.
using DivisorVector = std::map<Place, std::int64_t>;

struct Divisor {
  DivisorVector exponents;
  /// Leading unit: x = constant * prod_{finite f} f^{e_f}.
  Field::Elem constant = 1;
};

std::int64_t valuation(const RatFunc& x, const Place& v);
Divisor divisor_vector(const RatFunc& x);
/// constant * prod over finite places of f^e.
RatFunc from_divisor(const Divisor& d, const Field& field);
/// Sum of exponent * degree(place); zero for every principal divisor.
std::int64_t degree(const DivisorVector& d);
/// The finite places in the support of x.
std::vector<Place> finite_support(const RatFunc& x);

/// The ideal (base^e) of F_q[t] at a finite place, base monic irreducible.
class Modulus {
 public:
  Modulus(const Poly& base, unsigned exponent);

  const Poly& base() const noexcept { return base_; }
  unsigned exponent() const noexcept { return exponent_; }
  const Poly& power() const noexcept { return power_; }
  Place place() const { return Place::finite(base_); }
  /// Order of (F_q[t]/(base^e))*: q^{(e-1)d} (q^d - 1).
  BigInt unit_group_order() const;
  /// Compact text such as "(T^2+T+1)^2".
  std::string to_string() const;

  friend bool operator==(const Modulus& a, const Modulus& b) noexcept {
    return a.base_ == b.base_ && a.exponent_ == b.exponent_;
  }

 private:
  Poly base_;
  unsigned exponent_;
  Poly power_;
};

/// Residue of x in F_q[t]/(base^e); throws NotInvertible when x has a pole
/// at the place.
Poly reduce_mod(const RatFunc& x, const Modulus& m);

}  // namespace sunit
