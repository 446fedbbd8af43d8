#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sunit/bigint.hpp"
#include "sunit/field.hpp"

namespace sunit {

/// Dense univariate polynomial over F_q, coefficients stored low to high with
/// no trailing zero (the zero polynomial has no coefficients).
class Poly {
 public:
  using Elem = Field::Elem;

  explicit Poly(const Field& field) : field_(&field) {}
  Poly(const Field& field, std::vector<Elem> coeffs);

  static Poly constant(const Field& field, Elem c);
  static Poly monomial(const Field& field, Elem c, std::size_t degree);
  /// The indeterminate t.
  static Poly variable(const Field& field);

  const Field& field() const noexcept { return *field_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  Elem lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  const std::vector<Elem>& coeffs() const noexcept { return c_; }

  Poly monic() const;
  Poly scaled(Elem c) const;
  Elem eval(Elem x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

  /// Canonical text in the variable T, terms in decreasing degree, e.g.
  /// "2*T^2 + T + 1".
  std::string to_string() const;

 private:
  void trim() noexcept;
  void check_same_field(const Poly& o) const;

  const Field* field_;
  std::vector<Elem> c_;
};

/// Total order: by degree, then coefficients compared from the top down.
bool operator<(const Poly& a, const Poly& b) noexcept;

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Quotient a / b; throws unless b divides a.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

/// Monic gcd.
Poly gcd(const Poly& a, const Poly& b);

struct ExtendedGcd {
  Poly g;  // monic
  Poly s;
  Poly t;  // s*a + t*b = g
};
ExtendedGcd xgcd(const Poly& a, const Poly& b);

/// Inverse of a modulo m; throws NotInvertible when gcd(a, m) != 1.
Poly inverse_mod(const Poly& a, const Poly& m);

Poly pow(const Poly& base, std::uint64_t exp);
Poly powmod(const Poly& base, std::uint64_t exp, const Poly& modulus);
Poly powmod(const Poly& base, const BigInt& exp, const Poly& modulus);

/// Formal derivative d/dt.
Poly derivative(const Poly& a);

}  // namespace sunit
