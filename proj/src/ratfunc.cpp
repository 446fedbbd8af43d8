#include "sunit/ratfunc.hpp"

#include <algorithm>

#include "sunit/error.hpp"
#include "sunit/factor.hpp"

namespace sunit {

RatFunc::RatFunc(const Field& field) : num_(field), den_(Poly::constant(field, 1)) {}

RatFunc::RatFunc(const Poly& num) : num_(num), den_(Poly::constant(num.field(), 1)) {}

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den.is_zero()) fail(ErrorKind::DivisionByZero, "zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(num.field(), 1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  const Field::Elem lead = den_.lead();
  if (lead != 1) {
    const Field::Elem inv = num.field().inv(lead);
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::constant(const Field& field, Field::Elem c) { return RatFunc(Poly::constant(field, c)); }

RatFunc RatFunc::variable(const Field& field) { return RatFunc(Poly::variable(field)); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in K");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  // Powers of a reduced fraction stay reduced; only the units need care.
  return RatFunc(sunit::pow(num_, static_cast<std::uint64_t>(e)),
                 sunit::pow(den_, static_cast<std::uint64_t>(e)), Reduced{});
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc(a.field());
  // Cross-cancel so the product is reduced without a full gcd.
  Poly g1 = gcd(a.num_, b.den_);
  Poly g2 = gcd(b.num_, a.den_);
  Poly num = exact_div(a.num_, g1) * exact_div(b.num_, g2);
  Poly den = exact_div(a.den_, g2) * exact_div(b.den_, g1);
  return RatFunc(std::move(num), std::move(den), RatFunc::Reduced{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero in K");
  return a * b.inverse();
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  auto single_term = [](const Poly& p) {
    return std::count_if(p.coeffs().begin(), p.coeffs().end(), [](auto c) { return c != 0; }) == 1;
  };
  std::string n = num_.to_string();
  std::string d = den_.to_string();
  if (!single_term(num_)) n = "(" + n + ")";
  if (!single_term(den_)) d = "(" + d + ")";
  return n + "/" + d;
}

bool operator<(const RatFunc& a, const RatFunc& b) noexcept {
  if (!(a.num() == b.num())) return a.num() < b.num();
  return a.den() < b.den();
}

RatFunc normalize(const Poly& num, const Poly& den) { return RatFunc(num, den); }

Place Place::finite(const Poly& monic_irreducible) {
  if (!monic_irreducible.is_monic() || monic_irreducible.degree() < 1)
    fail(ErrorKind::InvalidArgument, "a finite place needs a monic polynomial of degree >= 1");
  return Place(monic_irreducible);
}

std::string Place::to_string() const { return is_infinite() ? "inf" : "(" + poly_->to_string() + ")"; }

bool operator<(const Place& a, const Place& b) noexcept {
  if (a.is_infinite() || b.is_infinite()) return !a.is_infinite() && b.is_infinite();
  return *a.poly_ < *b.poly_;
}

namespace {

std::int64_t multiplicity(Poly a, const Poly& f) {
  std::int64_t k = 0;
  for (;;) {
    auto [q, r] = divmod(a, f);
    if (!r.is_zero()) return k;
    a = std::move(q);
    ++k;
  }
}

}  // namespace

std::int64_t valuation(const RatFunc& x, const Place& v) {
  if (x.is_zero()) fail(ErrorKind::ValuationOfZero, "valuation of zero");
  if (v.is_infinite()) return x.den().degree() - x.num().degree();
  // At most one of the two counts is nonzero since the fraction is reduced.
  return multiplicity(x.num(), v.poly()) - multiplicity(x.den(), v.poly());
}

Divisor divisor_vector(const RatFunc& x) {
  if (x.is_zero()) fail(ErrorKind::ZeroInput, "divisor of zero");
  Divisor d;
  d.constant = x.num().lead();
  if (x.num().degree() >= 1)
    for (const auto& [f, e] : factor(x.num()).factors) d.exponents[Place::finite(f)] += e;
  if (x.den().degree() >= 1)
    for (const auto& [f, e] : factor(x.den()).factors) d.exponents[Place::finite(f)] -= e;
  const std::int64_t at_inf = x.den().degree() - x.num().degree();
  if (at_inf != 0) d.exponents[Place::infinity()] = at_inf;
  return d;
}

RatFunc from_divisor(const Divisor& d, const Field& field) {
  RatFunc out = RatFunc::constant(field, d.constant);
  for (const auto& [place, e] : d.exponents) {
    if (place.is_infinite()) continue;
    out *= RatFunc(place.poly()).pow(e);
  }
  return out;
}

std::int64_t degree(const DivisorVector& d) {
  std::int64_t total = 0;
  for (const auto& [place, e] : d) total += e * place.degree();
  return total;
}

std::vector<Place> finite_support(const RatFunc& x) {
  std::vector<Place> out;
  for (const auto& [place, e] : divisor_vector(x).exponents)
    if (!place.is_infinite()) out.push_back(place);
  return out;
}

Modulus::Modulus(const Poly& base, unsigned exponent) : base_(base), exponent_(exponent), power_(base.field()) {
  if (exponent == 0) fail(ErrorKind::InvalidModulus, "modulus exponent must be >= 1");
  if (base.degree() < 1 || !base.is_monic() || !is_irreducible(base))
    fail(ErrorKind::InvalidModulus, "modulus base must be monic irreducible: " + base.to_string());
  power_ = pow(base_, exponent_);
}

BigInt Modulus::unit_group_order() const {
  BigInt qd = 1;
  for (int i = 0; i < base_.degree(); ++i) qd *= base_.field().q();
  BigInt order = qd - 1;
  for (unsigned i = 1; i < exponent_; ++i) order *= qd;
  return order;
}

std::string Modulus::to_string() const {
  std::string b = base_.to_string();
  b.erase(std::remove(b.begin(), b.end(), ' '), b.end());
  return "(" + b + ")^" + std::to_string(exponent_);
}

Poly reduce_mod(const RatFunc& x, const Modulus& m) {
  if (divides(m.base(), x.den()))
    fail(ErrorKind::NotInvertible, x.to_string() + " has a pole at " + m.place().to_string());
  if (x.den().is_one()) return x.num() % m.power();
  return (x.num() * inverse_mod(x.den(), m.power())) % m.power();
}

}  // namespace sunit
