#include "sunit/poly.hpp"

#include <algorithm>

#include "sunit/error.hpp"

namespace sunit {

Poly::Poly(const Field& field, std::vector<Elem> coeffs)
    : field_(&field), c_(std::move(coeffs)) {
  for (Elem& c : c_) c = static_cast<Elem>(c % field.q());
  trim();
}

Poly Poly::constant(const Field& field, Elem c) { return Poly(field, {c}); }

Poly Poly::monomial(const Field& field, Elem c, std::size_t degree) {
  if (c == 0) return Poly(field);
  std::vector<Elem> v(degree + 1, 0);
  v[degree] = c;
  return Poly(field, std::move(v));
}

Poly Poly::variable(const Field& field) { return monomial(field, 1, 1); }

void Poly::trim() noexcept {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_same_field(const Poly& o) const {
  if (field_ != o.field_) fail(ErrorKind::InvalidArgument, "polynomials over different fields");
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scaled(field_->inv(lead()));
}

Poly Poly::scaled(Elem c) const {
  if (c == 0) return Poly(*field_);
  Poly r = *this;
  for (Elem& x : r.c_) x = field_->mul(x, c);
  return r;
}

Poly::Elem Poly::eval(Elem x) const {
  Elem acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), c_[i]);
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Elem& x : r.c_) x = field_->neg(x);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same_field(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->add(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same_field(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same_field(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  const Field& f = a.field();
  std::vector<Field::Elem> out(a.c_.size() + b.c_.size() - 1, 0);
  if (f.s() == 1) {
    // Accumulate in 64 bits and reduce once per coefficient when it is safe.
    const std::uint64_t p = f.p();
    const std::uint64_t max_terms = std::min(a.c_.size(), b.c_.size());
    if (p < (1u << 16) && max_terms * (p - 1) * (p - 1) < (1ull << 63)) {
      std::vector<std::uint64_t> acc(out.size(), 0);
      for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += std::uint64_t(a.c_[i]) * b.c_[j];
      }
      for (std::size_t k = 0; k < out.size(); ++k) out[k] = static_cast<Field::Elem>(acc[k] % p);
      return Poly(f, std::move(out));
    }
  }
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      out[i + j] = f.add(out[i + j], f.mul(a.c_[i], b.c_[j]));
  }
  return Poly(f, std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

namespace {

// Coefficients outside F_p (only when s > 1) are written as polynomials in
// the generator a of F_q over F_p.
std::string render_coeff(const Field& f, Field::Elem c) {
  if (f.in_prime_subfield(c)) return std::to_string(c);
  auto d = f.digits(c);
  std::string out;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (d[i] != 1 || i == 0) out += std::to_string(d[i]) + (i > 0 ? "*" : "");
    if (i >= 1) out += "a";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return "(" + out + ")";
}

}  // namespace

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (c_[i] != 1 || i == 0) {
      out += render_coeff(*field_, c_[i]);
      if (i > 0) out += "*";
    }
    if (i >= 1) out += "T";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

bool operator<(const Poly& a, const Poly& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  for (std::size_t i = x.size(); i-- > 0;)
    if (x[i] != y[i]) return x[i] < y[i];
  return false;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "division by the zero polynomial");
  if (&a.field() != &b.field()) fail(ErrorKind::InvalidArgument, "polynomials over different fields");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<Field::Elem> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Field::Elem> q(r.size() - db, 0);
  const Field::Elem lead_inv = f.inv(b.lead());
  for (std::size_t k = r.size(); k-- > db;) {
    Field::Elem c = r[k];
    if (c == 0) continue;
    Field::Elem factor = f.mul(c, lead_inv);
    q[k - db] = factor;
    for (std::size_t j = 0; j <= db; ++j)
      r[k - db + j] = f.sub(r[k - db + j], f.mul(factor, bc[j]));
  }
  r.resize(db);
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) fail(ErrorKind::InternalInconsistency, "inexact polynomial division");
  return q;
}

bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) fail(ErrorKind::BothInputsZero, "gcd(0, 0) is undefined");
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd xgcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) fail(ErrorKind::BothInputsZero, "gcd(0, 0) is undefined");
  const Field& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f, 1), s1(f);
  Poly t0(f), t1 = Poly::constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  Field::Elem li = f.inv(r0.lead());
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

Poly inverse_mod(const Poly& a, const Poly& m) {
  if (m.degree() < 1) fail(ErrorKind::InvalidModulus, "modulus must have degree >= 1");
  Poly r = a % m;
  if (r.is_zero()) fail(ErrorKind::NotInvertible, "zero is not invertible modulo " + m.to_string());
  ExtendedGcd e = xgcd(r, m);
  if (!e.g.is_one()) fail(ErrorKind::NotInvertible, r.to_string() + " is not invertible modulo " + m.to_string());
  return e.s % m;
}

Poly pow(const Poly& base, std::uint64_t exp) {
  Poly result = Poly::constant(base.field(), 1);
  Poly b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp > 0) b *= b;
  }
  return result;
}

Poly powmod(const Poly& base, std::uint64_t exp, const Poly& modulus) {
  if (modulus.degree() < 1) fail(ErrorKind::InvalidModulus, "modulus must have degree >= 1");
  Poly result = Poly::constant(base.field(), 1);
  Poly b = base % modulus;
  while (exp > 0) {
    if (exp & 1) result = (result * b) % modulus;
    exp >>= 1;
    if (exp > 0) b = (b * b) % modulus;
  }
  return result;
}

Poly powmod(const Poly& base, const BigInt& exp, const Poly& modulus) {
  if (modulus.degree() < 1) fail(ErrorKind::InvalidModulus, "modulus must have degree >= 1");
  if (exp < 0) fail(ErrorKind::InvalidArgument, "negative exponent in powmod");
  Poly result = Poly::constant(base.field(), 1);
  Poly b = base % modulus;
  const std::size_t bits = exp == 0 ? 0 : boost::multiprecision::msb(exp) + 1;
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % modulus;
    if (boost::multiprecision::bit_test(exp, static_cast<unsigned>(i))) result = (result * b) % modulus;
  }
  return result;
}

Poly derivative(const Poly& a) {
  const Field& f = a.field();
  if (a.degree() < 1) return Poly(f);
  std::vector<Field::Elem> out(a.coeffs().size() - 1);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i)
    out[i - 1] = f.mul(f.from_int(static_cast<std::int64_t>(i % f.p())), a.coeffs()[i]);
  return Poly(f, std::move(out));
}

}  // namespace sunit
