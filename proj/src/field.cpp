#include "sunit/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

#include "sunit/error.hpp"
#include "sunit/factor.hpp"
#include "sunit/poly.hpp"

namespace sunit {

namespace {

constexpr std::uint64_t kMaxExtensionOrder = 1u << 16;
constexpr std::uint64_t kMaxPrime = (1ull << 31) - 1;

using Key = std::tuple<std::uint32_t, std::uint32_t, std::vector<Field::Elem>>;

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<Key, std::unique_ptr<Field>>& registry() {
  static std::map<Key, std::unique_ptr<Field>> r;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

const Field& Field::get(std::uint32_t p) { return get(p, 1, {}); }

const Field& Field::get(std::uint32_t p, std::uint32_t s,
                        const std::vector<Elem>& modulus) {
  if (!is_prime(p) || p > kMaxPrime)
    fail(ErrorKind::InvalidArgument,
         "characteristic " + std::to_string(p) + " is not a supported prime");
  if (s == 0) fail(ErrorKind::InvalidArgument, "extension degree must be >= 1");

  std::vector<Elem> mod = modulus;
  if (s == 1) {
    if (!mod.empty() && !(mod.size() == 2 && mod[1] == 1))
      fail(ErrorKind::InvalidModulus, "degree-1 modulus must be monic");
    mod = {0, 1};
  } else {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < s; ++i) {
      q *= p;
      if (q > kMaxExtensionOrder)
        fail(ErrorKind::ResourceLimit, "extension fields are limited to q <= 65536");
    }
    if (mod.size() != s + 1 || mod.back() != 1)
      fail(ErrorKind::InvalidModulus, "modulus must be monic of degree s");
    for (Elem c : mod)
      if (c >= p) fail(ErrorKind::InvalidModulus, "modulus coefficient out of range");
    const Field& base = get(p);
    std::vector<Elem> coeffs(mod.begin(), mod.end());
    if (!is_irreducible(Poly(base, std::move(coeffs))))
      fail(ErrorKind::InvalidModulus, "modulus is not irreducible over F_p");
  }

  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& reg = registry();
  Key key{p, s, mod};
  auto it = reg.find(key);
  if (it != reg.end()) return *it->second;
  auto field = std::unique_ptr<Field>(new Field(p, s, mod));
  const Field& ref = *field;
  reg.emplace(std::move(key), std::move(field));
  return ref;
}

Field::Field(std::uint32_t p, std::uint32_t s, std::vector<Elem> modulus)
    : p_(p), s_(s), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < s_; ++i) q_ *= p_;
  if (s_ > 1) build_tables();
}

void Field::build_tables() {
  // Multiplication of encodings by schoolbook product reduced mod the modulus.
  auto raw_mul = [this](Elem a, Elem b) {
    std::vector<std::uint64_t> x = std::vector<std::uint64_t>(s_, 0);
    std::vector<std::uint64_t> y = x;
    for (std::uint32_t i = 0; i < s_; ++i) {
      x[i] = a % p_;
      a /= p_;
      y[i] = b % p_;
      b /= p_;
    }
    std::vector<std::uint64_t> prod(2 * s_ - 1, 0);
    for (std::uint32_t i = 0; i < s_; ++i)
      for (std::uint32_t j = 0; j < s_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    for (std::size_t d = prod.size(); d-- > s_;) {
      std::uint64_t c = prod[d];
      if (c == 0) continue;
      for (std::uint32_t k = 0; k <= s_; ++k) {
        std::size_t idx = d - s_ + k;
        prod[idx] = (prod[idx] + (p_ - c) * modulus_[k]) % p_;
      }
    }
    Elem out = 0;
    for (std::uint32_t i = s_; i-- > 0;) out = static_cast<Elem>(out * p_ + prod[i]);
    return out;
  };

  const std::uint64_t order = q_ - 1;
  exp_.assign(order, 0);
  log_.assign(q_, 0);
  for (Elem g = 2; g < q_; ++g) {
    Elem x = 1;
    std::uint64_t k = 0;
    bool primitive = true;
    for (k = 0; k < order; ++k) {
      exp_[k] = x;
      x = raw_mul(x, g);
      if (x == 1 && k + 1 < order) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      for (std::uint64_t i = 0; i < order; ++i) log_[exp_[i]] = static_cast<std::uint32_t>(i);
      return;
    }
  }
  fail(ErrorKind::InternalInconsistency, "no primitive element found");
}

Field::Elem Field::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

Field::Elem Field::add(Elem a, Elem b) const noexcept {
  if (s_ == 1) {
    std::uint64_t r = std::uint64_t(a) + b;
    return static_cast<Elem>(r >= p_ ? r - p_ : r);
  }
  Elem out = 0;
  Elem scale = 1;
  for (std::uint32_t i = 0; i < s_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Field::Elem Field::neg(Elem a) const noexcept {
  if (s_ == 1) return a == 0 ? 0 : p_ - a;
  Elem out = 0;
  Elem scale = 1;
  for (std::uint32_t i = 0; i < s_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

Field::Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Field::Elem Field::mul(Elem a, Elem b) const noexcept {
  if (s_ == 1) return static_cast<Elem>((std::uint64_t(a) * b) % p_);
  if (a == 0 || b == 0) return 0;
  return exp_[(std::uint64_t(log_[a]) + log_[b]) % (q_ - 1)];
}

Field::Elem Field::inv(Elem a) const {
  if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero in F_q");
  if (s_ == 1) return pow(a, p_ - 2);
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Field::Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  Elem result = 1;
  Elem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Field::Elem Field::pth_root(Elem a) const noexcept {
  // Frobenius has order s on F_q, so its inverse is x -> x^{p^{s-1}}.
  Elem r = a;
  for (std::uint32_t i = 1; i < s_; ++i) r = pow(r, p_);
  return r;
}

std::vector<Field::Elem> Field::digits(Elem a) const {
  std::vector<Elem> d(s_, 0);
  for (std::uint32_t i = 0; i < s_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

Field::Elem Field::from_digits(const std::vector<Elem>& digits) const {
  Elem out = 0;
  for (std::size_t i = digits.size(); i-- > 0;) out = out * p_ + digits[i] % p_;
  return out;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << q_;
  if (s_ > 1) os << " (p=" << p_ << ", s=" << s_ << ")";
  return os.str();
}

}  // namespace sunit
