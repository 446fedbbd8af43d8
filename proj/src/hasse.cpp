#include "sunit/hasse.hpp"

#include <mutex>

#include "sunit/error.hpp"

namespace sunit {

std::uint32_t binom_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p) noexcept {
  if (k > n) return 0;
  std::uint64_t result = 1;
  while (n > 0 || k > 0) {
    const std::uint64_t ni = n % p;
    const std::uint64_t ki = k % p;
    if (ki > ni) return 0;
    // binom(ni, ki) mod p with ni < p: multiplicative formula with inverses.
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t j = 0; j < ki; ++j) {
      num = num * ((ni - j) % p) % p;
      den = den * ((j + 1) % p) % p;
    }
    std::uint64_t inv = 1, base = den, e = p - 2;
    while (e > 0) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    result = result * (num * inv % p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint64_t subfield_exponent(const Field& field, unsigned m) {
  std::uint64_t pm = 1;
  for (unsigned i = 0; i < m; ++i) {
    pm *= field.p();
    if (pm > (1u << 16))
      fail(ErrorKind::ResourceLimit, "p^m exceeds 65536; the Wronskian search is not supported at this size");
  }
  return pm;
}

Poly hasse_derivative(const Poly& a, std::size_t i) {
  const Field& f = a.field();
  if (static_cast<int>(i) > a.degree()) return Poly(f);
  std::vector<Field::Elem> out(a.coeffs().size() - i, 0);
  for (std::size_t n = i; n < a.coeffs().size(); ++n) {
    const Field::Elem c = a.coeffs()[n];
    if (c == 0) continue;
    out[n - i] = f.mul(c, binom_mod_p(n, i, f.p()));
  }
  return Poly(f, std::move(out));
}

TaylorJet taylor_jet(const RatFunc& x, std::size_t n) {
  const Field& f = x.field();
  const Poly& N = x.num();
  const Poly& D = x.den();
  TaylorJet jet{x, {x}};
  jet.coeffs.reserve(n + 1);
  if (n == 0) return jet;
  if (D.is_one()) {
    for (std::size_t i = 1; i <= n; ++i) jet.coeffs.emplace_back(hasse_derivative(N, i));
    return jet;
  }
  // With x(t+u) = sum_i Q_i u^i and Q_i = P_i / D^{i+1}, matching coefficients
  // in D(t+u) x(t+u) = N(t+u) gives
  //   P_i = N_i D^i - sum_{k=1}^{i} D_k P_{i-k} D^{k-1},
  // where N_i, D_k are Hasse derivatives of the polynomials.
  const std::size_t dd = static_cast<std::size_t>(D.degree());
  std::vector<Poly> dk(dd + 1, Poly(f));
  for (std::size_t k = 0; k <= dd; ++k) dk[k] = hasse_derivative(D, k);
  std::vector<Poly> dpow{Poly::constant(f, 1)};
  std::vector<Poly> num_parts{N};
  for (std::size_t i = 1; i <= n; ++i) {
    dpow.push_back(dpow.back() * D);
    Poly pi = hasse_derivative(N, i) * dpow[i];
    for (std::size_t k = 1; k <= std::min(i, dd); ++k) pi -= dk[k] * num_parts[i - k] * dpow[k - 1];
    num_parts.push_back(pi);
    jet.coeffs.emplace_back(pi, dpow[i] * D);
  }
  return jet;
}

RatFunc hasse_derivative(const RatFunc& x, std::size_t i) {
  if (i == 0) return x;
  if (x.den().is_one()) return RatFunc(hasse_derivative(x.num(), i));
  return taylor_jet(x, i).coeffs[i];
}

bool in_power_subfield(const RatFunc& x, SubfieldDescriptor d) {
  const std::uint64_t pm = subfield_exponent(x.field(), d.m);
  auto exponents_divisible = [pm](const Poly& a) {
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
      if (a.coeffs()[i] != 0 && i % pm != 0) return false;
    return true;
  };
  const bool structural = exponents_divisible(x.num()) && exponents_divisible(x.den());

  bool kernel = true;
  if (pm > 1 && !x.is_zero()) {
    const TaylorJet jet = taylor_jet(x, pm - 1);
    for (std::size_t l = 1; l < pm; ++l)
      if (!jet.coeffs[l].is_zero()) {
        kernel = false;
        break;
      }
  }
  if (kernel != structural)
    fail(ErrorKind::InternalInconsistency,
         "derivative-kernel and structural subfield tests disagree on " + x.to_string());
  return kernel;
}

TaylorJet JetCache::get(const RatFunc& x, std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    auto it = jets_.find(x);
    if (it != jets_.end() && it->second.order() >= n) {
      TaylorJet out{x, {it->second.coeffs.begin(), it->second.coeffs.begin() + n + 1}};
      return out;
    }
  }
  TaylorJet jet = taylor_jet(x, n);
  std::unique_lock lock(mutex_);
  auto [it, inserted] = jets_.try_emplace(x, jet);
  if (!inserted && it->second.order() < n) it->second = jet;
  return jet;
}

std::size_t JetCache::size() const {
  std::shared_lock lock(mutex_);
  return jets_.size();
}

}  // namespace sunit
