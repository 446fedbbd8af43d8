#include "sunit/factor.hpp"

#include <algorithm>
#include <random>

#include "sunit/error.hpp"

namespace sunit {

namespace {

// f = g(t^p) with all exponents divisible by p; returns the p-th root of f.
Poly pth_root(const Poly& f) {
  const Field& field = f.field();
  const std::uint32_t p = field.p();
  std::vector<Field::Elem> out(f.degree() / p + 1, 0);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f.coeffs()[i] == 0) continue;
    if (i % p != 0) fail(ErrorKind::InternalInconsistency, "pth_root of a non-p-th power");
    out[i / p] = field.pth_root(f.coeffs()[i]);
  }
  return Poly(field, std::move(out));
}

// Squarefree decomposition of a monic polynomial: pairwise coprime squarefree
// parts with their multiplicities.
void squarefree(const Poly& f, unsigned mult, std::vector<std::pair<Poly, unsigned>>& out) {
  if (f.degree() < 1) return;
  const Field& field = f.field();
  Poly df = derivative(f);
  if (df.is_zero()) {
    squarefree(pth_root(f), mult * field.p(), out);
    return;
  }
  Poly c = gcd(f, df);
  Poly w = exact_div(f, c);
  unsigned i = 1;
  while (w.degree() >= 1) {
    Poly y = gcd(w, c);
    Poly part = exact_div(w, y);
    if (part.degree() >= 1) out.emplace_back(part, mult * i);
    w = y;
    c = exact_div(c, y);
    ++i;
  }
  if (c.degree() >= 1) squarefree(pth_root(c), mult * field.p(), out);
}

// Distinct-degree split of a monic squarefree f: (product of all irreducible
// factors of degree d, d).
std::vector<std::pair<Poly, unsigned>> distinct_degree(Poly f) {
  const Field& field = f.field();
  std::vector<std::pair<Poly, unsigned>> out;
  const Poly x = Poly::variable(field);
  Poly h = x % f;
  for (unsigned d = 1; f.degree() >= 2 * static_cast<int>(d); ++d) {
    h = powmod(h, field.q(), f);
    Poly g = gcd(h - x, f);
    if (g.degree() >= 1) {
      out.emplace_back(g, d);
      f = exact_div(f, g);
      h = h % f;
    }
  }
  if (f.degree() >= 1) out.emplace_back(f, static_cast<unsigned>(f.degree()));
  return out;
}

Poly random_poly(const Field& field, int below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, field.q() - 1);
  std::vector<Field::Elem> c(below_degree);
  for (auto& x : c) x = static_cast<Field::Elem>(dist(rng));
  return Poly(field, std::move(c));
}

// Cantor-Zassenhaus equal-degree splitting of a monic squarefree f whose
// irreducible factors all have degree d.
void equal_degree(const Poly& f, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f);
    return;
  }
  const Field& field = f.field();
  const int n = f.degree();
  BigInt half_exp;
  if (field.p() != 2) {
    BigInt qd = 1;
    for (unsigned i = 0; i < d; ++i) qd *= field.q();
    half_exp = (qd - 1) / 2;
  }
  for (;;) {
    Poly a = random_poly(field, n, rng);
    if (a.degree() < 1) continue;
    Poly b(field);
    if (field.p() == 2) {
      // Absolute trace to F_2: a + a^2 + ... + a^{2^{sd-1}}.
      Poly term = a;
      b = a;
      for (unsigned i = 1; i < field.s() * d; ++i) {
        term = (term * term) % f;
        b += term;
      }
    } else {
      b = powmod(a, half_exp, f) - Poly::constant(field, 1);
    }
    if (b.is_zero()) continue;
    Poly g = gcd(b, f);
    if (g.degree() >= 1 && g.degree() < n) {
      equal_degree(g, d, rng, out);
      equal_degree(exact_div(f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace

Factorization factor(const Poly& a, std::uint64_t seed) {
  if (a.is_zero()) fail(ErrorKind::ZeroInput, "cannot factor the zero polynomial");
  Factorization result;
  result.unit = a.lead();
  std::vector<std::pair<Poly, unsigned>> sqf;
  squarefree(a.monic(), 1, sqf);
  std::mt19937_64 rng(seed);
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<Poly> irreducibles;
      equal_degree(block, d, rng, irreducibles);
      for (auto& g : irreducibles) result.factors.emplace_back(std::move(g), mult);
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return result;
}

bool is_irreducible(const Poly& a) {
  if (a.degree() < 1) fail(ErrorKind::ConstantInput, "irreducibility of a constant is undefined");
  const Field& field = a.field();
  const Poly f = a.monic();
  const unsigned n = static_cast<unsigned>(f.degree());
  if (n == 1) return true;
  const Poly x = Poly::variable(field);

  // frob[k] = t^{q^k} mod f for k = 0..n.
  std::vector<Poly> frob{x % f};
  for (unsigned k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), field.q(), f));
  if (!(frob[n] - x % f).is_zero()) return false;

  unsigned m = n;
  for (unsigned r = 2; r <= m; ++r) {
    if (m % r != 0) continue;
    while (m % r == 0) m /= r;
    Poly g = gcd(frob[n / r] - x, f);
    if (!g.is_one()) return false;
  }
  return true;
}

Poly expand(const Factorization& fac, const Field& field) {
  Poly out = Poly::constant(field, fac.unit);
  for (const auto& [f, e] : fac.factors) out *= pow(f, e);
  return out;
}

}  // namespace sunit
