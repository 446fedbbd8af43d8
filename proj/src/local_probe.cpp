#include "sunit/local_probe.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

#include "sunit/error.hpp"
#include "sunit/factor.hpp"

namespace sunit {

namespace {

Poly unit_residue(const RatFunc& x, const Modulus& m, const std::string& what) {
  if (x.is_zero() || valuation(x, m.place()) != 0)
    fail(ErrorKind::NotAUnitAtPlace, what + " " + x.to_string() + " is not a unit at " + m.to_string());
  return reduce_mod(x, m);
}

Poly target_residue(const Equation& eq, const Field& f) { return Poly::constant(f, static_cast<Field::Elem>(eq.rhs)); }

// Lexicographically compares words after the L1 norm.
bool shorter_word(const Word& a, const Word& b) {
  std::int64_t na = 0, nb = 0;
  for (auto v : a) na += v < 0 ? -v : v;
  for (auto v : b) nb += v < 0 ? -v : v;
  if (na != nb) return na < nb;
  return a < b;
}

}  // namespace

std::optional<std::size_t> ResidueGroup::find(const Poly& residue) const {
  auto it = index.find(residue);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

ResidueGroup residue_group(const SubgroupPresentation& g, const Modulus& m) {
  const Poly& mod = m.power();
  std::vector<Poly> steps;
  std::vector<Word> step_words;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Poly r = unit_residue(g.generators[i], m, "generator");
    Word w(g.size(), 0);
    w[i] = 1;
    steps.push_back(r);
    step_words.push_back(w);
    w[i] = -1;
    steps.push_back(inverse_mod(r, mod));
    step_words.push_back(w);
  }
  ResidueGroup out{m, {}, {}, {}};
  const Poly one = Poly::constant(*g.field, 1);
  out.elements.push_back(one);
  out.words.emplace_back(g.size(), 0);
  out.index.emplace(one, 0);
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    for (std::size_t s = 0; s < steps.size(); ++s) {
      Poly next = (out.elements[head] * steps[s]) % mod;
      if (out.index.count(next)) continue;
      Word w = out.words[head];
      for (std::size_t i = 0; i < w.size(); ++i) w[i] += step_words[s][i];
      out.index.emplace(next, out.elements.size());
      out.elements.push_back(std::move(next));
      out.words.push_back(std::move(w));
    }
  }
  return out;
}

std::optional<CongruenceWitness> sl_search(const Equation& eq, const ResidueGroup& group) {
  const Modulus& m = group.modulus;
  const Poly& mod = m.power();
  const Field& f = group.elements.front().field();
  std::vector<Poly> b;
  for (const auto& x : eq.b) b.push_back(unit_residue(x, m, "coefficient"));
  const std::size_t M = b.size();
  const Poly last_inv = inverse_mod(b.back(), mod);
  const Poly target = target_residue(eq, f) % mod;

  std::vector<std::size_t> idx(M - 1, 0);
  for (;;) {
    Poly acc(f);
    for (std::size_t j = 0; j + 1 < M; ++j) acc = acc + b[j] * group.elements[idx[j]];
    const Poly need = ((target - acc) * last_inv) % mod;
    if (auto hit = group.find(need)) {
      CongruenceWitness w;
      for (std::size_t j = 0; j + 1 < M; ++j) {
        w.residues.push_back(group.elements[idx[j]]);
        w.words.push_back(group.words[idx[j]]);
      }
      w.residues.push_back(group.elements[*hit]);
      w.words.push_back(group.words[*hit]);
      return w;
    }
    std::size_t j = 0;
    while (j < idx.size() && ++idx[j] == group.size()) idx[j++] = 0;
    if (j == idx.size()) return std::nullopt;
  }
}

std::optional<CongruenceWitness> sl_search(const Equation& eq, const SubgroupPresentation& g, const Modulus& m) {
  return sl_search(eq, residue_group(g, m));
}

bool check_congruence(const Equation& eq, const Modulus& m, const CongruenceWitness& w) {
  if (w.residues.size() != eq.b.size()) return false;
  const Field& f = eq.b.front().field();
  Poly acc(f);
  for (std::size_t j = 0; j < eq.b.size(); ++j) acc = acc + reduce_mod(eq.b[j], m) * w.residues[j];
  return ((acc - target_residue(eq, f)) % m.power()).is_zero();
}

std::vector<Place> s_support(const Equation& eq, const SubgroupPresentation& g) {
  std::set<Place> s(g.support.begin(), g.support.end());
  for (const auto& x : eq.b)
    for (const auto& p : finite_support(x)) s.insert(p);
  return {s.begin(), s.end()};
}

std::vector<Modulus> candidate_moduli(const Equation& eq, const SubgroupPresentation& g, int deg_bound,
                                      unsigned e_bound) {
  if (deg_bound < 1 || e_bound < 1) fail(ErrorKind::InvalidArgument, "obstruction bounds must be at least 1");
  const Field& f = *g.field;
  const auto s = s_support(eq, g);
  std::vector<Modulus> out;
  for (int d = 1; d <= deg_bound; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= f.q();
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<Field::Elem> c(d + 1, 0);
      std::uint64_t x = code;
      for (int i = 0; i < d; ++i, x /= f.q()) c[i] = static_cast<Field::Elem>(x % f.q());
      c[d] = 1;
      Poly base(f, std::move(c));
      if (!is_irreducible(base)) continue;
      if (std::binary_search(s.begin(), s.end(), Place::finite(base))) continue;
      for (unsigned e = 1; e <= e_bound; ++e) out.emplace_back(base, e);
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Modulus& a, const Modulus& b) {
    const auto wa = static_cast<std::int64_t>(a.base().degree()) * a.exponent();
    const auto wb = static_cast<std::int64_t>(b.base().degree()) * b.exponent();
    if (wa != wb) return wa < wb;
    if (!(a.base() == b.base())) return a.base() < b.base();
    return a.exponent() < b.exponent();
  });
  return out;
}

ObstructionSearch find_local_obstruction(const Equation& eq, const SubgroupPresentation& g, int deg_bound,
                                         unsigned e_bound) {
  ObstructionSearch out;
  for (const auto& m : candidate_moduli(eq, g, deg_bound, e_bound)) {
    ++out.moduli_tested;
    const ResidueGroup group = residue_group(g, m);
    if (!sl_search(eq, group)) {
      out.witness = ObstructionWitness{m, group.size()};
      return out;
    }
  }
  return out;
}

std::vector<Solution> sg_search(const Equation& eq, const SubgroupPresentation& g, std::int64_t bound, double limit) {
  if (bound < 1) fail(ErrorKind::InvalidArgument, "word bound must be at least 1");
  const double space = std::pow(2.0 * static_cast<double>(bound) + 1.0, static_cast<double>(g.size() * eq.b.size()));
  if (space > limit) fail(ErrorKind::ResourceLimit, "word search space exceeds the configured bound");
  for (const auto& x : eq.b)
    if (x.is_zero()) fail(ErrorKind::ZeroComponent, "zero coefficient in b");

  std::map<RatFunc, Word> reach;
  Word w(g.size(), -bound);
  for (;;) {
    const RatFunc x = g.evaluate(w);
    auto it = reach.find(x);
    if (it == reach.end())
      reach.emplace(x, w);
    else if (shorter_word(w, it->second))
      it->second = w;
    std::size_t i = 0;
    while (i < w.size() && w[i] == bound) w[i++] = -bound;
    if (i == w.size()) break;
    ++w[i];
  }
  std::vector<const std::pair<const RatFunc, Word>*> elems;
  for (const auto& kv : reach) elems.push_back(&kv);

  const Field& f = *g.field;
  const RatFunc target = RatFunc::constant(f, static_cast<Field::Elem>(eq.rhs));
  const std::size_t M = eq.b.size();
  std::vector<Solution> out;
  std::vector<std::size_t> idx(M - 1, 0);
  for (;;) {
    RatFunc acc(f);
    for (std::size_t j = 0; j + 1 < M; ++j) acc += eq.b[j] * elems[idx[j]]->first;
    const RatFunc need = (target - acc) / eq.b.back();
    if (!need.is_zero()) {
      auto hit = reach.find(need);
      if (hit != reach.end()) {
        Solution s;
        for (std::size_t j = 0; j + 1 < M; ++j) {
          s.x.push_back(elems[idx[j]]->first);
          s.words.push_back(elems[idx[j]]->second);
        }
        s.x.push_back(hit->first);
        s.words.push_back(hit->second);
        out.push_back(std::move(s));
      }
    }
    std::size_t j = 0;
    while (j < idx.size() && ++idx[j] == elems.size()) idx[j++] = 0;
    if (j == idx.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const Solution& a, const Solution& b) { return a.x < b.x; });
  return out;
}

ClosureProbe closure_probe(const RatFunc& g, const Modulus& m, std::size_t n_max) {
  if (n_max < 1) fail(ErrorKind::InvalidArgument, "closure probe needs n_max >= 1");
  const Poly x = unit_residue(g, m, "base");
  ClosureProbe out{m, m.unit_group_order(), {}, {}, 0};
  BigInt e = BigInt(g.field().p()) % out.group_order;
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (n > 1) e = boost::multiprecision::powm(e, BigInt(n), out.group_order);
    out.exponents.push_back(e);
    out.values.push_back(powmod(x, e, m.power()));
  }
  std::size_t n0 = n_max;
  while (n0 > 1 && out.values[n0 - 2] == out.values.back()) --n0;
  out.stabilization_index = n0;
  return out;
}

}  // namespace sunit
