#include <set>

#include "doctest.h"
#include "sunit/error.hpp"
#include "sunit/local_probe.hpp"
#include "support.hpp"
#include "unit_group_properties.hpp"

using namespace sunit;
using sunit::testing::P;

namespace {

const Field& F2() { return Field::get(2); }
const Field& F3() { return Field::get(3); }
RatFunc R(const Poly& a) { return RatFunc(a); }
RatFunc one(const Field& f) { return RatFunc::constant(f, 1); }

SubgroupPresentation x_plus_y() {
  const Field& f = F3();
  return build_presentation({R(P(f, {0, 1})), R(P(f, {0, -1})), R(P(f, {1, -1}))});
}

Modulus mod(const Poly& base, unsigned e) { return Modulus(base, e); }

// Oracle: the cyclic group generated by one residue, by repeated
// multiplication.
std::set<Poly> powers(const Poly& x, const Poly& m) {
  std::set<Poly> out;
  Poly cur = Poly::constant(x.field(), 1);
  while (out.insert(cur).second) cur = (cur * x) % m;
  return out;
}

}  // namespace

TEST_CASE("residue_group examples") {
  const SubgroupPresentation g = build_presentation({R(P(F2(), {1, 1}))});
  const Poly f = P(F2(), {1, 1, 1});
  const ResidueGroup r1 = residue_group(g, mod(f, 1));
  CHECK(r1.size() == 3);
  const ResidueGroup r2 = residue_group(g, mod(f, 2));
  CHECK(r2.size() == 6);
  const std::set<Poly> expected{P(F2(), {1}),          P(F2(), {1, 1}),    P(F2(), {1, 0, 1}),
                                P(F2(), {1, 1, 1, 1}), P(F2(), {0, 0, 1}), P(F2(), {0, 0, 1, 1})};
  CHECK(std::set<Poly>(r2.elements.begin(), r2.elements.end()) == expected);
  CHECK(std::set<Poly>(r2.elements.begin(), r2.elements.end()) == powers(P(F2(), {1, 1}), f * f));
  CHECK_FALSE(r2.find(P(F2(), {0, 1})));
  for (std::size_t i = 0; i < r2.size(); ++i)
    CHECK(reduce_mod(g.evaluate(r2.words[i]), r2.modulus) == r2.elements[i]);

  const ResidueGroup r3 = residue_group(build_presentation({RatFunc::variable(F3())}), mod(P(F3(), {1, 1}), 1));
  CHECK(std::set<Poly>(r3.elements.begin(), r3.elements.end()) == std::set<Poly>{P(F3(), {1}), P(F3(), {2})});

  try {
    residue_group(build_presentation({RatFunc::variable(F2())}), mod(P(F2(), {0, 1}), 1));
    FAIL("expected not-a-unit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAUnitAtPlace);
  }
  CHECK_THROWS_AS(residue_group(build_presentation({RatFunc::variable(F2()).inverse()}), mod(P(F2(), {0, 1}), 2)),
                  Error);
}

TEST_CASE("property: residue groups are closed subgroups within the unit-group order") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Field& f = trial % 2 ? F3() : F2();
    const Poly base = trial % 4 < 2 ? P(f, {1, 1}) : (f.p() == 2 ? P(f, {1, 1, 1}) : P(f, {1, 0, 1}));
    const Modulus m = mod(base, 1 + trial % 3);
    std::vector<RatFunc> gens;
    for (int k = 0; k < 2; ++k) {
      RatFunc x = RatFunc::constant(f, static_cast<Field::Elem>(1 + rng() % (f.q() - 1)));
      x *= RatFunc::variable(f).pow(static_cast<std::int64_t>(rng() % 5) - 2);
      gens.push_back(x);
    }
    const SubgroupPresentation g = build_presentation(gens);
    const ResidueGroup r = residue_group(g, m);
    const std::set<Poly> set(r.elements.begin(), r.elements.end());
    CHECK(set.size() == r.size());
    CHECK(set.count(Poly::constant(f, 1)) == 1);
    for (const auto& a : r.elements)
      for (const auto& b : r.elements) CHECK(set.count((a * b) % m.power()) == 1);
    CHECK(m.unit_group_order() % r.size() == 0);
  }
}

TEST_CASE("sl_search examples") {
  const SubgroupPresentation g = build_presentation({R(P(F2(), {1, 1}))});
  const Equation eq{{RatFunc::variable(F2()), one(F2())}, 0};
  const Modulus m1 = mod(P(F2(), {1, 1, 1}), 1);
  const auto w = sl_search(eq, g, m1);
  REQUIRE(w);
  CHECK(check_congruence(eq, m1, *w));
  CHECK(w->residues[0] == P(F2(), {1}));
  CHECK(w->residues[1] == P(F2(), {1, 0, 1}) % m1.power());

  const Modulus m2 = mod(P(F2(), {1, 1, 1}), 2);
  CHECK_FALSE(sl_search(eq, g, m2));
  // Oracle: all 36 pairs by hand.
  const ResidueGroup r2 = residue_group(g, m2);
  int hits = 0;
  for (const auto& a : r2.elements)
    for (const auto& b : r2.elements) hits += check_congruence(eq, m2, {{a, b}, {}});
  CHECK(hits == 0);

  const SubgroupPresentation x = x_plus_y();
  for (const Poly& base : {P(F3(), {1, 1}), P(F3(), {1, 0, 1}), P(F3(), {2, 1, 1})})
    for (unsigned e : {1u, 2u}) {
      const Modulus m = mod(base, e);
      for (int rhs : {0, 1}) {
        const Equation eq3{{one(F3()), one(F3())}, rhs};
        const auto hit = sl_search(eq3, x, m);
        REQUIRE(hit);
        CHECK(check_congruence(eq3, m, *hit));
      }
    }
}

TEST_CASE("find_local_obstruction examples") {
  const SubgroupPresentation g = build_presentation({R(P(F2(), {1, 1}))});
  const Equation eq{{RatFunc::variable(F2()), one(F2())}, 0};
  const auto cands = candidate_moduli(eq, g, 2, 2);
  REQUIRE(cands.size() == 2);
  CHECK(cands[0] == mod(P(F2(), {1, 1, 1}), 1));
  const ObstructionSearch s = find_local_obstruction(eq, g, 2, 2);
  REQUIRE(s.witness);
  CHECK(s.witness->modulus == mod(P(F2(), {1, 1, 1}), 2));
  CHECK(s.witness->group_size == 6);
  CHECK(s.witness->modulus.to_string() == "(T^2+T+1)^2");

  CHECK_FALSE(find_local_obstruction({{one(F3()), one(F3())}, 0}, x_plus_y(), 3, 2).witness);
  CHECK_FALSE(find_local_obstruction({{one(F3()), one(F3())}, 1}, x_plus_y(), 3, 2).witness);

  const SubgroupPresentation trivial3 = build_presentation({one(F3())});
  const ObstructionSearch t3 = find_local_obstruction({{one(F3()), one(F3())}, 0}, trivial3, 1, 1);
  REQUIRE(t3.witness);
  CHECK(t3.witness->modulus == mod(P(F3(), {0, 1}), 1));
  CHECK_FALSE(find_local_obstruction({{one(F2()), one(F2())}, 0}, build_presentation({one(F2())}), 1, 1).witness);
  CHECK_THROWS_AS(find_local_obstruction(eq, g, 0, 1), Error);
}

TEST_CASE("candidate_moduli ordering") {
  const SubgroupPresentation g = build_presentation({one(F3())});
  const auto c = candidate_moduli({{one(F3())}, 0}, g, 2, 3);
  for (std::size_t i = 1; i < c.size(); ++i) {
    const auto w0 = c[i - 1].base().degree() * c[i - 1].exponent();
    const auto w1 = c[i].base().degree() * c[i].exponent();
    CHECK(w0 <= w1);
    if (w0 == w1) CHECK((c[i - 1].base() < c[i].base() || c[i - 1].base() == c[i].base()));
  }
  // 3 linear and 3 quadratic irreducibles over F_3, three exponents each.
  CHECK(c.size() == 18);
}

TEST_CASE("sg_search examples") {
  const SubgroupPresentation g = build_presentation({R(P(F2(), {1, 1}))});
  const RfVector b{RatFunc::variable(F2()), one(F2())};
  const auto sols = sg_search({b, 1}, g, 8);
  const RatFunc s = R(P(F2(), {1, 1}));
  REQUIRE(sols.size() == 2);
  std::set<RfVector> pts;
  for (const auto& x : sols) pts.insert(x.x);
  CHECK(pts == std::set<RfVector>{{one(F2()), s}, {s.inverse(), s.inverse()}});
  CHECK(sg_search({b, 0}, g, 8).empty());

  const auto xs = sg_search({{one(F3()), one(F3())}, 0}, x_plus_y(), 2);
  const RatFunc t = RatFunc::variable(F3());
  bool found = false;
  for (const auto& x : xs) found = found || x.x == RfVector{t, -t};
  CHECK(found);
  const auto xs1 = sg_search({{one(F3()), one(F3())}, 1}, x_plus_y(), 2);
  found = false;
  for (const auto& x : xs1) found = found || x.x == RfVector{t, one(F3()) - t};
  CHECK(found);
  for (const auto& list : {xs, xs1})
    for (const auto& x : list) {
      for (std::size_t j = 0; j < 2; ++j) {
        CHECK(x_plus_y().evaluate(x.words[j]) == x.x[j]);
        CHECK(member(x.x[j], x_plus_y()).member);
      }
    }
  CHECK_THROWS_AS(sg_search({b, 1}, g, 8, 100.0), Error);
  CHECK_THROWS_AS(sg_search({b, 1}, g, 0), Error);
}

TEST_CASE("closure_probe examples") {
  const RatFunc t = RatFunc::variable(F3());
  // Oracle: the exact exponent 3^{n!} for n <= 4 and plain powmod.
  auto exact = [&](const Modulus& m, std::size_t n) {
    BigInt fact = 1;
    for (std::size_t k = 2; k <= n; ++k) fact *= k;
    BigInt e = boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(fact));
    return powmod(reduce_mod(t, m), e, m.power());
  };
  for (const auto& [base, e] : std::vector<std::pair<Poly, unsigned>>{
           {P(F3(), {1, 1}), 1}, {P(F3(), {1, 1}), 2}, {P(F3(), {1, 0, 1}), 1}}) {
    const Modulus m = mod(base, e);
    const ClosureProbe c = closure_probe(t, m, 6);
    CHECK(c.stabilization_index <= 3);
    for (std::size_t n = 1; n <= 4; ++n) CHECK(c.values[n - 1] == exact(m, n));
  }
  const ClosureProbe c1 = closure_probe(t, mod(P(F3(), {1, 1}), 1), 5);
  CHECK(c1.stabilization_index == 1);
  CHECK(c1.stable_value() == P(F3(), {2}));
  const ClosureProbe c2 = closure_probe(t, mod(P(F3(), {1, 1}), 2), 5);
  CHECK(c2.stabilization_index == 1);
  CHECK(c2.stable_value() == P(F3(), {2}));
  CHECK(closure_probe(t, mod(P(F3(), {1, 0, 1}), 1), 5).group_order == 8);
  CHECK_THROWS_AS(closure_probe(t, mod(P(F3(), {0, 1}), 1), 3), Error);
}

TEST_CASE("property: stabilization index is monotone in the precision") {
  for (const Field* f : {&F2(), &F3()}) {
    for (const Poly& base : {P(*f, {1, 1}), P(*f, {1, 0, 1})}) {
      if (base.degree() == 2 && f->p() == 2) continue;
      const RatFunc g = RatFunc::variable(*f) + RatFunc::constant(*f, f->p() == 2 ? 0 : 1);
      if (valuation(g, Place::finite(base)) != 0) continue;
      std::size_t prev = 0;
      for (unsigned e = 1; e <= 4; ++e) {
        const ClosureProbe c = closure_probe(g, mod(base, e), 8);
        CHECK(c.stabilization_index >= prev);
        prev = c.stabilization_index;
      }
    }
  }
}

TEST_CASE("property: certified-empty instances have a local obstruction") {
  const SubgroupPresentation g = build_presentation({R(P(F2(), {1, 1}))});
  const Equation eq{{RatFunc::variable(F2()), one(F2())}, 0};
  CHECK(decide(eq, g, 1).outcome == Outcome::CertifiedEmpty);
  CHECK(find_local_obstruction(eq, g, 4, 3).witness);
  // Every congruence witness found on the way re-checks in the residue ring.
  for (const auto& m : candidate_moduli(eq, g, 4, 3))
    if (auto w = sl_search(eq, g, m)) CHECK(check_congruence(eq, m, *w));
}
