#include <set>

#include "doctest.h"
#include "sunit/error.hpp"
#include "sunit/factor.hpp"
#include "sunit/hasse.hpp"
#include "sunit/unit_group.hpp"
#include "support.hpp"
#include "unit_group_properties.hpp"

using namespace sunit;
using sunit::testing::P;

namespace {

const Field& F2() { return Field::get(2); }
const Field& F3() { return Field::get(3); }

RatFunc R(const Poly& a) { return RatFunc(a); }

SubgroupPresentation x_plus_y() {
  const Field& f = F3();
  return build_presentation({R(P(f, {0, 1})), R(P(f, {0, -1})), R(P(f, {1, -1}))});
}

SubgroupPresentation one_plus_t() { return build_presentation({R(P(F2(), {1, 1}))}); }

// A random subgroup: each generator a unit times small powers of a few
// low-degree irreducibles.
SubgroupPresentation random_subgroup(const Field& f, std::mt19937_64& rng) {
  std::vector<Poly> pool;
  for (int d = 1; d <= 2; ++d)
    for (const auto& a : sunit::testing::all_monic(f, d))
      if (is_irreducible(a)) pool.push_back(a);
  std::vector<RatFunc> gens;
  const std::size_t n = 1 + rng() % 3;
  for (std::size_t i = 0; i < n; ++i) {
    RatFunc g = RatFunc::constant(f, static_cast<Field::Elem>(1 + rng() % (f.q() - 1)));
    for (int k = 0; k < 2; ++k)
      g *= RatFunc(pool[rng() % pool.size()]).pow(static_cast<std::int64_t>(rng() % 5) - 2);
    gens.push_back(g);
  }
  return build_presentation(gens);
}

Word random_word(std::size_t n, std::int64_t bound, std::mt19937_64& rng) {
  Word w(n);
  for (auto& v : w) v = static_cast<std::int64_t>(rng() % (2 * bound + 1)) - bound;
  return w;
}

}  // namespace

TEST_CASE("hermite_normal_form shape") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 4, cols = rng() % 4;
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(cols));
    for (auto& row : a)
      for (auto& v : row) v = static_cast<int>(rng() % 9) - 4;
    const HermiteForm h = hermite_normal_form(a, cols);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c = 0; c < cols; ++c) {
        BigInt acc = 0;
        for (std::size_t k = 0; k < n; ++k) acc += h.u[i][k] * a[k][c];
        CHECK(acc == h.h[i][c]);
      }
    for (std::size_t k = 0; k < h.rank(); ++k) {
      const std::size_t pc = h.pivot_cols[k];
      CHECK(h.h[k][pc] > 0);
      for (std::size_t i = 0; i < n; ++i) {
        if (i > k) CHECK(h.h[i][pc] == 0);
        if (i < k) CHECK((h.h[i][pc] >= 0 && h.h[i][pc] < h.h[k][pc]));
      }
      if (k > 0) CHECK(pc > h.pivot_cols[k - 1]);
    }
    for (std::size_t i = h.rank(); i < n; ++i)
      for (std::size_t c = 0; c < cols; ++c) CHECK(h.h[i][c] == 0);
  }
}

TEST_CASE("build_presentation examples") {
  const SubgroupPresentation g = x_plus_y();
  REQUIRE(g.support.size() == 2);
  CHECK(g.support[0] == Place::finite(P(F3(), {0, 1})));
  CHECK(g.support[1] == Place::finite(P(F3(), {2, 1})));
  CHECK(g.exponent_matrix == std::vector<std::vector<std::int64_t>>{{1, 0}, {1, 0}, {0, 1}});
  CHECK(g.constants == std::vector<Field::Elem>{1, 2, 2});
  CHECK(g.lattice_rank() == 2);

  const SubgroupPresentation h = one_plus_t();
  CHECK(h.support == std::vector<Place>{Place::finite(P(F2(), {1, 1}))});
  CHECK(h.exponent_matrix == std::vector<std::vector<std::int64_t>>{{1}});
  CHECK(h.constants == std::vector<Field::Elem>{1});

  const SubgroupPresentation c = build_presentation({RatFunc::constant(F3(), 2)});
  CHECK(c.support.empty());
  CHECK(c.exponent_matrix == std::vector<std::vector<std::int64_t>>{{}});
  CHECK(c.constants == std::vector<Field::Elem>{2});
  CHECK(constant_subgroup(c) == std::vector<Field::Elem>{1, 2});

  try {
    build_presentation({RatFunc(F3())});
    FAIL("expected zero-input");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroInput);
  }
}

TEST_CASE("member examples") {
  const SubgroupPresentation g = x_plus_y();
  const RatFunc tm1 = R(P(F3(), {-1, 1}));
  MembershipWitness w = member(tm1, g);
  REQUIRE(w.member);
  CHECK(g.evaluate(w.word) == tm1);
  CHECK(g.evaluate({-1, 1, 1}) == tm1);
  // The kernel word (1, -1, 0) has constant -1, so every constant is reachable.
  CHECK(constant_subgroup(g) == std::vector<Field::Elem>{1, 2});
  CHECK(member(-tm1, g).member);

  const SubgroupPresentation h = one_plus_t();
  MembershipWitness n = member(RatFunc::variable(F2()), h);
  CHECK_FALSE(n.member);
  REQUIRE(n.obstruction);
  CHECK(*n.obstruction == Place::finite(P(F2(), {0, 1})));

  MembershipWitness inv = member(R(P(F2(), {1, 1})).inverse(), h);
  REQUIRE(inv.member);
  CHECK(inv.word == Word{-1});

  // <t> over F_3 misses -t: exponents reachable, constant is not.
  const SubgroupPresentation t_only = build_presentation({RatFunc::variable(F3())});
  MembershipWitness c = member(-RatFunc::variable(F3()), t_only);
  CHECK_FALSE(c.member);
  CHECK(c.constant_mismatch);
  CHECK_FALSE(c.obstruction);
  // <t^2> misses t because the exponent 1 is odd.
  const SubgroupPresentation t2 = build_presentation({RatFunc::variable(F3()).pow(2)});
  CHECK(member(RatFunc::variable(F3()), t2).obstruction);
}

TEST_CASE("property: member reconstructs pushed-forward words") {
  std::mt19937_64 rng(101);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Field& f = trial % 2 ? F3() : F2();
    const SubgroupPresentation g = random_subgroup(f, rng);
    const Word w = random_word(g.size(), 4, rng);
    const RatFunc x = g.evaluate(w);
    const MembershipWitness m = member(x, g);
    REQUIRE(m.member);
    CHECK(g.evaluate(m.word) == x);
    ++checked;
  }
  CHECK(checked == 100);
}

TEST_CASE("property: member agrees with a brute-force word search") {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 30; ++trial) {
    const Field& f = trial % 2 ? F3() : F2();
    const SubgroupPresentation g = random_subgroup(f, rng);
    std::set<RatFunc> reachable;
    sunit::testing::for_each_word(g.size(), -3, 3, [&](const Word& w) { reachable.insert(g.evaluate(w)); });
    for (const auto& x : reachable) CHECK(member(x, g).member);
    // Random candidates built from the same places plus a constant.
    for (int k = 0; k < 20; ++k) {
      RatFunc x = g.evaluate(random_word(g.size(), 1, rng)) *
                  RatFunc::constant(f, static_cast<Field::Elem>(1 + rng() % (f.q() - 1)));
      if (rng() % 3 == 0) x *= RatFunc::variable(f) + RatFunc::constant(f, 1);
      const MembershipWitness m = member(x, g);
      if (m.member) {
        CHECK(g.evaluate(m.word) == x);
      } else {
        CHECK(reachable.count(x) == 0);
        CHECK((m.obstruction.has_value() != m.constant_mismatch));
      }
    }
  }
}

TEST_CASE("radical_member examples") {
  const RatFunc t2v = RatFunc::variable(F2());
  CHECK(radical_member(t2v, build_presentation({t2v.pow(2)})));
  CHECK_FALSE(member(t2v, build_presentation({t2v.pow(2)})).member);
  CHECK_FALSE(radical_member(t2v, one_plus_t()));
  CHECK(radical_member(RatFunc::constant(F3(), 2), x_plus_y()));
  CHECK(radical_member(RatFunc::constant(F3(), 2), build_presentation({RatFunc::variable(F3())})));
}

TEST_CASE("property: radical_member is power-stable and matches small powers") {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 40; ++trial) {
    const Field& f = trial % 2 ? F3() : F2();
    const SubgroupPresentation g = random_subgroup(f, rng);
    // x = a word raised to a rational power when possible, or a perturbation.
    RatFunc x = g.evaluate(random_word(g.size(), 2, rng));
    if (rng() % 2) x *= RatFunc::variable(f) + RatFunc::constant(f, 1);
    const bool rad = radical_member(x, g);
    for (std::int64_t n : {1, 2, 3}) CHECK(radical_member(x.pow(n), g) == rad);
    bool some_power = false;
    for (std::int64_t n = 1; n <= 48 && !some_power; ++n) some_power = member(x.pow(n), g).member;
    if (some_power) CHECK(rad);
  }
  // A case where the rational span matters: <t^2 (t+1)^2> contains no t(t+1)
  // but its square.
  const RatFunc t = RatFunc::variable(F2());
  const RatFunc s = t * (t + RatFunc::constant(F2(), 1));
  const SubgroupPresentation g = build_presentation({s.pow(2)});
  CHECK(radical_member(s, g));
  CHECK_FALSE(radical_member(t, g));
}

TEST_CASE("representatives examples") {
  const RepSet r = representatives(one_plus_t(), 1);
  REQUIRE(r.size() == 2);
  CHECK(r.elements[0].is_one());
  CHECK(r.elements[1] == R(P(F2(), {1, 1})));
  CHECK(r.words == std::vector<Word>{{0}, {1}});

  const SubgroupPresentation g = x_plus_y();
  const RepSet r9 = representatives(g, 1);
  CHECK(r9.size() == 9);
  CHECK(r9.words.front() == Word{0, 0, 0});
  // The first two generators agree mod 3; lexicographic minimality leaves
  // the first one unused.
  for (const auto& w : r9.words) CHECK(w[0] == 0);

  CHECK_THROWS_AS(representatives(g, 2, 50), Error);
  CHECK(representatives(g, 2).size() == 81);
  // Image of <t^2> in Z/4 is {0, 2}.
  const RatFunc t = RatFunc::variable(F2());
  CHECK(representatives(build_presentation({t.pow(2)}), 2).size() == 2);
}

TEST_CASE("property: representatives against brute-force enumeration") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 30; ++trial) {
    const Field& f = trial % 2 ? F3() : F2();
    const SubgroupPresentation g = random_subgroup(f, rng);
    for (unsigned m : {1u, 2u}) {
      if (f.p() == 3 && m == 2 && g.size() > 2) continue;
      const RepSet r = representatives(g, m);
      // Oracle: walk words in [0, p^m)^n in lexicographic order; the first
      // word reaching each key is its representative.
      std::map<std::vector<std::uint64_t>, Word> first;
      const auto pm = static_cast<std::int64_t>(r.modulus);
      std::vector<Word> all;
      sunit::testing::for_each_word(g.size(), 0, pm - 1, [&](const Word& w) { all.push_back(w); });
      std::sort(all.begin(), all.end());
      for (const auto& w : all) first.emplace(residue_key(g, w, r.modulus), w);
      REQUIRE(r.size() == first.size());
      for (std::size_t i = 0; i < r.size(); ++i) {
        CHECK(first.at(r.keys[i]) == r.words[i]);
        CHECK(g.evaluate(r.words[i]) == r.elements[i]);
      }
      CHECK(std::set<std::vector<std::uint64_t>>(r.keys.begin(), r.keys.end()).size() == r.size());
      CHECK(r.elements.front().is_one());
      CHECK(sunit::testing::is_power_of(r.size(), f.p()));
      std::uint64_t bound = 1;
      for (std::size_t k = 0; k < m * g.lattice_rank(); ++k) bound *= f.p();
      CHECK(r.size() <= bound);
      CHECK(sunit::testing::repset_completeness_failures(g, r, 2) == 0);
    }
    const auto s1 = representatives(g, 1).size();
    if (f.p() == 2) CHECK(representatives(g, 2).size() % s1 == 0);
  }
}

TEST_CASE("kernel_element_check") {
  const SubgroupPresentation h = one_plus_t();
  const RatFunc s = R(P(F2(), {1, 1}));
  CHECK(kernel_element_check(s.pow(2), h, 1));
  CHECK_FALSE(kernel_element_check(s, h, 1));
  CHECK_FALSE(kernel_element_check(s.pow(2), h, 2));
  const RatFunc t3 = RatFunc::variable(F3());
  CHECK(kernel_element_check(-t3.pow(3), x_plus_y(), 1));
  try {
    kernel_element_check(RatFunc::variable(F2()), h, 1);
    FAIL("expected not-a-member");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAMember);
  }

  // Agreement with the derivation-kernel test after dividing out the constant.
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 60; ++trial) {
    const Field& f = trial % 2 ? F3() : F2();
    const SubgroupPresentation g = random_subgroup(f, rng);
    const RatFunc x = g.evaluate(random_word(g.size(), 4, rng));
    const unsigned m = 1 + trial % 2;
    const RatFunc monic = x / RatFunc::constant(f, divisor_vector(x).constant);
    CHECK(kernel_element_check(x, g, m) == in_power_subfield(monic, {m}));
  }
}
