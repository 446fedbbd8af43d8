#include "doctest.h"
#include "sunit/error.hpp"
#include "sunit/wronskian.hpp"
#include "support.hpp"
#include "wronskian_properties.hpp"

using namespace sunit;
using sunit::testing::P;

namespace {

RatFunc R(const Poly& num) { return RatFunc(num); }

// Oracle: sum_r C[j][r](t^{pm}) t^r rebuilt from the coordinate matrix.
RatFunc reassemble(const RfVector& coords, std::uint64_t pm) {
  const Field& f = coords.front().field();
  auto spread = [&](const Poly& a) {
    std::vector<Field::Elem> c(a.coeffs().empty() ? 0 : (a.coeffs().size() - 1) * pm + 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i * pm] = f.pth_root(a.coeffs()[i]);
    return Poly(f, std::move(c));
  };
  RatFunc acc(f);
  for (std::size_t r = 0; r < coords.size(); ++r)
    acc += RatFunc(spread(coords[r].num()), spread(coords[r].den())) * R(Poly::monomial(f, 1, r));
  return acc;
}

}  // namespace

TEST_CASE("coordinate_matrix examples") {
  const Field& f2 = Field::get(2);
  const RatFunc one = RatFunc::constant(f2, 1), zero(f2);
  const RatFunc t = RatFunc::variable(f2);
  CHECK(coordinate_matrix({one, t}, 1) == RfMatrix{{one, zero}, {zero, one}});
  CHECK(coordinate_matrix({R(P(f2, {1, 0, 1})), t}, 1) == RfMatrix{{R(P(f2, {1, 1})), zero}, {zero, one}});
  const RfVector b{R(P(f2, {0, 1, 1})), R(P(f2, {1, 1}))};
  const RfMatrix c = coordinate_matrix(b, 1);
  CHECK(c == RfMatrix{{t, one}, {one, one}});
  for (std::size_t j = 0; j < b.size(); ++j) CHECK(reassemble(c[j], 2) == b[j]);
  try {
    coordinate_matrix({one, zero}, 1);
    FAIL("expected zero-component");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroComponent);
  }
}

TEST_CASE("coordinate_matrix reassembles random fractions") {
  std::mt19937_64 rng(17);
  for (std::uint32_t p : {2u, 3u}) {
    const Field& f = Field::get(p);
    for (unsigned m : {1u, 2u}) {
      const std::uint64_t pm = subfield_exponent(f, m);
      for (int trial = 0; trial < 10; ++trial) {
        RatFunc x = sunit::testing::random_ratfunc(f, 4, rng);
        CHECK(reassemble(coordinate_matrix({x}, m)[0], pm) == x);
      }
    }
  }
}

TEST_CASE("independence_test examples") {
  const Field& f2 = Field::get(2);
  const Field& f3 = Field::get(3);
  const RatFunc one3 = RatFunc::constant(f3, 1);
  for (unsigned m : {1u, 2u}) {
    IndependenceCertificate c = independence_test({one3, one3}, m);
    CHECK_FALSE(c.independent());
    CHECK(c.relation == RfVector{one3, -one3});
    CHECK(verify_certificate(c, {one3, one3}));
  }

  const RatFunc t = RatFunc::variable(f2);
  const RatFunc one = RatFunc::constant(f2, 1);
  IndependenceCertificate a = independence_test({t, one}, 1);
  REQUIRE(a.independent());
  CHECK(a.witness->orders() == std::vector<std::size_t>{0, 1});
  // Oracle: rows (t, 1), (1, 0); det = t*0 - 1*1 = -1 = 1 over F_2.
  CHECK(a.witness_det->is_one());
  CHECK(verify_certificate(a, {t, one}));

  // b = (t r, (1+t) r): independent because t/(1+t) has odd order at (t).
  const RatFunc r = RatFunc(P(f2, {1, 0, 1, 1}), P(f2, {0, 0, 1, 0, 1}));
  const RfVector b{t * r, R(P(f2, {1, 1})) * r};
  CHECK(rank(coordinate_matrix(b, 1)) == 2);
  IndependenceCertificate c = independence_test(b, 1);
  CHECK(c.independent());
  CHECK(verify_certificate(c, b));

  // M > p^m forces dependence.
  IndependenceCertificate d = independence_test({t, one, t * t * t}, 1);
  CHECK_FALSE(d.independent());
  CHECK(verify_certificate(d, {t, one, t * t * t}));
}

TEST_CASE("wronskian_det_adj examples") {
  const Field& f2 = Field::get(2);
  const RatFunc t = RatFunc::variable(f2);
  const RatFunc s = R(P(f2, {1, 1}));
  const IndexSet I({0, 1}, 2, 2);
  // Oracle: 2x2 determinant written out from the rows.
  auto det2 = [](const RfMatrix& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; };
  WronskianMatrix w1 = wronskian_matrix({t, s}, I);
  CHECK(w1.entries == RfMatrix{{t, s}, {RatFunc::constant(f2, 1), RatFunc::constant(f2, 1)}});
  CHECK(det2(w1.entries).is_one());
  CHECK(wronskian_det_adj({t, s}, I).det.is_one());

  const RfVector b2{R(P(f2, {0, 1, 1})), s};
  const RatFunc expected = det2(wronskian_matrix(b2, I).entries);
  CHECK(expected == R(P(f2, {1, 0, 1})));
  CHECK(wronskian_det_adj(b2, I).det == expected);

  CHECK_THROWS_AS(IndexSet({1, 2}, 2, 4), Error);
  CHECK_THROWS_AS(IndexSet({0, 2}, 2, 2), Error);
  CHECK_THROWS_AS(IndexSet({0, 0}, 2, 4), Error);
}

TEST_CASE("property: T * adj(T) = det * I") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const Field& f = Field::get(trial % 2 ? 3 : 2);
    const std::size_t M = 1 + trial % 3;
    const std::uint64_t pm = subfield_exponent(f, 2);
    RfVector b;
    for (std::size_t j = 0; j < M; ++j) b.push_back(sunit::testing::random_ratfunc(f, 3, rng));
    std::vector<std::size_t> orders{0};
    for (std::size_t j = 1; j < M; ++j) orders.push_back(orders.back() + 1 + rng() % 2);
    const IndexSet I(orders, M, pm);
    const RfMatrix T = wronskian_matrix(b, I).entries;
    const DetAdjugate da = det_adjugate(T);
    for (std::size_t i = 0; i < M; ++i)
      for (std::size_t k = 0; k < M; ++k) {
        RatFunc acc(f);
        for (std::size_t j = 0; j < M; ++j) acc += T[i][j] * da.adjugate[j][k];
        CHECK(acc == (i == k ? da.det : RatFunc(f)));
      }
  }
  // Singular input: the adjugate identity still holds with det = 0.
  const Field& f2 = Field::get(2);
  const RatFunc t = RatFunc::variable(f2);
  const RfMatrix S{{t, t}, {t, t}};
  const DetAdjugate ds = det_adjugate(S);
  CHECK(ds.det.is_zero());
  CHECK(ds.adjugate == RfMatrix{{t, -t}, {-t, t}});
}

TEST_CASE("candidate_solution examples") {
  const Field& f2 = Field::get(2);
  const RatFunc t = RatFunc::variable(f2);
  const RatFunc s = R(P(f2, {1, 1}));
  const RatFunc one = RatFunc::constant(f2, 1);

  auto c1 = candidate_solution({t, s}, 1);
  REQUIRE(c1);
  CHECK(*c1 == RfVector{one, one});
  CHECK(dot({t, s}, *c1).is_one());

  const RfVector b2{R(P(f2, {0, 1, 1})), s};
  auto c2 = candidate_solution(b2, 1);
  REQUIRE(c2);
  const RatFunc inv = R(P(f2, {1, 0, 1})).inverse();
  CHECK(*c2 == RfVector{inv, inv});
  CHECK(dot(b2, *c2).is_one());

  CHECK_FALSE(candidate_solution({t, one}, 1).has_value());
  CHECK_THROWS_AS(candidate_solution({one, one}, 1), Error);
}

TEST_CASE("property: scaling by p^m-th powers commutes with candidate_solution") {
  std::mt19937_64 rng(29);
  int compared = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Field& f = Field::get(trial % 2 ? 3 : 2);
    const unsigned m = 1;
    const std::uint64_t pm = subfield_exponent(f, m);
    RfVector b{sunit::testing::random_ratfunc(f, 3, rng), sunit::testing::random_ratfunc(f, 3, rng)};
    if (!independence_test(b, m).independent()) continue;
    RfVector gamma, scaled;
    for (const auto& x : b) {
      gamma.push_back(sunit::testing::random_ratfunc(f, 2, rng).pow(static_cast<std::int64_t>(pm)));
      scaled.push_back(x * gamma.back());
    }
    auto c = candidate_solution(b, m);
    auto cs = candidate_solution(scaled, m);
    REQUIRE(c.has_value() == cs.has_value());
    if (!c) continue;
    ++compared;
    for (std::size_t j = 0; j < b.size(); ++j) CHECK((*cs)[j] == (*c)[j] / gamma[j]);
  }
  CHECK(compared > 5);
}

TEST_CASE("Wronskian oracle suite") {
  const auto r = sunit::testing::wronskian_oracle_suite(200, 4242);
  CHECK(r.cases == 200);
  CHECK(r.dependent_cases > 20);
  CHECK(r.verdict_mismatches == 0);
  CHECK(r.certificate_failures == 0);
  CHECK(r.candidates > 20);
  CHECK(r.candidate_failures == 0);
  CHECK(r.uniqueness_checks > 10);
}
