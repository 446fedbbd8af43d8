#include "sunit/wronskian.hpp"

#include <algorithm>

#include "sunit/error.hpp"

namespace sunit {

namespace {

void check_components(const RfVector& b) {
  if (b.empty()) fail(ErrorKind::InvalidArgument, "empty coefficient vector");
  for (const auto& x : b)
    if (x.is_zero()) fail(ErrorKind::ZeroComponent, "coefficient vector has a zero component");
}

TaylorJet jet_of(const RatFunc& x, std::size_t n, JetCache* cache) {
  return cache ? cache->get(x, n) : taylor_jet(x, n);
}

// a(t) -> a(t^pm).
Poly spread(const Poly& a, std::uint64_t pm) {
  if (a.is_zero()) return a;
  std::vector<Field::Elem> c((a.coeffs().size() - 1) * pm + 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i * pm] = a.coeffs()[i];
  return Poly(a.field(), std::move(c));
}

}  // namespace

IndexSet::IndexSet(std::vector<std::size_t> orders, std::size_t size, std::uint64_t bound)
    : orders_(std::move(orders)) {
  if (orders_.size() != size || orders_.empty())
    fail(ErrorKind::InvalidArgument, "index set must have exactly M entries");
  if (orders_.front() != 0) fail(ErrorKind::InvalidArgument, "index set must start at 0");
  for (std::size_t k = 1; k < orders_.size(); ++k)
    if (orders_[k] <= orders_[k - 1]) fail(ErrorKind::InvalidArgument, "index set must be strictly increasing");
  if (orders_.back() >= bound) fail(ErrorKind::InvalidArgument, "index set entries must be below p^m");
}

WronskianMatrix wronskian_matrix(const RfVector& b, const IndexSet& index_set, JetCache* cache) {
  check_components(b);
  if (index_set.size() != b.size()) fail(ErrorKind::InvalidArgument, "index set size must equal M");
  const std::size_t top = index_set.orders().back();
  std::vector<TaylorJet> jets;
  for (const auto& x : b) jets.push_back(jet_of(x, top, cache));
  RfMatrix t;
  for (std::size_t order : index_set.orders()) {
    RfVector row;
    for (const auto& jet : jets) row.push_back(jet.coeffs[order]);
    t.push_back(std::move(row));
  }
  return {b, index_set, std::move(t)};
}

RfMatrix coordinate_matrix(const RfVector& b, unsigned m) {
  check_components(b);
  const Field& f = b.front().field();
  const std::uint64_t pm = subfield_exponent(f, m);
  RfMatrix out;
  for (const auto& x : b) {
    // x = N D^{pm-1} / D^{pm}, and D(t)^{pm} = D'(t^{pm}) with D' having the
    // coefficients of D raised to the pm-th power.
    const Poly& den = x.den();
    const Poly spread_num = x.num() * pow(den, pm - 1);
    std::vector<Field::Elem> frob_den;
    for (auto c : den.coeffs()) frob_den.push_back(f.pow(c, pm));
    const Poly relabeled_den(f, std::move(frob_den));

    std::vector<std::vector<Field::Elem>> parts(pm);
    for (std::size_t k = 0; k < spread_num.coeffs().size(); ++k) {
      auto& part = parts[k % pm];
      const std::size_t idx = k / pm;
      if (part.size() <= idx) part.resize(idx + 1, 0);
      part[idx] = spread_num.coeffs()[k];
    }
    RfVector row;
    for (auto& part : parts) row.emplace_back(Poly(f, std::move(part)), relabeled_den);
    out.push_back(std::move(row));
  }
  return out;
}

IndependenceCertificate independence_test(const RfVector& b, unsigned m, JetCache* cache) {
  check_components(b);
  const Field& f = b.front().field();
  const std::uint64_t pm = subfield_exponent(f, m);
  const std::size_t M = b.size();
  const RfMatrix coords = coordinate_matrix(b, m);

  IndependenceCertificate cert;
  cert.m = m;
  if (M > pm || rank(coords) < M) {
    cert.verdict = Verdict::Dependent;
    const auto kernel = nullspace(transpose(coords, pm), M);
    if (kernel.empty()) fail(ErrorKind::InternalInconsistency, "rank-deficient matrix with empty kernel");
    for (const auto& r : kernel.front()) cert.relation.emplace_back(spread(r.num(), pm), spread(r.den(), pm));
    return cert;
  }

  cert.verdict = Verdict::Independent;
  IncrementalRowSpace space(M);
  std::vector<std::size_t> kept;
  std::size_t jet_order = std::min<std::uint64_t>(pm - 1, 2 * M);
  std::vector<TaylorJet> jets;
  for (std::size_t i = 0; i < pm && kept.size() < M; ++i) {
    if (jets.empty() || i > jets.front().order()) {
      if (!jets.empty()) jet_order = std::min<std::uint64_t>(pm - 1, 2 * jet_order + 1);
      jets.clear();
      for (const auto& x : b) jets.push_back(jet_of(x, jet_order, cache));
    }
    RfVector row;
    for (const auto& jet : jets) row.push_back(jet.coeffs[i]);
    if (space.try_add(std::move(row))) kept.push_back(i);
  }
  if (kept.size() < M)
    fail(ErrorKind::InternalInconsistency, "independent vector without a nonsingular Wronskian");
  cert.witness = IndexSet(kept, M, pm);
  cert.witness_det = wronskian_det_adj(b, *cert.witness, cache).det;
  if (cert.witness_det->is_zero())
    fail(ErrorKind::InternalInconsistency, "greedy witness has a vanishing determinant");
  return cert;
}

bool verify_certificate(const IndependenceCertificate& cert, const RfVector& b) {
  if (cert.independent()) {
    if (!cert.witness) return false;
    const WronskianMatrix t = wronskian_matrix(b, *cert.witness);
    return !det_adjugate(t.entries).det.is_zero();
  }
  if (cert.relation.size() != b.size()) return false;
  bool nonzero = false;
  for (const auto& r : cert.relation) {
    if (!r.is_zero()) nonzero = true;
    if (!in_power_subfield(r, {cert.m})) return false;
  }
  return nonzero && dot(cert.relation, b).is_zero();
}

DetAdjugate wronskian_det_adj(const RfVector& b, const IndexSet& index_set, JetCache* cache) {
  return det_adjugate(wronskian_matrix(b, index_set, cache).entries);
}

std::optional<RfVector> solve_with_witness(const RfVector& b, const IndexSet& index_set, JetCache* cache) {
  const DetAdjugate da = wronskian_det_adj(b, index_set, cache);
  if (da.det.is_zero()) fail(ErrorKind::SingularWitness, "witness determinant evaluated to zero");
  // e = (D^{(i_l)}(1))_l = (1, 0, ..., 0) because i_1 = 0, so c = adj[., 0] / det.
  RfVector c;
  for (const auto& row : da.adjugate) {
    c.push_back(row[0] / da.det);
    if (c.back().is_zero()) return std::nullopt;
  }
  if (!dot(b, c).is_one()) return std::nullopt;
  return c;
}

std::optional<RfVector> candidate_solution(const RfVector& b, unsigned m, JetCache* cache) {
  const IndependenceCertificate cert = independence_test(b, m, cache);
  if (!cert.independent())
    fail(ErrorKind::InvalidArgument, "candidate_solution requires independent components");
  return solve_with_witness(b, *cert.witness, cache);
}

}  // namespace sunit
