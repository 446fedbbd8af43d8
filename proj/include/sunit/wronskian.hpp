#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sunit/hasse.hpp"
#include "sunit/linalg.hpp"

namespace sunit {

/// Row orders 0 = i_1 < i_2 < ... < i_M < p^m of a generalized Wronskian.
class IndexSet {
 public:
  /// Throws InvalidArgument unless the orders are strictly increasing, start
  /// at 0, number `size`, and stay below `bound` (= p^m).
  IndexSet(std::vector<std::size_t> orders, std::size_t size, std::uint64_t bound);

  const std::vector<std::size_t>& orders() const noexcept { return orders_; }
  std::size_t size() const noexcept { return orders_.size(); }
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> orders_;
};

/// T_{b,I}: entry (l, j) = D^{(i_l)}(b_j).
struct WronskianMatrix {
  RfVector b;
  IndexSet index_set;
  RfMatrix entries;
};

WronskianMatrix wronskian_matrix(const RfVector& b, const IndexSet& index_set, JetCache* cache = nullptr);

enum class Verdict { Independent, Dependent };

/// Two-sided certificate for linear (in)dependence of b over F_q(t^{p^m}).
struct IndependenceCertificate {
  Verdict verdict = Verdict::Dependent;
  unsigned m = 0;
  /// Independent: an index set with det T_{b,I} != 0, and that determinant.
  std::optional<IndexSet> witness;
  std::optional<RatFunc> witness_det;
  /// Dependent: nonzero r over F_q(t^{p^m}) with sum r_j b_j = 0.
  RfVector relation;

  bool independent() const noexcept { return verdict == Verdict::Independent; }
};

/// Row j: coordinates of b_j in the basis 1, t, ..., t^{p^m - 1} over
/// F_q(t^{p^m}), relabeled into K by t^{p^m} -> t.
RfMatrix coordinate_matrix(const RfVector& b, unsigned m);

/// Decides independence by the rank of the coordinate matrix, then certifies:
/// a witness index set from a greedy rank search over Hasse-derivative rows,
/// or a kernel relation pulled back through t -> t^{p^m}.
IndependenceCertificate independence_test(const RfVector& b, unsigned m, JetCache* cache = nullptr);

/// Re-checks a certificate from scratch: determinant evaluation for a
/// witness, substitution plus subfield membership for a relation.
bool verify_certificate(const IndependenceCertificate& cert, const RfVector& b);

DetAdjugate wronskian_det_adj(const RfVector& b, const IndexSet& index_set, JetCache* cache = nullptr);

/// The unique c with T_{b,I} c = (1, 0, ..., 0) for a witness I, returned
/// only when every c_j is nonzero (and then b . c = 1). Throws
/// InvalidArgument when b is dependent, SingularWitness if det T vanishes.
std::optional<RfVector> candidate_solution(const RfVector& b, unsigned m, JetCache* cache = nullptr);

/// Same solve for a caller-chosen index set.
std::optional<RfVector> solve_with_witness(const RfVector& b, const IndexSet& index_set, JetCache* cache = nullptr);

}  // namespace sunit
