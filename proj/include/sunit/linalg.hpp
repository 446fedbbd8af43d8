#pragma once

#include <cstddef>
#include <vector>

#include "sunit/ratfunc.hpp"

namespace sunit {

using RfVector = std::vector<RatFunc>;
using RfMatrix = std::vector<RfVector>;
using PolyMatrix = std::vector<std::vector<Poly>>;

/// Rank over K by Gaussian elimination.
std::size_t rank(RfMatrix a);

/// Basis of {x : A x = 0}, each vector scaled so its first nonzero entry is 1.
std::vector<RfVector> nullspace(const RfMatrix& a, std::size_t cols);

RfMatrix transpose(const RfMatrix& a, std::size_t cols);

/// Row space grown one candidate row at a time; keeps an echelon basis.
class IncrementalRowSpace {
 public:
  explicit IncrementalRowSpace(std::size_t cols) : cols_(cols) {}
  /// Adds `row` if it is not in the span; returns whether the rank grew.
  bool try_add(RfVector row);
  std::size_t rank() const noexcept { return basis_.size(); }

 private:
  std::size_t cols_;
  std::vector<RfVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Determinant of a square polynomial matrix by fraction-free (Bareiss)
/// elimination with row pivoting; every division is exact.
Poly bareiss_det(PolyMatrix a);

struct DetAdjugate {
  RatFunc det;
  RfMatrix adjugate;
};

/// Exact determinant and adjugate of a square matrix over K. Columns are
/// cleared of denominators and stripped of their polynomial content, then
/// the cofactors are computed by Bareiss elimination on polynomial minors.
DetAdjugate det_adjugate(const RfMatrix& a);

RfVector mat_vec(const RfMatrix& a, const RfVector& x);
RatFunc dot(const RfVector& a, const RfVector& b);

}  // namespace sunit
