#include "sunit/linalg.hpp"

#include <utility>

#include "sunit/error.hpp"

namespace sunit {

namespace {

const Field& field_of(const RfMatrix& a) {
  for (const auto& row : a)
    if (!row.empty()) return row.front().field();
  fail(ErrorKind::InvalidArgument, "empty matrix has no field");
}

// In-place reduced row echelon form; returns the pivot column of each
// nonzero row.
std::vector<std::size_t> rref(RfMatrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col].is_zero()) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    const RatFunc inv = a[row][col].inverse();
    for (std::size_t j = col; j < cols; ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      const RatFunc factor = a[i][col];
      for (std::size_t j = col; j < cols; ++j)
        if (!a[row][j].is_zero()) a[i][j] -= factor * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RfMatrix a) {
  if (a.empty()) return 0;
  return rref(a, a.front().size()).size();
}

RfMatrix transpose(const RfMatrix& a, std::size_t cols) {
  if (a.empty()) return {};
  RfMatrix t(cols, RfVector(a.size(), RatFunc(field_of(a))));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
  return t;
}

std::vector<RfVector> nullspace(const RfMatrix& a, std::size_t cols) {
  if (a.empty()) fail(ErrorKind::InvalidArgument, "nullspace of an empty matrix");
  const Field& f = field_of(a);
  RfMatrix r = a;
  const auto pivots = rref(r, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RfVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RfVector v(cols, RatFunc(f));
    v[free] = RatFunc::constant(f, 1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r[k][free];
    for (const auto& x : v)
      if (!x.is_zero()) {
        const RatFunc inv = x.inverse();
        for (auto& y : v) y *= inv;
        break;
      }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool IncrementalRowSpace::try_add(RfVector row) {
  if (row.size() != cols_) fail(ErrorKind::InvalidArgument, "row length mismatch");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t c = pivots_[k];
    if (row[c].is_zero()) continue;
    const RatFunc factor = row[c];
    for (std::size_t j = 0; j < cols_; ++j)
      if (!basis_[k][j].is_zero()) row[j] -= factor * basis_[k][j];
  }
  std::size_t c = 0;
  while (c < cols_ && row[c].is_zero()) ++c;
  if (c == cols_) return false;
  const RatFunc inv = row[c].inverse();
  for (auto& x : row) x *= inv;
  // Keep the basis reduced so later candidates reduce in one pass.
  for (auto& b : basis_) {
    if (b[c].is_zero()) continue;
    const RatFunc factor = b[c];
    for (std::size_t j = 0; j < cols_; ++j)
      if (!row[j].is_zero()) b[j] -= factor * row[j];
  }
  basis_.push_back(std::move(row));
  pivots_.push_back(c);
  return true;
}

Poly bareiss_det(PolyMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) fail(ErrorKind::InvalidArgument, "determinant of an empty matrix");
  const Field& f = a[0][0].field();
  bool negate = false;
  Poly prev = Poly::constant(f, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t sel = k;
    while (sel < n && a[sel][k].is_zero()) ++sel;
    if (sel == n) return Poly(f);
    if (sel != k) {
      std::swap(a[sel], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      a[i][k] = Poly(f);
    }
    prev = a[k][k];
  }
  Poly det = a[n - 1][n - 1];
  return negate ? -det : det;
}

DetAdjugate det_adjugate(const RfMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) fail(ErrorKind::InvalidArgument, "adjugate of an empty matrix");
  const Field& f = field_of(a);

  // a = b * diag(scale) with b polynomial and each column of b primitive.
  PolyMatrix b(n, std::vector<Poly>(n, Poly(f)));
  RfVector scale(n, RatFunc::constant(f, 1));
  for (std::size_t j = 0; j < n; ++j) {
    Poly lcm = Poly::constant(f, 1);
    for (std::size_t i = 0; i < n; ++i) {
      const Poly& d = a[i][j].den();
      lcm = exact_div(lcm * d, gcd(lcm, d));
    }
    Poly content(f);
    for (std::size_t i = 0; i < n; ++i) {
      b[i][j] = a[i][j].num() * exact_div(lcm, a[i][j].den());
      if (!b[i][j].is_zero()) content = content.is_zero() ? b[i][j].monic() : gcd(content, b[i][j]);
    }
    if (content.is_zero()) content = Poly::constant(f, 1);
    for (std::size_t i = 0; i < n; ++i) b[i][j] = exact_div(b[i][j], content);
    scale[j] = RatFunc(content, lcm);
  }

  RatFunc scale_product = RatFunc::constant(f, 1);
  for (const auto& s : scale) scale_product *= s;

  DetAdjugate out{RatFunc(bareiss_det(b)) * scale_product, RfMatrix(n, RfVector(n, RatFunc(f)))};
  if (n == 1) {
    out.adjugate[0][0] = RatFunc::constant(f, 1);
    return out;
  }
  for (std::size_t row = 0; row < n; ++row) {
    // adj(b diag(s)) = diag(prod_{k != row} s_k) adj(b).
    const RatFunc row_scale = scale_product / scale[row];
    for (std::size_t col = 0; col < n; ++col) {
      // adj(b)[row][col] = (-1)^{row+col} det(b without row `col`, column `row`).
      PolyMatrix minor;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col) continue;
        std::vector<Poly> r;
        for (std::size_t j = 0; j < n; ++j)
          if (j != row) r.push_back(b[i][j]);
        minor.push_back(std::move(r));
      }
      Poly cof = bareiss_det(std::move(minor));
      if ((row + col) % 2 == 1) cof = -cof;
      out.adjugate[row][col] = RatFunc(cof) * row_scale;
    }
  }
  return out;
}

RfVector mat_vec(const RfMatrix& a, const RfVector& x) {
  RfVector out;
  for (const auto& row : a) out.push_back(dot(row, x));
  return out;
}

RatFunc dot(const RfVector& a, const RfVector& b) {
  if (a.size() != b.size() || a.empty()) fail(ErrorKind::InvalidArgument, "dot product length mismatch");
  RatFunc acc(a.front().field());
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace sunit
