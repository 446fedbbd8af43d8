#include "sunit/unit_group.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <variant>

#include "sunit/error.hpp"
#include "sunit/hasse.hpp"

namespace sunit {

namespace {

using BigMatrix = std::vector<std::vector<BigInt>>;

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void axpy_row(std::vector<BigInt>& dst, const BigInt& k, const std::vector<BigInt>& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= k * src[i];
}

std::int64_t to_i64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    fail(ErrorKind::Overflow, "generator word exponent exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

Field::Elem constant_of(const Field& f, const std::vector<Field::Elem>& constants, const std::vector<BigInt>& w) {
  const BigInt order = f.q() - 1;
  Field::Elem c = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    BigInt e = w[i] % order;
    if (e < 0) e += order;
    c = f.mul(c, f.pow(constants[i], static_cast<std::uint64_t>(e)));
  }
  return c;
}

// Breadth-first closure of the kernel-word constants inside F_q^*, with the
// combination of kernel words that reaches each element.
std::map<Field::Elem, std::vector<std::int64_t>> constant_closure(const SubgroupPresentation& g) {
  const Field& f = *g.field;
  const auto kernel = g.kernel_words();
  std::vector<Field::Elem> steps;
  for (const auto& w : kernel) steps.push_back(g.word_constant(w));
  std::map<Field::Elem, std::vector<std::int64_t>> reach;
  reach.emplace(1, std::vector<std::int64_t>(kernel.size(), 0));
  std::deque<Field::Elem> queue{1};
  while (!queue.empty()) {
    const Field::Elem cur = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const Field::Elem next = f.mul(cur, steps[i]);
      if (reach.count(next)) continue;
      auto combo = reach.at(cur);
      ++combo[i];
      reach.emplace(next, std::move(combo));
      queue.push_back(next);
    }
  }
  return reach;
}

}  // namespace

HermiteForm hermite_normal_form(const BigMatrix& a, std::size_t cols) {
  const std::size_t n = a.size();
  HermiteForm r;
  r.h = a;
  r.u.assign(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) r.u[i][i] = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < n; ++col) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = row; i < n; ++i)
        if (r.h[i][col] != 0 && (!best || abs(r.h[i][col]) < abs(r.h[*best][col]))) best = i;
      if (!best) break;
      std::swap(r.h[row], r.h[*best]);
      std::swap(r.u[row], r.u[*best]);
      bool cleared = true;
      for (std::size_t i = row + 1; i < n; ++i) {
        if (r.h[i][col] == 0) continue;
        const BigInt k = r.h[i][col] / r.h[row][col];
        axpy_row(r.h[i], k, r.h[row]);
        axpy_row(r.u[i], k, r.u[row]);
        if (r.h[i][col] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (r.h[row][col] == 0) continue;
    if (r.h[row][col] < 0) {
      for (auto& v : r.h[row]) v = -v;
      for (auto& v : r.u[row]) v = -v;
    }
    for (std::size_t i = 0; i < row; ++i) {
      const BigInt k = floor_div(r.h[i][col], r.h[row][col]);
      if (k == 0) continue;
      axpy_row(r.h[i], k, r.h[row]);
      axpy_row(r.u[i], k, r.u[row]);
    }
    r.pivot_cols.push_back(col);
    ++row;
  }
  return r;
}

std::vector<Word> SubgroupPresentation::kernel_words() const {
  std::vector<Word> out;
  for (std::size_t i = hnf.rank(); i < hnf.u.size(); ++i) {
    Word w;
    for (const auto& v : hnf.u[i]) w.push_back(to_i64(v));
    out.push_back(std::move(w));
  }
  return out;
}

RatFunc SubgroupPresentation::evaluate(const Word& w) const {
  RatFunc acc = RatFunc::constant(*field, 1);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0) acc *= generators[i].pow(w[i]);
  return acc;
}

Field::Elem SubgroupPresentation::word_constant(const Word& w) const {
  std::vector<BigInt> big(w.begin(), w.end());
  return constant_of(*field, constants, big);
}

std::vector<std::int64_t> SubgroupPresentation::word_exponents(const Word& w) const {
  std::vector<std::int64_t> out(support.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t c = 0; c < support.size(); ++c) out[c] += w[i] * exponent_matrix[i][c];
  return out;
}

SubgroupPresentation build_presentation(const std::vector<RatFunc>& gens) {
  if (gens.empty()) fail(ErrorKind::InvalidArgument, "a subgroup needs at least one generator");
  SubgroupPresentation g;
  g.field = &gens.front().field();
  g.generators = gens;
  std::vector<Divisor> divs;
  std::map<Place, std::size_t> columns;
  for (const auto& x : gens) {
    if (&x.field() != g.field) fail(ErrorKind::InvalidArgument, "generators live in different fields");
    if (x.is_zero()) fail(ErrorKind::ZeroInput, "zero generator");
    divs.push_back(divisor_vector(x));
    for (const auto& [place, e] : divs.back().exponents)
      if (!place.is_infinite()) columns.emplace(place, 0);
  }
  for (auto& [place, idx] : columns) {
    idx = g.support.size();
    g.support.push_back(place);
  }
  for (const auto& d : divs) {
    std::vector<std::int64_t> row(g.support.size(), 0);
    for (const auto& [place, e] : d.exponents)
      if (!place.is_infinite()) row[columns.at(place)] = e;
    g.exponent_matrix.push_back(std::move(row));
    g.constants.push_back(d.constant);
  }
  BigMatrix big;
  for (const auto& row : g.exponent_matrix) big.emplace_back(row.begin(), row.end());
  g.hnf = hermite_normal_form(big, g.support.size());
  return g;
}

std::vector<Field::Elem> constant_subgroup(const SubgroupPresentation& g) {
  std::vector<Field::Elem> out;
  for (const auto& [c, combo] : constant_closure(g)) out.push_back(c);
  return out;
}

namespace {

// Exponents of x on the support, or the first place outside it.
std::variant<std::vector<BigInt>, Place> support_exponents(const Divisor& d, const SubgroupPresentation& g) {
  std::vector<BigInt> v(g.support.size(), 0);
  for (const auto& [place, e] : d.exponents) {
    if (place.is_infinite()) continue;
    auto it = std::lower_bound(g.support.begin(), g.support.end(), place);
    if (it == g.support.end() || !(*it == place)) return place;
    v[static_cast<std::size_t>(it - g.support.begin())] = e;
  }
  return v;
}

}  // namespace

MembershipWitness member(const RatFunc& x, const SubgroupPresentation& g) {
  if (x.is_zero()) fail(ErrorKind::ZeroInput, "membership of zero");
  const Divisor d = divisor_vector(x);
  MembershipWitness out;
  auto ex = support_exponents(d, g);
  if (auto* p = std::get_if<Place>(&ex)) {
    out.obstruction = *p;
    return out;
  }
  auto residual = std::get<std::vector<BigInt>>(std::move(ex));

  const HermiteForm& h = g.hnf;
  std::vector<BigInt> y(g.size(), 0);
  for (std::size_t k = 0; k < h.rank(); ++k) {
    const std::size_t c = h.pivot_cols[k];
    for (std::size_t col = 0; col < c; ++col)
      if (residual[col] != 0) {
        out.obstruction = g.support[col];
        return out;
      }
    if (residual[c] % h.h[k][c] != 0) {
      out.obstruction = g.support[c];
      return out;
    }
    y[k] = residual[c] / h.h[k][c];
    axpy_row(residual, y[k], h.h[k]);
  }
  for (std::size_t col = 0; col < residual.size(); ++col)
    if (residual[col] != 0) {
      out.obstruction = g.support[col];
      return out;
    }

  std::vector<BigInt> w(g.size(), 0);
  for (std::size_t k = 0; k < h.rank(); ++k)
    for (std::size_t i = 0; i < g.size(); ++i) w[i] += y[k] * h.u[k][i];

  const Field& f = *g.field;
  const Field::Elem needed = f.div(d.constant, constant_of(f, g.constants, w));
  const auto reach = constant_closure(g);
  auto it = reach.find(needed);
  if (it == reach.end()) {
    out.constant_mismatch = true;
    return out;
  }
  for (std::size_t j = 0; j < it->second.size(); ++j)
    for (std::size_t i = 0; i < g.size(); ++i) w[i] += it->second[j] * h.u[h.rank() + j][i];
  out.member = true;
  for (const auto& v : w) out.word.push_back(to_i64(v));
  return out;
}

bool radical_member(const RatFunc& x, const SubgroupPresentation& g) {
  if (x.is_zero()) fail(ErrorKind::ZeroInput, "membership of zero");
  auto ex = support_exponents(divisor_vector(x), g);
  if (std::holds_alternative<Place>(ex)) return false;
  BigMatrix rows;
  for (const auto& row : g.exponent_matrix) rows.emplace_back(row.begin(), row.end());
  rows.push_back(std::get<std::vector<BigInt>>(std::move(ex)));
  return hermite_normal_form(rows, g.support.size()).rank() == g.lattice_rank();
}

std::optional<std::size_t> RepSet::find(const std::vector<std::uint64_t>& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::uint64_t> residue_key(const SubgroupPresentation& g, const Word& w, std::uint64_t modulus) {
  const auto e = g.word_exponents(w);
  const auto mod = static_cast<std::int64_t>(modulus);
  std::vector<std::uint64_t> key;
  for (auto v : e) key.push_back(static_cast<std::uint64_t>(((v % mod) + mod) % mod));
  return key;
}

RepSet representatives(const SubgroupPresentation& g, unsigned m, std::size_t limit) {
  if (m < 1) fail(ErrorKind::InvalidArgument, "representatives need m >= 1");
  const std::uint64_t pm = subfield_exponent(*g.field, m);
  const std::size_t n = g.size();
  const std::size_t cols = g.support.size();

  // level[k]: residue key -> lexicographically smallest word over generators
  // k..n-1 (entries in [0, p^m)) reaching it. Built from the last generator up.
  using Level = std::map<std::vector<std::uint64_t>, Word>;
  Level level;
  level.emplace(std::vector<std::uint64_t>(cols, 0), Word{});
  for (std::size_t k = n; k-- > 0;) {
    std::vector<std::uint64_t> step(cols);
    for (std::size_t c = 0; c < cols; ++c) {
      const auto mod = static_cast<std::int64_t>(pm);
      step[c] = static_cast<std::uint64_t>(((g.exponent_matrix[k][c] % mod) + mod) % mod);
    }
    Level next;
    std::vector<std::uint64_t> shift(cols, 0);
    for (std::uint64_t wk = 0; wk < pm; ++wk) {
      if (wk > 0 && level.count(shift)) break;
      for (const auto& [key, tail] : level) {
        std::vector<std::uint64_t> nk(cols);
        for (std::size_t c = 0; c < cols; ++c) nk[c] = (key[c] + shift[c]) % pm;
        if (next.count(nk)) continue;
        Word w{static_cast<std::int64_t>(wk)};
        w.insert(w.end(), tail.begin(), tail.end());
        next.emplace(std::move(nk), std::move(w));
        if (next.size() > limit) fail(ErrorKind::ResourceLimit, "representative set exceeds the configured bound");
      }
      for (std::size_t c = 0; c < cols; ++c) shift[c] = (shift[c] + step[c]) % pm;
    }
    level = std::move(next);
  }

  std::vector<std::pair<Word, std::vector<std::uint64_t>>> sorted;
  for (auto& [key, w] : level) sorted.emplace_back(std::move(w), key);
  std::sort(sorted.begin(), sorted.end());
  RepSet r;
  r.m = m;
  r.modulus = pm;
  for (auto& [w, key] : sorted) {
    r.index_.emplace(key, r.elements.size());
    r.elements.push_back(g.evaluate(w));
    r.words.push_back(std::move(w));
    r.keys.push_back(std::move(key));
  }
  return r;
}

bool kernel_element_check(const RatFunc& x, const SubgroupPresentation& g, unsigned m) {
  if (!member(x, g).member) fail(ErrorKind::NotAMember, "kernel check on a non-member " + x.to_string());
  const auto pm = static_cast<std::int64_t>(subfield_exponent(*g.field, m));
  for (const auto& [place, e] : divisor_vector(x).exponents)
    if (!place.is_infinite() && e % pm != 0) return false;
  return true;
}

}  // namespace sunit
