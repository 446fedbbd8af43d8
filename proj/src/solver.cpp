#include "sunit/solver.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "sunit/error.hpp"
#include "sunit/hasse.hpp"

namespace sunit {

Equation normalize_rhs(const RfVector& b, const RatFunc& c) {
  if (c.is_zero()) return {b, 0};
  Equation eq{{}, 1};
  for (const auto& x : b) eq.b.push_back(x / c);
  return eq;
}

RfVector psi(std::size_t j, const RfVector& a) {
  if (j < 1 || j > a.size()) fail(ErrorKind::IndexOutOfRange, "psi index out of range");
  RfVector out = a;
  out[j - 1] = RatFunc::constant(a[j - 1].field(), 1);
  return out;
}

RfVector phi(std::size_t i, const RfVector& a) {
  if (i < 1 || i > a.size()) fail(ErrorKind::IndexOutOfRange, "phi index out of range");
  const RatFunc& ai = a[i - 1];
  if (ai.is_zero()) fail(ErrorKind::ZeroComponent, "phi divides by a zero component");
  RfVector out;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (k != i - 1) out.push_back(-a[k] / ai);
  return out;
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::CertifiedEmpty: return "certified-empty";
    case Outcome::CertifiedSolutions: return "certified-solutions";
    case Outcome::Inapplicable: return "inapplicable";
  }
  return "?";
}

namespace {

struct Context {
  const Equation& eq;
  const SubgroupPresentation& g;
  unsigned m;
  std::uint64_t pm;
  const RepSet& reps;
  JetCache cache;
};

struct Evaluated {
  TupleRecord rec;
  bool hypothesis_ok = false;
};

std::vector<std::size_t> tuple_at(std::size_t index, std::size_t base, std::size_t arity) {
  std::vector<std::size_t> r(arity);
  for (std::size_t j = arity; j-- > 0;) {
    r[j] = index % base;
    index /= base;
  }
  return r;
}

RfVector times(const RfVector& a, const RfVector& b) {
  RfVector out;
  for (std::size_t j = 0; j < a.size(); ++j) out.push_back(a[j] * b[j]);
  return out;
}

RfVector elements_of(const Context& ctx, const std::vector<std::size_t>& r) {
  RfVector out;
  for (auto i : r) out.push_back(ctx.reps.elements[i]);
  return out;
}

// rhs 0: br independent. rhs 1: some psi_j(br) independent.
bool hypothesis_holds(Context& ctx, const RfVector& br) {
  if (ctx.eq.rhs == 0) return independence_test(br, ctx.m, &ctx.cache).independent();
  for (std::size_t j = 1; j <= br.size(); ++j)
    if (independence_test(psi(j, br), ctx.m, &ctx.cache).independent()) return true;
  return false;
}

Evaluated evaluate_tuple(Context& ctx, std::size_t index) {
  Evaluated out;
  TupleRecord& rec = out.rec;
  rec.r = tuple_at(index, ctx.reps.size(), ctx.eq.b.size());
  const RfVector r = elements_of(ctx, rec.r);
  rec.r_elements = r;
  const RfVector br = times(ctx.eq.b, r);
  rec.br = independence_test(br, ctx.m, &ctx.cache);
  if (ctx.eq.rhs == 0) {
    out.hypothesis_ok = rec.br.independent();
    return out;
  }
  bool all = true;
  for (std::size_t j = 1; j <= br.size(); ++j) {
    rec.psi.push_back(independence_test(psi(j, br), ctx.m, &ctx.cache));
    if (rec.psi.back().independent())
      out.hypothesis_ok = true;
    else
      all = false;
  }
  rec.in_u = all && rec.br.independent();
  if (!rec.in_u) return out;
  const auto c = candidate_solution(br, ctx.m, &ctx.cache);
  if (!c) return out;
  rec.candidate = times(r, *c);
  bool members = true;
  for (const auto& x : *rec.candidate) {
    rec.membership.push_back(member(x, ctx.g).member);
    members = members && rec.membership.back();
  }
  rec.kept = members && dot(ctx.eq.b, *rec.candidate).is_one();
  return out;
}

// Re-run a failing tuple with each component shifted by a p^m-th power of a
// generator. Such shifts cannot change dependence, so a passing retry means
// an implementation fault.
int shifted_retries(Context& ctx, const RfVector& r) {
  constexpr int kRetries = 8;
  const std::size_t n = ctx.g.size();
  for (int a = 0; a < kRetries; ++a) {
    RfVector shifted = r;
    for (std::size_t j = 0; j < r.size(); ++j) {
      const RatFunc& gen = ctx.g.generators[(a + j) % n];
      shifted[j] *= gen.pow(static_cast<std::int64_t>(ctx.pm) * (1 + a / static_cast<int>(n)));
    }
    if (hypothesis_holds(ctx, times(ctx.eq.b, shifted)))
      fail(ErrorKind::InternalInconsistency, "hypothesis verdict changed under a p^m-th power shift");
  }
  return kRetries;
}

void validate(const Equation& eq, const SubgroupPresentation& g, unsigned m) {
  if (eq.b.empty()) fail(ErrorKind::InvalidArgument, "equation needs at least one coefficient");
  if (eq.rhs != 0 && eq.rhs != 1) fail(ErrorKind::InvalidArgument, "rhs must be 0 or 1");
  if (m < 1) fail(ErrorKind::InvalidArgument, "m must be at least 1");
  for (const auto& x : eq.b) {
    if (&x.field() != g.field) fail(ErrorKind::InvalidArgument, "coefficient and subgroup fields differ");
    if (x.is_zero()) fail(ErrorKind::ZeroComponent, "zero coefficient in b");
  }
}

CertifiedReport run(const Equation& eq, const SubgroupPresentation& g, unsigned m, const SolverOptions& opts) {
  validate(eq, g, m);
  const RepSet reps = representatives(g, m, opts.repset_limit);
  const std::size_t arity = eq.b.size();
  std::size_t total = 1;
  for (std::size_t j = 0; j < arity; ++j) {
    if (total > opts.tuple_limit / reps.size()) fail(ErrorKind::ResourceLimit, "representative tuples exceed the bound");
    total *= reps.size();
  }
  Context ctx{eq, g, m, subfield_exponent(*g.field, m), reps, {}};

  std::vector<std::optional<Evaluated>> results(total);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_fail{total};
  std::mutex error_mutex;
  std::size_t error_index = total;
  std::exception_ptr error;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= total || (!opts.verbose && i > first_fail.load())) return;
      try {
        results[i] = evaluate_tuple(ctx, i);
        if (!results[i]->hypothesis_ok) {
          std::size_t cur = first_fail.load();
          while (i < cur && !first_fail.compare_exchange_weak(cur, i)) {
          }
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
        return;
      }
    }
  };
  const unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  CertifiedReport report;
  report.m = m;
  report.rhs = eq.rhs;
  report.repset_size = reps.size();
  for (std::size_t i = 0; i < total; ++i) {
    if (i == error_index) std::rethrow_exception(error);
    if (!results[i]) break;
    Evaluated& ev = *results[i];
    if (!ev.hypothesis_ok && !report.failure) {
      HypothesisFailure f;
      f.m = m;
      f.r = ev.rec.r;
      f.r_elements = elements_of(ctx, f.r);
      f.hypothesis = eq.rhs == 0 ? "components of b*r are dependent"
                                 : "every psi_j(b*r) has dependent components";
      if (eq.rhs == 0) f.relation = ev.rec.br.relation;
      f.retries = shifted_retries(ctx, f.r_elements);
      report.failure = std::move(f);
    }
    report.records.push_back(std::move(ev.rec));
    if (report.failure && !opts.verbose) break;
  }
  if (error) std::rethrow_exception(error);

  if (report.failure) {
    report.outcome = Outcome::Inapplicable;
    return report;
  }
  if (eq.rhs == 0) {
    report.outcome = Outcome::CertifiedEmpty;
    return report;
  }
  report.outcome = Outcome::CertifiedSolutions;
  std::size_t u = 0;
  std::set<RfVector> points;
  for (const auto& rec : report.records) {
    u += rec.in_u;
    if (rec.kept) points.insert(*rec.candidate);
  }
  report.bound = u;
  for (const auto& x : points) {
    Solution s{x, {}};
    for (const auto& xi : x) s.words.push_back(member(xi, g).word);
    report.solutions.push_back(std::move(s));
  }
  return report;
}

}  // namespace

CertifiedReport decide_homogeneous(const Equation& eq, const SubgroupPresentation& g, unsigned m,
                                   const SolverOptions& opts) {
  if (eq.rhs != 0) fail(ErrorKind::InvalidArgument, "decide_homogeneous needs rhs 0");
  return run(eq, g, m, opts);
}

CertifiedReport decide_inhomogeneous(const Equation& eq, const SubgroupPresentation& g, unsigned m,
                                     const SolverOptions& opts) {
  if (eq.rhs != 1) fail(ErrorKind::InvalidArgument, "decide_inhomogeneous needs rhs 1");
  return run(eq, g, m, opts);
}

CertifiedReport decide(const Equation& eq, const SubgroupPresentation& g, unsigned m, const SolverOptions& opts) {
  return run(eq, g, m, opts);
}

CertifiedReport auto_m(const Equation& eq, const SubgroupPresentation& g, unsigned m_max, const SolverOptions& opts) {
  if (m_max < 1) fail(ErrorKind::InvalidArgument, "m_max must be at least 1");
  std::vector<HypothesisFailure> failures;
  CertifiedReport last;
  for (unsigned m = 1; m <= m_max; ++m) {
    last = run(eq, g, m, opts);
    if (last.outcome != Outcome::Inapplicable) return last;
    failures.push_back(*last.failure);
  }
  last.failures = std::move(failures);
  return last;
}

ShortcutVerdict m2_shortcut(const RfVector& b, const SubgroupPresentation& g) {
  if (b.size() != 2) fail(ErrorKind::WrongArity, "m2_shortcut needs exactly two coefficients");
  ShortcutVerdict v;
  v.ratio_in_radical = radical_member(b[0] / b[1], g);
  v.both_in_radical = radical_member(b[0], g) && radical_member(b[1], g);
  return v;
}

}  // namespace sunit
