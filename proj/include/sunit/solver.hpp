#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sunit/unit_group.hpp"
#include "sunit/wronskian.hpp"

namespace sunit {

/// b . X = rhs with rhs in {0, 1}.
struct Equation {
  RfVector b;
  int rhs = 0;
};

/// b . X = c for a nonzero constant-or-function c, rewritten as (b / c) . X = 1.
Equation normalize_rhs(const RfVector& b, const RatFunc& c);

/// Replace the j-th component (1-based) by 1.
RfVector psi(std::size_t j, const RfVector& a);
/// Drop the i-th component (1-based) and send each remaining a_k to -a_k / a_i.
RfVector phi(std::size_t i, const RfVector& a);

enum class Outcome { CertifiedEmpty, CertifiedSolutions, Inapplicable };
std::string to_string(Outcome o);

/// Work done for one representative tuple r.
struct TupleRecord {
  std::vector<std::size_t> r;  // indices into the RepSet
  RfVector r_elements;
  IndependenceCertificate br;
  std::vector<IndependenceCertificate> psi;  // rhs = 1 only
  bool in_u = false;
  std::optional<RfVector> candidate;  // the point r . c
  std::vector<bool> membership;
  bool kept = false;
};

struct HypothesisFailure {
  unsigned m = 0;
  std::vector<std::size_t> r;
  RfVector r_elements;
  std::string hypothesis;
  /// rhs = 0: the dependence relation among the components of br.
  RfVector relation;
  /// Shifted retries evaluated; every one of them failed too.
  int retries = 0;
};

struct Solution {
  RfVector x;
  std::vector<Word> words;
};

struct CertifiedReport {
  Outcome outcome = Outcome::Inapplicable;
  unsigned m = 0;
  int rhs = 0;
  std::size_t repset_size = 0;
  std::vector<TupleRecord> records;
  std::vector<Solution> solutions;
  std::optional<std::size_t> bound;  // |U|, rhs = 1 with a certificate
  std::optional<HypothesisFailure> failure;
  /// auto_m: failures at every m that was tried.
  std::vector<HypothesisFailure> failures;
};

struct SolverOptions {
  std::size_t tuple_limit = 1000000;
  std::size_t repset_limit = kDefaultRepSetLimit;
  unsigned jobs = 1;
  /// Evaluate every tuple even after a hypothesis failure.
  bool verbose = false;
};

CertifiedReport decide_homogeneous(const Equation& eq, const SubgroupPresentation& g, unsigned m,
                                   const SolverOptions& opts = {});
CertifiedReport decide_inhomogeneous(const Equation& eq, const SubgroupPresentation& g, unsigned m,
                                     const SolverOptions& opts = {});
/// decide_* for the equation's rhs.
CertifiedReport decide(const Equation& eq, const SubgroupPresentation& g, unsigned m, const SolverOptions& opts = {});
/// First m in 1..m_max with a certificate, else the last inapplicable report
/// carrying every failure.
CertifiedReport auto_m(const Equation& eq, const SubgroupPresentation& g, unsigned m_max,
                       const SolverOptions& opts = {});

/// Radical-membership conditions for M = 2 that imply the independence
/// hypotheses checked by decide_*. Advisory only.
struct ShortcutVerdict {
  bool ratio_in_radical = false;  // b_1 / b_2 in sqrt(G)
  bool both_in_radical = false;   // b_1, b_2 in sqrt(G)
  bool homogeneous_implied() const noexcept { return !ratio_in_radical; }
  bool inhomogeneous_implied() const noexcept { return !both_in_radical; }
};
ShortcutVerdict m2_shortcut(const RfVector& b, const SubgroupPresentation& g);

}  // namespace sunit
