#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sunit/solver.hpp"

namespace sunit {

/// The image of a subgroup in (F_q[t]/(f^e))^*, listed element by element.
struct ResidueGroup {
  Modulus modulus;
  std::vector<Poly> elements;  // breadth-first order from 1
  std::vector<Word> words;

  std::size_t size() const noexcept { return elements.size(); }
  std::optional<std::size_t> find(const Poly& residue) const;

  std::map<Poly, std::size_t> index;
};

/// Throws NotAUnitAtPlace when a generator vanishes or has a pole at f.
ResidueGroup residue_group(const SubgroupPresentation& g, const Modulus& m);

struct CongruenceWitness {
  std::vector<Poly> residues;
  std::vector<Word> words;
};

/// A tuple x from the residue group with b . x congruent to rhs mod f^e.
/// Every b_j must be a unit at f.
std::optional<CongruenceWitness> sl_search(const Equation& eq, const ResidueGroup& group);
std::optional<CongruenceWitness> sl_search(const Equation& eq, const SubgroupPresentation& g, const Modulus& m);

/// Exact residue-ring recheck of a congruence witness.
bool check_congruence(const Equation& eq, const Modulus& m, const CongruenceWitness& w);

/// Finite places of the generators and of the coefficients; together with
/// infinity they form S.
std::vector<Place> s_support(const Equation& eq, const SubgroupPresentation& g);

/// Moduli f^e with f outside S, deg f <= deg_bound, e <= e_bound, ordered by
/// (deg f * e, f, e).
std::vector<Modulus> candidate_moduli(const Equation& eq, const SubgroupPresentation& g, int deg_bound,
                                      unsigned e_bound);

struct ObstructionWitness {
  Modulus modulus;
  std::size_t group_size = 0;
};

struct ObstructionSearch {
  std::optional<ObstructionWitness> witness;
  std::size_t moduli_tested = 0;
};

/// First candidate modulus where sl_search finds nothing.
ObstructionSearch find_local_obstruction(const Equation& eq, const SubgroupPresentation& g, int deg_bound,
                                         unsigned e_bound);

inline constexpr double kDefaultSearchLimit = 1e9;

/// Every exact solution with all coordinate words in [-bound, bound]^n,
/// sorted by point.
std::vector<Solution> sg_search(const Equation& eq, const SubgroupPresentation& g, std::int64_t bound,
                                double limit = kDefaultSearchLimit);

struct ClosureProbe {
  Modulus modulus;
  BigInt group_order;
  std::vector<BigInt> exponents;  // p^{n!} mod group_order, n = 1..n_max
  std::vector<Poly> values;       // g^{p^{n!}} mod f^e
  std::size_t stabilization_index = 0;  // 1-based n_0
  Poly stable_value() const { return values.back(); }
};

ClosureProbe closure_probe(const RatFunc& g, const Modulus& m, std::size_t n_max);

}  // namespace sunit
