#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sunit/bigint.hpp"
#include "sunit/ratfunc.hpp"

namespace sunit {

/// Integer exponent vector over the generators of a subgroup.
using Word = std::vector<std::int64_t>;

/// Row-style Hermite normal form U * A = H with U unimodular. Rows
/// [0, rank) of H are nonzero with positive pivots; rows [rank, n) of U span
/// the left kernel of A.
struct HermiteForm {
  std::vector<std::vector<BigInt>> h;
  std::vector<std::vector<BigInt>> u;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const noexcept { return pivot_cols.size(); }
};

HermiteForm hermite_normal_form(const std::vector<std::vector<BigInt>>& a, std::size_t cols);

/// A finitely generated subgroup of O_S^* given by generators.
struct SubgroupPresentation {
  const Field* field = nullptr;
  std::vector<RatFunc> generators;
  /// Finite places where some generator is a non-unit, in Place order.
  std::vector<Place> support;
  /// One row per generator, one column per support place.
  std::vector<std::vector<std::int64_t>> exponent_matrix;
  std::vector<Field::Elem> constants;
  HermiteForm hnf;

  std::size_t size() const noexcept { return generators.size(); }
  std::size_t lattice_rank() const noexcept { return hnf.rank(); }
  /// Integer-kernel words: products of generators that are constants.
  std::vector<Word> kernel_words() const;
  /// prod g_i^{w_i}.
  RatFunc evaluate(const Word& w) const;
  /// The constant of prod g_i^{w_i}.
  Field::Elem word_constant(const Word& w) const;
  /// Exponents of prod g_i^{w_i} on the support.
  std::vector<std::int64_t> word_exponents(const Word& w) const;
};

/// Throws ZeroInput for a zero generator.
SubgroupPresentation build_presentation(const std::vector<RatFunc>& gens);

/// The subgroup of F_q^* formed by the constants of kernel words, sorted.
std::vector<Field::Elem> constant_subgroup(const SubgroupPresentation& g);

struct MembershipWitness {
  bool member = false;
  /// Member case: generator word reproducing the element exactly.
  Word word;
  /// Non-member case: a place whose exponent cannot be reached...
  std::optional<Place> obstruction;
  /// ...or, when the exponents are reachable, a constant outside the coset.
  bool constant_mismatch = false;
};

MembershipWitness member(const RatFunc& x, const SubgroupPresentation& g);

/// True iff some positive power of x lies in the subgroup.
bool radical_member(const RatFunc& x, const SubgroupPresentation& g);

/// Representatives of G / (G ∩ (kK^{p^m})^*). Element 0 is the identity.
struct RepSet {
  unsigned m = 0;
  std::uint64_t modulus = 0;  // p^m
  std::vector<RatFunc> elements;
  std::vector<Word> words;
  std::vector<std::vector<std::uint64_t>> keys;

  std::size_t size() const noexcept { return elements.size(); }
  /// Index of the representative with the given residue key, if any.
  std::optional<std::size_t> find(const std::vector<std::uint64_t>& key) const;

 private:
  friend RepSet representatives(const SubgroupPresentation&, unsigned, std::size_t);
  std::map<std::vector<std::uint64_t>, std::size_t> index_;
};

inline constexpr std::size_t kDefaultRepSetLimit = 100000;

/// Exponents of a word on the support, reduced mod p^m.
std::vector<std::uint64_t> residue_key(const SubgroupPresentation& g, const Word& w, std::uint64_t modulus);

/// One representative per residue class, each the lexicographically smallest
/// nonnegative word in its class. Throws ResourceLimit past `limit` classes.
RepSet representatives(const SubgroupPresentation& g, unsigned m, std::size_t limit = kDefaultRepSetLimit);

/// For a member x: every exponent divisible by p^m. Throws NotAMember.
bool kernel_element_check(const RatFunc& x, const SubgroupPresentation& g, unsigned m);

}  // namespace sunit
