#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pauliset/pauli.hpp"

namespace pauliset {

/// Incremental GF(2) row basis over the packed (x, z) coordinates. Rows are
/// kept with distinct pivots (lowest set bit), which makes rank queries and
/// span membership cheap.
class Gf2Basis {
 public:
  explicit Gf2Basis(std::size_t n) : n_(n) {}

  /// Reduces p against the basis and inserts the remainder if nonzero.
  /// Returns whether the rank grew.
  bool add(const Pauli& p);

  /// True when p lies in the span of the inserted elements.
  bool spans(const Pauli& p) const;

  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<std::uint64_t> to_row(const Pauli& p) const;

  std::size_t n_;
  std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> rows_;
};

/// GF(2) rank of the set viewed as symplectic vectors.
std::size_t rank(const PauliSet& g);

/// True when g generates a subgroup of order 2^|g| without redundancy:
/// either g == {identity} or g is identity-free with rank(g) == |g|.
bool is_minimal_generating(const PauliSet& g);

/// All 2^rank(g) products of subsets of g, in subset-counter order over the
/// independent generators. Guarded: rank above max_rank is refused.
PauliSet generated_set(const PauliSet& g, std::size_t max_rank = 24);

/// Greedy minimal generating set for the subgroup generated by s: the first
/// independent elements in canonical order. Returns {identity} when s
/// generates the trivial subgroup.
PauliSet minimal_generating_set(const PauliSet& s);

/// A subgroup presented by a minimal generating set; the subgroup order is
/// 2^rank.
struct GeneratedSubgroup {
  PauliSet generators;
  std::size_t rank = 0;
};

GeneratedSubgroup generated_subgroup(const PauliSet& s);

/// The commutativity signs of one element against an ordered base set:
/// signs[k] = commute(p, base[k]).
struct CommutativityMap {
  PauliSet base;
  std::vector<int> signs;

  /// Number of +1 entries.
  std::size_t f() const;

  /// Signs packed as a bit mask in base order: bit k is set iff the element
  /// anticommutes with base[k]. Requires |base| <= 64.
  std::uint64_t mask() const;
};

CommutativityMap commutativity_map(const Pauli& p, const PauliSet& base);

/// The map of v's element after multiplying it by the product of t, a subset
/// of v's base: entries inside t gain the factor (-1)^(|t|-1), entries
/// outside gain (-1)^|t|.
CommutativityMap subset_flip(const CommutativityMap& v, const PauliSet& t);

/// Histogram of sign patterns over the whole n-factor group against a
/// minimal generating set g (g != {identity}): pattern mask -> count. The
/// result always has exactly 2^|g| keys with count 4^n / 2^|g| each.
/// Enumerates all 4^n elements, so n is budget-guarded.
std::map<std::uint64_t, std::uint64_t> map_census(const PauliSet& g,
                                                  std::size_t max_n = 12);

/// The unique-or-absent element of the coset p * span(t) that anticommutes
/// with every element of the anticommuting minimal generating set t. Absent
/// exactly when |t| is odd and p commutes with an odd number of elements of
/// t. When two candidates exist (|t| odd), returns the one using the smaller
/// correction subset. Preconditions on t are only checked when validate is
/// set; the fast path trusts the caller.
std::optional<Pauli> coset_anticommuting_element(const PauliSet& t,
                                                 const Pauli& p,
                                                 bool validate = false);

}  // namespace pauliset
