#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "pauliset/commuting.hpp"
#include "pauliset/pauli.hpp"

namespace pauliset {

/// True when every pair of distinct elements anticommutes.
bool is_anticommuting(const PauliSet& s);

/// True when no element can be added while keeping the set anticommuting.
/// For an anticommuting set this is equivalent to the product over the set
/// being the identity, except for the empty set, which is extendable and
/// therefore never maximal.
bool is_maximally_anticommuting(const PauliSet& s);

/// For an even-size anticommuting s, appends the product over s, which
/// anticommutes with everything in s; the result is maximally anticommuting.
PauliSet complete_even(const PauliSet& s);

/// The structural class of a maximally anticommuting set over n >= 2
/// factors, after the first-factor split with empty parts ordered last:
///   'a' only c_i nonempty      'b' c_i and c_u
///   'c' c_i, c_u, c_v          'd' c_u, c_v, c_w
///   'e' all four nonempty
struct StructureCase {
  char label;
  std::array<char, 3> uvw;
  std::array<std::size_t, 4> sizes;  // |c_i|, |c_u|, |c_v|, |c_w|
};

/// Classifies a maximally anticommuting set and re-checks the properties of
/// its class: the split commutation pattern, the size parities, the
/// disjointness rules (overlap is allowed only between singleton x/y/z
/// parts), and the per-case maximality claims. Throws InternalError when a
/// guaranteed property fails.
StructureCase classify_structure(const PauliSet& s);

struct MaximumStructureReport {
  std::array<std::size_t, 4> part_sizes;  // |c_i|, |c_x|, |c_y|, |c_z|
  Pauli part_product;   // the product shared by all four parts
  bool identity_product;  // part_product == identity <=> c_i is empty
};

/// Checks the structure specific to maximum-size (|s| = 2n+1, n >= 2)
/// maximally anticommuting sets: every part union c_i ∪ c_l multiplies to
/// the identity and is maximally anticommuting, the x/y/z parts are
/// nonempty, all four part products coincide, and products of part products
/// cancel pairwise. Throws InternalError when a guaranteed property fails.
MaximumStructureReport verify_maximum_structure(const PauliSet& s);

/// Replaces a 3-element subset of a maximally anticommuting s by its
/// product; the result is maximally anticommuting with two fewer elements.
PauliSet shrink_triple(const PauliSet& s, const PauliSet& triple);

/// Deterministic maximally anticommuting set of the maximum size 2n+1,
/// grown from {x, y, z} by prefixing x and appending the y/z singletons.
PauliSet construct_maximum(std::size_t n);

/// From a maximally anticommuting g over q factors, builds a maximally
/// anticommuting set of size 2|g|+1 over 2q+1 factors:
/// (x ⊗ I ⊗ g) ∪ (y ⊗ g ⊗ I) ∪ {z ⊗ I ⊗ I}.
PauliSet construct_doubling(const PauliSet& g);

/// Elementwise tensor product of an odd number of equal-size maximally
/// anticommuting sets, in each set's own order. The result is maximally
/// anticommuting over the summed factor counts.
PauliSet construct_zip(const std::vector<PauliSet>& sets);

/// One-step deterministic extension of an even-size anticommuting s by a
/// seed element q outside span(s). Splits s into the elements commuting
/// with q (C) and the rest (A) and returns q*prod(A) when |C| is odd,
/// q*prod(C) when |C| is even and nonempty, and q itself when C is empty.
/// The result anticommutes with all of s, and the extended set is not yet
/// maximal. Odd sizes take the randomized path via
/// coset_anticommuting_element instead.
Pauli extend_one_deterministic(const PauliSet& s, const Pauli& q);

struct ExtendStats {
  std::uint64_t samples = 0;
  std::uint64_t accepted = 0;
};

/// Las Vegas extension of an anticommuting minimal generating set (possibly
/// empty, carrying its factor count; {identity} is refused) to a maximally
/// anticommuting set of size 2n+1. Each round samples a uniform element,
/// maps it to the anticommuting element of its coset, and accepts unless
/// that element is the current product (even sizes) or absent (odd sizes);
/// each round accepts with probability at least 1/2. The input order is
/// preserved as a prefix of the result.
PauliSet extend_to_maximum(const PauliSet& g, std::uint64_t seed,
                           ExtendStats* stats = nullptr);

/// True when no element of s has an identity factor.
bool xyz_only(const PauliSet& s);

/// Exhaustive search for a maximum-size (2n+1) anticommuting set whose
/// elements avoid the identity factor everywhere. Returns the first hit in
/// canonical order, or nothing; such sets exist for n = 1 but not for
/// n = 2 or 3. Budget-guarded.
std::optional<PauliSet> xyz_max_search(std::size_t n, std::size_t max_n = 3);

}  // namespace pauliset
