#pragma once

#include <array>
#include <cstddef>

#include "pauliset/group.hpp"
#include "pauliset/pauli.hpp"
#include "pauliset/rng.hpp"

namespace pauliset {

/// True when every pair of elements commutes.
bool is_commuting(const PauliSet& s);

/// True when s is commuting and has the full size 2^n.
bool is_maximally_commuting(const PauliSet& s);

/// First-factor split of a set over n >= 2 factors. Each part holds the
/// trailing n-1 factors of the elements whose leading factor matches the
/// part label. uvw is the permutation of (x, y, z) that orders the parts so
/// that empty ones come last; the first valid permutation in lexicographic
/// order is chosen.
struct Decomposition {
  PauliSet c_i, c_x, c_y, c_z;
  std::array<char, 3> uvw;

  const PauliSet& part(char label) const;
  const PauliSet& u() const { return part(uvw[0]); }
  const PauliSet& v() const { return part(uvw[1]); }
  const PauliSet& w() const { return part(uvw[2]); }

  /// Rebuilds the original set as the union of sigma_label tensor part.
  PauliSet reassemble() const;
};

Decomposition decompose(const PauliSet& s);

/// (sigma_i tensor s) union (sigma_label tensor s) for a maximally
/// commuting s; the result is maximally commuting one factor higher.
PauliSet lift_commuting(const PauliSet& s, char label);

/// Assembles sigma_i tensor c_i with sigma_x, sigma_y, sigma_z carrying the
/// parts named by perm[0], perm[1], perm[2]. The four parts must have equal
/// size 2^(q-1) over q factors and satisfy the commuting split pattern
/// (parts internally commuting and commuting with c_i; the x/y/z parts
/// pairwise anticommuting). The result is maximally commuting on q+1
/// factors.
PauliSet compose_commuting(const PauliSet& c_i, const PauliSet& c_x,
                           const PauliSet& c_y, const PauliSet& c_z,
                           std::array<char, 3> perm);

struct CommutingStructureReport {
  char case_label;  // 'b': one nonempty split part; 'c': all parts nonempty
  std::array<char, 3> uvw;
  std::array<std::size_t, 4> part_sizes;  // |c_i|, |c_u|, |c_v|, |c_w|
  std::size_t subsets_verified;           // recursive verifications performed
};

/// Re-derives and checks every structural property of a maximally commuting
/// set over n >= 2 factors: the identity membership, the commutation
/// pattern of the split, the case dichotomy, part sizes and disjointness,
/// the part product relations, and maximality of the part unions
/// (recursively). Throws InternalError if any guaranteed property fails.
CommutingStructureReport verify_commuting_structure(const PauliSet& s);

/// Uniformly seeded maximally commuting subgroup of size 2^n, built by
/// rejection-sampling n independent commuting generators and expanding.
PauliSet random_maximal_commuting(std::size_t n, Rng& rng,
                                  std::size_t max_rank = 24);

}  // namespace pauliset
