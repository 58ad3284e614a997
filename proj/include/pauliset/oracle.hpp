#pragma once

#include <cstdint>
#include <vector>

#include "pauliset/pauli.hpp"

namespace pauliset::oracle {

// Brute-force ground truth for small n. Every function enumerates
// exhaustively and independently of the formulas and constructions it is
// used to check. Each default n cap below can be overridden with the
// ORACLE_BUDGET environment variable (a single integer cap applied to all
// oracle entry points).

/// All 4^n elements in canonical order. Default cap n <= 8.
std::vector<Pauli> all_elements(std::size_t n);

/// Every maximally commuting subgroup, each in canonical order, the list
/// sorted by serialization. Default cap n <= 3.
std::vector<PauliSet> enumerate_maximal_commuting(std::size_t n);

/// Every maximally anticommuting set of size m, each in canonical order,
/// the list sorted by serialization. Default cap n <= 2.
std::vector<PauliSet> enumerate_maximal_anticommuting(std::size_t n,
                                                      std::size_t m);

/// Every minimal generating set over n factors ({identity} excluded),
/// optionally restricted to anticommuting ones. Default cap n <= 2.
std::vector<PauliSet> all_minimal_generating_sets(std::size_t n,
                                                  bool anticommuting_only);

struct CensusReport {
  std::size_t n = 0;
  std::uint64_t generating_sets_checked = 0;
  std::uint64_t anticommuting_sets_checked = 0;
  std::uint64_t cosets_checked = 0;
};

/// Verifies the sign-pattern laws over minimal generating sets: each of the
/// 2^k patterns against a k-element set occurs exactly 4^n/2^k times, and
/// within each coset of an anticommuting set the patterns follow the parity
/// law (every pattern once for even k; matching-parity patterns exactly
/// twice, with the pair linked by the set product, for odd k, and the two
/// coset parity classes equal in number). Exhaustive for n <= 2; for larger
/// n checks random_cases seeded random sets. Default cap n <= 3. Throws
/// InternalError on any violation.
CensusReport census_check(std::size_t n, std::size_t random_cases = 500,
                          std::uint64_t seed = 0);

/// Size of the largest commuting set avoiding the identity factor
/// everywhere, by exhaustive search. Default cap n <= 3.
std::size_t xyz_commuting_max_size(std::size_t n);

}  // namespace pauliset::oracle
