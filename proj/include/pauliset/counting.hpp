#pragma once

#include <cstddef>

#include <boost/multiprecision/cpp_int.hpp>

namespace pauliset {

/// Counts are exact arbitrary-precision integers.
using BigInt = boost::multiprecision::cpp_int;

/// Hard cap on the factor count accepted by the counting functions.
inline constexpr std::size_t kMaxCountingN = 4096;

/// Number of ways to extend a commuting minimal generating set of size m
/// (any such set other than {identity}) to one of size m_prime, over n
/// factors; 0 <= m < m_prime <= n. The base case m = 0, m_prime = 1 counts
/// every singleton, {identity} included, giving 4^n.
BigInt count_commuting_extensions(std::size_t n, std::size_t m,
                                  std::size_t m_prime);

/// Number of minimal generating sets of a subgroup of order 2^m.
BigInt count_generating_sets_of_subgroup(std::size_t m);

/// Number of commuting subgroups of order 2^m over n factors; 0 <= m <= n.
BigInt count_commuting_subgroups(std::size_t n, std::size_t m);

/// Number of maximally commuting subgroups (order 2^n) over n factors.
BigInt count_maximal_commuting(std::size_t n);

/// Number of ways to extend an anticommuting minimal generating set of size
/// m to one of size m_prime, over n factors; 0 <= m < m_prime <= 2n. The
/// base case m = 0, m_prime = 1 counts every singleton, {identity}
/// included, giving 4^n.
BigInt count_anticommuting_extensions(std::size_t n, std::size_t m,
                                      std::size_t m_prime);

/// Number of maximally anticommuting sets of size m over n factors. Zero
/// for even m and for m > 2n+1; one for m = 1 (the {identity} set).
BigInt count_maximal_anticommuting(std::size_t n, std::size_t m);

}  // namespace pauliset
