#include "pauliset/counting.hpp"

#include <string>

#include "pauliset/errors.hpp"

namespace pauliset {

namespace {

void check_n(std::size_t n, const char* who) {
  if (n == 0) throw ArgumentError(std::string(who) + ": n must be positive");
  if (n > kMaxCountingN)
    throw CapacityError(std::string(who) + ": n=" + std::to_string(n) +
                        " exceeds the cap of " + std::to_string(kMaxCountingN));
}

BigInt exact_div(const BigInt& num, const BigInt& den, const char* who) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0)
    throw InternalError(std::string(who) + ": inexact division");
  return q;
}

BigInt pow2(std::size_t e) { return BigInt(1) << e; }

// Elements that keep a k-generator commuting set extendable: the centralizer
// of the span minus the span itself.
BigInt commuting_step(std::size_t n, std::size_t k) {
  return pow2(2 * n - k) - pow2(k);
}

// Elements anticommuting with all of a k-element anticommuting minimal
// generating set; for even k the span contributes one such element, which
// cannot be used.
BigInt anticommuting_step(std::size_t n, std::size_t k) {
  BigInt count = pow2(2 * n - k);
  if (k % 2 == 0) count -= 1;
  return count;
}

// Product of step counts for k in [m, m_prime) divided by (m_prime - m)!,
// interleaved so every partial value stays an extension count.
template <typename Step>
BigInt count_extensions(std::size_t n, std::size_t m, std::size_t m_prime,
                        Step step, const char* who) {
  BigInt result = 1;
  std::size_t picked = 0;
  for (std::size_t k = m; k < m_prime; ++k) {
    result *= step(n, k);
    ++picked;
    result = exact_div(result, BigInt(picked), who);
  }
  return result;
}

}  // namespace

BigInt count_commuting_extensions(std::size_t n, std::size_t m,
                                  std::size_t m_prime) {
  check_n(n, "count_commuting_extensions");
  if (m >= m_prime)
    throw ArgumentError("count_commuting_extensions: needs m < m_prime");
  if (m_prime > n)
    throw ArgumentError("count_commuting_extensions: m_prime exceeds n");
  if (m == 0 && m_prime == 1) return pow2(2 * n);
  return count_extensions(n, m, m_prime, commuting_step,
                          "count_commuting_extensions");
}

BigInt count_generating_sets_of_subgroup(std::size_t m) {
  if (m > 2 * kMaxCountingN)
    throw CapacityError("count_generating_sets_of_subgroup: m=" +
                        std::to_string(m) + " exceeds the cap of " +
                        std::to_string(2 * kMaxCountingN));
  BigInt result = 1;
  for (std::size_t k = 0; k < m; ++k) {
    result *= pow2(m) - pow2(k);
    result = exact_div(result, BigInt(k + 1),
                       "count_generating_sets_of_subgroup");
  }
  return result;
}

BigInt count_commuting_subgroups(std::size_t n, std::size_t m) {
  check_n(n, "count_commuting_subgroups");
  if (m > n) throw ArgumentError("count_commuting_subgroups: m exceeds n");
  BigInt num = 1, den = 1;
  for (std::size_t k = 0; k < m; ++k) {
    num *= commuting_step(n, k);
    den *= pow2(m) - pow2(k);
  }
  return exact_div(num, den, "count_commuting_subgroups");
}

BigInt count_maximal_commuting(std::size_t n) {
  check_n(n, "count_maximal_commuting");
  BigInt result = 1;
  for (std::size_t k = 0; k < n; ++k) result *= pow2(n - k) + 1;
  return result;
}

BigInt count_anticommuting_extensions(std::size_t n, std::size_t m,
                                      std::size_t m_prime) {
  check_n(n, "count_anticommuting_extensions");
  if (m >= m_prime)
    throw ArgumentError("count_anticommuting_extensions: needs m < m_prime");
  if (m_prime > 2 * n)
    throw ArgumentError("count_anticommuting_extensions: m_prime exceeds 2n");
  if (m == 0 && m_prime == 1) return pow2(2 * n);
  return count_extensions(n, m, m_prime, anticommuting_step,
                          "count_anticommuting_extensions");
}

BigInt count_maximal_anticommuting(std::size_t n, std::size_t m) {
  check_n(n, "count_maximal_anticommuting");
  if (m % 2 == 0 || m > 2 * n + 1) return 0;
  if (m == 1) return 1;
  // Ordered choices of the m-1 free elements, then all m! orderings of the
  // completed set coincide.
  BigInt result = count_extensions(n, 0, m - 1, anticommuting_step,
                                   "count_maximal_anticommuting");
  return exact_div(result, BigInt(m), "count_maximal_anticommuting");
}

}  // namespace pauliset
