#include "pauliset/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pauliset/anticommuting.hpp"
#include "pauliset/errors.hpp"
#include "pauliset/rng.hpp"

namespace pauliset::oracle {

namespace {

// ORACLE_BUDGET, when set, replaces every default cap.
std::size_t effective_cap(std::size_t default_cap) {
  const char* env = std::getenv("ORACLE_BUDGET");
  if (env == nullptr || *env == '\0') return default_cap;
  std::size_t value = 0;
  for (const char* c = env; *c != '\0'; ++c) {
    if (*c < '0' || *c > '9')
      throw ArgumentError(
          "ORACLE_BUDGET: expected a nonnegative integer, got \"" +
          std::string(env) + "\"");
    value = value * 10 + static_cast<std::size_t>(*c - '0');
  }
  return value;
}

void check_budget(std::size_t n, std::size_t default_cap, const char* who) {
  if (n == 0) throw ArgumentError(std::string(who) + ": n must be positive");
  const std::size_t cap = effective_cap(default_cap);
  if (n > cap)
    throw CapacityError(std::string(who) + ": n=" + std::to_string(n) +
                        " exceeds the budget of " + std::to_string(cap));
}

void sort_by_serialization(std::vector<PauliSet>& sets) {
  std::sort(sets.begin(), sets.end(),
            [](const PauliSet& a, const PauliSet& b) { return a.str() < b.str(); });
}

// Oracle-local GF(2) reduction over rows packed as x | z << n, kept separate
// from the library's basis type on purpose.
std::uint64_t pack_row(const Pauli& p) {
  return p.x_words()[0] | (p.z_words()[0] << p.n());
}

std::uint64_t reduce_row(std::uint64_t row,
                         const std::vector<std::uint64_t>& basis) {
  for (std::uint64_t b : basis) {
    const std::uint64_t low = b & (~b + 1);
    if (row & low) row ^= b;
  }
  return row;
}

std::vector<std::uint64_t> build_row_basis(const PauliSet& g) {
  std::vector<std::uint64_t> basis;
  for (const Pauli& p : g) {
    const std::uint64_t row = reduce_row(pack_row(p), basis);
    if (row != 0) basis.push_back(row);
  }
  return basis;
}

std::uint64_t sign_mask(const Pauli& e, const PauliSet& g) {
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < g.size(); ++k)
    if (commute(e, g[k]) == -1) mask |= std::uint64_t{1} << k;
  return mask;
}

[[noreturn]] void fail(const PauliSet& g, const std::string& what) {
  std::string msg = "census_check: " + what + " for the set {";
  for (std::size_t k = 0; k < g.size(); ++k)
    msg += (k == 0 ? "" : ", ") + g[k].str();
  throw InternalError(msg + "}");
}

// Law 1: each of the 2^k sign patterns against a minimal generating set
// occurs exactly 4^n / 2^k times.
void check_pattern_counts(const PauliSet& g,
                          const std::vector<Pauli>& elements) {
  const std::size_t k = g.size();
  std::map<std::uint64_t, std::uint64_t> counts;
  for (const Pauli& e : elements) ++counts[sign_mask(e, g)];
  if (counts.size() != std::size_t{1} << k)
    fail(g, "expected " + std::to_string(std::size_t{1} << k) +
               " sign patterns, saw " + std::to_string(counts.size()));
  const std::uint64_t expected = elements.size() >> k;
  for (const auto& [mask, count] : counts)
    if (count != expected)
      fail(g, "pattern " + std::to_string(mask) + " occurs " +
                 std::to_string(count) + " times; expected " +
                 std::to_string(expected));
}

// Law 2: within each coset of the span of an anticommuting minimal
// generating set, patterns appear once each (even k), or twice each over the
// patterns whose parity matches the coset, the pair linked by the set
// product (odd k); the two coset parity classes are equally large.
std::uint64_t check_coset_patterns(const PauliSet& g,
                                   const std::vector<Pauli>& elements) {
  const std::size_t k = g.size();
  const auto basis = build_row_basis(g);
  std::map<std::uint64_t, std::vector<const Pauli*>> cosets;
  for (const Pauli& e : elements)
    cosets[reduce_row(pack_row(e), basis)].push_back(&e);

  const Pauli full_product = product_of_set(g);
  if (cosets.size() != elements.size() >> k)
    fail(g, "expected " + std::to_string(elements.size() >> k) +
               " cosets, saw " + std::to_string(cosets.size()));
  std::uint64_t parity_class_sizes[2] = {0, 0};
  for (const auto& [key, members] : cosets) {
    if (members.size() != std::size_t{1} << k)
      fail(g, "a coset has " + std::to_string(members.size()) +
                 " elements; expected " + std::to_string(std::size_t{1} << k));
    std::map<std::uint64_t, std::vector<const Pauli*>> by_mask;
    for (const Pauli* e : members) by_mask[sign_mask(*e, g)].push_back(e);
    if (k % 2 == 0) {
      if (by_mask.size() != members.size())
        fail(g, "a coset repeats a sign pattern at even size");
      continue;
    }
    const std::uint64_t f_parity =
        (k - std::popcount(by_mask.begin()->first)) & 1;
    ++parity_class_sizes[f_parity];
    if (by_mask.size() != std::size_t{1} << (k - 1))
      fail(g, "a coset holds " + std::to_string(by_mask.size()) +
                 " distinct patterns; expected " +
                 std::to_string(std::size_t{1} << (k - 1)));
    for (const auto& [mask, pair] : by_mask) {
      if (((k - std::popcount(mask)) & 1) != f_parity)
        fail(g, "a coset mixes the two pattern parities");
      if (pair.size() != 2)
        fail(g, "a pattern occurs " + std::to_string(pair.size()) +
                   " times in a coset; expected 2");
      if (*pair[0] * *pair[1] != full_product)
        fail(g, "a pattern pair is not linked by the set product");
    }
  }
  if (k % 2 != 0 &&
      (parity_class_sizes[0] != cosets.size() / 2 ||
       parity_class_sizes[1] != cosets.size() / 2))
    fail(g, "the coset parity classes must each hold half of the " +
               std::to_string(cosets.size()) + " cosets");
  return cosets.size();
}

}  // namespace

std::vector<Pauli> all_elements(std::size_t n) {
  check_budget(n, 8, "all_elements");
  std::vector<Pauli> out;
  out.reserve(std::size_t{1} << (2 * n));
  const std::uint64_t lim = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < lim; ++x)
    for (std::uint64_t z = 0; z < lim; ++z)
      out.push_back(Pauli::from_bits(n, x, z));
  return out;
}

std::vector<PauliSet> enumerate_maximal_commuting(std::size_t n) {
  check_budget(n, 3, "enumerate_maximal_commuting");
  const std::vector<Pauli> elements = all_elements(n);
  // Enumerate commuting independent n-sets of generators, expand each to its
  // subgroup, and deduplicate the subgroups by canonical serialization.
  std::map<std::string, PauliSet> subgroups;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, std::vector<std::uint64_t>)> dfs =
      [&](std::size_t start, std::vector<std::uint64_t> basis) {
        if (chosen.size() == n) {
          std::vector<Pauli> all = {Pauli(n)};
          for (std::size_t idx : chosen) {
            const std::size_t half = all.size();
            for (std::size_t j = 0; j < half; ++j)
              all.push_back(elements[idx] * all[j]);
          }
          std::sort(all.begin(), all.end());
          PauliSet s(n);
          for (const Pauli& p : all) s.insert(p);
          subgroups.emplace(s.str(), s);
          return;
        }
        for (std::size_t idx = start; idx < elements.size(); ++idx) {
          const std::uint64_t row =
              reduce_row(pack_row(elements[idx]), basis);
          if (row == 0) continue;
          bool ok = true;
          for (std::size_t j : chosen)
            if (commute(elements[j], elements[idx]) != 1) {
              ok = false;
              break;
            }
          if (!ok) continue;
          chosen.push_back(idx);
          auto grown = basis;
          grown.push_back(row);
          dfs(idx + 1, std::move(grown));
          chosen.pop_back();
        }
      };
  dfs(0, {});
  std::vector<PauliSet> found;
  found.reserve(subgroups.size());
  for (auto& [key, s] : subgroups) found.push_back(std::move(s));
  return found;
}

std::vector<PauliSet> enumerate_maximal_anticommuting(std::size_t n,
                                                      std::size_t m) {
  check_budget(n, 2, "enumerate_maximal_anticommuting");
  std::vector<PauliSet> found;
  if (m == 0) return found;
  const std::vector<Pauli> elements = all_elements(n);
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> dfs = [&](std::size_t start) {
    if (chosen.size() == m) {
      Pauli prod(n);
      for (std::size_t idx : chosen) prod *= elements[idx];
      if (!prod.is_identity()) return;
      PauliSet s(n);
      for (std::size_t idx : chosen) s.insert(elements[idx]);
      found.push_back(std::move(s));
      return;
    }
    for (std::size_t idx = start; idx < elements.size(); ++idx) {
      if (elements.size() - idx < m - chosen.size()) break;
      bool ok = true;
      for (std::size_t j : chosen)
        if (commute(elements[j], elements[idx]) != -1) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(idx);
      dfs(idx + 1);
      chosen.pop_back();
    }
  };
  dfs(0);
  sort_by_serialization(found);
  return found;
}

std::vector<PauliSet> all_minimal_generating_sets(std::size_t n,
                                                  bool anticommuting_only) {
  check_budget(n, 2, "all_minimal_generating_sets");
  const std::vector<Pauli> elements = all_elements(n);
  std::vector<PauliSet> found;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, std::vector<std::uint64_t>)> dfs =
      [&](std::size_t start, std::vector<std::uint64_t> basis) {
        if (!chosen.empty()) {
          PauliSet s(n);
          for (std::size_t idx : chosen) s.insert(elements[idx]);
          found.push_back(std::move(s));
        }
        for (std::size_t idx = start; idx < elements.size(); ++idx) {
          const std::uint64_t row =
              reduce_row(pack_row(elements[idx]), basis);
          if (row == 0) continue;
          if (anticommuting_only) {
            bool ok = true;
            for (std::size_t j : chosen)
              if (commute(elements[j], elements[idx]) != -1) {
                ok = false;
                break;
              }
            if (!ok) continue;
          }
          chosen.push_back(idx);
          auto grown = basis;
          grown.push_back(row);
          dfs(idx + 1, std::move(grown));
          chosen.pop_back();
        }
      };
  dfs(0, {});
  sort_by_serialization(found);
  return found;
}

CensusReport census_check(std::size_t n, std::size_t random_cases,
                          std::uint64_t seed) {
  check_budget(n, 3, "census_check");
  const std::vector<Pauli> elements = all_elements(n);
  CensusReport report;
  report.n = n;

  auto check_one = [&](const PauliSet& g, bool coset_laws) {
    check_pattern_counts(g, elements);
    ++report.generating_sets_checked;
    if (coset_laws) {
      report.cosets_checked += check_coset_patterns(g, elements);
      ++report.anticommuting_sets_checked;
    }
  };

  if (n <= 2) {
    for (const PauliSet& g : all_minimal_generating_sets(n, false))
      check_one(g, is_anticommuting(g));
    return report;
  }

  // Beyond the exhaustive range: seeded random minimal generating sets, one
  // unconstrained and one anticommuting per case.
  Rng rng(seed);
  auto random_set = [&](bool anticommuting) {
    const std::size_t size = 1 + rng.below(2 * n);
    PauliSet g(n);
    std::vector<std::uint64_t> basis;
    while (g.size() < size) {
      std::vector<const Pauli*> valid;
      for (const Pauli& e : elements) {
        if (reduce_row(pack_row(e), basis) == 0) continue;
        if (anticommuting) {
          bool ok = true;
          for (const Pauli& p : g)
            if (commute(p, e) != -1) {
              ok = false;
              break;
            }
          if (!ok) continue;
        }
        valid.push_back(&e);
      }
      const Pauli& pick = *valid[rng.below(valid.size())];
      basis.push_back(reduce_row(pack_row(pick), basis));
      g.insert(pick);
    }
    return g;
  };
  for (std::size_t c = 0; c < random_cases; ++c) {
    check_one(random_set(false), false);
    check_one(random_set(true), true);
  }
  return report;
}

std::size_t xyz_commuting_max_size(std::size_t n) {
  check_budget(n, 3, "xyz_commuting_max_size");
  std::vector<Pauli> cands;
  std::vector<char> digits(n, 0);
  for (;;) {
    Pauli p(n);
    for (std::size_t k = 0; k < n; ++k)
      p.set_factor(k, "xyz"[static_cast<std::size_t>(digits[k])]);
    cands.push_back(p);
    std::size_t k = 0;
    while (k < n && digits[k] == 2) digits[k++] = 0;
    if (k == n) break;
    ++digits[k];
  }
  std::size_t best = 0;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> dfs = [&](std::size_t start) {
    best = std::max(best, chosen.size());
    for (std::size_t idx = start; idx < cands.size(); ++idx) {
      if (chosen.size() + (cands.size() - idx) <= best) break;
      bool ok = true;
      for (std::size_t j : chosen)
        if (commute(cands[j], cands[idx]) != 1) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(idx);
      dfs(idx + 1);
      chosen.pop_back();
    }
  };
  dfs(0);
  return best;
}

}  // namespace pauliset::oracle
