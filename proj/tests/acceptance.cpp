// Acceptance gate: eight checks, one PASS/FAIL line each. Exit code is the
// number of failed checks. Tolerances and golden values are pinned inline.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pauliset/anticommuting.hpp"
#include "pauliset/commuting.hpp"
#include "pauliset/counting.hpp"
#include "pauliset/errors.hpp"
#include "pauliset/group.hpp"
#include "pauliset/oracle.hpp"
#include "pauliset/pauli.hpp"
#include "pauliset/rng.hpp"

using namespace pauliset;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string data_path(const std::string& name) {
  return std::string(PAULISET_DATA_DIR) + "/" + name;
}

// ---- 1. closed-form counts vs. exhaustive oracle -------------------------

bool check_counts(std::string& detail) {
  const auto start = Clock::now();
  bool ok = true;

  const std::uint64_t golden_commuting[] = {3, 15, 135};
  for (std::size_t n = 1; n <= 3; ++n) {
    const BigInt formula = count_maximal_commuting(n);
    const std::size_t enumerated = oracle::enumerate_maximal_commuting(n).size();
    if (formula != BigInt(golden_commuting[n - 1])) ok = false;
    if (enumerated != golden_commuting[n - 1]) ok = false;
  }

  const struct {
    std::size_t n, m;
    std::uint64_t expect;
  } golden_anti[] = {
      {1, 1, 1}, {1, 3, 1}, {2, 1, 1}, {2, 3, 20}, {2, 5, 6},
  };
  for (const auto& g : golden_anti) {
    if (count_maximal_anticommuting(g.n, g.m) != BigInt(g.expect)) ok = false;
    if (oracle::enumerate_maximal_anticommuting(g.n, g.m).size() != g.expect)
      ok = false;
  }

  const double elapsed = seconds_since(start);
  if (elapsed >= 60.0) ok = false;
  std::ostringstream out;
  out << "max-commuting 3/15/135, max-anticommuting 1/1/1/20/6, "
      << elapsed << "s (< 60s)";
  detail = out.str();
  return ok;
}

// ---- 2. sign-pattern census ----------------------------------------------

bool census_holds(const PauliSet& g, std::size_t n) {
  const auto census = map_census(g);
  const std::size_t k = g.size();
  if (census.size() != (std::size_t{1} << k)) return false;
  const std::uint64_t expect = (std::uint64_t{1} << (2 * n)) >> k;
  for (const auto& [mask, count] : census)
    if (count != expect) return false;
  return true;
}

bool check_census(std::string& detail) {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 2; ++n)
    for (const PauliSet& g : oracle::all_minimal_generating_sets(n, false)) {
      if (!census_holds(g, n)) {
        detail = "violated for " + g.str();
        return false;
      }
      ++checked;
    }

  // 500 random minimal generating sets at n=3, sizes 1..6.
  const std::size_t n = 3;
  const std::vector<Pauli> elements = oracle::all_elements(n);
  Rng rng(2026);
  for (std::size_t c = 0; c < 500; ++c) {
    const std::size_t size = 1 + rng.below(2 * n);
    PauliSet g(n);
    Gf2Basis basis(n);
    while (g.size() < size) {
      std::vector<const Pauli*> fresh;
      for (const Pauli& e : elements)
        if (!basis.spans(e)) fresh.push_back(&e);
      const Pauli& pick = *fresh[rng.below(fresh.size())];
      basis.add(pick);
      g.insert(pick);
    }
    if (!census_holds(g, n)) {
      detail = "violated for " + g.str();
      return false;
    }
    ++checked;
  }
  detail = std::to_string(checked) + " generating sets, all 2^k x 4^n/2^k";
  return true;
}

// ---- 3. coset pattern laws at n=2 -----------------------------------------

bool check_coset_laws(std::string& detail) {
  // census_check re-derives the once-each / twice-or-never laws for every
  // anticommuting minimal generating set and throws on any violation.
  const oracle::CensusReport r = oracle::census_check(2);
  const bool ok = r.generating_sets_checked == 1380 &&
                  r.anticommuting_sets_checked == 165 &&
                  r.cosets_checked == 510;
  detail = std::to_string(r.anticommuting_sets_checked) + " sets, " +
           std::to_string(r.cosets_checked) + " cosets (expected 165/510)";
  return ok;
}

// ---- 4. randomized extension: correctness, acceptance rate, speed ---------

bool check_extension(std::string& detail) {
  bool ok = true;
  std::ostringstream out;
  for (std::size_t n : {1, 2, 4, 8, 16, 32, 64}) {
    std::uint64_t samples = 0, accepted = 0;
    std::vector<double> times;
    const PauliSet seed_set = construct_maximum(n);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      PauliSet input(n);
      if (seed % 2 == 1) {
        input.insert(seed_set[0]);
        input.insert(seed_set[1]);
      }
      ExtendStats stats;
      const auto start = Clock::now();
      const PauliSet result = extend_to_maximum(input, seed, &stats);
      times.push_back(seconds_since(start));
      samples += stats.samples;
      accepted += stats.accepted;

      if (result.size() != 2 * n + 1) ok = false;
      if (!is_anticommuting(result)) ok = false;
      if (!product_of_set(result).is_identity()) ok = false;
      for (const Pauli& p : input)
        if (!result.contains(p)) ok = false;
    }
    const double rate =
        samples == 0 ? 1.0 : static_cast<double>(accepted) / samples;
    if (n >= 4 && rate < 0.45) ok = false;
    if (n == 64) {
      std::sort(times.begin(), times.end());
      const double median = times[times.size() / 2];
      if (median >= 0.050) ok = false;
      out << "n=64 median " << median * 1000 << "ms (< 50ms), ";
    }
    if (n >= 4) out << "rate(n=" << n << ")=" << rate << " ";
  }
  detail = out.str();
  return ok;
}

// ---- 5. structural decompositions under randomized inputs -------------------------

bool check_structures(std::string& detail) {
  std::size_t commuting_checked = 0, anticommuting_checked = 0;
  try {
    Rng rng(7);
    while (commuting_checked < 1000) {
      const std::size_t n = 2 + commuting_checked % 3;
      const PauliSet s = random_maximal_commuting(n, rng);
      verify_commuting_structure(s);
      ++commuting_checked;
    }
    std::uint64_t seed = 1;
    while (anticommuting_checked < 1000) {
      const std::size_t n = 2 + anticommuting_checked % 3;
      PauliSet s = extend_to_maximum(PauliSet(n), seed++);
      verify_maximum_structure(s);
      const std::size_t target = 3 + 2 * rng.below(n);
      while (s.size() > target) {
        PauliSet triple(n);
        while (triple.size() < 3) triple.insert(s[rng.below(s.size())]);
        s = shrink_triple(s, triple);
        classify_structure(s);
      }
      ++anticommuting_checked;
    }
  } catch (const std::exception& e) {
    detail = std::string("violation: ") + e.what();
    return false;
  }
  detail = std::to_string(commuting_checked) + " commuting + " +
           std::to_string(anticommuting_checked) +
           " anticommuting cases, zero violations";
  return true;
}

// ---- 6. bundled fixtures and the xyz-only search -----------------------------

bool check_fixtures(std::string& detail) {
  const struct {
    const char* file;
    std::size_t n, size;
  } fixtures[] = {{"m1.txt", 1, 3}, {"m4.txt", 4, 9}, {"m8.txt", 8, 17}};
  for (const auto& f : fixtures) {
    std::ifstream in(data_path(f.file));
    if (!in) {
      detail = std::string("missing fixture ") + f.file;
      return false;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const PauliSet s = PauliSet::parse(buffer.str());
    if (s.n() != f.n || s.size() != f.size || !xyz_only(s) ||
        !is_anticommuting(s) || !product_of_set(s).is_identity()) {
      detail = std::string("fixture ") + f.file + " failed validation";
      return false;
    }
  }

  if (xyz_max_search(1) == std::nullopt) {
    detail = "search missed the n=1 set";
    return false;
  }
  if (xyz_max_search(2) != std::nullopt) {
    detail = "search claims an n=2 set exists";
    return false;
  }
  const auto start = Clock::now();
  const bool absent3 = xyz_max_search(3) == std::nullopt;
  const double elapsed = seconds_since(start);
  if (!absent3) {
    detail = "search claims an n=3 set exists";
    return false;
  }
  if (elapsed >= 120.0) {
    detail = "n=3 search too slow";
    return false;
  }
  std::ostringstream out;
  out << "M1/M4/M8 valid; no xyz-only maximum at n=2,3 (n=3 " << elapsed
      << "s < 120s)";
  detail = out.str();
  return true;
}

// ---- 7. counting self-consistency ------------------------------------------

bool check_counting_identities(std::string& detail) {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 16; ++n) {
    if (count_commuting_subgroups(n, n) != count_maximal_commuting(n)) {
      detail = "maximal-commuting identity failed at n=" + std::to_string(n);
      return false;
    }
    for (std::size_t m = 1; m <= n; ++m) {
      BigInt extensions = count_commuting_extensions(n, 0, m);
      if (m == 1) extensions -= 1;  // the trivial subgroup has no generators
      if (extensions != count_commuting_subgroups(n, m) *
                            count_generating_sets_of_subgroup(m)) {
        detail = "double-counting identity failed at n=" + std::to_string(n) +
                 " m=" + std::to_string(m);
        return false;
      }
      ++checked;
    }
    for (std::size_t m = 3; m <= 2 * n + 1; m += 2) {
      if (count_maximal_anticommuting(n, m) * m !=
          count_anticommuting_extensions(n, 0, m - 1)) {
        detail = "anticommuting identity failed at n=" + std::to_string(n) +
                 " m=" + std::to_string(m);
        return false;
      }
      ++checked;
    }
  }
  detail = std::to_string(checked) + " identities over 1 <= m <= n <= 16";
  return true;
}

// ---- 8. triple-shrink chains ------------------------------------------------

bool check_shrink_chains(std::string& detail) {
  for (std::size_t n = 1; n <= 8; ++n) {
    PauliSet s = construct_maximum(n);
    while (s.size() > 1) {
      PauliSet triple(n);
      for (std::size_t k = 0; k < 3; ++k) triple.insert(s[k]);
      s = shrink_triple(s, triple);
      if (!is_maximally_anticommuting(s)) {
        detail = "intermediate of size " + std::to_string(s.size()) +
                 " at n=" + std::to_string(n) + " is not maximal";
        return false;
      }
    }
    if (!(s.size() == 1 && s[0].is_identity())) {
      detail = "chain at n=" + std::to_string(n) + " did not reach {I}";
      return false;
    }
  }
  detail = "chains for n <= 8 reach {I} through maximal intermediates";
  return true;
}

}  // namespace

int main() {
  struct Check {
    const char* name;
    bool (*run)(std::string&);
  };
  const Check checks[] = {
      {"counts-vs-oracle", check_counts},
      {"sign-pattern-census", check_census},
      {"coset-pattern-laws", check_coset_laws},
      {"randomized-extension", check_extension},
      {"structure-properties", check_structures},
      {"fixtures-xyz-search", check_fixtures},
      {"counting-identities", check_counting_identities},
      {"triple-shrink-chains", check_shrink_chains},
  };

  int failures = 0;
  int index = 0;
  for (const Check& check : checks) {
    ++index;
    std::string detail;
    bool ok = false;
    try {
      ok = check.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " " << index << "/8 " << check.name
              << ": " << detail << "\n";
    if (!ok) ++failures;
  }
  return failures;
}
