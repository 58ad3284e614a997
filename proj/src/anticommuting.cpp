#include "pauliset/anticommuting.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pauliset/errors.hpp"
#include "pauliset/group.hpp"
#include "pauliset/rng.hpp"

namespace pauliset {

namespace {

struct SplitViolation {
  Pauli a, b;
  int expected;
};

// First pair breaking the anticommuting split pattern: elements anticommute
// inside a part and between parts[0] and the rest, and commute across the
// other three parts. Shared elements across those parts are consistent with
// the pattern and are handled by the disjointness rules instead.
std::optional<SplitViolation> find_split_violation(
    const std::array<const PauliSet*, 4>& parts) {
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a; b < 4; ++b) {
      const int expected = (a != b && a != 0) ? 1 : -1;
      const PauliSet& pa = *parts[a];
      const PauliSet& pb = *parts[b];
      for (std::size_t i = 0; i < pa.size(); ++i) {
        const std::size_t j0 = (a == b) ? i + 1 : 0;
        for (std::size_t j = j0; j < pb.size(); ++j) {
          if (a != b && pa[i] == pb[j]) continue;
          if (commute(pa[i], pb[j]) != expected)
            return SplitViolation{pa[i], pb[j], expected};
        }
      }
    }
  }
  return std::nullopt;
}

bool disjoint(const PauliSet& a, const PauliSet& b) {
  for (const Pauli& p : a)
    if (b.contains(p)) return false;
  return true;
}

void require_maximally_anticommuting(const PauliSet& s, const char* who) {
  if (!is_anticommuting(s))
    throw ArgumentError(std::string(who) + ": input must be anticommuting");
  if (!is_maximally_anticommuting(s))
    throw ArgumentError(std::string(who) +
                        ": input must be maximally anticommuting");
}

}  // namespace

bool is_anticommuting(const PauliSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (commute(s[i], s[j]) != -1) return false;
  return true;
}

bool is_maximally_anticommuting(const PauliSet& s) {
  if (!is_anticommuting(s))
    throw ArgumentError("is_maximally_anticommuting: input must anticommute");
  if (s.empty()) return false;
  return product_of_set(s).is_identity();
}

PauliSet complete_even(const PauliSet& s) {
  if (!is_anticommuting(s))
    throw ArgumentError("complete_even: input must be anticommuting");
  if (s.size() % 2 != 0)
    throw ArgumentError("complete_even: input size must be even");
  PauliSet out = s;
  out.insert(product_of_set(s));
  return out;
}

StructureCase classify_structure(const PauliSet& s) {
  if (s.n() < 2)
    throw ArgumentError("classify_structure: needs at least 2 factors");
  require_maximally_anticommuting(s, "classify_structure");

  const Decomposition d = decompose(s);
  const std::array<const PauliSet*, 4> parts = {&d.c_i, &d.part(d.uvw[0]),
                                                &d.part(d.uvw[1]),
                                                &d.part(d.uvw[2])};
  if (auto bad = find_split_violation(parts))
    throw InternalError("classify_structure: " + bad->a.str() + " and " +
                        bad->b.str() +
                        (bad->expected == 1 ? " must commute"
                                            : " must anticommute"));

  std::size_t nonempty = 0;
  for (char label : d.uvw)
    if (!d.part(label).empty()) ++nonempty;

  StructureCase out;
  out.uvw = d.uvw;
  out.sizes = {d.c_i.size(), d.part(d.uvw[0]).size(), d.part(d.uvw[1]).size(),
               d.part(d.uvw[2]).size()};

  const bool has_i = !d.c_i.empty();
  if (has_i) {
    switch (nonempty) {
      case 0:
        out.label = 'a';
        break;
      case 1:
        out.label = 'b';
        break;
      case 2:
        out.label = 'c';
        break;
      default:
        out.label = 'e';
        break;
    }
  } else {
    if (nonempty != 3)
      throw InternalError("classify_structure: " + std::to_string(nonempty) +
                          " nonempty split parts with an empty i part");
    out.label = 'd';
  }

  // Size parities: the x/y/z parts share one parity and the i part, when
  // present, carries the opposite one.
  auto odd = [](std::size_t v) { return v % 2 != 0; };
  switch (out.label) {
    case 'a':
      if (!odd(out.sizes[0]))
        throw InternalError("classify_structure: the i part must have odd size");
      break;
    case 'b':
    case 'c':
      if (!odd(out.sizes[0]))
        throw InternalError("classify_structure: the i part must have odd size");
      for (std::size_t k = 1; k <= nonempty; ++k)
        if (odd(out.sizes[k]))
          throw InternalError(
              "classify_structure: the split parts must have even size");
      break;
    case 'd':
      for (std::size_t k = 1; k < 4; ++k)
        if (!odd(out.sizes[k]))
          throw InternalError(
              "classify_structure: the split parts must have odd size");
      break;
    default:
      if (odd(out.sizes[1]) != odd(out.sizes[2]) ||
          odd(out.sizes[1]) != odd(out.sizes[3]))
        throw InternalError(
            "classify_structure: the split parts must share one parity");
      if (odd(out.sizes[0]) == odd(out.sizes[1]))
        throw InternalError(
            "classify_structure: the i part must have the opposite parity");
      break;
  }

  // Maximality and size-bound claims for the small cases.
  if (out.label == 'a' || out.label == 'b') {
    if (s.size() >= 2 * s.n())
      throw InternalError(
          "classify_structure: size reaches 2n with an empty split part");
    PauliSet sub = d.c_i;
    if (out.label == 'b')
      for (const Pauli& p : d.u()) sub.insert(p);
    if (!is_anticommuting(sub) || !is_maximally_anticommuting(sub))
      throw InternalError(
          "classify_structure: the nonempty parts must join into a maximally "
          "anticommuting set");
  }

  // Disjointness: the i part never overlaps the others, and two x/y/z parts
  // may only overlap when both are singletons.
  for (char label : d.uvw) {
    if (!disjoint(d.c_i, d.part(label)))
      throw InternalError(
          "classify_structure: the i part overlaps a split part");
    if ((d.c_i.size() + d.part(label).size()) % 2 == 0)
      throw InternalError(
          "classify_structure: an i-part union has even size");
  }
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a + 1; b < 3; ++b) {
      const PauliSet& pa = d.part(d.uvw[a]);
      const PauliSet& pb = d.part(d.uvw[b]);
      if ((pa.size() > 1 || pb.size() > 1) && !disjoint(pa, pb))
        throw InternalError(
            "classify_structure: non-singleton split parts overlap");
    }
  return out;
}

MaximumStructureReport verify_maximum_structure(const PauliSet& s) {
  if (s.n() < 2)
    throw ArgumentError("verify_maximum_structure: needs at least 2 factors");
  require_maximally_anticommuting(s, "verify_maximum_structure");
  if (s.size() != 2 * s.n() + 1)
    throw ArgumentError("verify_maximum_structure: input must have size 2n+1");

  const Decomposition d = decompose(s);
  for (char label : {'x', 'y', 'z'})
    if (d.part(label).empty())
      throw InternalError(std::string("verify_maximum_structure: part ") +
                          label + " is empty");

  const Pauli prod_i = product_of_set(d.c_i);
  for (char label : {'x', 'y', 'z'}) {
    const Pauli prod = product_of_set(d.part(label));
    if (prod != prod_i)
      throw InternalError(std::string("verify_maximum_structure: part ") +
                          label + " has a deviating product");
    PauliSet sub = d.c_i;
    for (const Pauli& p : d.part(label)) sub.insert(p);
    if (!product_of_set(sub).is_identity())
      throw InternalError(
          std::string("verify_maximum_structure: the union with part ") +
          label + " does not multiply to the identity");
    if (!is_anticommuting(sub) || !is_maximally_anticommuting(sub))
      throw InternalError(
          std::string("verify_maximum_structure: the union with part ") +
          label + " is not maximally anticommuting");
  }
  // Any two part products cancel; they coincide and are involutions.
  const std::array<Pauli, 4> prods = {prod_i, product_of_set(d.c_x),
                                      product_of_set(d.c_y),
                                      product_of_set(d.c_z)};
  for (const Pauli& a : prods)
    for (const Pauli& b : prods)
      if (!(a * b).is_identity())
        throw InternalError(
            "verify_maximum_structure: two part products do not cancel");

  MaximumStructureReport report{
      {d.c_i.size(), d.c_x.size(), d.c_y.size(), d.c_z.size()},
      prod_i,
      prod_i.is_identity()};
  if (report.identity_product != d.c_i.empty())
    throw InternalError(
        "verify_maximum_structure: identity product must coincide with an "
        "empty i part");
  return report;
}

PauliSet shrink_triple(const PauliSet& s, const PauliSet& triple) {
  require_maximally_anticommuting(s, "shrink_triple");
  if (triple.size() != 3)
    throw ArgumentError("shrink_triple: need exactly 3 elements to replace");
  for (const Pauli& p : triple)
    if (!s.contains(p))
      throw ArgumentError("shrink_triple: " + p.str() + " is not in the set");
  PauliSet out(s.n());
  for (const Pauli& p : s)
    if (!triple.contains(p)) out.insert(p);
  out.insert(product_of_set(triple));
  return out;
}

PauliSet construct_maximum(std::size_t n) {
  if (n == 0) throw ArgumentError("construct_maximum: n must be positive");
  PauliSet g(1);
  for (char label : {'x', 'y', 'z'}) g.insert(Pauli::parse({&label, 1}));
  for (std::size_t k = 1; k < n; ++k) {
    PauliSet next(k + 1);
    for (const Pauli& p : tensor_prefix('x', g)) next.insert(p);
    for (char label : {'y', 'z'}) {
      Pauli single(k + 1);
      single.set_factor(0, label);
      next.insert(single);
    }
    g = next;
  }
  return g;
}

PauliSet construct_doubling(const PauliSet& g) {
  require_maximally_anticommuting(g, "construct_doubling");
  const std::size_t q = g.n();
  const Pauli pad(q);
  PauliSet out(2 * q + 1);
  for (const Pauli& p : g)
    out.insert(tensor(Pauli::parse("x"), tensor(pad, p)));
  for (const Pauli& p : g)
    out.insert(tensor(Pauli::parse("y"), tensor(p, pad)));
  Pauli last(2 * q + 1);
  last.set_factor(0, 'z');
  out.insert(last);
  return out;
}

PauliSet construct_zip(const std::vector<PauliSet>& sets) {
  if (sets.empty() || sets.size() % 2 == 0)
    throw ArgumentError("construct_zip: need an odd number of sets");
  const std::size_t count = sets[0].size();
  for (const PauliSet& s : sets) {
    if (s.size() != count)
      throw ArgumentError("construct_zip: the sets must have equal size");
    require_maximally_anticommuting(s, "construct_zip");
  }
  std::size_t total = 0;
  for (const PauliSet& s : sets) total += s.n();
  PauliSet out(total);
  for (std::size_t j = 0; j < count; ++j) {
    Pauli elem = sets[0][j];
    for (std::size_t k = 1; k < sets.size(); ++k)
      elem = tensor(elem, sets[k][j]);
    out.insert(elem);
  }
  return out;
}

Pauli extend_one_deterministic(const PauliSet& s, const Pauli& q) {
  if (!is_anticommuting(s))
    throw ArgumentError("extend_one_deterministic: set must be anticommuting");
  if (s.size() % 2 != 0)
    throw ArgumentError("extend_one_deterministic: set size must be even");
  Gf2Basis basis(q.n());
  for (const Pauli& p : s) basis.add(p);
  if (basis.spans(q))
    throw ArgumentError(
        "extend_one_deterministic: seed lies in the span of the set");
  std::vector<const Pauli*> comm, anti;
  for (const Pauli& x : s) (commute(q, x) == 1 ? comm : anti).push_back(&x);
  Pauli out = q;
  if (comm.size() % 2 != 0)
    for (const Pauli* x : anti) out *= *x;
  else
    for (const Pauli* x : comm) out *= *x;
  return out;
}

PauliSet extend_to_maximum(const PauliSet& g, std::uint64_t seed,
                           ExtendStats* stats) {
  const std::size_t n = g.n();
  if (n == 0)
    throw ArgumentError(
        "extend_to_maximum: an empty input must carry a factor count");
  if (!is_anticommuting(g))
    throw ArgumentError("extend_to_maximum: input must be anticommuting");
  if (!is_minimal_generating(g))
    throw ArgumentError("extend_to_maximum: input must be minimal generating");
  if (g.contains(Pauli(n)))
    throw ArgumentError("extend_to_maximum: {identity} cannot be extended");

  Rng rng(seed);
  ExtendStats local;
  PauliSet t = g;
  Pauli prod = product_of_set(t);
  while (t.size() < 2 * n) {
    ++local.samples;
    const Pauli u = random_pauli(n, rng);
    const auto v = coset_anticommuting_element(t, u);
    if (!v) continue;
    // At even sizes the sample is rejected only when it is the running
    // product, whose insertion would seal the set early.
    if (t.size() % 2 == 0 && *v == prod) continue;
    ++local.accepted;
    t.insert(*v);
    prod *= *v;
  }
  t.insert(prod);
  if (stats) *stats = local;
  return t;
}

bool xyz_only(const PauliSet& s) {
  for (const Pauli& p : s)
    for (std::size_t k = 0; k < p.n(); ++k)
      if (p.factor(k) == 'i') return false;
  return true;
}

std::optional<PauliSet> xyz_max_search(std::size_t n, std::size_t max_n) {
  if (n == 0) throw ArgumentError("xyz_max_search: n must be positive");
  if (n > max_n)
    throw CapacityError("xyz_max_search: n=" + std::to_string(n) +
                        " exceeds the search budget of " +
                        std::to_string(max_n));
  // All 3^n identity-free elements, in canonical order.
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
  std::sort(cands.begin(), cands.end());

  const std::size_t target = 2 * n + 1;
  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t)> dfs = [&](std::size_t start) -> bool {
    if (chosen.size() == target) return true;
    for (std::size_t idx = start; idx < cands.size(); ++idx) {
      if (cands.size() - idx < target - chosen.size()) break;
      bool ok = true;
      for (std::size_t j : chosen)
        if (commute(cands[j], cands[idx]) != -1) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(idx);
      if (dfs(idx + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  PauliSet out(n);
  for (std::size_t idx : chosen) out.insert(cands[idx]);
  return out;
}

}  // namespace pauliset
