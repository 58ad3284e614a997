#include "pauliset/commuting.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "pauliset/errors.hpp"
#include "pauliset/group.hpp"

namespace pauliset {

namespace {

// The trailing n-1 factors of p.
Pauli tail(const Pauli& p) {
  Pauli out(p.n() - 1);
  for (std::size_t k = 1; k < p.n(); ++k) {
    const char c = p.factor(k);
    if (c != 'i') out.set_factor(k - 1, c);
  }
  return out;
}

constexpr std::array<std::array<char, 3>, 6> kLabelPerms = {{
    {'x', 'y', 'z'},
    {'x', 'z', 'y'},
    {'y', 'x', 'z'},
    {'y', 'z', 'x'},
    {'z', 'x', 'y'},
    {'z', 'y', 'x'},
}};

struct SplitViolation {
  Pauli a, b;
  int expected;
};

// First pair breaking the split pattern: elements commute inside a part and
// against parts[0], and anticommute across the other three parts.
std::optional<SplitViolation> find_split_violation(
    const std::array<const PauliSet*, 4>& parts) {
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a; b < 4; ++b) {
      const int expected = (a == b || a == 0) ? 1 : -1;
      const PauliSet& pa = *parts[a];
      const PauliSet& pb = *parts[b];
      for (std::size_t i = 0; i < pa.size(); ++i) {
        const std::size_t j0 = (a == b) ? i + 1 : 0;
        for (std::size_t j = j0; j < pb.size(); ++j)
          if (commute(pa[i], pb[j]) != expected)
            return SplitViolation{pa[i], pb[j], expected};
      }
    }
  }
  return std::nullopt;
}

PauliSet product_set(const PauliSet& a, const PauliSet& b) {
  PauliSet out(a.n());
  for (const Pauli& p : a)
    for (const Pauli& q : b) out.insert(p * q);
  return out;
}

// Klein composition of split labels: i is the identity and any two distinct
// nontrivial labels compose to the third.
char compose_labels(char a, char b) {
  if (a == 'i') return b;
  if (b == 'i') return a;
  if (a == b) return 'i';
  return static_cast<char>('x' ^ 'y' ^ 'z' ^ a ^ b);
}

}  // namespace

bool is_commuting(const PauliSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (commute(s[i], s[j]) != 1) return false;
  return true;
}

bool is_maximally_commuting(const PauliSet& s) {
  if (s.empty() || s.n() >= 64) return false;
  if (s.size() != std::size_t{1} << s.n()) return false;
  return is_commuting(s);
}

const PauliSet& Decomposition::part(char label) const {
  switch (label) {
    case 'i':
      return c_i;
    case 'x':
      return c_x;
    case 'y':
      return c_y;
    case 'z':
      return c_z;
    default:
      throw ArgumentError(std::string("part: unknown label '") + label + "'");
  }
}

PauliSet Decomposition::reassemble() const {
  PauliSet out(c_i.n() + 1);
  for (char label : {'i', 'x', 'y', 'z'})
    for (const Pauli& p : tensor_prefix(label, part(label))) out.insert(p);
  return out;
}

Decomposition decompose(const PauliSet& s) {
  if (s.n() < 2) throw DimensionError("decompose: needs at least 2 factors");
  Decomposition d;
  d.c_i = PauliSet(s.n() - 1);
  d.c_x = PauliSet(s.n() - 1);
  d.c_y = PauliSet(s.n() - 1);
  d.c_z = PauliSet(s.n() - 1);
  for (const Pauli& p : s) {
    const Pauli rest = tail(p);
    switch (p.factor(0)) {
      case 'i':
        d.c_i.insert(rest);
        break;
      case 'x':
        d.c_x.insert(rest);
        break;
      case 'y':
        d.c_y.insert(rest);
        break;
      default:
        d.c_z.insert(rest);
        break;
    }
  }
  for (const auto& perm : kLabelPerms) {
    bool seen_empty = false;
    bool ok = true;
    for (char label : perm) {
      if (d.part(label).empty())
        seen_empty = true;
      else if (seen_empty)
        ok = false;
    }
    if (ok) {
      d.uvw = perm;
      break;
    }
  }
  return d;
}

PauliSet lift_commuting(const PauliSet& s, char label) {
  if (label != 'x' && label != 'y' && label != 'z')
    throw ArgumentError("lift_commuting: label must be x, y, or z");
  if (!is_maximally_commuting(s))
    throw ArgumentError("lift_commuting: input must be maximally commuting");
  PauliSet out(s.n() + 1);
  for (const Pauli& p : tensor_prefix('i', s)) out.insert(p);
  for (const Pauli& p : tensor_prefix(label, s)) out.insert(p);
  return out;
}

PauliSet compose_commuting(const PauliSet& c_i, const PauliSet& c_x,
                           const PauliSet& c_y, const PauliSet& c_z,
                           std::array<char, 3> perm) {
  {
    std::array<char, 3> sorted_perm = perm;
    if (sorted_perm[0] > sorted_perm[1]) std::swap(sorted_perm[0], sorted_perm[1]);
    if (sorted_perm[1] > sorted_perm[2]) std::swap(sorted_perm[1], sorted_perm[2]);
    if (sorted_perm[0] > sorted_perm[1]) std::swap(sorted_perm[0], sorted_perm[1]);
    if (sorted_perm != std::array<char, 3>{'x', 'y', 'z'})
      throw ArgumentError("compose_commuting: perm must permute x, y, z");
  }
  const std::array<const PauliSet*, 4> parts = {&c_i, &c_x, &c_y, &c_z};
  for (const PauliSet* part : parts)
    if (part->empty())
      throw ArgumentError("compose_commuting: parts must be nonempty");
  const std::size_t q = c_i.n();
  for (const PauliSet* part : parts)
    if (part->n() != q)
      throw DimensionError("compose_commuting: parts differ in factor count");
  const bool size_ok =
      q < 64 && c_i.size() == std::size_t{1} << (q - 1) &&
      c_x.size() == c_i.size() && c_y.size() == c_i.size() &&
      c_z.size() == c_i.size();
  if (!size_ok)
    throw ArgumentError(
        "compose_commuting: parts must all have size 2^(q-1) over q factors");
  if (auto bad = find_split_violation(parts))
    throw ArgumentError("compose_commuting: " + bad->a.str() + " and " +
                        bad->b.str() +
                        (bad->expected == 1 ? " must commute"
                                            : " must anticommute"));
  // Slot sigma_x carries the part named perm[0], and so on.
  auto named = [&](char name) -> const PauliSet& {
    if (name == 'x') return c_x;
    if (name == 'y') return c_y;
    return c_z;
  };
  PauliSet out(q + 1);
  for (const Pauli& p : tensor_prefix('i', c_i)) out.insert(p);
  for (const Pauli& p : tensor_prefix('x', named(perm[0]))) out.insert(p);
  for (const Pauli& p : tensor_prefix('y', named(perm[1]))) out.insert(p);
  for (const Pauli& p : tensor_prefix('z', named(perm[2]))) out.insert(p);
  return out;
}

CommutingStructureReport verify_commuting_structure(const PauliSet& s) {
  if (!is_maximally_commuting(s))
    throw ArgumentError(
        "verify_commuting_structure: input must be maximally commuting");
  if (s.n() < 2)
    throw ArgumentError("verify_commuting_structure: needs at least 2 factors");

  const Decomposition d = decompose(s);
  const std::size_t m = s.n() - 1;
  if (!d.c_i.contains(Pauli(m)))
    throw InternalError(
        "verify_commuting_structure: identity missing from the i part");

  const std::array<const PauliSet*, 4> parts = {&d.c_i, &d.part(d.uvw[0]),
                                                &d.part(d.uvw[1]),
                                                &d.part(d.uvw[2])};
  if (auto bad = find_split_violation(parts))
    throw InternalError("verify_commuting_structure: " + bad->a.str() +
                        " and " + bad->b.str() +
                        (bad->expected == 1 ? " must commute"
                                            : " must anticommute"));

  std::size_t nonempty = 0;
  for (char label : d.uvw)
    if (!d.part(label).empty()) ++nonempty;
  if (nonempty != 1 && nonempty != 3)
    throw InternalError("verify_commuting_structure: " +
                        std::to_string(nonempty) +
                        " nonempty split parts; expected 1 or 3");

  CommutingStructureReport report;
  report.uvw = d.uvw;
  report.part_sizes = {d.c_i.size(), d.part(d.uvw[0]).size(),
                       d.part(d.uvw[1]).size(), d.part(d.uvw[2]).size()};
  report.subsets_verified = 0;

  auto check_subset = [&](const PauliSet& sub, const char* what) {
    if (!is_maximally_commuting(sub))
      throw InternalError(std::string("verify_commuting_structure: ") + what +
                          " is not maximally commuting");
    if (sub.n() >= 2) {
      const auto inner = verify_commuting_structure(sub);
      report.subsets_verified += 1 + inner.subsets_verified;
    }
  };

  if (nonempty == 1) {
    report.case_label = 'b';
    if (d.c_i != d.u())
      throw InternalError(
          "verify_commuting_structure: the two nonempty parts must coincide");
    check_subset(d.c_i, "the i part");
    return report;
  }

  report.case_label = 'c';
  const std::size_t quarter = std::size_t{1} << (s.n() - 2);
  const std::array<char, 4> labels = {'i', d.uvw[0], d.uvw[1], d.uvw[2]};
  for (char label : labels)
    if (d.part(label).size() != quarter)
      throw InternalError(std::string("verify_commuting_structure: part ") +
                          label + " has size " +
                          std::to_string(d.part(label).size()) + "; expected " +
                          std::to_string(quarter));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b)
      for (const Pauli& p : d.part(labels[a]))
        if (d.part(labels[b]).contains(p))
          throw InternalError(std::string("verify_commuting_structure: parts ") +
                              labels[a] + " and " + labels[b] +
                              " share the element " + p.str());
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a; b < 4; ++b) {
      const char target = compose_labels(labels[a], labels[b]);
      if (product_set(d.part(labels[a]), d.part(labels[b])) != d.part(target))
        throw InternalError(
            std::string("verify_commuting_structure: products of parts ") +
            labels[a] + " and " + labels[b] + " do not fill part " + target);
    }
  for (char label : d.uvw) {
    PauliSet sub(m);
    for (const Pauli& p : d.c_i) sub.insert(p);
    for (const Pauli& p : d.part(label)) sub.insert(p);
    check_subset(sub, "a part union");
  }
  return report;
}

PauliSet random_maximal_commuting(std::size_t n, Rng& rng,
                                  std::size_t max_rank) {
  if (n == 0)
    throw ArgumentError("random_maximal_commuting: n must be positive");
  if (n > max_rank)
    throw CapacityError("random_maximal_commuting: n=" + std::to_string(n) +
                        " exceeds the expansion budget of " +
                        std::to_string(max_rank));
  // Each round draws uniformly from the valid continuations, whose count
  // depends only on how many generators are already fixed; every maximal
  // subgroup is reached with equal probability.
  PauliSet gens(n);
  Gf2Basis basis(n);
  while (gens.size() < n) {
    const Pauli p = random_pauli(n, rng);
    bool ok = true;
    for (const Pauli& g : gens)
      if (commute(p, g) != 1) {
        ok = false;
        break;
      }
    if (ok && !basis.spans(p)) {
      basis.add(p);
      gens.insert(p);
    }
  }
  return generated_set(gens, max_rank);
}

}  // namespace pauliset
