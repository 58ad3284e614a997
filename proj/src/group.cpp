#include "pauliset/group.hpp"

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "pauliset/errors.hpp"

namespace pauliset {

namespace {

bool row_bit(const std::vector<std::uint64_t>& row, std::size_t bit) {
  return (row[bit >> 6] >> (bit & 63)) & 1;
}

void xor_into(std::vector<std::uint64_t>& row,
              const std::vector<std::uint64_t>& other) {
  for (std::size_t w = 0; w < row.size(); ++w) row[w] ^= other[w];
}

constexpr std::size_t kNoPivot = static_cast<std::size_t>(-1);

std::size_t lowest_set_bit(const std::vector<std::uint64_t>& row) {
  for (std::size_t w = 0; w < row.size(); ++w)
    if (row[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
  return kNoPivot;
}

}  // namespace

std::vector<std::uint64_t> Gf2Basis::to_row(const Pauli& p) const {
  if (p.n() != n_)
    throw DimensionError("Gf2Basis: element has " + std::to_string(p.n()) +
                         " factors, basis expects " + std::to_string(n_));
  std::vector<std::uint64_t> row(p.x_words());
  row.insert(row.end(), p.z_words().begin(), p.z_words().end());
  return row;
}

bool Gf2Basis::add(const Pauli& p) {
  auto row = to_row(p);
  // Rows are kept sorted by pivot; reducing in ascending order never
  // reintroduces a bit at an already cleared pivot.
  for (const auto& [pivot, brow] : rows_)
    if (row_bit(row, pivot)) xor_into(row, brow);
  const std::size_t pivot = lowest_set_bit(row);
  if (pivot == kNoPivot) return false;
  auto pos = rows_.begin();
  while (pos != rows_.end() && pos->first < pivot) ++pos;
  rows_.insert(pos, {pivot, std::move(row)});
  return true;
}

bool Gf2Basis::spans(const Pauli& p) const {
  auto row = to_row(p);
  for (const auto& [pivot, brow] : rows_)
    if (row_bit(row, pivot)) xor_into(row, brow);
  return lowest_set_bit(row) == kNoPivot;
}

std::size_t rank(const PauliSet& g) {
  if (g.empty()) return 0;
  Gf2Basis basis(g.n());
  for (const Pauli& p : g) basis.add(p);
  return basis.rank();
}

bool is_minimal_generating(const PauliSet& g) {
  if (g.empty()) return true;
  if (g.contains(Pauli(g.n()))) return g.size() == 1;
  return rank(g) == g.size();
}

PauliSet generated_set(const PauliSet& g, std::size_t max_rank) {
  if (g.empty()) {
    if (g.n() == 0)
      throw ArgumentError("generated_set: empty set with unknown dimension");
    PauliSet out(g.n());
    out.insert(Pauli(g.n()));
    return out;
  }
  PauliSet gens(g.n());
  Gf2Basis basis(g.n());
  for (const Pauli& p : g)
    if (basis.add(p)) gens.insert(p);
  if (gens.size() > max_rank)
    throw CapacityError("generated_set: rank " + std::to_string(gens.size()) +
                        " exceeds the budget of " + std::to_string(max_rank));
  // Subset-counter order: element c is the product of the generators picked
  // out by the bits of c, so each generator doubles the prefix built so far.
  std::vector<Pauli> elems;
  elems.reserve(std::size_t{1} << gens.size());
  elems.emplace_back(g.n());
  for (const Pauli& gen : gens) {
    const std::size_t half = elems.size();
    for (std::size_t j = 0; j < half; ++j) elems.push_back(gen * elems[j]);
  }
  PauliSet out(g.n());
  for (const Pauli& p : elems) out.insert(p);
  return out;
}

PauliSet minimal_generating_set(const PauliSet& s) {
  if (s.empty() && s.n() == 0)
    throw ArgumentError("minimal_generating_set: empty set with unknown dimension");
  PauliSet out(s.n());
  Gf2Basis basis(s.n());
  for (const Pauli& p : s.sorted())
    if (basis.add(p)) out.insert(p);
  if (out.empty()) out.insert(Pauli(s.n()));
  return out;
}

GeneratedSubgroup generated_subgroup(const PauliSet& s) {
  GeneratedSubgroup out;
  out.generators = minimal_generating_set(s);
  out.rank = rank(s);
  return out;
}

std::size_t CommutativityMap::f() const {
  std::size_t count = 0;
  for (int s : signs)
    if (s == 1) ++count;
  return count;
}

std::uint64_t CommutativityMap::mask() const {
  if (signs.size() > 64)
    throw CapacityError("CommutativityMap::mask: more than 64 base elements");
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < signs.size(); ++k)
    if (signs[k] == -1) mask |= std::uint64_t{1} << k;
  return mask;
}

CommutativityMap commutativity_map(const Pauli& p, const PauliSet& base) {
  CommutativityMap out;
  out.base = base;
  out.signs.reserve(base.size());
  for (const Pauli& b : base) out.signs.push_back(commute(p, b));
  return out;
}

CommutativityMap subset_flip(const CommutativityMap& v, const PauliSet& t) {
  for (const Pauli& x : t)
    if (!v.base.contains(x))
      throw ArgumentError("subset_flip: t is not a subset of the base");
  const int inside = (t.size() % 2 == 0) ? -1 : 1;  // (-1)^(|t|-1)
  const int outside = -inside;                      // (-1)^|t|
  CommutativityMap out{v.base, v.signs};
  for (std::size_t k = 0; k < out.signs.size(); ++k)
    out.signs[k] *= t.contains(out.base[k]) ? inside : outside;
  return out;
}

std::map<std::uint64_t, std::uint64_t> map_census(const PauliSet& g,
                                                  std::size_t max_n) {
  if (g.empty()) throw ArgumentError("map_census: generating set is empty");
  if (!is_minimal_generating(g))
    throw ArgumentError("map_census: set is not minimal generating");
  const std::size_t n = g.n();
  if (g.contains(Pauli(n)))
    throw ArgumentError("map_census: {identity} is excluded");
  if (n > max_n)
    throw CapacityError("map_census: n=" + std::to_string(n) +
                        " exceeds the enumeration budget of " +
                        std::to_string(max_n));
  if (n > 31) throw CapacityError("map_census: n too large to enumerate");

  const std::size_t m = g.size();
  std::vector<std::uint64_t> gx(m), gz(m);
  for (std::size_t k = 0; k < m; ++k) {
    gx[k] = g[k].x_words()[0];
    gz[k] = g[k].z_words()[0];
  }
  std::map<std::uint64_t, std::uint64_t> counts;
  const std::uint64_t lim = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < lim; ++x) {
    for (std::uint64_t z = 0; z < lim; ++z) {
      std::uint64_t mask = 0;
      for (std::size_t k = 0; k < m; ++k) {
        const std::uint64_t overlap = (x & gz[k]) ^ (z & gx[k]);
        mask |= static_cast<std::uint64_t>(std::popcount(overlap) & 1) << k;
      }
      ++counts[mask];
    }
  }
  return counts;
}

std::optional<Pauli> coset_anticommuting_element(const PauliSet& t,
                                                 const Pauli& p,
                                                 bool validate) {
  if (validate) {
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = a + 1; b < t.size(); ++b)
        if (commute(t[a], t[b]) != -1)
          throw ArgumentError(
              "coset_anticommuting_element: base set must pairwise "
              "anticommute");
    if (!is_minimal_generating(t))
      throw ArgumentError(
          "coset_anticommuting_element: base set must be minimal generating");
  }
  std::vector<const Pauli*> comm, anti;
  for (const Pauli& x : t) (commute(p, x) == 1 ? comm : anti).push_back(&x);
  const bool t_odd = t.size() % 2 != 0;
  if (t_odd && comm.size() % 2 != 0) return std::nullopt;
  // Two correction subsets can qualify; prefer the smaller one.
  const bool use_comm =
      (!t_odd && comm.size() % 2 == 0) || (t_odd && comm.size() <= t.size() / 2);
  Pauli out = p;
  for (const Pauli* x : use_comm ? comm : anti) out *= *x;
  return out;
}

}  // namespace pauliset
