#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pauliset/errors.hpp"
#include "pauliset/rng.hpp"

namespace pauliset {

/// One element of the phase-free n-factor Pauli group. Factor k is held in
/// bit k of two packed word arrays: i=(0,0), x=(1,0), y=(1,1), z=(0,1) as
/// (x bit, z bit). Two elements commute iff the symplectic form
/// popcount(x_p & z_q) + popcount(z_p & x_q) is even, and the product is the
/// coordinatewise XOR.
class Pauli {
 public:
  /// The identity element on n factors (n >= 1).
  explicit Pauli(std::size_t n);

  /// Parses a factor string such as "xiz"; the leftmost character is
  /// factor 0. Only lowercase i/x/y/z are accepted.
  static Pauli parse(std::string_view text);

  /// Builds an element on n <= 64 factors directly from packed bits.
  static Pauli from_bits(std::size_t n, std::uint64_t x_bits,
                         std::uint64_t z_bits);

  std::size_t n() const { return n_; }
  bool is_identity() const;

  char factor(std::size_t k) const;
  void set_factor(std::size_t k, char c);
  bool x_bit(std::size_t k) const;
  bool z_bit(std::size_t k) const;

  std::string str() const;

  /// +1 if this commutes with other, -1 if it anticommutes.
  int commute(const Pauli& other) const;

  Pauli operator*(const Pauli& other) const;
  Pauli& operator*=(const Pauli& other);

  bool operator==(const Pauli& other) const;
  bool operator!=(const Pauli& other) const { return !(*this == other); }

  /// Canonical order: the x words compared as a single little-endian
  /// unsigned value (factor 0 is the least significant bit), ties broken the
  /// same way on the z words.
  int compare(const Pauli& other) const;
  bool operator<(const Pauli& other) const { return compare(other) < 0; }

  std::size_t hash() const;

  const std::vector<std::uint64_t>& x_words() const { return x_; }
  const std::vector<std::uint64_t>& z_words() const { return z_; }

 private:
  void check_same_n(const Pauli& other) const;

  std::size_t n_;
  std::vector<std::uint64_t> x_, z_;
};

Pauli parse_pauli(std::string_view text);
std::string format_pauli(const Pauli& p);
int commute(const Pauli& p, const Pauli& q);
Pauli product(const Pauli& p, const Pauli& q);

/// Concatenates factor strings: the result acts as a on factors
/// 0..a.n()-1 and as b on the remaining b.n() factors.
Pauli tensor(const Pauli& a, const Pauli& b);

/// Uniform element of the n-factor group, drawn from 2n independent fair
/// bits.
Pauli random_pauli(std::size_t n, Rng& rng);

/// A duplicate-free sequence of equal-size Paulis. Iteration follows
/// insertion order; equality ignores order. Inserting a duplicate is a
/// silent no-op, so parsed input collapses to proper set semantics.
class PauliSet {
 public:
  PauliSet() = default;
  explicit PauliSet(std::size_t n) : n_(n) {}

  /// Parses the line format: one factor string per line; blank lines and
  /// lines starting with '#' are ignored; duplicates are dropped.
  static PauliSet parse(std::string_view text);

  /// Appends p unless already present; returns whether it was added.
  bool insert(const Pauli& p);
  bool contains(const Pauli& p) const;

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }

  /// Factor count. Zero when the set is empty and was never given one.
  std::size_t n() const { return n_; }

  const Pauli& operator[](std::size_t idx) const { return elems_[idx]; }
  std::vector<Pauli>::const_iterator begin() const { return elems_.begin(); }
  std::vector<Pauli>::const_iterator end() const { return elems_.end(); }

  bool operator==(const PauliSet& other) const;
  bool operator!=(const PauliSet& other) const { return !(*this == other); }

  /// Copy with the elements rearranged into canonical order.
  PauliSet sorted() const;

  /// Line format, one element per line in iteration order.
  std::string str() const;

 private:
  std::size_t n_ = 0;
  std::vector<Pauli> elems_;
  std::unordered_map<std::size_t, std::vector<std::uint32_t>> index_;
};

/// sigma_label tensor s, elementwise, preserving order.
PauliSet tensor_prefix(char label, const PauliSet& s);

/// Product over all elements. The identity for an empty set, which must then
/// carry a factor count.
Pauli product_of_set(const PauliSet& s);

}  // namespace pauliset
