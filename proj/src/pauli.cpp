#include "pauliset/pauli.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace pauliset {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

std::uint64_t mix64(std::uint64_t v) {
  v += 0x9e3779b97f4a7c15ULL;
  v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
  v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
  return v ^ (v >> 31);
}

void encode_factor(char c, bool& xb, bool& zb, std::size_t position) {
  switch (c) {
    case 'i': xb = false; zb = false; return;
    case 'x': xb = true;  zb = false; return;
    case 'y': xb = true;  zb = true;  return;
    case 'z': xb = false; zb = true;  return;
    default:
      throw ParseError("invalid Pauli character '" + std::string(1, c) +
                       "' at position " + std::to_string(position + 1) +
                       " (expected lowercase i, x, y, or z)");
  }
}

}  // namespace

Pauli::Pauli(std::size_t n) : n_(n) {
  if (n == 0) throw ArgumentError("a Pauli needs at least one factor");
  x_.assign(word_count(n), 0);
  z_.assign(word_count(n), 0);
}

Pauli Pauli::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty Pauli string");
  Pauli p(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    bool xb = false, zb = false;
    encode_factor(text[k], xb, zb, k);
    if (xb) p.x_[k / kWordBits] |= std::uint64_t{1} << (k % kWordBits);
    if (zb) p.z_[k / kWordBits] |= std::uint64_t{1} << (k % kWordBits);
  }
  return p;
}

Pauli Pauli::from_bits(std::size_t n, std::uint64_t x_bits,
                       std::uint64_t z_bits) {
  if (n > kWordBits) throw ArgumentError("from_bits supports at most 64 factors");
  Pauli p(n);
  const std::uint64_t mask =
      n == kWordBits ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  p.x_[0] = x_bits & mask;
  p.z_[0] = z_bits & mask;
  return p;
}

bool Pauli::is_identity() const {
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (x_[i] != 0 || z_[i] != 0) return false;
  }
  return true;
}

char Pauli::factor(std::size_t k) const {
  const bool xb = x_bit(k);
  const bool zb = z_bit(k);
  if (xb) return zb ? 'y' : 'x';
  return zb ? 'z' : 'i';
}

void Pauli::set_factor(std::size_t k, char c) {
  if (k >= n_) throw ArgumentError("factor index out of range");
  bool xb = false, zb = false;
  encode_factor(c, xb, zb, k);
  const std::uint64_t bit = std::uint64_t{1} << (k % kWordBits);
  x_[k / kWordBits] = (x_[k / kWordBits] & ~bit) | (xb ? bit : 0);
  z_[k / kWordBits] = (z_[k / kWordBits] & ~bit) | (zb ? bit : 0);
}

bool Pauli::x_bit(std::size_t k) const {
  if (k >= n_) throw ArgumentError("factor index out of range");
  return (x_[k / kWordBits] >> (k % kWordBits)) & 1;
}

bool Pauli::z_bit(std::size_t k) const {
  if (k >= n_) throw ArgumentError("factor index out of range");
  return (z_[k / kWordBits] >> (k % kWordBits)) & 1;
}

std::string Pauli::str() const {
  std::string out(n_, 'i');
  for (std::size_t k = 0; k < n_; ++k) out[k] = factor(k);
  return out;
}

int Pauli::commute(const Pauli& other) const {
  check_same_n(other);
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < x_.size(); ++i) {
    acc ^= (x_[i] & other.z_[i]) ^ (z_[i] & other.x_[i]);
  }
  return (std::popcount(acc) & 1) ? -1 : 1;
}

Pauli Pauli::operator*(const Pauli& other) const {
  Pauli out = *this;
  out *= other;
  return out;
}

Pauli& Pauli::operator*=(const Pauli& other) {
  check_same_n(other);
  for (std::size_t i = 0; i < x_.size(); ++i) {
    x_[i] ^= other.x_[i];
    z_[i] ^= other.z_[i];
  }
  return *this;
}

bool Pauli::operator==(const Pauli& other) const {
  return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
}

int Pauli::compare(const Pauli& other) const {
  check_same_n(other);
  for (std::size_t i = x_.size(); i-- > 0;) {
    if (x_[i] != other.x_[i]) return x_[i] < other.x_[i] ? -1 : 1;
  }
  for (std::size_t i = z_.size(); i-- > 0;) {
    if (z_[i] != other.z_[i]) return z_[i] < other.z_[i] ? -1 : 1;
  }
  return 0;
}

std::size_t Pauli::hash() const {
  std::uint64_t h = mix64(n_);
  for (const auto w : x_) h = mix64(h ^ w);
  for (const auto w : z_) h = mix64(h ^ w);
  return static_cast<std::size_t>(h);
}

void Pauli::check_same_n(const Pauli& other) const {
  if (n_ != other.n_) {
    throw DimensionError("factor count mismatch: " + std::to_string(n_) +
                         " vs " + std::to_string(other.n_));
  }
}

Pauli parse_pauli(std::string_view text) { return Pauli::parse(text); }

std::string format_pauli(const Pauli& p) { return p.str(); }

int commute(const Pauli& p, const Pauli& q) { return p.commute(q); }

Pauli product(const Pauli& p, const Pauli& q) { return p * q; }

Pauli tensor(const Pauli& a, const Pauli& b) {
  Pauli out(a.n() + b.n());
  for (std::size_t k = 0; k < a.n(); ++k) {
    const char c = a.factor(k);
    if (c != 'i') out.set_factor(k, c);
  }
  for (std::size_t k = 0; k < b.n(); ++k) {
    const char c = b.factor(k);
    if (c != 'i') out.set_factor(a.n() + k, c);
  }
  return out;
}

Pauli random_pauli(std::size_t n, Rng& rng) {
  Pauli p(n);
  std::size_t k = 0;
  while (k < n) {
    // One generator word covers 32 factors, two fair bits each.
    std::uint64_t bits = rng.next();
    for (std::size_t j = 0; j < 32 && k < n; ++j, ++k) {
      const bool xb = bits & 1;
      const bool zb = bits & 2;
      bits >>= 2;
      const char c = xb ? (zb ? 'y' : 'x') : (zb ? 'z' : 'i');
      if (c != 'i') p.set_factor(k, c);
    }
  }
  return p;
}

PauliSet PauliSet::parse(std::string_view text) {
  PauliSet out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
      line.remove_prefix(1);
    }
    if (line.empty() || line.front() == '#') continue;
    Pauli p = [&] {
      try {
        return Pauli::parse(line);
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }();
    if (!out.empty() && p.n() != out.n()) {
      throw DimensionError("line " + std::to_string(line_no) +
                           ": factor count " + std::to_string(p.n()) +
                           " does not match earlier lines (" +
                           std::to_string(out.n()) + ")");
    }
    out.insert(p);
  }
  return out;
}

bool PauliSet::insert(const Pauli& p) {
  if (elems_.empty() && n_ == 0) {
    n_ = p.n();
  } else if (p.n() != n_) {
    throw DimensionError("factor count mismatch: set has " +
                         std::to_string(n_) + ", element has " +
                         std::to_string(p.n()));
  }
  const std::size_t h = p.hash();
  auto& bucket = index_[h];
  for (const auto idx : bucket) {
    if (elems_[idx] == p) return false;
  }
  bucket.push_back(static_cast<std::uint32_t>(elems_.size()));
  elems_.push_back(p);
  return true;
}

bool PauliSet::contains(const Pauli& p) const {
  if (elems_.empty() || p.n() != n_) return false;
  const auto it = index_.find(p.hash());
  if (it == index_.end()) return false;
  for (const auto idx : it->second) {
    if (elems_[idx] == p) return true;
  }
  return false;
}

bool PauliSet::operator==(const PauliSet& other) const {
  if (size() != other.size()) return false;
  if (empty()) return true;
  if (n_ != other.n_) return false;
  for (const auto& p : elems_) {
    if (!other.contains(p)) return false;
  }
  return true;
}

PauliSet PauliSet::sorted() const {
  std::vector<Pauli> copy = elems_;
  std::sort(copy.begin(), copy.end());
  PauliSet out(n_);
  for (const auto& p : copy) out.insert(p);
  return out;
}

std::string PauliSet::str() const {
  std::string out;
  for (const auto& p : elems_) {
    out += p.str();
    out += '\n';
  }
  return out;
}

PauliSet tensor_prefix(char label, const PauliSet& s) {
  if (label != 'i' && label != 'x' && label != 'y' && label != 'z') {
    throw ArgumentError("tensor_prefix label must be one of i, x, y, z");
  }
  Pauli head(1);
  head.set_factor(0, label);
  PauliSet out(s.n() + 1);
  for (const auto& p : s) out.insert(tensor(head, p));
  return out;
}

Pauli product_of_set(const PauliSet& s) {
  if (s.empty()) {
    if (s.n() == 0) {
      throw ArgumentError(
          "product of an empty set needs a factor count; construct the set "
          "with one");
    }
    return Pauli(s.n());
  }
  Pauli acc(s.n());
  for (const auto& p : s) acc *= p;
  return acc;
}

}  // namespace pauliset
