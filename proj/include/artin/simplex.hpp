#ifndef ARTIN_SIMPLEX_HPP
#define ARTIN_SIMPLEX_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>

namespace artin {

// A simplex is a subset of the vertex set S, held as a bitmask (vertex i
// present iff bit i is set). The empty simplex is valid and has degree 0.
// Ordering by the raw mask is the lexicographic order on bitstrings with the
// lowest vertex varying fastest, which fixes all basis orders.
struct Simplex {
  std::uint64_t bits = 0;

  constexpr Simplex() = default;
  constexpr explicit Simplex(std::uint64_t b) : bits(b) {}

  int degree() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  bool contains(int v) const { return (bits >> v) & 1u; }
  bool subset_of(Simplex o) const { return (bits & ~o.bits) == 0; }

  Simplex with(int v) const { return Simplex(bits | (std::uint64_t(1) << v)); }
  Simplex without(int v) const { return Simplex(bits & ~(std::uint64_t(1) << v)); }
  Simplex toggled(int v) const { return Simplex(bits ^ (std::uint64_t(1) << v)); }

  auto operator<=>(const Simplex&) const = default;
};

inline Simplex simplex_of(std::initializer_list<int> vs) {
  Simplex s;
  for (int v : vs) s = s.with(v);
  return s;
}

// All vertices from a (inclusive) to b (inclusive); empty when a > b.
inline Simplex vertex_range(int a, int b) {
  if (a > b) return Simplex();
  std::uint64_t hi = (b + 1 >= 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << (b + 1)) - 1);
  std::uint64_t lo = (std::uint64_t(1) << a) - 1;
  return Simplex(hi & ~lo);
}

inline int lowest_vertex(Simplex s) { return std::countr_zero(s.bits); }

// Bitstring with the lowest vertex leftmost, matching the tables' "1^f0..."
// patterns.
inline std::string bitstring(Simplex s, int width) {
  std::string out(static_cast<size_t>(width), '0');
  for (int i = 0; i < width; ++i)
    if (s.contains(i)) out[static_cast<size_t>(i)] = '1';
  return out;
}

inline Simplex parse_bitstring(const std::string& str) {
  Simplex s;
  for (size_t i = 0; i < str.size(); ++i)
    if (str[i] == '1') s = s.with(static_cast<int>(i));
  return s;
}

}  // namespace artin

#endif
