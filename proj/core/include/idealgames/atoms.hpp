// atoms.hpp
// Fixed-width atom sets and the error taxonomy shared by all modules.
#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ig {

// input_error: malformed or invariant-violating input (CLI exit code 2)
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// contract_error: caller violated an operation precondition (CLI exit code 2)
struct contract_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// resource_error: configured search or memory budget exhausted (CLI exit code 3)
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxAtoms = 64;

// set of atoms 0..63 over a fixed ground ordering
struct AtomSet {
  std::uint64_t bits = 0;

  static AtomSet single(int a) { return AtomSet{std::uint64_t{1} << a}; }
  static AtomSet first_n(int n) {
    return AtomSet{n >= kMaxAtoms ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }
  static AtomSet from(const std::vector<int>& atoms) {
    AtomSet s;
    for (int a : atoms) s.insert(a);
    return s;
  }

  bool contains(int a) const { return (bits >> a) & 1; }
  void insert(int a) { bits |= std::uint64_t{1} << a; }
  void erase(int a) { bits &= ~(std::uint64_t{1} << a); }
  int count() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }

  bool subset_of(const AtomSet& o) const { return (bits & ~o.bits) == 0; }
  bool proper_subset_of(const AtomSet& o) const { return subset_of(o) && bits != o.bits; }

  // least atom, or -1 when empty
  int least() const { return bits == 0 ? -1 : std::countr_zero(bits); }

  AtomSet operator|(const AtomSet& o) const { return AtomSet{bits | o.bits}; }
  AtomSet operator&(const AtomSet& o) const { return AtomSet{bits & o.bits}; }
  AtomSet operator-(const AtomSet& o) const { return AtomSet{bits & ~o.bits}; }
  AtomSet& operator|=(const AtomSet& o) { bits |= o.bits; return *this; }
  AtomSet& operator&=(const AtomSet& o) { bits &= o.bits; return *this; }
  bool operator==(const AtomSet& o) const = default;
  auto operator<=>(const AtomSet& o) const = default;

  std::vector<int> to_vector() const {
    std::vector<int> v;
    for (std::uint64_t b = bits; b != 0; b &= b - 1) v.push_back(std::countr_zero(b));
    return v;
  }
};

std::string to_string(const AtomSet& s);

}  // namespace ig
