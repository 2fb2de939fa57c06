#pragma once

// Prime signatures: the length-m vector of 2-adic valuations of the
// multiplicative orders of the first m prime bases, plus the translation of
// a signature into quadratic-character residue classes used by the wheel.

#include "spsp/bigmath.hpp"

namespace spsp {

// The first m primes used as test bases; bases[0] is always 2.
struct BaseVector {
  std::vector<u32> bases;

  static BaseVector first(int m);
  int m() const { return static_cast<int>(bases.size()); }
  bool contains(u64 p) const;
};

class Signature {
 public:
  static constexpr int kMaxBases = 13;

  Signature() = default;
  Signature(std::initializer_list<int> entries);

  int size() const { return m_; }
  void resize(int m);
  std::uint8_t operator[](int i) const { return e_[static_cast<size_t>(i)]; }
  void set(int i, std::uint8_t v) { e_[static_cast<size_t>(i)] = v; }

  std::uint8_t max_entry() const;
  bool operator==(const Signature&) const = default;

  std::string to_string() const;  // "(3,4,0,...)"

 private:
  std::uint8_t m_ = 0;
  std::array<std::uint8_t, kMaxBases> e_{};
};

// entry_i = v2(ord_p(a_i)); p must be an odd prime not dividing any base.
Signature compute_signature(u64 p, const FactoredNumber& p_minus_1, const BaseVector& nu);

// The bucket index: 0 for the all-zero signature, otherwise the bits
// [entry_i == max entry] read with the first entry most significant.
u32 hash_signature(const Signature& sig);

enum class Scenario { EqualValuation, GreaterValuation };

// One sieving scenario for primes q with signature sigma, fixing the 2-adic
// residue class of q and the quadratic character (a/q) for every odd base.
// EqualValuation covers v2(q-1) == c_star, GreaterValuation v2(q-1) > c_star.
struct CharacterPlan {
  Scenario scenario;
  int c_star;
  u32 two_adic_modulus;  // power of two
  u32 two_adic_residue;
  int base2_eps;                             // required value of (2/q)
  std::vector<std::pair<u32, int>> per_base;  // (odd base, required (a/q))
};

// The scenarios covering every prime with the given signature: always the
// GreaterValuation plan, plus the EqualValuation plan when c_star >= 1 and it
// is consistent with the base-2 entry.
std::vector<CharacterPlan> character_plans(const Signature& sig);

// The (a-1)/2 nonzero residues r mod a such that (a/q) = eps for every prime
// q == r (mod a) with the given q mod 4, via quadratic reciprocity.
std::vector<u32> allowed_residues(u32 a, int eps, int q_mod_4);

}  // namespace spsp
