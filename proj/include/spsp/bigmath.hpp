#pragma once

// Arbitrary-precision and word-size number theory primitives.
//
// The big-integer type is GMP's mpz_class: its multiplication, division and
// gcd are all subquadratic, which the gcd-chain filter relies on.  The search
// loops themselves run on 64-bit words; only h-values, their gcd chains and
// large witness inputs go through mpz.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spsp {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

using Natural = mpz_class;

// A positive integer together with its complete prime factorization,
// primes strictly increasing.
struct FactoredNumber {
  u64 value = 1;
  std::vector<std::pair<u64, u32>> factors;  // (prime, exponent)

  u64 multiply_out() const;
};

// ---- word-size helpers ----------------------------------------------------

inline u64 mulmod(u64 a, u64 b, u64 n) { return static_cast<u64>(u128(a) * b % n); }

u64 powmod(u64 a, u64 e, u64 n);
u64 gcd_u64(u64 a, u64 b);
u64 lcm_u64(u64 a, u64 b);  // throws std::overflow_error if it leaves 64 bits

// largest e with 2^e | n; n must be nonzero
int v2_u64(u64 n);
inline u64 odd_part_u64(u64 n) { return n >> v2_u64(n); }

// ---- spec operations ------------------------------------------------------

// base^exponent mod modulus; modulus >= 2 required
Natural mod_pow(const Natural& base, const Natural& exponent, const Natural& modulus);

// gcd; (0, 0) is rejected
Natural big_gcd(const Natural& a, const Natural& b);

// 2-adic valuation; n >= 1 required
int v2(const Natural& n);

// Smallest d >= 1 with a^d == 1 (mod p).  Starts from p-1 and strips prime
// factors while the power stays 1; requires the factorization of p-1.
u64 multiplicative_order(u64 a, u64 p, const FactoredNumber& p_minus_1);

// Jacobi symbol (a/n) for odd n >= 1.
int jacobi(i64 a, u64 n);
int jacobi(const Natural& a, const Natural& n);

// Strong probable-prime test of n to base a.  n odd >= 3.  A base sharing a
// nontrivial factor with n fails by definition; a base divisible by n passes
// vacuously.
bool strong_probable_prime(u64 n, u64 a);
bool strong_probable_prime(const Natural& n, const Natural& a);

// Largest m' <= m_max such that n is a strong probable prime to each of the
// first m' prime bases.
int spsp_base_count(u64 n, int m_max);
int spsp_base_count(const Natural& n, int m_max);
int spsp_base_count_u128(u128 n, int m_max);

// Deterministic primality for 64-bit n (strong tests to the first 12 prime
// bases; the smallest composite passing all of them exceeds 2^64).
bool is_prime_u64(u64 n);

// The first 13 primes, usable as test bases.
const std::array<u32, 13>& prime_bases();

// ---- 128-bit plumbing -----------------------------------------------------

Natural to_natural(u128 v);
u128 natural_to_u128(const Natural& v);  // throws if out of range
u128 parse_u128(const std::string& decimal);
std::string to_string_u128(u128 v);

}  // namespace spsp
