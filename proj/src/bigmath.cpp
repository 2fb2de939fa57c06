#include "spsp/bigmath.hpp"

#include <bit>

namespace spsp {

u64 FactoredNumber::multiply_out() const {
  u64 r = 1;
  for (auto [p, e] : factors)
    for (u32 i = 0; i < e; ++i) r *= p;
  return r;
}

u64 powmod(u64 a, u64 e, u64 n) {
  u64 r = n == 1 ? 0 : 1;
  a %= n;
  while (e) {
    if (e & 1) r = mulmod(r, a, n);
    a = mulmod(a, a, n);
    e >>= 1;
  }
  return r;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 lcm_u64(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  u64 g = gcd_u64(a, b);
  u128 l = u128(a / g) * b;
  if (l > ~u64(0)) throw std::overflow_error("lcm exceeds 64 bits");
  return static_cast<u64>(l);
}

int v2_u64(u64 n) {
  if (n == 0) throw std::invalid_argument("v2 of zero");
  return std::countr_zero(n);
}

Natural mod_pow(const Natural& base, const Natural& exponent, const Natural& modulus) {
  if (modulus < 2) throw std::invalid_argument("mod_pow: modulus must be >= 2");
  Natural r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

Natural big_gcd(const Natural& a, const Natural& b) {
  if (a == 0 && b == 0) throw std::invalid_argument("big_gcd(0, 0)");
  Natural r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

int v2(const Natural& n) {
  if (n == 0) throw std::invalid_argument("v2 of zero");
  return static_cast<int>(mpz_scan1(n.get_mpz_t(), 0));
}

u64 multiplicative_order(u64 a, u64 p, const FactoredNumber& p_minus_1) {
  if (a % p == 0) throw std::invalid_argument("multiplicative_order: p divides a");
  u64 d = p - 1;
  for (auto [q, e] : p_minus_1.factors) {
    for (u32 i = 0; i < e; ++i) {
      if (d % q != 0) break;
      if (powmod(a, d / q, p) == 1)
        d /= q;
      else
        break;
    }
  }
  return d;
}

int jacobi(i64 a, u64 n) {
  if (n % 2 == 0) throw std::invalid_argument("jacobi: n must be odd");
  int sign = 1;
  u64 ua;
  if (a < 0) {
    // (-1/n) = (-1)^((n-1)/2)
    if (n % 4 == 3) sign = -sign;
    ua = static_cast<u64>(-a) % n;
  } else {
    ua = static_cast<u64>(a) % n;
  }
  while (ua != 0) {
    while (ua % 2 == 0) {
      ua >>= 1;
      if (n % 8 == 3 || n % 8 == 5) sign = -sign;
    }
    std::swap(ua, n);
    if (ua % 4 == 3 && n % 4 == 3) sign = -sign;
    ua %= n;
  }
  return n == 1 ? sign : 0;
}

int jacobi(const Natural& a, const Natural& n) {
  if (mpz_even_p(n.get_mpz_t())) throw std::invalid_argument("jacobi: n must be odd");
  return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

bool strong_probable_prime(u64 n, u64 a) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("strong_probable_prime: n must be odd >= 3");
  a %= n;
  if (a == 0) return true;  // n | a: the test is vacuous
  if (gcd_u64(a, n) > 1) return false;
  u64 d = n - 1;
  int s = v2_u64(d);
  d >>= s;
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool strong_probable_prime(const Natural& n, const Natural& a) {
  if (n < 3 || mpz_even_p(n.get_mpz_t()))
    throw std::invalid_argument("strong_probable_prime: n must be odd >= 3");
  Natural ar = a % n;
  if (ar == 0) return true;
  if (big_gcd(ar, n) > 1) return false;
  Natural d = n - 1;
  int s = v2(d);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Natural x = mod_pow(ar, d, n);
  Natural nm1 = n - 1;
  if (x == 1 || x == nm1) return true;
  for (int i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == nm1) return true;
  }
  return false;
}

const std::array<u32, 13>& prime_bases() {
  static const std::array<u32, 13> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  return bases;
}

int spsp_base_count(u64 n, int m_max) {
  const auto& bases = prime_bases();
  int count = 0;
  for (int i = 0; i < m_max && i < static_cast<int>(bases.size()); ++i) {
    if (!strong_probable_prime(n, bases[i])) break;
    ++count;
  }
  return count;
}

int spsp_base_count(const Natural& n, int m_max) {
  const auto& bases = prime_bases();
  int count = 0;
  for (int i = 0; i < m_max && i < static_cast<int>(bases.size()); ++i) {
    if (!strong_probable_prime(n, Natural(bases[i]))) break;
    ++count;
  }
  return count;
}

int spsp_base_count_u128(u128 n, int m_max) {
  if (n <= ~u64(0)) return spsp_base_count(static_cast<u64>(n), m_max);
  return spsp_base_count(to_natural(n), m_max);
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u32 b : prime_bases()) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  for (int i = 0; i < 12; ++i)
    if (!strong_probable_prime(n, prime_bases()[i])) return false;
  return true;
}

Natural to_natural(u128 v) {
  Natural hi(static_cast<unsigned long>(v >> 64));
  Natural r = (hi << 64) + static_cast<unsigned long>(v & ~u64(0));
  return r;
}

u128 natural_to_u128(const Natural& v) {
  if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 128)
    throw std::overflow_error("value out of u128 range");
  Natural hi, lo;
  mpz_fdiv_q_2exp(hi.get_mpz_t(), v.get_mpz_t(), 64);
  mpz_fdiv_r_2exp(lo.get_mpz_t(), v.get_mpz_t(), 64);
  return (u128(mpz_get_ui(hi.get_mpz_t())) << 64) | mpz_get_ui(lo.get_mpz_t());
}

u128 parse_u128(const std::string& decimal) {
  if (decimal.empty()) throw std::invalid_argument("empty number");
  u128 v = 0;
  const u128 max = ~u128(0);
  for (char c : decimal) {
    if (c < '0' || c > '9') throw std::invalid_argument("not a decimal number: " + decimal);
    int d = c - '0';
    if (v > (max - d) / 10) throw std::overflow_error("number out of range: " + decimal);
    v = v * 10 + d;
  }
  return v;
}

std::string to_string_u128(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.push_back(static_cast<char>('0' + int(v % 10)));
    v /= 10;
  }
  return {s.rbegin(), s.rend()};
}

}  // namespace spsp
