#include "spsp/signatures.hpp"

#include <algorithm>

namespace spsp {

BaseVector BaseVector::first(int m) {
  if (m < 1) throw std::invalid_argument("base vector needs m >= 1");
  BaseVector nu;
  for (u64 c = 2; static_cast<int>(nu.bases.size()) < m; ++c) {
    bool prime = true;
    for (u64 d = 2; d * d <= c; ++d)
      if (c % d == 0) {
        prime = false;
        break;
      }
    if (prime) nu.bases.push_back(static_cast<u32>(c));
  }
  return nu;
}

bool BaseVector::contains(u64 p) const {
  return std::find(bases.begin(), bases.end(), p) != bases.end();
}

Signature::Signature(std::initializer_list<int> entries) {
  if (entries.size() > kMaxBases) throw std::invalid_argument("signature too long");
  m_ = static_cast<std::uint8_t>(entries.size());
  size_t i = 0;
  for (int v : entries) e_[i++] = static_cast<std::uint8_t>(v);
}

void Signature::resize(int m) {
  if (m < 0 || m > kMaxBases) throw std::invalid_argument("bad signature length");
  for (int i = m; i < kMaxBases; ++i) e_[static_cast<size_t>(i)] = 0;
  m_ = static_cast<std::uint8_t>(m);
}

std::uint8_t Signature::max_entry() const {
  std::uint8_t mx = 0;
  for (int i = 0; i < m_; ++i) mx = std::max(mx, e_[static_cast<size_t>(i)]);
  return mx;
}

std::string Signature::to_string() const {
  std::string s = "(";
  for (int i = 0; i < m_; ++i) {
    if (i) s += ",";
    s += std::to_string(int((*this)[i]));
  }
  return s + ")";
}

Signature compute_signature(u64 p, const FactoredNumber& p_minus_1, const BaseVector& nu) {
  Signature sig;
  sig.resize(nu.m());
  for (int i = 0; i < nu.m(); ++i) {
    u64 a = nu.bases[static_cast<size_t>(i)];
    if (a % p == 0) throw std::invalid_argument("compute_signature: p divides a base");
    u64 ord = multiplicative_order(a, p, p_minus_1);
    sig.set(i, static_cast<std::uint8_t>(v2_u64(ord)));
  }
  return sig;
}

u32 hash_signature(const Signature& sig) {
  std::uint8_t mx = sig.max_entry();
  if (mx == 0) return 0;
  u32 h = 0;
  for (int i = 0; i < sig.size(); ++i) {
    h <<= 1;
    if (sig[i] == mx) h |= 1;
  }
  return h;
}

std::vector<CharacterPlan> character_plans(const Signature& sig) {
  const int m = sig.size();
  const int c = sig.max_entry();
  const int sig2 = sig[0];  // entry for base 2
  const BaseVector nu = BaseVector::first(m);

  std::vector<CharacterPlan> plans;

  // v2(q-1) > c_star: every order valuation sits strictly below v2(q-1), so
  // all characters are +1 and q == 1 (mod 2^(c_star+1)).
  CharacterPlan greater;
  greater.scenario = Scenario::GreaterValuation;
  greater.c_star = c;
  greater.two_adic_modulus = u32(1) << (c + 1);
  greater.two_adic_residue = 1;
  greater.base2_eps = +1;
  for (int i = 1; i < m; ++i)
    greater.per_base.emplace_back(nu.bases[static_cast<size_t>(i)], +1);
  plans.push_back(std::move(greater));

  if (c >= 1) {
    // v2(q-1) == c_star: (a/q) = -1 exactly for the entries attaining c_star.
    // q == 1+2^c (mod 2^(c+1)); for c <= 2 this narrows to one class mod 8
    // once the base-2 character is honored, and for c == 2 or c >= 3 the
    // forced value of (2/q) can contradict the base-2 entry, dropping the
    // plan entirely.
    CharacterPlan equal;
    equal.scenario = Scenario::EqualValuation;
    equal.c_star = c;
    equal.base2_eps = (sig2 == c) ? -1 : +1;
    bool consistent = true;
    if (c == 1) {
      equal.two_adic_modulus = 8;
      equal.two_adic_residue = (sig2 == 1) ? 3 : 7;  // (2/q): -1 at 3, +1 at 7
    } else if (c == 2) {
      // q == 5 (mod 8) forces (2/q) = -1, i.e. v2(ord(2)) = v2(q-1) = 2
      equal.two_adic_modulus = 8;
      equal.two_adic_residue = 5;
      consistent = (sig2 == 2);
    } else {
      // q == 1+2^c (mod 2^(c+1)) lies in 1 (mod 8), forcing (2/q) = +1
      equal.two_adic_modulus = u32(1) << (c + 1);
      equal.two_adic_residue = (u32(1) << c) + 1;
      consistent = (sig2 != c);
    }
    if (consistent) {
      for (int i = 1; i < m; ++i)
        equal.per_base.emplace_back(nu.bases[static_cast<size_t>(i)], sig[i] == c ? -1 : +1);
      plans.push_back(std::move(equal));
    }
  }
  return plans;
}

std::vector<u32> allowed_residues(u32 a, int eps, int q_mod_4) {
  if (a < 3 || a % 2 == 0) throw std::invalid_argument("allowed_residues: a must be an odd prime");
  // (a/q) = s * (q/a) with s = -1 iff a == q == 3 (mod 4)
  int s = (a % 4 == 3 && q_mod_4 == 3) ? -1 : +1;
  int want = eps * s;
  std::vector<u32> rs;
  for (u32 r = 1; r < a; ++r)
    if (jacobi(r, a) == want) rs.push_back(r);
  return rs;
}

}  // namespace spsp
