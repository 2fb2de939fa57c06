#pragma once

// Ordered enumeration of primes p in [lo, hi] together with the complete
// factorization of p-1, obtained by sieving the shifted segment values with
// primes <= sqrt(hi).  No factoring ever happens; the residual left after the
// sieving pass is either 1 or a single prime above sqrt(hi).

#include "spsp/bigmath.hpp"
#include "spsp/signatures.hpp"

namespace spsp {

struct PrimeWithFactoredPred {
  u64 p = 0;
  FactoredNumber p_minus_1;
};

std::vector<u32> small_primes_upto(u32 n);

class PrimeStream {
 public:
  static constexpr u64 kDefaultSegment = u64(1) << 20;

  PrimeStream(u64 lo, u64 hi, u64 segment_size = kDefaultSegment);

  // Yields the next prime record in increasing order; false when exhausted.
  bool next(PrimeWithFactoredPred& out);

 private:
  void fill_segment();

  u64 lo_, hi_, seg_size_;
  u64 next_lo_;
  std::vector<u32> base_primes_;
  std::vector<PrimeWithFactoredPred> buf_;
  size_t idx_ = 0;
};

// lcm of the multiplicative orders of all bases mod p; p must not be a base.
u64 lambda_p(const PrimeWithFactoredPred& rec, const BaseVector& nu);

}  // namespace spsp
