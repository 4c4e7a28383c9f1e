#pragma once
// Sieve-backed toolkit for elementary multiplicative arithmetic on 64-bit
// integers: factorization, divisor expansion, phi / sigma / lambda, and
// multiplicative orders.

#include <cstdint>
#include <vector>

namespace cycdeg {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

struct PrimePower {
  u64 prime;
  u32 exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization sorted by prime ascending; 1 factors as the empty list.
using Factorization = std::vector<PrimePower>;

struct DivisorPhi {
  u64 d;
  u64 phi;
};

// Smallest-prime-factor table built with a linear sieve. Immutable after
// construction; safe to share read-only across threads.
class SpfTable {
 public:
  // Throws std::invalid_argument for limit < 2 or limit > kMaxLimit.
  explicit SpfTable(u64 limit);

  u64 limit() const { return limit_; }
  u32 spf(u64 n) const { return spf_[n]; }  // valid for 2 <= n <= limit
  const std::vector<u32>& primes() const { return primes_; }

  static constexpr u64 kMaxLimit = 100'000'000;  // soft memory cap (~400 MB)

 private:
  u64 limit_;
  std::vector<u32> spf_;
  std::vector<u32> primes_;
};

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 a, u64 e, u64 m);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

// Factors n. Direct spf walk for n <= table.limit(); above that, trial
// division by the sieved primes. The leftover cofactor can be certified
// prime only while it is at most limit()^2; beyond that the call throws
// std::invalid_argument.
Factorization factorize(u64 n, const SpfTable& table);

// All divisors, ascending. Count equals the product of (exponent + 1).
std::vector<u64> divisors(const Factorization& f);

// (d, phi(d)) for every divisor d, sorted by d ascending.
std::vector<DivisorPhi> divisor_phi_list(const Factorization& f);

u64 euler_phi(const Factorization& f);
u64 sigma(const Factorization& f);
u64 carmichael_lambda(const Factorization& f);
u64 divisor_count(const Factorization& f);

// #{d | n : d <= y}
u64 divisor_count_up_to(const Factorization& f, u64 y);

// Least k >= 1 with a^k = 1 (mod n); requires gcd(a, n) = 1. Found by
// factoring lambda(n) and stripping primes, never by iterating powers.
u64 mult_order(u64 a, u64 n, const SpfTable& table);

// mult_order(a, n') where n' is the largest divisor of n coprime to a.
// Defined for every n >= 1 and always divides lambda(n).
u64 generalized_order(u64 a, u64 n, const SpfTable& table);

// phi(i) for all i <= table.limit(), one pass over the spf table.
std::vector<u32> euler_phi_table(const SpfTable& table);

}  // namespace cycdeg
