#include "cycdeg/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cycdeg {

SpfTable::SpfTable(u64 limit) : limit_(limit) {
  if (limit < 2) throw std::invalid_argument("SpfTable: limit must be at least 2");
  if (limit > kMaxLimit)
    throw std::invalid_argument("SpfTable: limit exceeds the " +
                                std::to_string(kMaxLimit) + " cap");
  spf_.assign(limit + 1, 0);
  for (u64 i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<u32>(i);
      primes_.push_back(static_cast<u32>(i));
    }
    for (u32 p : primes_) {
      if (p > spf_[i] || i * p > limit) break;
      spf_[i * p] = p;
    }
  }
}

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 pow_mod(u64 a, u64 e, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses decide primality for every n < 2^64.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i + 1 < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Factorization factorize(u64 n, const SpfTable& table) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization f;
  if (n <= table.limit()) {
    while (n > 1) {
      u64 p = table.spf(n);
      u32 e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      f.push_back({p, e});
    }
    return f;
  }
  u64 m = n;
  for (u32 q : table.primes()) {
    u64 p = q;
    if (p * p > m) break;
    if (m % p == 0) {
      u32 e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      f.push_back({p, e});
    }
  }
  if (m > 1) {
    u64 lim = table.limit();
    if (m > lim * lim)
      throw std::invalid_argument("factorize: n exceeds the factorization range of the sieve");
    f.push_back({m, 1});
  }
  std::sort(f.begin(), f.end(), [](const PrimePower& a, const PrimePower& b) {
    return a.prime < b.prime;
  });
  return f;
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> divs{1};
  for (const auto& [p, e] : f) {
    const std::size_t base = divs.size();
    u64 pk = 1;
    for (u32 j = 0; j < e; ++j) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<DivisorPhi> divisor_phi_list(const Factorization& f) {
  std::vector<DivisorPhi> divs{{1, 1}};
  for (const auto& [p, e] : f) {
    const std::size_t base = divs.size();
    u64 pk = 1, phi_pk = 1;
    for (u32 j = 0; j < e; ++j) {
      phi_pk = (j == 0) ? p - 1 : phi_pk * p;
      pk *= p;
      for (std::size_t i = 0; i < base; ++i)
        divs.push_back({divs[i].d * pk, divs[i].phi * phi_pk});
    }
  }
  std::sort(divs.begin(), divs.end(),
            [](const DivisorPhi& a, const DivisorPhi& b) { return a.d < b.d; });
  return divs;
}

u64 euler_phi(const Factorization& f) {
  u64 r = 1;
  for (const auto& [p, e] : f) {
    r *= p - 1;
    for (u32 j = 1; j < e; ++j) r *= p;
  }
  return r;
}

u64 sigma(const Factorization& f) {
  u64 r = 1;
  for (const auto& [p, e] : f) {
    u64 term = 1, pk = 1;
    for (u32 j = 0; j < e; ++j) {
      pk *= p;
      term += pk;
    }
    r *= term;
  }
  return r;
}

u64 carmichael_lambda(const Factorization& f) {
  u64 r = 1;
  for (const auto& [p, e] : f) {
    u64 part;
    if (p == 2) {
      part = (e == 1) ? 1 : (e == 2) ? 2 : u64{1} << (e - 2);
    } else {
      part = p - 1;
      for (u32 j = 1; j < e; ++j) part *= p;
    }
    r = std::lcm(r, part);
  }
  return r;
}

u64 divisor_count(const Factorization& f) {
  u64 r = 1;
  for (const auto& pp : f) r *= pp.exponent + 1;
  return r;
}

u64 divisor_count_up_to(const Factorization& f, u64 y) {
  u64 count = 0;
  for (u64 d : divisors(f)) {
    if (d > y) break;
    ++count;
  }
  return count;
}

u64 mult_order(u64 a, u64 n, const SpfTable& table) {
  if (n == 0) throw std::invalid_argument("mult_order: modulus must be positive");
  if (std::gcd(a, n) != 1)
    throw std::invalid_argument("mult_order: arguments must be coprime");
  if (n == 1) return 1;
  u64 k = carmichael_lambda(factorize(n, table));
  const u64 base = a % n;
  for (const auto& [q, e] : factorize(k, table)) {
    for (u32 j = 0; j < e; ++j) {
      if (k % q == 0 && pow_mod(base, k / q, n) == 1)
        k /= q;
      else
        break;
    }
  }
  return k;
}

u64 generalized_order(u64 a, u64 n, const SpfTable& table) {
  if (n == 0) throw std::invalid_argument("generalized_order: n must be positive");
  u64 m = n;
  for (u64 g = std::gcd(m, a); g != 1; g = std::gcd(m, a)) m /= g;
  return mult_order(a, m, table);
}

std::vector<u32> euler_phi_table(const SpfTable& table) {
  const u64 limit = table.limit();
  std::vector<u32> phi(limit + 1, 0);
  phi[1] = 1;
  for (u64 i = 2; i <= limit; ++i) {
    u64 p = table.spf(i);
    u64 m = i / p;
    phi[i] = static_cast<u32>(phi[m] * (m % p == 0 ? p : p - 1));
  }
  return phi;
}

}  // namespace cycdeg
