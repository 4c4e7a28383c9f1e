#include <stdexcept>
#include <numeric>

#include "cycdeg/arith.hpp"
#include "doctest.h"

using namespace cycdeg;

TEST_SUITE("arith") {

TEST_CASE("spf table basics") {
  SpfTable t(10);
  CHECK(t.spf(9) == 3);
  CHECK(t.spf(7) == 7);
  CHECK(t.spf(10) == 2);
  CHECK(t.spf(2) == 2);
  CHECK(t.primes() == std::vector<u32>{2, 3, 5, 7});
  CHECK_THROWS_AS(SpfTable(1), std::invalid_argument);
  CHECK_THROWS_AS(SpfTable(0), std::invalid_argument);
}

TEST_CASE("spf entries are prime and divide") {
  SpfTable t(5000);
  for (u64 n = 2; n <= 5000; ++n) {
    const u64 p = t.spf(n);
    CHECK(n % p == 0);
    CHECK(t.spf(p) == p);  // p itself is prime
  }
}

TEST_CASE("factorize") {
  SpfTable t(100000);
  CHECK(factorize(1, t).empty());
  CHECK(factorize(12, t) == Factorization{{2, 2}, {3, 1}});
  CHECK(factorize(65535, t) == Factorization{{3, 1}, {5, 1}, {17, 1}, {257, 1}});
  CHECK(factorize(99991, t) == Factorization{{99991, 1}});  // prime
  CHECK_THROWS_AS(factorize(0, t), std::invalid_argument);
}

TEST_CASE("factorize beyond the table falls back to trial division") {
  SpfTable t(300);
  CHECK(factorize(9991, t) == Factorization{{97, 1}, {103, 1}});
  CHECK(factorize(65537, t) == Factorization{{65537, 1}});  // cofactor <= limit^2
  CHECK(factorize(4294967295ull, t) ==
        Factorization{{3, 1}, {5, 1}, {17, 1}, {257, 1}, {65537, 1}});
  SpfTable small(10);
  CHECK_THROWS_AS(factorize(101 * 103, small), std::invalid_argument);
}

TEST_CASE("divisors") {
  SpfTable t(100);
  CHECK(divisors(factorize(1, t)) == std::vector<u64>{1});
  CHECK(divisors(factorize(6, t)) == std::vector<u64>{1, 2, 3, 6});
  CHECK(divisors(factorize(12, t)) == std::vector<u64>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("divisor list round-trips with the factorization") {
  SpfTable t(2000);
  for (u64 n = 1; n <= 2000; ++n) {
    const Factorization f = factorize(n, t);
    const auto divs = divisors(f);
    CHECK(divs.size() == divisor_count(f));
    for (u64 d : divs) CHECK(n % d == 0);
    CHECK(std::is_sorted(divs.begin(), divs.end()));
  }
}

TEST_CASE("euler phi, sigma, lambda examples") {
  SpfTable t(300);
  CHECK(euler_phi(factorize(1, t)) == 1);
  CHECK(euler_phi(factorize(12, t)) == 4);
  CHECK(euler_phi(factorize(257, t)) == 256);
  CHECK(sigma(factorize(1, t)) == 1);
  CHECK(sigma(factorize(6, t)) == 12);
  CHECK(sigma(factorize(10, t)) == 18);
  CHECK(carmichael_lambda(factorize(8, t)) == 2);
  CHECK(carmichael_lambda(factorize(15, t)) == 4);
  CHECK(carmichael_lambda(factorize(1, t)) == 1);
  CHECK(carmichael_lambda(factorize(16, t)) == 4);
}

TEST_CASE("phi summed over divisors gives n back") {
  SpfTable t(10000);
  for (u64 n = 1; n <= 10000; ++n) {
    u64 total = 0;
    for (const auto& [d, phi] : divisor_phi_list(factorize(n, t))) total += phi;
    CHECK(total == n);
  }
}

TEST_CASE("divisor_phi_list agrees with per-divisor phi") {
  SpfTable t(2000);
  for (u64 n = 1; n <= 2000; ++n) {
    const auto pairs = divisor_phi_list(factorize(n, t));
    const auto divs = divisors(factorize(n, t));
    REQUIRE(pairs.size() == divs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      CHECK(pairs[i].d == divs[i]);
      CHECK(pairs[i].phi == euler_phi(factorize(divs[i], t)));
    }
  }
}

TEST_CASE("mult_order examples and errors") {
  SpfTable t(1000);
  CHECK(mult_order(2, 7, t) == 3);
  CHECK(mult_order(2, 1, t) == 1);
  CHECK(mult_order(3, 80, t) == 4);
  CHECK_THROWS_AS(mult_order(2, 4, t), std::invalid_argument);
  CHECK_THROWS_AS(mult_order(3, 0, t), std::invalid_argument);
}

TEST_CASE("mult_order matches naive repeated multiplication") {
  SpfTable t(500);
  for (u64 a : {2, 3, 5}) {
    for (u64 n = 1; n <= 500; ++n) {
      if (std::gcd(a, n) != 1) continue;
      u64 naive = 1, acc = a % n;
      if (n > 1) {
        while (acc != 1) {
          acc = acc * a % n;
          ++naive;
        }
      }
      CHECK(mult_order(a, n, t) == naive);
    }
  }
}

TEST_CASE("generalized_order examples") {
  SpfTable t(100);
  CHECK(generalized_order(2, 12, t) == 2);
  CHECK(generalized_order(2, 8, t) == 1);
  CHECK(generalized_order(3, 7, t) == 6);
  CHECK(generalized_order(2, 1, t) == 1);
}

TEST_CASE("generalized order divides lambda") {
  SpfTable t(10000);
  for (u64 a : {2, 3, 5, 7}) {
    for (u64 n = 1; n <= 10000; ++n) {
      const u64 lam = carmichael_lambda(factorize(n, t));
      CHECK(lam % generalized_order(a, n, t) == 0);
    }
  }
}

TEST_CASE("divisor_count_up_to") {
  SpfTable t(100);
  CHECK(divisor_count_up_to(factorize(12, t), 3) == 3);
  CHECK(divisor_count_up_to(factorize(12, t), 12) == 6);
  CHECK(divisor_count_up_to(factorize(7, t), 1) == 1);
  CHECK(divisor_count_up_to(factorize(7, t), 0) == 0);
}

TEST_CASE("euler_phi_table matches the direct computation") {
  SpfTable t(3000);
  const auto phi = euler_phi_table(t);
  CHECK(phi[1] == 1);
  for (u64 n = 1; n <= 3000; ++n) CHECK(phi[n] == euler_phi(factorize(n, t)));
}

TEST_CASE("is_prime") {
  CHECK(!is_prime(0));
  CHECK(!is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(65537));
  CHECK(!is_prime(65535));
  CHECK(is_prime(2147483647ull));            // 2^31 - 1
  CHECK(!is_prime(4294967297ull));           // 641 * 6700417
  CHECK(is_prime(18446744073709551557ull));  // largest 64-bit prime
  SpfTable t(10000);
  for (u64 n = 2; n <= 10000; ++n) CHECK(is_prime(n) == (t.spf(n) == n));
}

TEST_CASE("pow_mod and mul_mod handle wide operands") {
  const u64 m = 18446744073709551557ull;
  CHECK(mul_mod(m - 1, m - 1, m) == 1);
  CHECK(pow_mod(2, m - 1, m) == 1);  // Fermat, the modulus is prime
}

}  // TEST_SUITE
