#pragma once
// Dense univariate polynomials over small prime fields, with a complete,
// self-checking factorization of T^n - 1. This is the ground-truth oracle
// the degree-set machinery is tested against: it factors honestly via
// distinct-degree / equal-degree splitting and never consults the order
// formulas it is meant to validate.

#include <string>
#include <vector>

#include "cycdeg/arith.hpp"
#include "cycdeg/degree_sets.hpp"

namespace cycdeg {

struct PolyFp {
  u32 p;
  std::vector<u8> coeffs;  // coeffs[i] multiplies x^i; empty means zero

  int deg() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  friend bool operator==(const PolyFp&, const PolyFp&) = default;
};

PolyFp poly_zero(u32 p);
PolyFp poly_one(u32 p);
PolyFp poly_x(u32 p);
PolyFp poly_x_pow_minus_one(u32 p, u32 n);

PolyFp poly_add(const PolyFp& a, const PolyFp& b);
PolyFp poly_sub(const PolyFp& a, const PolyFp& b);
PolyFp poly_mul(const PolyFp& a, const PolyFp& b);
// Quotient and remainder; the divisor must be nonzero.
std::pair<PolyFp, PolyFp> poly_divmod(const PolyFp& a, const PolyFp& b);
PolyFp poly_mod(const PolyFp& a, const PolyFp& b);
PolyFp poly_gcd(PolyFp a, PolyFp b);  // monic
PolyFp poly_make_monic(PolyFp a);
PolyFp poly_pow_mod(const PolyFp& base, u64 e, const PolyFp& mod);

// "T^3+T+1" form, highest degree first; "0" for the zero polynomial.
std::string to_string(const PolyFp& f);

// Total order: by degree, then by coefficients from the top down.
bool poly_less(const PolyFp& a, const PolyFp& b);

// Monic irreducible factors of a monic squarefree polynomial, sorted.
// Splitting elements are drawn from a fixed lexicographic sequence, so the
// run is deterministic.
std::vector<PolyFp> factor_squarefree_fp(const PolyFp& f);

struct PolyFactor {
  PolyFp factor;
  u32 multiplicity;
  friend bool operator==(const PolyFactor&, const PolyFactor&) = default;
};

// Complete factorization of T^n - 1 over the field with p elements,
// p in {2, 3, 5} and n <= 64. The p-power part of n becomes a uniform
// multiplicity: T^n - 1 = (T^n0 - 1)^(p^k) with n0 coprime to p. Every
// invocation re-multiplies the factors and verifies the product.
std::vector<PolyFactor> factor_tn_minus_1_fp(u32 p, u32 n);

// Reduction of the d-th cyclotomic polynomial mod p, via the exact
// divisions Phi_d = (x^d - 1) / prod of the lower Phi_e.
PolyFp cyclotomic_fp(u32 d, u32 p);

// Degree set of T^n - 1 read off the true factorization: a bounded
// subset-sum over (degree, multiplicity) of the irreducible factors,
// computed with a plain quadratic table. Test use only.
DegreeSet oracle_degree_set_fp(u32 p, u32 n);

}  // namespace cycdeg
