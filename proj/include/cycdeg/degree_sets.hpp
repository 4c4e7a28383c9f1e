#pragma once
// Degree data of T^n - 1 over a base field: the multiset of irreducible
// factor degrees, the set D_F(n) of attainable divisor degrees, and the
// practicality / efficiency / optimality predicates built on it.

#include "cycdeg/arith.hpp"
#include "cycdeg/bitset.hpp"
#include "cycdeg/fields.hpp"

namespace cycdeg {

struct DegreeItem {
  u64 value;  // phi_f(d), degree of each irreducible factor of Phi_d
  u64 count;  // phi(d) / phi_f(d), how many such factors
  friend bool operator==(const DegreeItem&, const DegreeItem&) = default;
};

// One item per divisor d of n, in divisor-ascending order (d = 1 included).
// The values weighted by counts always sum to n.
struct DegreeMultiset {
  u64 n;
  std::vector<DegreeItem> items;
};

// bits[m] set iff T^n - 1 has a divisor of degree m over the field.
// bits[0] and bits[n] are always set, and the set is symmetric about n/2.
struct DegreeSet {
  u64 n;
  Bitset bits;
};

// counts[m] = min(cap, number of monic divisors of T^n - 1 of degree m
// over the rationals).
struct CappedProfile {
  u64 n;
  u32 cap;
  std::vector<u8> counts;
};

DegreeMultiset degree_multiset(const FieldSpec& field, u64 n, const SpfTable& table);

DegreeSet degree_set(const FieldSpec& field, u64 n, const SpfTable& table);

// Sorted list of the members of the set.
std::vector<u64> degrees(const DegreeSet& ds);

// {"n":6,"degrees":[0,1,...]} for n <= 512; the hex bitstring form
// {"n":...,"bits":"..."} above that (low bit of the string = degree 0).
std::string to_json(const DegreeSet& ds);

// Plain JSON integer array of the saturated counts, e.g. "[1,1,1,1]".
std::string to_json(const CappedProfile& profile);

// Core subset-sum decisions on a degree multiset. Both are exact; the
// first restricts the bitset to min(m, n-m)+1 bits using the complement
// symmetry, the second walks values ascending and maintains the largest
// gap-free prefix, rejecting at the first unfillable gap.
bool items_contain_degree(const std::vector<DegreeItem>& items, u64 n, u64 m);
bool items_cover_all_degrees(std::vector<DegreeItem> items, u64 n);

// True iff m is the degree of some divisor of T^n - 1 over the field.
bool contains_degree(const FieldSpec& field, u64 n, u64 m, const SpfTable& table);

// True iff T^n - 1 has a divisor of every degree 0..n over the field.
bool is_f_practical(const FieldSpec& field, u64 n, const SpfTable& table);

// Practical numbers in the sum-of-distinct-divisors sense: every
// m <= sigma(n) is a sum of distinct divisors of n. Decided by the
// chain condition p_j <= 1 + sigma(prod of earlier prime powers).
bool is_practical(u64 n, const SpfTable& table);

// Largest leading block of the prime factorization passing the chain
// condition; equals n exactly when n is practical, and is the largest
// practical divisor of n.
u64 practical_component(u64 n, const SpfTable& table);

// Coefficients of prod over d | n of (1 + x^phi(d)), i.e. degree counts of
// the monic rational divisors of T^n - 1, saturated at cap (cap <= 255).
CappedProfile capped_divisor_profile(u64 n, u32 cap, const SpfTable& table);

// At most one monic rational divisor of each degree.
bool is_q_efficient(u64 n, const SpfTable& table);

// Same decision on precomputed (divisor, phi) pairs; counts must have room
// for n+1 bytes and is clobbered. Exits at the first repeated degree.
bool q_efficient_from_pairs(const std::vector<DivisorPhi>& pairs, u64 n, u8* counts);

// Exactly one monic rational divisor of each degree: the divisor count
// 2^d(n) matches n+1 and every degree is attained.
bool is_q_optimal(u64 n, const SpfTable& table);

}  // namespace cycdeg
