#include "cycdeg/degree_sets.hpp"

#include <algorithm>
#include <iostream>
#include <stdexcept>

namespace cycdeg {

DegreeMultiset degree_multiset(const FieldSpec& field, u64 n, const SpfTable& table) {
  if (n == 0) throw std::invalid_argument("degree_multiset: n must be positive");
  DegreeMultiset ms{n, {}};
  const auto pairs = divisor_phi_list(factorize(n, table));
  ms.items.reserve(pairs.size());
  for (const auto& [d, phi] : pairs) {
    u64 value;
    switch (field.kind()) {
      case FieldSpec::Kind::rationals:
        value = phi;
        break;
      case FieldSpec::Kind::prime_field:
        value = generalized_order(field.characteristic(), d, table);
        break;
      case FieldSpec::Kind::quadratic:
        value = (d % field.conductor() == 0) ? phi / 2 : phi;
        break;
      default:
        throw std::logic_error("degree_multiset: unreachable");
    }
    if (value == 0 || phi % value != 0)
      throw std::logic_error("degree_multiset: factor degree does not divide phi");
    ms.items.push_back({value, phi / value});
  }
  return ms;
}

namespace {

// reachable |= reachable shifted by the item sums, count bounded via binary
// decomposition so each item costs O(log count) passes.
void apply_item(Bitset& bits, u64 value, u64 count) {
  u64 chunk = 1;
  while (chunk <= count) {
    bits.shift_left_or(chunk * value);
    count -= chunk;
    chunk <<= 1;
  }
  if (count > 0) bits.shift_left_or(count * value);
}

}  // namespace

DegreeSet degree_set(const FieldSpec& field, u64 n, const SpfTable& table) {
  const DegreeMultiset ms = degree_multiset(field, n, table);
  Bitset bits(n + 1);
  bits.set(0);
  for (const auto& [value, count] : ms.items) apply_item(bits, value, count);
  return DegreeSet{n, std::move(bits)};
}

std::vector<u64> degrees(const DegreeSet& ds) {
  std::vector<u64> out;
  out.reserve(ds.bits.count());
  for (u64 m = 0; m <= ds.n; ++m)
    if (ds.bits.test(m)) out.push_back(m);
  return out;
}

std::string to_json(const DegreeSet& ds) {
  std::string s = "{\"n\":" + std::to_string(ds.n);
  if (ds.n <= 512) {
    s += ",\"degrees\":[";
    bool first = true;
    for (u64 m : degrees(ds)) {
      if (!first) s += ",";
      s += std::to_string(m);
      first = false;
    }
    s += "]}";
  } else {
    s += ",\"bits\":\"" + ds.bits.to_hex() + "\"}";
  }
  return s;
}

std::string to_json(const CappedProfile& profile) {
  std::string s = "[";
  for (std::size_t i = 0; i < profile.counts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(profile.counts[i]);
  }
  s += "]";
  return s;
}

bool items_contain_degree(const std::vector<DegreeItem>& items, u64 n, u64 m) {
  if (m > n) return false;
  const u64 target = std::min(m, n - m);
  if (target == 0) return true;
  Bitset bits(target + 1);
  bits.set(0);
  for (const auto& [value, count] : items) {
    if (value > target) continue;
    apply_item(bits, value, std::min(count, target / value));
    if (bits.test(target)) return true;
  }
  return bits.test(target);
}

bool items_cover_all_degrees(std::vector<DegreeItem> items, u64 n) {
  std::sort(items.begin(), items.end(),
            [](const DegreeItem& a, const DegreeItem& b) { return a.value < b.value; });
  u64 reach = 0;  // all of [0, reach] attainable
  for (const auto& [value, count] : items) {
    if (value > reach + 1) return false;
    reach += value * count;
  }
  return reach == n;
}

bool contains_degree(const FieldSpec& field, u64 n, u64 m, const SpfTable& table) {
  return items_contain_degree(degree_multiset(field, n, table).items, n, m);
}

bool is_f_practical(const FieldSpec& field, u64 n, const SpfTable& table) {
  return items_cover_all_degrees(degree_multiset(field, n, table).items, n);
}

u64 practical_component(u64 n, const SpfTable& table) {
  if (n == 0) throw std::invalid_argument("practical_component: n must be positive");
  u64 comp = 1, sig = 1;
  for (const auto& [p, e] : factorize(n, table)) {
    if (p > sig + 1) break;
    u64 pk = 1, term = 1;
    for (u32 j = 0; j < e; ++j) {
      pk *= p;
      term += pk;
    }
    comp *= pk;
    sig *= term;
  }
  return comp;
}

bool is_practical(u64 n, const SpfTable& table) {
  return practical_component(n, table) == n;
}

CappedProfile capped_divisor_profile(u64 n, u32 cap, const SpfTable& table) {
  if (n == 0) throw std::invalid_argument("capped_divisor_profile: n must be positive");
  if (cap < 1 || cap > 255)
    throw std::invalid_argument("capped_divisor_profile: cap must be in [1, 255]");
  CappedProfile profile{n, cap, std::vector<u8>(n + 1, 0)};
  auto& counts = profile.counts;
  counts[0] = 1;
  for (const auto& [d, phi] : divisor_phi_list(factorize(n, table))) {
    for (u64 m = n; m >= phi; --m) {
      u32 s = static_cast<u32>(counts[m]) + counts[m - phi];
      counts[m] = static_cast<u8>(std::min(s, cap));
    }
  }
  return profile;
}

bool q_efficient_from_pairs(const std::vector<DivisorPhi>& pairs, u64 n, u8* counts) {
  std::fill_n(counts, n + 1, u8{0});
  counts[0] = 1;
  for (const auto& [d, phi] : pairs) {
    for (u64 m = n; m >= phi; --m) {
      if (counts[m - phi] == 0) continue;
      if (counts[m] != 0) return false;  // counts only grow with more divisors
      counts[m] = 1;
    }
  }
  return true;
}

bool is_q_efficient(u64 n, const SpfTable& table) {
  if (n == 0) throw std::invalid_argument("is_q_efficient: n must be positive");
  std::vector<u8> counts(n + 1);
  return q_efficient_from_pairs(divisor_phi_list(factorize(n, table)), n, counts.data());
}

bool is_q_optimal(u64 n, const SpfTable& table) {
  if (n == 0) throw std::invalid_argument("is_q_optimal: n must be positive");
  if ((n & (n + 1)) != 0) return false;  // n + 1 must equal a power of two
  const Factorization f = factorize(n, table);
  const u64 dc = divisor_count(f);
  if (dc >= 63) {
    std::cerr << "is_q_optimal: divisor count " << dc << " of n=" << n
              << " overflows the 2^d(n) comparison; not optimal\n";
    return false;
  }
  if ((u64{1} << dc) != n + 1) return false;
  return is_f_practical(FieldSpec::rationals(), n, table);
}

}  // namespace cycdeg
