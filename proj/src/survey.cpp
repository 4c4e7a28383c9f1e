#include "cycdeg/survey.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "cycdeg/degree_sets.hpp"
#include "cycdeg/poly_fp.hpp"

namespace cycdeg {

namespace {

struct Range {
  u64 lo, hi;  // inclusive
};

constexpr u64 kBlock = 4096;

// Blocks of at most kBlock integers whose boundaries land exactly on the
// checkpoints, so partial counts can be folded in block order regardless of
// which thread produced them.
std::vector<Range> checkpoint_ranges(u64 first, const std::vector<u64>& checkpoints) {
  std::vector<Range> ranges;
  u64 cursor = first;
  for (u64 cp : checkpoints) {
    while (cursor <= cp) {
      const u64 end = std::min(cursor + kBlock - 1, cp);
      ranges.push_back({cursor, end});
      cursor = end + 1;
    }
  }
  return ranges;
}

template <typename Fn>
void for_each_range(const std::vector<Range>& ranges, unsigned threads, Fn&& fn) {
  if (threads <= 1 || ranges.size() <= 1) {
    for (std::size_t i = 0; i < ranges.size(); ++i) fn(i, ranges[i].lo, ranges[i].hi);
    return;
  }
  std::atomic<std::size_t> next{0};
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(threads, ranges.size()));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < ranges.size(); i = next.fetch_add(1))
        fn(i, ranges[i].lo, ranges[i].hi);
    });
  }
  for (auto& th : pool) th.join();
}

void check_checkpoints(const std::vector<u64>& checkpoints, const SpfTable& table) {
  if (checkpoints.empty())
    throw std::invalid_argument("survey: checkpoint list must not be empty");
  u64 prev = 0;
  for (u64 cp : checkpoints) {
    if (cp <= prev)
      throw std::invalid_argument("survey: checkpoints must be strictly ascending and positive");
    prev = cp;
  }
  if (checkpoints.back() > table.limit())
    throw std::invalid_argument("survey: checkpoints exceed sieve range");
}

// Per-field constants plus the bulk order table for prime fields, shared
// read-only by all workers.
struct FieldCtx {
  FieldSpec::Kind kind;
  u64 conductor = 0;
  std::vector<u32> ord;
};

FieldCtx make_ctx(const FieldSpec& field, u64 xmax, const SpfTable& table) {
  FieldCtx ctx{field.kind(), 0, {}};
  if (field.kind() == FieldSpec::Kind::quadratic) ctx.conductor = field.conductor();
  if (field.kind() == FieldSpec::Kind::prime_field)
    ctx.ord = phi_f_table(field, xmax, table);
  return ctx;
}

u64 item_value(const FieldCtx& ctx, u64 d, u64 phi) {
  switch (ctx.kind) {
    case FieldSpec::Kind::rationals:
      return phi;
    case FieldSpec::Kind::prime_field:
      return ctx.ord[d];
    case FieldSpec::Kind::quadratic:
      return (d % ctx.conductor == 0) ? phi / 2 : phi;
  }
  return phi;
}

struct Scratch {
  std::vector<DivisorPhi> divs;
  std::vector<DegreeItem> items;
};

void expand_divisors(u64 n, const SpfTable& table, std::vector<DivisorPhi>& divs) {
  divs.clear();
  divs.push_back({1, 1});
  u64 m = n;
  while (m > 1) {
    const u64 p = table.spf(m);
    u32 e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    const std::size_t base = divs.size();
    u64 pk = 1, phi_pk = 1;
    for (u32 j = 0; j < e; ++j) {
      phi_pk = (j == 0) ? p - 1 : phi_pk * p;
      pk *= p;
      for (std::size_t i = 0; i < base; ++i)
        divs.push_back({divs[i].d * pk, divs[i].phi * phi_pk});
    }
  }
}

void build_items(u64 n, const SpfTable& table, const FieldCtx& ctx, Scratch& s) {
  expand_divisors(n, table, s.divs);
  s.items.clear();
  for (const auto& [d, phi] : s.divs) {
    const u64 v = item_value(ctx, d, phi);
    s.items.push_back({v, phi / v});
  }
}

bool practical_from_items(std::vector<DegreeItem>& items, u64 n) {
  std::sort(items.begin(), items.end(),
            [](const DegreeItem& a, const DegreeItem& b) { return a.value < b.value; });
  u64 reach = 0;
  for (const auto& [value, count] : items) {
    if (value > reach + 1) return false;
    reach += value * count;
  }
  return reach == n;
}

}  // namespace

std::vector<SurveyRecord> count_f_practical(const FieldSpec& field,
                                            const std::vector<u64>& checkpoints,
                                            const SpfTable& table, unsigned threads) {
  check_checkpoints(checkpoints, table);
  const FieldCtx ctx = make_ctx(field, checkpoints.back(), table);
  const auto ranges = checkpoint_ranges(1, checkpoints);
  std::vector<u64> partial(ranges.size(), 0);
  for_each_range(ranges, threads, [&](std::size_t i, u64 lo, u64 hi) {
    Scratch s;
    u64 c = 0;
    for (u64 n = lo; n <= hi; ++n) {
      build_items(n, table, ctx, s);
      if (practical_from_items(s.items, n)) ++c;
    }
    partial[i] = c;
  });

  std::vector<SurveyRecord> records;
  records.reserve(checkpoints.size());
  u64 running = 0;
  std::size_t next_cp = 0;
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    running += partial[i];
    if (ranges[i].hi == checkpoints[next_cp]) {
      const u64 x = checkpoints[next_cp];
      records.push_back(
          {x, running, static_cast<double>(running) * std::log(static_cast<double>(x)) /
                           static_cast<double>(x)});
      ++next_cp;
    }
  }
  return records;
}

std::vector<u64> list_f_practical(const FieldSpec& field, u64 limit,
                                  const SpfTable& table, unsigned threads) {
  if (limit < 1) throw std::invalid_argument("list_f_practical: limit must be positive");
  if (limit > table.limit())
    throw std::invalid_argument("list_f_practical: limit exceeds sieve range");
  const FieldCtx ctx = make_ctx(field, limit, table);
  const auto ranges = checkpoint_ranges(1, {limit});
  std::vector<std::vector<u64>> partial(ranges.size());
  for_each_range(ranges, threads, [&](std::size_t i, u64 lo, u64 hi) {
    Scratch s;
    for (u64 n = lo; n <= hi; ++n) {
      build_items(n, table, ctx, s);
      if (practical_from_items(s.items, n)) partial[i].push_back(n);
    }
  });
  std::vector<u64> out;
  for (auto& chunk : partial) out.insert(out.end(), chunk.begin(), chunk.end());
  return out;
}

u64 count_degree_hits(const FieldSpec& field, u64 x, u64 m, const SpfTable& table,
                      unsigned threads) {
  if (m < 1 || m > x) throw std::invalid_argument("count_degree_hits: need 1 <= m <= x");
  if (x > table.limit())
    throw std::invalid_argument("count_degree_hits: x exceeds sieve range");
  const FieldCtx ctx = make_ctx(field, x, table);
  const auto ranges = checkpoint_ranges(m, {x});
  std::vector<u64> partial(ranges.size(), 0);
  for_each_range(ranges, threads, [&](std::size_t i, u64 lo, u64 hi) {
    Scratch s;
    u64 c = 0;
    for (u64 n = lo; n <= hi; ++n) {
      build_items(n, table, ctx, s);
      if (items_contain_degree(s.items, n, m)) ++c;
    }
    partial[i] = c;
  });
  return std::accumulate(partial.begin(), partial.end(), u64{0});
}

u64 h_count(u64 x, u64 y, u64 z, const SpfTable& table, unsigned threads) {
  if (y < 1 || y >= z) throw std::invalid_argument("h_count: need 1 <= y < z");
  if (x > table.limit()) throw std::invalid_argument("h_count: x exceeds sieve range");
  if (x <= y) return 0;
  const auto ranges = checkpoint_ranges(y + 1, {x});  // n <= y has no divisor > y
  std::vector<u64> partial(ranges.size(), 0);
  for_each_range(ranges, threads, [&](std::size_t i, u64 lo, u64 hi) {
    std::vector<DivisorPhi> divs;
    u64 c = 0;
    for (u64 n = lo; n <= hi; ++n) {
      if (n <= z) {
        ++c;  // n itself lies in (y, z]
        continue;
      }
      expand_divisors(n, table, divs);
      for (const auto& [d, phi] : divs) {
        if (d > y && d <= z) {
          ++c;
          break;
        }
      }
    }
    partial[i] = c;
  });
  return std::accumulate(partial.begin(), partial.end(), u64{0});
}

std::vector<u64> enumerate_q_optimal(u64 limit, const SpfTable& table) {
  std::vector<u64> out;
  for (unsigned k = 1; k < 64; ++k) {
    const u64 n = (u64{1} << k) - 1;
    if (n > limit) break;
    if (is_q_optimal(n, table)) out.push_back(n);
  }
  return out;
}

std::vector<DensityRecord> q_efficient_density(u64 limit,
                                               const std::vector<u64>& checkpoints,
                                               const SpfTable& table, unsigned threads) {
  check_checkpoints(checkpoints, table);
  if (checkpoints.back() > limit)
    throw std::invalid_argument("q_efficient_density: checkpoints exceed limit");
  const auto ranges = checkpoint_ranges(1, checkpoints);
  std::vector<u64> partial(ranges.size(), 0);
  for_each_range(ranges, threads, [&](std::size_t i, u64 lo, u64 hi) {
    std::vector<DivisorPhi> divs;
    std::vector<u8> counts(hi + 1);
    u64 c = 0;
    for (u64 n = lo; n <= hi; ++n) {
      expand_divisors(n, table, divs);
      if (q_efficient_from_pairs(divs, n, counts.data())) ++c;
    }
    partial[i] = c;
  });

  std::vector<DensityRecord> records;
  records.reserve(checkpoints.size());
  u64 running = 0;
  std::size_t next_cp = 0;
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    running += partial[i];
    if (ranges[i].hi == checkpoints[next_cp]) {
      const u64 x = checkpoints[next_cp];
      records.push_back(
          {x, running, static_cast<double>(running) / static_cast<double>(x)});
      ++next_cp;
    }
  }
  return records;
}

namespace {

std::vector<FieldSpec> five_fields() {
  return {FieldSpec::rationals(), FieldSpec::prime_field(2), FieldSpec::prime_field(3),
          FieldSpec::quadratic(5), FieldSpec::quadratic(-4)};
}

u64 sieve_size(u64 want) { return std::clamp<u64>(want, 16, SpfTable::kMaxLimit); }

SuiteReport suite_symmetry(u64 limit) {
  SpfTable table(sieve_size(limit));
  for (const FieldSpec& field : five_fields()) {
    for (u64 n = 1; n <= limit; ++n) {
      const DegreeSet ds = degree_set(field, n, table);
      for (u64 m = 0; m <= n / 2; ++m) {
        if (ds.bits.test(m) != ds.bits.test(n - m))
          return {"symmetry", false,
                  "field=" + field.to_string() + ",n=" + std::to_string(n) +
                      ",m=" + std::to_string(m)};
      }
    }
  }
  return {"symmetry", true, {}};
}

SuiteReport suite_containment(u64 limit) {
  SpfTable table(sieve_size(limit));
  const FieldSpec q = FieldSpec::rationals();
  for (u64 n = 1; n <= limit; ++n) {
    const DegreeSet dq = degree_set(q, n, table);
    for (const FieldSpec& field : five_fields()) {
      if (field == q) continue;
      const DegreeSet df = degree_set(field, n, table);
      if (!dq.bits.is_subset_of(df.bits))
        return {"containment", false,
                "field=" + field.to_string() + ",n=" + std::to_string(n)};
    }
  }
  return {"containment", true, {}};
}

SuiteReport suite_srinivasan_oracle(u64 limit) {
  SpfTable table(sieve_size(limit));
  for (u64 n = 1; n <= limit; ++n) {
    const Factorization f = factorize(n, table);
    const u64 sig = sigma(f);
    Bitset reach(sig + 2);
    reach.set(0);
    for (u64 d : divisors(f)) reach.shift_left_or(d);
    const u64 first_gap = reach.first_clear();
    const bool oracle_practical = first_gap > sig;
    if (oracle_practical != is_practical(n, table))
      return {"srinivasan-oracle", false, "n=" + std::to_string(n)};
    if (!oracle_practical) {
      // The first unreachable target is exactly sigma(component) + 1.
      const u64 comp = practical_component(n, table);
      const u64 sig_comp = sigma(factorize(comp, table));
      if (first_gap != sig_comp + 1)
        return {"srinivasan-oracle", false,
                "n=" + std::to_string(n) + ",gap=" + std::to_string(first_gap) +
                    ",expected=" + std::to_string(sig_comp + 1)};
    }
  }
  return {"srinivasan-oracle", true, {}};
}

SuiteReport suite_lemma_2_3(u64 limit) {
  SpfTable table(sieve_size(limit));
  u64 prod = 1;  // product of primes below the current one, saturating
  for (u32 p : table.primes()) {
    if (p > limit) break;
    if (prod < p - 1)
      return {"lemma-2.3", false, "p=" + std::to_string(p)};
    if (prod < 1'000'000'000) prod *= p;
  }
  return {"lemma-2.3", true, {}};
}

SuiteReport suite_lemma_2_4(u64 limit) {
  u64 primorial = 1, pmax = 2;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    primorial *= p;
    pmax = p;
    if (primorial > limit) break;
  }
  SpfTable table(sieve_size(limit * pmax));
  for (const FieldSpec& field : five_fields()) {
    for (u64 n = 1; n <= limit; ++n) {
      if (!is_f_practical(field, n, table)) continue;
      u64 p = 0;
      for (u32 q : table.primes()) {
        if (n % q != 0) {
          p = q;
          break;
        }
      }
      if (p == 0 || p * n > table.limit()) continue;  // outside sieve range
      if (!is_f_practical(field, p * n, table))
        return {"lemma-2.4", false,
                "field=" + field.to_string() + ",n=" + std::to_string(n) +
                    ",p=" + std::to_string(p)};
    }
  }
  return {"lemma-2.4", true, {}};
}

SuiteReport suite_lemma_2_6(u64 limit) {
  // Quadratic field of discriminant 5: M = product of primes <= 2|D| = 210.
  constexpr u64 kM = 210;
  SpfTable table(sieve_size(limit * kM));
  const FieldSpec field = FieldSpec::quadratic(5);
  for (u64 n = 1; n <= limit; ++n) {
    if (!is_f_practical(field, n, table)) continue;
    const u64 l = std::lcm(n, kM);
    if (!is_practical(l, table))
      return {"lemma-2.6", false,
              "n=" + std::to_string(n) + ",lcm=" + std::to_string(l)};
  }
  return {"lemma-2.6", true, {}};
}

SuiteReport suite_lemma_4_8(u64 limit) {
  SpfTable table(sieve_size(limit));
  const std::vector<u32> phi = euler_phi_table(table);
  for (u64 a : {2, 3, 5}) {
    const std::vector<u32> ord = phi_f_table(FieldSpec::prime_field(a), limit, table);
    std::vector<u64> ratio(limit + 1, 0);
    for (u64 d = 1; d <= limit; ++d) {
      if (phi[d] % ord[d] != 0)
        return {"lemma-4.8", false,
                "a=" + std::to_string(a) + ",d=" + std::to_string(d) + ",order-divides-phi"};
      ratio[d] = phi[d] / ord[d];
    }
    for (u64 d = 1; d <= limit; ++d) {
      for (u64 e = d; e <= limit; e += d) {
        if (ratio[e] % ratio[d] != 0)
          return {"lemma-4.8", false,
                  "a=" + std::to_string(a) + ",d=" + std::to_string(d) +
                      ",e=" + std::to_string(e)};
      }
    }
  }
  return {"lemma-4.8", true, {}};
}

SuiteReport suite_lemma_6_2(u64 limit) {
  SpfTable table(sieve_size(limit + 1024));
  const FieldSpec q = FieldSpec::rationals();
  for (u64 n = 1; n <= limit; ++n) {
    if (!is_f_practical(q, n, table)) continue;
    unsigned beyond = 0;
    for (u32 p : table.primes()) {
      if (p <= n + 2) {
        if (n % p == 0) continue;
        if (!is_f_practical(q, p * n, table))
          return {"lemma-6.2", false,
                  "n=" + std::to_string(n) + ",p=" + std::to_string(p) +
                      ",expected-practical"};
      } else {
        // Spot-check the converse on the first few primes past n + 2.
        if (beyond == 5) break;
        ++beyond;
        if (is_f_practical(q, p * n, table))
          return {"lemma-6.2", false,
                  "n=" + std::to_string(n) + ",p=" + std::to_string(p) +
                      ",expected-not-practical"};
      }
    }
  }
  return {"lemma-6.2", true, {}};
}

SuiteReport suite_fp_oracle(u64 limit) {
  SpfTable table(sieve_size(256));
  const u64 nmax = std::min<u64>(limit, 64);
  for (u32 p : {2u, 3u}) {
    const FieldSpec field = FieldSpec::prime_field(p);
    for (u64 n = 1; n <= nmax; ++n) {
      const DegreeSet computed = degree_set(field, n, table);
      const DegreeSet oracle = oracle_degree_set_fp(p, static_cast<u32>(n));
      if (!(computed.bits == oracle.bits))
        return {"fp-oracle", false,
                "p=" + std::to_string(p) + ",n=" + std::to_string(n)};
    }
  }
  return {"fp-oracle", true, {}};
}

SuiteReport suite_fermat_identity(u64 limit) {
  const unsigned jmax = static_cast<unsigned>(std::min<u64>(limit, 5));
  u64 prod = 1;  // F_0 * ... * F_(j-1), empty product for j = 0
  for (unsigned j = 0; j <= jmax; ++j) {
    const u64 fermat_j = (u64{1} << (u64{1} << j)) + 1;
    if (prod + 2 != fermat_j)
      return {"fermat-identity", false, "j=" + std::to_string(j)};
    prod *= fermat_j;
  }
  return {"fermat-identity", true, {}};
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "symmetry",  "containment", "srinivasan-oracle", "lemma-2.3",
      "lemma-2.4", "lemma-2.6",   "lemma-4.8",         "lemma-6.2",
      "fp-oracle", "fermat-identity"};
  return names;
}

SuiteReport verify_suite(const std::string& name, u64 limit) {
  if (limit < 1) throw std::invalid_argument("verify_suite: limit must be positive");
  if (name == "symmetry") return suite_symmetry(limit);
  if (name == "containment") return suite_containment(limit);
  if (name == "srinivasan-oracle") return suite_srinivasan_oracle(limit);
  if (name == "lemma-2.3") return suite_lemma_2_3(limit);
  if (name == "lemma-2.4") return suite_lemma_2_4(limit);
  if (name == "lemma-2.6") return suite_lemma_2_6(limit);
  if (name == "lemma-4.8") return suite_lemma_4_8(limit);
  if (name == "lemma-6.2") return suite_lemma_6_2(limit);
  if (name == "fp-oracle") return suite_fp_oracle(limit);
  if (name == "fermat-identity") return suite_fermat_identity(limit);
  throw std::invalid_argument("verify_suite: unknown suite '" + name + "'");
}

std::string format_report(const SuiteReport& report) {
  if (report.pass) return "PASS " + report.suite;
  return "FAIL " + report.suite + " counterexample=" + report.counterexample;
}

}  // namespace cycdeg
