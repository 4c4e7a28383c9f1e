#pragma once
// Counting experiments over ranges of n: how often n is F-practical, how
// often a fixed degree m is attained, divisor-interval counts H(x,y,z),
// enumeration of the optimal and efficient numbers, and the named
// verification suites that exhaustively check the structural properties
// the rest of the library relies on.
//
// Every survey may fan out over threads; the range is cut into fixed blocks
// whose partial counts are reduced in block order, so results are
// bit-identical for any thread count.

#include <string>
#include <vector>

#include "cycdeg/arith.hpp"
#include "cycdeg/fields.hpp"

namespace cycdeg {

struct SurveyRecord {
  u64 x;
  u64 count;
  double ratio;  // count * log(x) / x
  friend bool operator==(const SurveyRecord&, const SurveyRecord&) = default;
};

struct DensityRecord {
  u64 x;
  u64 count;
  double density;  // count / x
  friend bool operator==(const DensityRecord&, const DensityRecord&) = default;
};

// Counts of F-practical n <= x at each checkpoint, one pass over n.
// Checkpoints must be nonempty, strictly ascending, within sieve range.
std::vector<SurveyRecord> count_f_practical(const FieldSpec& field,
                                            const std::vector<u64>& checkpoints,
                                            const SpfTable& table,
                                            unsigned threads = 1);

// The F-practical n <= limit themselves, ascending.
std::vector<u64> list_f_practical(const FieldSpec& field, u64 limit,
                                  const SpfTable& table, unsigned threads = 1);

// #{n <= x : T^n - 1 has a divisor of degree m over the field}.
u64 count_degree_hits(const FieldSpec& field, u64 x, u64 m, const SpfTable& table,
                      unsigned threads = 1);

// #{n <= x : n has a divisor in (y, z]}; requires y < z.
u64 h_count(u64 x, u64 y, u64 z, const SpfTable& table, unsigned threads = 1);

// All n <= limit with exactly one monic rational divisor of T^n - 1 per
// degree, ascending. Such n satisfy n + 1 = 2^d(n), so only n = 2^k - 1
// need inspection.
std::vector<u64> enumerate_q_optimal(u64 limit, const SpfTable& table);

// Running counts of efficient n at each checkpoint (at most one monic
// rational divisor per degree), with the density count/x.
std::vector<DensityRecord> q_efficient_density(u64 limit,
                                               const std::vector<u64>& checkpoints,
                                               const SpfTable& table,
                                               unsigned threads = 1);

struct SuiteReport {
  std::string suite;
  bool pass = false;
  std::string counterexample;  // empty when pass
};

// Known suites: symmetry, containment, srinivasan-oracle, lemma-2.3,
// lemma-2.4, lemma-2.6, lemma-4.8, lemma-6.2, fp-oracle, fermat-identity.
const std::vector<std::string>& verify_suite_names();

// Runs one suite exhaustively up to limit; the first counterexample, if
// any, is reported verbatim. Unknown names throw std::invalid_argument.
SuiteReport verify_suite(const std::string& name, u64 limit);

// "PASS <suite>" or "FAIL <suite> counterexample=<...>".
std::string format_report(const SuiteReport& report);

}  // namespace cycdeg
