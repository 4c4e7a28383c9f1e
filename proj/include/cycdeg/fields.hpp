#pragma once
// Base-field descriptor and the degree function phi_f: for a field F,
// phi_f(d) is the common degree of the irreducible factors of the d-th
// cyclotomic polynomial over F. It always divides phi(d).

#include <string>
#include <string_view>

#include "cycdeg/arith.hpp"

namespace cycdeg {

class FieldSpec {
 public:
  enum class Kind { rationals, prime_field, quadratic };

  static FieldSpec rationals() { return FieldSpec(Kind::rationals, 0, 0); }
  static FieldSpec prime_field(u64 p);  // p must be prime
  static FieldSpec quadratic(i64 disc); // fundamental discriminant, != 0, 1

  Kind kind() const { return kind_; }
  u64 characteristic() const { return p_; }   // prime_field only, else 0
  i64 discriminant() const { return disc_; }  // quadratic only, else 0
  u64 conductor() const;                      // |disc|; quadratic only
  std::string to_string() const;              // "q", "fp:2", "quad:-4"

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind k, u64 p, i64 d) : kind_(k), p_(p), disc_(d) {}

  Kind kind_;
  u64 p_;
  i64 disc_;
};

// Grammar: "q" | "fp:<prime>" | "quad:<fundamental discriminant>".
// Case-sensitive, no whitespace. Throws std::invalid_argument otherwise.
FieldSpec parse_field(std::string_view text);

// phi(d) over the rationals; the generalized order of p mod d over the field
// with p elements; phi(d)/2 over a quadratic field whose conductor divides d
// (a quadratic field of discriminant D lies in the d-th cyclotomic field
// exactly when |D| divides d), else phi(d).
u64 phi_f(const FieldSpec& field, u64 d, const SpfTable& table);

// phi(d) / phi_f(d): the number of equal-degree irreducible factors of the
// d-th cyclotomic polynomial over the field. The division is always exact;
// an inexact division is an internal error, not a user error.
u64 multiplicity(const FieldSpec& field, u64 d, const SpfTable& table);

// phi_f(d) for every d <= limit in one bulk pass. Requires
// limit <= table.limit().
std::vector<u32> phi_f_table(const FieldSpec& field, u64 limit, const SpfTable& table);

}  // namespace cycdeg
