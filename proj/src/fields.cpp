#include "cycdeg/fields.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace cycdeg {

namespace {

bool is_squarefree(u64 n) {
  for (u64 p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return false;
    }
  }
  return true;
}

int mod4(i64 v) { return static_cast<int>(((v % 4) + 4) % 4); }

}  // namespace

FieldSpec FieldSpec::prime_field(u64 p) {
  if (!is_prime(p))
    throw std::invalid_argument("FieldSpec: characteristic must be prime");
  return FieldSpec(Kind::prime_field, p, 0);
}

FieldSpec FieldSpec::quadratic(i64 disc) {
  bool ok = false;
  if (disc != 0 && disc != 1) {
    if (mod4(disc) == 1) {
      ok = is_squarefree(static_cast<u64>(std::llabs(disc)));
    } else if (mod4(disc) == 0) {
      i64 m = disc / 4;
      ok = (mod4(m) == 2 || mod4(m) == 3) &&
           is_squarefree(static_cast<u64>(std::llabs(m)));
    }
  }
  if (!ok)
    throw std::invalid_argument("FieldSpec: not a fundamental discriminant");
  return FieldSpec(Kind::quadratic, 0, disc);
}

u64 FieldSpec::conductor() const {
  return static_cast<u64>(std::llabs(disc_));
}

std::string FieldSpec::to_string() const {
  switch (kind_) {
    case Kind::rationals:
      return "q";
    case Kind::prime_field:
      return "fp:" + std::to_string(p_);
    case Kind::quadratic:
      return "quad:" + std::to_string(disc_);
  }
  return {};
}

FieldSpec parse_field(std::string_view text) {
  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (text == "q") return FieldSpec::rationals();
  if (text.substr(0, 3) == "fp:") {
    std::string_view tail = text.substr(3);
    if (!all_digits(tail) || tail.size() > 19)
      throw std::invalid_argument("parse_field: malformed prime field spec");
    return FieldSpec::prime_field(std::stoull(std::string(tail)));
  }
  if (text.substr(0, 5) == "quad:") {
    std::string_view tail = text.substr(5);
    bool neg = !tail.empty() && tail.front() == '-';
    std::string_view digits = neg ? tail.substr(1) : tail;
    if (!all_digits(digits) || digits.size() > 18)
      throw std::invalid_argument("parse_field: malformed quadratic field spec");
    i64 v = static_cast<i64>(std::stoll(std::string(tail)));
    return FieldSpec::quadratic(v);
  }
  throw std::invalid_argument("parse_field: expected q, fp:<p> or quad:<D>");
}

u64 phi_f(const FieldSpec& field, u64 d, const SpfTable& table) {
  if (d == 0) throw std::invalid_argument("phi_f: d must be positive");
  switch (field.kind()) {
    case FieldSpec::Kind::rationals:
      return euler_phi(factorize(d, table));
    case FieldSpec::Kind::prime_field:
      return generalized_order(field.characteristic(), d, table);
    case FieldSpec::Kind::quadratic: {
      u64 phi = euler_phi(factorize(d, table));
      return (d % field.conductor() == 0) ? phi / 2 : phi;
    }
  }
  throw std::logic_error("phi_f: unreachable");
}

u64 multiplicity(const FieldSpec& field, u64 d, const SpfTable& table) {
  u64 phi = euler_phi(factorize(d, table));
  u64 v = phi_f(field, d, table);
  if (v == 0 || phi % v != 0)
    throw std::logic_error("multiplicity: phi_f(d) does not divide phi(d)");
  return phi / v;
}

namespace {

// Order of a modulo the prime power q^e (q != prime factors of a), by
// lambda-descent.
u64 order_mod_prime_power(u64 a, u64 q, u32 e, u64 qe, const SpfTable& table) {
  u64 lam;
  if (q == 2) {
    lam = (e == 1) ? 1 : (e == 2) ? 2 : u64{1} << (e - 2);
  } else {
    lam = q - 1;
    for (u32 j = 1; j < e; ++j) lam *= q;
  }
  u64 k = lam;
  const u64 base = a % qe;
  for (const auto& [r, re] : factorize(lam, table)) {
    for (u32 j = 0; j < re; ++j) {
      if (k % r == 0 && pow_mod(base, k / r, qe) == 1)
        k /= r;
      else
        break;
    }
  }
  return k;
}

}  // namespace

std::vector<u32> phi_f_table(const FieldSpec& field, u64 limit, const SpfTable& table) {
  if (limit < 1 || limit > table.limit())
    throw std::invalid_argument("phi_f_table: limit out of sieve range");
  std::vector<u32> out(limit + 1, 0);
  out[1] = 1;

  if (field.kind() == FieldSpec::Kind::prime_field) {
    const u64 p = field.characteristic();
    std::vector<u32> order_pp(limit + 1, 0);  // sparse, indexed by q^e
    for (u64 d = 2; d <= limit; ++d) {
      u64 q = table.spf(d);
      u64 m = d, qe = 1;
      u32 e = 0;
      while (m % q == 0) {
        m /= q;
        qe *= q;
        ++e;
      }
      if (q == p) {
        out[d] = out[m];
        continue;
      }
      if (order_pp[qe] == 0)
        order_pp[qe] =
            static_cast<u32>(order_mod_prime_power(p, q, e, qe, table));
      out[d] = static_cast<u32>(
          std::lcm<u64, u64>(out[m], order_pp[qe]));
    }
    return out;
  }

  for (u64 d = 2; d <= limit; ++d) {
    u64 p = table.spf(d);
    u64 m = d / p;
    out[d] = static_cast<u32>(out[m] * (m % p == 0 ? p : p - 1));
  }
  if (field.kind() == FieldSpec::Kind::quadratic) {
    const u64 c = field.conductor();
    for (u64 d = c; d <= limit; d += c) out[d] /= 2;
  }
  return out;
}

}  // namespace cycdeg
