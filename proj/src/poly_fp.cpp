#include "cycdeg/poly_fp.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cycdeg {

namespace {

void normalize(PolyFp& f) {
  while (!f.coeffs.empty() && f.coeffs.back() == 0) f.coeffs.pop_back();
}

u8 inv_mod(u32 a, u32 p) {
  // p <= 5, so a^(p-2) by a short loop is fine.
  u32 r = 1;
  for (u32 i = 0; i + 2 < p; ++i) r = r * a % p;
  return static_cast<u8>(r);
}

}  // namespace

PolyFp poly_zero(u32 p) { return PolyFp{p, {}}; }

PolyFp poly_one(u32 p) { return PolyFp{p, {1}}; }

PolyFp poly_x(u32 p) { return PolyFp{p, {0, 1}}; }

PolyFp poly_x_pow_minus_one(u32 p, u32 n) {
  PolyFp f{p, std::vector<u8>(n + 1, 0)};
  f.coeffs[0] = static_cast<u8>(p - 1);
  f.coeffs[n] = 1;
  return f;
}

PolyFp poly_add(const PolyFp& a, const PolyFp& b) {
  PolyFp r{a.p, {}};
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
    u32 v = 0;
    if (i < a.coeffs.size()) v += a.coeffs[i];
    if (i < b.coeffs.size()) v += b.coeffs[i];
    r.coeffs[i] = static_cast<u8>(v % a.p);
  }
  normalize(r);
  return r;
}

PolyFp poly_sub(const PolyFp& a, const PolyFp& b) {
  PolyFp r{a.p, {}};
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
    u32 v = a.p;
    if (i < a.coeffs.size()) v += a.coeffs[i];
    if (i < b.coeffs.size()) v -= b.coeffs[i];
    r.coeffs[i] = static_cast<u8>(v % a.p);
  }
  normalize(r);
  return r;
}

PolyFp poly_mul(const PolyFp& a, const PolyFp& b) {
  if (a.is_zero() || b.is_zero()) return poly_zero(a.p);
  PolyFp r{a.p, std::vector<u8>(a.coeffs.size() + b.coeffs.size() - 1, 0)};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      r.coeffs[i + j] =
          static_cast<u8>((r.coeffs[i + j] + u32{a.coeffs[i]} * b.coeffs[j]) % a.p);
    }
  }
  normalize(r);
  return r;
}

std::pair<PolyFp, PolyFp> poly_divmod(const PolyFp& a, const PolyFp& b) {
  if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero");
  const u32 p = a.p;
  PolyFp rem = a;
  if (rem.deg() < b.deg()) return {poly_zero(p), rem};
  PolyFp quot{p, std::vector<u8>(rem.coeffs.size() - b.coeffs.size() + 1, 0)};
  const u8 lead_inv = inv_mod(b.coeffs.back(), p);
  for (int k = rem.deg() - b.deg(); k >= 0; --k) {
    const std::size_t top = static_cast<std::size_t>(k + b.deg());
    if (top >= rem.coeffs.size() || rem.coeffs[top] == 0) continue;
    const u8 c = static_cast<u8>(u32{rem.coeffs[top]} * lead_inv % p);
    quot.coeffs[static_cast<std::size_t>(k)] = c;
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) {
      const u32 sub = u32{c} * b.coeffs[i] % p;
      rem.coeffs[k + i] = static_cast<u8>((rem.coeffs[k + i] + p - sub) % p);
    }
  }
  normalize(quot);
  normalize(rem);
  return {quot, rem};
}

PolyFp poly_mod(const PolyFp& a, const PolyFp& b) { return poly_divmod(a, b).second; }

PolyFp poly_make_monic(PolyFp a) {
  if (a.is_zero() || a.coeffs.back() == 1) return a;
  const u8 inv = inv_mod(a.coeffs.back(), a.p);
  for (auto& c : a.coeffs) c = static_cast<u8>(u32{c} * inv % a.p);
  return a;
}

PolyFp poly_gcd(PolyFp a, PolyFp b) {
  while (!b.is_zero()) {
    PolyFp r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_make_monic(std::move(a));
}

PolyFp poly_pow_mod(const PolyFp& base, u64 e, const PolyFp& mod) {
  PolyFp result = poly_one(base.p);
  PolyFp b = poly_mod(base, mod);
  while (e > 0) {
    if (e & 1) result = poly_mod(poly_mul(result, b), mod);
    b = poly_mod(poly_mul(b, b), mod);
    e >>= 1;
  }
  return result;
}

std::string to_string(const PolyFp& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (int i = f.deg(); i >= 0; --i) {
    const u8 c = f.coeffs[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c);
      s += "T";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

bool poly_less(const PolyFp& a, const PolyFp& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (int i = a.deg(); i >= 0; --i) {
    const auto idx = static_cast<std::size_t>(i);
    if (a.coeffs[idx] != b.coeffs[idx]) return a.coeffs[idx] < b.coeffs[idx];
  }
  return false;
}

namespace {

// v >= p encodes a polynomial of degree >= 1 by its base-p digits; walking
// v upward enumerates candidates in a fixed lexicographic order.
PolyFp poly_from_index(u64 v, u32 p) {
  PolyFp f{p, {}};
  while (v > 0) {
    f.coeffs.push_back(static_cast<u8>(v % p));
    v /= p;
  }
  return f;
}

// Splits a monic product of irreducibles of equal degree d into its factors.
void equal_degree_split(const PolyFp& g, int d, std::vector<PolyFp>& out) {
  if (g.deg() == d) {
    out.push_back(g);
    return;
  }
  const u32 p = g.p;
  for (u64 v = p;; ++v) {
    if (v > 1'000'000)
      throw std::logic_error("equal_degree_split: no splitter found");
    const PolyFp h = poly_mod(poly_from_index(v, p), g);
    PolyFp splitter;
    if (p == 2) {
      // Trace map over the degree-d subfield.
      PolyFp t = h, hi = h;
      for (int i = 1; i < d; ++i) {
        hi = poly_mod(poly_mul(hi, hi), g);
        t = poly_add(t, hi);
      }
      splitter = t;
    } else {
      // h^((p^d-1)/2) = N(h)^((p-1)/2) with N the subfield norm, keeping
      // every exponent small.
      PolyFp norm = h, hi = h;
      for (int i = 1; i < d; ++i) {
        hi = poly_pow_mod(hi, p, g);
        norm = poly_mod(poly_mul(norm, hi), g);
      }
      splitter = poly_sub(poly_pow_mod(norm, (p - 1) / 2, g), poly_one(p));
    }
    const PolyFp w = poly_gcd(g, splitter);
    if (w.deg() > 0 && w.deg() < g.deg()) {
      equal_degree_split(w, d, out);
      equal_degree_split(poly_divmod(g, w).first, d, out);
      return;
    }
  }
}

}  // namespace

std::vector<PolyFp> factor_squarefree_fp(const PolyFp& f) {
  std::vector<PolyFp> out;
  PolyFp rest = f;
  PolyFp h = poly_x(f.p);
  for (int d = 1; rest.deg() > 0; ++d) {
    if (2 * d > rest.deg()) {
      out.push_back(rest);
      break;
    }
    h = poly_pow_mod(h, f.p, rest);  // x^(p^d) mod rest
    const PolyFp g = poly_gcd(rest, poly_sub(h, poly_x(f.p)));
    if (g.deg() > 0) {
      equal_degree_split(g, d, out);
      rest = poly_divmod(rest, g).first;
      h = poly_mod(h, rest);
    }
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

std::vector<PolyFactor> factor_tn_minus_1_fp(u32 p, u32 n) {
  if (p != 2 && p != 3 && p != 5)
    throw std::invalid_argument("factor_tn_minus_1_fp: p must be 2, 3 or 5");
  if (n < 1 || n > 64)
    throw std::invalid_argument("factor_tn_minus_1_fp: n must be in [1, 64]");
  u32 n0 = n, mult = 1;
  while (n0 % p == 0) {
    n0 /= p;
    mult *= p;
  }
  std::vector<PolyFactor> out;
  for (PolyFp& g : factor_squarefree_fp(poly_x_pow_minus_one(p, n0)))
    out.push_back({std::move(g), mult});

  PolyFp product = poly_one(p);
  for (const auto& [g, m] : out)
    for (u32 i = 0; i < m; ++i) product = poly_mul(product, g);
  if (!(product == poly_x_pow_minus_one(p, n)))
    throw std::logic_error("factor_tn_minus_1_fp: factor product check failed");
  return out;
}

PolyFp cyclotomic_fp(u32 d, u32 p) {
  std::map<u32, PolyFp> memo;
  for (u32 e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    PolyFp f = poly_x_pow_minus_one(p, e);
    for (u32 e2 = 1; e2 < e; ++e2) {
      if (e % e2 != 0) continue;
      auto [q, r] = poly_divmod(f, memo.at(e2));
      if (!r.is_zero()) throw std::logic_error("cyclotomic_fp: inexact division");
      f = std::move(q);
    }
    memo[e] = std::move(f);
  }
  return memo.at(d);
}

DegreeSet oracle_degree_set_fp(u32 p, u32 n) {
  std::map<int, u64> degree_mult;
  for (const auto& [g, m] : factor_tn_minus_1_fp(p, n)) degree_mult[g.deg()] += m;

  std::vector<char> reach(n + 1, 0);
  reach[0] = 1;
  for (const auto& [deg, m] : degree_mult) {
    const u64 v = static_cast<u64>(deg);
    for (u64 rep = 0; rep < m; ++rep) {
      for (u64 s = n; s >= v; --s)
        if (reach[s - v]) reach[s] = 1;
    }
  }
  Bitset bits(n + 1);
  for (u64 s = 0; s <= n; ++s)
    if (reach[s]) bits.set(s);
  return DegreeSet{n, std::move(bits)};
}

}  // namespace cycdeg
