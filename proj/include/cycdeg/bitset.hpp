#pragma once
// Fixed-width dynamic bitset with the shifted-or update used by the
// subset-sum routines. Shifts past the end truncate.

#include <cstdint>
#include <string>
#include <vector>

namespace cycdeg {

class Bitset {
 public:
  explicit Bitset(std::uint64_t nbits)
      : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  std::uint64_t size() const { return nbits_; }

  void set(std::uint64_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  bool test(std::uint64_t i) const {
    return (w_[i >> 6] >> (i & 63)) & 1;
  }

  // b |= b << k, truncated to size() bits.
  void shift_left_or(std::uint64_t k) {
    if (k == 0 || k >= nbits_) return;
    const std::size_t q = static_cast<std::size_t>(k >> 6);
    const unsigned r = static_cast<unsigned>(k & 63);
    for (std::size_t i = w_.size(); i-- > q;) {
      std::uint64_t v = w_[i - q] << r;
      if (r != 0 && i > q) v |= w_[i - q - 1] >> (64 - r);
      w_[i] |= v;
    }
    trim();
  }

  bool all_set() const {
    const std::size_t full = nbits_ / 64;
    for (std::size_t i = 0; i < full; ++i)
      if (w_[i] != ~std::uint64_t{0}) return false;
    const unsigned rem = static_cast<unsigned>(nbits_ & 63);
    if (rem != 0 && w_[full] != ((std::uint64_t{1} << rem) - 1)) return false;
    return true;
  }

  // Index of the lowest clear bit, or size() if none.
  std::uint64_t first_clear() const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (w_[i] != ~std::uint64_t{0}) {
        std::uint64_t pos = i * 64 +
            static_cast<std::uint64_t>(__builtin_ctzll(~w_[i]));
        return pos < nbits_ ? pos : nbits_;
      }
    }
    return nbits_;
  }

  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (std::uint64_t word : w_) c += static_cast<std::uint64_t>(__builtin_popcountll(word));
    return c;
  }

  bool is_subset_of(const Bitset& other) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~other.w_[i]) return false;
    return true;
  }

  // Hex string, most significant nibble first; bit i of the value is bit i
  // of the set. ceil(size()/4) digits, lowercase.
  std::string to_hex() const {
    const std::uint64_t nibbles = (nbits_ + 3) / 4;
    std::string s;
    s.reserve(nibbles);
    for (std::uint64_t idx = nibbles; idx-- > 0;) {
      unsigned v = 0;
      for (unsigned b = 0; b < 4; ++b) {
        std::uint64_t bit = idx * 4 + b;
        if (bit < nbits_ && test(bit)) v |= 1u << b;
      }
      s.push_back("0123456789abcdef"[v]);
    }
    return s;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  void trim() {
    const unsigned rem = static_cast<unsigned>(nbits_ & 63);
    if (rem != 0) w_.back() &= (std::uint64_t{1} << rem) - 1;
  }

  std::uint64_t nbits_;
  std::vector<std::uint64_t> w_;
};

}  // namespace cycdeg
