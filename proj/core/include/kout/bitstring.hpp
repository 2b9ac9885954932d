#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kout/errors.hpp"
#include "kout/rng.hpp"

namespace kout {

/**
 * Fixed-width bit string: the value type for edge names and syndromes.
 * Bits beyond bit_count() in the last word are kept zero, so equality and
 * is_zero are plain word comparisons.
 */
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::uint32_t bits)
      : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::uint32_t bit_count() const { return bits_; }
  std::span<const std::uint64_t> words() const { return words_; }

  bool get(std::uint32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  void set(std::uint32_t i, bool value) {
    std::uint64_t mask = 1ULL << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }

  void set_word(std::uint32_t w, std::uint64_t value) {
    words_[w] = value;
    mask_tail();
  }

  BitString& operator^=(const BitString& other) {
    if (other.bits_ != bits_) {
      throw BadParameters("xor of bit strings with different widths (" +
                          std::to_string(bits_) + " vs " + std::to_string(other.bits_) + ")");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
  }

  friend BitString operator^(BitString a, const BitString& b) { return a ^= b; }

  bool is_zero() const {
    for (std::uint64_t w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  friend bool operator==(const BitString&, const BitString&) = default;

  /** 64-bit fold of the contents, for hash-table keys. */
  std::uint64_t hash64() const {
    std::uint64_t h = 0x9ae16a3b2f90404fULL ^ bits_;
    for (std::uint64_t w : words_) h = mix64(h ^ w);
    return h;
  }

 private:
  void mask_tail() {
    std::uint32_t rem = bits_ & 63;
    if (rem != 0 && !words_.empty()) words_.back() &= (~0ULL) >> (64 - rem);
  }

  std::uint32_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace kout
