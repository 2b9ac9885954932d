#pragma once

#include <cstdint>
#include <vector>

#include "kout/errors.hpp"

namespace kout {

/**
 * Arithmetic in GF(2^m) for 3 <= m <= 24, with one fixed primitive
 * polynomial per degree so field layout never depends on configuration.
 * Multiplication goes through exp/log tables for m <= 18 (a few MB at
 * most, built once per instance); larger degrees use shift-and-reduce
 * carry-less multiplication.
 */
class GF2m {
 public:
  explicit GF2m(int m);

  int degree() const { return m_; }
  /** Multiplicative group order, 2^m - 1. */
  std::uint32_t order() const { return order_; }
  /** The reduction polynomial, including the x^m term. */
  std::uint32_t poly() const { return poly_; }

  static std::uint32_t add(std::uint32_t a, std::uint32_t b) { return a ^ b; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) return exp_[log_[a] + log_[b]];
    return mul_noluts(a, b);
  }

  std::uint32_t sq(std::uint32_t a) const { return mul(a, a); }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  /** Multiplicative inverse; a must be nonzero. */
  std::uint32_t inv(std::uint32_t a) const;
  /** alpha^e where alpha = x is the primitive element; e reduced mod order. */
  std::uint32_t alpha_pow(std::uint64_t e) const;

 private:
  std::uint32_t mul_noluts(std::uint32_t a, std::uint32_t b) const;

  int m_;
  std::uint32_t poly_;
  std::uint32_t order_;
  std::vector<std::uint32_t> exp_;  // size 2*order, avoids a modulo in mul
  std::vector<std::uint32_t> log_;
};

}  // namespace kout
