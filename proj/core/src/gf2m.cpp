#include "kout/gf2m.hpp"

#include <string>

namespace kout {

namespace {

// One primitive polynomial per degree (bit i = coefficient of x^i,
// x^m term included).  Standard table entries; primitivity is asserted
// below while the exp table is built.
constexpr int kMinDegree = 3;
constexpr int kMaxDegree = 24;
constexpr std::uint32_t kPrimitivePoly[kMaxDegree + 1] = {
    0,         0,         0,         0xB,       0x13,      0x25,     0x43,
    0x89,      0x11D,     0x211,     0x409,     0x805,     0x1053,   0x201B,
    0x4443,    0x8003,    0x1100B,   0x20009,   0x40081,   0x80027,  0x100009,
    0x200005,  0x400003,  0x800021,  0x1000087,
};

// Table-based multiplication is worth the memory up to this degree: the
// two tables cost 12 * 2^m bytes and speed up BCH name generation roughly
// tenfold versus shift-and-reduce.
constexpr int kTableDegreeCap = 18;

}  // namespace

GF2m::GF2m(int m) : m_(m) {
  if (m < kMinDegree || m > kMaxDegree) {
    throw BadParameters("GF(2^m) supported for 3 <= m <= 24, got m = " + std::to_string(m));
  }
  poly_ = kPrimitivePoly[m];
  order_ = (1u << m) - 1;
  if (m <= kTableDegreeCap) {
    exp_.assign(2ull * order_, 0);
    log_.assign(order_ + 1ull, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < order_; ++i) {
      if (i > 0 && x == 1) {
        // The element x repeated before exhausting the group: the table
        // polynomial would not be primitive.  Unreachable with the table
        // above; kept as a hard guard because every name depends on it.
        throw std::logic_error("non-primitive polynomial for GF(2^" + std::to_string(m) + ")");
      }
      exp_[i] = x;
      exp_[i + order_] = x;
      log_[x] = i;
      x <<= 1;
      if (x > order_) x ^= poly_;
    }
  }
}

std::uint32_t GF2m::mul_noluts(std::uint32_t a, std::uint32_t b) const {
  std::uint64_t acc = 0;
  std::uint64_t aa = a;
  while (b != 0) {
    if (b & 1u) acc ^= aa;
    aa <<= 1;
    b >>= 1;
  }
  for (int d = 2 * m_ - 2; d >= m_; --d) {
    if ((acc >> d) & 1u) acc ^= static_cast<std::uint64_t>(poly_) << (d - m_);
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t GF2m::pow(std::uint32_t a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1u : 0u;
  e %= order_;
  std::uint32_t result = 1;
  std::uint32_t base = a;
  while (e != 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t GF2m::inv(std::uint32_t a) const {
  if (a == 0) throw BadParameters("inverse of 0 in GF(2^m)");
  if (!exp_.empty()) return exp_[order_ - log_[a]];
  return pow(a, order_ - 1ull);  // a^(2^m - 2)
}

std::uint32_t GF2m::alpha_pow(std::uint64_t e) const {
  e %= order_;
  if (!exp_.empty()) return exp_[e];
  return pow(2u, e);
}

}  // namespace kout
