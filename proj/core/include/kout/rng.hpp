#pragma once

#include <cstdint>

namespace kout {

/** splitmix64 finalizer; also the hash used to derive seeds. */
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/** Combine a seed with a stream/child index into a new 64-bit seed. */
inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
  return mix64(a ^ (mix64(b) + 0x9e3779b97f4a7c15ULL));
}

/**
 * Small deterministic PRNG (splitmix64 sequence).  Used everywhere instead
 * of std::mt19937_64 + std distributions because (a) construction is two
 * words, cheap enough to make one engine per vertex per trial, and (b) the
 * draw sequence is fixed by this header alone, so identical seeds give
 * byte-identical results on any compiler.
 */
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~0ULL; }

  /** Uniform integer in [0, bound); bound > 0.  Fixed-point scaling: the
   *  bias is bound/2^64, far below anything observable at desk scale. */
  std::uint32_t next_below(std::uint32_t bound) {
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>((*this)()) * bound) >> 64);
  }

  /** Uniform double in [0, 1) with 53 random bits. */
  double next_double() {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

/**
 * Seed-addressed stream of randomness.  A stream is identified by
 * (master_seed, stream_index); the pair fully determines every draw.
 * Substreams chain by folding the parent identity into the child's master,
 * so e.g. the per-vertex streams of two different trials never collide.
 */
struct RngStream {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;

  SplitMix64 make_engine() const { return SplitMix64(mix64(master_seed, stream_index)); }

  RngStream substream(std::uint64_t child) const {
    return RngStream{mix64(master_seed, stream_index), child};
  }

  /** Stream for Monte Carlo trial t: master_seed xor hash(t). */
  static RngStream for_trial(std::uint64_t master_seed, std::uint64_t t) {
    return RngStream{master_seed ^ mix64(t), 0};
  }
};

}  // namespace kout
