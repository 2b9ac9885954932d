#include "kout/naming.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "kout/gf2m.hpp"
#include "kout/rng.hpp"

namespace kout {

NamingScheme::NamingScheme(std::uint32_t n, std::uint32_t r, std::uint32_t ell,
                           SchemeKind kind)
    : n_(n), r_(r), ell_(ell), kind_(kind) {
  if (n < 2) throw BadParameters("naming scheme needs a universe of at least 2 vertices");
  if (r < 1) throw BadParameters("naming scheme needs resilience r >= 1");
}

void NamingScheme::check_edge(Edge e) const {
  if (e.v >= n_ || e.u >= e.v) {
    throw EdgeOutOfUniverse("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") outside canonical K_" + std::to_string(n_) + " universe");
  }
}

void NamingScheme::check_decode_args(const BitString& syndrome,
                                     std::uint32_t weight_cap) const {
  if (weight_cap < 1 || weight_cap > r_) {
    throw BadParameters("decode weight cap must be in [1, r]");
  }
  if (syndrome.bit_count() != ell_) {
    throw SchemeMismatch("syndrome has " + std::to_string(syndrome.bit_count()) +
                         " bits, scheme names have " + std::to_string(ell_));
  }
}

std::uint64_t NamingScheme::edge_index(Edge e) const {
  check_edge(e);
  std::uint64_t u = e.u;
  std::uint64_t v = e.v;
  return u * n_ - u * (u + 1) / 2 + (v - u);
}

Edge NamingScheme::edge_at(std::uint64_t index) const {
  if (index < 1 || index > universe_edge_count()) {
    throw BadParameters("edge index " + std::to_string(index) + " out of range");
  }
  // base(u) = u*n - u(u+1)/2 is the last index of the block before u's;
  // binary-search keeps base(lo) < index <= base(hi), so u = lo at the end.
  std::uint64_t lo = 0;
  std::uint64_t hi = n_ - 1;
  auto base = [this](std::uint64_t u) { return u * n_ - u * (u + 1) / 2; };
  while (lo + 1 < hi) {
    std::uint64_t mid = (lo + hi) / 2;
    if (base(mid) < index) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  std::uint64_t v = lo + (index - base(lo));
  return Edge{static_cast<VertexId>(lo), static_cast<VertexId>(v)};
}

std::unique_ptr<NamingScheme> make_scheme(SchemeKind kind, std::uint32_t n,
                                          std::uint32_t r, std::uint64_t seed) {
  return kind == SchemeKind::bch ? bch_names(n, r) : random_names(n, r, seed);
}

const char* to_string(SchemeKind kind) {
  return kind == SchemeKind::bch ? "bch" : "random_names";
}

BitString xor_names(const NamingScheme& scheme, std::span<const Edge> edges) {
  BitString acc(scheme.name_bits());
  for (const Edge& e : edges) acc ^= scheme.name(e);
  return acc;
}

BitString vertex_sketch(const Graph& g, const NamingScheme& scheme, VertexId v) {
  if (g.vertex_count() > scheme.universe_n()) {
    throw EdgeOutOfUniverse("graph on " + std::to_string(g.vertex_count()) +
                            " vertices exceeds scheme universe K_" +
                            std::to_string(scheme.universe_n()));
  }
  BitString acc(scheme.name_bits());
  for (VertexId w : g.neighbors(v)) acc ^= scheme.name(make_edge(v, w));
  return acc;
}

// ---------------------------------------------------------------------------
// Random names

namespace {

class RandomNamingScheme final : public NamingScheme {
 public:
  RandomNamingScheme(std::uint32_t n, std::uint32_t r, std::uint64_t seed)
      : NamingScheme(n, r, ell_for(n, r), SchemeKind::random_names), seed_(seed) {}

  BitString name(Edge e) const override {
    std::uint64_t index = edge_index(e);
    SplitMix64 engine(mix64(seed_, index));
    BitString out(ell_);
    for (std::uint32_t w = 0; w < (ell_ + 63) / 64; ++w) out.set_word(w, engine());
    return out;
  }

  std::optional<std::vector<Edge>> decode(const BitString& syndrome,
                                          std::uint32_t weight_cap) const override;

  std::string descriptor() const override {
    return "{\"kind\":\"random\",\"n\":" + std::to_string(n_) + ",\"r\":" +
           std::to_string(r_) + ",\"ell\":" + std::to_string(ell_) + ",\"seed\":" +
           std::to_string(seed_) + "}";
  }

 private:
  static std::uint32_t ell_for(std::uint32_t n, std::uint32_t r) {
    if (n < 2) throw BadParameters("naming scheme needs n >= 2");
    return static_cast<std::uint32_t>(std::ceil(4.0 * r * std::log2(static_cast<double>(n))));
  }

  std::uint64_t seed_;
};

/** Sum over i <= a of C(u, i), clamped to avoid overflow. */
std::uint64_t subset_count_up_to(std::uint64_t u, std::uint32_t a, std::uint64_t clamp) {
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(u, 0)
  for (std::uint32_t i = 0; i <= a; ++i) {
    total += binom;
    if (total >= clamp) return clamp;
    if (i == a) break;
    unsigned __int128 next = static_cast<unsigned __int128>(binom) * (u - i) / (i + 1);
    if (next >= clamp) return clamp;  // the running sum is about to pass the clamp
    binom = static_cast<std::uint64_t>(next);
  }
  return total;
}

/** Enumerate all subsets of {1..u} with size <= cap, invoking fn(indices,
 *  xor_of_names) at every node of the enumeration tree (empty set first). */
template <typename Fn>
bool enumerate_subsets(const NamingScheme& scheme, std::uint64_t u, std::uint32_t cap,
                       std::vector<std::uint32_t>& stack, BitString& acc,
                       std::uint64_t first, Fn&& fn) {
  if (!fn(stack, acc)) return false;  // fn returns false to stop early
  if (stack.size() >= cap) return true;
  for (std::uint64_t i = first; i <= u; ++i) {
    BitString name = scheme.name(scheme.edge_at(i));
    acc ^= name;
    stack.push_back(static_cast<std::uint32_t>(i));
    bool keep_going = enumerate_subsets(scheme, u, cap, stack, acc, i + 1, fn);
    stack.pop_back();
    acc ^= name;
    if (!keep_going) return false;
  }
  return true;
}

std::optional<std::vector<Edge>> RandomNamingScheme::decode(const BitString& syndrome,
                                                            std::uint32_t weight_cap) const {
  check_decode_args(syndrome, weight_cap);
  if (syndrome.is_zero()) return std::vector<Edge>{};

  // Meet-in-the-middle subset search.  Kept to desk scale: a small edge
  // universe, small weight, and a hard budget on the enumerated half.
  // (Enumerating C(2000, 3) half-subsets would already need ~1e9 table
  // entries, so the advertised caps alone are not enough.)
  constexpr std::uint64_t kUniverseCap = 2000;
  constexpr std::uint32_t kWeightCap = 6;
  constexpr std::uint64_t kHalfEnumBudget = 6'000'000;
  std::uint64_t u = universe_edge_count();
  if (u > kUniverseCap || weight_cap > kWeightCap) return std::nullopt;
  std::uint32_t half_lo = weight_cap / 2;        // table side
  std::uint32_t half_hi = (weight_cap + 1) / 2;  // scan side
  if (subset_count_up_to(u, half_hi, kHalfEnumBudget + 1) > kHalfEnumBudget) {
    return std::nullopt;
  }

  // Table side: every subset of size <= floor(w/2), keyed by a 64-bit fold
  // of its XOR.  Truncating the key can only add false candidates; every
  // hit is re-verified against the full syndrome below.  Subsets pack into
  // one word (indices are <= 2000, three 21-bit slots).
  std::vector<std::pair<std::uint64_t, std::uint64_t>> table;
  table.reserve(static_cast<std::size_t>(subset_count_up_to(u, half_lo, kHalfEnumBudget)));
  {
    std::vector<std::uint32_t> stack;
    BitString acc(ell_);
    enumerate_subsets(*this, u, half_lo, stack, acc, 1,
                      [&](const std::vector<std::uint32_t>& subset, const BitString& x) {
                        std::uint64_t packed = 0;
                        for (std::size_t j = 0; j < subset.size(); ++j) {
                          packed |= static_cast<std::uint64_t>(subset[j]) << (21 * j);
                        }
                        table.emplace_back(x.hash64(), packed);
                        return true;
                      });
  }
  std::sort(table.begin(), table.end());

  // Scan side: subsets of size <= ceil(w/2); look up syndrome xor X(B).
  std::optional<std::vector<Edge>> result;
  std::vector<std::uint32_t> stack;
  BitString acc(ell_);
  enumerate_subsets(
      *this, u, half_hi, stack, acc, 1,
      [&](const std::vector<std::uint32_t>& b_subset, const BitString& xb) {
        BitString target = syndrome ^ xb;
        std::uint64_t key = target.hash64();
        auto lo = std::lower_bound(table.begin(), table.end(),
                                   std::make_pair(key, std::uint64_t{0}));
        for (auto it = lo; it != table.end() && it->first == key; ++it) {
          // Unpack A, combine with B as a symmetric difference.
          std::vector<std::uint32_t> indices;
          for (int j = 0; j < 3; ++j) {
            std::uint32_t idx = (it->second >> (21 * j)) & 0x1FFFFF;
            if (idx != 0) indices.push_back(idx);
          }
          for (std::uint32_t idx : b_subset) {
            auto pos = std::find(indices.begin(), indices.end(), idx);
            if (pos != indices.end()) {
              indices.erase(pos);
            } else {
              indices.push_back(idx);
            }
          }
          if (indices.empty() || indices.size() > weight_cap) continue;
          std::sort(indices.begin(), indices.end());
          std::vector<Edge> edges;
          edges.reserve(indices.size());
          for (std::uint32_t idx : indices) edges.push_back(edge_at(idx));
          if (xor_names(*this, edges) == syndrome) {
            result = std::move(edges);
            return false;  // unique by resilience; stop the scan
          }
        }
        return true;
      });
  return result;
}

// ---------------------------------------------------------------------------
// BCH names

class BchNamingScheme final : public NamingScheme {
 public:
  BchNamingScheme(std::uint32_t n, std::uint32_t r)
      : NamingScheme(n, r, r * degree_for(n), SchemeKind::bch), gf_(degree_for(n)) {
    std::uint64_t u = universe_edge_count();
    if (u <= kAlphaTableCap) {
      alpha_pow_.resize(u + 1);
      alpha_pow_[0] = 1;
      for (std::uint64_t i = 1; i <= u; ++i) {
        alpha_pow_[i] = gf_.mul(alpha_pow_[i - 1], 2u);
      }
    }
  }

  BitString name(Edge e) const override {
    std::uint64_t index = edge_index(e);
    std::uint32_t y = alpha_pow_.empty() ? gf_.alpha_pow(index) : alpha_pow_[index];
    std::uint32_t y2 = gf_.sq(y);
    int m = gf_.degree();
    BitString out(ell_);
    std::uint32_t block = y;  // alpha^((2j+1) * index), starting at j = 0
    for (std::uint32_t j = 0; j < r_; ++j) {
      for (int t = 0; t < m; ++t) {
        if ((block >> t) & 1u) out.set(j * m + t, true);
      }
      block = gf_.mul(block, y2);
    }
    return out;
  }

  std::optional<std::vector<Edge>> decode(const BitString& syndrome,
                                          std::uint32_t weight_cap) const override;

  std::string descriptor() const override {
    return "{\"kind\":\"bch\",\"n\":" + std::to_string(n_) + ",\"r\":" + std::to_string(r_) +
           ",\"m\":" + std::to_string(gf_.degree()) + ",\"ell\":" + std::to_string(ell_) + "}";
  }

 private:
  // Powers of alpha for every edge index are cached up to this universe
  // size (4 bytes each); beyond it names fall back to modular
  // exponentiation.  Only the field elements are cached, never the names.
  static constexpr std::uint64_t kAlphaTableCap = 1u << 22;

  static int degree_for(std::uint32_t n) {
    std::uint64_t u = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    for (int m = 3; m <= 24; ++m) {
      if (u <= (1ull << m) - 1) return m;
    }
    throw FieldTooSmall("edge universe C(" + std::to_string(n) +
                        ",2) exceeds 2^24 - 1; no supported field degree");
  }

  GF2m gf_;
  std::vector<std::uint32_t> alpha_pow_;
};

std::optional<std::vector<Edge>> BchNamingScheme::decode(const BitString& syndrome,
                                                         std::uint32_t weight_cap) const {
  check_decode_args(syndrome, weight_cap);
  if (syndrome.is_zero()) return std::vector<Edge>{};
  int m = gf_.degree();
  std::uint32_t t = weight_cap;

  // Power sums S_q = sum over error locators X of X^q, for q = 1..2t.
  // Odd q come straight from the syndrome blocks; even q follow from the
  // characteristic-2 identity S_2q = S_q^2.
  std::vector<std::uint32_t> s(2 * t + 1, 0);
  for (std::uint32_t q = 1; q <= 2 * t; ++q) {
    if (q % 2 == 1) {
      std::uint32_t block = (q - 1) / 2;
      std::uint32_t value = 0;
      for (int bit = 0; bit < m; ++bit) {
        if (syndrome.get(block * m + bit)) value |= 1u << bit;
      }
      s[q] = value;
    } else {
      s[q] = gf_.sq(s[q / 2]);
    }
  }

  // Berlekamp-Massey: the minimal LFSR generating S_1..S_2t is the error
  // locator polynomial Lambda(x) = prod (1 - X_j x).
  std::vector<std::uint32_t> lambda{1};
  std::vector<std::uint32_t> prev{1};
  std::uint32_t prev_disc = 1;
  std::uint32_t gap = 1;
  std::uint32_t errors = 0;  // current LFSR length L
  for (std::uint32_t step = 0; step < 2 * t; ++step) {
    std::uint32_t disc = s[step + 1];
    for (std::uint32_t i = 1; i <= errors && i < lambda.size(); ++i) {
      disc ^= gf_.mul(lambda[i], s[step + 1 - i]);
    }
    if (disc == 0) {
      ++gap;
      continue;
    }
    std::uint32_t coef = gf_.mul(disc, gf_.inv(prev_disc));
    std::vector<std::uint32_t> next = lambda;
    if (next.size() < prev.size() + gap) next.resize(prev.size() + gap, 0);
    for (std::size_t j = 0; j < prev.size(); ++j) {
      next[j + gap] ^= gf_.mul(coef, prev[j]);
    }
    if (2 * errors <= step) {
      prev = std::move(lambda);
      prev_disc = disc;
      errors = step + 1 - errors;
      gap = 1;
    } else {
      ++gap;
    }
    lambda = std::move(next);
  }
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  if (lambda.empty() || lambda.size() - 1 != errors || errors > t) return std::nullopt;

  // Chien-style scan over edge indices: index i is an error location iff
  // Lambda(alpha^-i) = 0.  term[j] tracks lambda_j * alpha^(-j*i).
  std::uint64_t u = universe_edge_count();
  std::vector<std::uint32_t> term(lambda.begin(), lambda.end());
  std::vector<std::uint32_t> step_factor(lambda.size());
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    step_factor[j] = gf_.alpha_pow(gf_.order() - static_cast<std::uint32_t>(j) % gf_.order());
  }
  std::vector<Edge> found;
  std::uint32_t eu = 0;
  std::uint32_t ev = 1;
  for (std::uint64_t i = 1; i <= u; ++i) {
    std::uint32_t value = 0;
    for (std::size_t j = 0; j < term.size(); ++j) {
      term[j] = gf_.mul(term[j], step_factor[j]);
      value ^= term[j];
    }
    if (value == 0) {
      if (found.size() == errors) return std::nullopt;  // more roots than degree
      found.push_back(Edge{eu, ev});
    }
    ++ev;
    if (ev == n_) {
      ++eu;
      ev = eu + 1;
    }
  }
  if (found.size() != errors) return std::nullopt;
  // Re-encode: the locator matched power sums up to 2t, but the name has r
  // blocks; a spurious solution (true cut wider than the cap) fails here.
  if (!(xor_names(*this, found) == syndrome)) return std::nullopt;
  return found;
}

}  // namespace

std::unique_ptr<NamingScheme> random_names(std::uint32_t n, std::uint32_t r,
                                           std::uint64_t seed) {
  return std::make_unique<RandomNamingScheme>(n, r, seed);
}

std::unique_ptr<NamingScheme> bch_names(std::uint32_t n, std::uint32_t r) {
  return std::make_unique<BchNamingScheme>(n, r);
}

}  // namespace kout
