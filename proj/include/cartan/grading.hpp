#ifndef CARTAN_GRADING_HPP
#define CARTAN_GRADING_HPP

#include <array>
#include <cstdint>
#include <unordered_map>

#include "cartan/table.hpp"

namespace cartan {

constexpr int kMaxRank = 8;

/// Joint (weight shift, degree shift) label of one block of a graded linear
/// system. Every constraint row of the derivation and biderivation systems
/// touches unknowns of exactly one block, so the systems decompose.
struct BlockKey {
  std::array<std::int16_t, kMaxRank> w{};
  std::int16_t deg = 0;
  friend bool operator==(const BlockKey&, const BlockKey&) = default;
  friend bool operator<(const BlockKey& x, const BlockKey& y) {
    if (x.deg != y.deg) return x.deg < y.deg;
    return x.w < y.w;
  }
  bool is_zero_weight() const {
    for (auto v : w)
      if (v) return false;
    return true;
  }
};

struct BlockKeyHash {
  std::size_t operator()(const BlockKey& k) const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    for (auto v : k.w) mix(std::uint64_t(std::uint16_t(v)));
    mix(std::uint64_t(std::uint16_t(k.deg)));
    return std::size_t(h);
  }
};

/// Packed per-basis grading data for fast block-key arithmetic. Requires
/// integer weights of modest size, which all tables built here have.
struct GradedIndex {
  int dim = 0;
  int rank = 0;
  int modn = 0;  // 0 means plain integer grading
  std::vector<std::array<std::int16_t, kMaxRank>> w;
  std::vector<std::int16_t> deg;
  std::vector<std::uint8_t> par;

  static GradedIndex of(const AlgebraTable& t) {
    GradedIndex g;
    g.dim = t.dim;
    g.rank = t.rank();
    if (g.rank > kMaxRank) throw std::invalid_argument("Cartan rank too large for solver");
    g.modn = t.grading_modulus.value_or(0);
    g.w.resize(t.dim);
    g.deg.resize(t.dim);
    g.par.resize(t.dim);
    for (int k = 0; k < t.dim; ++k) {
      g.w[k].fill(0);
      for (int j = 0; j < g.rank; ++j) {
        const Rational& v = t.weights[k][j];
        if (!is_integer(v) || abs(v.get_num()) > 1000)
          throw std::invalid_argument("solver needs small integer weights");
        g.w[k][j] = std::int16_t(v.get_num().get_si());
      }
      g.deg[k] = std::int16_t(t.zdegree[k]);
      g.par[k] = std::uint8_t(t.parity[k]);
    }
    return g;
  }

  std::int16_t norm(long long d) const {
    if (!modn) return std::int16_t(d);
    return std::int16_t(((d % modn) + modn) % modn);
  }

  /// Key of the unknown f(e_a, e_b) -> e_k (biderivation coefficient).
  BlockKey triple_key(int a, int b, int k) const {
    BlockKey key;
    for (int j = 0; j < rank; ++j) key.w[j] = std::int16_t(w[k][j] - w[a][j] - w[b][j]);
    key.deg = norm((long long)deg[k] - deg[a] - deg[b]);
    return key;
  }

  /// Key of the unknown D(e_k) -> e_m (derivation matrix entry).
  BlockKey pair_key(int k, int m) const {
    BlockKey key;
    for (int j = 0; j < rank; ++j) key.w[j] = std::int16_t(w[m][j] - w[k][j]);
    key.deg = norm((long long)deg[m] - deg[k]);
    return key;
  }

  std::vector<Rational> key_weight(const BlockKey& k) const {
    std::vector<Rational> out;
    for (int j = 0; j < rank; ++j) out.emplace_back(long(k.w[j]));
    return out;
  }
};

}  // namespace cartan

#endif
