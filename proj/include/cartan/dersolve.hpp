#ifndef CARTAN_DERSOLVE_HPP
#define CARTAN_DERSOLVE_HPP

#include <map>
#include <memory>

#include "cartan/families.hpp"
#include "cartan/grading.hpp"

namespace cartan {

/// One (weight shift, degree shift) block of the superderivation system.
struct DerBlock {
  BlockKey key;
  int unknowns = 0;
  int rank = 0;
  long long nullity = 0;
};

/// Superderivation space of one parity: dimension and (over the rationals)
/// a basis of solutions as sparse matrices, entry (k -> m) stored at column
/// k*dim + m.
struct DerSolution {
  int gamma = 0;
  std::vector<DerBlock> blocks;
  long long dimension = 0;
  std::vector<QVec> maps;  // retained only for exact solves
};

/// Unknowns of the parity-gamma derivation system, blocked by the joint
/// weight/degree shift. Unknown (k -> m) requires |e_m| = |e_k| + gamma.
struct DerUnknowns {
  struct Block {
    BlockKey key;
    std::vector<std::int64_t> cols;  // global ids k*dim+m
  };
  std::vector<Block> blocks;
  std::vector<std::int32_t> block_of;  // dim*dim -> block index or -1
  std::vector<std::int32_t> col_of;    // dim*dim -> local column
  int total = 0;

  static DerUnknowns enumerate(const GradedIndex& g, int gamma, bool blocked) {
    DerUnknowns u;
    const int dim = g.dim;
    u.block_of.assign(std::size_t(dim) * dim, -1);
    u.col_of.assign(std::size_t(dim) * dim, -1);
    std::map<BlockKey, int> ids;
    for (int k = 0; k < dim; ++k)
      for (int m = 0; m < dim; ++m) {
        if ((g.par[k] ^ g.par[m]) != (gamma & 1)) continue;
        BlockKey key = blocked ? g.pair_key(k, m) : BlockKey{};
        auto [it, fresh] = ids.emplace(key, int(u.blocks.size()));
        if (fresh) u.blocks.push_back({key, {}});
        auto& blk = u.blocks[it->second];
        std::size_t id = std::size_t(k) * dim + m;
        u.block_of[id] = it->second;
        u.col_of[id] = std::int32_t(blk.cols.size());
        blk.cols.push_back(std::int64_t(id));
        ++u.total;
      }
    return u;
  }
};

/// Streams the defining identity rows D[e_a,e_b] = [De_a,e_b] +
/// (-1)^{gamma|e_a|}[e_a,De_b] over all ordered pairs to a sink callable as
/// sink(block_index, row) with local column indices.
template <class Sink>
void stream_der_rows(const AlgebraTable& t, const GradedIndex& g, int gamma,
                     const DerUnknowns& u, Sink&& sink) {
  const int dim = t.dim;
  // transposed access: for fixed a, entries (p, m, c) with c_{ap}^m != 0
  std::vector<std::vector<std::pair<int, const std::pair<int, Rational>*>>> left(dim);
  for (int a = 0; a < dim; ++a)
    for (int p = 0; p < dim; ++p)
      for (const auto& e : t.bracket(a, p)) left[a].emplace_back(p, &e);

  std::map<std::pair<int, std::int64_t>, Rational> row_acc;  // (m, id) -> coeff
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      row_acc.clear();
      auto touch = [&](int m, std::int64_t id, const Rational& c) {
        auto [it, fresh] = row_acc.emplace(std::make_pair(m, id), c);
        if (!fresh) it->second += c;
      };
      for (const auto& [k, c] : t.bracket(a, b)) {
        for (int m = 0; m < dim; ++m) {
          std::size_t id = std::size_t(k) * dim + m;
          if (u.block_of[id] >= 0) touch(m, std::int64_t(id), c);
        }
      }
      // -[De_a, e_b]: for unknown (a -> p), coordinate m needs c_{pb}^m
      for (int p = 0; p < dim; ++p) {
        std::size_t id = std::size_t(a) * dim + p;
        if (u.block_of[id] < 0) continue;
        for (const auto& [m, c] : t.bracket(p, b)) touch(m, std::int64_t(id), -c);
      }
      // -(-1)^{gamma |e_a|} [e_a, De_b]
      bool neg = (gamma & g.par[a]) != 0;
      for (const auto& [p, e] : left[a]) {
        std::size_t id = std::size_t(b) * dim + p;
        if (u.block_of[id] < 0) continue;
        touch(e->first, std::int64_t(id), neg ? e->second : -e->second);
      }
      // emit one row per coordinate m
      int cur_m = -1;
      std::vector<std::pair<std::int32_t, Rational>> row;
      int cur_block = -1;
      auto flush = [&]() {
        if (!row.empty()) {
          std::sort(row.begin(), row.end(),
                    [](const auto& x, const auto& y) { return x.first < y.first; });
          sink(cur_block, row);
          row.clear();
        }
      };
      for (const auto& [key, c] : row_acc) {
        if (is_zero(c)) continue;
        if (key.first != cur_m) {
          flush();
          cur_m = key.first;
          cur_block = u.block_of[std::size_t(key.second)];
        }
        row.emplace_back(u.col_of[std::size_t(key.second)], c);
      }
      flush();
    }
}

/// Nullspace of the parity-gamma derivation system over the given field.
template <class F>
DerSolution solve_derivations(const AlgebraTable& t, int gamma, const F& field,
                              bool blocked = true) {
  GradedIndex g = GradedIndex::of(t);
  DerUnknowns u = DerUnknowns::enumerate(g, gamma, blocked);
  std::vector<std::unique_ptr<Eliminator<F>>> elims;
  for (auto& blk : u.blocks)
    elims.push_back(std::make_unique<Eliminator<F>>(field, int(blk.cols.size())));
  stream_der_rows(t, g, gamma, u,
                  [&](int block, const std::vector<std::pair<std::int32_t, Rational>>& row) {
                    SparseVec<F> r;
                    r.reserve(row.size());
                    for (const auto& [c, v] : row) r.emplace_back(c, field.from_rational(v));
                    elims[block]->add_row(r);
                  });
  DerSolution sol;
  sol.gamma = gamma;
  for (std::size_t i = 0; i < u.blocks.size(); ++i) {
    DerBlock db;
    db.key = u.blocks[i].key;
    db.unknowns = int(u.blocks[i].cols.size());
    db.rank = elims[i]->rank();
    db.nullity = elims[i]->nullity();
    sol.dimension += db.nullity;
    if constexpr (F::exact) {
      if (db.nullity > 0)
        for (auto& v : elims[i]->nullspace()) {
          QVec map;
          for (auto& [c, val] : v)
            map.emplace_back(std::int32_t(u.blocks[i].cols[c]), val);
          std::sort(map.begin(), map.end(),
                    [](const auto& x, const auto& y) { return x.first < y.first; });
          sol.maps.push_back(std::move(map));
        }
    }
    sol.blocks.push_back(std::move(db));
  }
  std::sort(sol.blocks.begin(), sol.blocks.end(),
            [](const DerBlock& x, const DerBlock& y) { return x.key < y.key; });
  return sol;
}

/// Comparison of the solved superderivation space with the adjoint action of
/// the extension algebra.
struct DerClassifyReport {
  long long dim_even = 0, dim_odd = 0;
  long long expected = 0;  // dim of the extension
  bool ad_injective = false;
  bool span_equal = false;
  bool ad_annihilated = false;  // every ad map solves the system
  std::vector<std::string> outer_generators;
  bool pass = false;
};

DerClassifyReport classify_derivations(const AlgebraTable& t, const ExtendedAlgebra& ext,
                                       const DerSolution& even, const DerSolution& odd);

/// Exact residual of a candidate map (column k*dim+m) against every
/// constraint row of the parity-gamma system.
bool der_residual_is_zero(const AlgebraTable& t, int gamma, const QVec& map);

/// Full derivation run: exact solve of both parities, classification against
/// the extension, and a modular cross-check of the dimension.
struct DerReport {
  long long dim_even = 0, dim_odd = 0;
  long long modp_dim_even = 0, modp_dim_odd = 0;
  bool modp_matches = false;
  std::uint64_t prime = 0;
  DerClassifyReport classify;
  bool pass = false;
};

DerReport run_der(const AlgebraTable& t, const ExtendedAlgebra& ext, std::uint64_t prime);

}  // namespace cartan

#endif
