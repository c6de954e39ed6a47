#ifndef CARTAN_BIDERSOLVE_HPP
#define CARTAN_BIDERSOLVE_HPP

#include <map>
#include <memory>
#include <optional>

#include "cartan/families.hpp"
#include "cartan/grading.hpp"

namespace cartan {

/// Structure constants and their transposes converted into a solver field.
template <class F>
struct FieldTable {
  int dim = 0;
  std::vector<std::uint8_t> par;
  // c[a*dim+b] lists (k, c_ab^k)
  std::vector<std::vector<std::pair<std::int32_t, typename F::Elt>>> c;

  static FieldTable of(const AlgebraTable& t, const F& f) {
    FieldTable ft;
    ft.dim = t.dim;
    ft.par.assign(t.parity.begin(), t.parity.end());
    ft.c.resize(std::size_t(t.dim) * t.dim);
    for (std::size_t i = 0; i < ft.c.size(); ++i)
      for (const auto& [k, v] : t.sc[i])
        ft.c[i].emplace_back(k, f.from_rational(v));
    return ft;
  }
  const std::vector<std::pair<std::int32_t, typename F::Elt>>& bracket(int a, int b) const {
    return c[std::size_t(a) * dim + b];
  }
};

/// Admissible unknowns u_{ab}^k of a parity-gamma super-biderivation
/// (|e_k| = |e_a| + |e_b| + gamma), partitioned into graded blocks.
/// Global id of the triple (a,b,k) is (a*dim+b)*dim+k.
struct BiderUnknowns {
  struct Block {
    BlockKey key;
    std::vector<std::int64_t> ids;
  };
  std::vector<Block> blocks;
  std::vector<std::int32_t> block_of;  // dim^3, -1 when inadmissible
  std::vector<std::int32_t> col_of;
  long long total = 0;

  static BiderUnknowns enumerate(const GradedIndex& g, int gamma, bool blocked) {
    BiderUnknowns u;
    const int dim = g.dim;
    u.block_of.assign(std::size_t(dim) * dim * dim, -1);
    u.col_of.assign(std::size_t(dim) * dim * dim, -1);
    std::map<BlockKey, int> ids;
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) {
        int want = (g.par[a] ^ g.par[b] ^ gamma) & 1;
        for (int k = 0; k < dim; ++k) {
          if (g.par[k] != want) continue;
          BlockKey key = blocked ? g.triple_key(a, b, k) : BlockKey{};
          auto [it, fresh] = ids.emplace(key, int(u.blocks.size()));
          if (fresh) u.blocks.push_back({key, {}});
          auto& blk = u.blocks[it->second];
          std::size_t id = (std::size_t(a) * dim + b) * dim + k;
          u.block_of[id] = it->second;
          u.col_of[id] = std::int32_t(blk.ids.size());
          blk.ids.push_back(std::int64_t(id));
          ++u.total;
        }
      }
    return u;
  }
};

/// Streams every scalar constraint row of the two defining identities over
/// all ordered basis triples (a,b,c), in lexicographic triple order with the
/// first identity's rows before the second's. The sink is called as
/// sink(block_index, row) where row holds (local column, coefficient).
template <class F, class Sink>
void stream_bider_rows(const FieldTable<F>& t, const F& f, int gamma,
                       const BiderUnknowns& u, Sink&& sink) {
  const int dim = t.dim;
  using Elt = typename F::Elt;
  struct Entry {
    std::int32_t m;
    std::int64_t id;
    Elt c;
  };
  std::vector<Entry> acc;
  std::vector<std::pair<std::int32_t, Elt>> row;

  // admissible target lists per parity
  std::vector<std::vector<int>> by_par(2);
  for (int k = 0; k < dim; ++k) by_par[t.par[k]].push_back(k);

  auto emit = [&]() {
    if (acc.empty()) return;
    std::sort(acc.begin(), acc.end(), [](const Entry& x, const Entry& y) {
      if (x.m != y.m) return x.m < y.m;
      return x.id < y.id;
    });
    std::size_t i = 0;
    while (i < acc.size()) {
      std::int32_t m = acc[i].m;
      row.clear();
      int block = -1;
      while (i < acc.size() && acc[i].m == m) {
        Elt v = acc[i].c;
        std::int64_t id = acc[i].id;
        ++i;
        while (i < acc.size() && acc[i].m == m && acc[i].id == id) {
          v = f.add(v, acc[i].c);
          ++i;
        }
        if (!f.is_zero(v)) {
          block = u.block_of[std::size_t(id)];
          row.emplace_back(u.col_of[std::size_t(id)], v);
        }
      }
      if (!row.empty()) {
        std::sort(row.begin(), row.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        sink(block, row);
      }
    }
    acc.clear();
  };

  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      for (int c = 0; c < dim; ++c) {
        // identity in the first argument:
        // f([a,b],c)_m - (-1)^{gamma|a|}[a, f(b,c)]_m - (-1)^{|b||c|}[f(a,c), b]_m
        for (const auto& [k, v] : t.bracket(a, b)) {
          int want = (t.par[k] ^ t.par[c] ^ gamma) & 1;
          std::size_t base = (std::size_t(k) * dim + c) * dim;
          for (int m : by_par[want]) acc.push_back({m, std::int64_t(base + m), v});
        }
        {
          bool neg1 = (gamma & t.par[a]) != 0;  // sign of -( -1 )^{gamma|a|}
          std::size_t base = (std::size_t(b) * dim + c) * dim;
          int wantp = (t.par[b] ^ t.par[c] ^ gamma) & 1;
          for (int p : by_par[wantp]) {
            for (const auto& [m, v] : t.bracket(a, p))
              acc.push_back({m, std::int64_t(base + p), neg1 ? v : f.neg(v)});
          }
          bool neg2 = (t.par[b] & t.par[c]) != 0;
          std::size_t base2 = (std::size_t(a) * dim + c) * dim;
          int wantq = (t.par[a] ^ t.par[c] ^ gamma) & 1;
          for (int p : by_par[wantq]) {
            for (const auto& [m, v] : t.bracket(p, b))
              acc.push_back({m, std::int64_t(base2 + p), neg2 ? v : f.neg(v)});
          }
        }
        emit();
        // identity in the second argument:
        // f(a,[b,c])_m - [f(a,b), c]_m - (-1)^{(gamma+|a|)|b|}[b, f(a,c)]_m
        for (const auto& [k, v] : t.bracket(b, c)) {
          int want = (t.par[a] ^ t.par[k] ^ gamma) & 1;
          std::size_t base = (std::size_t(a) * dim + k) * dim;
          for (int m : by_par[want]) acc.push_back({m, std::int64_t(base + m), v});
        }
        {
          std::size_t base = (std::size_t(a) * dim + b) * dim;
          int wantp = (t.par[a] ^ t.par[b] ^ gamma) & 1;
          for (int p : by_par[wantp]) {
            for (const auto& [m, v] : t.bracket(p, c)) acc.push_back({m, std::int64_t(base + p), f.neg(v)});
          }
          bool neg3 = ((gamma ^ t.par[a]) & t.par[b]) != 0;
          std::size_t base2 = (std::size_t(a) * dim + c) * dim;
          int wantq = (t.par[a] ^ t.par[c] ^ gamma) & 1;
          for (int p : by_par[wantq]) {
            for (const auto& [m, v] : t.bracket(b, p))
              acc.push_back({m, std::int64_t(base2 + p), neg3 ? v : f.neg(v)});
          }
        }
        emit();
      }
}

/// Per-block outcome of one parity sector.
struct BiderBlock {
  BlockKey key;
  int parity = 0;
  long long unknowns = 0;
  int rank = 0;
  long long nullity = 0;
  bool aborted = false;
};

/// Solved sector: block table plus retained kernels of nonzero blocks
/// (coordinates are global triple ids).
template <class F>
struct BiderSector {
  int gamma = 0;
  std::vector<BiderBlock> blocks;
  long long total_nullity = 0;
  bool aborted = false;
  long long zero_block_nullity = 0;  // block with zero weight and degree shift
  std::vector<std::vector<std::pair<std::int64_t, typename F::Elt>>> kernels;
};

struct BiderOptions {
  bool blocked = true;
  long long block_row_limit = -1;  // abort a block past this many rows
  bool retain_kernels = true;
};

template <class F>
BiderSector<F> solve_bder_sector(const AlgebraTable& t, int gamma, const F& field,
                                 const BiderOptions& opt = {}) {
  GradedIndex g = GradedIndex::of(t);
  BiderUnknowns u = BiderUnknowns::enumerate(g, gamma, opt.blocked);
  FieldTable<F> ft = FieldTable<F>::of(t, field);
  std::vector<std::unique_ptr<Eliminator<F>>> elims;
  std::vector<long long> rows_seen(u.blocks.size(), 0);
  std::vector<char> aborted(u.blocks.size(), 0);
  elims.reserve(u.blocks.size());
  for (auto& blk : u.blocks)
    elims.push_back(std::make_unique<Eliminator<F>>(field, int(blk.ids.size())));
  stream_bider_rows(ft, field, gamma, u, [&](int block, const SparseVec<F>& row) {
    if (aborted[block]) return;
    if (opt.block_row_limit >= 0 && rows_seen[block] >= opt.block_row_limit) {
      aborted[block] = 1;
      return;
    }
    ++rows_seen[block];
    elims[block]->add_row(row);
  });
  BiderSector<F> out;
  out.gamma = gamma;
  std::vector<std::size_t> order(u.blocks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return u.blocks[x].key < u.blocks[y].key;
  });
  for (std::size_t i : order) {
    BiderBlock b;
    b.key = u.blocks[i].key;
    b.parity = gamma;
    b.unknowns = (long long)u.blocks[i].ids.size();
    b.rank = elims[i]->rank();
    b.nullity = elims[i]->nullity();
    b.aborted = aborted[i] != 0;
    out.aborted |= b.aborted;
    out.total_nullity += b.nullity;
    if (b.key == BlockKey{}) out.zero_block_nullity = b.nullity;
    if (opt.retain_kernels && !b.aborted && b.nullity > 0) {
      for (auto& v : elims[i]->nullspace()) {
        std::vector<std::pair<std::int64_t, typename F::Elt>> kern;
        for (auto& [c, val] : v) kern.emplace_back(u.blocks[i].ids[c], val);
        out.kernels.push_back(std::move(kern));
      }
    }
    out.blocks.push_back(std::move(b));
  }
  return out;
}

/// Global coefficient vector of the inner map f_lambda(x,y) = lambda [x,y]
/// in triple coordinates.
std::vector<std::pair<std::int64_t, Rational>> bracket_coefficients(const AlgebraTable& t,
                                                                    const Rational& lambda);

/// Exact residual of a coefficient vector against every constraint row of
/// the parity-gamma system (no elimination; used for certificates and sign
/// validation).
bool bider_residual_is_zero(const AlgebraTable& t, int gamma,
                            const std::vector<std::pair<std::int64_t, Rational>>& coeffs);

/// Factorization f(x,y) = [phi(x), y] = [x, psi(y)] through the extension.
struct FactorizationResult {
  bool consistent = false;  // both systems solvable
  bool unique = false;      // the pairing with the extension has no kernel
  bool graded = false;      // phi and psi respect the block's weight/degree shift
  bool verified = false;    // recomposition reproduces f on all basis pairs
  // phi[a] lists (p, coeff): phi(e_a) = sum_p coeff e'_p; likewise psi
  std::vector<QVec> phi, psi;
};

FactorizationResult factor_biderivation(const AlgebraTable& t, const ExtendedAlgebra& ext,
                                        const std::vector<std::pair<std::int64_t, Rational>>& f);

/// Report-facing summary of a full biderivation run (both parities).
struct BiderReport {
  std::string field_mode;  // "exact" or "modp"
  std::uint64_t prime = 0;
  std::vector<BiderBlock> blocks;  // both parities, deterministic order
  long long even_nullity = 0, odd_nullity = 0;
  long long even_zero_block_nullity = 0;
  long long unknowns_even = 0, unknowns_odd = 0;
  bool bracket_in_span = false;
  bool nonzero_weight_blocks_zero = true;
  bool nonzero_degree_blocks_zero = true;
  bool inner = false;
  bool bracket_residual_zero = false;  // exact, checked in both modes
  bool certificate_valid = false;      // meaningful for modp runs
  bool aborted = false;
  int factor_solutions_checked = 0;
  bool factor_pass = false;
  bool run_even = false, run_odd = false;
};

/// Full run: solve both requested parities, decide innerness, certify, and
/// factor every retained solution.
BiderReport run_bder(const AlgebraTable& t, const ExtendedAlgebra& ext, bool exact,
                     std::uint64_t prime, bool even, bool odd, const BiderOptions& opt = {});

/// Plain Lie-algebra biderivations: the same solver on a purely even table.
struct LieBiderReport {
  long long nullity = 0;
  bool inner = false;
  bool bracket_in_span = false;
};
LieBiderReport solve_bder_lie(const AlgebraTable& t);

}  // namespace cartan

#endif
