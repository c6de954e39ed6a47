#include "cartan/dersolve.hpp"

#include <algorithm>

namespace cartan {

namespace {

/// ad maps of the extension restricted to the algebra, as sparse vectors in
/// the derivation unknown coordinates (k*dim + m). Fails when some bracket
/// [x', e_a] leaves the embedded subspace.
std::optional<std::vector<QVec>> adjoint_maps(const AlgebraTable& t, const ExtendedAlgebra& ext) {
  const int dim = t.dim;
  std::vector<int> pos(ext.t.dim, -1);
  for (int a = 0; a < dim; ++a) pos[ext.embedding[a]] = a;
  std::vector<QVec> maps;
  for (int j = 0; j < ext.t.dim; ++j) {
    QVec v;
    for (int a = 0; a < dim; ++a)
      for (const auto& [kp, c] : ext.t.bracket(j, ext.embedding[a])) {
        if (pos[kp] < 0) return std::nullopt;
        v.emplace_back(std::int32_t(a * dim + pos[kp]), c);
      }
    std::sort(v.begin(), v.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    maps.push_back(std::move(v));
  }
  return maps;
}

}  // namespace

bool der_residual_is_zero(const AlgebraTable& t, int gamma, const QVec& map) {
  RationalField q;
  GradedIndex g = GradedIndex::of(t);
  DerUnknowns u = DerUnknowns::enumerate(g, gamma, /*blocked=*/true);
  std::vector<std::vector<Rational>> local(u.blocks.size());
  std::vector<char> has_support(u.blocks.size(), 0);
  for (std::size_t i = 0; i < u.blocks.size(); ++i)
    local[i].assign(u.blocks[i].cols.size(), Rational(0));
  for (const auto& [id, v] : map) {
    if (u.block_of[std::size_t(id)] < 0) return false;
    local[u.block_of[id]][u.col_of[id]] = v;
    has_support[u.block_of[id]] = 1;
  }
  bool ok = true;
  stream_der_rows(t, g, gamma, u, [&](int block, const QVec& row) {
    if (!ok || !has_support[block]) return;
    Rational s(0);
    for (const auto& [c, v] : row) s += v * local[block][c];
    if (!is_zero(s)) ok = false;
  });
  return ok;
}

DerClassifyReport classify_derivations(const AlgebraTable& t, const ExtendedAlgebra& ext,
                                       const DerSolution& even, const DerSolution& odd) {
  DerClassifyReport rep;
  rep.dim_even = even.dimension;
  rep.dim_odd = odd.dimension;
  rep.expected = ext.t.dim;
  RationalField q;
  const std::int64_t ncols = std::int64_t(t.dim) * t.dim;

  auto ad = adjoint_maps(t, ext);
  if (!ad) return rep;  // extension does not act on the algebra: fail closed

  // injectivity of x -> ad(x) restricted to the algebra
  {
    Eliminator<RationalField> e(q, int(ncols));
    for (const auto& v : *ad) e.add_row(v);
    rep.ad_injective = (e.rank() == ext.t.dim);
  }

  // every ad map solves the defining identity of its parity
  rep.ad_annihilated = true;
  for (int j = 0; j < ext.t.dim; ++j)
    if (!der_residual_is_zero(t, ext.t.parity[j], (*ad)[j])) rep.ad_annihilated = false;

  // span equality, both inclusions via ranks
  {
    Eliminator<RationalField> sol(q, int(ncols));
    for (const auto& v : even.maps) sol.add_row(v);
    for (const auto& v : odd.maps) sol.add_row(v);
    int rank_sol = sol.rank();
    bool ad_in_sol = true;
    for (const auto& v : *ad)
      if (!sol.reduce(v).empty()) ad_in_sol = false;
    Eliminator<RationalField> adspan(q, int(ncols));
    for (const auto& v : *ad) adspan.add_row(v);
    bool sol_in_ad = true;
    for (const auto& v : even.maps)
      if (!adspan.reduce(v).empty()) sol_in_ad = false;
    for (const auto& v : odd.maps)
      if (!adspan.reduce(v).empty()) sol_in_ad = false;
    rep.span_equal = ad_in_sol && sol_in_ad && rank_sol == even.dimension + odd.dimension;
  }

  // generators of the extension beyond the algebra are outer derivations
  if (int(ext.embedding.size()) < ext.t.dim) {
    Eliminator<RationalField> inner(q, int(ncols));
    for (int a = 0; a < t.dim; ++a) inner.add_row((*ad)[ext.embedding[a]]);
    for (int j = 0; j < ext.t.dim; ++j) {
      if (std::count(ext.embedding.begin(), ext.embedding.end(), j)) continue;
      if (!inner.reduce((*ad)[j]).empty())
        rep.outer_generators.push_back("extension-basis-" + std::to_string(j));
    }
  }

  rep.pass = rep.ad_injective && rep.ad_annihilated && rep.span_equal &&
             rep.dim_even + rep.dim_odd == rep.expected;
  return rep;
}

DerReport run_der(const AlgebraTable& t, const ExtendedAlgebra& ext, std::uint64_t prime) {
  DerReport rep;
  RationalField q;
  DerSolution even = solve_derivations(t, 0, q);
  DerSolution odd = solve_derivations(t, 1, q);
  rep.dim_even = even.dimension;
  rep.dim_odd = odd.dimension;
  PrimeField fp(prime);
  rep.prime = prime;
  rep.modp_dim_even = solve_derivations(t, 0, fp).dimension;
  rep.modp_dim_odd = solve_derivations(t, 1, fp).dimension;
  rep.modp_matches = rep.modp_dim_even == rep.dim_even && rep.modp_dim_odd == rep.dim_odd;
  rep.classify = classify_derivations(t, ext, even, odd);
  rep.pass = rep.classify.pass && rep.modp_matches;
  return rep;
}

}  // namespace cartan
