#include "cartan/structchecks.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace cartan {

std::vector<QVec> seeded_vectors(int dim, int count, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<QVec> out;
  while (int(out.size()) < count) {
    QVec v;
    for (int i = 0; i < dim; ++i) {
      long c = long(gen() % 7) - 3;  // raw modulo keeps the stream portable
      if (c != 0) v.emplace_back(i, Rational(c));
    }
    if (!v.empty()) out.push_back(std::move(v));
  }
  return out;
}

namespace {

std::vector<int> degree_indices(const AlgebraTable& t, int d) {
  std::vector<int> out;
  for (int k = 0; k < t.dim; ++k)
    if (t.zdegree[k] == t.norm_degree(d)) out.push_back(k);
  return out;
}

/// Closure of a set of coordinate vectors under brackets with chosen basis
/// elements; returns the reached dimension.
int ad_closure_dim(const AlgebraTable& t, const std::vector<QVec>& start,
                   const std::vector<int>& multipliers) {
  RationalField q;
  Eliminator<RationalField> span(q, t.dim);
  std::vector<QVec> fresh;
  for (const auto& v : start)
    if (span.add_row(v) >= 0) fresh.push_back(v);
  while (!fresh.empty()) {
    std::vector<QVec> next;
    for (int m : multipliers)
      for (const auto& v : fresh) {
        QVec bm = t.bracket_coords({{m, Rational(1)}}, v);
        if (bm.empty()) continue;
        if (span.add_row(bm) >= 0) next.push_back(std::move(bm));
      }
    fresh = std::move(next);
  }
  return span.rank();
}

}  // namespace

CheckReport check_bracket_onto(const AlgebraTable& t) {
  CheckReport rep{"bracket_onto", true, "exact", "", ""};
  std::vector<int> degrees;
  for (int k = 0; k < t.dim; ++k) degrees.push_back(t.zdegree[k]);
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  std::vector<int> bottom = degree_indices(t, -1);
  RationalField q;
  for (int d : degrees) {
    std::vector<int> li = degree_indices(t, d);
    std::vector<int> target = degree_indices(t, d - 1);
    Eliminator<RationalField> span(q, t.dim);
    for (int a : bottom)
      for (int b : li) {
        const auto& br = t.bracket(a, b);
        if (!br.empty()) span.add_row(QVec(br.begin(), br.end()));
      }
    if (span.rank() != int(target.size())) {
      rep.pass = false;
      rep.witness = "degree " + std::to_string(d) + ": image rank " +
                    std::to_string(span.rank()) + " of " + std::to_string(target.size());
      return rep;
    }
  }
  return rep;
}

CheckReport check_generated(const AlgebraTable& t) {
  CheckReport rep{"local_generation", true, "exact", "", ""};
  RationalField q;
  Eliminator<RationalField> span(q, t.dim);
  std::vector<QVec> fresh;
  for (int k = 0; k < t.dim; ++k)
    if (t.zdegree[k] >= -1 && t.zdegree[k] <= 1) {
      QVec v{{k, Rational(1)}};
      if (span.add_row(v) >= 0) fresh.push_back(v);
    }
  // iterate brackets of the current span with itself until stable
  std::vector<QVec> all = fresh;
  while (!fresh.empty()) {
    std::vector<QVec> next;
    for (const auto& u : all)
      for (const auto& v : fresh) {
        for (const QVec& w : {t.bracket_coords(u, v), t.bracket_coords(v, u)}) {
          if (w.empty()) continue;
          if (span.add_row(w) >= 0) next.push_back(w);
        }
      }
    for (const auto& v : next) all.push_back(v);
    fresh = std::move(next);
  }
  if (span.rank() != t.dim) {
    rep.pass = false;
    rep.witness = "closure dimension " + std::to_string(span.rank()) + " of " +
                  std::to_string(t.dim);
  }
  return rep;
}

CheckReport check_transitive(const AlgebraTable& t, const ExtendedAlgebra& ext) {
  CheckReport rep{"transitivity", true, "exact", "", ""};
  const AlgebraTable& e = ext.t;
  std::vector<int> nonneg;
  for (int k = 0; k < e.dim; ++k)
    if (e.zdegree[k] >= 0) nonneg.push_back(k);
  std::vector<int> bottom;
  for (int a : ext.embedding)
    if (e.zdegree[a] == -1) bottom.push_back(a);
  // rows: the map a -> ([a, y])_y over the bottom degree, columns (y, m)
  RationalField q;
  Eliminator<RationalField> elim(q, int(bottom.size()) * e.dim);
  int rank_in = 0;
  for (int a : nonneg) {
    QVec row;
    for (std::size_t yi = 0; yi < bottom.size(); ++yi)
      for (const auto& [m, c] : e.bracket(a, bottom[yi]))
        row.emplace_back(std::int32_t(yi * e.dim + m), c);
    std::sort(row.begin(), row.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    if (elim.add_row(row) >= 0) ++rank_in;
  }
  if (rank_in != int(nonneg.size())) {
    rep.pass = false;
    rep.witness = "kernel of dimension " + std::to_string(int(nonneg.size()) - rank_in) +
                  " annihilates the bottom degree";
  }
  return rep;
}

CheckReport check_irreducible(const AlgebraTable& t, std::uint64_t seed) {
  CheckReport rep{"irreducibility_proxy", true, "exact+sampled", "",
                  "commutant criterion; decisive under complete reducibility, "
                  "which is not re-proved here"};
  std::vector<int> bottom = degree_indices(t, -1);
  std::vector<int> zero = degree_indices(t, 0);
  const int d = int(bottom.size());
  std::vector<int> pos(t.dim, -1);
  for (int i = 0; i < d; ++i) pos[bottom[i]] = i;
  // action matrices of the degree-0 part on the bottom degree
  std::vector<std::vector<QVec>> act;  // per h: rows over bottom
  for (int h : zero) {
    std::vector<QVec> m(d);
    for (int i = 0; i < d; ++i)
      for (const auto& [k, c] : t.bracket(h, bottom[i])) {
        if (pos[k] < 0) {
          rep.pass = false;
          rep.witness = "action leaves the bottom degree";
          return rep;
        }
        m[i].emplace_back(pos[k], c);
      }
    act.push_back(std::move(m));
  }
  // commutant: A with A M_h = M_h A for all h; unknowns A[i][j] at i*d+j
  RationalField q;
  Eliminator<RationalField> elim(q, d * d);
  for (const auto& m : act) {
    // (A M - M A)[i][j] = sum_k A[i][k] M[k][j] - M[i][k] A[k][j]
    // row per (i, j)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        std::map<int, Rational> row;
        for (int k = 0; k < d; ++k) {
          for (const auto& [jj, c] : m[k])
            if (jj == j) row[i * d + k] += c;
        }
        for (const auto& [k, c] : m[i]) row[k * d + j] -= c;
        QVec r;
        for (const auto& [col, c] : row)
          if (!is_zero(c)) r.emplace_back(col, c);
        elim.add_row(r);
      }
  }
  long long commutant = elim.nullity();
  if (commutant != 1) {
    rep.pass = false;
    rep.witness = "commutant dimension " + std::to_string(commutant);
    return rep;
  }
  // generation: every basis vector and sampled vectors generate the module
  std::vector<QVec> starts;
  for (int i = 0; i < d; ++i) starts.push_back({{i, Rational(1)}});
  for (auto& v : seeded_vectors(d, 20, seed)) starts.push_back(v);
  for (const auto& s : starts) {
    Eliminator<RationalField> span(q, d);
    std::vector<QVec> fresh{s};
    span.add_row(s);
    while (!fresh.empty()) {
      std::vector<QVec> next;
      for (const auto& m : act)
        for (const auto& v : fresh) {
          std::map<int, Rational> img;
          for (const auto& [i, c] : v)
            for (const auto& [j, mc] : m[i]) img[j] += c * mc;
          QVec w;
          for (const auto& [j, c] : img)
            if (!is_zero(c)) w.emplace_back(j, c);
          if (!w.empty() && span.add_row(w) >= 0) next.push_back(w);
        }
      fresh = std::move(next);
    }
    if (span.rank() != d) {
      rep.pass = false;
      rep.witness = "a vector generates a proper submodule of dimension " +
                    std::to_string(span.rank());
      return rep;
    }
  }
  return rep;
}

CheckReport check_H_pairing(const AlgebraTable& t) {
  CheckReport rep{"top_degree_pairing", true, "exact", "", ""};
  if (t.family != "H") {
    rep.note = "only defined for the Hamiltonian family";
    return rep;
  }
  const int xi = t.top_degree;
  RationalField q;
  for (int k = -1; k <= xi; ++k) {
    int l = xi - k;
    if (l < -1 || l > xi) continue;
    std::vector<int> lk = degree_indices(t, k), ll = degree_indices(t, l);
    Eliminator<RationalField> elim(q, int(ll.size()) * t.dim);
    int rank_in = 0;
    for (int x : lk) {
      QVec row;
      for (std::size_t yi = 0; yi < ll.size(); ++yi)
        for (const auto& [m, c] : t.bracket(x, ll[yi]))
          row.emplace_back(std::int32_t(yi * t.dim + m), c);
      std::sort(row.begin(), row.end(),
                [](const auto& x_, const auto& y_) { return x_.first < y_.first; });
      if (elim.add_row(row) >= 0) ++rank_in;
    }
    if (rank_in != int(lk.size())) {
      rep.pass = false;
      rep.witness = "pairing degenerate at degrees (" + std::to_string(k) + "," +
                    std::to_string(l) + ")";
      return rep;
    }
  }
  return rep;
}

CheckReport check_simplicity_sample(const AlgebraTable& t, std::uint64_t seed) {
  CheckReport rep{"simplicity_sample", true, "sampled", "",
                  "ideal closures of sampled vectors; probabilistic for sufficiency"};
  std::vector<int> all;
  for (int k = 0; k < t.dim; ++k) all.push_back(k);
  std::vector<QVec> starts;
  for (int k = 0; k < t.dim; ++k) starts.push_back({{k, Rational(1)}});
  for (auto& v : seeded_vectors(t.dim, 20, seed)) starts.push_back(v);
  for (const auto& s : starts) {
    int reach = ad_closure_dim(t, {s}, all);
    if (reach != t.dim) {
      rep.pass = false;
      rep.witness = "ideal closure of dimension " + std::to_string(reach);
      return rep;
    }
  }
  return rep;
}

std::vector<CheckReport> run_struct_checks(const AlgebraTable& t, const ExtendedAlgebra& ext,
                                           std::uint64_t seed) {
  std::vector<CheckReport> out;
  out.push_back(check_bracket_onto(t));
  out.push_back(check_generated(t));
  out.push_back(check_transitive(t, ext));
  out.push_back(check_irreducible(t, seed));
  if (t.family == "H") out.push_back(check_H_pairing(t));
  out.push_back(check_simplicity_sample(t, seed));
  return out;
}

}  // namespace cartan
