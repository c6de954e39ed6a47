#include "cartan/table.hpp"

#include <algorithm>
#include <map>

namespace cartan {

QVec AlgebraTable::bracket_coords(const QVec& u, const QVec& v) const {
  std::map<int, Rational> acc;
  for (const auto& [a, ca] : u)
    for (const auto& [b, cb] : v) {
      Rational s = ca * cb;
      for (const auto& [k, c] : bracket(a, b)) {
        auto [it, fresh] = acc.emplace(k, s * c);
        if (!fresh) it->second += s * c;
      }
    }
  QVec out;
  for (auto& [k, c] : acc)
    if (!is_zero(c)) out.emplace_back(k, std::move(c));
  return out;
}

CoordinateSolver::CoordinateSolver(const std::vector<SuperVectorField>& basis)
    : n_(basis.empty() ? 1 : basis.front().generators()),
      dim_(int(basis.size())),
      ambient_(n_ << n_),
      elim_(q_, ambient_ + dim_, ambient_) {
  for (int k = 0; k < dim_; ++k) {
    if (basis[k].generators() != n_)
      throw std::invalid_argument("basis fields over different algebras");
    QVec row = ambient_coords(basis[k]);
    row.emplace_back(ambient_ + k, Rational(1));
    int piv = elim_.add_row(row);
    if (piv < 0) throw DependentBasisError(k);
  }
}

QVec CoordinateSolver::ambient_coords(const SuperVectorField& v) {
  const int n = v.generators();
  QVec out;
  for (int i = 1; i <= n; ++i)
    for (const auto& [bits, c] : v.component(i).terms())
      out.emplace_back(std::int32_t((std::uint32_t(i - 1) << n) | bits), c);
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

std::optional<QVec> CoordinateSolver::solve(const SuperVectorField& v) const {
  QVec rem = elim_.reduce(ambient_coords(v));
  QVec coords;
  for (auto& [col, val] : rem) {
    if (col < ambient_) return std::nullopt; // not in the span
    coords.emplace_back(col - ambient_, -val);
  }
  return coords;
}

namespace {

int checked_parity(const SuperVectorField& v, int index) {
  if (!v.is_parity_homogeneous())
    throw TableError("basis element " + std::to_string(index) + " is not parity homogeneous");
  return v.parity();
}

int checked_degree(const AlgebraTable& t, const SuperVectorField& v, int index) {
  // plain grading: a single degree; modular grading: degrees equal mod n
  std::optional<int> deg;
  for (int i = 1; i <= v.generators(); ++i)
    for (const auto& [bits, c] : v.component(i).terms()) {
      int d = t.norm_degree(std::popcount(bits) - 1);
      if (!deg) deg = d;
      else if (*deg != d)
        throw TableError("basis element " + std::to_string(index) +
                         " is not degree homogeneous");
    }
  if (!deg) throw TableError("zero basis element " + std::to_string(index));
  return *deg;
}

}  // namespace

AlgebraTable build_table(const TableMeta& meta, std::vector<SuperVectorField> basis,
                         std::vector<int> cartan_indices) {
  AlgebraTable t;
  t.family = meta.family;
  t.n = meta.n;
  t.grading_modulus = meta.grading_modulus;
  t.theorem_scope = meta.theorem_scope;
  t.dim = int(basis.size());
  t.basis = std::move(basis);
  t.cartan = std::move(cartan_indices);

  CoordinateSolver solver(t.basis);

  t.parity.resize(t.dim);
  t.zdegree.resize(t.dim);
  for (int k = 0; k < t.dim; ++k) {
    t.parity[k] = checked_parity(t.basis[k], k);
    t.zdegree[k] = checked_degree(t, t.basis[k], k);
  }
  t.top_degree = *std::max_element(t.zdegree.begin(), t.zdegree.end());

  // Cartan sanity: pairwise commuting, even, degree 0
  for (int hi : t.cartan) {
    if (hi < 0 || hi >= t.dim) throw TableError("Cartan index out of range");
    if (t.parity[hi] != 0 || t.zdegree[hi] != 0)
      throw TableError("Cartan element " + std::to_string(hi) + " is not even of degree 0");
  }
  for (int hi : t.cartan)
    for (int hj : t.cartan)
      if (!vf_bracket(t.basis[hi], t.basis[hj]).is_zero())
        throw TableError("Cartan elements " + std::to_string(hi) + "," +
                         std::to_string(hj) + " do not commute");

  // weights: eigenvalues of ad(h) on each basis element, required diagonal
  t.weights.assign(t.dim, Weight(t.cartan.size(), Rational(0)));
  for (std::size_t j = 0; j < t.cartan.size(); ++j) {
    const SuperVectorField& h = t.basis[t.cartan[j]];
    for (int k = 0; k < t.dim; ++k) {
      SuperVectorField br = vf_bracket(h, t.basis[k]);
      if (br.is_zero()) continue;
      auto coords = solver.solve(br);
      if (!coords) throw NonDiagonalCartanError(t.cartan[j], k);
      if (coords->size() != 1 || (*coords)[0].first != k)
        throw NonDiagonalCartanError(t.cartan[j], k);
      t.weights[k][j] = (*coords)[0].second;
    }
  }

  // structure constants by exact coordinate solving
  t.sc.assign(std::size_t(t.dim) * t.dim, {});
  for (int a = 0; a < t.dim; ++a)
    for (int b = 0; b < t.dim; ++b) {
      SuperVectorField br = vf_bracket(t.basis[a], t.basis[b]);
      if (br.is_zero()) continue;
      auto coords = solver.solve(br);
      if (!coords) throw NonClosureError(a, b);
      t.sc[std::size_t(a) * t.dim + b] = std::move(*coords);
    }

  auto problems = verify_table_invariants(t);
  if (!problems.empty()) throw TableError("table invariant violated: " + problems.front());
  return t;
}

JacobiReport check_super_jacobi(const AlgebraTable& t) {
  // residual [a,[b,c]] - [[a,b],c] - (-1)^{|a||b|} [b,[a,c]]
  for (int a = 0; a < t.dim; ++a)
    for (int b = 0; b < t.dim; ++b)
      for (int c = 0; c < t.dim; ++c) {
        std::map<int, Rational> acc;
        auto add = [&acc](const std::vector<std::pair<int, Rational>>& v, const Rational& s) {
          for (const auto& [k, coef] : v) {
            auto [it, fresh] = acc.emplace(k, s * coef);
            if (!fresh) it->second += s * coef;
          }
        };
        for (const auto& [k, coef] : t.bracket(b, c)) add(t.bracket(a, k), coef);
        for (const auto& [k, coef] : t.bracket(a, b)) add(t.bracket(k, c), -coef);
        Rational sgn2 = (t.parity[a] & t.parity[b]) ? Rational(1) : Rational(-1);
        for (const auto& [k, coef] : t.bracket(a, c)) add(t.bracket(b, k), sgn2 * coef);
        for (const auto& [k, v] : acc)
          if (!is_zero(v)) return {false, a, b, c};
      }
  return {};
}

std::vector<std::string> verify_table_invariants(const AlgebraTable& t) {
  std::vector<std::string> bad;
  auto name = [](int a, int b, int k) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")->" + std::to_string(k);
  };
  for (int a = 0; a < t.dim && bad.size() < 8; ++a)
    for (int b = 0; b < t.dim && bad.size() < 8; ++b) {
      std::map<int, Rational> ab;
      for (const auto& [k, c] : t.bracket(a, b)) ab[k] = c;
      // super-skew: c_ba^k = -(-1)^{|a||b|} c_ab^k
      Rational s = (t.parity[a] & t.parity[b]) ? Rational(1) : Rational(-1);
      std::map<int, Rational> ba;
      for (const auto& [k, c] : t.bracket(b, a)) ba[k] = c;
      for (const auto& [k, c] : ab)
        if (ba.count(k) ? ba[k] != s * c : !is_zero(c)) {
          bad.push_back("super-skew fails at " + name(a, b, k));
          break;
        }
      for (const auto& [k, c] : ab) {
        if (((t.parity[a] + t.parity[b]) & 1) != t.parity[k])
          bad.push_back("parity additivity fails at " + name(a, b, k));
        if (t.norm_degree(t.zdegree[a] + t.zdegree[b]) != t.zdegree[k])
          bad.push_back("degree additivity fails at " + name(a, b, k));
        for (std::size_t j = 0; j < std::size_t(t.rank()); ++j)
          if (t.weights[k][j] != t.weights[a][j] + t.weights[b][j]) {
            bad.push_back("weight additivity fails at " + name(a, b, k));
            break;
          }
      }
    }
  return bad;
}

AlgebraTable subalgebra(const AlgebraTable& t, const std::vector<int>& indices,
                        const std::string& family_tag) {
  AlgebraTable s;
  s.family = family_tag;
  s.n = t.n;
  s.dim = int(indices.size());
  s.grading_modulus = t.grading_modulus;
  s.theorem_scope = t.theorem_scope;
  std::vector<int> pos(t.dim, -1);
  for (int i = 0; i < s.dim; ++i) pos[indices[i]] = i;
  for (int i : indices) {
    if (!t.basis.empty()) s.basis.push_back(t.basis[i]);
    s.parity.push_back(t.parity[i]);
    s.zdegree.push_back(t.zdegree[i]);
    s.weights.push_back(t.weights[i]);
  }
  for (int hi : t.cartan)
    if (pos[hi] >= 0) s.cartan.push_back(pos[hi]);
  s.top_degree = *std::max_element(s.zdegree.begin(), s.zdegree.end());
  s.sc.assign(std::size_t(s.dim) * s.dim, {});
  for (int a = 0; a < s.dim; ++a)
    for (int b = 0; b < s.dim; ++b) {
      for (const auto& [k, c] : t.bracket(indices[a], indices[b])) {
        if (pos[k] < 0) throw NonClosureError(a, b);
        s.sc[std::size_t(a) * s.dim + b].emplace_back(pos[k], c);
      }
    }
  return s;
}

}  // namespace cartan
