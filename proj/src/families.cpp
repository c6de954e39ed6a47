#include "cartan/families.hpp"

#include <algorithm>
#include <map>

namespace cartan {

Family parse_family(const std::string& s) {
  if (s == "W") return Family::W;
  if (s == "S") return Family::S;
  if (s == "Stilde") return Family::Stilde;
  if (s == "H") return Family::H;
  throw std::invalid_argument("unknown family: " + s + " (expected W, S, Stilde or H)");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::W: return "W";
    case Family::S: return "S";
    case Family::Stilde: return "Stilde";
    case Family::H: return "H";
  }
  return "?";
}

int prime_index(int i, int n) {
  if (i < 1 || i > n) throw std::invalid_argument("index out of range");
  int r = n / 2;
  if (i <= r) return i + r;
  if (i <= 2 * r) return i - r;
  return i;
}

GrassmannPoly divergence(const SuperVectorField& d) {
  GrassmannPoly r(d.generators());
  for (int i = 1; i <= d.generators(); ++i) r += partial(i, d.component(i));
  return r;
}

SuperVectorField hamiltonian_field(const GrassmannPoly& f) {
  const int n = f.generators();
  SuperVectorField r(n);
  for (int gamma = 0; gamma < 2; ++gamma) {
    GrassmannPoly part = f.parity_part(gamma);
    if (part.is_zero()) continue;
    for (int i = 1; i <= n; ++i) {
      GrassmannPoly di = partial(i, part);
      if (di.is_zero()) continue;
      r.component(prime_index(i, n)) += gamma ? Rational(-1) * di : di;
    }
  }
  return r;
}

SuperVectorField euler_field(int n) {
  SuperVectorField c(n);
  for (int i = 1; i <= n; ++i)
    c.component(i) = GrassmannPoly::generator(i, n);
  return c;
}

namespace {

// index sets ordered by size then lexicographically as ascending sequences
bool index_set_less(std::uint32_t a, std::uint32_t b) {
  int da = std::popcount(a), db = std::popcount(b);
  if (da != db) return da < db;
  while (a && b) {
    int ia = std::countr_zero(a), ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

std::vector<std::uint32_t> sorted_subsets(int n, int min_size, int max_size) {
  std::vector<std::uint32_t> subs;
  for (std::uint32_t s = 0; s < (std::uint32_t(1) << n); ++s) {
    int d = std::popcount(s);
    if (d >= min_size && d <= max_size) subs.push_back(s);
  }
  std::sort(subs.begin(), subs.end(), index_set_less);
  return subs;
}

int find_basis_index(const std::vector<SuperVectorField>& basis, const SuperVectorField& v) {
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (basis[k] == v) return int(k);
  throw TableError("expected basis element not found");
}

// ambient weight of a monomial field x_I d_i: characteristic vector of I
// minus the i-th unit vector
std::vector<int> ambient_weight(std::uint32_t bits, int i, int n) {
  std::vector<int> w(n, 0);
  for (int j = 0; j < n; ++j)
    if ((bits >> j) & 1) w[j] += 1;
  w[i - 1] -= 1;
  return w;
}

}  // namespace

AlgebraTable build_W(int n) {
  if (n < 2) throw std::invalid_argument("W(n) needs n >= 2");
  check_generator_count(n);
  std::vector<SuperVectorField> basis;
  for (std::uint32_t s : sorted_subsets(n, 0, n))
    for (int i = 1; i <= n; ++i)
      basis.push_back(SuperVectorField::term(
          GrassmannPoly::term(Monomial(s, n), Rational(1)), i));
  std::vector<int> cartan;
  for (int i = 1; i <= n; ++i)
    cartan.push_back(find_basis_index(
        basis, SuperVectorField::term(GrassmannPoly::generator(i, n), i)));
  return build_table({"W", n, std::nullopt, n >= 4}, std::move(basis), std::move(cartan));
}

AlgebraTable build_S(int n) {
  if (n < 2) throw std::invalid_argument("S(n) needs n >= 2");
  check_generator_count(n);
  std::vector<SuperVectorField> basis;
  RationalField q;

  // Per degree and per ambient weight class, the divergence-free fields form
  // the kernel of the divergence restricted to that class; solve each class
  // exactly and take a primitive integer kernel basis.
  for (int deg = -1; deg <= n - 1; ++deg) {
    std::map<std::vector<int>, std::vector<std::pair<std::uint32_t, int>>> classes;
    for (std::uint32_t s : sorted_subsets(n, deg + 1, deg + 1))
      for (int i = 1; i <= n; ++i)
        classes[ambient_weight(s, i, n)].emplace_back(s, i);
    for (const auto& [w, fields] : classes) {
      // divergence matrix: rows indexed by target monomials
      std::map<std::uint32_t, int> rowidx;
      std::vector<QVec> cols(fields.size());
      for (std::size_t c = 0; c < fields.size(); ++c) {
        GrassmannPoly d = partial(fields[c].second,
                                  GrassmannPoly::term(Monomial(fields[c].first, n), Rational(1)));
        for (const auto& [bits, coef] : d.terms()) {
          auto [it, fresh] = rowidx.emplace(bits, int(rowidx.size()));
          cols[c].emplace_back(it->second, coef);
        }
      }
      // transpose into rows
      std::vector<QVec> rows(rowidx.size());
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [r, coef] : cols[c]) rows[r].emplace_back(std::int32_t(c), coef);
      Eliminator<RationalField> elim(q, int(fields.size()));
      for (auto& r : rows) {
        std::sort(r.begin(), r.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        elim.add_row(r);
      }
      for (auto& v : elim.nullspace()) {
        detail::normalize_row(q, v);
        SuperVectorField field(n);
        for (const auto& [c, coef] : v)
          field.component(fields[c].second) +=
              GrassmannPoly::term(Monomial(fields[c].first, n), coef);
        basis.push_back(std::move(field));
      }
    }
  }

  std::vector<int> cartan;
  for (int k = 0; k < int(basis.size()); ++k) {
    const auto& b = basis[k];
    if (!b.is_degree_homogeneous() || b.is_zero() || b.degree() != 0) continue;
    bool diagonal = true;
    for (int i = 1; i <= n && diagonal; ++i)
      for (const auto& [bits, c] : b.component(i).terms())
        if (bits != (std::uint32_t(1) << (i - 1))) diagonal = false;
    if (diagonal) cartan.push_back(k);
  }
  if (int(cartan.size()) != n - 1) throw TableError("unexpected Cartan size for S(n)");
  return build_table({"S", n, std::nullopt, n >= 4}, std::move(basis), std::move(cartan));
}

AlgebraTable build_S_tilde(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("the twisted special family needs even n");
  AlgebraTable s = build_S(n);
  GrassmannPoly omega =
      GrassmannPoly::term(Monomial((std::uint32_t(1) << n) - 1, n), Rational(1));
  std::vector<SuperVectorField> basis;
  std::vector<int> cartan;
  for (int i = 1; i <= n; ++i) {
    SuperVectorField d = SuperVectorField::dpartial(i, n);
    d.component(i) -= omega;
    basis.push_back(std::move(d));
  }
  for (int k = 0; k < s.dim; ++k) {
    if (s.zdegree[k] == -1) continue;
    if (std::count(s.cartan.begin(), s.cartan.end(), k))
      cartan.push_back(int(basis.size()));
    basis.push_back(s.basis[k]);
  }
  return build_table({"Stilde", n, n, n >= 4}, std::move(basis), std::move(cartan));
}

namespace {

AlgebraTable build_hamiltonian(int n, int max_size, const std::string& tag, bool scope) {
  if (n < 4) throw std::invalid_argument("H(n) needs n >= 4");
  check_generator_count(n);
  std::vector<SuperVectorField> basis;
  for (std::uint32_t s : sorted_subsets(n, 1, max_size))
    basis.push_back(hamiltonian_field(
        GrassmannPoly::term(Monomial(s, n), Rational(1))));
  std::vector<int> cartan;
  int r = n / 2;
  for (int i = 1; i <= r; ++i) {
    std::uint32_t bits =
        (std::uint32_t(1) << (i - 1)) | (std::uint32_t(1) << (prime_index(i, n) - 1));
    cartan.push_back(find_basis_index(
        basis, hamiltonian_field(GrassmannPoly::term(Monomial(bits, n), Rational(1)))));
  }
  return build_table({tag, n, std::nullopt, scope}, std::move(basis), std::move(cartan));
}

}  // namespace

AlgebraTable build_H(int n) { return build_hamiltonian(n, n - 1, "H", n > 4); }
AlgebraTable build_H_tilde(int n) { return build_hamiltonian(n, n, "Htilde", n > 4); }

AlgebraTable build_family(Family f, int n) {
  switch (f) {
    case Family::W: return build_W(n);
    case Family::S: return build_S(n);
    case Family::Stilde: return build_S_tilde(n);
    case Family::H: return build_H(n);
  }
  throw std::invalid_argument("unknown family");
}

ExtendedAlgebra build_extension(const AlgebraTable& l) {
  ExtendedAlgebra ext;
  if (l.family == "W" || l.family == "Stilde") {
    ext.t = l;
    ext.t.family = l.family + "'";
    for (int k = 0; k < l.dim; ++k) ext.embedding.push_back(k);
    return ext;
  }
  if (l.family == "S") {
    std::vector<SuperVectorField> basis = l.basis;
    basis.push_back(euler_field(l.n));
    std::vector<int> cartan = l.cartan;
    ext.t = build_table({"S'", l.n, std::nullopt, l.theorem_scope}, std::move(basis),
                        std::move(cartan));
    for (int k = 0; k < l.dim; ++k) ext.embedding.push_back(k);
    return ext;
  }
  if (l.family == "H") {
    AlgebraTable ht = build_H_tilde(l.n);
    std::vector<SuperVectorField> basis = ht.basis;
    basis.push_back(euler_field(l.n));
    std::vector<int> cartan = ht.cartan;
    ext.t = build_table({"H'", l.n, std::nullopt, l.theorem_scope}, std::move(basis),
                        std::move(cartan));
    // the Hamiltonian basis ordering is shared, so the embedding is the
    // identity on the first dim(L) elements
    for (int k = 0; k < l.dim; ++k) {
      if (!(ext.t.basis[k] == l.basis[k]))
        throw TableError("extension basis does not extend the family basis");
      ext.embedding.push_back(k);
    }
    return ext;
  }
  throw std::invalid_argument("no extension rule for family " + l.family);
}

std::set<Weight> computed_roots(const AlgebraTable& t) {
  std::set<Weight> roots;
  Weight zero(t.rank(), Rational(0));
  for (int k = 0; k < t.dim; ++k)
    if (t.weights[k] != zero) roots.insert(t.weights[k]);
  return roots;
}

std::set<Weight> expected_roots(const AlgebraTable& t) {
  const int n = t.n;
  std::set<Weight> out;
  const std::string fam = t.family.ends_with("'") ? t.family.substr(0, t.family.size() - 1)
                                                  : t.family;
  if (fam == "W" || fam == "S" || fam == "Stilde") {
    // closed form: eps_{i1}+...+eps_{ik} - eps_i over index sets and i, with
    // the full-set entries removed for the special families; mapped through
    // the diagonal coefficients of the actual Cartan basis
    std::vector<std::vector<Rational>> cartan_diag;
    for (int hi : t.cartan) {
      std::vector<Rational> row(n, Rational(0));
      const SuperVectorField& h = t.basis[hi];
      for (int i = 1; i <= n; ++i)
        row[i - 1] = h.component(i).coefficient(Monomial(std::uint32_t(1) << (i - 1), n));
      cartan_diag.push_back(std::move(row));
    }
    bool drop_top = (fam != "W");
    for (std::uint32_t s = 0; s < (std::uint32_t(1) << n); ++s) {
      if (drop_top && std::popcount(s) == n) continue;
      for (int i = 1; i <= n; ++i) {
        std::vector<int> eps = ambient_weight(s, i, n);
        Weight w;
        for (const auto& row : cartan_diag) {
          Rational v(0);
          for (int j = 0; j < n; ++j)
            if (eps[j] != 0) v += Rational(eps[j]) * row[j];
          w.push_back(v);
        }
        if (std::any_of(w.begin(), w.end(), [](const Rational& v) { return !is_zero(v); }))
          out.insert(std::move(w));
      }
    }
    return out;
  }
  if (fam == "H" || fam == "Htilde") {
    // all +-eps_{i1} +- ... +- eps_{ik} with k >= 1 over indices up to r
    int r = n / 2;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << r); ++mask) {
      std::vector<int> idx;
      for (int j = 0; j < r; ++j)
        if ((mask >> j) & 1) idx.push_back(j);
      for (std::uint32_t signs = 0; signs < (std::uint32_t(1) << idx.size()); ++signs) {
        Weight w(r, Rational(0));
        for (std::size_t j = 0; j < idx.size(); ++j)
          w[idx[j]] = ((signs >> j) & 1) ? Rational(-1) : Rational(1);
        out.insert(std::move(w));
      }
    }
    return out;
  }
  throw std::invalid_argument("no closed-form root description for " + t.family);
}

RootsReport check_roots(const AlgebraTable& l, const AlgebraTable& extension) {
  RootsReport rep;
  auto got = computed_roots(l);
  auto want = expected_roots(l);
  rep.matches = (got == want);
  rep.extension_matches = (computed_roots(extension) == got);
  rep.count = got.size();
  rep.computed.assign(got.begin(), got.end());
  return rep;
}

std::vector<std::pair<int, int>> degree_census(const AlgebraTable& t) {
  std::map<int, int> census;
  for (int k = 0; k < t.dim; ++k) census[t.zdegree[k]]++;
  return {census.begin(), census.end()};
}

}  // namespace cartan
