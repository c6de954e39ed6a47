#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cartan/bidersolve.hpp"

using namespace cartan;

namespace {

GrassmannPoly mono(std::initializer_list<int> idx, int n, long c = 1) {
  std::uint32_t bits = 0;
  for (int i : idx) bits |= std::uint32_t(1) << (i - 1);
  return GrassmannPoly::term(Monomial(bits, n), Rational(c));
}

SuperVectorField fld(std::initializer_list<int> idx, int i, int n, long c = 1) {
  return SuperVectorField::term(mono(idx, n, c), i);
}

// purely even abelian plane: brackets all vanish
AlgebraTable abelian2() {
  AlgebraTable t;
  t.family = "abelian2";
  t.n = 2;
  t.dim = 2;
  t.theorem_scope = false;
  t.parity = {0, 0};
  t.zdegree = {0, 0};
  t.weights = {Weight{}, Weight{}};
  t.top_degree = 0;
  t.sc.assign(4, {});
  return t;
}

AlgebraTable sl2() {
  const int n = 2;
  SuperVectorField h = fld({1}, 1, n) - fld({2}, 2, n);
  std::vector<SuperVectorField> basis = {h, fld({1}, 2, n), fld({2}, 1, n)};
  return build_table({"sl2", n, std::nullopt, false}, basis, {0});
}

}  // namespace

TEST_CASE("block census of the Witt family") {
  AlgebraTable w4 = build_W(4);
  GradedIndex g = GradedIndex::of(w4);
  BiderUnknowns u = BiderUnknowns::enumerate(g, 0, true);
  CHECK(u.total == 2ll * 64 * 64 * 32 / 2);  // parity-admissible triples
  // the zero block exists and contains the bracket triples
  bool zero_found = false;
  for (const auto& b : u.blocks)
    if (b.key == BlockKey{}) zero_found = true;
  CHECK(zero_found);
  for (const auto& [id, c] : bracket_coefficients(w4, Rational(1))) {
    CHECK(u.block_of[std::size_t(id)] >= 0);
    CHECK(u.blocks[u.block_of[std::size_t(id)]].key == BlockKey{});
  }
  // a weight shift of (2,1,1,1) arises in the odd sector: both arguments the
  // first coordinate derivation, value on the top field
  BiderUnknowns uo = BiderUnknowns::enumerate(g, 1, true);
  BlockKey want;
  want.w = {2, 1, 1, 1, 0, 0, 0, 0};
  want.deg = 0;
  bool found = false;
  for (const auto& b : uo.blocks) {
    BlockKey probe = b.key;
    probe.deg = 0;
    if (probe == want) found = true;
  }
  CHECK(found);
}

TEST_CASE("degree shifts of the Hamiltonian family come from the census") {
  AlgebraTable h5 = build_H(5);
  GradedIndex g = GradedIndex::of(h5);
  int lo = 100, hi = -100;
  for (int gamma : {0, 1}) {
    BiderUnknowns u = BiderUnknowns::enumerate(g, gamma, true);
    for (const auto& b : u.blocks) {
      lo = std::min(lo, int(b.key.deg));
      hi = std::max(hi, int(b.key.deg));
    }
  }
  // across both parities: bottom value on two top arguments down to top value
  // on two bottom arguments
  CHECK(lo == -1 - 2 * h5.top_degree);
  CHECK(hi == h5.top_degree + 2);
}

TEST_CASE("every bilinear map is a biderivation of the abelian plane") {
  AlgebraTable t = abelian2();
  LieBiderReport rep = solve_bder_lie(t);
  CHECK(rep.nullity == 8);  // dim(L x L -> L) = 2*2*2
  CHECK(!rep.inner);
  // witness that no symmetry is imposed: a solution with f(e0,e1) = e0 and
  // f(e1,e0) = 0 exists in the kernel
  RationalField q;
  BiderSector<RationalField> s = solve_bder_sector(t, 0, q, {});
  std::vector<std::pair<std::int64_t, Rational>> asym = {{std::int64_t(0 * 2 + 1) * 2 + 0, Rational(1)}};
  bool found = false;
  for (const auto& k : s.kernels)
    if (k == asym) found = true;
  CHECK(found);
}

TEST_CASE("purely even guard") {
  AlgebraTable w2 = build_W(2);
  CHECK_THROWS_AS(solve_bder_lie(w2), std::invalid_argument);
}

TEST_CASE("inner maps solve the system for several scalings") {
  for (AlgebraTable t : {sl2(), build_W(2)}) {
    for (long lam : {1L, -2L, 7L}) {
      auto coeffs = bracket_coefficients(t, Rational(lam));
      CHECK(bider_residual_is_zero(t, 0, coeffs));
    }
  }
}

TEST_CASE("random bilinear maps fail the residual check") {
  AlgebraTable t = sl2();
  // f(e0, e0) = e1 alone is not a biderivation of sl2
  std::vector<std::pair<std::int64_t, Rational>> f = {{std::int64_t(0) * 3 + 1, Rational(1)}};
  CHECK(!bider_residual_is_zero(t, 0, f));
}

TEST_CASE("blocked nullities sum to the global nullity on the small Witt algebra") {
  AlgebraTable t = build_W(2);
  RationalField q;
  for (int gamma : {0, 1}) {
    BiderOptions blocked, global;
    global.blocked = false;
    BiderSector<RationalField> sb = solve_bder_sector(t, gamma, q, blocked);
    BiderSector<RationalField> sg = solve_bder_sector(t, gamma, q, global);
    CHECK(sb.total_nullity == sg.total_nullity);
  }
}

TEST_CASE("biderivations of sl(2) are inner") {
  LieBiderReport rep = solve_bder_lie(sl2());
  CHECK(rep.nullity == 1);
  CHECK(rep.inner);
}

TEST_CASE("solution supports respect the parity rule") {
  AlgebraTable t = build_W(2);
  RationalField q;
  for (int gamma : {0, 1}) {
    BiderSector<RationalField> s = solve_bder_sector(t, gamma, q, {});
    for (const auto& k : s.kernels)
      for (const auto& [id, c] : k) {
        int kk = int(id % t.dim);
        std::int64_t ab = id / t.dim;
        int a = int(ab / t.dim), b = int(ab % t.dim);
        CHECK(((t.parity[a] + t.parity[b] + gamma) & 1) == t.parity[kk]);
      }
  }
}

TEST_CASE("factorization of inner maps through the algebra itself") {
  AlgebraTable t = sl2();
  ExtendedAlgebra self{t, {0, 1, 2}};
  SUBCASE("identity scaling") {
    FactorizationResult r = factor_biderivation(t, self, bracket_coefficients(t, Rational(1)));
    CHECK(r.consistent);
    CHECK(r.unique);
    CHECK(r.graded);
    CHECK(r.verified);
    for (int a = 0; a < 3; ++a) {
      REQUIRE(r.phi[a].size() == 1);
      CHECK(r.phi[a][0].first == a);
      CHECK(r.phi[a][0].second == Rational(1));
      CHECK(r.psi[a] == r.phi[a]);
    }
  }
  SUBCASE("triple scaling") {
    FactorizationResult r = factor_biderivation(t, self, bracket_coefficients(t, Rational(3)));
    CHECK(r.verified);
    for (int a = 0; a < 3; ++a) CHECK(r.phi[a][0].second == Rational(3));
  }
}

TEST_CASE("factoring the special family's bracket avoids the grading element") {
  AlgebraTable t = build_S(4);
  ExtendedAlgebra ext = build_extension(t);
  FactorizationResult r = factor_biderivation(t, ext, bracket_coefficients(t, Rational(1)));
  CHECK(r.consistent);
  CHECK(r.unique);
  CHECK(r.graded);
  CHECK(r.verified);
  for (int a = 0; a < t.dim; ++a)
    for (const auto& [p, c] : r.phi[a]) CHECK(p < t.dim);  // no component on C
}

TEST_CASE("certificates fail closed on a corrupted table") {
  AlgebraTable t = sl2();
  // consistent super-skew corruption of a nonzero bracket
  int a = 0, b = 1;
  auto& ab = t.sc[std::size_t(a) * t.dim + b];
  REQUIRE(!ab.empty());
  ab.front().second += 1;
  auto& ba = t.sc[std::size_t(b) * t.dim + a];
  for (auto& [k, c] : ba)
    if (k == ab.front().first) c = -ab.front().second;
  CHECK(!bider_residual_is_zero(t, 0, bracket_coefficients(t, Rational(1))));
}

TEST_CASE("modular and exact sectors agree on the small Witt algebra") {
  AlgebraTable t = build_W(2);
  RationalField q;
  PrimeField fp(2147483647ull);
  for (int gamma : {0, 1}) {
    auto se = solve_bder_sector(t, gamma, q, {});
    auto sp = solve_bder_sector(t, gamma, fp, {});
    CHECK(se.total_nullity == sp.total_nullity);
  }
}

TEST_CASE("block row limits abort rather than lie") {
  AlgebraTable t = build_W(2);
  RationalField q;
  BiderOptions opt;
  opt.block_row_limit = 1;
  BiderSector<RationalField> s = solve_bder_sector(t, 0, q, opt);
  CHECK(s.aborted);
}
