#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cartan/linalg.hpp"

using namespace cartan;

namespace {

QVec qrow(std::initializer_list<std::pair<int, long>> entries) {
  QVec r;
  for (auto [c, v] : entries)
    if (v != 0) r.emplace_back(c, Rational(v));
  return r;
}

// dense multiply for residual checks, independent of the eliminator
bool kernel_vector_exact(const std::vector<QVec>& rows, const QVec& v, int ncols) {
  std::vector<Rational> x(ncols, Rational(0));
  for (const auto& [c, val] : v) x[c] = val;
  for (const auto& row : rows) {
    Rational s(0);
    for (const auto& [c, val] : row) s += val * x[c];
    if (!is_zero(s)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("identity matrix has empty nullspace") {
  RationalField q;
  Eliminator<RationalField> e(q, 2);
  e.add_row(qrow({{0, 1}}));
  e.add_row(qrow({{1, 1}}));
  CHECK(e.rank() == 2);
  CHECK(e.nullity() == 0);
  CHECK(e.nullspace().empty());
}

TEST_CASE("one-row system [1 1]") {
  RationalField q;
  Eliminator<RationalField> e(q, 2);
  e.add_row(qrow({{0, 1}, {1, 1}}));
  CHECK(e.nullity() == 1);
  auto ns = e.nullspace();
  REQUIRE(ns.size() == 1);
  // the kernel line is spanned by (1, -1)
  REQUIRE(ns[0].size() == 2);
  CHECK(ns[0][0].second * Rational(-1) == ns[0][1].second);
}

TEST_CASE("known rank factorization gives nullity one") {
  // A = B C with B = [I3; extra rows], C = [I3 | v]: rank exactly 3 by
  // construction (C sits in the top rows of A and contains I3)
  RationalField q;
  std::vector<std::vector<long>> B = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                      {2, -1, 3}, {1, 1, 1}, {0, 5, -2}};
  std::vector<std::vector<long>> C = {{1, 0, 0, 2}, {0, 1, 0, -3}, {0, 0, 1, 7}};
  std::vector<QVec> rows;
  Eliminator<RationalField> e(q, 4);
  for (const auto& brow : B) {
    QVec r;
    for (int j = 0; j < 4; ++j) {
      long s = 0;
      for (int k = 0; k < 3; ++k) s += brow[k] * C[k][j];
      if (s) r.emplace_back(j, Rational(s));
    }
    rows.push_back(r);
    e.add_row(r);
  }
  CHECK(e.rank() == 3);
  CHECK(e.nullity() == 1);
  auto ns = e.nullspace();
  REQUIRE(ns.size() == 1);
  CHECK(kernel_vector_exact(rows, ns[0], 4));
}

TEST_CASE("rank and span membership") {
  RationalField q;
  Eliminator<RationalField> zero(q, 3);
  CHECK(zero.rank() == 0);
  CHECK(in_span<RationalField>(q, 2, {qrow({{0, 1}})}, qrow({{0, 5}})));
  CHECK(!in_span<RationalField>(q, 2, {qrow({{0, 1}})}, qrow({{1, 1}})));
}

TEST_CASE("rank drops mod p on multiples of p") {
  PrimeField f7(7);
  Eliminator<PrimeField> e(f7, 2);
  // 7*I reduces to zero mod 7
  for (int i = 0; i < 2; ++i) {
    SparseVec<PrimeField> r;
    auto v = f7.from_rational(Rational(7));
    if (!f7.is_zero(v)) r.emplace_back(i, v);
    e.add_row(r);
  }
  CHECK(e.rank() == 0);
  RationalField q;
  Eliminator<RationalField> eq(q, 2);
  eq.add_row(qrow({{0, 7}}));
  eq.add_row(qrow({{1, 7}}));
  CHECK(eq.rank() == 2);
}

TEST_CASE("random integer matrices: modular rank never exceeds exact rank") {
  std::mt19937_64 gen(12345);
  PrimeField fp(101);
  RationalField q;
  for (int trial = 0; trial < 40; ++trial) {
    int nr = 3 + int(gen() % 5), nc = 3 + int(gen() % 5);
    Eliminator<RationalField> eq(q, nc);
    Eliminator<PrimeField> ep(fp, nc);
    for (int i = 0; i < nr; ++i) {
      QVec r;
      SparseVec<PrimeField> rp;
      for (int j = 0; j < nc; ++j) {
        long v = long(gen() % 203) - 101;
        if (v) {
          r.emplace_back(j, Rational(v));
          auto fv = fp.from_rational(Rational(v));
          if (!fp.is_zero(fv)) rp.emplace_back(j, fv);
        }
      }
      eq.add_row(r);
      ep.add_row(rp);
    }
    CHECK(ep.rank() <= eq.rank());
    CHECK(eq.nullity() <= ep.nullity());
  }
}

TEST_CASE("nullspace residuals are exactly zero and dimensions add up") {
  std::mt19937_64 gen(99);
  RationalField q;
  for (int trial = 0; trial < 25; ++trial) {
    int nr = 2 + int(gen() % 6), nc = 2 + int(gen() % 6);
    std::vector<QVec> rows;
    Eliminator<RationalField> e(q, nc);
    for (int i = 0; i < nr; ++i) {
      QVec r;
      for (int j = 0; j < nc; ++j) {
        long num = long(gen() % 7) - 3;
        long den = 1 + long(gen() % 3);
        if (num) r.emplace_back(j, Rational(num, den));
      }
      rows.push_back(r);
      e.add_row(r);
    }
    auto ns = e.nullspace();
    CHECK((long long)ns.size() == e.nullity());
    CHECK(e.rank() + e.nullity() == nc);
    for (const auto& v : ns) CHECK(kernel_vector_exact(rows, v, nc));
    // kernel vectors are independent: each has a distinct unit coordinate
    for (std::size_t i = 0; i < ns.size(); ++i)
      for (std::size_t j = i + 1; j < ns.size(); ++j)
        CHECK(ns[i] != ns[j]);
  }
}

TEST_CASE("prime field construction and arithmetic") {
  CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  PrimeField f(2147483647);  // 2^31 - 1
  CHECK(f.mul(f.inv(12345), 12345) == 1);
  CHECK(f.from_rational(Rational(-1, 3)) == f.div(f.neg(1), 3));
  PrimeField f5(5);
  CHECK_THROWS_AS(f5.from_rational(Rational(1, 5)), std::domain_error);
}
