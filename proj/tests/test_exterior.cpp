#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <vector>

#include "cartan/exterior.hpp"

using namespace cartan;

namespace {

// Brute-force product oracle: concatenate the index lists, bubble-sort while
// counting swaps, and reject duplicates. Independent of the bit tricks in
// mono_mul.
std::pair<int, std::uint32_t> sort_sign_oracle(std::uint32_t a, std::uint32_t b) {
  std::vector<int> seq;
  for (int i = 0; i < 32; ++i)
    if ((a >> i) & 1) seq.push_back(i);
  for (int i = 0; i < 32; ++i)
    if ((b >> i) & 1) seq.push_back(i);
  int sign = 1;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = 0; j + 1 < seq.size(); ++j)
      if (seq[j] > seq[j + 1]) {
        std::swap(seq[j], seq[j + 1]);
        sign = -sign;
      }
  for (std::size_t j = 0; j + 1 < seq.size(); ++j)
    if (seq[j] == seq[j + 1]) return {0, 0};
  return {sign, a | b};
}

GrassmannPoly mono(std::initializer_list<int> idx, int n, long c = 1) {
  std::uint32_t bits = 0;
  for (int i : idx) bits |= std::uint32_t(1) << (i - 1);
  return GrassmannPoly::term(Monomial(bits, n), Rational(c));
}

}  // namespace

TEST_CASE("monomial product basics") {
  const int n = 4;
  auto x1 = Monomial(0b0001, n), x2 = Monomial(0b0010, n);
  auto p = mono_mul(x1, x2);
  CHECK(p.sign == 1);
  CHECK(p.mono.bits == 0b0011);
  auto q = mono_mul(x2, x1);
  CHECK(q.sign == -1);
  CHECK(q.mono.bits == 0b0011);
  CHECK(mono_mul(x1, x1).sign == 0);
}

TEST_CASE("monomial product agrees with the sorting oracle exhaustively") {
  const int n = 4;
  for (std::uint32_t a = 0; a < 16; ++a)
    for (std::uint32_t b = 0; b < 16; ++b) {
      auto got = mono_mul(Monomial(a, n), Monomial(b, n));
      auto want = sort_sign_oracle(a, b);
      CHECK(got.sign == want.first);
      if (want.first != 0) CHECK(got.mono.bits == want.second);
    }
}

TEST_CASE("polynomial product") {
  const int n = 4;
  CHECK((mono({1}, n) + mono({2}, n)) * mono({2}, n) == mono({1, 2}, n));
  CHECK(mono({1, 2}, n) * mono({3, 4}, n) == mono({1, 2, 3, 4}, n));
  CHECK(mono({2}, n) * mono({1, 3}, n) == mono({1, 2, 3}, n, -1));
  // unit
  CHECK(GrassmannPoly::unit(n) * mono({2, 3}, n) == mono({2, 3}, n));
}

TEST_CASE("product is supercommutative and associative on monomials") {
  const int n = 4;
  for (std::uint32_t a = 0; a < 16; ++a)
    for (std::uint32_t b = 0; b < 16; ++b) {
      GrassmannPoly p = GrassmannPoly::term(Monomial(a, n), Rational(1));
      GrassmannPoly q = GrassmannPoly::term(Monomial(b, n), Rational(1));
      int sgn = (std::popcount(a) & std::popcount(b) & 1) ? -1 : 1;
      CHECK(p * q == Rational(sgn) * (q * p));
      for (std::uint32_t c = 0; c < 16; c += 3) {
        GrassmannPoly r = GrassmannPoly::term(Monomial(c, n), Rational(1));
        CHECK((p * q) * r == p * (q * r));
      }
    }
}

TEST_CASE("partial derivative examples") {
  const int n = 4;
  CHECK(partial(1, mono({1, 2}, n)) == mono({2}, n));
  CHECK(partial(2, mono({1, 2}, n)) == mono({1}, n, -1));
  CHECK(partial(3, mono({1, 2}, n)).is_zero());
  CHECK_THROWS_AS(partial(5, mono({1}, n)), std::invalid_argument);
  CHECK_THROWS_AS(partial(0, mono({1}, n)), std::invalid_argument);
}

TEST_CASE("super-Leibniz rule holds exhaustively for n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (std::uint32_t a = 0; a < (1u << n); ++a)
      for (std::uint32_t b = 0; b < (1u << n); ++b) {
        GrassmannPoly p = GrassmannPoly::term(Monomial(a, n), Rational(1));
        GrassmannPoly q = GrassmannPoly::term(Monomial(b, n), Rational(1));
        int pp = std::popcount(a) & 1;
        for (int i = 1; i <= n; ++i) {
          GrassmannPoly lhs = partial(i, p * q);
          GrassmannPoly rhs = partial(i, p) * q + Rational(pp ? -1 : 1) * (p * partial(i, q));
          CHECK(lhs == rhs);
        }
      }
}

TEST_CASE("derivative via the Leibniz oracle: d2(x1 x2) = -x1") {
  // forced by d2(x1 * x2) = (-1)^{|x1|} x1 d2(x2)
  const int n = 2;
  GrassmannPoly x1 = mono({1}, n), x2 = mono({2}, n);
  GrassmannPoly expect = Rational(-1) * (x1 * partial(2, x2));
  CHECK(partial(2, x1 * x2) == expect);
  CHECK(expect == mono({1}, n, -1));
}

TEST_CASE("derivations anticommute") {
  const int n = 4;
  for (std::uint32_t a = 0; a < 16; ++a) {
    GrassmannPoly p = GrassmannPoly::term(Monomial(a, n), Rational(1));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        CHECK((partial(i, partial(j, p)) + partial(j, partial(i, p))).is_zero());
  }
}

TEST_CASE("degrees add and derivatives drop degree") {
  const int n = 5;
  GrassmannPoly p = mono({1, 3}, n), q = mono({2, 4, 5}, n);
  CHECK((p * q).degree_part(5) == p * q);
  CHECK(partial(3, p).degree_part(1) == partial(3, p));
}

TEST_CASE("graded dimension census") {
  for (int n = 1; n <= 5; ++n) {
    long long total = 0;
    std::vector<long long> by_degree(n + 1, 0);
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      ++total;
      ++by_degree[std::popcount(s)];
    }
    CHECK(total == (1ll << n));
    long long binom = 1;
    for (int k = 0; k <= n; ++k) {
      CHECK(by_degree[k] == binom);
      binom = binom * (n - k) / (k + 1);
    }
  }
}

TEST_CASE("mismatched algebras are rejected") {
  CHECK_THROWS_AS(mono_mul(Monomial(1, 3), Monomial(1, 4)), std::invalid_argument);
  CHECK_THROWS_AS(mono({1}, 3) * mono({1}, 4), std::invalid_argument);
}

TEST_CASE("parity and homogeneity accessors") {
  const int n = 3;
  GrassmannPoly p = mono({1}, n) + mono({1, 2, 3}, n);
  CHECK(p.is_parity_homogeneous());
  CHECK(p.parity() == 1);
  GrassmannPoly q = mono({1}, n) + mono({1, 2}, n);
  CHECK(!q.is_parity_homogeneous());
  CHECK(q.parity_part(0) == mono({1, 2}, n));
  CHECK(q.degree_part(1) == mono({1}, n));
}
