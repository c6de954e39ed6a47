#ifndef CARTAN_EXTERIOR_HPP
#define CARTAN_EXTERIOR_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cartan/rational.hpp"

namespace cartan {

/// Generators are indexed 1..n; an index set is kept as a bit set with
/// index i at bit i-1. n is capped so that enumeration stays desk-scale.
constexpr int kMaxGenerators = 20;

inline void check_generator_count(int n) {
  if (n < 1 || n > kMaxGenerators)
    throw std::invalid_argument("generator count out of range");
}

/// Square-free monomial x_{i_1}...x_{i_k} of the exterior algebra on n
/// anticommuting generators, stored as the bit set of its index set.
struct Monomial {
  std::uint32_t bits = 0;
  int n = 0;

  Monomial() = default;
  Monomial(std::uint32_t bits_, int n_) : bits(bits_), n(n_) {
    check_generator_count(n_);
    if (bits_ >> n_) throw std::invalid_argument("monomial index out of range");
  }

  int degree() const { return std::popcount(bits); }
  int parity() const { return degree() & 1; }
  bool contains(int i) const { return (bits >> (i - 1)) & 1u; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Product of two monomials: 0 on overlap, otherwise the union with the
/// sign of the shuffle that sorts the concatenated index lists.
/// Returns +1/-1 and the union, or 0 with an empty monomial.
struct SignedMonomial {
  int sign = 0;  // 0 means the product vanished
  Monomial mono;
};

inline SignedMonomial mono_mul(const Monomial& a, const Monomial& b) {
  if (a.n != b.n) throw std::invalid_argument("monomials over different algebras");
  if (a.bits & b.bits) return {};
  // count pairs (i in a, j in b) with i > j
  int swaps = 0;
  std::uint32_t rest = b.bits;
  while (rest) {
    int j = std::countr_zero(rest);
    rest &= rest - 1;
    swaps += std::popcount(a.bits & ~((std::uint32_t(2) << j) - 1));
  }
  return {(swaps & 1) ? -1 : 1, Monomial(a.bits | b.bits, a.n)};
}

/// Finitely supported map Monomial -> Rational with no stored zeros.
/// The empty monomial is the unit of the algebra.
class GrassmannPoly {
 public:
  GrassmannPoly() = default;
  explicit GrassmannPoly(int n) : n_(n) { check_generator_count(n); }

  static GrassmannPoly unit(int n) { return term(Monomial(0, n), 1); }
  static GrassmannPoly generator(int i, int n) {
    return term(Monomial(std::uint32_t(1) << (i - 1), n), 1);
  }
  static GrassmannPoly term(const Monomial& m, Rational c) {
    GrassmannPoly p(m.n);
    p.add_term(m.bits, std::move(c));
    return p;
  }

  int generators() const { return n_; }
  bool is_zero() const { return coef_.empty(); }
  const std::map<std::uint32_t, Rational>& terms() const { return coef_; }

  Rational coefficient(const Monomial& m) const {
    auto it = coef_.find(m.bits);
    return it == coef_.end() ? Rational(0) : it->second;
  }

  void add_term(std::uint32_t bits, const Rational& c) {
    if (cartan::is_zero(c)) return;
    auto [it, inserted] = coef_.emplace(bits, c);
    if (!inserted) {
      it->second += c;
      if (cartan::is_zero(it->second)) coef_.erase(it);
    }
  }

  GrassmannPoly& operator+=(const GrassmannPoly& q) {
    require_same(q);
    for (const auto& [bits, c] : q.coef_) add_term(bits, c);
    return *this;
  }
  GrassmannPoly& operator-=(const GrassmannPoly& q) {
    require_same(q);
    for (const auto& [bits, c] : q.coef_) add_term(bits, -c);
    return *this;
  }
  friend GrassmannPoly operator+(GrassmannPoly p, const GrassmannPoly& q) { return p += q; }
  friend GrassmannPoly operator-(GrassmannPoly p, const GrassmannPoly& q) { return p -= q; }

  friend GrassmannPoly operator*(const Rational& c, const GrassmannPoly& p) {
    GrassmannPoly r(p.n_);
    if (cartan::is_zero(c)) return r;
    for (const auto& [bits, v] : p.coef_) r.coef_.emplace(bits, c * v);
    return r;
  }

  friend GrassmannPoly operator*(const GrassmannPoly& p, const GrassmannPoly& q) {
    p.require_same(q);
    GrassmannPoly r(p.n_);
    for (const auto& [ab, ac] : p.coef_)
      for (const auto& [bb, bc] : q.coef_) {
        auto sm = mono_mul(Monomial(ab, p.n_), Monomial(bb, p.n_));
        if (sm.sign == 0) continue;
        Rational prod = ac * bc;
        r.add_term(sm.mono.bits, sm.sign > 0 ? prod : Rational(-prod));
      }
    return r;
  }

  friend bool operator==(const GrassmannPoly&, const GrassmannPoly&) = default;

  /// True when every term has the same parity (the zero poly is homogeneous).
  bool is_parity_homogeneous() const {
    int seen = -1;
    for (const auto& [bits, c] : coef_) {
      int p = std::popcount(bits) & 1;
      if (seen < 0) seen = p;
      else if (seen != p) return false;
    }
    return true;
  }

  /// Parity of a nonzero homogeneous poly.
  int parity() const {
    if (coef_.empty()) throw std::logic_error("parity of zero polynomial");
    if (!is_parity_homogeneous()) throw std::logic_error("parity of inhomogeneous polynomial");
    return std::popcount(coef_.begin()->first) & 1;
  }

  GrassmannPoly parity_part(int gamma) const {
    GrassmannPoly r(n_);
    for (const auto& [bits, c] : coef_)
      if ((std::popcount(bits) & 1) == (gamma & 1)) r.coef_.emplace(bits, c);
    return r;
  }

  GrassmannPoly degree_part(int k) const {
    GrassmannPoly r(n_);
    for (const auto& [bits, c] : coef_)
      if (std::popcount(bits) == k) r.coef_.emplace(bits, c);
    return r;
  }

  std::string str() const;

 private:
  void require_same(const GrassmannPoly& q) const {
    if (n_ != q.n_) throw std::invalid_argument("polynomials over different algebras");
  }

  int n_ = 0;
  std::map<std::uint32_t, Rational> coef_;
};

/// The odd superderivation with partial(i, x_j) = delta_ij, extended by the
/// super-Leibniz rule: on x_I it removes i with sign (-1)^{#(j in I, j < i)}.
GrassmannPoly partial(int i, const GrassmannPoly& p);

}  // namespace cartan

#endif
