#ifndef CARTAN_SUPERFIELD_HPP
#define CARTAN_SUPERFIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cartan/exterior.hpp"

namespace cartan {

/// Super vector field sum_i f_i d_i acting on the exterior algebra as an
/// odd-or-even superderivation. The term x_I d_i has parity |I|+1 and
/// integer degree |I|-1.
class SuperVectorField {
 public:
  SuperVectorField() = default;
  explicit SuperVectorField(int n) : n_(n), comp_(n, GrassmannPoly(n)) {
    check_generator_count(n);
  }

  static SuperVectorField term(const GrassmannPoly& f, int i) {
    SuperVectorField d(f.generators());
    d.comp_[i - 1] += f;
    return d;
  }
  /// The coordinate derivation d_i.
  static SuperVectorField dpartial(int i, int n) {
    return term(GrassmannPoly::unit(n), i);
  }

  int generators() const { return n_; }
  const GrassmannPoly& component(int i) const { return comp_.at(i - 1); }
  GrassmannPoly& component(int i) { return comp_.at(i - 1); }

  bool is_zero() const {
    for (const auto& f : comp_)
      if (!f.is_zero()) return false;
    return true;
  }

  SuperVectorField& operator+=(const SuperVectorField& e) {
    require_same(e);
    for (int i = 0; i < n_; ++i) comp_[i] += e.comp_[i];
    return *this;
  }
  SuperVectorField& operator-=(const SuperVectorField& e) {
    require_same(e);
    for (int i = 0; i < n_; ++i) comp_[i] -= e.comp_[i];
    return *this;
  }
  friend SuperVectorField operator+(SuperVectorField d, const SuperVectorField& e) { return d += e; }
  friend SuperVectorField operator-(SuperVectorField d, const SuperVectorField& e) { return d -= e; }
  friend SuperVectorField operator*(const Rational& c, const SuperVectorField& d) {
    SuperVectorField r(d.n_);
    for (int i = 0; i < d.n_; ++i) r.comp_[i] = c * d.comp_[i];
    return r;
  }
  friend bool operator==(const SuperVectorField&, const SuperVectorField&) = default;

  /// Parity of the field term f_i d_i is |f_i| + 1.
  bool is_parity_homogeneous() const;
  int parity() const;
  SuperVectorField parity_part(int gamma) const;

  /// Degree of x_I d_i is |I| - 1.
  bool is_degree_homogeneous() const;
  int degree() const;
  SuperVectorField degree_part(int k) const;

  std::string str() const;

 private:
  void require_same(const SuperVectorField& e) const {
    if (n_ != e.n_) throw std::invalid_argument("fields over different algebras");
  }

  int n_ = 0;
  std::vector<GrassmannPoly> comp_;
};

/// Action of the field on a polynomial: sum_i f_i * partial(i, g).
GrassmannPoly apply(const SuperVectorField& d, const GrassmannPoly& g);

/// Supercommutator of two fields. Agrees with D o E - (-1)^{|D||E|} E o D
/// as operators on the exterior algebra.
SuperVectorField vf_bracket(const SuperVectorField& d, const SuperVectorField& e);

}  // namespace cartan

#endif
