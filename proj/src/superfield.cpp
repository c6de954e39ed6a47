#include "cartan/superfield.hpp"

#include <sstream>

namespace cartan {

bool SuperVectorField::is_parity_homogeneous() const {
  int seen = -1;
  for (int i = 0; i < n_; ++i)
    for (const auto& [bits, c] : comp_[i].terms()) {
      int p = (std::popcount(bits) + 1) & 1;
      if (seen < 0) seen = p;
      else if (seen != p) return false;
    }
  return true;
}

int SuperVectorField::parity() const {
  if (is_zero()) throw std::logic_error("parity of zero field");
  if (!is_parity_homogeneous()) throw std::logic_error("parity of inhomogeneous field");
  for (int i = 0; i < n_; ++i)
    if (!comp_[i].is_zero())
      return (std::popcount(comp_[i].terms().begin()->first) + 1) & 1;
  return 0;
}

SuperVectorField SuperVectorField::parity_part(int gamma) const {
  SuperVectorField r(n_);
  for (int i = 0; i < n_; ++i) r.comp_[i] = comp_[i].parity_part((gamma + 1) & 1);
  return r;
}

bool SuperVectorField::is_degree_homogeneous() const {
  int seen = INT32_MIN;
  for (int i = 0; i < n_; ++i)
    for (const auto& [bits, c] : comp_[i].terms()) {
      int d = std::popcount(bits) - 1;
      if (seen == INT32_MIN) seen = d;
      else if (seen != d) return false;
    }
  return true;
}

int SuperVectorField::degree() const {
  if (is_zero()) throw std::logic_error("degree of zero field");
  if (!is_degree_homogeneous()) throw std::logic_error("degree of inhomogeneous field");
  for (int i = 0; i < n_; ++i)
    if (!comp_[i].is_zero())
      return std::popcount(comp_[i].terms().begin()->first) - 1;
  return 0;
}

SuperVectorField SuperVectorField::degree_part(int k) const {
  SuperVectorField r(n_);
  for (int i = 0; i < n_; ++i) r.comp_[i] = comp_[i].degree_part(k + 1);
  return r;
}

std::string SuperVectorField::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < n_; ++i) {
    if (comp_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << comp_[i].str() << ")d" << (i + 1);
  }
  return os.str();
}

GrassmannPoly apply(const SuperVectorField& d, const GrassmannPoly& g) {
  if (d.generators() != g.generators())
    throw std::invalid_argument("field and polynomial over different algebras");
  GrassmannPoly r(g.generators());
  for (int i = 1; i <= d.generators(); ++i) {
    if (d.component(i).is_zero()) continue;
    r += d.component(i) * partial(i, g);
  }
  return r;
}

SuperVectorField vf_bracket(const SuperVectorField& d, const SuperVectorField& e) {
  if (d.generators() != e.generators())
    throw std::invalid_argument("fields over different algebras");
  const int n = d.generators();
  SuperVectorField r(n);
  // expand over monomial terms; [f d_a, g d_b] = f d_a(g) d_b - (-1)^{pq} g d_b(f) d_a
  for (int a = 1; a <= n; ++a) {
    for (const auto& [fb, fc] : d.component(a).terms()) {
      GrassmannPoly f = GrassmannPoly::term(Monomial(fb, n), fc);
      int pf = (std::popcount(fb) + 1) & 1;
      for (int b = 1; b <= n; ++b) {
        for (const auto& [gb, gc] : e.component(b).terms()) {
          GrassmannPoly g = GrassmannPoly::term(Monomial(gb, n), gc);
          int pg = (std::popcount(gb) + 1) & 1;
          GrassmannPoly left = f * partial(a, g);
          if (!left.is_zero()) r.component(b) += left;
          GrassmannPoly right = g * partial(b, f);
          if (!right.is_zero()) {
            if (pf & pg) r.component(a) += right;
            else r.component(a) -= right;
          }
        }
      }
    }
  }
  return r;
}

}  // namespace cartan
