#ifndef CARTAN_RATIONAL_HPP
#define CARTAN_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cartan {

/// Exact scalar type. All algebra construction is done over the rationals;
/// prime fields are available as a solver backend only.
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational rational_of(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Canonical decimal form, "n" or "n/d" with d > 0.
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_prime(std::uint64_t p);

/// Field-of-fractions context; element type is Rational.
struct RationalField {
  using Elt = Rational;
  static constexpr bool exact = true;

  Elt zero() const { return Rational(0); }
  Elt one() const { return Rational(1); }
  bool is_zero(const Elt& a) const { return sgn(a) == 0; }
  Elt neg(const Elt& a) const { return -a; }
  Elt add(const Elt& a, const Elt& b) const { return a + b; }
  Elt sub(const Elt& a, const Elt& b) const { return a - b; }
  Elt mul(const Elt& a, const Elt& b) const { return a * b; }
  Elt div(const Elt& a, const Elt& b) const { return a / b; }
  Elt from_rational(const Rational& q) const { return q; }
};

/// Arithmetic context for F_p with p < 2^32 (products fit in 64 bits).
class PrimeField {
 public:
  using Elt = std::uint64_t;
  static constexpr bool exact = false;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  bool is_zero(const Elt& a) const { return a == 0; }
  Elt neg(const Elt& a) const { return a == 0 ? 0 : p_ - a; }
  Elt add(const Elt& a, const Elt& b) const {
    Elt s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elt sub(const Elt& a, const Elt& b) const { return add(a, neg(b)); }
  Elt mul(const Elt& a, const Elt& b) const { return (a * b) % p_; }
  Elt inv(const Elt& a) const;
  Elt div(const Elt& a, const Elt& b) const { return mul(a, inv(b)); }

  /// Reduce an exact rational mod p. Throws if p divides the denominator.
  Elt from_rational(const Rational& q) const;

 private:
  std::uint64_t p_;
};

}  // namespace cartan

#endif
