#include "cartan/rational.hpp"

namespace cartan {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t(1) << 32))
    throw std::invalid_argument("prime modulus must be < 2^32");
  if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
}

PrimeField::Elt PrimeField::inv(const Elt& a) const {
  if (a == 0) throw std::domain_error("inverse of zero in prime field");
  // extended Euclid on (a, p)
  std::int64_t t = 0, newt = 1;
  std::int64_t r = std::int64_t(p_), newr = std::int64_t(a);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += std::int64_t(p_);
  return Elt(t);
}

PrimeField::Elt PrimeField::from_rational(const Rational& q) const {
  std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p_);
  std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p_);
  if (den == 0)
    throw std::domain_error("denominator divisible by certificate prime");
  return mul(num, inv(den));
}

}  // namespace cartan
