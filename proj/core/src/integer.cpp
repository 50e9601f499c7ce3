#include "cpg/integer.hpp"

namespace cpg {

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  if (canonical.get_den() == 1) return canonical.get_num().get_str();
  return canonical.get_num().get_str() + "/" + canonical.get_den().get_str();
}

Integer floor_mod(const Integer& value, const Integer& modulus) {
  Integer m = abs(modulus);
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer symmetric_mod(const Integer& value, const Integer& modulus) {
  Integer m = abs(modulus);
  Integer r = floor_mod(value, m);
  if (2 * r > m) r -= m;
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace cpg
