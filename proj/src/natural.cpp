#include "rectcount/natural.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rectcount {

double log_natural(const Natural& v) {
  if (v <= 0) throw std::domain_error("log_natural: value must be positive");
  signed long exp = 0;
  // v = d * 2^exp with d in [0.5, 1); both factors carry full double precision.
  double d = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(d) + static_cast<double>(exp) * std::numbers::ln2;
}

double log10_natural(const Natural& v) { return log_natural(v) / std::numbers::ln10; }

std::string to_decimal(const Natural& v) { return v.get_str(10); }

Natural natural_from_decimal(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty decimal string");
  return Natural(s, 10);
}

Rational make_rational(long num, unsigned long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace rectcount
