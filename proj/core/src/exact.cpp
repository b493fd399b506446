#include "indel/exact.hpp"

#include <stdexcept>

namespace indel {

std::string to_decimal(const ExactInt& value) { return value.get_str(10); }

std::string to_decimal(const ExactRational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

ExactInt floor(const ExactRational& value) {
  ExactInt result;
  mpz_fdiv_q(result.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return result;
}

ExactInt ipow(unsigned long base, unsigned long exponent) {
  ExactInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), base, exponent);
  return result;
}

ExactRational make_rational(const ExactInt& numerator, const ExactInt& denominator) {
  if (denominator == 0) throw std::domain_error("make_rational: zero denominator");
  ExactRational r(numerator, denominator);
  r.canonicalize();
  return r;
}

}  // namespace indel
