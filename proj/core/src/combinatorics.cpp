#include "indel/combinatorics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "indel/errors.hpp"

namespace indel {

ExactInt binomial(long n, long k) {
  if (n < 0) throw ParameterError("binomial: n must be non-negative, got " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  ExactInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

namespace {

ExactInt ball_sum(int q, long length, long radius) {
  ExactInt total = 0;
  ExactInt power = 1;  // (q - 1)^i
  for (long i = 0; i <= radius && i <= length; ++i) {
    total += binomial(length, i) * power;
    power *= q - 1;
  }
  return total;
}

void check_alphabet(int q, const char* where) {
  if (q < 2) throw ParameterError(std::string(where) + ": q must be at least 2, got " + std::to_string(q));
}

}  // namespace

ExactInt insertion_ball_size(int q, long n, long t) {
  check_alphabet(q, "insertion_ball_size");
  if (n < 0 || t < 0) throw ParameterError("insertion_ball_size: n and t must be non-negative");
  return ball_sum(q, n + t, t);
}

ExactInt hamming_ball_volume(int q, long n, long radius) {
  check_alphabet(q, "hamming_ball_volume");
  if (n < 0 || radius < 0) throw ParameterError("hamming_ball_volume: n and radius must be non-negative");
  return ball_sum(q, n, radius);
}

double q_ary_entropy(int q, double x) {
  check_alphabet(q, "q_ary_entropy");
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("q_ary_entropy: x must lie in [0, 1]");
  const double log_q = std::log(static_cast<double>(q));
  double h = x * std::log(static_cast<double>(q - 1));
  if (x > 0.0) h -= x * std::log(x);
  if (x < 1.0) h -= (1.0 - x) * std::log1p(-x);
  return h / log_q;
}

ExactInt count_words_by_pair_number(long n, int q, long p) {
  check_alphabet(q, "count_words_by_pair_number");
  if (n < 1) throw ParameterError("count_words_by_pair_number: n must be at least 1");
  if (p < 0 || p > n / 2) return 0;
  ExactInt numerator = binomial(n - p, p) * ipow(static_cast<unsigned long>(q), p) *
                       ipow(static_cast<unsigned long>(q - 1), p) * (p + static_cast<long>(q) * (n - 2 * p));
  const ExactInt divisor = n - p;
  if (!mpz_divisible_p(numerator.get_mpz_t(), divisor.get_mpz_t())) {
    throw std::logic_error("count_words_by_pair_number: non-integral count for n=" + std::to_string(n) +
                           ", p=" + std::to_string(p));
  }
  return ExactInt(numerator / divisor);
}

}  // namespace indel
