#include "indel/lower_bounds.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "indel/combinatorics.hpp"
#include "indel/errors.hpp"

namespace indel {

namespace {

BoundResult lower_result(Method method, const CodeParams& params, const ExactRational& raw) {
  BoundResult result;
  result.method = method;
  result.direction = Direction::kLower;
  result.params = params;
  result.value = floor(raw);
  result.aux["t"] = std::to_string(params.radius());
  if (result.value < 1) {
    result.aux["raw_floor"] = to_decimal(result.value);
    result.value = 1;
  }
  return result;
}

void require_positive_radius(const CodeParams& params, const char* what) {
  params.validate();
  if (params.radius() < 1) {
    throw InapplicableMethod(std::string(what) + " requires t = d/2 - 1 > 0 (d >= 4); got " + params.to_string());
  }
}

}  // namespace

PTildeChoice best_p_tilde(long n, int q, long t, long p) {
  if (t < 0 || t > n) throw ParameterError("best_p_tilde: need 0 <= t <= n");
  if (p < 0) throw ParameterError("best_p_tilde: p must be non-negative");
  PTildeChoice choice{n, q, t, p, 0, 0};
  const long limit = std::min({p, t, n - t});
  for (long candidate = 1; candidate <= limit; ++candidate) {
    ExactInt objective = (ipow(2, candidate) - 1) * insertion_ball_size(q, n - t + candidate, t - candidate);
    if (objective > choice.objective) {
      choice.p_tilde = candidate;
      choice.objective = std::move(objective);
    }
  }
  return choice;
}

BoundResult levenshtein_lower(const CodeParams& params) {
  params.validate();
  const long t = params.radius();
  const ExactInt ball = insertion_ball_size(params.q, params.n - t, t);
  return lower_result(Method::kLevenshteinLower, params,
                      make_rational(ipow(params.q, params.n + t), ball * ball));
}

ExactInt improved_lower_correction(const CodeParams& params) {
  require_positive_radius(params, "improved_lower_correction");
  const long n = params.n;
  const long t = params.radius();
  // p_tilde depends on p only through min(p, t, n - t).
  std::map<long, ExactInt> objective_by_cap;
  ExactInt sum = 0;
  for (long p = 0; p <= n / 2; ++p) {
    const long cap = std::min({p, t, n - t});
    auto it = objective_by_cap.find(cap);
    if (it == objective_by_cap.end()) {
      it = objective_by_cap.emplace(cap, best_p_tilde(n, params.q, t, cap).objective).first;
    }
    sum += count_words_by_pair_number(n, params.q, p) * it->second;
  }
  return sum;
}

BoundResult improved_lower(const CodeParams& params) {
  require_positive_radius(params, "improved lower bound");
  const long n = params.n;
  const long t = params.radius();
  const ExactInt ball = insertion_ball_size(params.q, n - t, t);
  const ExactInt full = ipow(params.q, n - t) * ball * ball;  // sum over x of |D_t(x)| I_q(n-t, t)
  const ExactInt correction = improved_lower_correction(params);
  if (correction > full) throw std::logic_error("improved_lower: correction exceeds the ball-sum total");
  // q^n / (q^-t I^2 - q^-n S) = q^{2n} / (q^{n-t} I^2 - S)
  const ExactInt denominator = full - correction;
  if (denominator <= 0) throw std::logic_error("improved_lower: non-positive denominator");
  BoundResult result =
      lower_result(Method::kImprovedLower, params, make_rational(ipow(params.q, 2 * n), denominator));
  result.aux["correction"] = to_decimal(correction);
  return result;
}

BoundResult improved_lower_closed_form(const CodeParams& params) {
  require_positive_radius(params, "closed-form improved lower bound");
  const long n = params.n;
  const long t = params.radius();
  const ExactInt ball = insertion_ball_size(params.q, n - t, t);
  const ExactInt shifted = insertion_ball_size(params.q, n - t + 1, t - 1);
  const ExactRational denominator = make_rational(ball * ball, ipow(params.q, t)) -
                                    (1 - make_rational(1, ipow(params.q, n - 1))) * shifted;
  if (denominator <= 0) throw std::logic_error("improved_lower_closed_form: non-positive denominator");
  return lower_result(Method::kImprovedLowerClosedForm, params,
                      ExactRational(ExactRational(ipow(params.q, n)) / denominator));
}

RatePoint rate_lower_gv_type(int q, double delta) {
  if (q < 2) throw ParameterError("rate_lower_gv_type: q must be at least 2");
  if (!(delta >= 0.0 && delta < 1.0)) throw DomainError("rate_lower_gv_type: delta must lie in [0, 1)");
  const double rate = 1.0 + delta - 2.0 * q_ary_entropy(q, delta);
  return RatePoint{delta, std::clamp(rate, 0.0, 1.0), RateMethod::kGvTypeLower};
}

}  // namespace indel
