#include "indel/upper_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "indel/combinatorics.hpp"
#include "indel/errors.hpp"

namespace indel {

namespace {

constexpr double kArgumentSlack = 1e-12;

double theta(int q) { return 1.0 - 1.0 / static_cast<double>(q); }

void check_rate_args(int q, double delta, const char* where) {
  if (q < 2) throw ParameterError(std::string(where) + ": q must be at least 2");
  if (!(delta >= 0.0 && delta <= 1.0)) throw DomainError(std::string(where) + ": delta must lie in [0, 1]");
}

// Entropy argument after round-off: values within the slack of [0, 1] are clamped.
double entropy_at(int q, double x) {
  if (x < -kArgumentSlack || x > 1.0 + kArgumentSlack) throw DomainError("entropy argument outside [0, 1]");
  return q_ary_entropy(q, std::clamp(x, 0.0, 1.0));
}

double clamp_rate(double rate) { return std::clamp(rate, 0.0, 1.0); }

}  // namespace

BoundResult sphere_packing_upper(const CodeParams& params) {
  params.validate();
  const long t = params.radius();
  BoundResult result;
  result.method = Method::kSpherePacking;
  result.direction = Direction::kUpper;
  result.params = params;
  result.value = ipow(params.q, params.n + t) / insertion_ball_size(params.q, params.n, t);
  result.aux["t"] = std::to_string(t);
  return result;
}

bool list_size_admissible(const CodeParams& params, long t) {
  if (t < 0) return false;
  const long n = params.n;
  const long d = params.d;
  return t * (2 * n - d) < n * d;
}

ExactRational list_size_bound(const CodeParams& params, long t) {
  params.validate();
  if (!list_size_admissible(params, t)) {
    throw ParameterError("t = " + std::to_string(t) + " violates t < nd/(2n - d) for " + params.to_string());
  }
  const ExactInt n = params.n;
  const ExactInt d = params.d;
  const ExactInt numerator = (n + t) * d;
  return make_rational(numerator, numerator - 2 * n * t);
}

BoundResult elias_type_upper_at_t(const CodeParams& params, long t) {
  params.validate();
  if (params.d == 2 * params.n) {
    throw InapplicableMethod("Elias-type bound requires d < 2n; got " + params.to_string());
  }
  const ExactRational coefficient = list_size_bound(params, t);
  const ExactRational quotient =
      make_rational(ipow(params.q, params.n + t), insertion_ball_size(params.q, params.n, t));
  BoundResult result;
  result.method = Method::kEliasType;
  result.direction = Direction::kUpper;
  result.params = params;
  result.value = floor(ExactRational(coefficient * quotient));
  result.aux["t"] = std::to_string(t);
  return result;
}

BoundResult elias_type_upper(const CodeParams& params) {
  params.validate();
  if (params.d == 2 * params.n) {
    throw InapplicableMethod("Elias-type bound requires d < 2n; got " + params.to_string());
  }
  BoundResult best = elias_type_upper_at_t(params, 0);
  for (long t = 1; list_size_admissible(params, t); ++t) {
    BoundResult candidate = elias_type_upper_at_t(params, t);
    if (candidate.value < best.value) best = std::move(candidate);
  }
  return best;
}

BoundResult best_upper(const CodeParams& params) {
  BoundResult best = sphere_packing_upper(params);
  if (params.d < 2 * params.n) {
    BoundResult elias = elias_type_upper(params);
    if (elias.value < best.value) best = std::move(elias);
  }
  best.aux["winner"] = std::string(method_tag(best.method));
  return best;
}

std::string_view rate_method_tag(RateMethod method) {
  switch (method) {
    case RateMethod::kSpherePacking:
      return "cor1";
    case RateMethod::kEliasType:
      return "cor2";
    case RateMethod::kHammingElias:
      return "elias";
    case RateMethod::kMrrw:
      return "mrrw";
    case RateMethod::kGvTypeLower:
      return "gv";
  }
  return "unknown";
}

RatePoint rate_upper_sphere_packing(int q, double delta) {
  check_rate_args(q, delta, "rate_upper_sphere_packing");
  RatePoint point{delta, 0.0, RateMethod::kSpherePacking};
  if (delta >= theta(q)) return point;
  point.rate = clamp_rate((1.0 + delta) * (1.0 - entropy_at(q, delta / (1.0 + delta))));
  return point;
}

RatePoint rate_upper_elias_type(int q, double delta) {
  check_rate_args(q, delta, "rate_upper_elias_type");
  if (delta == 1.0) throw DomainError("rate_upper_elias_type: delta must be < 1");
  RatePoint point{delta, 0.0, RateMethod::kEliasType};
  if (delta >= theta(q)) return point;
  point.rate = clamp_rate((1.0 - entropy_at(q, delta)) / (1.0 - delta));
  return point;
}

RatePoint rate_upper_hamming_elias(int q, double delta) {
  check_rate_args(q, delta, "rate_upper_hamming_elias");
  RatePoint point{delta, 0.0, RateMethod::kHammingElias};
  const double th = theta(q);
  if (delta >= th) return point;
  point.rate = clamp_rate(1.0 - entropy_at(q, th - std::sqrt(th * (th - delta))));
  return point;
}

RatePoint rate_upper_mrrw(int q, double delta) {
  check_rate_args(q, delta, "rate_upper_mrrw");
  RatePoint point{delta, 0.0, RateMethod::kMrrw};
  if (delta >= theta(q)) return point;
  const double qd = static_cast<double>(q);
  const double arg =
      (qd - 1.0 - (qd - 2.0) * delta - 2.0 * std::sqrt(delta * (1.0 - delta) * (qd - 1.0))) / qd;
  point.rate = clamp_rate(entropy_at(q, arg));
  return point;
}

double bgh_zero_rate_threshold(int q) {
  if (q < 2) throw ParameterError("bgh_zero_rate_threshold: q must be at least 2");
  const double qd = static_cast<double>(q);
  return 1.0 - 2.0 / (qd + std::sqrt(qd));
}

}  // namespace indel
