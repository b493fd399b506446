#pragma once

#include <string_view>

#include "indel/exact.hpp"
#include "indel/params.hpp"

namespace indel {

// floor(q^{n+t} / I_q(n, t)) with t = d/2 - 1: supersequence balls of
// radius t around codewords are pairwise disjoint.
BoundResult sphere_packing_upper(const CodeParams& params);

// True iff t satisfies t (2n - d) < n d, i.e. the list-size coefficient
// (n+t)d / ((n+t)d - 2nt) has a positive denominator.
bool list_size_admissible(const CodeParams& params, long t);

// (n+t)d / ((n+t)d - 2nt): maximum number of codewords that are
// subsequences of one length-(n+t) word. Requires list_size_admissible.
ExactRational list_size_bound(const CodeParams& params, long t);

// floor( list_size_bound * q^{n+t} / I_q(n, t) ), evaluated as one rational.
// Throws InapplicableMethod when d = 2n, ParameterError when t is not admissible.
BoundResult elias_type_upper_at_t(const CodeParams& params, long t);

// Minimum of elias_type_upper_at_t over all admissible t; aux["t"] holds the
// smallest minimizer.
BoundResult elias_type_upper(const CodeParams& params);

// Minimum over the applicable upper bounds; aux["winner"] names it.
BoundResult best_upper(const CodeParams& params);

enum class RateMethod { kSpherePacking, kEliasType, kHammingElias, kMrrw, kGvTypeLower };

std::string_view rate_method_tag(RateMethod method);

struct RatePoint {
  double delta = 0.0;
  double rate = 0.0;
  RateMethod method{};
};

// Asymptotic rate bounds in the normalized distance delta = d / 2n. The upper
// bounds return 0 for delta >= 1 - 1/q and are clamped into [0, 1].
RatePoint rate_upper_sphere_packing(int q, double delta);
RatePoint rate_upper_elias_type(int q, double delta);
RatePoint rate_upper_hamming_elias(int q, double delta);
RatePoint rate_upper_mrrw(int q, double delta);

// 1 - 2 / (q + sqrt(q)): positive-rate codes exist for smaller delta.
double bgh_zero_rate_threshold(int q);

}  // namespace indel
