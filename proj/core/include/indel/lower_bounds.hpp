#pragma once

#include "indel/exact.hpp"
#include "indel/params.hpp"
#include "indel/upper_bounds.hpp"

namespace indel {

// Best number of disjoint distinct adjacent pairs to exploit for a word with
// p such pairs: p_tilde maximizes (2^{p'} - 1) I_q(n - t + p', t - p') over
// 0 <= p' <= min(p, t, n - t), smallest p' on ties.
struct PTildeChoice {
  long n = 0;
  int q = 2;
  long t = 0;
  long p = 0;
  long p_tilde = 0;
  ExactInt objective;
};

PTildeChoice best_p_tilde(long n, int q, long t, long p);

// Lower bounds on A_q(n, d). All floor an exact rational and never report
// less than 1, since a single word is always a code.
//
// floor(q^{n+t} / I_q(n - t, t)^2), t = d/2 - 1.
BoundResult levenshtein_lower(const CodeParams& params);

// Average-ball bound refined by the distinct-adjacent-pair histogram, with the
// per-class optimum p_tilde. Requires d >= 4.
BoundResult improved_lower(const CodeParams& params);

// Closed form of improved_lower using p_tilde = 1 for every class. Requires d >= 4.
BoundResult improved_lower_closed_form(const CodeParams& params);

// Sum over p of N_{n,q}(p) (2^{p_tilde} - 1) I_q(n - t + p_tilde, t - p_tilde),
// the correction subtracted from q^{n-t} I_q(n - t, t)^2.
ExactInt improved_lower_correction(const CodeParams& params);

// max(0, 1 + delta - 2 H_q(delta)): asymptotic form of levenshtein_lower.
RatePoint rate_lower_gv_type(int q, double delta);

}  // namespace indel
