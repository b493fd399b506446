#pragma once

#include "indel/exact.hpp"

namespace indel {

// C(n, k); zero when k < 0 or k > n.
ExactInt binomial(long n, long k);

// Number of length-(n + t) supersequences of any length-n word over a
// q-ary alphabet: sum_{i=0}^{t} C(n + t, i) (q - 1)^i.
ExactInt insertion_ball_size(int q, long n, long t);

// Hamming ball volume sum_{i=0}^{radius} C(n, i) (q - 1)^i; q^n once radius >= n.
ExactInt hamming_ball_volume(int q, long n, long radius);

// q-ary entropy with 0 log 0 = 0. Throws DomainError outside [0, 1].
double q_ary_entropy(int q, double x);

// Number of words x in [q]^n whose maximum number of index-disjoint
// distinct adjacent pairs equals p. Zero outside 0 <= p <= n/2.
ExactInt count_words_by_pair_number(long n, int q, long p);

}  // namespace indel
