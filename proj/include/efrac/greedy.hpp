#pragma once

#include "efrac/sequence.hpp"

namespace efrac {

// First n greedy denominators of theta in (0, 1].  The greedy remainder of a
// rational stays strictly positive, so every prefix length is reachable.
GreedySeq greedy_sequence(const Rat& theta, int n);

// theta - sum of reciprocals; errors unless the result is strictly positive.
Rat greedy_remainder(const Rat& theta, const DenomSeq& seq);

// The set of theta whose greedy expansion starts with seq: an interval
// (sum, sum_head + 1/(a_n - 1)].
Interval criterion_interval(const GreedySeq& seq);

bool is_greedy_for(const GreedySeq& seq, const Rat& theta);

// Largest/smallest theta reaching seq; identical to criterion_interval, kept
// as its own entry point because callers ask the two questions separately.
Interval limit_bounds(const GreedySeq& seq);

// s_1 = 2, s_{i+1} = s_i^2 - s_i + 1: the greedy denominators of 1.
GreedySeq sylvester(int n);

// Greedy denominators of p/q when p divides q+1: a_1 = (q+1)/p and
// a_{k+1} = q * (product of previous terms) + 1.
GreedySeq closed_form_sequence(const Int& p, const Int& q, int n);

}  // namespace efrac
