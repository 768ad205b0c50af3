#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "efrac/greedy.hpp"

namespace efrac {

// I(a1) = (1/a1, 1/(a1-1)]: the theta whose greedy expansion starts with a1.
Interval harmonic_interval(const Int& a1);

// J(a1, a2) = (1/a1 + 1/a2, 1/a1 + 1/(a2-1)]: the theta whose greedy
// expansion starts with (a1, a2).
Interval harmonic_subinterval(const Int& a1, const Int& a2);

// First two greedy denominators of theta.
std::pair<Int, Int> locate(const Rat& theta);

// X(a1): the two-term rivals of greedy starts (a1, *), namely pairs with
// a1+1 <= x1 <= 2*a1-1 and 2*a1-1 <= x2 < a1*x1/(x1-a1), in lexicographic
// order.  Every such pair is nondecreasing.
std::vector<std::pair<Int, Int>> competitor_set(const Int& a1);

// The smallest a2 with 1/a1 + 1/a2 <= 1/x1 + 1/x2, i.e. the ceiling of
// (1/x1 + 1/x2 - 1/a1)^{-1}.  tie means the ceiling is exact, so the pairs
// reach the same sum; greedy_valid means (a1, a2) is a greedy start.
struct InducedA2 {
  Int a2;
  bool tie;
  bool greedy_valid;
};

InducedA2 induced_a2(const Int& a1, const Int& x1, const Int& x2);

enum class Relation { tie, strict_improvement };

const char* to_string(Relation r);

struct TwoTermRecord {
  Int a1, x1, x2, a2;
  Relation relation;
  bool greedy_valid;
  // Present for strict improvements with a valid greedy start: the theta for
  // which (x1, x2) beats the greedy pair (a1, a2).
  std::optional<Interval> improvement_interval;
};

// One record per competitor pair, in competitor_set order.
std::vector<TwoTermRecord> classify_two_term(const Int& a1);

}  // namespace efrac
