#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "efrac/greedy.hpp"

namespace efrac {

struct SearchLimits {
  std::uint64_t node_budget = 10'000'000;
  int threads = 1;
};

// Outcome of an n-term search.  value is the largest reciprocal sum below
// theta; witnesses lists every nondecreasing tuple attaining it, in
// lexicographic order.  greedy carries the reference greedy sequence when one
// exists (the restricted variant may have none).
struct BestResult {
  Rat value;
  std::vector<DenomSeq> witnesses;
  std::optional<DenomSeq> greedy;
  Rat greedy_value;
  bool greedy_is_best = false;
  bool unique_best = false;
  std::uint64_t nodes_explored = 0;
};

enum class Classification { greedy_unique_best, greedy_tied_best, greedy_not_best, greedy_infeasible };

const char* to_string(Classification c);

Classification classify(const BestResult& b);

struct OptimalityReport {
  Rat theta;
  int n;
  BestResult best;
  Classification classification;
};

// Exact branch-and-bound over nondecreasing tuples with reciprocal sum below
// theta.  Node counts are independent of the thread count: the search forks
// once at the root and each first-term branch keeps a private incumbent
// seeded with the greedy value.
BestResult best_underapprox(const Rat& theta, int n, const SearchLimits& lim = {});

// Same search restricted to terms drawn (with repetition) from allowed.
// The allowed list is deduplicated and sorted internally; every entry must be
// >= 2.  The greedy fields describe the allowed-greedy sequence, which can
// fail to reach n terms even when valid tuples exist.
BestResult best_underapprox_restricted(const Rat& theta, int n, std::vector<Int> allowed,
                                       const SearchLimits& lim = {});

// Allowed-greedy: each step takes the smallest allowed denominator, at least
// the previous one, whose reciprocal fits strictly under the deficit.
// Returns nothing if some step has no candidate.
std::optional<DenomSeq> restricted_greedy(const Rat& theta, int n, const std::vector<Int>& allowed);

// Plain nested-loop enumeration over tuples with terms in [2, cap], kept
// deliberately separate from best_underapprox as a cross-check.  cap must be
// large enough to cover the true witnesses (caller's responsibility).
BestResult brute_force_best(const Rat& theta, int n, const Int& cap);

OptimalityReport optimality_report(const Rat& theta, int n, const SearchLimits& lim = {});

struct SplitRow {
  int n0;
  Rat head_value;   // u_{n0}(theta)
  Rat tail_value;   // u_{n - n0}(theta - head_value)
  bool additive;    // head + tail == u_n(theta)
  bool tail_greedy; // tail equals the greedy value of the residual
};

struct SplitReport {
  int n;
  Rat value;  // u_n(theta)
  std::vector<SplitRow> rows;
};

// For each n <= n_max, tests whether u_n splits through every intermediate
// index n0 and whether the optimal tail is the greedy tail of the residual.
std::vector<SplitReport> eg_split_probe(const Rat& theta, int n_max, const SearchLimits& lim = {});

}  // namespace efrac
