#include "efrac/optimal.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>

namespace efrac {

namespace {

void require_terms(int n, const char* who) {
  if (n < 1) fail(Errc::domain, std::string(who) + ": n = " + std::to_string(n) + " must be >= 1");
}

bool lex_less(const std::vector<Int>& a, const std::vector<Int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Smallest integer x with 1/x < r, for r > 0.
Int first_fitting(const Rat& r) { return Int(r.den() / r.num() + 1); }

// x * r > k, for r > 0: even the flattest completion from here falls short.
bool cannot_reach(const Int& x, const Rat& r, int k) { return x * r.num() > k * r.den(); }

struct Incumbent {
  std::optional<Rat> value;
  std::vector<std::vector<Int>> wits;
};

void offer(Incumbent& inc, const std::vector<Int>& tuple, Rat total) {
  if (!inc.value || total > *inc.value) {
    inc.value = std::move(total);
    inc.wits.clear();
    inc.wits.push_back(tuple);
  } else if (total == *inc.value) {
    inc.wits.push_back(tuple);
  }
}

struct BranchRun {
  Incumbent inc;
  std::uint64_t nodes = 0;
  std::exception_ptr err;
};

void run_workers(const std::function<void()>& work, int threads, std::size_t jobs) {
  std::size_t t = threads < 1 ? 1 : std::size_t(threads);
  if (t > jobs) t = jobs;
  if (t <= 1) {
    work();
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (std::size_t i = 0; i < t; ++i) pool.emplace_back(work);
  for (auto& th : pool) th.join();
}

// Depth-first walk below one fixed first term.  The incumbent is private to
// the branch, so the set of visited nodes does not depend on what other
// branches found or on scheduling.
struct Walker {
  const Rat& theta;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  Incumbent inc;
  std::vector<Int> prefix;

  void tick() {
    if (++nodes > budget) fail(Errc::budget_exhausted, "search exceeded the node budget");
  }

  void dive(const Rat& s, int k, const Int& prev) {
    tick();
    Rat deficit = theta - s;
    Int lo = first_fitting(deficit);
    if (lo < prev) lo = prev;
    if (k == 1) {
      prefix.push_back(lo);
      offer(inc, prefix, s + Rat::unit(lo));
      prefix.pop_back();
      return;
    }
    for (Int x = lo;; ++x) {
      // Once the incumbent exceeds the prefix sum the flat bound applies;
      // until then the first child is expanded unconditionally, and its
      // leftmost leaf pushes the incumbent above s.
      if (inc.value && *inc.value > s && cannot_reach(x, *inc.value - s, k)) break;
      prefix.push_back(x);
      dive(s + Rat::unit(x), k - 1, x);
      prefix.pop_back();
    }
  }
};

BestResult finalize(Incumbent merged, std::uint64_t total_nodes) {
  BestResult out;
  out.value = *merged.value;
  std::sort(merged.wits.begin(), merged.wits.end(), lex_less);
  out.witnesses.reserve(merged.wits.size());
  for (auto& w : merged.wits) out.witnesses.emplace_back(std::move(w));
  out.unique_best = out.witnesses.size() == 1;
  out.nodes_explored = total_nodes;
  return out;
}

}  // namespace

const char* to_string(Classification c) {
  switch (c) {
    case Classification::greedy_unique_best: return "GREEDY_UNIQUE_BEST";
    case Classification::greedy_tied_best: return "GREEDY_TIED_BEST";
    case Classification::greedy_not_best: return "GREEDY_NOT_BEST";
    case Classification::greedy_infeasible: return "GREEDY_INFEASIBLE";
  }
  return "?";
}

BestResult best_underapprox(const Rat& theta, int n, const SearchLimits& lim) {
  require_unit_range(theta, "best_underapprox");
  require_terms(n, "best_underapprox");
  GreedySeq g = greedy_sequence(theta, n);
  Rat gval = g.sum();

  if (n == 1) {
    // 1/G(theta) is the largest unit fraction below theta.
    BestResult out;
    out.value = gval;
    out.witnesses.push_back(g.as_denoms());
    out.greedy = g.as_denoms();
    out.greedy_value = gval;
    out.greedy_is_best = true;
    out.unique_best = true;
    out.nodes_explored = 1;
    return out;
  }

  Int lo = greedy_denominator(theta);
  // Seeding every branch with the greedy value caps the first term at
  // floor(n / greedy value); the greedy first term itself survives the bound.
  Rat ratio = Rat(long(n)) / gval;
  Int hi = ratio.num() / ratio.den();
  Int width = hi - lo + 1;
  if (width > Int((unsigned long)lim.node_budget))
    fail(Errc::budget_exhausted, "search exceeded the node budget");
  std::size_t jobs = width.get_ui();

  std::vector<BranchRun> runs(jobs);
  std::atomic<std::size_t> cursor{0};
  std::function<void()> work = [&] {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= jobs) return;
      BranchRun& r = runs[i];
      try {
        Walker w{theta, lim.node_budget};
        w.inc.value = gval;
        Int x1 = lo + Int((unsigned long)i);
        w.prefix.push_back(x1);
        w.dive(Rat::unit(x1), n - 1, x1);
        r.inc = std::move(w.inc);
        r.nodes = w.nodes;
      } catch (...) {
        r.err = std::current_exception();
      }
    }
  };
  run_workers(work, lim.threads, jobs);

  std::uint64_t total = 1;
  Incumbent merged;
  merged.value = gval;
  for (BranchRun& r : runs) {
    if (r.err) std::rethrow_exception(r.err);
    total += r.nodes;
    if (!r.inc.value) continue;
    if (*r.inc.value > *merged.value) {
      merged.value = *r.inc.value;
      merged.wits = std::move(r.inc.wits);
    } else if (*r.inc.value == *merged.value) {
      for (auto& w : r.inc.wits) merged.wits.push_back(std::move(w));
    }
  }
  if (total > lim.node_budget) fail(Errc::budget_exhausted, "search exceeded the node budget");

  BestResult out = finalize(std::move(merged), total);
  out.greedy = g.as_denoms();
  out.greedy_value = gval;
  out.greedy_is_best = (out.value == gval);
  return out;
}

std::optional<DenomSeq> restricted_greedy(const Rat& theta, int n, const std::vector<Int>& allowed) {
  require_unit_range(theta, "restricted_greedy");
  require_terms(n, "restricted_greedy");
  std::vector<Int> terms;
  terms.reserve(n);
  Rat rem = theta;
  std::size_t i_min = 0;
  for (int i = 0; i < n; ++i) {
    Int t = first_fitting(rem);
    auto it = std::lower_bound(allowed.begin() + i_min, allowed.end(), t);
    if (it == allowed.end()) return std::nullopt;
    rem -= Rat::unit(*it);
    i_min = std::size_t(it - allowed.begin());
    terms.push_back(*it);
  }
  return DenomSeq(std::move(terms));
}

namespace {

// Restricted counterpart of Walker; candidates come from the sorted allowed
// list, entered at index i_min to keep tuples nondecreasing.
struct RWalker {
  const Rat& theta;
  const std::vector<Int>& allowed;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  Incumbent inc;
  std::vector<Int> prefix;

  void tick() {
    if (++nodes > budget) fail(Errc::budget_exhausted, "search exceeded the node budget");
  }

  void dive(const Rat& s, int k, std::size_t i_min) {
    tick();
    Rat deficit = theta - s;
    if (k == 1) {
      Int t = first_fitting(deficit);
      auto it = std::lower_bound(allowed.begin() + i_min, allowed.end(), t);
      if (it == allowed.end()) return;
      prefix.push_back(*it);
      offer(inc, prefix, s + Rat::unit(*it));
      prefix.pop_back();
      return;
    }
    // x is worth branching on only if the remaining k-1 slots can still fit
    // under theta even when filled with the largest allowed denominator.
    Rat margin = deficit - Rat(long(k - 1)) * Rat::unit(allowed.back());
    if (margin.sign() <= 0) return;
    Int t = first_fitting(margin);
    std::size_t i = std::size_t(std::lower_bound(allowed.begin() + i_min, allowed.end(), t) -
                                allowed.begin());
    for (; i < allowed.size(); ++i) {
      if (inc.value && *inc.value > s && cannot_reach(allowed[i], *inc.value - s, k)) break;
      prefix.push_back(allowed[i]);
      dive(s + Rat::unit(allowed[i]), k - 1, i);
      prefix.pop_back();
    }
  }
};

}  // namespace

BestResult best_underapprox_restricted(const Rat& theta, int n, std::vector<Int> allowed,
                                       const SearchLimits& lim) {
  require_unit_range(theta, "best_underapprox_restricted");
  require_terms(n, "best_underapprox_restricted");
  if (allowed.empty()) fail(Errc::domain, "best_underapprox_restricted: allowed list is empty");
  std::sort(allowed.begin(), allowed.end());
  allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
  if (allowed.front() < 2)
    fail(Errc::domain, "best_underapprox_restricted: allowed denominators must be >= 2");
  const Int& a_max = allowed.back();
  if (!(Rat(long(n)) * Rat::unit(a_max) < theta))
    fail(Errc::infeasible, "no " + std::to_string(n) + "-term underapproximation of " +
                               theta.str() + " from the allowed denominators");

  std::optional<DenomSeq> ag = restricted_greedy(theta, n, allowed);
  std::optional<Rat> seed;
  if (ag) seed = ag->sum();

  BestResult out;
  if (n == 1) {
    Int t = first_fitting(theta);
    auto it = std::lower_bound(allowed.begin(), allowed.end(), t);
    // Nonempty by the feasibility check above.
    out.value = Rat::unit(*it);
    out.witnesses.emplace_back(std::vector<Int>{*it});
    out.unique_best = true;
    out.nodes_explored = 1;
  } else {
    Rat margin = theta - Rat(long(n - 1)) * Rat::unit(a_max);
    Int t = first_fitting(margin);
    std::size_t base = std::size_t(std::lower_bound(allowed.begin(), allowed.end(), t) -
                                   allowed.begin());
    std::vector<std::size_t> roots;
    for (std::size_t i = base; i < allowed.size(); ++i) {
      if (seed && cannot_reach(allowed[i], *seed, n)) break;
      roots.push_back(i);
    }

    std::vector<BranchRun> runs(roots.size());
    std::atomic<std::size_t> cursor{0};
    std::function<void()> work = [&] {
      for (;;) {
        std::size_t i = cursor.fetch_add(1);
        if (i >= roots.size()) return;
        BranchRun& r = runs[i];
        try {
          RWalker w{theta, allowed, lim.node_budget};
          w.inc.value = seed;
          std::size_t root = roots[i];
          w.prefix.push_back(allowed[root]);
          w.dive(Rat::unit(allowed[root]), n - 1, root);
          r.inc = std::move(w.inc);
          r.nodes = w.nodes;
        } catch (...) {
          r.err = std::current_exception();
        }
      }
    };
    run_workers(work, lim.threads, roots.size());

    std::uint64_t total = 1;
    Incumbent merged;
    merged.value = seed;
    for (BranchRun& r : runs) {
      if (r.err) std::rethrow_exception(r.err);
      total += r.nodes;
      if (!r.inc.value) continue;
      if (!merged.value || *r.inc.value > *merged.value) {
        merged.value = *r.inc.value;
        merged.wits = std::move(r.inc.wits);
      } else if (*r.inc.value == *merged.value) {
        for (auto& w : r.inc.wits) merged.wits.push_back(std::move(w));
      }
    }
    if (total > lim.node_budget) fail(Errc::budget_exhausted, "search exceeded the node budget");
    if (!merged.value || merged.wits.empty())
      fail(Errc::infeasible, "no " + std::to_string(n) + "-term underapproximation of " +
                                 theta.str() + " from the allowed denominators");
    out = finalize(std::move(merged), total);
  }

  if (ag) {
    out.greedy_value = ag->sum();
    out.greedy = std::move(ag);
    out.greedy_is_best = (out.greedy_value == out.value);
  }
  return out;
}

namespace {

// Cross-check enumerator: plain nested loops over [2, cap], a global
// incumbent with no greedy seeding, and a closed-form last coordinate.
struct Brute {
  const Rat& theta;
  const Int& cap;
  std::uint64_t nodes = 0;
  Incumbent inc;
  std::vector<Int> prefix;

  void enumerate(const Rat& s, int k, const Int& prev) {
    ++nodes;
    Rat deficit = theta - s;
    if (deficit.sign() <= 0) return;
    Int lo = first_fitting(deficit);
    if (lo < prev) lo = prev;
    if (k == 1) {
      if (lo > cap) return;
      prefix.push_back(lo);
      offer(inc, prefix, s + Rat::unit(lo));
      prefix.pop_back();
      return;
    }
    for (Int x = lo; x <= cap; ++x) {
      if (inc.value && *inc.value > s && cannot_reach(x, *inc.value - s, k)) break;
      prefix.push_back(x);
      enumerate(s + Rat::unit(x), k - 1, x);
      prefix.pop_back();
    }
  }
};

}  // namespace

BestResult brute_force_best(const Rat& theta, int n, const Int& cap) {
  require_unit_range(theta, "brute_force_best");
  require_terms(n, "brute_force_best");
  if (cap < 2 || !(Rat(long(n)) * Rat::unit(cap) < theta))
    fail(Errc::infeasible, "no " + std::to_string(n) + "-term underapproximation of " +
                               theta.str() + " with denominators at most " + cap.get_str());

  Brute b{theta, cap};
  b.enumerate(rat_zero(), n, Int(2));
  if (!b.inc.value)
    fail(Errc::infeasible, "no " + std::to_string(n) + "-term underapproximation of " +
                               theta.str() + " with denominators at most " + cap.get_str());

  std::uint64_t total = b.nodes;
  BestResult out = finalize(std::move(b.inc), total);
  GreedySeq g = greedy_sequence(theta, n);
  out.greedy_value = g.sum();
  out.greedy = g.as_denoms();
  out.greedy_is_best = (out.greedy_value == out.value);
  return out;
}

Classification classify(const BestResult& b) {
  if (!b.greedy) return Classification::greedy_infeasible;
  if (!b.greedy_is_best) return Classification::greedy_not_best;
  return b.unique_best ? Classification::greedy_unique_best : Classification::greedy_tied_best;
}

OptimalityReport optimality_report(const Rat& theta, int n, const SearchLimits& lim) {
  OptimalityReport rep{theta, n, best_underapprox(theta, n, lim), Classification::greedy_not_best};
  rep.classification = classify(rep.best);
  return rep;
}

std::vector<SplitReport> eg_split_probe(const Rat& theta, int n_max, const SearchLimits& lim) {
  require_unit_range(theta, "eg_split_probe");
  require_terms(n_max, "eg_split_probe");
  std::vector<Rat> u(std::size_t(n_max) + 1);
  for (int k = 1; k <= n_max; ++k) u[k] = best_underapprox(theta, k, lim).value;

  std::vector<SplitReport> out;
  out.reserve(n_max);
  for (int n = 1; n <= n_max; ++n) {
    SplitReport rep{n, u[n], {}};
    for (int n0 = 1; n0 < n; ++n0) {
      Rat residual = theta - u[n0];
      int m = n - n0;
      Rat tail = best_underapprox(residual, m, lim).value;
      bool additive = (u[n0] + tail == u[n]);
      bool tail_greedy = (greedy_sequence(residual, m).sum() == tail);
      rep.rows.push_back({n0, u[n0], tail, additive, tail_greedy});
    }
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace efrac
