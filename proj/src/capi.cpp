#include "efrac/efrac.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

#include "efrac/greedy.hpp"
#include "efrac/ineq.hpp"
#include "efrac/optimal.hpp"
#include "efrac/twoterm.hpp"

using namespace efrac;

struct efrac_rat {
  Rat v;
};

struct efrac_seq {
  std::vector<Int> v;
};

struct efrac_best {
  BestResult v;
};

struct efrac_records {
  std::vector<TwoTermRecord> v;
};

struct efrac_splits {
  struct Row {
    int n, n0;
    std::string head, tail;
    int additive, tail_greedy;
  };
  std::vector<std::string> values;  // values[n-1] = u_n
  std::vector<Row> rows;
};

namespace {

thread_local std::string t_last_error;

char* dup_str(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

efrac_status status_of(Errc c) {
  switch (c) {
    case Errc::parse: return EFRAC_ERR_PARSE;
    case Errc::zero_denominator: return EFRAC_ERR_ZERO_DENOMINATOR;
    case Errc::domain: return EFRAC_ERR_DOMAIN;
    case Errc::bad_sequence: return EFRAC_ERR_BAD_SEQUENCE;
    case Errc::divisibility: return EFRAC_ERR_DIVISIBILITY;
    case Errc::precondition: return EFRAC_ERR_PRECONDITION;
    case Errc::infeasible: return EFRAC_ERR_INFEASIBLE;
    case Errc::budget_exhausted: return EFRAC_ERR_BUDGET;
  }
  return EFRAC_ERR_INTERNAL;
}

template <typename F>
efrac_status guard(F&& f) {
  try {
    f();
    return EFRAC_OK;
  } catch (const Error& e) {
    t_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return EFRAC_ERR_INTERNAL;
  }
}

Int parse_int(const char* text, const char* what) {
  std::string_view s(text);
  std::string_view digits = s;
  if (!digits.empty() && digits[0] == '-') digits.remove_prefix(1);
  if (digits.empty()) fail(Errc::parse, std::string("bad ") + what + " '" + std::string(s) + "'");
  for (char c : digits)
    if (c < '0' || c > '9')
      fail(Errc::parse, std::string("bad ") + what + " '" + std::string(s) + "'");
  return Int(std::string(s), 10);
}

SearchLimits limits_of(uint64_t node_budget, int threads) {
  SearchLimits lim;
  if (node_budget > 0) lim.node_budget = node_budget;
  lim.threads = threads < 1 ? 1 : threads;
  return lim;
}

Direction direction_of(int direction) {
  if (direction != 0 && direction != 1)
    fail(Errc::domain, "direction must be 0 (increasing) or 1 (decreasing)");
  return direction == 0 ? Direction::increasing : Direction::decreasing;
}

}  // namespace

extern "C" {

const char* efrac_last_error(void) { return t_last_error.c_str(); }

void efrac_string_free(char* s) { std::free(s); }

efrac_status efrac_rat_parse(const char* text, efrac_rat** out) {
  return guard([&] { *out = new efrac_rat{Rat::parse(text)}; });
}

efrac_status efrac_rat_make(const char* num, const char* den, efrac_rat** out) {
  return guard([&] {
    Int n = parse_int(num, "numerator");
    Int d = parse_int(den, "denominator");
    *out = new efrac_rat{Rat(n, d)};
  });
}

char* efrac_rat_str(const efrac_rat* r) { return dup_str(r->v.str()); }

int efrac_rat_cmp(const efrac_rat* a, const efrac_rat* b) {
  if (a->v < b->v) return -1;
  return a->v == b->v ? 0 : 1;
}

void efrac_rat_free(efrac_rat* r) { delete r; }

efrac_status efrac_greedy_denominator(const efrac_rat* theta, char** out) {
  return guard([&] { *out = dup_str(greedy_denominator(theta->v).get_str()); });
}

efrac_status efrac_seq_parse(const char* csv, efrac_seq** out) {
  return guard([&] { *out = new efrac_seq{parse_int_list(csv)}; });
}

size_t efrac_seq_len(const efrac_seq* s) { return s->v.size(); }

char* efrac_seq_term(const efrac_seq* s, size_t i) {
  if (i >= s->v.size()) return nullptr;
  return dup_str(s->v[i].get_str());
}

char* efrac_seq_str(const efrac_seq* s) { return dup_str(format_int_list(s->v)); }

void efrac_seq_free(efrac_seq* s) { delete s; }

efrac_status efrac_greedy_sequence(const efrac_rat* theta, int n, efrac_seq** out) {
  return guard([&] { *out = new efrac_seq{greedy_sequence(theta->v, n).terms()}; });
}

efrac_status efrac_sylvester(int n, efrac_seq** out) {
  return guard([&] { *out = new efrac_seq{sylvester(n).terms()}; });
}

efrac_status efrac_closed_form(const char* p, const char* q, int n, efrac_seq** out) {
  return guard([&] {
    Int pp = parse_int(p, "numerator");
    Int qq = parse_int(q, "denominator");
    *out = new efrac_seq{closed_form_sequence(pp, qq, n).terms()};
  });
}

efrac_status efrac_greedy_remainder(const efrac_rat* theta, const efrac_seq* seq,
                                    efrac_rat** out) {
  return guard([&] { *out = new efrac_rat{greedy_remainder(theta->v, DenomSeq(seq->v))}; });
}

efrac_status efrac_criterion_interval(const efrac_seq* seq, efrac_rat** lo, efrac_rat** hi) {
  return guard([&] {
    Interval iv = criterion_interval(GreedySeq(seq->v));
    *lo = new efrac_rat{iv.lo()};
    *hi = new efrac_rat{iv.hi()};
  });
}

efrac_status efrac_is_greedy_for(const efrac_seq* seq, const efrac_rat* theta, int* out) {
  return guard([&] { *out = is_greedy_for(GreedySeq(seq->v), theta->v) ? 1 : 0; });
}

efrac_status efrac_best_search(const efrac_rat* theta, int n, uint64_t node_budget, int threads,
                        efrac_best** out) {
  return guard([&] {
    *out = new efrac_best{best_underapprox(theta->v, n, limits_of(node_budget, threads))};
  });
}

efrac_status efrac_best_restricted(const efrac_rat* theta, int n, const efrac_seq* allowed,
                                   uint64_t node_budget, int threads, efrac_best** out) {
  return guard([&] {
    *out = new efrac_best{
        best_underapprox_restricted(theta->v, n, allowed->v, limits_of(node_budget, threads))};
  });
}

efrac_status efrac_brute_force(const efrac_rat* theta, int n, const char* cap, efrac_best** out) {
  return guard([&] {
    Int c = parse_int(cap, "cap");
    *out = new efrac_best{brute_force_best(theta->v, n, c)};
  });
}

char* efrac_best_value(const efrac_best* b) { return dup_str(b->v.value.str()); }

size_t efrac_best_witness_count(const efrac_best* b) { return b->v.witnesses.size(); }

efrac_status efrac_best_witness(const efrac_best* b, size_t i, efrac_seq** out) {
  return guard([&] {
    if (i >= b->v.witnesses.size()) fail(Errc::domain, "witness index out of range");
    *out = new efrac_seq{b->v.witnesses[i].terms()};
  });
}

int efrac_best_has_greedy(const efrac_best* b) { return b->v.greedy ? 1 : 0; }

efrac_status efrac_best_greedy(const efrac_best* b, efrac_seq** out) {
  return guard([&] {
    if (!b->v.greedy) fail(Errc::domain, "result has no greedy reference sequence");
    *out = new efrac_seq{b->v.greedy->terms()};
  });
}

char* efrac_best_greedy_value(const efrac_best* b) { return dup_str(b->v.greedy_value.str()); }

int efrac_best_greedy_is_best(const efrac_best* b) { return b->v.greedy_is_best ? 1 : 0; }

int efrac_best_unique(const efrac_best* b) { return b->v.unique_best ? 1 : 0; }

uint64_t efrac_best_nodes(const efrac_best* b) { return b->v.nodes_explored; }

char* efrac_best_classification(const efrac_best* b) {
  return dup_str(to_string(classify(b->v)));
}

void efrac_best_free(efrac_best* b) { delete b; }

efrac_status efrac_harmonic_interval(const char* a1, efrac_rat** lo, efrac_rat** hi) {
  return guard([&] {
    Interval iv = harmonic_interval(parse_int(a1, "a1"));
    *lo = new efrac_rat{iv.lo()};
    *hi = new efrac_rat{iv.hi()};
  });
}

efrac_status efrac_harmonic_subinterval(const char* a1, const char* a2, efrac_rat** lo,
                                        efrac_rat** hi) {
  return guard([&] {
    Interval iv = harmonic_subinterval(parse_int(a1, "a1"), parse_int(a2, "a2"));
    *lo = new efrac_rat{iv.lo()};
    *hi = new efrac_rat{iv.hi()};
  });
}

efrac_status efrac_locate(const efrac_rat* theta, char** a1, char** a2) {
  return guard([&] {
    auto [u, w] = locate(theta->v);
    *a1 = dup_str(u.get_str());
    *a2 = dup_str(w.get_str());
  });
}

efrac_status efrac_induced_a2(const char* a1, const char* x1, const char* x2, char** a2, int* tie,
                              int* greedy_valid) {
  return guard([&] {
    InducedA2 ind = induced_a2(parse_int(a1, "a1"), parse_int(x1, "x1"), parse_int(x2, "x2"));
    *a2 = dup_str(ind.a2.get_str());
    *tie = ind.tie ? 1 : 0;
    *greedy_valid = ind.greedy_valid ? 1 : 0;
  });
}

efrac_status efrac_two_term(const char* a1, efrac_records** out) {
  return guard([&] { *out = new efrac_records{classify_two_term(parse_int(a1, "a1"))}; });
}

size_t efrac_records_count(const efrac_records* r) { return r->v.size(); }

char* efrac_records_x1(const efrac_records* r, size_t i) {
  return i < r->v.size() ? dup_str(r->v[i].x1.get_str()) : nullptr;
}

char* efrac_records_x2(const efrac_records* r, size_t i) {
  return i < r->v.size() ? dup_str(r->v[i].x2.get_str()) : nullptr;
}

char* efrac_records_a2(const efrac_records* r, size_t i) {
  return i < r->v.size() ? dup_str(r->v[i].a2.get_str()) : nullptr;
}

char* efrac_records_relation(const efrac_records* r, size_t i) {
  return i < r->v.size() ? dup_str(to_string(r->v[i].relation)) : nullptr;
}

int efrac_records_greedy_valid(const efrac_records* r, size_t i) {
  return i < r->v.size() && r->v[i].greedy_valid ? 1 : 0;
}

int efrac_records_has_interval(const efrac_records* r, size_t i) {
  return i < r->v.size() && r->v[i].improvement_interval ? 1 : 0;
}

efrac_status efrac_records_interval(const efrac_records* r, size_t i, efrac_rat** lo,
                                    efrac_rat** hi) {
  return guard([&] {
    if (i >= r->v.size()) fail(Errc::domain, "record index out of range");
    if (!r->v[i].improvement_interval)
      fail(Errc::domain, "record has no improvement interval");
    *lo = new efrac_rat{r->v[i].improvement_interval->lo()};
    *hi = new efrac_rat{r->v[i].improvement_interval->hi()};
  });
}

void efrac_records_free(efrac_records* r) { delete r; }

efrac_status efrac_verify_ineq(const char* u, const char* v, int direction, char** lhs, char** rhs,
                               int* holds) {
  return guard([&] {
    Direction dir = direction_of(direction);
    PosSeq su = PosSeq::parse(u, dir);
    PosSeq sv = PosSeq::parse(v, dir);
    IneqVerdict verdict = dir == Direction::increasing ? check_reciprocal_inequality(su, sv)
                                                       : check_sum_inequality_decreasing(su, sv);
    *lhs = dup_str(verdict.lhs.str());
    *rhs = dup_str(verdict.rhs.str());
    *holds = verdict.holds ? 1 : 0;
  });
}

efrac_status efrac_prefix_dominates(const char* v, const char* u, int direction, int* out) {
  return guard([&] {
    Direction dir = direction_of(direction);
    *out = prefix_product_dominates(PosSeq::parse(v, dir), PosSeq::parse(u, dir)) ? 1 : 0;
  });
}

efrac_status efrac_smoothing_step(const char* u, const char* v, char** out) {
  bool componentwise = false;
  efrac_status st = guard([&] {
    auto moved = smoothing_step(PosSeq::parse(u, Direction::decreasing),
                                PosSeq::parse(v, Direction::decreasing));
    if (!moved) {
      componentwise = true;
      return;
    }
    *out = dup_str(moved->str());
  });
  if (st == EFRAC_OK && componentwise) {
    t_last_error = "componentwise case: v is at most u at every index";
    return EFRAC_COMPONENTWISE;
  }
  return st;
}

efrac_status efrac_eg_split(const efrac_rat* theta, int n_max, uint64_t node_budget, int threads,
                            efrac_splits** out) {
  return guard([&] {
    auto reports = eg_split_probe(theta->v, n_max, limits_of(node_budget, threads));
    auto* s = new efrac_splits;
    for (const SplitReport& rep : reports) {
      s->values.push_back(rep.value.str());
      for (const SplitRow& row : rep.rows)
        s->rows.push_back({rep.n, row.n0, row.head_value.str(), row.tail_value.str(),
                           row.additive ? 1 : 0, row.tail_greedy ? 1 : 0});
    }
    *out = s;
  });
}

size_t efrac_splits_count(const efrac_splits* s) { return s->rows.size(); }

efrac_status efrac_splits_row(const efrac_splits* s, size_t i, int* n, int* n0, int* additive,
                              int* tail_greedy) {
  return guard([&] {
    if (i >= s->rows.size()) fail(Errc::domain, "split row index out of range");
    *n = s->rows[i].n;
    *n0 = s->rows[i].n0;
    *additive = s->rows[i].additive;
    *tail_greedy = s->rows[i].tail_greedy;
  });
}

char* efrac_splits_value(const efrac_splits* s, int n) {
  if (n < 1 || size_t(n) > s->values.size()) return nullptr;
  return dup_str(s->values[size_t(n) - 1]);
}

char* efrac_splits_head(const efrac_splits* s, size_t i) {
  return i < s->rows.size() ? dup_str(s->rows[i].head) : nullptr;
}

char* efrac_splits_tail(const efrac_splits* s, size_t i) {
  return i < s->rows.size() ? dup_str(s->rows[i].tail) : nullptr;
}

void efrac_splits_free(efrac_splits* s) { delete s; }

}  // extern "C"
