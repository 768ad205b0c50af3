#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "efrac/efrac.h"

namespace {

// Domain and parse problems exit 1; infeasibility and budget exhaustion
// exit 2, so scripts can tell "no such tuple" from "bad invocation".
[[noreturn]] void die(efrac_status st) {
  std::cerr << "error: " << efrac_last_error() << "\n";
  std::exit(st == EFRAC_ERR_INFEASIBLE || st == EFRAC_ERR_BUDGET ? 2 : 1);
}

void check(efrac_status st) {
  if (st != EFRAC_OK) die(st);
}

struct Str {
  char* p = nullptr;
  ~Str() { efrac_string_free(p); }
  char** out() { return &p; }
  std::string s() const { return p ? std::string(p) : std::string(); }
};

template <typename T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(Handle&& o) noexcept : p(std::exchange(o.p, nullptr)) {}
  Handle& operator=(Handle&& o) noexcept {
    if (this != &o) {
      if (p) Free(p);
      p = std::exchange(o.p, nullptr);
    }
    return *this;
  }
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() {
    if (p) Free(p);
  }
  T** out() { return &p; }
  T* get() const { return p; }
};

using RatH = Handle<efrac_rat, efrac_rat_free>;
using SeqH = Handle<efrac_seq, efrac_seq_free>;
using BestH = Handle<efrac_best, efrac_best_free>;
using RecH = Handle<efrac_records, efrac_records_free>;
using SplitH = Handle<efrac_splits, efrac_splits_free>;

RatH parse_rat(const std::string& text) {
  RatH r;
  check(efrac_rat_parse(text.c_str(), r.out()));
  return r;
}

SeqH parse_seq(const std::string& csv) {
  SeqH s;
  check(efrac_seq_parse(csv.c_str(), s.out()));
  return s;
}

std::string jstr(const std::string& s) { return "\"" + s + "\""; }

std::string jbool(bool b) { return b ? "true" : "false"; }

std::string rat_str(const efrac_rat* r) {
  Str s;
  s.p = efrac_rat_str(r);
  return s.s();
}

std::string seq_text(const efrac_seq* s) {
  Str t;
  t.p = efrac_seq_str(s);
  return t.s();
}

// "[2,6]": raw arbitrary-precision JSON integers
std::string seq_json_ints(const efrac_seq* s) {
  std::string out = "[";
  for (size_t i = 0; i < efrac_seq_len(s); ++i) {
    if (i) out += ",";
    Str t;
    t.p = efrac_seq_term(s, i);
    out += t.s();
  }
  return out + "]";
}

// ["2","6"]: decimal strings
std::string seq_json_strs(const efrac_seq* s) {
  std::string out = "[";
  for (size_t i = 0; i < efrac_seq_len(s); ++i) {
    if (i) out += ",";
    Str t;
    t.p = efrac_seq_term(s, i);
    out += jstr(t.s());
  }
  return out + "]";
}

std::string interval_text(const efrac_rat* lo, const efrac_rat* hi) {
  return "(" + rat_str(lo) + ", " + rat_str(hi) + "]";
}

std::string interval_json(const efrac_rat* lo, const efrac_rat* hi) {
  return "{\"lo\":" + jstr(rat_str(lo)) + ",\"hi\":" + jstr(rat_str(hi)) + "}";
}

std::string witnesses_text(const efrac_best* b) {
  std::string out;
  for (size_t i = 0; i < efrac_best_witness_count(b); ++i) {
    SeqH w;
    check(efrac_best_witness(b, i, w.out()));
    if (i) out += " ";
    out += "(" + seq_text(w.get()) + ")";
  }
  return out;
}

std::string best_json(const std::string& theta, int n, const efrac_best* b) {
  Str value, cls;
  value.p = efrac_best_value(b);
  cls.p = efrac_best_classification(b);
  std::string out = "{\"theta\":" + jstr(theta) + ",\"n\":" + std::to_string(n) +
                    ",\"value\":" + jstr(value.s()) + ",\"witnesses\":[";
  for (size_t i = 0; i < efrac_best_witness_count(b); ++i) {
    SeqH w;
    check(efrac_best_witness(b, i, w.out()));
    if (i) out += ",";
    out += seq_json_ints(w.get());
  }
  out += "],\"greedy\":";
  if (efrac_best_has_greedy(b)) {
    SeqH g;
    check(efrac_best_greedy(b, g.out()));
    out += seq_json_ints(g.get());
  } else {
    out += "null";
  }
  out += ",\"classification\":" + jstr(cls.s());
  out += ",\"nodes\":" + std::to_string(efrac_best_nodes(b)) + "}";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact greedy and optimal Egyptian-fraction underapproximations"};
  app.require_subcommand(1);

  std::string theta_arg, seq_arg, num_arg, den_arg, p_arg, q_arg, cap_arg;
  std::string a1_arg, a2_arg, x1_arg, x2_arg, u_arg, v_arg, restrict_arg, direction_arg;
  int n_arg = 0;
  std::uint64_t budget_arg = 10'000'000;
  int threads_arg = 1;
  bool json = false, csv = false;

  auto* rat = app.add_subcommand("rat", "canonicalize a rational from two integers");
  rat->add_option("num", num_arg)->required();
  rat->add_option("den", den_arg)->required();
  rat->add_flag("--json", json);
  rat->callback([&] {
    RatH r;
    check(efrac_rat_make(num_arg.c_str(), den_arg.c_str(), r.out()));
    if (json)
      std::cout << "{\"value\":" << jstr(rat_str(r.get())) << "}\n";
    else
      std::cout << rat_str(r.get()) << "\n";
  });

  auto* denom = app.add_subcommand("denominator", "greedy denominator of theta");
  denom->add_option("theta", theta_arg)->required();
  denom->add_flag("--json", json);
  denom->callback([&] {
    RatH t = parse_rat(theta_arg);
    Str a;
    check(efrac_greedy_denominator(t.get(), a.out()));
    if (json)
      std::cout << "{\"theta\":" << jstr(rat_str(t.get())) << ",\"denominator\":" << jstr(a.s())
                << "}\n";
    else
      std::cout << a.s() << "\n";
  });

  auto* greedy = app.add_subcommand("greedy", "first n greedy denominators of theta");
  greedy->add_option("theta", theta_arg)->required();
  greedy->add_option("n", n_arg)->required();
  greedy->add_flag("--json", json);
  greedy->callback([&] {
    RatH t = parse_rat(theta_arg);
    SeqH s;
    check(efrac_greedy_sequence(t.get(), n_arg, s.out()));
    if (json)
      std::cout << "{\"theta\":" << jstr(rat_str(t.get())) << ",\"n\":" << n_arg
                << ",\"terms\":" << seq_json_strs(s.get()) << "}\n";
    else
      std::cout << seq_text(s.get()) << "\n";
  });

  auto* syl = app.add_subcommand("sylvester", "first n Sylvester numbers");
  syl->add_option("n", n_arg)->required();
  syl->add_flag("--json", json);
  syl->callback([&] {
    SeqH s;
    check(efrac_sylvester(n_arg, s.out()));
    if (json)
      std::cout << "{\"n\":" << n_arg << ",\"terms\":" << seq_json_strs(s.get()) << "}\n";
    else
      std::cout << seq_text(s.get()) << "\n";
  });

  auto* cf = app.add_subcommand("closed-form", "greedy denominators of p/q when p divides q+1");
  cf->add_option("p", p_arg)->required();
  cf->add_option("q", q_arg)->required();
  cf->add_option("n", n_arg)->required();
  cf->add_flag("--json", json);
  cf->callback([&] {
    SeqH s;
    check(efrac_closed_form(p_arg.c_str(), q_arg.c_str(), n_arg, s.out()));
    if (json)
      std::cout << "{\"p\":" << jstr(p_arg) << ",\"q\":" << jstr(q_arg) << ",\"n\":" << n_arg
                << ",\"terms\":" << seq_json_strs(s.get()) << "}\n";
    else
      std::cout << seq_text(s.get()) << "\n";
  });

  auto* rem = app.add_subcommand("remainder", "theta minus the reciprocal sum of a sequence");
  rem->add_option("theta", theta_arg)->required();
  rem->add_option("terms", seq_arg)->required();
  rem->add_flag("--json", json);
  rem->callback([&] {
    RatH t = parse_rat(theta_arg);
    SeqH s = parse_seq(seq_arg);
    RatH r;
    check(efrac_greedy_remainder(t.get(), s.get(), r.out()));
    if (json)
      std::cout << "{\"theta\":" << jstr(rat_str(t.get())) << ",\"terms\":" << jstr(seq_arg)
                << ",\"remainder\":" << jstr(rat_str(r.get())) << "}\n";
    else
      std::cout << rat_str(r.get()) << "\n";
  });

  auto* crit = app.add_subcommand("criterion",
                                  "interval of theta whose greedy expansion starts with terms");
  crit->add_option("terms", seq_arg)->required();
  crit->add_option("theta", theta_arg);
  crit->add_flag("--json", json);
  crit->callback([&] {
    SeqH s = parse_seq(seq_arg);
    RatH lo, hi;
    check(efrac_criterion_interval(s.get(), lo.out(), hi.out()));
    bool with_theta = !theta_arg.empty();
    int member = 0;
    RatH t;
    if (with_theta) {
      t = parse_rat(theta_arg);
      check(efrac_is_greedy_for(s.get(), t.get(), &member));
    }
    if (json) {
      std::cout << "{\"terms\":" << jstr(seq_arg)
                << ",\"interval\":" << interval_json(lo.get(), hi.get());
      if (with_theta)
        std::cout << ",\"theta\":" << jstr(rat_str(t.get()))
                  << ",\"contains\":" << jbool(member != 0);
      std::cout << "}\n";
    } else {
      std::cout << interval_text(lo.get(), hi.get()) << "\n";
      if (with_theta) std::cout << (member ? "true" : "false") << "\n";
    }
  });

  auto* lim = app.add_subcommand("limits", "largest and smallest theta reaching a greedy start");
  lim->add_option("terms", seq_arg)->required();
  lim->add_flag("--json", json);
  lim->callback([&] {
    SeqH s = parse_seq(seq_arg);
    RatH lo, hi;
    check(efrac_criterion_interval(s.get(), lo.out(), hi.out()));
    if (json)
      std::cout << "{\"terms\":" << jstr(seq_arg)
                << ",\"interval\":" << interval_json(lo.get(), hi.get()) << "}\n";
    else
      std::cout << interval_text(lo.get(), hi.get()) << "\n";
  });

  auto* best = app.add_subcommand("best", "provably best n-term underapproximation");
  best->add_option("theta", theta_arg)->required();
  best->add_option("n", n_arg)->required();
  best->add_option("--restrict", restrict_arg, "comma-separated allowed denominators");
  best->add_option("--budget", budget_arg, "node budget (default 10000000)");
  best->add_option("--threads", threads_arg, "worker threads (default 1)");
  best->add_flag("--json", json);
  best->callback([&] {
    RatH t = parse_rat(theta_arg);
    BestH b;
    if (restrict_arg.empty()) {
      check(efrac_best_search(t.get(), n_arg, budget_arg, threads_arg, b.out()));
    } else {
      SeqH allowed = parse_seq(restrict_arg);
      check(efrac_best_restricted(t.get(), n_arg, allowed.get(), budget_arg, threads_arg,
                                  b.out()));
    }
    if (json) {
      std::cout << best_json(rat_str(t.get()), n_arg, b.get()) << "\n";
    } else {
      Str value;
      value.p = efrac_best_value(b.get());
      std::cout << "value: " << value.s() << "\n";
      std::cout << "witnesses: " << witnesses_text(b.get()) << "\n";
      std::cout << "nodes: " << efrac_best_nodes(b.get()) << "\n";
    }
  });

  auto* report = app.add_subcommand("report", "best result with greedy classification");
  report->add_option("theta", theta_arg)->required();
  report->add_option("n", n_arg)->required();
  report->add_option("--restrict", restrict_arg, "comma-separated allowed denominators");
  report->add_option("--budget", budget_arg, "node budget (default 10000000)");
  report->add_option("--threads", threads_arg, "worker threads (default 1)");
  report->add_flag("--json", json);
  report->callback([&] {
    RatH t = parse_rat(theta_arg);
    BestH b;
    if (restrict_arg.empty()) {
      check(efrac_best_search(t.get(), n_arg, budget_arg, threads_arg, b.out()));
    } else {
      SeqH allowed = parse_seq(restrict_arg);
      check(efrac_best_restricted(t.get(), n_arg, allowed.get(), budget_arg, threads_arg,
                                  b.out()));
    }
    if (json) {
      std::cout << best_json(rat_str(t.get()), n_arg, b.get()) << "\n";
      return;
    }
    Str value, cls;
    value.p = efrac_best_value(b.get());
    cls.p = efrac_best_classification(b.get());
    std::cout << "theta: " << rat_str(t.get()) << "\n";
    std::cout << "n: " << n_arg << "\n";
    if (efrac_best_has_greedy(b.get())) {
      SeqH g;
      check(efrac_best_greedy(b.get(), g.out()));
      Str gv;
      gv.p = efrac_best_greedy_value(b.get());
      std::cout << "greedy: " << seq_text(g.get()) << " = " << gv.s() << "\n";
    } else {
      std::cout << "greedy: none\n";
    }
    std::cout << "value: " << value.s() << "\n";
    std::cout << "witnesses: " << witnesses_text(b.get()) << "\n";
    std::cout << "classification: " << cls.s() << "\n";
    std::cout << "nodes: " << efrac_best_nodes(b.get()) << "\n";
  });

  auto* brute = app.add_subcommand("brute", "cross-check enumeration with terms in [2, cap]");
  brute->add_option("theta", theta_arg)->required();
  brute->add_option("n", n_arg)->required();
  brute->add_option("cap", cap_arg)->required();
  brute->add_flag("--json", json);
  brute->callback([&] {
    RatH t = parse_rat(theta_arg);
    BestH b;
    check(efrac_brute_force(t.get(), n_arg, cap_arg.c_str(), b.out()));
    if (json) {
      std::cout << best_json(rat_str(t.get()), n_arg, b.get()) << "\n";
    } else {
      Str value;
      value.p = efrac_best_value(b.get());
      std::cout << "value: " << value.s() << "\n";
      std::cout << "witnesses: " << witnesses_text(b.get()) << "\n";
      std::cout << "nodes: " << efrac_best_nodes(b.get()) << "\n";
    }
  });

  auto* loc = app.add_subcommand("locate", "first two greedy denominators of theta");
  loc->add_option("theta", theta_arg)->required();
  loc->add_flag("--json", json);
  loc->callback([&] {
    RatH t = parse_rat(theta_arg);
    Str a1, a2;
    check(efrac_locate(t.get(), a1.out(), a2.out()));
    if (json)
      std::cout << "{\"theta\":" << jstr(rat_str(t.get())) << ",\"a1\":" << jstr(a1.s())
                << ",\"a2\":" << jstr(a2.s()) << "}\n";
    else
      std::cout << a1.s() << "," << a2.s() << "\n";
  });

  auto* interval = app.add_subcommand("interval", "I(a1), or J(a1, a2) when a2 is given");
  interval->add_option("a1", a1_arg)->required();
  interval->add_option("a2", a2_arg);
  interval->add_flag("--json", json);
  interval->callback([&] {
    RatH lo, hi;
    if (a2_arg.empty())
      check(efrac_harmonic_interval(a1_arg.c_str(), lo.out(), hi.out()));
    else
      check(efrac_harmonic_subinterval(a1_arg.c_str(), a2_arg.c_str(), lo.out(), hi.out()));
    if (json)
      std::cout << interval_json(lo.get(), hi.get()) << "\n";
    else
      std::cout << interval_text(lo.get(), hi.get()) << "\n";
  });

  auto* comp = app.add_subcommand("competitors", "two-term competitor pairs of a1");
  comp->add_option("a1", a1_arg)->required();
  comp->add_flag("--json", json);
  comp->callback([&] {
    RecH r;
    check(efrac_two_term(a1_arg.c_str(), r.out()));
    if (json) {
      std::cout << "{\"a1\":" << jstr(a1_arg) << ",\"pairs\":[";
      for (size_t i = 0; i < efrac_records_count(r.get()); ++i) {
        Str x1, x2;
        x1.p = efrac_records_x1(r.get(), i);
        x2.p = efrac_records_x2(r.get(), i);
        if (i) std::cout << ",";
        std::cout << "[" << x1.s() << "," << x2.s() << "]";
      }
      std::cout << "]}\n";
    } else {
      for (size_t i = 0; i < efrac_records_count(r.get()); ++i) {
        Str x1, x2;
        x1.p = efrac_records_x1(r.get(), i);
        x2.p = efrac_records_x2(r.get(), i);
        std::cout << x1.s() << "," << x2.s() << "\n";
      }
    }
  });

  auto* induce = app.add_subcommand("induce", "smallest a2 matched or beaten by (x1, x2)");
  induce->add_option("a1", a1_arg)->required();
  induce->add_option("x1", x1_arg)->required();
  induce->add_option("x2", x2_arg)->required();
  induce->add_flag("--json", json);
  induce->callback([&] {
    Str a2;
    int tie = 0, greedy_valid = 0;
    check(efrac_induced_a2(a1_arg.c_str(), x1_arg.c_str(), x2_arg.c_str(), a2.out(), &tie,
                           &greedy_valid));
    if (json)
      std::cout << "{\"a1\":" << jstr(a1_arg) << ",\"x1\":" << jstr(x1_arg)
                << ",\"x2\":" << jstr(x2_arg) << ",\"a2\":" << jstr(a2.s())
                << ",\"tie\":" << jbool(tie != 0) << ",\"greedy_valid\":" << jbool(greedy_valid != 0)
                << "}\n";
    else
      std::cout << "a2: " << a2.s() << "\ntie: " << (tie ? "true" : "false")
                << "\ngreedy_valid: " << (greedy_valid ? "true" : "false") << "\n";
  });

  auto* twoterm = app.add_subcommand("two-term", "classification of all competitor pairs of a1");
  twoterm->add_option("a1", a1_arg)->required();
  twoterm->add_flag("--csv", csv);
  twoterm->add_flag("--json", json);
  twoterm->callback([&] {
    RecH r;
    check(efrac_two_term(a1_arg.c_str(), r.out()));
    size_t count = efrac_records_count(r.get());
    if (csv) {
      std::cout << "a1,x1,x2,a2,relation,greedy_valid,interval_lo,interval_hi\n";
      for (size_t i = 0; i < count; ++i) {
        Str x1, x2, a2, rel;
        x1.p = efrac_records_x1(r.get(), i);
        x2.p = efrac_records_x2(r.get(), i);
        a2.p = efrac_records_a2(r.get(), i);
        rel.p = efrac_records_relation(r.get(), i);
        std::cout << a1_arg << "," << x1.s() << "," << x2.s() << "," << a2.s() << "," << rel.s()
                  << "," << (efrac_records_greedy_valid(r.get(), i) ? "true" : "false") << ",";
        if (efrac_records_has_interval(r.get(), i)) {
          RatH lo, hi;
          check(efrac_records_interval(r.get(), i, lo.out(), hi.out()));
          std::cout << rat_str(lo.get()) << "," << rat_str(hi.get());
        } else {
          std::cout << ",";
        }
        std::cout << "\n";
      }
      return;
    }
    if (json) {
      std::cout << "{\"a1\":" << jstr(a1_arg) << ",\"records\":[";
      for (size_t i = 0; i < count; ++i) {
        Str x1, x2, a2, rel;
        x1.p = efrac_records_x1(r.get(), i);
        x2.p = efrac_records_x2(r.get(), i);
        a2.p = efrac_records_a2(r.get(), i);
        rel.p = efrac_records_relation(r.get(), i);
        if (i) std::cout << ",";
        std::cout << "{\"x1\":" << jstr(x1.s()) << ",\"x2\":" << jstr(x2.s())
                  << ",\"a2\":" << jstr(a2.s()) << ",\"relation\":" << jstr(rel.s())
                  << ",\"greedy_valid\":" << jbool(efrac_records_greedy_valid(r.get(), i) != 0)
                  << ",\"interval\":";
        if (efrac_records_has_interval(r.get(), i)) {
          RatH lo, hi;
          check(efrac_records_interval(r.get(), i, lo.out(), hi.out()));
          std::cout << interval_json(lo.get(), hi.get());
        } else {
          std::cout << "null";
        }
        std::cout << "}";
      }
      std::cout << "]}\n";
      return;
    }
    // Text mode groups the records by induced a2.
    std::cout << "a1 = " << a1_arg << ": " << count << " competitor pairs\n";
    std::vector<std::pair<std::string, size_t>> order;
    for (size_t i = 0; i < count; ++i) {
      Str a2;
      a2.p = efrac_records_a2(r.get(), i);
      order.emplace_back(a2.s(), i);
    }
    // Shorter decimal strings are smaller numbers; ties compare as text.
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
      return a.first.size() != b.first.size() ? a.first.size() < b.first.size()
                                              : a.first < b.first;
    });
    for (const auto& [a2val, i] : order) {
      Str x1, x2, a2, rel;
      x1.p = efrac_records_x1(r.get(), i);
      x2.p = efrac_records_x2(r.get(), i);
      a2.p = efrac_records_a2(r.get(), i);
      rel.p = efrac_records_relation(r.get(), i);
      std::cout << "a2 = " << a2.s() << ": (" << x1.s() << "," << x2.s() << ") " << rel.s();
      if (efrac_records_has_interval(r.get(), i)) {
        RatH lo, hi;
        check(efrac_records_interval(r.get(), i, lo.out(), hi.out()));
        std::cout << " on " << interval_text(lo.get(), hi.get());
      } else if (!efrac_records_greedy_valid(r.get(), i)) {
        std::cout << " [not a greedy start]";
      }
      std::cout << "\n";
    }
  });

  auto* dom = app.add_subcommand("dominates", "prefix-product dominance of v by u");
  dom->add_option("v", v_arg)->required();
  dom->add_option("u", u_arg)->required();
  dom->add_option("--direction", direction_arg, "inc or dec")
      ->required()
      ->check(CLI::IsMember({"inc", "dec"}));
  dom->add_flag("--json", json);
  dom->callback([&] {
    int dir = direction_arg == "inc" ? 0 : direction_arg == "dec" ? 1 : -1;
    int out = 0;
    check(efrac_prefix_dominates(v_arg.c_str(), u_arg.c_str(), dir, &out));
    if (json)
      std::cout << "{\"dominates\":" << jbool(out != 0) << "}\n";
    else
      std::cout << (out ? "true" : "false") << "\n";
  });

  auto* verify = app.add_subcommand("verify-ineq", "exchange inequality for one instance");
  verify->add_option("u", u_arg)->required();
  verify->add_option("v", v_arg)->required();
  verify->add_option("--direction", direction_arg, "inc or dec")
      ->required()
      ->check(CLI::IsMember({"inc", "dec"}));
  verify->add_flag("--json", json);
  verify->callback([&] {
    int dir = direction_arg == "inc" ? 0 : direction_arg == "dec" ? 1 : -1;
    Str lhs, rhs;
    int holds = 0;
    check(efrac_verify_ineq(u_arg.c_str(), v_arg.c_str(), dir, lhs.out(), rhs.out(), &holds));
    if (json)
      std::cout << "{\"u\":" << jstr(u_arg) << ",\"v\":" << jstr(v_arg)
                << ",\"direction\":" << jstr(direction_arg == "inc" ? "increasing" : "decreasing")
                << ",\"lhs\":" << jstr(lhs.s()) << ",\"rhs\":" << jstr(rhs.s())
                << ",\"holds\":" << jbool(holds != 0) << "}\n";
    else
      std::cout << "lhs: " << lhs.s() << "\nrhs: " << rhs.s()
                << "\nholds: " << (holds ? "true" : "false") << "\n";
  });

  auto* smooth = app.add_subcommand("smooth", "one smoothing move of u toward v");
  smooth->add_option("u", u_arg)->required();
  smooth->add_option("v", v_arg)->required();
  smooth->add_flag("--json", json);
  smooth->callback([&] {
    Str out;
    efrac_status st = efrac_smoothing_step(u_arg.c_str(), v_arg.c_str(), out.out());
    if (st == EFRAC_COMPONENTWISE) {
      if (json)
        std::cout << "{\"componentwise\":true}\n";
      else
        std::cout << "componentwise\n";
      return;
    }
    check(st);
    if (json)
      std::cout << "{\"componentwise\":false,\"result\":" << jstr(out.s()) << "}\n";
    else
      std::cout << out.s() << "\n";
  });

  auto* split = app.add_subcommand("eg-split", "additivity of u_n through every split point");
  split->add_option("theta", theta_arg)->required();
  split->add_option("n_max", n_arg)->required();
  split->add_option("--budget", budget_arg, "node budget (default 10000000)");
  split->add_option("--threads", threads_arg, "worker threads (default 1)");
  split->add_flag("--json", json);
  split->callback([&] {
    RatH t = parse_rat(theta_arg);
    SplitH s;
    check(efrac_eg_split(t.get(), n_arg, budget_arg, threads_arg, s.out()));
    if (json) {
      std::cout << "{\"theta\":" << jstr(rat_str(t.get())) << ",\"n_max\":" << n_arg
                << ",\"levels\":[";
      size_t row = 0;
      for (int n = 1; n <= n_arg; ++n) {
        Str un;
        un.p = efrac_splits_value(s.get(), n);
        if (n > 1) std::cout << ",";
        std::cout << "{\"n\":" << n << ",\"value\":" << jstr(un.s()) << ",\"splits\":[";
        bool first = true;
        while (row < efrac_splits_count(s.get())) {
          int rn = 0, n0 = 0, additive = 0, tail_greedy = 0;
          check(efrac_splits_row(s.get(), row, &rn, &n0, &additive, &tail_greedy));
          if (rn != n) break;
          Str head, tail;
          head.p = efrac_splits_head(s.get(), row);
          tail.p = efrac_splits_tail(s.get(), row);
          if (!first) std::cout << ",";
          first = false;
          std::cout << "{\"n0\":" << n0 << ",\"head\":" << jstr(head.s())
                    << ",\"tail\":" << jstr(tail.s()) << ",\"additive\":" << jbool(additive != 0)
                    << ",\"tail_greedy\":" << jbool(tail_greedy != 0) << "}";
          ++row;
        }
        std::cout << "]}";
      }
      std::cout << "]}\n";
      return;
    }
    size_t row = 0;
    for (int n = 1; n <= n_arg; ++n) {
      Str un;
      un.p = efrac_splits_value(s.get(), n);
      std::cout << "u_" << n << " = " << un.s() << "\n";
      while (row < efrac_splits_count(s.get())) {
        int rn = 0, n0 = 0, additive = 0, tail_greedy = 0;
        check(efrac_splits_row(s.get(), row, &rn, &n0, &additive, &tail_greedy));
        if (rn != n) break;
        Str head, tail;
        head.p = efrac_splits_head(s.get(), row);
        tail.p = efrac_splits_tail(s.get(), row);
        std::cout << "  n0 = " << n0 << ": head " << head.s() << ", tail " << tail.s()
                  << ", additive: " << (additive ? "yes" : "no")
                  << ", greedy tail: " << (tail_greedy ? "yes" : "no") << "\n";
        ++row;
      }
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
