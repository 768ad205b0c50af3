#include "efrac/greedy.hpp"

namespace efrac {

namespace {

void require_terms(int n, const char* who) {
  if (n < 1) fail(Errc::domain, std::string(who) + ": n = " + std::to_string(n) + " must be >= 1");
}

}  // namespace

GreedySeq greedy_sequence(const Rat& theta, int n) {
  require_unit_range(theta, "greedy_sequence");
  require_terms(n, "greedy_sequence");
  std::vector<Int> terms;
  terms.reserve(n);
  Rat rem = theta;
  for (int i = 0; i < n; ++i) {
    Int a = greedy_denominator(rem);
    rem -= Rat::unit(a);
    terms.push_back(std::move(a));
  }
  return GreedySeq(std::move(terms));
}

Rat greedy_remainder(const Rat& theta, const DenomSeq& seq) {
  require_unit_range(theta, "greedy_remainder");
  Rat rem = theta - seq.sum();
  if (rem.sign() <= 0)
    fail(Errc::precondition, "greedy_remainder: 1/" + seq.str() + " sums to " + seq.sum().str() +
                                 ", not an underapproximation of " + theta.str());
  return rem;
}

Interval criterion_interval(const GreedySeq& seq) {
  Rat head;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) head += Rat::unit(seq[i]);
  const Int& last = seq[seq.size() - 1];
  Rat lo = head + Rat::unit(last);
  Rat hi = head + Rat::unit(last - 1);
  return Interval(std::move(lo), std::move(hi));
}

bool is_greedy_for(const GreedySeq& seq, const Rat& theta) {
  require_unit_range(theta, "is_greedy_for");
  return criterion_interval(seq).contains(theta);
}

Interval limit_bounds(const GreedySeq& seq) { return criterion_interval(seq); }

GreedySeq sylvester(int n) {
  require_terms(n, "sylvester");
  std::vector<Int> terms;
  terms.reserve(n);
  Int s = 2;
  for (int i = 0; i < n; ++i) {
    terms.push_back(s);
    s = s * s - s + 1;
  }
  return GreedySeq(std::move(terms));
}

GreedySeq closed_form_sequence(const Int& p, const Int& q, int n) {
  if (p < 1 || q < 1)
    fail(Errc::domain, "closed_form_sequence: p and q must be positive");
  if (p > q)
    fail(Errc::domain, "closed_form_sequence: p/q = " + p.get_str() + "/" + q.get_str() +
                           " is outside (0, 1]");
  if ((q + 1) % p != 0)
    fail(Errc::divisibility, "closed_form_sequence: p = " + p.get_str() +
                                 " does not divide q+1 = " + Int(q + 1).get_str());
  require_terms(n, "closed_form_sequence");
  std::vector<Int> terms;
  terms.reserve(n);
  Int product = 1;
  terms.push_back(Int((q + 1) / p));
  product *= terms.back();
  for (int k = 1; k < n; ++k) {
    terms.push_back(Int(q * product + 1));
    product *= terms.back();
  }
  return GreedySeq(std::move(terms));
}

}  // namespace efrac
