#include "efrac/twoterm.hpp"

namespace efrac {

namespace {

void require_a1(const Int& a1, const char* who) {
  if (a1 < 2) fail(Errc::domain, std::string(who) + ": a1 = " + a1.get_str() + " must be >= 2");
}

}  // namespace

Interval harmonic_interval(const Int& a1) {
  require_a1(a1, "harmonic_interval");
  return criterion_interval(GreedySeq(std::vector<Int>{a1}));
}

Interval harmonic_subinterval(const Int& a1, const Int& a2) {
  return criterion_interval(GreedySeq(std::vector<Int>{a1, a2}));
}

std::pair<Int, Int> locate(const Rat& theta) {
  require_unit_range(theta, "locate");
  GreedySeq g = greedy_sequence(theta, 2);
  return {g[0], g[1]};
}

std::vector<std::pair<Int, Int>> competitor_set(const Int& a1) {
  require_a1(a1, "competitor_set");
  std::vector<std::pair<Int, Int>> out;
  for (Int x1 = a1 + 1; x1 <= 2 * a1 - 1; ++x1) {
    // x2 < a1*x1 / (x1 - a1), and the right side is never an allowed value
    // even when integral, so the last x2 is ceil(a1*x1/(x1-a1)) - 1.
    Int last;
    mpz_cdiv_q(last.get_mpz_t(), Int(a1 * x1).get_mpz_t(), Int(x1 - a1).get_mpz_t());
    last -= 1;
    for (Int x2 = 2 * a1 - 1; x2 <= last; ++x2) out.emplace_back(x1, x2);
  }
  return out;
}

InducedA2 induced_a2(const Int& a1, const Int& x1, const Int& x2) {
  require_a1(a1, "induced_a2");
  if (x1 < a1 + 1 || x1 > 2 * a1 - 1)
    fail(Errc::precondition, "induced_a2: x1 = " + x1.get_str() + " is outside [a1+1, 2*a1-1] = [" +
                                 Int(a1 + 1).get_str() + ", " + Int(2 * a1 - 1).get_str() + "]");
  if (x2 < 2 * a1 - 1)
    fail(Errc::precondition,
         "induced_a2: x2 = " + x2.get_str() + " is below 2*a1-1 = " + Int(2 * a1 - 1).get_str());
  if (!(x2 * (x1 - a1) < a1 * x1))
    fail(Errc::precondition, "induced_a2: x2 = " + x2.get_str() +
                                 " is not below a1*x1/(x1-a1), so 1/x1 + 1/x2 <= 1/a1");

  // X membership makes d = 1/x1 + 1/x2 - 1/a1 strictly positive.
  Rat d = Rat::unit(x1) + Rat::unit(x2) - Rat::unit(a1);
  InducedA2 out;
  mpz_cdiv_q(out.a2.get_mpz_t(), d.den().get_mpz_t(), d.num().get_mpz_t());
  out.tie = (d.num() == 1);
  out.greedy_valid = (out.a2 >= a1 * a1 - a1 + 1);
  return out;
}

const char* to_string(Relation r) {
  return r == Relation::tie ? "TIE" : "STRICT_IMPROVEMENT";
}

std::vector<TwoTermRecord> classify_two_term(const Int& a1) {
  std::vector<TwoTermRecord> out;
  for (const auto& [x1, x2] : competitor_set(a1)) {
    InducedA2 ind = induced_a2(a1, x1, x2);
    TwoTermRecord rec{a1, x1, x2, ind.a2,
                      ind.tie ? Relation::tie : Relation::strict_improvement, ind.greedy_valid,
                      std::nullopt};
    if (!ind.tie && ind.greedy_valid)
      rec.improvement_interval =
          Interval(Rat::unit(x1) + Rat::unit(x2), Rat::unit(a1) + Rat::unit(ind.a2 - 1));
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace efrac
