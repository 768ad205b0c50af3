#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "efrac/optimal.hpp"
#include "efrac/twoterm.hpp"
#include "test_util.hpp"

using namespace efrac;

namespace {

Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

const TwoTermRecord& find_record(const std::vector<TwoTermRecord>& recs, long x1, long x2) {
  for (const auto& r : recs)
    if (r.x1 == x1 && r.x2 == x2) return r;
  REQUIRE(false);
  return recs.front();
}

}  // namespace

TEST_CASE("harmonic intervals") {
  CHECK(harmonic_interval(Int(2)).str() == "(1/2, 1]");
  CHECK(harmonic_interval(Int(3)).str() == "(1/3, 1/2]");
  CHECK(harmonic_interval(Int(5)).str() == "(1/5, 1/4]");
  CHECK(error_code([] { harmonic_interval(Int(1)); }) == Errc::domain);

  CHECK(harmonic_subinterval(Int(2), Int(3)).str() == "(5/6, 1]");
  CHECK(harmonic_subinterval(Int(2), Int(6)).str() == "(2/3, 7/10]");
  CHECK(harmonic_subinterval(Int(3), Int(17)).str() == "(20/51, 19/48]");
  CHECK(harmonic_subinterval(Int(5), Int(24)).str() == "(29/120, 28/115]");
  CHECK(error_code([] { harmonic_subinterval(Int(2), Int(2)); }) == Errc::bad_sequence);
}

TEST_CASE("locating the greedy pair") {
  auto [a1, a2] = locate(Rat::parse("7/10"));
  CHECK(a1 == 2);
  CHECK(a2 == 6);
  CHECK(locate(Rat::parse("19/48")) == std::make_pair(Int(3), Int(17)));
  CHECK(locate(Rat::parse("1")) == std::make_pair(Int(2), Int(3)));
  CHECK(locate(Rat::parse("31/58")) == std::make_pair(Int(2), Int(30)));
  CHECK(error_code([] { locate(Rat::parse("0")); }) == Errc::domain);

  std::mt19937_64 rng(920);
  for (int i = 0; i < 200; ++i) {
    long q = std::uniform_int_distribution<long>(1, 2000)(rng);
    long p = std::uniform_int_distribution<long>(1, q)(rng);
    Rat theta = Rat(Int(p), Int(q));
    auto [b1, b2] = locate(theta);
    CHECK(harmonic_subinterval(b1, b2).contains(theta));
    CHECK(harmonic_interval(b1).contains(theta));
  }
}

TEST_CASE("competitor pairs for small first denominators") {
  auto x2pairs = competitor_set(Int(2));
  REQUIRE(x2pairs.size() == 3);
  CHECK(x2pairs[0] == std::make_pair(Int(3), Int(3)));
  CHECK(x2pairs[1] == std::make_pair(Int(3), Int(4)));
  CHECK(x2pairs[2] == std::make_pair(Int(3), Int(5)));

  auto x3pairs = competitor_set(Int(3));
  CHECK(x3pairs.size() == 10);
  // The boundary pair (4, 12) sums to exactly 1/3 and must be excluded.
  for (const auto& [x1, x2] : x3pairs) CHECK(!(x1 == 4 && x2 == 12));
  CHECK(error_code([] { competitor_set(Int(1)); }) == Errc::domain);
}

TEST_CASE("competitor set structure across a range of first denominators") {
  for (long a1v = 2; a1v <= 40; ++a1v) {
    Int a1(a1v);
    auto pairs = competitor_set(a1);
    std::map<Int, Int> per_x1;
    for (const auto& [x1, x2] : pairs) {
      CHECK(x1 >= a1 + 1);
      CHECK(x1 <= 2 * a1 - 1);
      CHECK(x2 >= 2 * a1 - 1);
      CHECK(x2 >= x1);
      CHECK(Rat::unit(x1) + Rat::unit(x2) > Rat::unit(a1));
      per_x1[x1] += 1;
    }
    Int total = 0;
    for (Int x1 = a1 + 1; x1 <= 2 * a1 - 1; ++x1) {
      Int expected = ceil_div(a1 * x1, x1 - a1) - 2 * a1 + 1;
      CHECK(per_x1[x1] == expected);
      total += expected;
    }
    CHECK(Int(long(pairs.size())) == total);
  }
}

TEST_CASE("induced second greedy denominators") {
  InducedA2 r = induced_a2(Int(5), Int(7), Int(10));
  CHECK(r.a2 == 24);
  CHECK(!r.tie);
  CHECK(r.greedy_valid);

  r = induced_a2(Int(5), Int(9), Int(11));
  CHECK(r.a2 == 495);
  CHECK(r.tie);
  CHECK(r.greedy_valid);

  r = induced_a2(Int(5), Int(6), Int(9));
  CHECK(r.a2 == 13);
  CHECK(!r.tie);
  CHECK(!r.greedy_valid);

  r = induced_a2(Int(3), Int(4), Int(5));
  CHECK(r.a2 == 9);
  CHECK(!r.tie);

  CHECK(error_code([] { induced_a2(Int(3), Int(3), Int(5)); }) == Errc::precondition);
  CHECK(error_code([] { induced_a2(Int(3), Int(7), Int(7)); }) == Errc::precondition);
  CHECK(error_code([] { induced_a2(Int(3), Int(4), Int(4)); }) == Errc::precondition);
  CHECK(error_code([] { induced_a2(Int(3), Int(4), Int(12)); }) == Errc::precondition);
  CHECK(error_code([] { induced_a2(Int(3), Int(5), Int(8)); }) == Errc::precondition);
}

TEST_CASE("two-term classification for a1 = 2: greedy is never strictly beaten") {
  auto recs = classify_two_term(Int(2));
  REQUIRE(recs.size() == 3);
  const long a2s[] = {6, 12, 30};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(recs[i].a2 == a2s[i]);
    CHECK(recs[i].relation == Relation::tie);
    CHECK(recs[i].greedy_valid);
    CHECK(!recs[i].improvement_interval.has_value());
  }
}

TEST_CASE("two-term classification for a1 = 3 matches the full table") {
  auto recs = classify_two_term(Int(3));
  REQUIRE(recs.size() == 10);
  struct Row {
    long x1, x2, a2;
    Relation rel;
  };
  const Row table[] = {{4, 5, 9, Relation::strict_improvement},
                       {4, 6, 12, Relation::tie},
                       {4, 7, 17, Relation::strict_improvement},
                       {4, 8, 24, Relation::tie},
                       {4, 9, 36, Relation::tie},
                       {4, 10, 60, Relation::tie},
                       {4, 11, 132, Relation::tie},
                       {5, 5, 15, Relation::tie},
                       {5, 6, 30, Relation::tie},
                       {5, 7, 105, Relation::tie}};
  for (std::size_t i = 0; i < 10; ++i) {
    CAPTURE(i);
    CHECK(recs[i].a1 == 3);
    CHECK(recs[i].x1 == table[i].x1);
    CHECK(recs[i].x2 == table[i].x2);
    CHECK(recs[i].a2 == table[i].a2);
    CHECK(recs[i].relation == table[i].rel);
    CHECK(recs[i].greedy_valid);
  }
  REQUIRE(recs[0].improvement_interval.has_value());
  CHECK(recs[0].improvement_interval->str() == "(9/20, 11/24]");
  REQUIRE(recs[2].improvement_interval.has_value());
  CHECK(recs[2].improvement_interval->str() == "(11/28, 19/48]");
  CHECK(!recs[1].improvement_interval.has_value());
}

TEST_CASE("two-term classification for a1 = 5") {
  auto recs = classify_two_term(Int(5));
  CHECK(recs.size() == 38);
  const TwoTermRecord& strict = find_record(recs, 7, 10);
  CHECK(strict.a2 == 24);
  CHECK(strict.relation == Relation::strict_improvement);
  CHECK(strict.greedy_valid);
  REQUIRE(strict.improvement_interval.has_value());
  CHECK(strict.improvement_interval->str() == "(17/70, 28/115]");

  const TwoTermRecord& invalid = find_record(recs, 6, 9);
  CHECK(invalid.a2 == 13);
  CHECK(invalid.relation == Relation::strict_improvement);
  CHECK(!invalid.greedy_valid);
  CHECK(!invalid.improvement_interval.has_value());

  const TwoTermRecord& tie = find_record(recs, 9, 11);
  CHECK(tie.a2 == 495);
  CHECK(tie.relation == Relation::tie);
}

TEST_CASE("record internals are mutually consistent across many a1") {
  for (long a1v = 2; a1v <= 25; ++a1v) {
    Int a1(a1v);
    auto recs = classify_two_term(a1);
    auto pairs = competitor_set(a1);
    REQUIRE(recs.size() == pairs.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
      const TwoTermRecord& r = recs[i];
      CHECK(r.x1 == pairs[i].first);
      CHECK(r.x2 == pairs[i].second);
      InducedA2 ind = induced_a2(a1, r.x1, r.x2);
      CHECK(r.a2 == ind.a2);
      CHECK((r.relation == Relation::tie) == ind.tie);
      CHECK(r.greedy_valid == ind.greedy_valid);
      CHECK(r.greedy_valid == (r.a2 >= a1 * a1 - a1 + 1));
      bool wants_interval = r.relation == Relation::strict_improvement && r.greedy_valid;
      CHECK(r.improvement_interval.has_value() == wants_interval);
      if (r.improvement_interval) {
        Rat pair_sum = Rat::unit(r.x1) + Rat::unit(r.x2);
        CHECK(r.improvement_interval->lo() == pair_sum);
        CHECK(r.improvement_interval->hi() == Rat::unit(a1) + Rat::unit(r.a2 - 1));
        CHECK(r.improvement_interval->lo() < r.improvement_interval->hi());
      }
    }
  }
}

TEST_CASE("classifications agree with the optimal search at interval endpoints") {
  // Strict record (4, 7) of a1 = 3: at the right end of its improvement
  // interval the pair beats the greedy pair.
  Rat theta = Rat::parse("19/48");
  BestResult b = best_underapprox(theta, 2);
  CHECK(b.value == Rat::parse("11/28"));
  CHECK(!b.greedy_is_best);

  // Tie record (4, 6) of a1 = 3: at the right end of the subinterval for
  // a2 = 12 both pairs realize the optimum.
  theta = harmonic_subinterval(Int(3), Int(12)).hi();
  CHECK(theta == Rat::parse("14/33"));
  b = best_underapprox(theta, 2);
  CHECK(b.value == Rat::parse("5/12"));
  REQUIRE(b.witnesses.size() == 2);
  CHECK(b.witnesses[0].str() == "3,12");
  CHECK(b.witnesses[1].str() == "4,6");
  CHECK(b.greedy_is_best);
  CHECK(!b.unique_best);

  CHECK(std::string(to_string(Relation::tie)) == "TIE");
  CHECK(std::string(to_string(Relation::strict_improvement)) == "STRICT_IMPROVEMENT");
}
