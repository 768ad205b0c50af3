#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "efrac/greedy.hpp"
#include "test_util.hpp"

using namespace efrac;

namespace {

Rat random_theta(std::mt19937_64& rng, long max_den) {
  long q = std::uniform_int_distribution<long>(1, max_den)(rng);
  long p = std::uniform_int_distribution<long>(1, q)(rng);
  return Rat(Int(p), Int(q));
}

}  // namespace

TEST_CASE("greedy expansions on pinned inputs") {
  CHECK(greedy_sequence(Rat::parse("1"), 4).str() == "2,3,7,43");
  CHECK(greedy_sequence(Rat::parse("2/3"), 3).str() == "2,7,43");
  CHECK(greedy_sequence(Rat::parse("19/48"), 2).str() == "3,17");
  CHECK(greedy_sequence(Rat::parse("5/6"), 2).str() == "2,4");
  CHECK(greedy_sequence(Rat::parse("7/10"), 2).str() == "2,6");
  CHECK(greedy_sequence(Rat::parse("1/2"), 2).str() == "3,7");
}

TEST_CASE("greedy domain errors") {
  CHECK(error_code([] { greedy_sequence(Rat::parse("3/2"), 2); }) == Errc::domain);
  CHECK(error_code([] { greedy_sequence(Rat::parse("0"), 2); }) == Errc::domain);
  CHECK(error_code([] { greedy_sequence(Rat::parse("1/2"), 0); }) == Errc::domain);
  CHECK(error_code([] { sylvester(0); }) == Errc::domain);
}

TEST_CASE("each greedy step is bracketed by the choice inequality") {
  std::mt19937_64 rng(914);
  for (int i = 0; i < 300; ++i) {
    Rat theta = random_theta(rng, 100'000);
    GreedySeq g = greedy_sequence(theta, 5);
    Rat rem = theta;
    for (std::size_t j = 0; j < g.size(); ++j) {
      CHECK(Rat::unit(g[j]) < rem);
      CHECK(rem <= Rat::unit(Int(g[j] - 1)));
      rem -= Rat::unit(g[j]);
      CHECK(rem.sign() > 0);
    }
  }
}

TEST_CASE("sylvester numbers match the greedy expansion of 1") {
  const char* expected[] = {
      "2",
      "3",
      "7",
      "43",
      "1807",
      "3263443",
      "10650056950807",
      "113423713055421844361000443",
      "12864938683278671740537145998360961546653259485195807",
  };
  GreedySeq s = sylvester(9);
  REQUIRE(s.size() == 9);
  for (int i = 0; i < 9; ++i) CHECK(s[i].get_str() == expected[i]);
  CHECK(s == greedy_sequence(Rat::parse("1"), 9));

  // Product-plus-one and quadratic forms of the recurrence agree.
  Int product = 1;
  for (int i = 0; i + 1 < 9; ++i) {
    product *= s[i];
    CHECK(s[i + 1] == product + 1);
  }
}

TEST_CASE("closed form expansion when p divides q+1") {
  CHECK(closed_form_sequence(Int(1), Int(1), 4).str() == "2,3,7,43");
  CHECK(closed_form_sequence(Int(3), Int(5), 2).str() == "2,11");
  CHECK(closed_form_sequence(Int(2), Int(3), 3).str() == "2,7,43");
  CHECK(closed_form_sequence(Int(2), Int(3), 3) == greedy_sequence(Rat::parse("2/3"), 3));
}

TEST_CASE("closed form rejects bad inputs") {
  CHECK(error_code([] { closed_form_sequence(Int(3), Int(7), 2); }) == Errc::divisibility);
  CHECK(error_code([] { closed_form_sequence(Int(4), Int(5), 2); }) == Errc::divisibility);
  CHECK(error_code([] { closed_form_sequence(Int(5), Int(3), 2); }) == Errc::domain);
  CHECK(error_code([] { closed_form_sequence(Int(0), Int(3), 2); }) == Errc::domain);
  CHECK(error_code([] { closed_form_sequence(Int(2), Int(-3), 2); }) == Errc::domain);
  CHECK(error_code([] { closed_form_sequence(Int(1), Int(1), 0); }) == Errc::domain);
}

TEST_CASE("closed form matches greedy and leaves the predicted remainder") {
  std::mt19937_64 rng(915);
  int tested = 0;
  while (tested < 200) {
    long q = std::uniform_int_distribution<long>(1, 2000)(rng);
    long p = std::uniform_int_distribution<long>(1, q)(rng);
    if ((q + 1) % p != 0) continue;
    ++tested;
    Rat theta{Int(p), Int(q)};
    for (int n = 1; n <= 3; ++n) {
      GreedySeq cf = closed_form_sequence(Int(p), Int(q), n);
      CHECK(cf == greedy_sequence(theta, n));
      Int product = 1;
      for (std::size_t i = 0; i < cf.size(); ++i) product *= cf[i];
      CHECK(theta - cf.sum() == Rat::unit(Int(q * product)));
    }
  }
}

TEST_CASE("criterion intervals on pinned inputs") {
  CHECK(criterion_interval(GreedySeq::parse("2,3,7")).str() == "(41/42, 1]");
  CHECK(criterion_interval(GreedySeq::parse("2")).str() == "(1/2, 1]");
  CHECK(criterion_interval(GreedySeq::parse("2,30")).str() == "(8/15, 31/58]");
  CHECK(criterion_interval(GreedySeq::parse("3,17")).str() == "(20/51, 19/48]");
  CHECK(limit_bounds(GreedySeq::parse("2,30")) == criterion_interval(GreedySeq::parse("2,30")));
}

TEST_CASE("criterion membership on pinned inputs") {
  CHECK(is_greedy_for(GreedySeq::parse("2,30"), Rat::parse("31/58")));
  CHECK(!is_greedy_for(GreedySeq::parse("2,30"), Rat::parse("8/15")));
  CHECK(!is_greedy_for(GreedySeq::parse("2,30"), Rat::parse("5/9")));
  CHECK(is_greedy_for(GreedySeq::parse("2,3,7"), Rat::parse("1")));
  CHECK(!is_greedy_for(GreedySeq::parse("2,3,7"), Rat::parse("41/42")));
}

TEST_CASE("criterion membership agrees with running the greedy algorithm") {
  std::mt19937_64 rng(916);
  for (int i = 0; i < 400; ++i) {
    Rat theta = random_theta(rng, 50'000);
    int n = std::uniform_int_distribution<int>(1, 4)(rng);
    GreedySeq g = greedy_sequence(theta, n);
    CHECK(is_greedy_for(g, theta));
    Interval iv = criterion_interval(g);
    CHECK(iv.contains(theta));
    CHECK(!is_greedy_for(g, iv.lo()));
  }
}

TEST_CASE("greedy remainders") {
  CHECK(greedy_remainder(Rat::parse("1"), DenomSeq::parse("2,3,7")) == Rat::parse("1/42"));
  CHECK(greedy_remainder(Rat::parse("1"), DenomSeq::parse("2,3,7,43")) == Rat::parse("1/1806"));
  CHECK(greedy_remainder(Rat::parse("2/3"), DenomSeq::parse("2")) == Rat::parse("1/6"));
  CHECK(greedy_remainder(Rat::parse("3/5"), DenomSeq::parse("2,11")) == Rat::parse("1/110"));
  CHECK(error_code([] { greedy_remainder(Rat::parse("1/2"), DenomSeq::parse("2")); }) ==
        Errc::precondition);
  CHECK(error_code([] { greedy_remainder(Rat::parse("1/2"), DenomSeq::parse("2,3")); }) ==
        Errc::precondition);
}
