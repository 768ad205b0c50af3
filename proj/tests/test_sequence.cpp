#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "efrac/sequence.hpp"
#include "test_util.hpp"

using namespace efrac;

TEST_CASE("integer list parsing") {
  auto v = parse_int_list("2,3,7,43");
  REQUIRE(v.size() == 4);
  CHECK(v[3] == 43);
  CHECK(format_int_list(v) == "2,3,7,43");
  CHECK(parse_int_list("-5").front() == -5);
  for (const char* bad : {"", "2,", ",2", "2,,3", "2;3", "2 ,3"})
    CHECK(error_code([&] { parse_int_list(bad); }) == Errc::parse);
}

TEST_CASE("reciprocal sums") {
  CHECK(reciprocal_sum(parse_int_list("2,3,7,43")) == Rat::parse("1805/1806"));
  CHECK(reciprocal_sum(parse_int_list("2,6")) == Rat::parse("2/3"));
  CHECK(reciprocal_sum(parse_int_list("3,3")) == Rat::parse("2/3"));
  CHECK(reciprocal_sum(parse_int_list("4,7")) == Rat::parse("11/28"));
}

TEST_CASE("denominator sequences are nondecreasing with terms >= 2") {
  CHECK(DenomSeq::parse("2,2,5").str() == "2,2,5");
  CHECK(DenomSeq::parse("2").size() == 1);
  CHECK(error_code([] { DenomSeq::parse("1,2"); }) == Errc::bad_sequence);
  CHECK(error_code([] { DenomSeq::parse("2,3,2"); }) == Errc::bad_sequence);
  CHECK(error_code([] { DenomSeq(std::vector<Int>{}); }) == Errc::bad_sequence);
}

TEST_CASE("sequence violations name the failing index") {
  try {
    DenomSeq::parse("2,3,2");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("term 3") != std::string::npos);
  }
  try {
    GreedySeq::parse("2,2");
    FAIL("expected an error");
  } catch (const Error& e) {
    std::string what = e.what();
    CHECK(what.find("term 2") != std::string::npos);
    CHECK(what.find("3") != std::string::npos);  // the needed bound
  }
}

TEST_CASE("greedy sequences respect the growth bound") {
  CHECK(GreedySeq::parse("2,3,7,43").str() == "2,3,7,43");
  CHECK(GreedySeq::parse("2,3").size() == 2);
  CHECK(GreedySeq::parse("3,7,44").size() == 3);
  CHECK(error_code([] { GreedySeq::parse("2,3,6"); }) == Errc::bad_sequence);
  CHECK(error_code([] { GreedySeq::parse("1,3"); }) == Errc::bad_sequence);
  CHECK(error_code([] { GreedySeq::parse("3,6"); }) == Errc::bad_sequence);

  // The bound a1^2 - a1 + 1 is tight: 7 is allowed after 3, 6 is not.
  CHECK(GreedySeq::parse("3,7").size() == 2);
}

TEST_CASE("greedy sequences convert to denominator sequences") {
  DenomSeq d = GreedySeq::parse("2,3,7").as_denoms();
  CHECK(d.str() == "2,3,7");
  CHECK(d.sum() == Rat::parse("41/42"));
}
