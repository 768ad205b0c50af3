#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "efrac/rational.hpp"

namespace efrac {

// Splits "2,3,7,43" into integers; accepts any base-10 integers, no whitespace.
std::vector<Int> parse_int_list(std::string_view csv);

std::string format_int_list(std::span<const Int> terms);

// Exact sum of reciprocals 1/x_i; every term must be nonzero.
Rat reciprocal_sum(std::span<const Int> terms);

// Nondecreasing denominators, every term >= 2.
class DenomSeq {
 public:
  explicit DenomSeq(std::vector<Int> terms);
  static DenomSeq parse(std::string_view csv);

  std::size_t size() const { return terms_.size(); }
  const Int& operator[](std::size_t i) const { return terms_[i]; }
  const std::vector<Int>& terms() const { return terms_; }

  Rat sum() const { return reciprocal_sum(terms_); }
  std::string str() const { return format_int_list(terms_); }

  friend bool operator==(const DenomSeq& a, const DenomSeq& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const DenomSeq& a, const DenomSeq& b) { return !(a == b); }

 private:
  std::vector<Int> terms_;
};

// Greedy-reachable denominators: a_1 >= 2 and a_{i+1} >= a_i^2 - a_i + 1.
// Such sequences are strictly increasing.
class GreedySeq {
 public:
  explicit GreedySeq(std::vector<Int> terms);
  static GreedySeq parse(std::string_view csv);

  std::size_t size() const { return terms_.size(); }
  const Int& operator[](std::size_t i) const { return terms_[i]; }
  const std::vector<Int>& terms() const { return terms_; }

  Rat sum() const { return reciprocal_sum(terms_); }
  std::string str() const { return format_int_list(terms_); }
  DenomSeq as_denoms() const { return DenomSeq(terms_); }

  friend bool operator==(const GreedySeq& a, const GreedySeq& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const GreedySeq& a, const GreedySeq& b) { return !(a == b); }

 private:
  std::vector<Int> terms_;
};

}  // namespace efrac
