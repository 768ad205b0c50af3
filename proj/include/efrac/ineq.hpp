#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "efrac/rational.hpp"

namespace efrac {

enum class Direction { increasing, decreasing };

// Positive rational terms with a recorded weak monotonicity direction; both
// are validated on construction.
class PosSeq {
 public:
  PosSeq(std::vector<Rat> values, Direction dir);
  static PosSeq parse(std::string_view csv, Direction dir);

  std::size_t size() const { return values_.size(); }
  const Rat& operator[](std::size_t i) const { return values_[i]; }
  const std::vector<Rat>& values() const { return values_; }
  Direction direction() const { return dir_; }
  std::string str() const;

  friend bool operator==(const PosSeq& a, const PosSeq& b) { return a.values_ == b.values_; }
  friend bool operator!=(const PosSeq& a, const PosSeq& b) { return !(a == b); }

 private:
  std::vector<Rat> values_;
  Direction dir_;
};

// Whether every prefix product of v is at most the matching prefix product
// of u.  Lengths must agree.
bool prefix_product_dominates(const PosSeq& v, const PosSeq& u);

struct IneqVerdict {
  Rat lhs, rhs;
  bool holds;  // lhs < rhs
};

// For increasing u, v with u != v and prefix products of v dominated by u:
// verdict on sum(1/u_i) < sum(1/v_i).
IneqVerdict check_reciprocal_inequality(const PosSeq& u, const PosSeq& v);

// Decreasing counterpart: verdict on sum(v_i) < sum(u_i).
IneqVerdict check_sum_inequality_decreasing(const PosSeq& u, const PosSeq& v);

// One exchange move toward v: at the first index l where u_l < v_l, scale
// u_{l-1} down and u_l up by t = min(u_{l-1}/v_{l-1}, v_l/u_l), pinning one
// of them to the matching v term.  Preserves all hypotheses, keeps the
// products of the two touched terms, and strictly lowers sum(u).  Returns
// nothing when v is already componentwise at most u.
std::optional<PosSeq> smoothing_step(const PosSeq& u, const PosSeq& v);

}  // namespace efrac
