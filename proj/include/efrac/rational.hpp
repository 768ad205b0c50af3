#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "efrac/error.hpp"

namespace efrac {

using Int = mpz_class;

// Exact rational number, always kept in lowest terms with positive denominator.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(const Int& num, const Int& den);
  explicit Rat(long n) : q_(n) {}
  explicit Rat(const Int& n) : q_(n) {}

  // Accepts "p" or "p/q" in base 10, sign on the numerator only, no whitespace.
  static Rat parse(std::string_view text);

  // 1/x for nonzero x.
  static Rat unit(const Int& x);

  const Int& num() const { return q_.get_num(); }
  const Int& den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  Rat reciprocal() const;

  std::string str() const;

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.q_ + b.q_); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.q_ - b.q_); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.q_ * b.q_); }
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& b) { q_ += b.q_; return *this; }
  Rat& operator-=(const Rat& b) { q_ -= b.q_; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

 private:
  explicit Rat(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

inline const Rat& rat_zero() {
  static const Rat z;
  return z;
}

inline Rat rat_one() { return Rat(1); }

// Throws Errc::domain unless 0 < theta <= 1.
void require_unit_range(const Rat& theta, const char* who);

// Unique a >= 2 with 1/a < theta <= 1/(a-1); theta must lie in (0, 1].
Int greedy_denominator(const Rat& theta);

// Half-open interval (lo, hi] with rational endpoints, lo < hi.
class Interval {
 public:
  Interval(Rat lo, Rat hi);
  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  bool contains(const Rat& t) const { return lo_ < t && t <= hi_; }
  std::string str() const;
  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  Rat lo_, hi_;
};

}  // namespace efrac
