#include "efrac/rational.hpp"

namespace efrac {

Rat::Rat(const Int& num, const Int& den) {
  if (sgn(den) == 0) fail(Errc::zero_denominator, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!all_digits(den))
      fail(Errc::parse, "bad rational '" + std::string(text) + "': denominator must be digits");
  }
  std::string_view digits = num;
  if (!digits.empty() && digits[0] == '-') digits.remove_prefix(1);
  if (!all_digits(digits))
    fail(Errc::parse, "bad rational '" + std::string(text) + "': expected p or p/q in base 10");
  Int n(std::string(num), 10);
  Int d = den.empty() ? Int(1) : Int(std::string(den), 10);
  if (sgn(d) == 0) fail(Errc::zero_denominator, "bad rational '" + std::string(text) + "': zero denominator");
  return Rat(n, d);
}

Rat Rat::unit(const Int& x) {
  if (sgn(x) == 0) fail(Errc::zero_denominator, "reciprocal of zero");
  mpq_class q;
  if (sgn(x) > 0) {
    q.get_num() = 1;
    q.get_den() = x;
  } else {
    q.get_num() = -1;
    q.get_den() = -x;
  }
  return Rat(std::move(q));
}

Rat Rat::reciprocal() const {
  if (is_zero()) fail(Errc::zero_denominator, "reciprocal of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
  return Rat(std::move(r));
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) fail(Errc::zero_denominator, "division by zero");
  return Rat(mpq_class(a.q_ / b.q_));
}

std::string Rat::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

void require_unit_range(const Rat& theta, const char* who) {
  if (theta.sign() <= 0 || theta > rat_one())
    fail(Errc::domain, std::string(who) + ": theta = " + theta.str() + " is outside (0, 1]");
}

Int greedy_denominator(const Rat& theta) {
  require_unit_range(theta, "greedy_denominator");
  // floor(q/p) + 1 gives the unique a with 1/a < p/q <= 1/(a-1).
  return Int(theta.den() / theta.num() + 1);
}

Interval::Interval(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(lo_ < hi_))
    fail(Errc::domain, "interval (" + lo_.str() + ", " + hi_.str() + "] is empty");
}

std::string Interval::str() const { return "(" + lo_.str() + ", " + hi_.str() + "]"; }

}  // namespace efrac
