#include "efrac/ineq.hpp"

namespace efrac {

PosSeq::PosSeq(std::vector<Rat> values, Direction dir) : values_(std::move(values)), dir_(dir) {
  if (values_.empty()) fail(Errc::bad_sequence, "positive sequence is empty");
  const char* name = dir_ == Direction::increasing ? "increasing" : "decreasing";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].sign() <= 0)
      fail(Errc::bad_sequence,
           "term " + std::to_string(i + 1) + " (= " + values_[i].str() + ") must be positive");
    bool ordered = i == 0 || (dir_ == Direction::increasing ? values_[i - 1] <= values_[i]
                                                            : values_[i - 1] >= values_[i]);
    if (!ordered)
      fail(Errc::bad_sequence, "term " + std::to_string(i + 1) + " (= " + values_[i].str() +
                                   ") breaks the claimed " + name + " order");
  }
}

PosSeq PosSeq::parse(std::string_view csv, Direction dir) {
  if (csv.empty()) fail(Errc::parse, "empty sequence");
  std::vector<Rat> vals;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = csv.find(',', pos);
    std::string_view tok = csv.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    vals.push_back(Rat::parse(tok));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return PosSeq(std::move(vals), dir);
}

std::string PosSeq::str() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += values_[i].str();
  }
  return out;
}

namespace {

void require_same_length(const PosSeq& a, const PosSeq& b, const char* who) {
  if (a.size() != b.size())
    fail(Errc::precondition, std::string(who) + ": sequence lengths " + std::to_string(a.size()) +
                                 " and " + std::to_string(b.size()) + " differ");
}

void require_direction(const PosSeq& s, Direction dir, const char* who, const char* role) {
  if (s.direction() != dir)
    fail(Errc::precondition, std::string(who) + ": " + role + " must be " +
                                 (dir == Direction::increasing ? "increasing" : "decreasing"));
}

// Shared hypothesis block of both inequality checkers and the smoothing move.
void require_hypotheses(const PosSeq& u, const PosSeq& v, Direction dir, const char* who) {
  require_same_length(u, v, who);
  require_direction(u, dir, who, "u");
  require_direction(v, dir, who, "v");
  if (u == v) fail(Errc::precondition, std::string(who) + ": u and v are the same sequence");
  Rat pu = rat_one();
  Rat pv = rat_one();
  for (std::size_t k = 0; k < u.size(); ++k) {
    pu = pu * u[k];
    pv = pv * v[k];
    if (pv > pu)
      fail(Errc::precondition, std::string(who) + ": prefix product dominance fails at k = " +
                                   std::to_string(k + 1) + " (" + pv.str() + " > " + pu.str() + ")");
  }
}

}  // namespace

bool prefix_product_dominates(const PosSeq& v, const PosSeq& u) {
  require_same_length(v, u, "prefix_product_dominates");
  Rat pv = rat_one();
  Rat pu = rat_one();
  for (std::size_t k = 0; k < v.size(); ++k) {
    pv = pv * v[k];
    pu = pu * u[k];
    if (pv > pu) return false;
  }
  return true;
}

IneqVerdict check_reciprocal_inequality(const PosSeq& u, const PosSeq& v) {
  require_hypotheses(u, v, Direction::increasing, "check_reciprocal_inequality");
  Rat lhs, rhs;
  for (std::size_t i = 0; i < u.size(); ++i) {
    lhs += u[i].reciprocal();
    rhs += v[i].reciprocal();
  }
  return {lhs, rhs, lhs < rhs};
}

IneqVerdict check_sum_inequality_decreasing(const PosSeq& u, const PosSeq& v) {
  require_hypotheses(u, v, Direction::decreasing, "check_sum_inequality_decreasing");
  Rat lhs, rhs;
  for (std::size_t i = 0; i < u.size(); ++i) {
    lhs += v[i];
    rhs += u[i];
  }
  return {lhs, rhs, lhs < rhs};
}

std::optional<PosSeq> smoothing_step(const PosSeq& u, const PosSeq& v) {
  require_hypotheses(u, v, Direction::decreasing, "smoothing_step");
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] == v[i])
      fail(Errc::precondition,
           "smoothing_step: u and v agree at term " + std::to_string(i + 1));

  std::size_t l = u.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] < v[i]) {
      l = i;
      break;
    }
  }
  if (l == u.size()) return std::nullopt;
  // Dominance at k = 1 forces v_1 <= u_1, so the first crossing has l >= 2.
  Rat t = u[l - 1] / v[l - 1];
  Rat t2 = v[l] / u[l];
  if (t2 < t) t = t2;
  std::vector<Rat> out = u.values();
  out[l - 1] = u[l - 1] / t;
  out[l] = u[l] * t;
  return PosSeq(std::move(out), Direction::decreasing);
}

}  // namespace efrac
