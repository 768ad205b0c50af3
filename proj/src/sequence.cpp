#include "efrac/sequence.hpp"

namespace efrac {

std::vector<Int> parse_int_list(std::string_view csv) {
  if (csv.empty()) fail(Errc::parse, "empty integer list");
  std::vector<Int> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = csv.find(',', pos);
    std::string_view tok = csv.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    std::string_view digits = tok;
    if (!digits.empty() && digits[0] == '-') digits.remove_prefix(1);
    bool ok = !digits.empty();
    for (char c : digits)
      if (c < '0' || c > '9') ok = false;
    if (!ok) fail(Errc::parse, "bad integer '" + std::string(tok) + "' in list");
    out.emplace_back(std::string(tok), 10);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string format_int_list(std::span<const Int> terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += ',';
    out += terms[i].get_str();
  }
  return out;
}

Rat reciprocal_sum(std::span<const Int> terms) {
  Rat s;
  for (const Int& x : terms) s += Rat::unit(x);
  return s;
}

namespace {

std::string ord(std::size_t i) { return "term " + std::to_string(i + 1); }

}  // namespace

DenomSeq::DenomSeq(std::vector<Int> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) fail(Errc::bad_sequence, "denominator sequence is empty");
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i] < 2)
      fail(Errc::bad_sequence, ord(i) + " (= " + terms_[i].get_str() + ") must be >= 2");
    if (i > 0 && terms_[i] < terms_[i - 1])
      fail(Errc::bad_sequence,
           ord(i) + " (= " + terms_[i].get_str() + ") breaks nondecreasing order");
  }
}

DenomSeq DenomSeq::parse(std::string_view csv) { return DenomSeq(parse_int_list(csv)); }

GreedySeq::GreedySeq(std::vector<Int> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) fail(Errc::bad_sequence, "greedy sequence is empty");
  if (terms_[0] < 2)
    fail(Errc::bad_sequence, ord(0) + " (= " + terms_[0].get_str() + ") must be >= 2");
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    Int floor = terms_[i - 1] * terms_[i - 1] - terms_[i - 1] + 1;
    if (terms_[i] < floor)
      fail(Errc::bad_sequence, ord(i) + " (= " + terms_[i].get_str() +
                                   ") violates the greedy growth bound (needs >= " +
                                   floor.get_str() + ")");
  }
}

GreedySeq GreedySeq::parse(std::string_view csv) { return GreedySeq(parse_int_list(csv)); }

}  // namespace efrac
