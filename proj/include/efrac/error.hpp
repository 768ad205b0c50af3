#pragma once

#include <stdexcept>
#include <string>

namespace efrac {

// Stable error categories; the C API maps them one-to-one onto status codes.
enum class Errc {
  parse,
  zero_denominator,
  domain,
  bad_sequence,
  divisibility,
  precondition,
  infeasible,
  budget_exhausted,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace efrac
