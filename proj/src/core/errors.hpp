#pragma once

#include <stdexcept>
#include <string>

namespace h1min {

enum class ErrorCode {
  argument,      // invariant-violating parameter
  parse,         // malformed file or text input
  not_a_cycle,   // chain with nonzero boundary where a cycle is required
  cap_exceeded,  // exact search refused: coset too large
  io,            // filesystem failure
  uncovered,     // nerve approximation: support edge outside every ball
  face_lift,     // cover construction: face boundary word is not the identity
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace h1min
