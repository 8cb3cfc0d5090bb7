#pragma once

#include <stdexcept>
#include <string>

namespace lincomb {

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Certified numerics could not decide the requested question.
class IndeterminateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search or scan exceeded its configured budget.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tri-state answer of a certified comparison.
enum class Verdict { no = 0, yes = 1, indeterminate = 2 };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    default:
      return "indeterminate";
  }
}

}  // namespace lincomb
