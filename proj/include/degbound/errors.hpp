#pragma once

#include <stdexcept>
#include <string>

namespace degbound {

enum class ErrorKind {
  invalid_input,
  range_error,
  domain_error,
  empty_intersection,
  negative_degree,
  overlap,
  division_by_zero,
  zero_residual_degree,
  resource_limit,
  infeasible_base,
  infeasible_denominator,
  realization_failure,
  parse_error,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace degbound
