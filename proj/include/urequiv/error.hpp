// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace urequiv {

enum class ErrorCode {
  not_hermitian,
  no_convergence,
  dimension_mismatch,
  non_real_expectation,
  not_normalized,
  invalid_bloch,
  non_commuting,
  degenerate_spectrum,
  rank_deficient,
  inconsistent_variances,
  numerically_degenerate,
  vanishing_denominator,
  argument_out_of_range,
  variance_out_of_range,
  entropy_out_of_range,
  not_qubit,
  not_spin_one,
  invalid_axis,
  domain_error,
  infeasible_target,
  unknown_relation,
  degenerate_objective,
  io_error,
};

const char* error_code_name(ErrorCode code);

/// Library-wide exception carrying a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace urequiv
