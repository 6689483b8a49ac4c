// Copyright 2026 The hetsim authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace hetsim {

/// Error conditions raised by the library. Input/validation conditions map to
/// process exit code 2, runtime scheduling/simulation conditions to 1.
enum class Errc {
  malformed_spec,
  cycle_detected,
  partition_error,
  arg_position_clash,
  unknown_kernel_ref,
  unbound_parameter,
  inexact_division,
  division_by_zero,
  non_positive_result,
  missing_profile_entry,
  invalid_param,
  empty_trace,
  empty_component,
  already_processed,
  unknown_event,
  device_busy,
  deadlock,
  sim_deadlock,
  numeric_overflow,
};

const char* errc_name(Errc c);

/// 2 for input errors, 1 for runtime scheduling errors.
int exit_code_for(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace hetsim
