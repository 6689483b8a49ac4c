// Copyright 2026 The hetsim authors
// SPDX-License-Identifier: Apache-2.0

#include "hetsim/errors.hpp"

namespace hetsim {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::malformed_spec: return "MalformedSpec";
    case Errc::cycle_detected: return "CycleDetected";
    case Errc::partition_error: return "PartitionError";
    case Errc::arg_position_clash: return "ArgPositionClash";
    case Errc::unknown_kernel_ref: return "UnknownKernelRef";
    case Errc::unbound_parameter: return "UnboundParameter";
    case Errc::inexact_division: return "InexactDivision";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::non_positive_result: return "NonPositiveResult";
    case Errc::missing_profile_entry: return "MissingProfileEntry";
    case Errc::invalid_param: return "InvalidParam";
    case Errc::empty_trace: return "EmptyTrace";
    case Errc::empty_component: return "EmptyComponent";
    case Errc::already_processed: return "AlreadyProcessed";
    case Errc::unknown_event: return "UnknownEvent";
    case Errc::device_busy: return "DeviceBusy";
    case Errc::deadlock: return "Deadlock";
    case Errc::sim_deadlock: return "SimDeadlock";
    case Errc::numeric_overflow: return "NumericOverflow";
  }
  return "UnknownError";
}

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::deadlock:
    case Errc::sim_deadlock:
    case Errc::device_busy:
    case Errc::already_processed:
    case Errc::unknown_event:
    case Errc::numeric_overflow:
      return 1;
    default:
      return 2;
  }
}

}  // namespace hetsim
