// Copyright 2026 The hetsim authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hetsim/graph_analysis.hpp"
#include "hetsim/spec_model.hpp"

namespace hetsim {

enum class CmdKind { write, ndrange, read };

const char* cmd_kind_name(CmdKind k);

struct BufferRef {
  int kernel = -1;
  int pos = -1;
};

struct Command {
  CmdKind kind = CmdKind::ndrange;
  int kernel = -1;
  std::optional<BufferRef> buffer;  // transfers only
  bool dependent = false;           // transfers: dependent vs isolated copy
  long long bytes = 0;              // transfers only
  int event = -1;                   // unique within the structure, enqueue order
  std::string label;                // w1 / e2 / r1, per-kind counters
};

/// Per-dispatch command queue structure: r in-order queues plus cross-queue
/// precedence constraints between events of different queues.
struct CommandQueueStructure {
  int component = -1;
  int device = -1;
  std::vector<std::vector<Command>> queues;
  std::set<std::pair<int, int>> deps;  // (event, event), queues always differ
  std::set<int> callbacks;             // all events with completion callbacks
  std::set<int> end_marks;             // the END(T)-rule subset of callbacks
  std::set<int> processed;             // kernels already enqueued

  int event_count = 0;
  std::vector<std::pair<int, int>> event_pos;  // event -> (queue, index)

  const Command& command_of(int event) const;
  std::optional<int> ndrange_event(int kernel) const;
};

/// Appends kernel k's commands to queue q: dependent writes (FRONT, inter
/// in-edges only), isolated writes, the ndrange, isolated reads, dependent
/// reads (END, one per inter out-edge). Raises AlreadyProcessed.
void enq(int kernel, int q, const TaskComponent& t, const DagSpec& g, const EdgeClasses& ec,
         CommandQueueStructure& cqs);

/// Adds cross-queue precedence pairs for kernel k: write->ndrange of the same
/// kernel, ndrange->read of the same kernel, and ndrange->ndrange across an
/// intra edge. Same-queue orderings are never added.
void set_dependencies(int kernel, CommandQueueStructure& cqs, const TaskComponent& t,
                      const DagSpec& g, const EdgeClasses& ec);

/// Marks completion-callback events: per END(T) kernel the dependent reads
/// (GPU) or the ndrange (CPU), plus the terminal command of every queue so
/// component completion is always observable.
void set_callbacks(const TaskComponent& t, DeviceType device_type, CommandQueueStructure& cqs,
                   const DagSpec& g, const EdgeClasses& ec);

/// Full construction: r empty queues, kernels processed in component
/// topological order (ties by ascending id) with strict round-robin queue
/// assignment, then callback marking and an acyclicity check.
CommandQueueStructure setup_cq(const TaskComponent& t, int device_id, DeviceType device_type,
                               int r, const DagSpec& g, const EdgeClasses& ec);

/// JSON debug dump (queues, deps, callbacks) for golden-file tests.
std::string to_debug_json(const CommandQueueStructure& cqs);

}  // namespace hetsim
