// Copyright 2026 The hetsim authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "hetsim/rational.hpp"
#include "hetsim/spec_model.hpp"

namespace hetsim {

/// A task component: kernels of one tc sub-list, dispatched together onto one
/// device. front/end/interior are derived by the set operations below.
struct TaskComponent {
  int id = -1;
  std::vector<int> kernel_ids;  // sorted
  DeviceType dev_pref = DeviceType::gpu;
  std::set<int> front;
  std::set<int> end;
  std::set<int> interior;
};

/// Kernels of the component whose input buffers are fed, via a buffer-to-buffer
/// edge, by a kernel of a different component.
std::set<int> front_set(const std::vector<int>& component_kernels, const DagSpec& g);

/// Dual of front_set: kernels whose output buffers feed a different component.
std::set<int> end_set(const std::vector<int>& component_kernels, const DagSpec& g);

/// Component kernels in neither front nor end.
std::set<int> interior_set(const std::vector<int>& component_kernels, const DagSpec& g);

/// All components of g.tc with their derived sets, ids following tc order.
std::vector<TaskComponent> derive_components(const DagSpec& g);

enum class EdgeKind { intra, inter };
enum class CopyClass { isolated, dependent };

/// Classification of every buffer-to-buffer edge (intra/inter) and of every
/// kernel-buffer transfer (isolated/dependent), for both the write side
/// (inputs) and the read side (outputs).
struct EdgeClasses {
  std::vector<EdgeKind> edge_kind;                      // parallel to g.edges
  std::map<std::pair<int, int>, CopyClass> write_class;  // input-side buffers
  std::map<std::pair<int, int>, CopyClass> read_class;   // output-side buffers
};

EdgeClasses classify_edges(const DagSpec& g);

/// Component ids (indices into comps) whose cross-component predecessor
/// kernels are all in `finished`. Pure; the caller excludes components already
/// queued or dispatched.
std::vector<int> ready_components(const DagSpec& g, const std::vector<TaskComponent>& comps,
                                  const std::set<int>& finished);

using KernelTimeFn = std::function<Ratio(int kernel_id)>;

/// Longest remaining-time path to a sink, per kernel, using each kernel's
/// preferred-device execution time.
std::map<int, Ratio> bottom_level_ranks(const DagSpec& g, const KernelTimeFn& time_of);

/// Max rank over FRONT(T); falls back to max over all kernels when FRONT is
/// empty.
Ratio component_rank(const TaskComponent& t, const std::map<int, Ratio>& ranks);

}  // namespace hetsim
