// Copyright 2026 The hetsim authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hetsim/expr.hpp"

namespace hetsim {

enum class ElemType { f32, i32, f64, i64 };
enum class DeviceType { cpu, gpu };
enum class BufferKind { input, output, io };

int elem_width(ElemType t);
const char* elem_type_name(ElemType t);
const char* device_type_name(DeviceType t);

/// A kernel argument backed by device memory. Identified by (kernel, pos).
struct BufferSpec {
  int kernel = -1;
  int pos = -1;
  ElemType type = ElemType::f32;
  std::string size_expr;  // element count, symbolic
  BufferKind kind = BufferKind::input;
};

struct VarArg {
  std::string type;
  int pos = -1;
  std::string value;  // may be symbolic
};

struct KernelSpec {
  int id = -1;
  std::string name;
  DeviceType dev = DeviceType::gpu;
  int work_dimension = 1;
  std::array<std::string, 3> global_work_size{"1", "1", "1"};
  std::vector<BufferSpec> input_buffers;
  std::vector<BufferSpec> output_buffers;
  std::vector<BufferSpec> io_buffers;
  std::vector<VarArg> var_args;
  std::string src_path;

  /// Input-side buffers (inputs + io), sorted by pos.
  std::vector<const BufferSpec*> input_side() const;
  /// Output-side buffers (outputs + io), sorted by pos.
  std::vector<const BufferSpec*> output_side() const;
  const BufferSpec* buffer_at(int pos) const;
};

/// Buffer-to-buffer dependency: output (src_kernel, src_pos) feeds input
/// (dst_kernel, dst_pos).
struct DagEdge {
  int src_kernel = -1;
  int src_pos = -1;
  int dst_kernel = -1;
  int dst_pos = -1;
};

struct DagSpec {
  std::vector<KernelSpec> kernels;
  std::vector<DagEdge> edges;
  std::vector<std::vector<int>> tc;  // partition of kernel ids
  std::map<int, int> cq;             // device id -> queue count
  ParamMap params;

  const KernelSpec& kernel(int id) const;
  bool has_kernel(int id) const;
  /// Kernel-level successor adjacency derived from edges (deduplicated).
  std::map<int, std::set<int>> kernel_successors() const;
  std::map<int, std::set<int>> kernel_predecessors() const;
  /// Edge indices arriving at each (kernel,pos) input; at most one per input.
  std::map<std::pair<int, int>, int> producer_edge() const;
  /// Edge indices leaving each (kernel,pos) output.
  std::map<std::pair<int, int>, std::vector<int>> consumer_edges() const;
  /// Kernel ids in a topological order of the kernel-level graph.
  std::vector<int> topo_order() const;
  /// Component index for each kernel id, per tc order.
  std::map<int, int> component_of() const;
};

/// Parses and validates a spec document. Expressions are syntax-checked and
/// retained unevaluated; params are stored for later evaluation.
DagSpec parse_spec(const std::string& text, const ParamMap& params);

/// Canonical JSON serialization; parse_spec(serialize(g)) reproduces g.
std::string serialize(const DagSpec& g);

/// Byte size of a buffer under the bindings: eval(size_expr) * elem width.
long long buffer_bytes(const BufferSpec& b, const ParamMap& params);

}  // namespace hetsim
