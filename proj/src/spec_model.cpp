// Copyright 2026 The hetsim authors
// SPDX-License-Identifier: Apache-2.0

#include "hetsim/spec_model.hpp"

#include <algorithm>
#include <deque>

#include <json.hpp>

#include "hetsim/errors.hpp"

namespace hetsim {

using nlohmann::ordered_json;

int elem_width(ElemType t) {
  switch (t) {
    case ElemType::f32:
    case ElemType::i32:
      return 4;
    case ElemType::f64:
    case ElemType::i64:
      return 8;
  }
  return 4;
}

const char* elem_type_name(ElemType t) {
  switch (t) {
    case ElemType::f32: return "float32";
    case ElemType::i32: return "int32";
    case ElemType::f64: return "float64";
    case ElemType::i64: return "int64";
  }
  return "float32";
}

const char* device_type_name(DeviceType t) { return t == DeviceType::cpu ? "cpu" : "gpu"; }

namespace {

ElemType parse_elem_type(const std::string& s) {
  if (s == "float32") return ElemType::f32;
  if (s == "int32") return ElemType::i32;
  if (s == "float64") return ElemType::f64;
  if (s == "int64") return ElemType::i64;
  fail(Errc::malformed_spec, "unknown element type '" + s + "'");
}

DeviceType parse_device_type(const std::string& s) {
  if (s == "cpu") return DeviceType::cpu;
  if (s == "gpu") return DeviceType::gpu;
  fail(Errc::malformed_spec, "unknown device type '" + s + "'");
}

}  // namespace

std::vector<const BufferSpec*> KernelSpec::input_side() const {
  std::vector<const BufferSpec*> out;
  for (const auto& b : input_buffers) out.push_back(&b);
  for (const auto& b : io_buffers) out.push_back(&b);
  std::sort(out.begin(), out.end(), [](auto* a, auto* b) { return a->pos < b->pos; });
  return out;
}

std::vector<const BufferSpec*> KernelSpec::output_side() const {
  std::vector<const BufferSpec*> out;
  for (const auto& b : output_buffers) out.push_back(&b);
  for (const auto& b : io_buffers) out.push_back(&b);
  std::sort(out.begin(), out.end(), [](auto* a, auto* b) { return a->pos < b->pos; });
  return out;
}

const BufferSpec* KernelSpec::buffer_at(int pos) const {
  for (const auto* list : {&input_buffers, &output_buffers, &io_buffers}) {
    for (const auto& b : *list) {
      if (b.pos == pos) return &b;
    }
  }
  return nullptr;
}

const KernelSpec& DagSpec::kernel(int id) const {
  for (const auto& k : kernels) {
    if (k.id == id) return k;
  }
  fail(Errc::unknown_kernel_ref, "kernel id " + std::to_string(id));
}

bool DagSpec::has_kernel(int id) const {
  return std::any_of(kernels.begin(), kernels.end(), [&](const auto& k) { return k.id == id; });
}

std::map<int, std::set<int>> DagSpec::kernel_successors() const {
  std::map<int, std::set<int>> succ;
  for (const auto& k : kernels) succ[k.id];
  for (const auto& e : edges) succ[e.src_kernel].insert(e.dst_kernel);
  return succ;
}

std::map<int, std::set<int>> DagSpec::kernel_predecessors() const {
  std::map<int, std::set<int>> pred;
  for (const auto& k : kernels) pred[k.id];
  for (const auto& e : edges) pred[e.dst_kernel].insert(e.src_kernel);
  return pred;
}

std::map<std::pair<int, int>, int> DagSpec::producer_edge() const {
  std::map<std::pair<int, int>, int> m;
  for (size_t i = 0; i < edges.size(); ++i) {
    m[{edges[i].dst_kernel, edges[i].dst_pos}] = static_cast<int>(i);
  }
  return m;
}

std::map<std::pair<int, int>, std::vector<int>> DagSpec::consumer_edges() const {
  std::map<std::pair<int, int>, std::vector<int>> m;
  for (size_t i = 0; i < edges.size(); ++i) {
    m[{edges[i].src_kernel, edges[i].src_pos}].push_back(static_cast<int>(i));
  }
  return m;
}

std::vector<int> DagSpec::topo_order() const {
  auto succ = kernel_successors();
  std::map<int, int> indeg;
  for (const auto& k : kernels) indeg[k.id] = 0;
  for (const auto& [src, outs] : succ) {
    (void)src;
    for (int dst : outs) ++indeg[dst];
  }
  // Kahn with ascending-id frontier for a deterministic order.
  std::set<int> frontier;
  for (const auto& [id, d] : indeg) {
    if (d == 0) frontier.insert(id);
  }
  std::vector<int> order;
  while (!frontier.empty()) {
    int id = *frontier.begin();
    frontier.erase(frontier.begin());
    order.push_back(id);
    for (int dst : succ[id]) {
      if (--indeg[dst] == 0) frontier.insert(dst);
    }
  }
  if (order.size() != kernels.size()) {
    fail(Errc::cycle_detected, "kernel dependency graph is cyclic");
  }
  return order;
}

std::map<int, int> DagSpec::component_of() const {
  std::map<int, int> m;
  for (size_t c = 0; c < tc.size(); ++c) {
    for (int id : tc[c]) m[id] = static_cast<int>(c);
  }
  return m;
}

namespace {

BufferSpec parse_buffer(const ordered_json& j, int kernel_id, BufferKind kind) {
  if (!j.is_object()) fail(Errc::malformed_spec, "buffer entry must be an object");
  BufferSpec b;
  b.kernel = kernel_id;
  b.kind = kind;
  if (!j.contains("type") || !j.contains("size") || !j.contains("pos")) {
    fail(Errc::malformed_spec, "buffer needs type/size/pos");
  }
  b.type = parse_elem_type(j.at("type").get<std::string>());
  const auto& size = j.at("size");
  b.size_expr = size.is_string() ? size.get<std::string>() : std::to_string(size.get<long long>());
  validate_expr(b.size_expr);
  b.pos = j.at("pos").get<int>();
  if (b.pos < 0) fail(Errc::malformed_spec, "buffer pos must be non-negative");
  return b;
}

std::string expr_field(const ordered_json& j) {
  std::string s = j.is_string() ? j.get<std::string>() : std::to_string(j.get<long long>());
  validate_expr(s);
  return s;
}

void check_arg_positions(const KernelSpec& k) {
  std::map<int, int> cover;
  auto add = [&](int pos, const char* what) {
    if (pos < 0) fail(Errc::malformed_spec, std::string(what) + " pos must be non-negative");
    if (++cover[pos] > 1) {
      fail(Errc::arg_position_clash,
           "kernel " + std::to_string(k.id) + " argument position " + std::to_string(pos));
    }
  };
  for (const auto& b : k.input_buffers) add(b.pos, "buffer");
  for (const auto& b : k.output_buffers) add(b.pos, "buffer");
  for (const auto& b : k.io_buffers) add(b.pos, "buffer");
  for (const auto& v : k.var_args) add(v.pos, "var arg");
  if (cover.empty()) return;
  int max_pos = cover.rbegin()->first;
  for (int p = 0; p <= max_pos; ++p) {
    if (!cover.count(p)) {
      fail(Errc::malformed_spec, "kernel " + std::to_string(k.id) + " argument position " +
                                     std::to_string(p) + " is not covered");
    }
  }
}

}  // namespace

DagSpec parse_spec(const std::string& text, const ParamMap& params) {
  ordered_json root;
  try {
    root = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::malformed_spec, e.what());
  }
  if (!root.is_object() || !root.contains("kernels")) {
    fail(Errc::malformed_spec, "top-level object with 'kernels' required");
  }

  DagSpec g;
  g.params = params;
  try {
    for (const auto& jk : root.at("kernels")) {
      KernelSpec k;
      k.id = jk.at("id").get<int>();
      if (k.id < 0) fail(Errc::malformed_spec, "kernel id must be non-negative");
      k.name = jk.at("name").get<std::string>();
      k.dev = parse_device_type(jk.at("dev").get<std::string>());
      k.work_dimension = jk.value("workDimension", 1);
      if (k.work_dimension < 1 || k.work_dimension > 3) {
        fail(Errc::malformed_spec, "workDimension must be in [1,3]");
      }
      if (jk.contains("globalWorkSize")) {
        const auto& gws = jk.at("globalWorkSize");
        if (!gws.is_array() || gws.size() != 3) {
          fail(Errc::malformed_spec, "globalWorkSize must be a 3-element list");
        }
        for (int i = 0; i < 3; ++i) k.global_work_size[i] = expr_field(gws[i]);
      }
      for (const auto& jb : jk.value("inputBuffers", ordered_json::array())) {
        k.input_buffers.push_back(parse_buffer(jb, k.id, BufferKind::input));
      }
      for (const auto& jb : jk.value("outputBuffers", ordered_json::array())) {
        k.output_buffers.push_back(parse_buffer(jb, k.id, BufferKind::output));
      }
      for (const auto& jb : jk.value("ioBuffers", ordered_json::array())) {
        k.io_buffers.push_back(parse_buffer(jb, k.id, BufferKind::io));
      }
      for (const auto& jv : jk.value("varArguments", ordered_json::array())) {
        VarArg v;
        v.type = jv.at("type").get<std::string>();
        v.pos = jv.at("pos").get<int>();
        v.value = expr_field(jv.at("value"));
        k.var_args.push_back(v);
      }
      k.src_path = jk.value("src", "");
      check_arg_positions(k);
      if (g.has_kernel(k.id)) {
        fail(Errc::malformed_spec, "duplicate kernel id " + std::to_string(k.id));
      }
      g.kernels.push_back(std::move(k));
    }

    for (const auto& je : root.value("depends", ordered_json::array())) {
      if (!je.is_array() || je.size() != 4) {
        fail(Errc::malformed_spec, "depends entries are 4-integer records");
      }
      DagEdge e{je[0].get<int>(), je[1].get<int>(), je[2].get<int>(), je[3].get<int>()};
      g.edges.push_back(e);
    }

    for (const auto& jt : root.value("tc", ordered_json::array())) {
      std::vector<int> comp;
      for (const auto& id : jt) comp.push_back(id.get<int>());
      g.tc.push_back(std::move(comp));
    }

    for (const auto& jc : root.value("cq", ordered_json::array())) {
      int dev = jc.at("device").get<int>();
      int n = jc.at("queues").get<int>();
      if (n < 0) fail(Errc::malformed_spec, "queue count must be non-negative");
      g.cq[dev] = n;
    }
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::malformed_spec, e.what());
  }

  // Edge validation: endpoints exist, source is output-side, target is
  // input-side, and every input has at most one producer.
  std::set<std::pair<int, int>> seen_inputs;
  for (const auto& e : g.edges) {
    if (!g.has_kernel(e.src_kernel)) {
      fail(Errc::unknown_kernel_ref, "edge source kernel " + std::to_string(e.src_kernel));
    }
    if (!g.has_kernel(e.dst_kernel)) {
      fail(Errc::unknown_kernel_ref, "edge target kernel " + std::to_string(e.dst_kernel));
    }
    const auto* src = g.kernel(e.src_kernel).buffer_at(e.src_pos);
    if (src == nullptr || src->kind == BufferKind::input) {
      fail(Errc::malformed_spec, "edge source (" + std::to_string(e.src_kernel) + "," +
                                     std::to_string(e.src_pos) + ") is not an output buffer");
    }
    const auto* dst = g.kernel(e.dst_kernel).buffer_at(e.dst_pos);
    if (dst == nullptr || dst->kind == BufferKind::output) {
      fail(Errc::malformed_spec, "edge target (" + std::to_string(e.dst_kernel) + "," +
                                     std::to_string(e.dst_pos) + ") is not an input buffer");
    }
    if (!seen_inputs.insert({e.dst_kernel, e.dst_pos}).second) {
      fail(Errc::malformed_spec, "input buffer (" + std::to_string(e.dst_kernel) + "," +
                                     std::to_string(e.dst_pos) + ") has multiple producers");
    }
  }

  g.topo_order();  // raises CycleDetected

  // tc must cover every kernel id exactly once with one device type each.
  std::set<int> covered;
  for (const auto& comp : g.tc) {
    if (comp.empty()) fail(Errc::partition_error, "empty task component");
    DeviceType dev = DeviceType::cpu;
    bool first = true;
    for (int id : comp) {
      if (!g.has_kernel(id)) {
        fail(Errc::partition_error, "tc references unknown kernel " + std::to_string(id));
      }
      if (!covered.insert(id).second) {
        fail(Errc::partition_error, "kernel " + std::to_string(id) + " appears twice in tc");
      }
      if (first) {
        dev = g.kernel(id).dev;
        first = false;
      } else if (g.kernel(id).dev != dev) {
        fail(Errc::partition_error, "task component mixes device types");
      }
    }
  }
  if (covered.size() != g.kernels.size()) {
    fail(Errc::partition_error, "tc does not cover every kernel");
  }
  return g;
}

namespace {

ordered_json buffer_json(const BufferSpec& b) {
  return ordered_json{{"type", elem_type_name(b.type)}, {"size", b.size_expr}, {"pos", b.pos}};
}

}  // namespace

std::string serialize(const DagSpec& g) {
  ordered_json root;
  root["kernels"] = ordered_json::array();
  for (const auto& k : g.kernels) {
    ordered_json jk;
    jk["id"] = k.id;
    jk["name"] = k.name;
    jk["dev"] = device_type_name(k.dev);
    jk["workDimension"] = k.work_dimension;
    jk["globalWorkSize"] = {k.global_work_size[0], k.global_work_size[1], k.global_work_size[2]};
    jk["inputBuffers"] = ordered_json::array();
    for (const auto& b : k.input_buffers) jk["inputBuffers"].push_back(buffer_json(b));
    jk["outputBuffers"] = ordered_json::array();
    for (const auto& b : k.output_buffers) jk["outputBuffers"].push_back(buffer_json(b));
    jk["ioBuffers"] = ordered_json::array();
    for (const auto& b : k.io_buffers) jk["ioBuffers"].push_back(buffer_json(b));
    jk["varArguments"] = ordered_json::array();
    for (const auto& v : k.var_args) {
      jk["varArguments"].push_back(ordered_json{{"type", v.type}, {"pos", v.pos}, {"value", v.value}});
    }
    jk["src"] = k.src_path;
    root["kernels"].push_back(std::move(jk));
  }
  root["tc"] = g.tc;
  root["cq"] = ordered_json::array();
  for (const auto& [dev, n] : g.cq) {
    root["cq"].push_back(ordered_json{{"device", dev}, {"queues", n}});
  }
  root["depends"] = ordered_json::array();
  for (const auto& e : g.edges) {
    root["depends"].push_back({e.src_kernel, e.src_pos, e.dst_kernel, e.dst_pos});
  }
  return root.dump(2) + "\n";
}

long long buffer_bytes(const BufferSpec& b, const ParamMap& params) {
  long long elems = eval_positive(b.size_expr, params);
  __int128 bytes = static_cast<__int128>(elems) * elem_width(b.type);
  if (bytes > std::numeric_limits<long long>::max()) {
    fail(Errc::numeric_overflow, "buffer byte size out of range");
  }
  return static_cast<long long>(bytes);
}

}  // namespace hetsim
