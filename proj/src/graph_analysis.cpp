// Copyright 2026 The hetsim authors
// SPDX-License-Identifier: Apache-2.0

#include "hetsim/graph_analysis.hpp"

#include <algorithm>

#include "hetsim/errors.hpp"

namespace hetsim {

namespace {

std::set<int> as_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

}  // namespace

std::set<int> front_set(const std::vector<int>& component_kernels, const DagSpec& g) {
  std::set<int> members = as_set(component_kernels);
  std::set<int> out;
  for (const auto& e : g.edges) {
    if (members.count(e.dst_kernel) && !members.count(e.src_kernel)) {
      out.insert(e.dst_kernel);
    }
  }
  return out;
}

std::set<int> end_set(const std::vector<int>& component_kernels, const DagSpec& g) {
  std::set<int> members = as_set(component_kernels);
  std::set<int> out;
  for (const auto& e : g.edges) {
    if (members.count(e.src_kernel) && !members.count(e.dst_kernel)) {
      out.insert(e.src_kernel);
    }
  }
  return out;
}

std::set<int> interior_set(const std::vector<int>& component_kernels, const DagSpec& g) {
  std::set<int> front = front_set(component_kernels, g);
  std::set<int> end = end_set(component_kernels, g);
  std::set<int> out;
  for (int id : component_kernels) {
    if (!front.count(id) && !end.count(id)) out.insert(id);
  }
  return out;
}

std::vector<TaskComponent> derive_components(const DagSpec& g) {
  std::vector<TaskComponent> comps;
  for (size_t i = 0; i < g.tc.size(); ++i) {
    TaskComponent t;
    t.id = static_cast<int>(i);
    t.kernel_ids = g.tc[i];
    std::sort(t.kernel_ids.begin(), t.kernel_ids.end());
    if (t.kernel_ids.empty()) fail(Errc::empty_component, "component " + std::to_string(i));
    t.dev_pref = g.kernel(t.kernel_ids.front()).dev;
    t.front = front_set(t.kernel_ids, g);
    t.end = end_set(t.kernel_ids, g);
    t.interior = interior_set(t.kernel_ids, g);
    comps.push_back(std::move(t));
  }
  return comps;
}

EdgeClasses classify_edges(const DagSpec& g) {
  EdgeClasses ec;
  auto comp_of = g.component_of();
  ec.edge_kind.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    bool same = comp_of.at(e.src_kernel) == comp_of.at(e.dst_kernel);
    ec.edge_kind.push_back(same ? EdgeKind::intra : EdgeKind::inter);
  }
  auto producers = g.producer_edge();
  auto consumers = g.consumer_edges();
  for (const auto& k : g.kernels) {
    for (const auto* b : k.input_side()) {
      bool dep = producers.count({k.id, b->pos}) > 0;
      ec.write_class[{k.id, b->pos}] = dep ? CopyClass::dependent : CopyClass::isolated;
    }
    for (const auto* b : k.output_side()) {
      auto it = consumers.find({k.id, b->pos});
      bool dep = it != consumers.end() && !it->second.empty();
      ec.read_class[{k.id, b->pos}] = dep ? CopyClass::dependent : CopyClass::isolated;
    }
  }
  return ec;
}

std::vector<int> ready_components(const DagSpec& g, const std::vector<TaskComponent>& comps,
                                  const std::set<int>& finished) {
  auto comp_of = g.component_of();
  auto preds = g.kernel_predecessors();
  std::vector<int> ready;
  for (const auto& t : comps) {
    bool ok = true;
    for (int k : t.kernel_ids) {
      for (int p : preds.at(k)) {
        if (comp_of.at(p) != t.id && !finished.count(p)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) ready.push_back(t.id);
  }
  return ready;
}

std::map<int, Ratio> bottom_level_ranks(const DagSpec& g, const KernelTimeFn& time_of) {
  auto succ = g.kernel_successors();
  auto order = g.topo_order();
  std::map<int, Ratio> rank;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int id = *it;
    Ratio best = 0;
    for (int s : succ.at(id)) best = rmax(best, rank.at(s));
    rank[id] = time_of(id) + best;
  }
  return rank;
}

Ratio component_rank(const TaskComponent& t, const std::map<int, Ratio>& ranks) {
  Ratio best = 0;
  if (!t.front.empty()) {
    for (int k : t.front) best = rmax(best, ranks.at(k));
  } else {
    for (int k : t.kernel_ids) best = rmax(best, ranks.at(k));
  }
  return best;
}

}  // namespace hetsim
