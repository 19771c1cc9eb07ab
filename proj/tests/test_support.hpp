#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "isotemporal/cycle_forms.hpp"
#include "isotemporal/temporal_network.hpp"

namespace testsupport {

// The five-professor example: A-D first, then B-C, A-E, B-D, C-E.
inline isotemporal::TemporalNetwork keychain_network() {
  return isotemporal::TemporalNetwork::validate(
      {"A", "B", "C", "D", "E"},
      {{"A", "D", 1}, {"B", "C", 2}, {"A", "E", 3}, {"B", "D", 4}, {"C", "E", 5}});
}

// Same interactions with raw dates instead of ranks.
inline isotemporal::TemporalNetwork keychain_network_dates() {
  return isotemporal::TemporalNetwork::validate(
      {"A", "B", "C", "D", "E"},
      {{"A", "D", 4.01}, {"B", "C", 4.09}, {"A", "E", 6.15}, {"B", "D", 7.08},
       {"C", "E", 7.10}});
}

// All 2^n - 2 valid ±-forms of size n, one per realizable orientation.
inline std::vector<isotemporal::PmForm> all_valid_forms(int n) {
  std::vector<isotemporal::PmForm> forms;
  for (std::uint64_t m = 1; m + 1 < (1ull << n); ++m) {
    std::vector<bool> bits(n);
    for (int i = 0; i < n; ++i) bits[i] = (m >> i) & 1;
    forms.push_back(
        isotemporal::pm_from_orientation(isotemporal::CycleOrientation(bits)));
  }
  return forms;
}

// Independent reachability oracle: exhaustive search over walks whose edge
// ranks strictly increase.
inline std::set<std::string> reachable_by_path_enumeration(
    const isotemporal::TemporalNetwork& net, const std::string& source) {
  std::set<int> reached;
  int src = net.vertex_index(source);
  reached.insert(src);
  auto dfs = [&](auto&& self, int v, int last_rank) -> void {
    for (const auto& [w, e] : net.neighbors(v)) {
      if (net.rank(e) > last_rank) {
        reached.insert(w);
        self(self, w, net.rank(e));
      }
    }
  };
  dfs(dfs, src, 0);
  std::set<std::string> names;
  for (int v : reached) names.insert(net.vertex_name(v));
  return names;
}

}  // namespace testsupport
