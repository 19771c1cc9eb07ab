#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "isotemporal/errors.hpp"

namespace isotemporal {

struct LabeledEdge {
  std::string u;
  std::string v;
  double t = 0.0;
};

// Undirected graph with pairwise-distinct real time labels on edges.
// Times are rank-normalized to 1..m on construction; all downstream logic
// works on ranks only.
class TemporalNetwork {
 public:
  static TemporalNetwork validate(std::vector<std::string> vertices,
                                  const std::vector<LabeledEdge>& edges);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::string& vertex_name(int i) const { return vertices_[i]; }

  // Edges in input order, as vertex-index pairs.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  // Rank of edge i, 1..m, ascending in original time.
  int rank(int edge_index) const { return ranks_[edge_index]; }

  int vertex_index(const std::string& name) const;          // UnknownVertex
  std::optional<int> find_vertex(const std::string& name) const;
  std::optional<int> find_edge(int u, int v) const;

  // Vertex indices adjacent to v, with the connecting edge index.
  const std::vector<std::pair<int, int>>& neighbors(int v) const {
    return adjacency_[v];
  }

  bool is_temporal_path(std::span<const std::string> seq) const;

  // {source} plus every vertex reachable by a time-respecting path,
  // names sorted lexicographically.
  std::vector<std::string> temporal_reachable_set(const std::string& source) const;

  // True iff every vertex has degree 2 and the edges form one cycle, n >= 3.
  bool is_ngon() const;

 private:
  friend class NGon;
  TemporalNetwork() = default;

  std::vector<std::string> vertices_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> ranks_;
  std::unordered_map<std::string, int> vertex_index_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

// An n-gon with a fixed traversal: cycle_[0] is the first declared vertex and
// cycle_[1] is its earliest-declared neighbor, which pins the direction.
class NGon {
 public:
  static NGon from_network(TemporalNetwork net);
  // Cycle v1..vn with edge i joining v_{i+1}, v_{i+2} and carrying ranks[i].
  static NGon from_ranks(const std::vector<int>& ranks);

  int size() const { return static_cast<int>(cycle_.size()); }
  const TemporalNetwork& network() const { return net_; }
  const std::vector<int>& cycle() const { return cycle_; }
  // Rank of the edge from cycle()[i] to cycle()[i+1 mod n].
  const std::vector<int>& cycle_ranks() const { return cycle_ranks_; }

 private:
  TemporalNetwork net_;
  std::vector<int> cycle_;
  std::vector<int> cycle_ranks_;
};

// map[i] = index in `to` of the image of vertex i of `from`; must be a
// bijection. Checks edge preservation and forward temporal-path preservation
// (for a pair of n-gons via adjacent-edge runs, otherwise exhaustively, which
// is capped at 8 vertices).
bool is_temporal_isomorphism(const TemporalNetwork& from,
                             const TemporalNetwork& to,
                             const std::vector<int>& map);

// First temporal isomorphism in a fixed order, if any: for n-gons the 2n
// dihedral maps (rotations 0..n-1 then reflections 0..n-1), otherwise all
// vertex bijections in lexicographic order (|V| <= 8).
std::optional<std::vector<int>> find_temporal_isomorphism(
    const TemporalNetwork& from, const TemporalNetwork& to);

}  // namespace isotemporal
