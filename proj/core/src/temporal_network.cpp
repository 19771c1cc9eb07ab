#include "isotemporal/temporal_network.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace isotemporal {

namespace {

// All temporal paths of `net` as vertex-index sequences, found by extending
// walks along edges of strictly increasing rank. Exponential in principle;
// callers cap the network size.
std::vector<std::vector<int>> all_temporal_paths(const TemporalNetwork& net) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;

  auto extend = [&](auto&& self, int last_rank) -> void {
    int v = path.back();
    for (const auto& [w, e] : net.neighbors(v)) {
      if (net.rank(e) > last_rank) {
        path.push_back(w);
        out.push_back(path);
        self(self, net.rank(e));
        path.pop_back();
      }
    }
  };

  for (int v = 0; v < net.vertex_count(); ++v) {
    path = {v};
    extend(extend, 0);
  }
  return out;
}

}  // namespace

TemporalNetwork TemporalNetwork::validate(std::vector<std::string> vertices,
                                          const std::vector<LabeledEdge>& edges) {
  TemporalNetwork net;
  net.vertices_ = std::move(vertices);
  for (int i = 0; i < static_cast<int>(net.vertices_.size()); ++i) {
    if (!net.vertex_index_.emplace(net.vertices_[i], i).second) {
      fail(ErrorCode::DuplicateVertex, "vertex '" + net.vertices_[i] + "' declared twice");
    }
  }

  std::set<std::pair<int, int>> seen_edges;
  std::vector<double> times;
  for (const auto& e : edges) {
    auto iu = net.vertex_index_.find(e.u);
    auto iv = net.vertex_index_.find(e.v);
    if (iu == net.vertex_index_.end()) fail(ErrorCode::UnknownVertex, "'" + e.u + "'");
    if (iv == net.vertex_index_.end()) fail(ErrorCode::UnknownVertex, "'" + e.v + "'");
    int u = iu->second, v = iv->second;
    if (u == v) fail(ErrorCode::SelfLoop, "edge {" + e.u + ", " + e.v + "}");
    if (!seen_edges.insert(std::minmax(u, v)).second) {
      fail(ErrorCode::DuplicateEdge, "edge {" + e.u + ", " + e.v + "}");
    }
    if (!std::isfinite(e.t)) {
      throw std::invalid_argument("edge time must be a finite real");
    }
    net.edges_.emplace_back(u, v);
    times.push_back(e.t);
  }

  // rank-normalize: the labeling must be a bijection onto its time set
  std::vector<int> order(times.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return times[a] < times[b]; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (times[order[k - 1]] == times[order[k]]) {
      fail(ErrorCode::DuplicateTime,
           "two edges share time " + std::to_string(times[order[k]]));
    }
  }
  net.ranks_.resize(times.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    net.ranks_[order[k]] = static_cast<int>(k) + 1;
  }

  net.adjacency_.resize(net.vertices_.size());
  for (int e = 0; e < net.edge_count(); ++e) {
    auto [u, v] = net.edges_[e];
    net.adjacency_[u].emplace_back(v, e);
    net.adjacency_[v].emplace_back(u, e);
  }
  return net;
}

int TemporalNetwork::vertex_index(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) fail(ErrorCode::UnknownVertex, "'" + name + "'");
  return it->second;
}

std::optional<int> TemporalNetwork::find_vertex(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> TemporalNetwork::find_edge(int u, int v) const {
  for (const auto& [w, e] : adjacency_[u]) {
    if (w == v) return e;
  }
  return std::nullopt;
}

bool TemporalNetwork::is_temporal_path(std::span<const std::string> seq) const {
  if (seq.size() < 2) {
    throw std::invalid_argument("temporal path needs at least two vertices");
  }
  int prev_rank = 0;
  int prev = vertex_index(seq[0]);
  for (std::size_t i = 1; i < seq.size(); ++i) {
    int cur = vertex_index(seq[i]);
    auto e = find_edge(prev, cur);
    if (!e || ranks_[*e] <= prev_rank) return false;
    prev_rank = ranks_[*e];
    prev = cur;
  }
  return true;
}

std::vector<std::string> TemporalNetwork::temporal_reachable_set(
    const std::string& source) const {
  int s = vertex_index(source);
  std::vector<char> holds(vertices_.size(), 0);
  holds[s] = 1;

  // Sweep edges in time order; an interaction spreads possession both ways.
  std::vector<int> by_rank(edges_.size());
  std::iota(by_rank.begin(), by_rank.end(), 0);
  std::sort(by_rank.begin(), by_rank.end(),
            [&](int a, int b) { return ranks_[a] < ranks_[b]; });
  for (int e : by_rank) {
    auto [u, v] = edges_[e];
    if (holds[u] || holds[v]) holds[u] = holds[v] = 1;
  }

  std::vector<std::string> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (holds[i]) out.push_back(vertices_[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool TemporalNetwork::is_ngon() const {
  int n = vertex_count();
  if (n < 3 || edge_count() != n) return false;
  for (int v = 0; v < n; ++v) {
    if (adjacency_[v].size() != 2) return false;
  }
  // degree 2 everywhere and |E| == |V|: connected iff a single cycle
  int prev = -1, cur = 0, steps = 0;
  do {
    const auto& nb = adjacency_[cur];
    int next = (nb[0].first == prev) ? nb[1].first : nb[0].first;
    prev = cur;
    cur = next;
    ++steps;
  } while (cur != 0 && steps <= n);
  return steps == n;
}

NGon NGon::from_network(TemporalNetwork net) {
  if (!net.is_ngon()) {
    throw std::invalid_argument("network is not an n-gon");
  }
  NGon g;
  int n = net.vertex_count();
  g.cycle_.reserve(n);

  // Start at the first declared vertex and step toward its earliest-declared
  // neighbor; this fixes one traversal per network.
  int start = 0;
  const auto& nb0 = net.neighbors(start);
  int second = std::min(nb0[0].first, nb0[1].first);
  int prev = start, cur = second;
  g.cycle_.push_back(start);
  while (cur != start) {
    g.cycle_.push_back(cur);
    const auto& nb = net.neighbors(cur);
    int next = (nb[0].first == prev) ? nb[1].first : nb[0].first;
    prev = cur;
    cur = next;
  }
  for (int i = 0; i < n; ++i) {
    int u = g.cycle_[i], v = g.cycle_[(i + 1) % n];
    g.cycle_ranks_.push_back(net.rank(*net.find_edge(u, v)));
  }
  g.net_ = std::move(net);
  return g;
}

NGon NGon::from_ranks(const std::vector<int>& ranks) {
  int n = static_cast<int>(ranks.size());
  if (n < 3) throw std::invalid_argument("an n-gon needs n >= 3");
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<LabeledEdge> edges;
  edges.reserve(n);
  for (int i = 0; i < n; ++i) {
    edges.push_back({names[i], names[(i + 1) % n], static_cast<double>(ranks[i])});
  }
  return from_network(TemporalNetwork::validate(std::move(names), edges));
}

bool is_temporal_isomorphism(const TemporalNetwork& from, const TemporalNetwork& to,
                             const std::vector<int>& map) {
  int n = from.vertex_count();
  if (n != to.vertex_count()) {
    fail(ErrorCode::SizeMismatch, "networks have different vertex counts");
  }
  if (static_cast<int>(map.size()) != n) {
    throw std::invalid_argument("vertex map has wrong size");
  }
  std::vector<char> hit(n, 0);
  for (int i : map) {
    if (i < 0 || i >= n || hit[i]) throw std::invalid_argument("map is not a bijection");
    hit[i] = 1;
  }

  for (auto [u, v] : from.edges()) {
    if (!to.find_edge(map[u], map[v])) return false;
  }

  if (from.is_ngon() && to.is_ngon()) {
    // Every temporal path of a cycle is a sub-run of a maximal increasing
    // run, so preserving each two-edge run preserves all paths.
    NGon a = NGon::from_network(from);
    const auto& cyc = a.cycle();
    for (int i = 0; i < n; ++i) {
      int x = cyc[i], y = cyc[(i + 1) % n], z = cyc[(i + 2) % n];
      int t1 = from.rank(*from.find_edge(x, y));
      int t2 = from.rank(*from.find_edge(y, z));
      int s1 = to.rank(*to.find_edge(map[x], map[y]));
      int s2 = to.rank(*to.find_edge(map[y], map[z]));
      if ((t1 < t2) != (s1 < s2)) return false;
    }
    return true;
  }

  if (n > 8) {
    fail(ErrorCode::TooLarge,
         "exhaustive path check is capped at 8 vertices for general networks");
  }
  for (const auto& p : all_temporal_paths(from)) {
    int prev_rank = 0;
    bool ok = true;
    for (std::size_t i = 1; i < p.size(); ++i) {
      auto e = to.find_edge(map[p[i - 1]], map[p[i]]);
      if (!e || to.rank(*e) <= prev_rank) {
        ok = false;
        break;
      }
      prev_rank = to.rank(*e);
    }
    if (!ok) return false;
  }
  return true;
}

std::optional<std::vector<int>> find_temporal_isomorphism(
    const TemporalNetwork& from, const TemporalNetwork& to) {
  int n = from.vertex_count();
  if (n != to.vertex_count()) return std::nullopt;

  if (from.is_ngon() && to.is_ngon()) {
    NGon a = NGon::from_network(from);
    NGon b = NGon::from_network(to);
    const auto& ca = a.cycle();
    const auto& cb = b.cycle();
    auto try_map = [&](auto&& position) -> std::optional<std::vector<int>> {
      std::vector<int> map(n);
      for (int j = 0; j < n; ++j) map[ca[j]] = cb[position(j)];
      if (is_temporal_isomorphism(from, to, map)) return map;
      return std::nullopt;
    };
    for (int r = 0; r < n; ++r) {
      if (auto m = try_map([&](int j) { return (j + r) % n; })) return m;
    }
    for (int r = 0; r < n; ++r) {
      if (auto m = try_map([&](int j) { return ((r - j) % n + n) % n; })) return m;
    }
    return std::nullopt;
  }

  if (n > 8) {
    fail(ErrorCode::TooLarge,
         "isomorphism search is capped at 8 vertices for general networks");
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (is_temporal_isomorphism(from, to, perm)) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace isotemporal
