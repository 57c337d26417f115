#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gpack {

using Node = int;

// Undirected edge, canonically stored with u < v.
struct Edge {
  Node u = 0;
  Node v = 0;
  Edge() = default;
  Edge(Node a, Node b) : u(std::min(a, b)), v(std::max(a, b)) {}
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class TopologyKind { cycle, chain, general };

inline std::string to_string(TopologyKind k) {
  switch (k) {
    case TopologyKind::cycle: return "cycle";
    case TopologyKind::chain: return "chain";
    case TopologyKind::general: return "general";
  }
  return "?";
}

inline TopologyKind topology_kind_from_string(const std::string& s) {
  if (s == "cycle") return TopologyKind::cycle;
  if (s == "chain") return TopologyKind::chain;
  if (s == "general") return TopologyKind::general;
  throw std::invalid_argument("unknown topology kind: " + s);
}

// A connected simple graph. Nodes are dense integers 0..n-1. Edge ids follow
// the order of edges(): for a cycle, edge i is {i, (i+1) mod n}; for a chain,
// edge i is {i, i+1}; general graphs index their edge list in sorted order.
class Topology {
 public:
  static Topology cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 nodes");
    Topology t;
    t.kind_ = TopologyKind::cycle;
    t.n_ = n;
    t.edges_.reserve(n);
    for (int i = 0; i < n; ++i) t.edges_.emplace_back(i, (i + 1) % n);
    t.build_adjacency();
    return t;
  }

  static Topology chain(int n) {
    if (n < 2) throw std::invalid_argument("chain needs at least 2 nodes");
    Topology t;
    t.kind_ = TopologyKind::chain;
    t.n_ = n;
    t.edges_.reserve(n - 1);
    for (int i = 0; i + 1 < n; ++i) t.edges_.emplace_back(i, i + 1);
    t.build_adjacency();
    return t;
  }

  static Topology general(int n, std::vector<Edge> edges) {
    if (n < 1) throw std::invalid_argument("graph needs at least 1 node");
    std::set<Edge> seen;
    for (const Edge& e : edges) {
      if (e.u == e.v) throw std::invalid_argument("loops are not allowed");
      if (e.u < 0 || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
      if (!seen.insert(e).second) throw std::invalid_argument("duplicate edge");
    }
    Topology t;
    t.kind_ = TopologyKind::general;
    t.n_ = n;
    t.edges_.assign(seen.begin(), seen.end());
    t.build_adjacency();
    if (!t.connected()) throw std::invalid_argument("graph must be connected");
    return t;
  }

  TopologyKind kind() const { return kind_; }
  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Node>& neighbors(Node u) const { return adj_.at(u); }

  bool has_edge(Node a, Node b) const { return find_edge(a, b) >= 0; }

  int edge_index(Node a, Node b) const {
    int id = find_edge(a, b);
    if (id < 0) {
      throw std::invalid_argument("no edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    }
    return id;
  }

  // Text format: first line "kind n"; general graphs follow with one
  // "u v" line per edge.
  void save(std::ostream& os) const {
    os << to_string(kind_) << ' ' << n_ << '\n';
    if (kind_ == TopologyKind::general) {
      for (const Edge& e : edges_) os << e.u << ' ' << e.v << '\n';
    }
  }

  static Topology load(std::istream& is) {
    std::string kind_token;
    int n = 0;
    if (!(is >> kind_token >> n)) throw std::invalid_argument("bad topology header");
    TopologyKind kind = topology_kind_from_string(kind_token);
    if (kind == TopologyKind::cycle) return cycle(n);
    if (kind == TopologyKind::chain) return chain(n);
    std::vector<Edge> edges;
    Node u, v;
    while (is >> u >> v) edges.emplace_back(u, v);
    return general(n, std::move(edges));
  }

 private:
  int find_edge(Node a, Node b) const {
    if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) return -1;
    switch (kind_) {
      case TopologyKind::cycle:
        if ((a + 1) % n_ == b) return a;
        if ((b + 1) % n_ == a) return b;
        return -1;
      case TopologyKind::chain:
        if (a + 1 == b) return a;
        if (b + 1 == a) return b;
        return -1;
      case TopologyKind::general: {
        auto it = edge_ids_.find(key(std::min(a, b), std::max(a, b)));
        return it == edge_ids_.end() ? -1 : it->second;
      }
    }
    return -1;
  }

  void build_adjacency() {
    adj_.assign(n_, {});
    for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
      adj_[edges_[id].u].push_back(edges_[id].v);
      adj_[edges_[id].v].push_back(edges_[id].u);
      if (kind_ == TopologyKind::general) edge_ids_.emplace(key(edges_[id].u, edges_[id].v), id);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  bool connected() const {
    std::vector<bool> seen(n_, false);
    std::queue<Node> q;
    q.push(0);
    seen[0] = true;
    int reached = 1;
    while (!q.empty()) {
      Node u = q.front();
      q.pop();
      for (Node w : adj_[u]) {
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          q.push(w);
        }
      }
    }
    return reached == n_;
  }

  static long long key(Node u, Node v) { return static_cast<long long>(u) << 32 | static_cast<unsigned>(v); }

  TopologyKind kind_ = TopologyKind::general;
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Node>> adj_;
  std::unordered_map<long long, int> edge_ids_;
};

// Length of the clockwise arc from a to b on an n-cycle: (b - a) mod n.
inline int arc_length(int n, Node a, Node b) {
  int d = (b - a) % n;
  return d < 0 ? d + n : d;
}

// The clockwise arc <a,b>: edges {a,a+1}, {a+1,a+2}, ..., {b-1,b} (mod n).
inline std::vector<Edge> arc_edges(int n, Node a, Node b) {
  if (n < 3) throw std::invalid_argument("arc requires a cycle of at least 3 nodes");
  a = ((a % n) + n) % n;
  b = ((b % n) + n) % n;
  if (a == b) throw std::invalid_argument("empty arc: endpoints coincide");
  std::vector<Edge> out;
  out.reserve(arc_length(n, a, b));
  for (Node x = a; x != b; x = (x + 1) % n) out.emplace_back(x, (x + 1) % n);
  return out;
}

}  // namespace gpack
