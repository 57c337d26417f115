#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gpack/rng.hpp"
#include "gpack/topology.hpp"

namespace gpack {

// One routed node pair. nodes lists the traversal order (so nodes.front()
// and nodes.back() are the endpoints of the chosen orientation); edge_ids
// index into the host topology's edge list.
struct PathRoute {
  int route_id = -1;
  Node a = 0, b = 0;  // unordered pair, a < b
  std::vector<Node> nodes;
  std::vector<int> edge_ids;
  int length() const { return static_cast<int>(edge_ids.size()); }
};

// How antipodal ties on even cycles are broken. Non-antipodal pairs always
// take their unique shorter arc.
struct TiePolicy {
  enum class Kind { alternating, random, explicit_list };
  Kind kind = Kind::alternating;
  std::uint64_t seed = 0;
  // choices[i] picks the route of antipodal pair {i, i+n/2}, i = 0..n/2-1:
  // 0 -> arc <i, i+n/2>, 1 -> arc <i+n/2, i>.
  std::vector<int> choices;

  static TiePolicy alternating() { return {}; }
  static TiePolicy random(std::uint64_t seed) {
    TiePolicy p;
    p.kind = Kind::random;
    p.seed = seed;
    return p;
  }
  static TiePolicy explicit_list(std::vector<int> choices) {
    TiePolicy p;
    p.kind = Kind::explicit_list;
    p.choices = std::move(choices);
    return p;
  }
};

// A collection of routes over one topology: one per demanded pair. The
// classical model has exactly one route per unordered pair; the demand model
// allows duplicates (distinct routes that conflict with each other).
class PathSystem {
 public:
  explicit PathSystem(Topology topo) : topo_(std::move(topo)) {}

  const Topology& topology() const { return topo_; }
  const std::vector<PathRoute>& routes() const { return routes_; }
  const PathRoute& route(int route_id) const { return routes_.at(route_id); }
  int size() const { return static_cast<int>(routes_.size()); }
  bool empty() const { return routes_.empty(); }

  // Appends a route given its node traversal; validates the path property.
  int add_route(const std::vector<Node>& nodes) {
    if (nodes.size() < 2) throw std::invalid_argument("route needs at least two nodes");
    PathRoute r;
    r.route_id = static_cast<int>(routes_.size());
    r.nodes = nodes;
    r.edge_ids.reserve(nodes.size() - 1);
    std::vector<bool> seen(topo_.node_count(), false);
    for (Node x : nodes) {
      if (x < 0 || x >= topo_.node_count()) throw std::invalid_argument("route node out of range");
      if (seen[x]) throw std::invalid_argument("route revisits a node");
      seen[x] = true;
    }
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      r.edge_ids.push_back(topo_.edge_index(nodes[i], nodes[i + 1]));
    }
    r.a = std::min(nodes.front(), nodes.back());
    r.b = std::max(nodes.front(), nodes.back());
    long long k = pair_key(r.a, r.b);
    if (!pair_index_.emplace(k, r.route_id).second) has_duplicate_pairs_ = true;
    routes_.push_back(std::move(r));
    return routes_.back().route_id;
  }

  // First route for the unordered pair {a,b}, if any.
  std::optional<int> route_for_pair(Node a, Node b) const {
    auto it = pair_index_.find(pair_key(std::min(a, b), std::max(a, b)));
    if (it == pair_index_.end()) return std::nullopt;
    return it->second;
  }

  bool has_duplicate_pairs() const { return has_duplicate_pairs_; }

  // True when the system is the classical all-pairs model: C(n,2) routes,
  // one per distinct pair.
  bool is_all_pairs() const {
    long long n = topo_.node_count();
    return !has_duplicate_pairs_ && static_cast<long long>(routes_.size()) == n * (n - 1) / 2;
  }

 private:
  static long long pair_key(Node a, Node b) {
    return static_cast<long long>(a) << 32 | static_cast<unsigned>(b);
  }

  Topology topo_;
  std::vector<PathRoute> routes_;
  std::unordered_map<long long, int> pair_index_;
  bool has_duplicate_pairs_ = false;
};

namespace detail {

inline std::vector<Node> arc_nodes(int n, Node a, Node b) {
  std::vector<Node> nodes;
  nodes.reserve(arc_length(n, a, b) + 1);
  nodes.push_back(a);
  for (Node x = a; x != b; x = (x + 1) % n) nodes.push_back((x + 1) % n);
  return nodes;
}

// Shortest path by BFS, deterministic via smallest-id predecessors.
inline std::vector<Node> bfs_path(const Topology& topo, Node a, Node b) {
  std::vector<int> prev(topo.node_count(), -2);
  std::queue<Node> q;
  prev[a] = -1;
  q.push(a);
  while (!q.empty() && prev[b] == -2) {
    Node u = q.front();
    q.pop();
    for (Node w : topo.neighbors(u)) {
      if (prev[w] == -2) {
        prev[w] = u;
        q.push(w);
      }
    }
  }
  if (prev[b] == -2) {
    throw std::invalid_argument("no path between " + std::to_string(a) + " and " + std::to_string(b));
  }
  std::vector<Node> nodes;
  for (Node x = b; x != -1; x = prev[x]) nodes.push_back(x);
  std::reverse(nodes.begin(), nodes.end());
  return nodes;
}

}  // namespace detail

// Routes one shortest path per demand over the given topology. On even
// cycles, antipodal ties are broken per policy, independently per demand;
// random-policy coins are consumed in demand order.
inline PathSystem route_demands(const Topology& topo,
                                const std::vector<std::pair<Node, Node>>& demands,
                                const TiePolicy& policy = TiePolicy::alternating()) {
  const int n = topo.node_count();
  const int half = n / 2;
  if (topo.kind() == TopologyKind::cycle && n % 2 == 0 &&
      policy.kind == TiePolicy::Kind::explicit_list &&
      static_cast<int>(policy.choices.size()) != half) {
    throw std::invalid_argument("explicit tie list must have one choice per antipodal pair");
  }
  PathSystem sys(topo);
  std::mt19937_64 coin = rng::engine(rng::derive(policy.seed, {rng::kTieBreak}));
  for (const auto& [da, db] : demands) {
    if (da == db) throw std::invalid_argument("demand endpoints must be distinct");
    if (da < 0 || db < 0 || da >= n || db >= n) throw std::invalid_argument("demand endpoint out of range");
    if (topo.kind() == TopologyKind::cycle) {
      int fwd = arc_length(n, da, db);
      if (2 * fwd < n) {
        sys.add_route(detail::arc_nodes(n, da, db));
      } else if (2 * fwd > n) {
        sys.add_route(detail::arc_nodes(n, db, da));
      } else {
        // antipodal: two shortest arcs
        int i = std::min(da, db) % half;
        bool reversed;
        switch (policy.kind) {
          case TiePolicy::Kind::alternating: reversed = (i % 2 == 1); break;
          case TiePolicy::Kind::random: reversed = (coin() & 1) != 0; break;
          default: reversed = policy.choices[i] != 0; break;
        }
        Node s = std::min(da, db);
        if (reversed) {
          sys.add_route(detail::arc_nodes(n, (s + half) % n, s));
        } else {
          sys.add_route(detail::arc_nodes(n, s, (s + half) % n));
        }
      }
    } else {
      sys.add_route(detail::bfs_path(topo, da, db));
    }
  }
  return sys;
}

inline std::vector<std::pair<Node, Node>> all_pairs(int n) {
  std::vector<std::pair<Node, Node>> out;
  out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (Node a = 0; a < n; ++a)
    for (Node b = a + 1; b < n; ++b) out.emplace_back(a, b);
  return out;
}

// The unique shortest path system of an odd cycle: pair {a,b} takes <a,b>
// when (a-b) mod n exceeds (n-1)/2, else <b,a>.
inline PathSystem shortest_system_odd_cycle(int n) {
  if (n % 2 == 0) throw std::invalid_argument("odd cycle order required");
  return route_demands(Topology::cycle(n), all_pairs(n));
}

// A shortest path system of an even cycle; the m antipodal pairs are routed
// per tie policy. The alternating policy starts each diametral arc at
// node i when i is even and at i + n/2 when i is odd, the choice the ideal
// construction uses.
inline PathSystem shortest_system_even_cycle(int n, const TiePolicy& policy = TiePolicy::alternating()) {
  if (n % 2 == 1) throw std::invalid_argument("even cycle order required");
  return route_demands(Topology::cycle(n), all_pairs(n), policy);
}

// The unique path system of a chain.
inline PathSystem chain_system(int n) {
  return route_demands(Topology::chain(n), all_pairs(n));
}

inline long long total_length(const PathSystem& sys) {
  long long sum = 0;
  for (const PathRoute& r : sys.routes()) sum += r.length();
  return sum;
}

// File format: header "topology <kind> <n>", then one route per line as
// "a b : u-v u-v ...". General-kind files reconstruct the host graph as the
// union of route edges.
inline void save_path_system(std::ostream& os, const PathSystem& sys) {
  os << "topology " << to_string(sys.topology().kind()) << ' ' << sys.topology().node_count() << '\n';
  for (const PathRoute& r : sys.routes()) {
    os << r.a << ' ' << r.b << " :";
    for (std::size_t i = 0; i + 1 < r.nodes.size(); ++i) {
      os << ' ' << r.nodes[i] << '-' << r.nodes[i + 1];
    }
    os << '\n';
  }
}

inline PathSystem load_path_system(std::istream& is) {
  std::string header, kind_token;
  int n = 0;
  if (!(is >> header >> kind_token >> n) || header != "topology") {
    throw std::invalid_argument("bad path-system header (want: topology <kind> <n>)");
  }
  TopologyKind kind = topology_kind_from_string(kind_token);
  std::string rest;
  std::getline(is, rest);

  struct Line {
    Node a, b;
    std::vector<Node> nodes;
  };
  std::vector<Line> lines;
  std::string text;
  while (std::getline(is, text)) {
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(text);
    Line line;
    char colon;
    if (!(ls >> line.a >> line.b >> colon) || colon != ':') {
      throw std::invalid_argument("bad route line: " + text);
    }
    std::string tok;
    while (ls >> tok) {
      auto dash = tok.find('-');
      if (dash == std::string::npos) throw std::invalid_argument("bad edge token: " + tok);
      Node u = std::stoi(tok.substr(0, dash));
      Node v = std::stoi(tok.substr(dash + 1));
      if (line.nodes.empty()) {
        line.nodes.push_back(u);
      } else if (line.nodes.back() != u) {
        throw std::invalid_argument("edge tokens do not chain: " + text);
      }
      line.nodes.push_back(v);
    }
    if (line.nodes.size() < 2) throw std::invalid_argument("route without edges: " + text);
    lines.push_back(std::move(line));
  }

  Topology topo = [&] {
    switch (kind) {
      case TopologyKind::cycle: return Topology::cycle(n);
      case TopologyKind::chain: return Topology::chain(n);
      default: {
        std::set<Edge> edges;
        for (const Line& l : lines)
          for (std::size_t i = 0; i + 1 < l.nodes.size(); ++i) edges.emplace(l.nodes[i], l.nodes[i + 1]);
        return Topology::general(n, {edges.begin(), edges.end()});
      }
    }
  }();

  PathSystem sys(std::move(topo));
  for (const Line& l : lines) {
    int id = sys.add_route(l.nodes);
    const PathRoute& r = sys.route(id);
    if (r.a != std::min(l.a, l.b) || r.b != std::max(l.a, l.b)) {
      throw std::invalid_argument("route endpoints do not match its edges");
    }
  }
  return sys;
}

}  // namespace gpack
