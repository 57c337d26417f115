#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gpack/path_system.hpp"
#include "gpack/rng.hpp"

namespace gpack {

// A wavelength assignment: 1-based indices per route, 0 = unassigned (the
// algorithms' initialization sentinel). Valid when any two routes sharing an
// edge carry distinct indices.
struct Assignment {
  std::vector<int> wavelength;  // indexed by route_id
  int total = 0;                // maximal assigned index

  bool complete() const {
    return std::all_of(wavelength.begin(), wavelength.end(), [](int w) { return w > 0; });
  }
  int assigned_count() const {
    return static_cast<int>(std::count_if(wavelength.begin(), wavelength.end(), [](int w) { return w > 0; }));
  }
};

inline bool conflicts(const PathRoute& r1, const PathRoute& r2) {
  for (int e1 : r1.edge_ids)
    for (int e2 : r2.edge_ids)
      if (e1 == e2) return true;
  return false;
}

// Incremental first-fit state over one system: per-edge occupancy bitsets,
// bit k-1 set when wavelength k is in use on that edge.
class Packer {
 public:
  explicit Packer(const PathSystem& sys) : sys_(&sys), occ_(sys.topology().edge_count()) {
    asg_.wavelength.assign(sys.size(), 0);
  }

  Packer(const PathSystem& sys, const Assignment& partial) : Packer(sys) {
    if (static_cast<int>(partial.wavelength.size()) != sys.size()) {
      throw std::invalid_argument("assignment size does not match system");
    }
    for (int id = 0; id < sys.size(); ++id) {
      if (partial.wavelength[id] > 0) place(id, partial.wavelength[id]);
    }
  }

  const PathSystem& system() const { return *sys_; }
  const Assignment& assignment() const { return asg_; }

  bool fits(int route_id, int k) const {
    const std::size_t word = static_cast<std::size_t>(k - 1) >> 6;
    const std::uint64_t bit = 1ull << ((k - 1) & 63);
    for (int e : sys_->route(route_id).edge_ids) {
      if (word < occ_[e].size() && (occ_[e][word] & bit)) return false;
    }
    return true;
  }

  // Least index free on every edge of the route. Does not mutate.
  int first_fit(int route_id) const {
    const std::size_t words = static_cast<std::size_t>(asg_.total) / 64 + 1;
    scratch_.assign(words, 0);
    for (int e : sys_->route(route_id).edge_ids) {
      const auto& row = occ_[e];
      const std::size_t lim = std::min(words, row.size());
      for (std::size_t w = 0; w < lim; ++w) scratch_[w] |= row[w];
    }
    for (std::size_t w = 0; w < words; ++w) {
      if (scratch_[w] != ~0ull) {
        return static_cast<int>(w * 64 + std::countr_one(scratch_[w])) + 1;
      }
    }
    return asg_.total + 1;  // bit total is always clear in scratch
  }

  void place(int route_id, int k) {
    if (k < 1) throw std::invalid_argument("wavelength indices are 1-based");
    if (asg_.wavelength.at(route_id) != 0) throw std::invalid_argument("route already assigned");
    const std::size_t word = static_cast<std::size_t>(k - 1) >> 6;
    const std::uint64_t bit = 1ull << ((k - 1) & 63);
    for (int e : sys_->route(route_id).edge_ids) {
      if (occ_[e].size() <= word) occ_[e].resize(word + 1, 0);
      occ_[e][word] |= bit;
    }
    asg_.wavelength[route_id] = k;
    asg_.total = std::max(asg_.total, k);
  }

  int place_first_fit(int route_id) {
    int k = first_fit(route_id);
    place(route_id, k);
    return k;
  }

  bool edge_occupied(int edge_id, int k) const {
    const std::size_t word = static_cast<std::size_t>(k - 1) >> 6;
    return word < occ_[edge_id].size() && (occ_[edge_id][word] >> ((k - 1) & 63) & 1);
  }

 private:
  const PathSystem* sys_;
  Assignment asg_;
  std::vector<std::vector<std::uint64_t>> occ_;
  mutable std::vector<std::uint64_t> scratch_;
};

inline int first_fit(const PathSystem& sys, const Assignment& partial, int route_id) {
  if (partial.wavelength.at(route_id) != 0) throw std::invalid_argument("route already assigned");
  return Packer(sys, partial).first_fit(route_id);
}

// First-fit along an explicit processing order (a permutation of route ids).
inline Assignment greedy_assign(const PathSystem& sys, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != sys.size()) {
    throw std::invalid_argument("order must be a permutation of all route ids");
  }
  std::vector<bool> seen(sys.size(), false);
  for (int id : order) {
    if (id < 0 || id >= sys.size() || seen[id]) {
      throw std::invalid_argument("order must be a permutation of all route ids");
    }
    seen[id] = true;
  }
  Packer p(sys);
  for (int id : order) p.place_first_fit(id);
  return p.assignment();
}

// Maximal run of edges on which a wavelength is idle, as the node pair
// (s, t) covering edges {s,s+1}, ..., {t-1,t} of the cycle.
struct IdleBand {
  Node s = 0, t = 0;
  friend bool operator==(const IdleBand&, const IdleBand&) = default;
  friend auto operator<=>(const IdleBand&, const IdleBand&) = default;
};

struct RoundRecord {
  int length = 0;          // the round's path length
  int max_index = 0;       // maximal visited wavelength index after the round
  std::vector<std::vector<IdleBand>> idle;  // idle[k-1] = bands of wavelength k

  const std::vector<IdleBand>& bands(int k) const { return idle.at(k - 1); }
};

struct RoundTrace {
  int cycle_order = 0;
  std::vector<RoundRecord> rounds;  // in execution order (longest first)

  const RoundRecord& round_for_length(int ell) const {
    for (const RoundRecord& r : rounds)
      if (r.length == ell) return r;
    throw std::invalid_argument("no round for length " + std::to_string(ell));
  }
};

namespace detail {

// Maximal circular runs of idle edges for one wavelength; cycle edge i is
// {i, i+1 mod n}. Wavelengths visited at least once never idle everywhere.
inline std::vector<IdleBand> idle_bands_on_cycle(const Packer& p, int k, int n) {
  std::vector<bool> idle(n);
  int idle_count = 0;
  for (int e = 0; e < n; ++e) {
    idle[e] = !p.edge_occupied(e, k);
    idle_count += idle[e];
  }
  std::vector<IdleBand> bands;
  if (idle_count == 0) return bands;
  if (idle_count == n) throw std::logic_error("visited wavelength cannot be fully idle");
  for (int e = 0; e < n; ++e) {
    if (idle[e] && !idle[(e + n - 1) % n]) {
      int len = 0;
      while (idle[(e + len) % n]) ++len;
      bands.push_back({e, (e + len) % n});
    }
  }
  return bands;
}

inline RoundRecord snapshot_round(const Packer& p, int ell, int n) {
  RoundRecord rec;
  rec.length = ell;
  rec.max_index = p.assignment().total;
  rec.idle.reserve(rec.max_index);
  for (int k = 1; k <= rec.max_index; ++k) rec.idle.push_back(idle_bands_on_cycle(p, k, n));
  return rec;
}

}  // namespace detail

struct IpResult {
  PathSystem system;
  Assignment assignment;
  RoundTrace trace;
};

// Greedy first-fit over the unique shortest path system of an odd cycle, in
// descending length rounds; within a round, pairs {i, i+l} then {i-l, i} for
// i = 0..n-1, skipping pairs assigned earlier in the round.
inline IpResult intelligent_packing(int n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("odd cycle order required");
  const int m = (n - 1) / 2;
  PathSystem sys = shortest_system_odd_cycle(n);
  Packer p(sys);
  RoundTrace trace;
  trace.cycle_order = n;
  for (int ell = m; ell >= 1; --ell) {
    for (int i = 0; i < n; ++i) {
      int fwd = *sys.route_for_pair(i, (i + ell) % n);
      if (p.assignment().wavelength[fwd] == 0) p.place_first_fit(fwd);
      int bwd = *sys.route_for_pair(i, (i - ell % n + n) % n);
      if (p.assignment().wavelength[bwd] == 0) p.place_first_fit(bwd);
    }
    trace.rounds.push_back(detail::snapshot_round(p, ell, n));
  }
  return {std::move(sys), p.assignment(), std::move(trace)};
}

// Length First Packing: length classes in strictly descending order, a
// uniformly random order inside each class, first-fit per route.
inline Assignment length_first_packing(const PathSystem& sys, std::uint64_t seed) {
  std::map<int, std::vector<int>, std::greater<>> classes;
  for (const PathRoute& r : sys.routes()) classes[r.length()].push_back(r.route_id);
  std::mt19937_64 gen = rng::engine(rng::derive(seed, {rng::kLfpShuffle}));
  Packer p(sys);
  for (auto& [len, ids] : classes) {
    std::shuffle(ids.begin(), ids.end(), gen);
    for (int id : ids) p.place_first_fit(id);
  }
  return p.assignment();
}

// Random Packing: one pass over wavelengths 1, 2, ...; for each, draw
// unassigned routes uniformly without replacement and keep every draw that
// still fits the wavelength. Routes drawn while incompatible stay in the
// pool for later wavelengths.
inline Assignment random_packing(const PathSystem& sys, std::uint64_t seed) {
  std::mt19937_64 gen = rng::engine(rng::derive(seed, {rng::kRpDraw}));
  std::vector<int> pool(sys.size());
  std::iota(pool.begin(), pool.end(), 0);
  Packer p(sys);
  std::vector<int> leftover;
  for (int k = 1; !pool.empty(); ++k) {
    std::shuffle(pool.begin(), pool.end(), gen);
    leftover.clear();
    for (int id : pool) {
      if (p.fits(id, k)) {
        p.place(id, k);
      } else {
        leftover.push_back(id);
      }
    }
    pool.swap(leftover);
  }
  return p.assignment();
}

struct Violation {
  int route_a = -1, route_b = -1;
  int edge_id = -1;
  int wavelength = 0;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerifyResult {
  bool valid = true;
  std::vector<Violation> violations;
  explicit operator bool() const { return valid; }
};

// Checks the packing condition: routes sharing an edge never share a
// wavelength. Unassigned routes (index 0) do not participate.
inline VerifyResult verify(const PathSystem& sys, const Assignment& asg) {
  if (static_cast<int>(asg.wavelength.size()) != sys.size()) {
    throw std::invalid_argument("assignment size does not match system");
  }
  VerifyResult out;
  std::vector<std::vector<std::pair<int, int>>> by_edge(sys.topology().edge_count());
  for (const PathRoute& r : sys.routes()) {
    int w = asg.wavelength[r.route_id];
    if (w == 0) continue;
    if (w < 0) throw std::invalid_argument("negative wavelength index");
    for (int e : r.edge_ids) by_edge[e].emplace_back(w, r.route_id);
  }
  std::set<std::pair<int, int>> reported;
  for (int e = 0; e < static_cast<int>(by_edge.size()); ++e) {
    auto& bucket = by_edge[e];
    std::sort(bucket.begin(), bucket.end());
    for (std::size_t i = 0; i + 1 < bucket.size(); ++i) {
      for (std::size_t j = i + 1; j < bucket.size() && bucket[j].first == bucket[i].first; ++j) {
        auto pair = std::minmax(bucket[i].second, bucket[j].second);
        if (reported.emplace(pair.first, pair.second).second) {
          out.violations.push_back({pair.first, pair.second, e, bucket[i].first});
          out.valid = false;
        }
      }
    }
  }
  return out;
}

// Largest number of routes through a single edge; a clique in the conflict
// graph, hence a lower bound on any valid total.
inline int max_edge_load(const PathSystem& sys) {
  std::vector<int> load(sys.topology().edge_count(), 0);
  for (const PathRoute& r : sys.routes())
    for (int e : r.edge_ids) ++load[e];
  return load.empty() ? 0 : *std::max_element(load.begin(), load.end());
}

// The symmetric node-indexed wavelength table of an all-pairs system;
// entry (a,b) is the wavelength of the route for {a,b}, diagonal 0.
inline std::vector<std::vector<int>> gp_array(const PathSystem& sys, const Assignment& asg) {
  if (!sys.is_all_pairs()) throw std::invalid_argument("wavelength table requires an all-pairs system");
  const int n = sys.topology().node_count();
  std::vector<std::vector<int>> gp(n, std::vector<int>(n, 0));
  for (Node a = 0; a < n; ++a) {
    for (Node b = a + 1; b < n; ++b) {
      int w = asg.wavelength.at(*sys.route_for_pair(a, b));
      gp[a][b] = gp[b][a] = w;
    }
  }
  return gp;
}

}  // namespace gpack
