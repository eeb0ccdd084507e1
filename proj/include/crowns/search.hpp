#pragma once

// Exact and heuristic computation of the maximum number of edges in a
// crown-free linear 3-graph on n vertices.
//
// Exact mode runs an orderly generation: every node is a canonically
// labeled crown-free graph, children extend the edge list by a triple whose
// colex key exceeds every existing key, and a child survives only when its
// labeling still realizes its canonical code.  Removing the largest-key edge
// of a canonically labeled graph leaves a canonically labeled graph, so
// each isomorphism class is visited exactly once.  Results of a completed
// exact run (best value and witness) are independent of thread count and
// seed: workers explore disjoint subtrees and the merge takes the maximum
// edge count, breaking ties by the lexicographically least serialized
// witness.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "crowns/canonical.hpp"
#include "crowns/constructions.hpp"
#include "crowns/core.hpp"
#include "crowns/links.hpp"

namespace crowns {

enum class SearchMode : std::uint8_t { Exact = 0, Heuristic };

struct SearchConfig {
  int n = 0;
  SearchMode mode = SearchMode::Exact;
  std::vector<DegreeVector> restrictions;  // forbidden degree-vector dominations
  std::int64_t node_budget = 100'000'000;
  double time_budget_seconds = 600.0;
  std::uint64_t seed = 0;
  int threads = 1;
  // Called on every accepted node (single-threaded phases call it directly;
  // workers serialize calls).  For instrumentation and tests.
  std::function<void(const LinearThreeGraph&)> node_hook;
};

struct SearchResult {
  int n = 0;
  int best = 0;
  LinearThreeGraph witness{0};
  bool exact = false;
  std::int64_t nodes_explored = 0;
  double seconds = 0.0;
};

struct BudgetExceeded : Error {
  SearchResult partial;
  explicit BudgetExceeded(SearchResult r)
      : Error("search budget exceeded after " + std::to_string(r.nodes_explored) + " nodes"),
        partial(std::move(r)) {}
};

// 6*floor((n-3)/4) <= ex(n) <= 2n; the lower bound needs a realized witness.
inline bool verify_bounds(const SearchResult& r) {
  if (r.best > 2 * r.n) return false;
  bool lower_applies = r.n >= 7 && (r.exact || r.witness.edge_count() == r.best);
  if (lower_applies && r.best < lower_bound_value(r.n)) return false;
  return true;
}

namespace detail {

// Adding edge t to a crown-free graph can only create crowns through t, as
// base or as jewel; a jewel's base meets it in exactly one vertex.
inline bool creates_crown(const LinearThreeGraph& g, const Triple& t) {
  if (crown_with_base(g, t)) return true;
  for (const Triple& e : g.edges())
    if (e.overlap(t) == 1 && crown_with_base(g, e)) return true;
  return false;
}

// Would adding t give some edge a degree vector dominating a restriction?
// Only edges through t's endpoints change, and t itself appears.
inline bool breaks_restrictions(const LinearThreeGraph& g, const Triple& t,
                                const std::vector<DegreeVector>& restrictions) {
  if (restrictions.empty()) return false;
  auto deg_after = [&](int v) { return g.degree(v) + (t.contains(v) ? 1 : 0); };
  auto dominated = [&](const Triple& f) {
    DegreeVector dv(deg_after(f[0]), deg_after(f[1]), deg_after(f[2]));
    for (const DegreeVector& r : restrictions)
      if (dominates(dv, r)) return true;
    return false;
  };
  if (dominated(t)) return true;
  for (const Triple& f : g.edges())
    if (f.overlap(t) > 0 && dominated(f)) return true;
  return false;
}

class ExactEngine {
 public:
  explicit ExactEngine(const SearchConfig& cfg)
      : cfg_(cfg),
        start_(std::chrono::steady_clock::now()),
        pair_count_(cfg.n * (cfg.n - 1) / 2) {
    for (int c = 2; c < cfg.n; ++c)
      for (int b = 1; b < c; ++b)
        for (int a = 0; a < b; ++a) triples_.emplace_back(a, b, c);  // colex-ascending
    best_.store(0);
  }

  // Runs to completion or until a budget trips; fills result_.
  SearchResult run() {
    // Seed with the block construction when it fits the restrictions.
    if (cfg_.n >= 7) {
      LinearThreeGraph seed = lower_bound_construction(cfg_.n);
      bool feasible = true;
      for (const Triple& f : seed.edges()) {
        DegreeVector dv = seed.degree_vector(f);
        for (const DegreeVector& r : cfg_.restrictions)
          if (dominates(dv, r)) feasible = false;
      }
      if (feasible) {
        best_.store(seed.edge_count());
        pool_best_ = seed.edge_count();
        pool_witness_ = serialize(seed);
      }
    }
    if (pool_witness_.empty()) {
      pool_best_ = 0;
      pool_witness_ = serialize(LinearThreeGraph(cfg_.n));
    }

    // Phase 1: serial expansion down to the handoff depth, collecting
    // subtree roots (graphs with exactly `kHandoffDepth` edges).
    LinearThreeGraph root(cfg_.n);
    Local local;
    expand(root, -1, 0, &local, true);
    merge_local(local);

    // Phase 2: parallel, one isolated traversal per collected root.
    if (!stopped() && !roots_.empty()) {
      int nthreads = std::max(1, cfg_.threads);
      std::vector<Local> locals(static_cast<std::size_t>(nthreads));
      std::atomic<std::size_t> next{0};
      auto work = [&](int w) {
        Local& mine = locals[static_cast<std::size_t>(w)];
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= roots_.size() || stopped()) break;
          LinearThreeGraph g = parse(roots_[i].first);
          expand(g, roots_[i].second, kHandoffDepth, &mine, false);
        }
      };
      if (nthreads == 1) {
        work(0);
      } else {
        std::vector<std::thread> ts;
        for (int w = 0; w < nthreads; ++w) ts.emplace_back(work, w);
        for (auto& t : ts) t.join();
      }
      for (const Local& l : locals) merge_local(l);
    }

    SearchResult r;
    r.n = cfg_.n;
    r.best = pool_best_;
    r.witness = parse(pool_witness_);
    r.nodes_explored = nodes_.load();
    r.exact = !stopped();
    r.seconds = elapsed();
    return r;
  }

 private:
  static constexpr int kHandoffDepth = 4;

  struct Local {
    int best = -1;
    std::string witness;  // lexicographically least serialization at `best`
    void offer(int m, const LinearThreeGraph& g) {
      if (m < best) return;
      std::string s = serialize(g);
      if (m > best || s < witness) {
        best = m;
        witness = std::move(s);
      }
    }
  };

  void merge_local(const Local& l) {
    if (l.best < 0) return;
    if (l.best > pool_best_ || (l.best == pool_best_ && l.witness < pool_witness_)) {
      pool_best_ = l.best;
      pool_witness_ = l.witness;
    }
  }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  bool stopped() const { return stop_.load(std::memory_order_relaxed); }

  // Accepted-node bookkeeping; returns false when a budget trips.
  bool visit(const LinearThreeGraph& g, Local* local) {
    std::int64_t id = nodes_.fetch_add(1) + 1;
    if (id > cfg_.node_budget) {
      stop_.store(true);
      return false;
    }
    if ((id & 0xff) == 0 && elapsed() > cfg_.time_budget_seconds) {
      stop_.store(true);
      return false;
    }
    if (cfg_.node_hook) {
      std::lock_guard<std::mutex> lock(hook_mutex_);
      cfg_.node_hook(g);
    }
    int m = g.edge_count();
    if (m >= local->best) local->offer(m, g);
    int cur = best_.load(std::memory_order_relaxed);
    while (m > cur && !best_.compare_exchange_weak(cur, m)) {
    }
    return true;
  }

  // Upper bound on the edges any extension of an m-edge graph can reach.
  int capacity_bound(int m) const {
    int by_pairs = m + (pair_count_ - 3 * m) / 3;
    return std::min(2 * cfg_.n, by_pairs);
  }

  void expand(const LinearThreeGraph& g, int last_idx, int depth, Local* local,
              bool collecting) {
    if (collecting && depth == kHandoffDepth) {
      roots_.emplace_back(serialize(g), last_idx);  // visited by its worker
      return;
    }
    if (!visit(g, local)) return;
    int m = g.edge_count();
    if (capacity_bound(m + 1) < best_.load(std::memory_order_relaxed)) return;
    for (std::size_t idx = static_cast<std::size_t>(last_idx + 1); idx < triples_.size();
         ++idx) {
      if (stopped()) return;
      const Triple& t = triples_[idx];
      if (g.pair_covered(t[0], t[1]) || g.pair_covered(t[0], t[2]) ||
          g.pair_covered(t[1], t[2]))
        continue;
      if (breaks_restrictions(g, t, cfg_.restrictions)) continue;
      LinearThreeGraph child = g.add_edge(t);
      if (creates_crown(child, t)) continue;
      if (!is_canonically_labeled(child)) continue;
      expand(child, static_cast<int>(idx), depth + 1, local, collecting);
    }
  }

  const SearchConfig& cfg_;
  std::chrono::steady_clock::time_point start_;
  int pair_count_;
  std::vector<Triple> triples_;
  std::vector<std::pair<std::string, int>> roots_;  // (serialized graph, last index)
  std::atomic<std::int64_t> nodes_{0};
  std::atomic<int> best_{0};
  std::atomic<bool> stop_{false};
  std::mutex hook_mutex_;
  int pool_best_ = -1;
  std::string pool_witness_;
};

inline SearchResult heuristic_search(const SearchConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  std::mt19937_64 rng(cfg.seed);
  std::vector<Triple> triples;
  for (int c = 2; c < cfg.n; ++c)
    for (int b = 1; b < c; ++b)
      for (int a = 0; a < b; ++a) triples.emplace_back(a, b, c);

  auto admissible = [&](const LinearThreeGraph& g, const Triple& t) {
    if (g.pair_covered(t[0], t[1]) || g.pair_covered(t[0], t[2]) ||
        g.pair_covered(t[1], t[2]))
      return false;
    if (detail::breaks_restrictions(g, t, cfg.restrictions)) return false;
    return true;
  };

  LinearThreeGraph cur(cfg.n);
  std::int64_t accepted = 0;
  if (cfg.n >= 7) {
    LinearThreeGraph seed = lower_bound_construction(cfg.n);
    bool feasible = true;
    for (const Triple& f : seed.edges()) {
      DegreeVector dv = seed.degree_vector(f);
      for (const DegreeVector& r : cfg.restrictions)
        if (dominates(dv, r)) feasible = false;
    }
    if (feasible) cur = seed;
  }

  int best_val = cur.edge_count();
  std::string best_ser = serialize(cur);
  std::vector<std::size_t> order(triples.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  const int iterations = 60;
  for (int it = 0; it < iterations; ++it) {
    if (elapsed() > cfg.time_budget_seconds || accepted >= cfg.node_budget) break;
    // Greedy fill in a fresh random order.
    for (std::size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[rng() % i]);
    for (std::size_t i : order) {
      const Triple& t = triples[i];
      if (!admissible(cur, t)) continue;
      LinearThreeGraph next = cur.add_edge(t);
      if (detail::creates_crown(next, t)) continue;
      cur = std::move(next);
      ++accepted;
    }
    if (cur.edge_count() > best_val) {
      best_val = cur.edge_count();
      best_ser = serialize(cur);
    }
    // Perturb: drop a random edge and refill next round.
    if (cur.edge_count() > 0) {
      int k = static_cast<int>(rng() % static_cast<std::uint64_t>(cur.edge_count()));
      cur = cur.remove_edge(cur.edges()[static_cast<std::size_t>(k)]);
    }
  }

  SearchResult r;
  r.n = cfg.n;
  r.best = best_val;
  r.witness = parse(best_ser);
  r.exact = false;
  r.nodes_explored = accepted;
  r.seconds = elapsed();
  return r;
}

}  // namespace detail

// Maximum edge count of a crown-free linear 3-graph on cfg.n vertices
// (subject to cfg.restrictions), with witness.  Exact mode throws
// BudgetExceeded carrying the best-so-far result when a budget trips.
inline SearchResult ex_crown(const SearchConfig& cfg) {
  if (cfg.n < 0 || cfg.n > kMaxVertices)
    throw InfeasibleRequest("vertex count out of range: " + std::to_string(cfg.n));
  if (cfg.node_budget <= 0 || cfg.time_budget_seconds <= 0)
    throw Error("search budgets must be positive");
  if (cfg.mode == SearchMode::Heuristic) return detail::heuristic_search(cfg);
  detail::ExactEngine engine(cfg);
  SearchResult r = engine.run();
  if (!r.exact) throw BudgetExceeded(std::move(r));
  return r;
}

// ex_crown under the two forbidden degree-vector dominations <4,4,3> and
// <5,4,2>.
inline SearchResult ex_restricted(SearchConfig cfg) {
  cfg.restrictions = {DegreeVector(4, 4, 3), DegreeVector(5, 4, 2)};
  return ex_crown(cfg);
}

}  // namespace crowns
