#pragma once

// Constructions: the crown-free family realizing the lower bound, two frozen
// Steiner triple systems, minimal hosts realizing a prescribed link, and
// seeded random generators.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "crowns/catalog.hpp"
#include "crowns/core.hpp"
#include "crowns/links.hpp"

namespace crowns {

inline int lower_bound_value(int n) { return n < 3 ? 0 : 6 * ((n - 3) / 4); }

// Three fixed vertices a,b,c plus k = (n-3)/4 disjoint 4-vertex blocks
// {x,y,z,w}; each block contributes the six edges (a,x,y), (a,z,w), (b,x,w),
// (b,y,z), (c,x,z), (c,y,w) — every pair inside a block together with every
// pair (fixed vertex, block vertex) is covered exactly once, and no edge
// joins two blocks, which leaves the result crown-free.
inline LinearThreeGraph lower_bound_construction(int n) {
  if (n < 7) throw TooFewVertices("lower_bound_construction needs at least 7 vertices");
  const int a = 0, b = 1, c = 2;
  std::vector<Triple> edges;
  int k = (n - 3) / 4;
  for (int i = 0; i < k; ++i) {
    int x = 3 + 4 * i, y = x + 1, z = x + 2, w = x + 3;
    edges.emplace_back(a, x, y);
    edges.emplace_back(a, z, w);
    edges.emplace_back(b, x, w);
    edges.emplace_back(b, y, z);
    edges.emplace_back(c, x, z);
    edges.emplace_back(c, y, w);
  }
  return LinearThreeGraph::from_edges(n, edges);
}

// The unique 7-point system covering every pair exactly once.
inline LinearThreeGraph fano() {
  return LinearThreeGraph::from_edges(
      7, {Triple(0, 1, 2), Triple(0, 3, 4), Triple(0, 5, 6), Triple(1, 3, 5), Triple(1, 4, 6),
          Triple(2, 3, 6), Triple(2, 4, 5)});
}

// The 9-point system covering every pair exactly once: rows, columns, and
// both diagonal parallel classes of a 3x3 grid.
inline LinearThreeGraph sts9() {
  return LinearThreeGraph::from_edges(
      9, {Triple(0, 1, 2), Triple(3, 4, 5), Triple(6, 7, 8), Triple(0, 3, 6), Triple(1, 4, 7),
          Triple(2, 5, 8), Triple(0, 4, 8), Triple(1, 5, 6), Triple(2, 3, 7), Triple(0, 5, 7),
          Triple(1, 3, 8), Triple(2, 4, 6)});
}

struct MinimalHost {
  LinearThreeGraph host;
  Triple base;
};

// Smallest host realizing the given colored graph as the link of a base
// edge: base (0,1,2), link vertex v becomes host vertex v+3, and a link edge
// (x,y) of color i becomes the host edge {x+3, y+3, i}.  Linearity follows
// from the link being simple with matching color classes.
inline MinimalHost minimal_host(const ColoredLinkGraph& g) {
  Triple base(0, 1, 2);
  int max_v = -1;
  std::vector<Triple> edges = {base};
  for (const ColoredEdge& e : g.edges()) {
    edges.emplace_back(e.u + 3, e.v + 3, static_cast<int>(e.color));
    max_v = std::max(max_v, static_cast<int>(e.v));
  }
  MinimalHost mh{LinearThreeGraph::from_edges(max_v + 4, edges), base};
  ColoredLinkGraph back = link_graph(mh.host, mh.base);
  std::vector<ColoredEdge> shifted;
  for (const ColoredEdge& e : g.edges()) shifted.emplace_back(e.u + 3, e.v + 3, e.color);
  std::sort(shifted.begin(), shifted.end());
  if (back.edges() != shifted) throw Error("internal: minimal host does not realize the link");
  return mh;
}

inline MinimalHost minimal_host(const CatalogGraph& cg) { return minimal_host(cg.graph); }

namespace detail {

inline bool addable(const LinearThreeGraph& g, int a, int b, int c) {
  return !g.pair_covered(a, b) && !g.pair_covered(a, c) && !g.pair_covered(b, c);
}

}  // namespace detail

// Uniform-ish random linear 3-graph with exactly m edges, by rejection
// sampling with restarts.  Deterministic for a fixed seed.
inline LinearThreeGraph random_linear(int n, int m, std::uint64_t seed) {
  if (m < 0 || n < 0) throw InfeasibleRequest("negative size");
  if (m == 0) return LinearThreeGraph(n);
  if (n < 3 || static_cast<long long>(m) * 3 > static_cast<long long>(n) * (n - 1) / 2)
    throw InfeasibleRequest("no linear 3-graph on " + std::to_string(n) + " vertices has " +
                            std::to_string(m) + " edges");
  std::mt19937_64 rng(seed);
  auto pick = [&](int k) { return static_cast<int>(rng() % static_cast<std::uint64_t>(k)); };
  for (int restart = 0; restart < 400; ++restart) {
    LinearThreeGraph g(n);
    int stall = 0;
    while (g.edge_count() < m && stall < 400) {
      int a = pick(n), b = pick(n), c = pick(n);
      if (a == b || a == c || b == c || !detail::addable(g, a, b, c)) {
        ++stall;
        continue;
      }
      g = g.add_edge(Triple(a, b, c));
      stall = 0;
    }
    if (g.edge_count() == m) return g;
  }
  throw InfeasibleRequest("could not reach " + std::to_string(m) + " edges on " +
                          std::to_string(n) + " vertices");
}

// Random linear 3-graph with minimum degree at least d, or nullopt when the
// sampler fails repeatedly.  Grows edges through a lowest-degree vertex
// until every degree reaches d.  Deterministic for a fixed seed.
inline std::optional<LinearThreeGraph> random_min_degree(int n, int d, std::uint64_t seed) {
  if (n < 0 || d < 0) return std::nullopt;
  if (d == 0) return LinearThreeGraph(n);
  if (n < 3 || d > (n - 1) / 2) return std::nullopt;  // each edge at v uses two fresh partners
  std::mt19937_64 rng(seed);
  auto pick = [&](int k) { return static_cast<int>(rng() % static_cast<std::uint64_t>(k)); };
  for (int restart = 0; restart < 100; ++restart) {
    LinearThreeGraph g(n);
    bool stuck = false;
    while (!stuck) {
      int v = -1;
      for (int u = 0; u < n; ++u)
        if (g.degree(u) < d && (v < 0 || g.degree(u) < g.degree(v))) v = u;
      if (v < 0) return g;  // every vertex reached degree d
      int tries = 0;
      for (; tries < 600; ++tries) {
        int x = pick(n), y = pick(n);
        if (x == y || x == v || y == v) continue;
        if (!detail::addable(g, v, x, y)) continue;
        g = g.add_edge(Triple(v, x, y));
        break;
      }
      stuck = tries == 600;
    }
  }
  return std::nullopt;
}

}  // namespace crowns
