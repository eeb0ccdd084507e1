#pragma once

// Catalog of the extremal rainbow-free colored graphs.
//
// G1..G5 are the five colored graphs, up to isomorphism and color
// permutation, that arise as a union of three 3-edge matchings (one per
// color) with no rainbow matching.  enumerate_444() re-derives that list
// from scratch; classify_444() names a given graph.  G6 is the unique
// obstruction shape showing up for class sizes (3,3,2): two vertex-disjoint
// 4-cycles.

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "crowns/core.hpp"
#include "crowns/links.hpp"

namespace crowns {

enum class CatalogName : std::uint8_t { G1 = 0, G2, G3, G4, G5, G6 };

inline std::string to_string(CatalogName n) {
  return std::string("G") + static_cast<char>('1' + static_cast<int>(n));
}

inline CatalogName parse_catalog_name(const std::string& s) {
  for (int i = 0; i < 6; ++i) {
    CatalogName n = static_cast<CatalogName>(i);
    if (s == to_string(n)) return n;
  }
  throw UnknownName("unknown catalog graph: " + s);
}

struct CatalogGraph {
  CatalogName name;
  ColoredLinkGraph graph;
  std::string source_note;
};

struct ColoredCanonicalCode {
  std::string bytes;
  auto operator<=>(const ColoredCanonicalCode&) const = default;
};

namespace detail {

// Minimum-code search over relabelings of a colored pair graph, mirroring
// TripleCodeSolver.  Edge key under a labeling: (hi << 8) | (lo << 2) | color
// with hi > lo the endpoint labels; the code is the ascending key sequence.
// Only covered vertices are labeled: pulling labels down to a gap-free
// 0..c-1 range lowers every key, so padded labelings never win.
class ColoredCodeSolver {
 public:
  explicit ColoredCodeSolver(const std::vector<ColoredEdge>& edges) : edges_(edges) {
    std::array<bool, kMaxVertices> seen{};
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (int x : {static_cast<int>(edges[i].u), static_cast<int>(edges[i].v)}) {
        if (!seen[static_cast<std::size_t>(x)]) {
          seen[static_cast<std::size_t>(x)] = true;
          covered_.push_back(x);
        }
        incident_[static_cast<std::size_t>(x)].push_back(static_cast<int>(i));
      }
    }
    std::sort(covered_.begin(), covered_.end());
    label_.fill(-1);
  }

  std::vector<std::uint16_t> min_code() {
    best_.clear();
    for (std::size_t i = 0; i < covered_.size(); ++i)
      label_[static_cast<std::size_t>(covered_[i])] = static_cast<int>(i);
    for (const ColoredEdge& e : edges_) best_.push_back(key_of(e));
    std::sort(best_.begin(), best_.end());
    label_.fill(-1);
    cur_.clear();
    dfs(0);
    return best_;
  }

 private:
  std::uint16_t key_of(const ColoredEdge& e) const {
    int lu = label_[e.u], lv = label_[e.v];
    int hi = std::max(lu, lv), lo = std::min(lu, lv);
    return static_cast<std::uint16_t>((hi << 8) | (lo << 2) | static_cast<int>(e.color));
  }

  void segment_for(int v, int k, std::vector<std::uint16_t>& out) const {
    out.clear();
    for (int idx : incident_[static_cast<std::size_t>(v)]) {
      const ColoredEdge& e = edges_[static_cast<std::size_t>(idx)];
      int other = (e.u == v) ? e.v : e.u;
      int lo = label_[static_cast<std::size_t>(other)];
      if (lo < 0) continue;
      out.push_back(static_cast<std::uint16_t>((k << 8) | (lo << 2) | static_cast<int>(e.color)));
    }
    std::sort(out.begin(), out.end());
  }

  int compare_extension(const std::vector<std::uint16_t>& seg) const {
    for (std::size_t i = 0; i < cur_.size(); ++i)
      if (cur_[i] != best_[i]) return cur_[i] < best_[i] ? -1 : 1;
    for (std::size_t i = 0; i < seg.size(); ++i) {
      std::uint16_t b = best_[cur_.size() + i];
      if (seg[i] != b) return seg[i] < b ? -1 : 1;
    }
    return 0;
  }

  void dfs(int k) {
    if (static_cast<std::size_t>(k) == covered_.size()) {
      if (cur_ != best_) best_ = cur_;  // pruning guarantees cur_ <= best_
      return;
    }
    std::vector<std::uint16_t> seg;
    for (int v : covered_) {
      if (label_[static_cast<std::size_t>(v)] >= 0) continue;
      segment_for(v, k, seg);
      if (compare_extension(seg) > 0) continue;
      label_[static_cast<std::size_t>(v)] = k;
      std::size_t old = cur_.size();
      cur_.insert(cur_.end(), seg.begin(), seg.end());
      dfs(k + 1);
      cur_.resize(old);
      label_[static_cast<std::size_t>(v)] = -1;
    }
  }

  const std::vector<ColoredEdge>& edges_;
  std::vector<int> covered_;
  std::array<std::vector<int>, kMaxVertices> incident_{};
  std::array<int, kMaxVertices> label_{};
  std::vector<std::uint16_t> cur_, best_;
};

inline const std::array<std::array<Color, 3>, 6>& color_perms() {
  static const std::array<std::array<Color, 3>, 6> perms = [] {
    std::array<std::array<Color, 3>, 6> out{};
    std::array<int, 3> p{0, 1, 2};
    for (std::size_t i = 0; i < 6; ++i) {
      out[i] = {static_cast<Color>(p[0]), static_cast<Color>(p[1]), static_cast<Color>(p[2])};
      std::next_permutation(p.begin(), p.end());
    }
    return out;
  }();
  return perms;
}

}  // namespace detail

// Invariant under vertex relabeling and color permutation.
inline ColoredCanonicalCode colored_canonical_code(const ColoredLinkGraph& g) {
  std::vector<std::uint16_t> best;
  bool first = true;
  for (const auto& perm : detail::color_perms()) {
    std::vector<ColoredEdge> recolored;
    recolored.reserve(g.edges().size());
    for (const ColoredEdge& e : g.edges())
      recolored.emplace_back(e.u, e.v, perm[static_cast<std::size_t>(e.color)]);
    detail::ColoredCodeSolver solver(recolored);
    std::vector<std::uint16_t> code = solver.min_code();
    if (first || code < best) {
      best = std::move(code);
      first = false;
    }
  }
  std::string bytes;
  bytes.reserve(1 + best.size() * 2);
  bytes.push_back(static_cast<char>(best.size()));
  for (std::uint16_t k : best) {
    bytes.push_back(static_cast<char>(k >> 8));
    bytes.push_back(static_cast<char>(k & 0xff));
  }
  return ColoredCanonicalCode{std::move(bytes)};
}

struct ColorIso {
  std::map<int, int> vertex_map;      // covered vertices of the source
  std::array<Color, 3> color_perm;    // source color -> target color
};

namespace detail {

inline bool extend_color_iso(const std::vector<ColoredEdge>& src,
                             const std::vector<ColoredEdge>& dst,
                             const std::array<Color, 3>& perm,
                             const std::vector<int>& sverts, const std::vector<int>& dverts,
                             std::size_t pos, std::map<int, int>& vmap,
                             std::set<int>& used) {
  if (pos == sverts.size()) return true;
  int sv = sverts[pos];
  for (int dv : dverts) {
    if (used.count(dv)) continue;
    vmap[sv] = dv;
    used.insert(dv);
    bool ok = true;
    // Check every source edge whose endpoints are both mapped, and make sure
    // no unmatched target edge gets both endpoints hit without a source edge.
    for (const ColoredEdge& e : src) {
      auto iu = vmap.find(e.u), iv = vmap.find(e.v);
      if (iu == vmap.end() || iv == vmap.end()) continue;
      Color want = perm[static_cast<std::size_t>(e.color)];
      bool found = false;
      for (const ColoredEdge& f : dst)
        if (f.contains(iu->second) && f.contains(iv->second) && f.color == want) found = true;
      if (!found) {
        ok = false;
        break;
      }
    }
    if (ok) {
      // Non-edges must map to non-edges (edge counts match, so checking
      // edges of dst between mapped images suffices).
      for (const ColoredEdge& f : dst) {
        bool u_hit = false, v_hit = false;
        int su = -1, sw = -1;
        for (const auto& [a, b] : vmap) {
          if (b == f.u) {
            u_hit = true;
            su = a;
          }
          if (b == f.v) {
            v_hit = true;
            sw = a;
          }
        }
        if (!u_hit || !v_hit) continue;
        bool found = false;
        for (const ColoredEdge& e : src)
          if (e.contains(su) && e.contains(sw) &&
              perm[static_cast<std::size_t>(e.color)] == f.color)
            found = true;
        if (!found) {
          ok = false;
          break;
        }
      }
    }
    if (ok && extend_color_iso(src, dst, perm, sverts, dverts, pos + 1, vmap, used)) return true;
    used.erase(dv);
    vmap.erase(sv);
  }
  return false;
}

}  // namespace detail

// First isomorphism in deterministic scan order (color permutations in the
// fixed S3 order, vertex candidates ascending), or nullopt.
inline std::optional<ColorIso> color_iso(const ColoredLinkGraph& from,
                                         const ColoredLinkGraph& to) {
  if (from.edge_count() != to.edge_count()) return std::nullopt;
  std::vector<int> sverts = from.vertices(), dverts = to.vertices();
  if (sverts.size() != dverts.size()) return std::nullopt;
  std::array<int, 3> ssizes = from.class_sizes(), dsizes = to.class_sizes();
  for (const auto& perm : detail::color_perms()) {
    bool sizes_ok = true;
    for (int c = 0; c < 3; ++c)
      if (ssizes[static_cast<std::size_t>(c)] !=
          dsizes[static_cast<std::size_t>(static_cast<int>(perm[static_cast<std::size_t>(c)]))])
        sizes_ok = false;
    if (!sizes_ok) continue;
    std::map<int, int> vmap;
    std::set<int> used;
    if (detail::extend_color_iso(from.edges(), to.edges(), perm, sverts, dverts, 0, vmap, used))
      return ColorIso{vmap, perm};
  }
  return std::nullopt;
}

// Covered vertices that never appear as the first entry of a good quintuple.
inline std::vector<int> non_starter_vertices(const ColoredLinkGraph& g) {
  std::vector<int> starters = quintuple_starters(g);
  std::vector<int> out;
  for (int v : g.vertices())
    if (!std::binary_search(starters.begin(), starters.end(), v)) out.push_back(v);
  return out;
}

struct FourCycles {
  // Each cycle lists its vertices in traversal order starting at the cycle's
  // smallest vertex, toward its smaller neighbor; cycles ordered by that
  // smallest vertex.  Diagonals are the two opposite pairs of each cycle.
  std::array<std::array<std::uint8_t, 4>, 2> cycles;

  std::array<std::pair<int, int>, 4> diagonals() const {
    std::array<std::pair<int, int>, 4> out{};
    for (int i = 0; i < 2; ++i) {
      const auto& c = cycles[static_cast<std::size_t>(i)];
      out[static_cast<std::size_t>(2 * i)] = {std::min<int>(c[0], c[2]), std::max<int>(c[0], c[2])};
      out[static_cast<std::size_t>(2 * i + 1)] = {std::min<int>(c[1], c[3]),
                                                  std::max<int>(c[1], c[3])};
    }
    return out;
  }
};

// Recognizes a graph that is exactly two vertex-disjoint 4-cycles.
inline std::optional<FourCycles> disjoint_four_cycles(const ColoredLinkGraph& g) {
  std::vector<int> vs = g.vertices();
  if (vs.size() != 8 || g.edge_count() != 8) return std::nullopt;
  std::map<int, std::vector<int>> adj;
  for (const ColoredEdge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& [v, nbrs] : adj) {
    if (nbrs.size() != 2) return std::nullopt;
    std::sort(nbrs.begin(), nbrs.end());
  }
  std::set<int> seen;
  std::array<std::array<std::uint8_t, 4>, 2> cycles{};
  for (int i = 0; i < 2; ++i) {
    int start = -1;
    for (int v : vs)
      if (!seen.count(v)) {
        start = v;
        break;
      }
    if (start < 0) return std::nullopt;
    std::array<std::uint8_t, 4> cyc{};
    int prev = start, cur = adj[start][0];
    cyc[0] = static_cast<std::uint8_t>(start);
    for (int step = 1; step < 4; ++step) {
      cyc[static_cast<std::size_t>(step)] = static_cast<std::uint8_t>(cur);
      int nxt = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nxt;
    }
    if (cur != start) return std::nullopt;  // component is longer than a 4-cycle
    for (std::uint8_t v : cyc) {
      if (seen.count(v)) return std::nullopt;
      seen.insert(v);
    }
    cycles[static_cast<std::size_t>(i)] = cyc;
  }
  if (seen.size() != 8) return std::nullopt;
  if (cycles[0][0] > cycles[1][0]) std::swap(cycles[0], cycles[1]);
  return FourCycles{cycles};
}

namespace detail {

inline ColoredLinkGraph make_catalog_graph(
    std::initializer_list<std::pair<int, int>> alpha,
    std::initializer_list<std::pair<int, int>> beta,
    std::initializer_list<std::pair<int, int>> gamma) {
  std::vector<ColoredEdge> edges;
  for (auto [u, v] : alpha) edges.emplace_back(u, v, Color::A);
  for (auto [u, v] : beta) edges.emplace_back(u, v, Color::B);
  for (auto [u, v] : gamma) edges.emplace_back(u, v, Color::C);
  ColoredLinkGraph g = ColoredLinkGraph::from_edges(std::nullopt, std::move(edges));
  if (has_rainbow_matching(g)) throw Error("catalog graph must be rainbow-free");
  return g;
}

}  // namespace detail

inline const CatalogGraph& builtin(CatalogName name) {
  static const std::array<CatalogGraph, 6> graphs = [] {
    std::array<CatalogGraph, 6> out = {
        CatalogGraph{CatalogName::G1,
                     detail::make_catalog_graph({{0, 1}, {3, 4}, {5, 6}},
                                                {{1, 2}, {4, 5}, {3, 6}},
                                                {{0, 2}, {3, 5}, {4, 6}}),
                     "rainbow triangle plus a K4 whose three perfect matchings "
                     "carry the three colors"},
        CatalogGraph{CatalogName::G2,
                     detail::make_catalog_graph({{0, 1}, {3, 4}, {5, 6}},
                                                {{1, 2}, {4, 5}, {3, 6}},
                                                {{0, 2}, {1, 7}, {3, 5}}),
                     "rainbow triangle with a pendant third-color edge and a "
                     "K4 missing one third-color diagonal"},
        CatalogGraph{CatalogName::G3,
                     detail::make_catalog_graph({{0, 1}, {2, 3}, {4, 5}},
                                                {{1, 2}, {3, 4}, {5, 6}},
                                                {{0, 2}, {1, 3}, {4, 6}}),
                     "seven-vertex path alternating the first two colors, "
                     "with three short third-color chords"},
        CatalogGraph{CatalogName::G4,
                     detail::make_catalog_graph({{0, 1}, {2, 3}, {4, 5}},
                                                {{1, 2}, {3, 4}, {5, 6}},
                                                {{0, 2}, {1, 6}, {3, 5}}),
                     "seven-vertex path alternating the first two colors, "
                     "with one long and two short third-color chords"},
        CatalogGraph{CatalogName::G5,
                     detail::make_catalog_graph({{0, 1}, {3, 4}, {5, 6}},
                                                {{1, 2}, {4, 5}, {3, 6}},
                                                {{1, 7}, {3, 5}, {4, 6}}),
                     "rainbow star on three leaves plus a K4 whose three "
                     "perfect matchings carry the three colors"},
        CatalogGraph{CatalogName::G6,
                     detail::make_catalog_graph({{0, 1}, {4, 5}, {6, 7}},
                                                {{2, 3}, {5, 6}, {4, 7}},
                                                {{1, 2}, {0, 3}}),
                     "two vertex-disjoint 4-cycles: one alternating the first "
                     "two colors, one carrying the third color on opposite "
                     "edges"},
    };
    for (int i = 0; i < 6; ++i) {
      const CatalogGraph& cg = out[static_cast<std::size_t>(i)];
      std::array<int, 3> s = cg.graph.class_sizes();
      std::array<int, 3> want = (cg.name == CatalogName::G6) ? std::array<int, 3>{3, 3, 2}
                                                             : std::array<int, 3>{3, 3, 3};
      if (s != want) throw Error("catalog graph " + to_string(cg.name) + " has wrong class sizes");
    }
    if (!disjoint_four_cycles(out[5].graph))
      throw Error("catalog graph G6 must be two disjoint 4-cycles");
    return out;
  }();
  return graphs[static_cast<std::size_t>(name)];
}

// Every rainbow-free union of three 3-edge matchings, one class per color,
// up to isomorphism and color permutation.  Returned sorted by canonical
// code.
//
// The scan fixes the first color class as (0,1),(2,3),(4,5) (always possible
// by relabeling).  In any rainbow-free union, an edge of another class
// meeting no first-class edge would force three disjoint same-class edges
// through its two endpoints, which is impossible; so every remaining edge
// meets {0..5}, at most one endpoint per edge is new, and twelve labels
// suffice.  Fresh labels are not required to be contiguous; duplicate
// labelings are merged by canonical code after the second class and at the
// end, which also removes vertex/color symmetry.
inline std::vector<ColoredLinkGraph> enumerate_444() {
  using Pair = std::pair<int, int>;
  const std::vector<Pair> m1 = {{0, 1}, {2, 3}, {4, 5}};
  std::vector<Pair> candidates;
  for (int u = 0; u <= 5; ++u)
    for (int v = u + 1; v < 12; ++v) {
      Pair p{u, v};
      bool is_m1 = false;
      for (const Pair& q : m1) is_m1 = is_m1 || p == q;
      if (!is_m1) candidates.push_back(p);
    }

  auto disjoint = [](const Pair& a, const Pair& b) {
    return a.first != b.first && a.first != b.second && a.second != b.first &&
           a.second != b.second;
  };

  auto build = [&](const std::vector<Pair>& m2, const std::vector<Pair>& m3) {
    std::vector<ColoredEdge> edges;
    for (const Pair& p : m1) edges.emplace_back(p.first, p.second, Color::A);
    for (const Pair& p : m2) edges.emplace_back(p.first, p.second, Color::B);
    for (const Pair& p : m3) edges.emplace_back(p.first, p.second, Color::C);
    return ColoredLinkGraph::from_edges(std::nullopt, std::move(edges));
  };

  // Second class: one representative per canonical code.
  std::map<ColoredCanonicalCode, std::vector<Pair>> level2;
  std::size_t nc = candidates.size();
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = i + 1; j < nc; ++j) {
      if (!disjoint(candidates[i], candidates[j])) continue;
      for (std::size_t k = j + 1; k < nc; ++k) {
        if (!disjoint(candidates[i], candidates[k]) || !disjoint(candidates[j], candidates[k]))
          continue;
        std::vector<Pair> m2 = {candidates[i], candidates[j], candidates[k]};
        ColoredCanonicalCode code = colored_canonical_code(build(m2, {}));
        level2.emplace(std::move(code), std::move(m2));
      }
    }

  // Third class on top of each representative, pruning as soon as a rainbow
  // matching exists (adding edges never destroys one).
  std::map<ColoredCanonicalCode, ColoredLinkGraph> out;
  for (const auto& [unused, m2] : level2) {
    std::vector<Pair> usable;
    for (const Pair& p : candidates) {
      bool is_m2 = false;
      for (const Pair& q : m2) is_m2 = is_m2 || p == q;
      if (!is_m2) usable.push_back(p);
    }
    std::vector<Pair> m3;
    auto rec = [&](auto&& self, std::size_t from) -> void {
      if (m3.size() == 3) {
        ColoredLinkGraph g = build(m2, m3);
        out.emplace(colored_canonical_code(g), g);
        return;
      }
      for (std::size_t t = from; t < usable.size(); ++t) {
        bool ok = true;
        for (const Pair& q : m3) ok = ok && disjoint(usable[t], q);
        if (!ok) continue;
        m3.push_back(usable[t]);
        if (!has_rainbow_matching(build(m2, m3))) self(self, t + 1);
        m3.pop_back();
      }
    };
    rec(rec, 0);
  }

  std::vector<ColoredLinkGraph> classes;
  classes.reserve(out.size());
  for (auto& [code, g] : out) classes.push_back(std::move(g));
  return classes;
}

// Names a union of three 3-edge matchings with no rainbow matching.
inline CatalogName classify_444(const ColoredLinkGraph& g) {
  std::array<int, 3> sizes = g.class_sizes();
  std::sort(sizes.begin(), sizes.end());
  if (sizes != std::array<int, 3>{3, 3, 3})
    throw UnknownName("classify_444: class sizes are not three threes");
  ColoredCanonicalCode code = colored_canonical_code(g);
  for (int i = 0; i < 5; ++i) {
    CatalogName n = static_cast<CatalogName>(i);
    if (code == colored_canonical_code(builtin(n).graph)) return n;
  }
  throw UnknownName("classify_444: not isomorphic to any catalog graph");
}

struct CatalogVerification {
  bool ok = false;
  std::vector<ColoredLinkGraph> classes;
  std::vector<CatalogName> matched;  // aligned with classes
};

// Re-derives the catalog and checks it matches the builtins one-to-one.
inline CatalogVerification verify_catalog() {
  CatalogVerification v;
  v.classes = enumerate_444();
  std::set<CatalogName> hit;
  bool all_named = true;
  for (const ColoredLinkGraph& g : v.classes) {
    try {
      CatalogName n = classify_444(g);
      v.matched.push_back(n);
      hit.insert(n);
    } catch (const UnknownName&) {
      all_named = false;
    }
  }
  v.ok = all_named && v.classes.size() == 5 && hit.size() == 5;
  return v;
}

}  // namespace crowns
