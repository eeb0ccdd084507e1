#pragma once

// The link of an edge e = (a,b,c) in a linear 3-graph H is the 3-edge-colored
// graph whose edges are the pairs f \ {z} for host edges f meeting e in
// exactly one vertex z; the color records which endpoint of e the host edge
// passed through.  Linearity makes each color class a matching and keeps the
// whole link simple.
//
// A crown is a four-edge configuration: a base edge together with three
// pairwise disjoint jewels, each sharing exactly one vertex with the base.
// Crowns with a given base correspond exactly to rainbow matchings (three
// pairwise disjoint edges, one of each color) in that base's link.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "crowns/core.hpp"

namespace crowns {

enum class Color : std::uint8_t { A = 0, B = 1, C = 2 };

inline char color_letter(Color c) { return static_cast<char>('A' + static_cast<int>(c)); }

struct ColoredEdge {
  std::uint8_t u, v;  // u < v
  Color color;

  ColoredEdge(int u_, int v_, Color c_) : u(0), v(0), color(c_) {
    if (u_ == v_) throw Error("colored edge endpoints must be distinct");
    if (u_ < 0 || v_ < 0 || u_ >= kMaxVertices || v_ >= kMaxVertices)
      throw Error("colored edge endpoint out of range");
    u = static_cast<std::uint8_t>(std::min(u_, v_));
    v = static_cast<std::uint8_t>(std::max(u_, v_));
  }

  bool contains(int x) const { return u == x || v == x; }
  bool disjoint(const ColoredEdge& o) const {
    return u != o.u && u != o.v && v != o.u && v != o.v;
  }

  auto operator<=>(const ColoredEdge&) const = default;
};

// A simple graph with edges colored A/B/C such that each color class is a
// matching.  When built from a host edge, that edge is retained so link
// edges can be lifted back to host edges.
class ColoredLinkGraph {
 public:
  ColoredLinkGraph() = default;

  static ColoredLinkGraph from_edges(std::optional<Triple> host_edge,
                                     std::vector<ColoredEdge> edges) {
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
      if (edges[i].u == edges[i + 1].u && edges[i].v == edges[i + 1].v)
        throw Error("colored graph must be simple");
    }
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = i + 1; j < edges.size(); ++j)
        if (edges[i].color == edges[j].color && !edges[i].disjoint(edges[j]))
          throw Error("color class is not a matching");
    ColoredLinkGraph g;
    g.host_edge_ = host_edge;
    g.edges_ = std::move(edges);
    return g;
  }

  const std::optional<Triple>& host_edge() const { return host_edge_; }
  const std::vector<ColoredEdge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::vector<int> vertices() const {
    std::set<int> s;
    for (const ColoredEdge& e : edges_) {
      s.insert(e.u);
      s.insert(e.v);
    }
    return std::vector<int>(s.begin(), s.end());
  }

  std::optional<Color> phi(int x, int y) const {
    for (const ColoredEdge& e : edges_)
      if (e.contains(x) && e.contains(y)) return e.color;
    return std::nullopt;
  }

  std::vector<ColoredEdge> color_class(Color c) const {
    std::vector<ColoredEdge> out;
    for (const ColoredEdge& e : edges_)
      if (e.color == c) out.push_back(e);
    return out;
  }

  std::array<int, 3> class_sizes() const {
    std::array<int, 3> s{0, 0, 0};
    for (const ColoredEdge& e : edges_) s[static_cast<std::size_t>(e.color)] += 1;
    return s;
  }

  bool operator==(const ColoredLinkGraph& o) const { return edges_ == o.edges_; }

 private:
  std::optional<Triple> host_edge_;
  std::vector<ColoredEdge> edges_;  // sorted
};

inline ColoredLinkGraph link_graph(const LinearThreeGraph& h, const Triple& e) {
  if (!h.has_edge(e)) throw EdgeNotPresent("link_graph: " + e.to_string());
  std::vector<ColoredEdge> edges;
  for (const Triple& f : h.edges()) {
    if (f == e) continue;
    int shared = -1, color = -1;
    for (int i = 0; i < 3; ++i) {
      if (f.contains(e[i])) {
        shared = e[i];
        color = i;
        break;  // linearity: at most one shared vertex
      }
    }
    if (shared < 0) continue;
    int p = -1, q = -1;
    for (int i = 0; i < 3; ++i) {
      if (f[i] == shared) continue;
      (p < 0 ? p : q) = f[i];
    }
    edges.emplace_back(p, q, static_cast<Color>(color));
  }
  return ColoredLinkGraph::from_edges(e, std::move(edges));
}

struct RainbowMatching {
  ColoredEdge a, b, c;  // one edge per color, pairwise disjoint
};

// First witness in the nested scan A-class, B-class, C-class (each ascending),
// so the result is the lexicographically least rainbow matching.
inline std::optional<RainbowMatching> has_rainbow_matching(const ColoredLinkGraph& g) {
  const auto as = g.color_class(Color::A);
  const auto bs = g.color_class(Color::B);
  const auto cs = g.color_class(Color::C);
  for (const ColoredEdge& ea : as)
    for (const ColoredEdge& eb : bs) {
      if (!ea.disjoint(eb)) continue;
      for (const ColoredEdge& ec : cs)
        if (ea.disjoint(ec) && eb.disjoint(ec))
          return RainbowMatching{ea, eb, ec};
    }
  return std::nullopt;
}

struct Crown {
  Triple base;
  std::array<Triple, 3> jewels;
};

inline bool is_crown(const LinearThreeGraph& h, const Crown& cr) {
  if (!h.has_edge(cr.base)) return false;
  for (const Triple& j : cr.jewels)
    if (!h.has_edge(j)) return false;
  for (int i = 0; i < 3; ++i) {
    if (cr.jewels[static_cast<std::size_t>(i)].overlap(cr.base) != 1) return false;
    for (int j = i + 1; j < 3; ++j)
      if (!cr.jewels[static_cast<std::size_t>(i)].disjoint(cr.jewels[static_cast<std::size_t>(j)]))
        return false;
  }
  return true;
}

namespace detail {

// Host edge behind a link edge: the pair plus the base endpoint of its color.
inline Triple lift(const Triple& base, const ColoredEdge& le) {
  return Triple(le.u, le.v, base[static_cast<int>(le.color)]);
}

}  // namespace detail

inline std::optional<Crown> crown_with_base(const LinearThreeGraph& h, const Triple& e) {
  ColoredLinkGraph g = link_graph(h, e);
  auto rm = has_rainbow_matching(g);
  if (!rm) return std::nullopt;
  Crown cr{e, {detail::lift(e, rm->a), detail::lift(e, rm->b), detail::lift(e, rm->c)}};
  if (!is_crown(h, cr)) throw Error("internal: lifted rainbow is not a crown");
  return cr;
}

// Bases are tried in the stored (lexicographic) edge order, so the first
// crown found is deterministic.
inline std::optional<Crown> find_crown(const LinearThreeGraph& h) {
  for (const Triple& e : h.edges()) {
    if (auto cr = crown_with_base(h, e)) return cr;
  }
  return std::nullopt;
}

// An ordered vertex tuple (x1..x5) of a colored graph is a good quintuple
// when (x1,x2), (x2,x3), (x4,x5) are edges and (x1,x2) and (x4,x5) share a
// color.  Proper coloring then forces (x2,x3) into a different color.
struct GoodQuintuple {
  std::array<std::uint8_t, 5> x;
  int operator[](int i) const { return x[static_cast<std::size_t>(i)]; }
  auto operator<=>(const GoodQuintuple&) const = default;
};

inline bool is_good_quintuple(const ColoredLinkGraph& g, const GoodQuintuple& q) {
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (q[i] == q[j]) return false;
  auto c12 = g.phi(q[0], q[1]);
  auto c23 = g.phi(q[1], q[2]);
  auto c45 = g.phi(q[3], q[4]);
  return c12 && c23 && c45 && *c12 == *c45;
}

// Exhaustive, in lexicographic tuple order.
inline std::vector<GoodQuintuple> good_quintuples(const ColoredLinkGraph& g) {
  std::vector<GoodQuintuple> out;
  std::vector<int> vs = g.vertices();
  for (int x1 : vs)
    for (int x2 : vs)
      for (int x3 : vs)
        for (int x4 : vs)
          for (int x5 : vs) {
            GoodQuintuple q{{static_cast<std::uint8_t>(x1), static_cast<std::uint8_t>(x2),
                             static_cast<std::uint8_t>(x3), static_cast<std::uint8_t>(x4),
                             static_cast<std::uint8_t>(x5)}};
            if (is_good_quintuple(g, q)) out.push_back(q);
          }
  return out;
}

inline std::vector<int> quintuple_starters(const ColoredLinkGraph& g) {
  std::set<int> s;
  for (const GoodQuintuple& q : good_quintuples(g)) s.insert(q[0]);
  return std::vector<int>(s.begin(), s.end());
}

// Constructive form of the quintuple obstruction: given a good quintuple q of
// link_graph(h, e) and an edge f of h disjoint from e meeting {x1..x5} in
// exactly x1, the host edges behind (x1,x2), (x2,x3), (x4,x5) close a crown
// with f.  The host edge behind (x1,x2) is the base; f and the other two
// lifted edges are the jewels.
inline Crown crown_from_quintuple(const LinearThreeGraph& h, const Triple& e,
                                  const GoodQuintuple& q, const Triple& f) {
  ColoredLinkGraph g = link_graph(h, e);
  if (!is_good_quintuple(g, q))
    throw PreconditionViolated("quintuple is not good in the link of " + e.to_string());
  if (!h.has_edge(f)) throw PreconditionViolated("edge " + f.to_string() + " not in host");
  if (f.overlap(e) != 0) throw PreconditionViolated("edge f must be disjoint from the base edge");
  if (!f.contains(q[0]))
    throw PreconditionViolated("edge f must contain the quintuple's first vertex");
  for (int i = 1; i < 5; ++i)
    if (f.contains(q[i]))
      throw PreconditionViolated("edge f may meet the quintuple only in its first vertex");

  auto lift_pair = [&](int x, int y) {
    auto c = g.phi(x, y);
    return detail::lift(e, ColoredEdge(x, y, *c));
  };
  Crown cr{lift_pair(q[0], q[1]), {f, lift_pair(q[1], q[2]), lift_pair(q[3], q[4])}};
  if (!is_crown(h, cr)) throw Error("internal: quintuple construction failed");
  return cr;
}

// Removes edges incident to e (never e itself) until each endpoint's degree
// matches the target, pairing the largest target with the highest-degree
// endpoint (ties by vertex id).  Within an endpoint, lexicographically
// largest incident edges go first, making the result deterministic.
inline LinearThreeGraph trim_to_degree_vector(const LinearThreeGraph& h, const Triple& e,
                                              DegreeVector target) {
  if (target.d3 < 1) throw TargetNotDominated("target must be at least <1,1,1>");
  DegreeVector have = h.degree_vector(e);
  if (!dominates(have, target))
    throw TargetNotDominated("degree vector " + have.to_string() +
                             " does not dominate " + target.to_string());

  std::array<int, 3> endpoints{e[0], e[1], e[2]};
  std::sort(endpoints.begin(), endpoints.end(), [&](int a, int b) {
    if (h.degree(a) != h.degree(b)) return h.degree(a) > h.degree(b);
    return a < b;
  });
  std::array<int, 3> want{target.d1, target.d2, target.d3};

  LinearThreeGraph g = h;
  for (int i = 0; i < 3; ++i) {
    int v = endpoints[static_cast<std::size_t>(i)];
    while (g.degree(v) > want[static_cast<std::size_t>(i)]) {
      std::optional<Triple> victim;
      for (const Triple& f : g.edges())
        if (f != e && f.contains(v) && (!victim || *victim < f)) victim = f;
      // v's degree exceeds a target of at least 1, so some edge besides e
      // remains at v.
      g = g.remove_edge(*victim);
    }
  }
  return g;
}

}  // namespace crowns
