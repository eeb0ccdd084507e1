#pragma once

// Linear 3-uniform hypergraphs on a fixed vertex set [0, n).
// "Linear" means any two distinct edges share at most one vertex;
// equivalently, every unordered vertex pair lies in at most one edge.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crowns {

// Adjacency bookkeeping uses one byte per vertex pair, so the vertex set is
// capped.  Desk-scale searches live far below this anyway.
inline constexpr int kMaxVertices = 64;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LinearityViolation : Error {
  using Error::Error;
};
// Re-adding an edge is a special case of covering a pair twice.
struct DuplicateEdge : LinearityViolation {
  using LinearityViolation::LinearityViolation;
};
struct EdgeNotPresent : Error {
  using Error::Error;
};
struct EmptyVertexSet : Error {
  using Error::Error;
};
struct TooFewVertices : Error {
  using Error::Error;
};
struct TargetNotDominated : Error {
  using Error::Error;
};
struct PreconditionViolated : Error {
  using Error::Error;
};
struct UnknownName : Error {
  using Error::Error;
};
struct InfeasibleRequest : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& what_)
      : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct Reducible : Error {
  int vertex;
  explicit Reducible(int v)
      : Error("vertex " + std::to_string(v) + " has degree <= 1"), vertex(v) {}
};

// An edge: three distinct vertices, stored in increasing order.
class Triple {
 public:
  Triple(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0 || a >= kMaxVertices || b >= kMaxVertices ||
        c >= kMaxVertices) {
      throw Error("triple vertex out of range");
    }
    if (a == b || a == c || b == c) {
      throw Error("triple vertices must be distinct");
    }
    v_ = {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
          static_cast<std::uint8_t>(c)};
    std::sort(v_.begin(), v_.end());
  }

  int operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }

  bool contains(int x) const { return v_[0] == x || v_[1] == x || v_[2] == x; }

  int overlap(const Triple& o) const {
    int k = 0;
    for (int i = 0; i < 3; ++i) k += o.contains(v_[static_cast<std::size_t>(i)]) ? 1 : 0;
    return k;
  }

  bool disjoint(const Triple& o) const { return overlap(o) == 0; }

  int max_vertex() const { return v_[2]; }

  std::string to_string() const {
    return std::to_string(v_[0]) + " " + std::to_string(v_[1]) + " " +
           std::to_string(v_[2]);
  }

  auto operator<=>(const Triple&) const = default;

 private:
  std::array<std::uint8_t, 3> v_;
};

// Colexicographic edge key: compares by largest vertex first.  Used by the
// canonical-form machinery and the generation order of the search engine.
inline std::uint32_t colex_key(const Triple& t) {
  return (static_cast<std::uint32_t>(t[2]) << 12) |
         (static_cast<std::uint32_t>(t[1]) << 6) |
         static_cast<std::uint32_t>(t[0]);
}

// Endpoint degrees of an edge, kept in non-increasing order.
struct DegreeVector {
  int d1, d2, d3;

  DegreeVector(int a, int b, int c) : d1(a), d2(b), d3(c) {
    if (d1 < d2) std::swap(d1, d2);
    if (d2 < d3) std::swap(d2, d3);
    if (d1 < d2) std::swap(d1, d2);
  }

  auto operator<=>(const DegreeVector&) const = default;

  std::string to_string() const {
    return "<" + std::to_string(d1) + "," + std::to_string(d2) + "," +
           std::to_string(d3) + ">";
  }
};

// Coordinatewise comparison of the sorted vectors.
inline bool dominates(const DegreeVector& p, const DegreeVector& q) {
  return p.d1 >= q.d1 && p.d2 >= q.d2 && p.d3 >= q.d3;
}

class LinearThreeGraph {
 public:
  explicit LinearThreeGraph(int n) : n_(n) {
    if (n < 0) throw Error("vertex count must be non-negative");
    if (n > kMaxVertices) {
      throw Error("vertex count exceeds supported maximum of " +
                  std::to_string(kMaxVertices));
    }
    third_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    degree_.assign(static_cast<std::size_t>(n), 0);
  }

  static LinearThreeGraph from_edges(int n, const std::vector<Triple>& edges) {
    LinearThreeGraph g(n);
    for (const Triple& t : edges) g.insert(t);
    return g;
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Triple>& edges() const { return edges_; }

  bool has_edge(const Triple& t) const {
    return std::binary_search(edges_.begin(), edges_.end(), t);
  }

  bool pair_covered(int x, int y) const {
    check_vertex(x);
    check_vertex(y);
    return third_[slot(x, y)] >= 0;
  }

  // The vertex completing the unique edge through {x, y}, if that edge exists.
  std::optional<int> pair_third(int x, int y) const {
    check_vertex(x);
    check_vertex(y);
    int z = third_[slot(x, y)];
    if (z < 0) return std::nullopt;
    return z;
  }

  int degree(int v) const {
    check_vertex(v);
    return degree_[static_cast<std::size_t>(v)];
  }

  int min_degree() const {
    if (n_ == 0) throw EmptyVertexSet("min_degree of empty vertex set");
    int m = degree_[0];
    for (int v = 1; v < n_; ++v) m = std::min(m, static_cast<int>(degree_[static_cast<std::size_t>(v)]));
    return m;
  }

  DegreeVector degree_vector(const Triple& e) const {
    if (!has_edge(e)) throw EdgeNotPresent("degree_vector: " + e.to_string());
    return DegreeVector(degree(e[0]), degree(e[1]), degree(e[2]));
  }

  [[nodiscard]] LinearThreeGraph add_edge(const Triple& t) const {
    LinearThreeGraph g(*this);
    g.insert(t);
    return g;
  }

  [[nodiscard]] LinearThreeGraph remove_edge(const Triple& t) const {
    if (!has_edge(t)) throw EdgeNotPresent("remove_edge: " + t.to_string());
    LinearThreeGraph g(*this);
    auto it = std::lower_bound(g.edges_.begin(), g.edges_.end(), t);
    g.edges_.erase(it);
    for (int i = 0; i < 3; ++i)
      g.degree_[static_cast<std::size_t>(t[i])] -= 1;
    g.set_third(t[0], t[1], -1);
    g.set_third(t[0], t[2], -1);
    g.set_third(t[1], t[2], -1);
    return g;
  }

  std::vector<int> covered_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
      if (degree_[static_cast<std::size_t>(v)] > 0) out.push_back(v);
    return out;
  }

  bool operator==(const LinearThreeGraph& o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw Error("vertex " + std::to_string(v) + " out of range");
  }

  std::size_t slot(int x, int y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(y);
  }

  void set_third(int x, int y, int z) {
    third_[slot(x, y)] = static_cast<std::int8_t>(z);
    third_[slot(y, x)] = static_cast<std::int8_t>(z);
  }

  void insert(const Triple& t) {
    if (t.max_vertex() >= n_) {
      throw Error("edge " + t.to_string() + " exceeds vertex count " +
                  std::to_string(n_));
    }
    if (has_edge(t)) throw DuplicateEdge("duplicate edge " + t.to_string());
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (third_[slot(t[i], t[j])] >= 0) {
          throw LinearityViolation("pair {" + std::to_string(t[i]) + "," +
                                   std::to_string(t[j]) +
                                   "} already covered; cannot add " +
                                   t.to_string());
        }
    edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), t), t);
    for (int i = 0; i < 3; ++i)
      degree_[static_cast<std::size_t>(t[i])] += 1;
    set_third(t[0], t[1], t[2]);
    set_third(t[0], t[2], t[1]);
    set_third(t[1], t[2], t[0]);
  }

  int n_ = 0;
  std::vector<Triple> edges_;        // sorted lexicographically
  std::vector<std::int8_t> third_;   // n*n pair index; -1 = uncovered
  std::vector<std::uint8_t> degree_;
};

// --- text format ------------------------------------------------------------
//
// First data line: "n m".  Then m lines "a b c" with 0-based vertex ids.
// Lines whose first non-blank character is '#' are comments; blank lines are
// ignored.  Serialization emits edges in lexicographic order, so
// parse(serialize(g)) == g and serialize is a canonical text form for equal
// graphs.

inline std::string serialize(const LinearThreeGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Triple& t : g.edges()) out << t.to_string() << '\n';
  return out.str();
}

inline LinearThreeGraph parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int n = -1, m = -1;
  std::optional<LinearThreeGraph> g;
  int edges_read = 0;

  auto is_blank_or_comment = [](const std::string& s) {
    for (char ch : s) {
      if (ch == '#') return true;
      if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n >> m)) throw ParseError(line_no, "expected header 'n m'");
      std::string rest;
      if (fields >> rest) throw ParseError(line_no, "trailing tokens after header");
      if (n < 0) throw ParseError(line_no, "vertex count must be non-negative");
      if (n > kMaxVertices) {
        throw ParseError(line_no, "vertex count " + std::to_string(n) +
                                      " exceeds supported maximum of " +
                                      std::to_string(kMaxVertices));
      }
      if (m < 0) throw ParseError(line_no, "edge count must be non-negative");
      g.emplace(n);
      continue;
    }
    if (edges_read >= m) throw ParseError(line_no, "more edges than declared");
    int a, b, c;
    if (!(fields >> a >> b >> c)) throw ParseError(line_no, "expected edge 'a b c'");
    std::string rest;
    if (fields >> rest) throw ParseError(line_no, "trailing tokens after edge");
    if (a < 0 || b < 0 || c < 0 || a >= n || b >= n || c >= n)
      throw ParseError(line_no, "vertex id out of range [0, " + std::to_string(n) + ")");
    if (a == b || a == c || b == c)
      throw ParseError(line_no, "edge vertices must be distinct");
    *g = g->add_edge(Triple(a, b, c));  // LinearityViolation propagates as-is
    ++edges_read;
  }
  if (n < 0) throw ParseError(line_no, "missing header 'n m'");
  if (edges_read != m) {
    throw ParseError(line_no, "declared " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges_read));
  }
  return *g;
}

}  // namespace crowns
