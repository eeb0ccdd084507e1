#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "crowns/canonical.hpp"
#include "crowns/core.hpp"

using namespace crowns;

namespace {

// Random linear graph built with rejection sampling only; independent of the
// library's own generators so core tests stand alone.
LinearThreeGraph random_graph(int n, int attempts, std::mt19937& rng) {
  LinearThreeGraph g(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int t = 0; t < attempts; ++t) {
    int a = pick(rng), b = pick(rng), c = pick(rng);
    if (a == b || a == c || b == c) continue;
    Triple tr(a, b, c);
    if (g.pair_covered(tr[0], tr[1]) || g.pair_covered(tr[0], tr[2]) ||
        g.pair_covered(tr[1], tr[2]))
      continue;
    g = g.add_edge(tr);
  }
  return g;
}

LinearThreeGraph apply_perm(const LinearThreeGraph& g, const std::vector<int>& perm) {
  std::vector<Triple> out;
  for (const Triple& t : g.edges())
    out.emplace_back(perm[static_cast<std::size_t>(t[0])],
                     perm[static_cast<std::size_t>(t[1])],
                     perm[static_cast<std::size_t>(t[2])]);
  return LinearThreeGraph::from_edges(g.vertex_count(), out);
}

// All labeled linear graphs on n vertices, as edge lists in insertion order
// over the colex-sorted candidate list.
void enumerate_labeled(int n, std::vector<LinearThreeGraph>& out) {
  std::vector<Triple> ts;
  for (int c = 2; c < n; ++c)
    for (int b = 1; b < c; ++b)
      for (int a = 0; a < b; ++a) ts.emplace_back(a, b, c);
  std::vector<Triple> cur;
  auto rec = [&](auto&& self, const LinearThreeGraph& g, std::size_t from) -> void {
    out.push_back(g);
    for (std::size_t i = from; i < ts.size(); ++i) {
      const Triple& t = ts[i];
      if (g.pair_covered(t[0], t[1]) || g.pair_covered(t[0], t[2]) ||
          g.pair_covered(t[1], t[2]))
        continue;
      self(self, g.add_edge(t), i + 1);
    }
  };
  rec(rec, LinearThreeGraph(n), 0);
}

}  // namespace

TEST_CASE("triples sort their vertices and expose set operations") {
  Triple t(5, 1, 3);
  CHECK(t[0] == 1);
  CHECK(t[1] == 3);
  CHECK(t[2] == 5);
  CHECK(t.max_vertex() == 5);
  CHECK(t.to_string() == "1 3 5");
  CHECK(t.contains(3));
  CHECK_FALSE(t.contains(2));

  Triple u(3, 5, 7);
  CHECK(t.overlap(u) == 2);
  CHECK_FALSE(t.disjoint(u));
  CHECK(Triple(0, 1, 2).disjoint(Triple(3, 4, 5)));
  CHECK(Triple(2, 1, 0) == Triple(0, 1, 2));
  CHECK(Triple(0, 1, 2) < Triple(0, 1, 3));
  CHECK(Triple(0, 1, 9) < Triple(0, 2, 3));  // lexicographic on sorted vertices

  CHECK_THROWS_AS(Triple(0, 1, 1), Error);
  CHECK_THROWS_AS(Triple(2, 2, 2), Error);
  CHECK_THROWS_AS(Triple(-1, 1, 2), Error);
  CHECK_THROWS_AS(Triple(0, 1, kMaxVertices), Error);
}

TEST_CASE("colex keys order edges by largest vertex first") {
  // Colex order differs from lexicographic exactly where the max vertex wins.
  CHECK(colex_key(Triple(0, 1, 2)) < colex_key(Triple(0, 1, 3)));
  CHECK(colex_key(Triple(0, 2, 3)) < colex_key(Triple(0, 1, 4)));
  CHECK(colex_key(Triple(1, 2, 3)) < colex_key(Triple(0, 1, 4)));
  CHECK(Triple(0, 1, 4) < Triple(1, 2, 3));  // ...unlike the lexicographic order

  std::vector<Triple> all;
  for (int c = 2; c < 7; ++c)
    for (int b = 1; b < c; ++b)
      for (int a = 0; a < b; ++a) all.emplace_back(a, b, c);
  for (std::size_t i = 1; i < all.size(); ++i)
    CHECK(colex_key(all[i - 1]) < colex_key(all[i]));
}

TEST_CASE("degree vectors normalize to non-increasing order") {
  DegreeVector d(2, 5, 3);
  CHECK(d.d1 == 5);
  CHECK(d.d2 == 3);
  CHECK(d.d3 == 2);
  CHECK(d.to_string() == "<5,3,2>");
  CHECK(DegreeVector(4, 4, 3) == DegreeVector(3, 4, 4));
}

TEST_CASE("domination is a partial order") {
  const DegreeVector a(4, 4, 3), b(5, 4, 2);
  CHECK(dominates(a, a));
  CHECK(dominates(DegreeVector(6, 4, 2), b));
  CHECK_FALSE(dominates(a, b));
  CHECK_FALSE(dominates(b, a));

  std::vector<DegreeVector> vs;
  for (int x = 0; x <= 4; ++x)
    for (int y = 0; y <= x; ++y)
      for (int z = 0; z <= y; ++z) vs.emplace_back(x, y, z);
  for (const auto& p : vs)
    for (const auto& q : vs) {
      if (dominates(p, q) && dominates(q, p)) CHECK(p == q);  // antisymmetry
      for (const auto& r : vs)
        if (dominates(p, q) && dominates(q, r)) {
          REQUIRE(dominates(p, r));  // transitivity
        }
    }
}

TEST_CASE("graph construction validates the vertex count") {
  CHECK_THROWS_AS(LinearThreeGraph(-1), Error);
  CHECK_THROWS_AS(LinearThreeGraph(kMaxVertices + 1), Error);
  CHECK(LinearThreeGraph(0).vertex_count() == 0);
  CHECK(LinearThreeGraph(kMaxVertices).vertex_count() == kMaxVertices);
  CHECK_THROWS_AS(LinearThreeGraph(0).min_degree(), EmptyVertexSet);
}

TEST_CASE("insertion keeps edges sorted and the pair index exact") {
  LinearThreeGraph g = LinearThreeGraph::from_edges(
      7, {Triple(2, 4, 6), Triple(0, 1, 2), Triple(0, 3, 4)});
  REQUIRE(g.edge_count() == 3);
  CHECK(g.edges()[0] == Triple(0, 1, 2));
  CHECK(g.edges()[1] == Triple(0, 3, 4));
  CHECK(g.edges()[2] == Triple(2, 4, 6));

  CHECK(g.has_edge(Triple(0, 1, 2)));
  CHECK_FALSE(g.has_edge(Triple(0, 1, 3)));
  CHECK(g.pair_covered(4, 0));
  CHECK_FALSE(g.pair_covered(1, 3));
  CHECK(g.pair_third(2, 6) == 4);
  CHECK(g.pair_third(6, 2) == 4);
  CHECK_FALSE(g.pair_third(0, 6).has_value());
  CHECK_THROWS_AS(g.pair_covered(0, 7), Error);

  CHECK(g.degree(0) == 2);
  CHECK(g.degree(2) == 2);
  CHECK(g.degree(4) == 2);
  CHECK(g.degree(5) == 0);
  CHECK(g.min_degree() == 0);
  CHECK(g.degree_vector(Triple(0, 1, 2)) == DegreeVector(2, 2, 1));
  CHECK_THROWS_AS(g.degree_vector(Triple(0, 1, 3)), EdgeNotPresent);
  CHECK(g.covered_vertices() == std::vector<int>{0, 1, 2, 3, 4, 6});
}

TEST_CASE("insertion rejects duplicates, covered pairs, and out-of-range edges") {
  LinearThreeGraph g = LinearThreeGraph::from_edges(6, {Triple(0, 1, 2)});
  CHECK_THROWS_AS(g.add_edge(Triple(0, 1, 2)), DuplicateEdge);
  CHECK_THROWS_AS(g.add_edge(Triple(1, 2, 3)), LinearityViolation);
  CHECK_THROWS_AS(g.add_edge(Triple(0, 1, 5)), LinearityViolation);
  CHECK_THROWS_AS(g.add_edge(Triple(3, 4, 6)), Error);
  // DuplicateEdge is a LinearityViolation: catching the broader type works.
  CHECK_THROWS_AS(g.add_edge(Triple(0, 1, 2)), LinearityViolation);
}

TEST_CASE("add and remove return fresh graphs and invert each other") {
  LinearThreeGraph g0 = LinearThreeGraph::from_edges(6, {Triple(0, 1, 2)});
  LinearThreeGraph g1 = g0.add_edge(Triple(0, 3, 4));
  CHECK(g0.edge_count() == 1);  // persistent: g0 untouched
  CHECK(g1.edge_count() == 2);
  CHECK(g1.degree(0) == 2);

  LinearThreeGraph g2 = g1.remove_edge(Triple(0, 3, 4));
  CHECK(g2 == g0);
  CHECK(g2.degree(0) == 1);
  CHECK_FALSE(g2.pair_covered(0, 3));
  LinearThreeGraph g3 = g2.add_edge(Triple(0, 3, 4));  // pair index fully released
  CHECK(g3 == g1);
  CHECK_THROWS_AS(g0.remove_edge(Triple(0, 3, 4)), EdgeNotPresent);
}

TEST_CASE("random graphs satisfy the linearity invariant under full rescan") {
  std::mt19937 rng(20260819);
  for (int rep = 0; rep < 120; ++rep) {
    int n = 5 + static_cast<int>(rng() % 9);
    LinearThreeGraph g = random_graph(n, 80, rng);
    const auto& es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = i + 1; j < es.size(); ++j)
        REQUIRE(es[i].overlap(es[j]) <= 1);

    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const Triple& t : es)
      for (int i = 0; i < 3; ++i) deg[static_cast<std::size_t>(t[i])] += 1;
    for (int v = 0; v < n; ++v) REQUIRE(g.degree(v) == deg[static_cast<std::size_t>(v)]);

    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        std::optional<int> z;
        for (const Triple& t : es)
          if (t.contains(x) && t.contains(y))
            for (int i = 0; i < 3; ++i)
              if (t[i] != x && t[i] != y) z = t[i];
        REQUIRE(g.pair_third(x, y) == z);
        REQUIRE(g.pair_covered(x, y) == z.has_value());
      }
  }
}

TEST_CASE("serialization round-trips and is stable for equal graphs") {
  LinearThreeGraph g = LinearThreeGraph::from_edges(5, {Triple(0, 3, 4), Triple(0, 1, 2)});
  CHECK(serialize(g) == "5 2\n0 1 2\n0 3 4\n");
  CHECK(parse(serialize(g)) == g);

  // Insertion order does not leak into the text form.
  LinearThreeGraph h = LinearThreeGraph::from_edges(5, {Triple(0, 1, 2), Triple(0, 3, 4)});
  CHECK(serialize(g) == serialize(h));

  std::mt19937 rng(7);
  for (int rep = 0; rep < 60; ++rep) {
    LinearThreeGraph r = random_graph(4 + static_cast<int>(rng() % 10), 60, rng);
    CHECK(parse(serialize(r)) == r);
  }
}

TEST_CASE("parser accepts comments and blank lines") {
  LinearThreeGraph g = parse("# crown-free example\n\n  5 2\n0 1 2\n   # inner note\n0 3 4\n\n");
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(Triple(0, 3, 4)));
}

TEST_CASE("parser reports precise errors with line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };

  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("# only comments\n"), ParseError);
  CHECK_THROWS_AS(parse("abc\n"), ParseError);
  CHECK_THROWS_AS(parse("5\n"), ParseError);
  CHECK_THROWS_AS(parse("5 1 9\n0 1 2\n"), ParseError);     // trailing header token
  CHECK_THROWS_AS(parse("-2 0\n"), ParseError);             // negative n
  CHECK_THROWS_AS(parse("5 -1\n"), ParseError);             // negative m
  CHECK_THROWS_AS(parse("65 0\n"), ParseError);             // n beyond the cap
  CHECK_THROWS_AS(parse("5 1\n0 1\n"), ParseError);         // short edge line
  CHECK_THROWS_AS(parse("5 1\n0 1 2 3\n"), ParseError);     // long edge line
  CHECK_THROWS_AS(parse("5 1\n0 1 5\n"), ParseError);       // vertex out of range
  CHECK_THROWS_AS(parse("5 1\n0 1 1\n"), ParseError);       // repeated vertex
  CHECK_THROWS_AS(parse("5 1\n0 1 2\n0 3 4\n"), ParseError);  // more edges than declared
  CHECK_THROWS_AS(parse("5 2\n0 1 2\n"), ParseError);         // fewer edges than declared

  CHECK(line_of("abc\n") == 1);
  CHECK(line_of("# note\n5 1\n0 1\n") == 3);
  CHECK(line_of("5 1\n0 1 2\n0 3 4\n") == 3);

  // Linearity failures surface as LinearityViolation, not as ParseError.
  CHECK_THROWS_AS(parse("5 2\n0 1 2\n1 2 3\n"), LinearityViolation);
  CHECK_THROWS_AS(parse("5 2\n0 1 2\n0 1 2\n"), DuplicateEdge);
}

TEST_CASE("canonical code is invariant under relabeling") {
  std::mt19937 rng(99);
  for (int rep = 0; rep < 40; ++rep) {
    int n = 5 + static_cast<int>(rng() % 8);
    LinearThreeGraph g = random_graph(n, 60, rng);
    CanonicalCode code = canonical_code(g);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v;
    for (int t = 0; t < 25; ++t) {
      std::shuffle(perm.begin(), perm.end(), rng);
      REQUIRE(canonical_code(apply_perm(g, perm)) == code);
    }
  }
}

TEST_CASE("canonical code distinguishes the three-edge shapes") {
  // On seven vertices there are exactly three isomorphism classes of
  // three-edge linear graphs: the sunflower, the path, and the triangle.
  auto sunflower = LinearThreeGraph::from_edges(
      7, {Triple(0, 1, 2), Triple(0, 3, 4), Triple(0, 5, 6)});
  auto path = LinearThreeGraph::from_edges(
      7, {Triple(0, 1, 2), Triple(2, 3, 4), Triple(4, 5, 6)});
  auto triangle = LinearThreeGraph::from_edges(
      7, {Triple(0, 1, 2), Triple(2, 3, 4), Triple(4, 5, 0)});
  CHECK(canonical_code(sunflower) != canonical_code(path));
  CHECK(canonical_code(sunflower) != canonical_code(triangle));
  CHECK(canonical_code(path) != canonical_code(triangle));

  // A differently-labeled path still matches the path.
  auto path2 = LinearThreeGraph::from_edges(
      7, {Triple(6, 5, 3), Triple(3, 1, 0), Triple(0, 2, 4)});
  CHECK(canonical_code(path2) == canonical_code(path));
}

TEST_CASE("canonical code encodes the vertex count") {
  auto small = LinearThreeGraph::from_edges(3, {Triple(0, 1, 2)});
  auto padded = LinearThreeGraph::from_edges(10, {Triple(0, 1, 2)});
  CHECK(canonical_code(small) != canonical_code(padded));
}

TEST_CASE("canonical codes induce exactly the isomorphism classes on six vertices") {
  const int n = 6;
  std::vector<LinearThreeGraph> all;
  enumerate_labeled(n, all);
  REQUIRE(all.size() > 100);  // sanity: the enumeration really ran

  std::vector<int> perm{0, 1, 2, 3, 4, 5};
  std::map<std::string, std::string> code_to_orbit, orbit_to_code;
  for (const LinearThreeGraph& g : all) {
    // Orbit representative: lexicographically least serialization over S_6.
    std::string rep = serialize(g);
    std::sort(perm.begin(), perm.end());
    do {
      rep = std::min(rep, serialize(apply_perm(g, perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::string code = canonical_code(g).bytes;
    auto [it1, fresh1] = code_to_orbit.emplace(code, rep);
    REQUIRE(it1->second == rep);  // same code -> same orbit
    auto [it2, fresh2] = orbit_to_code.emplace(rep, code);
    REQUIRE(it2->second == code);  // same orbit -> same code
  }
  CHECK(code_to_orbit.size() == orbit_to_code.size());
}

TEST_CASE("each orbit has exactly one canonically labeled member") {
  const int n = 5;
  std::vector<LinearThreeGraph> all;
  enumerate_labeled(n, all);

  std::vector<int> perm{0, 1, 2, 3, 4};
  for (const LinearThreeGraph& g : all) {
    std::set<std::string> canon;
    std::sort(perm.begin(), perm.end());
    do {
      LinearThreeGraph h = apply_perm(g, perm);
      if (is_canonically_labeled(h)) canon.insert(serialize(h));
    } while (std::next_permutation(perm.begin(), perm.end()));
    REQUIRE(canon.size() == 1);
  }
}

TEST_CASE("gap labelings are not canonical") {
  auto gapped = LinearThreeGraph::from_edges(10, {Triple(7, 8, 9)});
  CHECK_FALSE(is_canonically_labeled(gapped));
  auto packed = LinearThreeGraph::from_edges(10, {Triple(0, 1, 2)});
  CHECK(is_canonically_labeled(packed));
  CHECK(canonical_code(gapped) == canonical_code(packed));
}
