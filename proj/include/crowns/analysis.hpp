#pragma once

// Counting-argument auditor and finite exclusion scans for crown-free
// graphs.
//
// audit_theorem2 partitions the vertices by degree, splits the edge set by
// how it meets the low-degree part, and evaluates every intermediate
// inequality of the 3n/2 edge-count argument numerically, so a claimed
// crown-free instance can be checked end to end.  g6_exclusion_scan verifies
// that around a base edge with degree vector <4,4,3> whose link is the
// two-4-cycle graph G6, every additional edge touching the 11-vertex
// neighborhood is either impossible (linearity), one of 13 enumerable slots,
// or forces a crown.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "crowns/catalog.hpp"
#include "crowns/core.hpp"
#include "crowns/links.hpp"

namespace crowns {

// Degree-2 vertices whose two edges have all four other endpoints of degree
// exactly 4.
inline std::vector<int> special_vertices(const LinearThreeGraph& h) {
  std::vector<int> out;
  for (int v = 0; v < h.vertex_count(); ++v) {
    if (h.degree(v) != 2) continue;
    bool special = true;
    for (const Triple& f : h.edges()) {
      if (!f.contains(v)) continue;
      for (int i = 0; i < 3; ++i)
        if (f[i] != v && h.degree(f[i]) != 4) special = false;
    }
    if (special) out.push_back(v);
  }
  return out;
}

struct AuditChain {
  double e1_bound = 0;        // upper bound on |E1| from the low-degree double count
  double e2_sum = 0;          // per-vertex sum that equals |E2| under the hypotheses
  double rhs_first_ineq = 0;  // (3|Z1| + 3|Z2|)/2 + 2|Z3|
  double rhs_second_ineq = 0; // (3|Z1| + 3|Z2|)/2 + |Z3| + |Y|
  double final_bound = 0;     // 3n/2
};

struct AuditReport {
  std::vector<int> y, y1, z1, z2, z3;
  std::vector<Triple> e1, e2;
  AuditChain chain;
  int special_pair_count = 0;  // distinct endpoint pairs of special-vertex edges
  bool hypotheses_ok = false;
  std::optional<Triple> dominating_edge;  // first edge with D >= <4,4,3> or <5,4,2>
  std::optional<Crown> crown;
  bool prop6_ok = false;
  bool chain_ok = false;
  bool conclusion_ok = false;  // |E| <= 3n/2
};

// Evaluates the whole edge-count argument on a graph with minimum degree 2.
// Reports rather than aborts when the crown-free / degree-vector hypotheses
// fail, so it doubles as an instrument on arbitrary graphs.
inline AuditReport audit_theorem2(const LinearThreeGraph& h) {
  const int n = h.vertex_count();
  for (int v = 0; v < n; ++v)
    if (h.degree(v) <= 1) throw Reducible(v);

  AuditReport r;
  std::vector<int> specials = special_vertices(h);
  auto is_special = [&](int v) {
    return std::binary_search(specials.begin(), specials.end(), v);
  };
  for (int v = 0; v < n; ++v) {
    int d = h.degree(v);
    if (d >= 4) {
      r.y.push_back(v);
      if (d == 4) r.y1.push_back(v);
    } else if (d == 3) {
      r.z1.push_back(v);
    } else if (is_special(v)) {
      r.z3.push_back(v);
    } else {
      r.z2.push_back(v);
    }
  }

  auto in_z = [&](int v) { return h.degree(v) <= 3; };
  for (const Triple& f : h.edges()) {
    int z_hits = 0;
    for (int i = 0; i < 3; ++i) z_hits += in_z(f[i]) ? 1 : 0;
    (z_hits >= 2 ? r.e1 : r.e2).push_back(f);
  }

  auto d_in = [&](const std::vector<Triple>& es, int v) {
    int d = 0;
    for (const Triple& f : es) d += f.contains(v) ? 1 : 0;
    return d;
  };

  // Hypotheses: crown-free and no edge dominating <4,4,3> or <5,4,2>.
  const DegreeVector t443(4, 4, 3), t542(5, 4, 2);
  for (const Triple& f : h.edges()) {
    DegreeVector dv = h.degree_vector(f);
    if (dominates(dv, t443) || dominates(dv, t542)) {
      r.dominating_edge = f;
      break;
    }
  }
  r.crown = find_crown(h);
  r.hypotheses_ok = !r.dominating_edge && !r.crown;

  // Chain values.
  double sum_z1_de1 = 0, sum_z2_de2 = 0, sum_z3_de2 = 0;
  for (int v : r.z1) sum_z1_de1 += d_in(r.e1, v);
  for (int v : r.z2) sum_z2_de2 += d_in(r.e2, v);
  for (int v : r.z3) sum_z3_de2 += d_in(r.e2, v);
  double nz1 = static_cast<double>(r.z1.size()), nz2 = static_cast<double>(r.z2.size()),
         nz3 = static_cast<double>(r.z3.size()), ny = static_cast<double>(r.y.size());
  r.chain.e1_bound = 0.5 * (sum_z1_de1 + (2.0 * nz2 - sum_z2_de2));
  r.chain.e2_sum = sum_z2_de2 + sum_z3_de2;
  r.chain.rhs_first_ineq = 0.5 * (3.0 * nz1 + 3.0 * nz2) + 2.0 * nz3;
  r.chain.rhs_second_ineq = 0.5 * (3.0 * nz1 + 3.0 * nz2) + nz3 + ny;
  r.chain.final_bound = 1.5 * n;

  // Distinct endpoint pairs contributed by the (two) edges at each special
  // vertex; linearity makes the count exactly 2|Z3|, and those pairs sit
  // inside the degree-4 set.
  std::set<std::pair<int, int>> gpairs;
  for (int z : r.z3)
    for (const Triple& f : h.edges()) {
      if (!f.contains(z)) continue;
      std::vector<int> others;
      for (int i = 0; i < 3; ++i)
        if (f[i] != z) others.push_back(f[i]);
      gpairs.insert({others[0], others[1]});
    }
  r.special_pair_count = static_cast<int>(gpairs.size());

  bool p6_first = true, p6_second = true;
  for (int v : r.z1) p6_first = p6_first && d_in(r.e2, v) == 0;
  for (int v : r.z2) p6_second = p6_second && d_in(r.e2, v) <= 1;
  bool p6_third = r.z3.size() <= r.y.size();
  bool pairs_ok = r.special_pair_count == 2 * static_cast<int>(r.z3.size()) &&
                  r.special_pair_count <= 2 * static_cast<int>(r.y1.size());
  r.prop6_ok = p6_first && p6_second && p6_third && pairs_ok;

  double ne1 = static_cast<double>(r.e1.size()), ne2 = static_cast<double>(r.e2.size());
  bool c0 = h.edge_count() == static_cast<int>(r.e1.size() + r.e2.size());
  bool c1 = ne1 <= r.chain.e1_bound;
  bool c2 = ne2 == r.chain.e2_sum;
  bool c3 = r.chain.e1_bound + r.chain.e2_sum <= r.chain.rhs_first_ineq;
  bool c4 = r.chain.rhs_first_ineq <= r.chain.rhs_second_ineq;
  bool c5 = r.chain.rhs_second_ineq <= r.chain.final_bound;
  r.chain_ok = c0 && c1 && c2 && c3 && c4 && c5;
  r.conclusion_ok = h.edge_count() <= r.chain.final_bound;
  return r;
}

// Iteratively removes vertices of degree <= 1 (with their at most one edge)
// and compacts labels, yielding a minimum-degree-2 graph or an empty one.
inline LinearThreeGraph reduced_core(const LinearThreeGraph& h) {
  LinearThreeGraph g = h;
  for (;;) {
    int victim = -1;
    for (int v = 0; v < g.vertex_count() && victim < 0; ++v)
      if (g.degree(v) <= 1) victim = v;
    if (victim < 0) return g;
    std::vector<Triple> kept;
    for (const Triple& f : g.edges())
      if (!f.contains(victim)) kept.push_back(f);
    std::vector<Triple> relabeled;
    for (const Triple& f : kept) {
      auto shift = [&](int v) { return v > victim ? v - 1 : v; };
      relabeled.emplace_back(shift(f[0]), shift(f[1]), shift(f[2]));
    }
    g = LinearThreeGraph::from_edges(g.vertex_count() - 1, relabeled);
  }
}

struct CriticalConfig {
  Triple center;
  std::vector<Triple> incident;  // edges other than center meeting it
  DegreeVector dv;
};

// Edges whose degree vector is exactly <4,4,3> or exactly <5,4,2>, with
// their incident edges.
inline std::vector<CriticalConfig> find_critical_configurations(const LinearThreeGraph& h) {
  const DegreeVector t443(4, 4, 3), t542(5, 4, 2);
  std::vector<CriticalConfig> out;
  for (const Triple& e : h.edges()) {
    DegreeVector dv = h.degree_vector(e);
    if (!(dv == t443 || dv == t542)) continue;
    CriticalConfig cc{e, {}, dv};
    for (const Triple& f : h.edges())
      if (f != e && f.overlap(e) > 0) cc.incident.push_back(f);
    out.push_back(std::move(cc));
  }
  return out;
}

// First edge whose degree vector dominates <6,4,2>, or none.
inline std::optional<Triple> check_642_free(const LinearThreeGraph& h) {
  const DegreeVector t642(6, 4, 2);
  for (const Triple& e : h.edges())
    if (dominates(h.degree_vector(e), t642)) return e;
  return std::nullopt;
}

enum class CandidateVerdict : std::uint8_t {
  LinearityViolation = 0,
  Allowed,
  CrownForced,
  Unexcluded,
};

inline std::string to_string(CandidateVerdict v) {
  switch (v) {
    case CandidateVerdict::LinearityViolation: return "linearity-violation";
    case CandidateVerdict::Allowed: return "allowed";
    case CandidateVerdict::CrownForced: return "crown-forced";
    case CandidateVerdict::Unexcluded: return "unexcluded";
  }
  return "?";
}

struct Pattern {
  enum class Kind : std::uint8_t { LinkExtension, BaseEdge, DiagonalCarrier } kind;
  std::vector<int> anchor;  // pinned host vertices: a pair, or the base triple
};

inline std::string to_string(Pattern::Kind k) {
  switch (k) {
    case Pattern::Kind::LinkExtension: return "link-extension";
    case Pattern::Kind::BaseEdge: return "base-edge";
    case Pattern::Kind::DiagonalCarrier: return "diagonal-carrier";
  }
  return "?";
}

struct TestedCandidate {
  Triple f;
  CandidateVerdict verdict;
  std::optional<Crown> witness;  // for CrownForced
};

struct ExclusionReport {
  std::vector<int> x;  // the 8 link vertices plus the 3 base endpoints
  std::vector<Pattern> allowed_patterns;
  std::vector<TestedCandidate> tested;
  int capacity = 0;             // maximum edges incident to X: |patterns| = 13
  double capacity_bound = 0;    // 3|X|/2
  bool baseline_crown_free = false;
  bool ok = false;  // no candidate left unexcluded
  std::string note;
};

// Verifies that every potential extra edge meeting the closed neighborhood
// of a <4,4,3> base edge with link G6 is excluded: it violates linearity,
// matches one of the 13 slots, or closes a crown.  Candidates use at most
// two fresh outside vertices; one suffices for edges meeting X twice, since
// outside vertices are interchangeable.
inline ExclusionReport g6_exclusion_scan(const LinearThreeGraph& h, const Triple& e) {
  if (!h.has_edge(e))
    throw PreconditionViolated("g6_exclusion_scan: base edge not in host");
  if (!(h.degree_vector(e) == DegreeVector(4, 4, 3)))
    throw PreconditionViolated("g6_exclusion_scan: base edge degree vector is not <4,4,3>");
  ColoredLinkGraph link = link_graph(h, e);
  const ColoredLinkGraph& g6 = builtin(CatalogName::G6).graph;
  std::optional<ColorIso> iso = color_iso(g6, link);
  if (!iso) throw PreconditionViolated("g6_exclusion_scan: link graph is not G6");

  ExclusionReport r;
  r.x = link.vertices();
  for (int i = 0; i < 3; ++i) r.x.push_back(e[i]);
  std::sort(r.x.begin(), r.x.end());
  if (r.x.size() != 11) throw PreconditionViolated("g6_exclusion_scan: |X| must be 11");

  // Slots: every host edge may meet X only along a link-edge pair, as the
  // base edge, or through a mapped 4-cycle diagonal.
  for (const ColoredEdge& le : link.edges())
    r.allowed_patterns.push_back(
        Pattern{Pattern::Kind::LinkExtension, {le.u, le.v}});
  r.allowed_patterns.push_back(Pattern{Pattern::Kind::BaseEdge, {e[0], e[1], e[2]}});
  std::optional<FourCycles> fc = disjoint_four_cycles(g6);
  if (!fc) throw Error("internal: G6 must decompose into two 4-cycles");
  std::vector<std::pair<int, int>> mapped_diagonals;
  for (const auto& [du, dv] : fc->diagonals()) {
    int mu = iso->vertex_map.at(du), mv = iso->vertex_map.at(dv);
    mapped_diagonals.push_back({std::min(mu, mv), std::max(mu, mv)});
    r.allowed_patterns.push_back(
        Pattern{Pattern::Kind::DiagonalCarrier, {std::min(mu, mv), std::max(mu, mv)}});
  }
  r.capacity = static_cast<int>(r.allowed_patterns.size());
  r.capacity_bound = 1.5 * static_cast<double>(r.x.size());
  r.baseline_crown_free = !find_crown(h).has_value();
  r.note =
      "slot enumeration yields exactly 13 incident-edge possibilities (8 "
      "link-edge extensions, the base edge, 4 diagonal carriers); counts "
      "quoting 14 overcount by one";

  // Host with two fresh outside vertices appended.
  const int u1 = h.vertex_count(), u2 = h.vertex_count() + 1;
  LinearThreeGraph hplus(h.vertex_count() + 2);
  for (const Triple& f : h.edges()) hplus = hplus.add_edge(f);

  auto carries_diagonal = [&](const Triple& f) {
    for (const auto& [du, dv] : mapped_diagonals)
      if (f.contains(du) && f.contains(dv)) return true;
    return false;
  };
  auto test = [&](const Triple& f) {
    if (hplus.has_edge(f)) return;
    TestedCandidate tc{f, CandidateVerdict::Unexcluded, std::nullopt};
    if (hplus.pair_covered(f[0], f[1]) || hplus.pair_covered(f[0], f[2]) ||
        hplus.pair_covered(f[1], f[2])) {
      tc.verdict = CandidateVerdict::LinearityViolation;
    } else if (carries_diagonal(f)) {
      tc.verdict = CandidateVerdict::Allowed;
    } else if (auto cr = find_crown(hplus.add_edge(f))) {
      tc.verdict = CandidateVerdict::CrownForced;
      tc.witness = cr;
    }
    r.tested.push_back(std::move(tc));
  };

  const std::vector<int>& x = r.x;
  const std::size_t nx = x.size();
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = i + 1; j < nx; ++j)
      for (std::size_t k = j + 1; k < nx; ++k) test(Triple(x[i], x[j], x[k]));
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = i + 1; j < nx; ++j) test(Triple(x[i], x[j], u1));
  for (std::size_t i = 0; i < nx; ++i) test(Triple(x[i], u1, u2));

  r.ok = true;
  for (const TestedCandidate& tc : r.tested)
    r.ok = r.ok && tc.verdict != CandidateVerdict::Unexcluded;
  return r;
}

}  // namespace crowns
