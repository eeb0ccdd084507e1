#pragma once

// Canonical forms for LinearThreeGraph values.
//
// The code of a labeled graph is the ascending sequence of colexicographic
// edge keys.  The canonical code minimizes that sequence over all vertex
// relabelings, so two graphs on the same number of vertices have equal
// canonical codes exactly when they are isomorphic.
//
// Labels are assigned 0,1,2,... by a backtracking search.  An edge's key is
// determined the moment its last endpoint receives a label, and that key's
// high digit is the label just assigned, so the code grows monotonically
// along any branch: a partial assignment whose emitted prefix already
// exceeds the best known code can be abandoned, and one that falls below it
// (in test mode) proves the input labeling non-canonical.

#include <cstdint>
#include <string>
#include <vector>

#include "crowns/core.hpp"

namespace crowns {

struct CanonicalCode {
  std::string bytes;
  auto operator<=>(const CanonicalCode&) const = default;
};

namespace detail {

class TripleCodeSolver {
 public:
  TripleCodeSolver(int n, const std::vector<Triple>& edges) : edges_(edges) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (const Triple& t : edges) {
      for (int i = 0; i < 3; ++i) seen[static_cast<std::size_t>(t[i])] = 1;
    }
    for (int v = 0; v < n; ++v)
      if (seen[static_cast<std::size_t>(v)]) covered_.push_back(v);
    incident_.resize(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (int j = 0; j < 3; ++j)
        incident_[static_cast<std::size_t>(edges[i][j])].push_back(static_cast<int>(i));
    }
    label_.assign(static_cast<std::size_t>(n), -1);
  }

  // Ascending key sequence of the graph as currently labeled.
  std::vector<std::uint32_t> labeled_code() const {
    std::vector<std::uint32_t> keys;
    keys.reserve(edges_.size());
    for (const Triple& t : edges_) keys.push_back(colex_key(t));
    std::sort(keys.begin(), keys.end());
    return keys;
  }

  // True when no relabeling yields a strictly smaller code.
  bool is_canonical() {
    best_ = labeled_code();
    test_mode_ = true;
    found_smaller_ = false;
    cur_.clear();
    dfs(0);
    return !found_smaller_;
  }

  std::vector<std::uint32_t> min_code() {
    best_ = labeled_code();
    test_mode_ = false;
    found_smaller_ = false;
    cur_.clear();
    dfs(0);
    return best_;
  }

 private:
  // Keys of edges completed by giving label k to vertex v, ascending.
  void segment_for(int v, int k, std::vector<std::uint32_t>& out) const {
    out.clear();
    for (int ei : incident_[static_cast<std::size_t>(v)]) {
      const Triple& t = edges_[static_cast<std::size_t>(ei)];
      int l1 = -1, l2 = -1;
      bool complete = true;
      for (int j = 0; j < 3; ++j) {
        int w = t[j];
        if (w == v) continue;
        int lw = label_[static_cast<std::size_t>(w)];
        if (lw < 0) {
          complete = false;
          break;
        }
        (l1 < 0 ? l1 : l2) = lw;
      }
      if (!complete) continue;
      int hi = std::max(l1, l2), lo = std::min(l1, l2);
      out.push_back((static_cast<std::uint32_t>(k) << 12) |
                    (static_cast<std::uint32_t>(hi) << 6) |
                    static_cast<std::uint32_t>(lo));
    }
    std::sort(out.begin(), out.end());
  }

  // -1 / 0 / +1: cur_ extended by seg versus the same-length prefix of best_.
  int compare_extension(const std::vector<std::uint32_t>& seg) const {
    for (std::size_t i = 0; i < cur_.size(); ++i) {
      if (cur_[i] != best_[i]) return cur_[i] < best_[i] ? -1 : 1;
    }
    for (std::size_t i = 0; i < seg.size(); ++i) {
      std::uint32_t b = best_[cur_.size() + i];
      if (seg[i] != b) return seg[i] < b ? -1 : 1;
    }
    return 0;
  }

  void dfs(int k) {
    if (found_smaller_) return;
    if (static_cast<std::size_t>(k) == covered_.size()) {
      // cur_ is complete; pruning guarantees cur_ <= best_ here.
      if (cur_ != best_) {
        if (test_mode_) {
          found_smaller_ = true;
        } else {
          best_ = cur_;
        }
      }
      return;
    }
    std::vector<std::uint32_t> seg;
    for (int v : covered_) {
      if (label_[static_cast<std::size_t>(v)] >= 0) continue;
      segment_for(v, k, seg);
      if (compare_extension(seg) > 0) continue;
      if (test_mode_ && compare_extension(seg) < 0) {
        found_smaller_ = true;
        return;
      }
      label_[static_cast<std::size_t>(v)] = k;
      std::size_t old = cur_.size();
      cur_.insert(cur_.end(), seg.begin(), seg.end());
      dfs(k + 1);
      cur_.resize(old);
      label_[static_cast<std::size_t>(v)] = -1;
      if (found_smaller_) return;
    }
  }

  const std::vector<Triple>& edges_;
  std::vector<int> covered_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> label_;
  std::vector<std::uint32_t> cur_, best_;
  bool test_mode_ = false;
  bool found_smaller_ = false;
};

inline std::string encode_code(int n, const std::vector<std::uint32_t>& keys) {
  std::string out;
  out.reserve(2 + keys.size() * 3);
  out.push_back(static_cast<char>(n));
  out.push_back(static_cast<char>(keys.size()));
  for (std::uint32_t k : keys) {
    out.push_back(static_cast<char>((k >> 16) & 0xff));
    out.push_back(static_cast<char>((k >> 8) & 0xff));
    out.push_back(static_cast<char>(k & 0xff));
  }
  return out;
}

}  // namespace detail

inline CanonicalCode canonical_code(const LinearThreeGraph& g) {
  detail::TripleCodeSolver solver(g.vertex_count(), g.edges());
  return CanonicalCode{detail::encode_code(g.vertex_count(), solver.min_code())};
}

// Fast test used by the generation engine: accepts exactly the graphs whose
// current labeling realizes the canonical code.
inline bool is_canonically_labeled(const LinearThreeGraph& g) {
  detail::TripleCodeSolver solver(g.vertex_count(), g.edges());
  return solver.is_canonical();
}

}  // namespace crowns
