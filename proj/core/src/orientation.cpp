#include "bary/orientation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "bary/error.hpp"

namespace bary {

Orientation Orientation::reverse() const {
  Orientation out = *this;
  out.reversed.flip();
  return out;
}

bool is_transitive(const LabeledGraph& graph, const Orientation& orientation) {
  if (orientation.reversed.size() != graph.edge_count()) return false;
  const auto n = static_cast<std::size_t>(graph.vertex_count());
  std::vector<char> arrow(n * n, 0);
  std::vector<std::vector<int>> out(n);
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const int t = orientation.tail(graph, e);
    const int h = orientation.head(graph, e);
    arrow[t * n + h] = 1;
    out[t].push_back(h);
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (int v : out[u]) {
      for (int w : out[v]) {
        if (!arrow[u * n + w]) return false;
      }
    }
  }
  return true;
}

namespace {

/**
 * Directed edges are grouped by the forcing relation: x -> y forces x -> z
 * (and y -> x forces z -> x) whenever y and z are non-adjacent neighbours of
 * x. Each class and its reverse form one boolean variable. Triangles then
 * constrain the variables: a directed path a -> b -> c forces a -> c.
 */
class OrientationSearch {
 public:
  OrientationSearch(const LabeledGraph& graph, std::size_t limit, std::size_t stop_after)
      : graph_(graph), limit_(limit), stop_after_(stop_after) {}

  std::vector<Orientation> run() {
    const std::size_t m = graph_.edge_count();
    if (m == 0) return {Orientation{}};
    if (!build_variables()) return {};
    value_.assign(variable_edges_.size(), -1);
    solve(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  int arc(int from, int to) const {
    const int e = graph_.edge_index(from, to);
    return 2 * e + (from == graph_.edges()[e].first ? 0 : 1);
  }

  bool build_variables() {
    const std::size_t m = graph_.edge_count();
    std::vector<int> parent(2 * m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    for (int x = 0; x < graph_.vertex_count(); ++x) {
      const std::vector<int>& nb = graph_.neighbors(x);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          if (graph_.adjacent(nb[i], nb[j])) continue;
          unite(arc(x, nb[i]), arc(x, nb[j]));
          unite(arc(nb[i], x), arc(nb[j], x));
        }
      }
    }

    variable_of_.assign(m, -1);
    flip_of_.assign(m, false);
    std::vector<int> variable_of_root(2 * m, -1);
    for (std::size_t e = 0; e < m; ++e) {
      const int forward = find(static_cast<int>(2 * e));
      const int backward = find(static_cast<int>(2 * e + 1));
      if (forward == backward) return false;
      if (variable_of_root[forward] >= 0) {
        variable_of_[e] = variable_of_root[forward];
      } else if (variable_of_root[backward] >= 0) {
        variable_of_[e] = variable_of_root[backward];
        flip_of_[e] = true;
      } else {
        variable_of_[e] = static_cast<int>(variable_edges_.size());
        variable_of_root[forward] = variable_of_[e];
        variable_edges_.emplace_back();
      }
      variable_edges_[variable_of_[e]].push_back(static_cast<int>(e));
    }
    return true;
  }

  // -1 unassigned, otherwise 1 when the edge points from its larger endpoint.
  int reversed(int e) const {
    const int v = value_[variable_of_[e]];
    return v < 0 ? -1 : (v ^ (flip_of_[e] ? 1 : 0));
  }

  bool points(int from, int to) const {
    const int e = graph_.edge_index(from, to);
    const int r = reversed(e);
    if (r < 0) return false;
    return (r == 1) == (from == graph_.edges()[e].second);
  }

  // Requests edge {from, to} to be oriented from -> to.
  bool demand(int from, int to, std::vector<int>& queue) {
    const int e = graph_.edge_index(from, to);
    const int want = from == graph_.edges()[e].first ? 0 : 1;
    const int r = reversed(e);
    if (r >= 0) return r == want;
    const int var = variable_of_[e];
    value_[var] = want ^ (flip_of_[e] ? 1 : 0);
    trail_.push_back(var);
    queue.push_back(var);
    return true;
  }

  bool propagate(int var, int val) {
    value_[var] = val;
    trail_.push_back(var);
    std::vector<int> queue{var};
    while (!queue.empty()) {
      const int current = queue.back();
      queue.pop_back();
      for (int e : variable_edges_[current]) {
        const auto [a, b] = graph_.edges()[e];
        const int u = reversed(e) == 0 ? a : b;
        const int v = reversed(e) == 0 ? b : a;
        for (int w : graph_.neighbors(u)) {
          if (w == v || !graph_.adjacent(v, w)) continue;
          // u -> v is set; close any two-edge path through the triangle.
          if (points(v, w) && !demand(u, w, queue)) return false;
          if (points(w, u) && !demand(w, v, queue)) return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  void record() {
    Orientation o;
    o.reversed.resize(graph_.edge_count());
    for (std::size_t e = 0; e < graph_.edge_count(); ++e) {
      o.reversed[e] = reversed(static_cast<int>(e)) == 1;
    }
    found_.push_back(std::move(o));
    if (found_.size() > limit_) {
      throw Error(ErrorCode::SearchLimitExceeded,
                  "more than " + std::to_string(limit_) + " transitive orientations");
    }
  }

  bool done() const { return found_.size() >= stop_after_; }

  void solve(std::size_t next) {
    while (next < value_.size() && value_[next] >= 0) ++next;
    if (next == value_.size()) {
      record();
      return;
    }
    for (int val = 0; val < 2 && !done(); ++val) {
      const std::size_t mark = trail_.size();
      if (propagate(static_cast<int>(next), val)) solve(next + 1);
      undo(mark);
    }
  }

  const LabeledGraph& graph_;
  std::size_t limit_;
  std::size_t stop_after_;
  std::vector<int> variable_of_;
  std::vector<bool> flip_of_;
  std::vector<std::vector<int>> variable_edges_;
  std::vector<int> value_;
  std::vector<int> trail_;
  std::vector<Orientation> found_;
};

}  // namespace

std::vector<Orientation> transitive_orientations(const LabeledGraph& graph, std::size_t limit) {
  return OrientationSearch(graph, limit, std::numeric_limits<std::size_t>::max()).run();
}

bool is_transitively_orientable(const LabeledGraph& graph) {
  return !OrientationSearch(graph, kDefaultOrientationLimit, 1).run().empty();
}

}  // namespace bary
