#include "bary/canonical.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>

namespace bary {

namespace {

using Cells = std::vector<std::vector<int>>;

constexpr std::size_t kNoJump = std::numeric_limits<std::size_t>::max();

/**
 * Individualization-refinement over ordered vertex partitions.
 *
 * Refinement colours every facet by the multiset of cells its vertices lie
 * in and splits each cell by the multiset of colours of the facets through
 * each vertex, until stable. Every leaf (discrete partition) yields a facet
 * encoding; the least encoding wins. Automorphisms discovered from equal
 * leaves prune sibling branches in the same orbit and let the search jump
 * back to the level where the two leaves diverged.
 */
class CanonicalSearch {
 public:
  CanonicalSearch(int n, const std::vector<VertexSet>& facets) : n_(n) {
    incidence_.assign(static_cast<std::size_t>(n), {});
    for (VertexSet f : facets) {
      if (f.empty()) continue;
      const int id = static_cast<int>(facets_.size());
      std::vector<int> members;
      f.for_each([&](int v) {
        members.push_back(v - 1);
        incidence_[v - 1].push_back(id);
      });
      facets_.push_back(std::move(members));
    }
    // Vertices with identical incidence are interchangeable.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return incidence_[a] < incidence_[b]; });
    twin_class_.assign(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 1; i < order.size(); ++i) {
      twin_class_[order[i]] = twin_class_[order[i - 1]] +
                              (incidence_[order[i]] != incidence_[order[i - 1]] ? 1 : 0);
    }
  }

  void run(Cells cells) {
    std::vector<int> path;
    search(std::move(cells), path);
  }

  const std::vector<int>& best_position() const { return best_position_; }
  const std::vector<VertexSet>& best_code() const { return best_code_; }

 private:
  void refine(Cells& cells) const {
    std::vector<int> cell_of(static_cast<std::size_t>(n_));
    std::vector<std::vector<int>> facet_sig(facets_.size());
    std::vector<int> facet_colour(facets_.size());
    std::vector<std::size_t> facet_order(facets_.size());
    while (static_cast<int>(cells.size()) < n_) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
      }
      for (std::size_t f = 0; f < facets_.size(); ++f) {
        facet_sig[f].clear();
        for (int v : facets_[f]) facet_sig[f].push_back(cell_of[v]);
        std::sort(facet_sig[f].begin(), facet_sig[f].end());
      }
      std::iota(facet_order.begin(), facet_order.end(), std::size_t{0});
      std::sort(facet_order.begin(), facet_order.end(),
                [&](std::size_t a, std::size_t b) { return facet_sig[a] < facet_sig[b]; });
      int colour = 0;
      for (std::size_t i = 0; i < facet_order.size(); ++i) {
        if (i > 0 && facet_sig[facet_order[i]] != facet_sig[facet_order[i - 1]]) ++colour;
        facet_colour[facet_order[i]] = colour;
      }

      Cells next;
      next.reserve(static_cast<std::size_t>(n_));
      std::vector<std::pair<std::vector<int>, int>> keyed;
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        keyed.clear();
        for (int v : cell) {
          std::vector<int> sig;
          sig.reserve(incidence_[v].size());
          for (int f : incidence_[v]) sig.push_back(facet_colour[f]);
          std::sort(sig.begin(), sig.end());
          keyed.emplace_back(std::move(sig), v);
        }
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) next.emplace_back();
          next.back().push_back(keyed[i].second);
        }
      }
      if (next.size() == cells.size()) return;
      cells = std::move(next);
    }
  }

  bool is_leaf(const Cells& cells) const {
    return std::all_of(cells.begin(), cells.end(), [&](const std::vector<int>& cell) {
      return std::all_of(cell.begin(), cell.end(),
                         [&](int v) { return twin_class_[v] == twin_class_[cell.front()]; });
    });
  }

  std::vector<VertexSet> encode(const std::vector<int>& position) const {
    std::vector<VertexSet> code;
    code.reserve(facets_.size());
    for (const auto& members : facets_) {
      std::uint64_t bits = 0;
      for (int v : members) bits |= std::uint64_t{1} << position[v];
      code.push_back(VertexSet::from_bits(bits));
    }
    std::sort(code.begin(), code.end());
    return code;
  }

  std::size_t record_automorphism(const std::vector<int>& position_a, const std::vector<int>& path_a,
                                  const std::vector<int>& position_b, const std::vector<int>& path_b) {
    std::vector<int> at(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) at[position_b[v]] = v;
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      gamma[v] = at[position_a[v]];
      identity = identity && gamma[v] == v;
    }
    if (identity) return kNoJump;

    std::size_t common = 0;
    while (common < path_a.size() && common < path_b.size() && path_a[common] == path_b[common]) {
      ++common;
    }
    bool jump = common < path_a.size() && common < path_b.size() &&
                gamma[path_a[common]] == path_b[common];
    for (std::size_t i = 0; jump && i < common; ++i) jump = gamma[path_a[i]] == path_a[i];
    generators_.push_back(std::move(gamma));
    return jump ? common : kNoJump;
  }

  std::size_t on_leaf(const Cells& cells, const std::vector<int>& path) {
    std::vector<int> position(static_cast<std::size_t>(n_));
    int next = 0;
    for (const auto& cell : cells) {
      for (int v : cell) position[v] = next++;
    }
    std::vector<VertexSet> code = encode(position);
    if (!have_leaf_) {
      have_leaf_ = true;
      first_code_ = best_code_ = std::move(code);
      first_position_ = best_position_ = std::move(position);
      first_path_ = best_path_ = path;
      return kNoJump;
    }
    if (code == first_code_) {
      return record_automorphism(first_position_, first_path_, position, path);
    }
    if (code < best_code_) {
      best_code_ = std::move(code);
      best_position_ = std::move(position);
      best_path_ = path;
      return kNoJump;
    }
    if (code == best_code_) {
      return record_automorphism(best_position_, best_path_, position, path);
    }
    return kNoJump;
  }

  // w is skipped when a known automorphism fixing the current prefix
  // pointwise maps an already explored sibling onto it.
  bool in_explored_orbit(int w, const std::vector<int>& explored,
                         const std::vector<int>& prefix) const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& g : generators_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int v) { return g[v] == v; });
      if (!fixes) continue;
      any = true;
      for (int v = 0; v < n_; ++v) {
        const int a = find(v);
        const int b = find(g[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    if (!any) return false;
    const int root = find(w);
    return std::any_of(explored.begin(), explored.end(), [&](int u) { return find(u) == root; });
  }

  std::size_t search(Cells cells, std::vector<int>& path) {
    refine(cells);
    if (is_leaf(cells)) return on_leaf(cells, path);

    std::size_t target = 0;
    while (cells[target].size() == 1) ++target;
    std::vector<int> candidates = cells[target];
    std::sort(candidates.begin(), candidates.end());

    std::vector<int> explored;
    const std::size_t depth = path.size();
    for (int w : candidates) {
      if (!explored.empty() && in_explored_orbit(w, explored, path)) continue;
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({w});
        std::vector<int> rest;
        for (int v : cells[c]) {
          if (v != w) rest.push_back(v);
        }
        child.push_back(std::move(rest));
      }
      path.push_back(w);
      const std::size_t jump = search(std::move(child), path);
      path.pop_back();
      explored.push_back(w);
      if (jump != kNoJump && jump < depth) return jump;
    }
    return kNoJump;
  }

  int n_;
  std::vector<std::vector<int>> facets_;
  std::vector<std::vector<int>> incidence_;
  std::vector<int> twin_class_;

  bool have_leaf_ = false;
  std::vector<VertexSet> first_code_, best_code_;
  std::vector<int> first_position_, best_position_;
  std::vector<int> first_path_, best_path_;
  std::vector<std::vector<int>> generators_;
};

std::vector<int> unused_vertices(const SimplicialComplex& complex) {
  std::vector<int> out;
  const VertexSet used = complex.vertex_set();
  for (int v = 1; v <= complex.ground_size(); ++v) {
    if (!used.contains(v)) out.push_back(v);
  }
  return out;
}

}  // namespace

CanonicalLabeling canonical_labeling(const SimplicialComplex& complex) {
  const int n = complex.ground_size();
  CanonicalLabeling out;
  out.form.ground_size = n;
  out.form.is_void = complex.is_void();
  if (complex.is_void() || complex.is_empty()) {
    out.form.facet_encoding = complex.facets();
    out.relabeling.resize(static_cast<std::size_t>(n));
    std::iota(out.relabeling.begin(), out.relabeling.end(), 1);
    return out;
  }

  Cells initial(1);
  const VertexSet used = complex.vertex_set();
  for (int v = 1; v <= n; ++v) {
    if (used.contains(v)) initial[0].push_back(v - 1);
  }
  if (static_cast<int>(initial[0].size()) < n) {
    initial.emplace_back();
    for (int v = 1; v <= n; ++v) {
      if (!used.contains(v)) initial[1].push_back(v - 1);
    }
  }

  CanonicalSearch search(n, complex.facets());
  search.run(std::move(initial));
  out.form.facet_encoding = search.best_code();
  out.relabeling.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) out.relabeling[v] = search.best_position()[v] + 1;
  return out;
}

CanonicalForm canonical_form(const SimplicialComplex& complex) {
  return canonical_labeling(complex).form;
}

bool is_isomorphism(const VertexBijection& map, const SimplicialComplex& from,
                    const SimplicialComplex& to) {
  if (from.is_void() || to.is_void()) return from.is_void() && to.is_void();
  if (static_cast<int>(map.image.size()) != from.ground_size()) return false;
  std::vector<char> hit(static_cast<std::size_t>(to.ground_size()) + 1, 0);
  for (int v : map.image) {
    if (v == 0) continue;
    if (v < 0 || v > to.ground_size() || hit[v]) return false;
    hit[v] = 1;
  }
  std::vector<VertexSet> mapped;
  for (VertexSet f : from.facets()) {
    std::uint64_t bits = 0;
    bool ok = true;
    f.for_each([&](int v) {
      const int target = map.image[v - 1];
      if (target == 0) ok = false;
      else bits |= std::uint64_t{1} << (target - 1);
    });
    if (!ok) return false;
    mapped.push_back(VertexSet::from_bits(bits));
  }
  sort_unique(mapped);
  return mapped == to.facets();
}

std::optional<VertexBijection> are_isomorphic(const SimplicialComplex& a,
                                              const SimplicialComplex& b) {
  if (a.is_void() != b.is_void()) return std::nullopt;
  if (a.facet_count() != b.facet_count() || dimension(a) != dimension(b)) return std::nullopt;

  VertexBijection witness;
  witness.image.assign(static_cast<std::size_t>(a.ground_size()), 0);

  if (!a.is_void()) {
    const std::vector<Component> comps_a = connected_components(a);
    const std::vector<Component> comps_b = connected_components(b);
    if (comps_a.size() != comps_b.size()) return std::nullopt;

    auto labeled = [](const std::vector<Component>& comps) {
      std::vector<CanonicalLabeling> out;
      out.reserve(comps.size());
      for (const auto& c : comps) out.push_back(canonical_labeling(c.complex));
      return out;
    };
    const std::vector<CanonicalLabeling> lab_a = labeled(comps_a);
    const std::vector<CanonicalLabeling> lab_b = labeled(comps_b);

    auto sorted_order = [](const std::vector<CanonicalLabeling>& labs) {
      std::vector<std::size_t> order(labs.size());
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return labs[x].form < labs[y].form;
      });
      return order;
    };
    const std::vector<std::size_t> order_a = sorted_order(lab_a);
    const std::vector<std::size_t> order_b = sorted_order(lab_b);

    for (std::size_t i = 0; i < order_a.size(); ++i) {
      const CanonicalLabeling& la = lab_a[order_a[i]];
      const CanonicalLabeling& lb = lab_b[order_b[i]];
      if (la.form != lb.form) return std::nullopt;
      const Component& ca = comps_a[order_a[i]];
      const Component& cb = comps_b[order_b[i]];
      std::vector<int> vertex_with_label(lb.relabeling.size() + 1);
      for (std::size_t j = 0; j < lb.relabeling.size(); ++j) {
        vertex_with_label[lb.relabeling[j]] = static_cast<int>(j);
      }
      for (std::size_t j = 0; j < la.relabeling.size(); ++j) {
        witness.image[ca.embedding[j] - 1] = cb.embedding[vertex_with_label[la.relabeling[j]]];
      }
    }
  }

  const std::vector<int> spare_a = unused_vertices(a);
  const std::vector<int> spare_b = unused_vertices(b);
  for (std::size_t i = 0; i < spare_a.size() && i < spare_b.size(); ++i) {
    witness.image[spare_a[i] - 1] = spare_b[i];
  }
  return witness;
}

}  // namespace bary
