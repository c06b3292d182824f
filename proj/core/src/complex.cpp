#include "bary/complex.hpp"

#include <algorithm>
#include <numeric>

#include "bary/error.hpp"

namespace bary {

namespace {

void check_ground_size(int ground_size) {
  if (ground_size > kMaxGroundSize) {
    throw Error(ErrorCode::GroundSetTooLarge,
                "ground set of size " + std::to_string(ground_size) + " exceeds 64");
  }
  if (ground_size < 1) {
    throw Error(ErrorCode::EmptyInput, "ground set must contain at least one vertex");
  }
}

// Calls f on every k-element subset of `set`.
template <typename F>
void for_each_subset_of_size(VertexSet set, int k, F&& f) {
  const std::vector<int> elems = set.elements();
  const int n = static_cast<int>(elems.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::uint64_t bits = 0;
    for (int i : idx) bits |= std::uint64_t{1} << (elems[i] - 1);
    f(VertexSet::from_bits(bits));
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int ground_size, std::vector<VertexSet> facets) {
  check_ground_size(ground_size);
  const VertexSet ground = VertexSet::range(ground_size);
  for (VertexSet f : facets) {
    if (!f.is_subset_of(ground)) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "facet " + f.to_string() + " not contained in [" + std::to_string(ground_size) + "]");
    }
  }
  std::vector<VertexSet> kept = maximal_elements(std::move(facets));
  if (kept.empty()) kept.push_back(VertexSet{});
  return SimplicialComplex(ground_size, std::move(kept), false);
}

SimplicialComplex SimplicialComplex::empty_complex(int ground_size) {
  check_ground_size(ground_size);
  return SimplicialComplex(ground_size, {VertexSet{}}, false);
}

SimplicialComplex SimplicialComplex::void_complex(int ground_size) {
  check_ground_size(ground_size);
  return SimplicialComplex(ground_size, {}, true);
}

SimplicialComplex SimplicialComplex::simplex(int ground_size) {
  check_ground_size(ground_size);
  return SimplicialComplex(ground_size, {VertexSet::range(ground_size)}, false);
}

VertexSet SimplicialComplex::vertex_set() const {
  VertexSet all;
  for (VertexSet f : facets_) all = all | f;
  return all;
}

bool SimplicialComplex::contains_face(VertexSet face) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](VertexSet f) { return face.is_subset_of(f); });
}

SimplicialComplex relabel(const SimplicialComplex& complex, const std::vector<int>& image) {
  const int n = complex.ground_size();
  if (static_cast<int>(image.size()) != n) {
    throw Error(ErrorCode::VertexOutOfRange, "relabeling has wrong length");
  }
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : image) {
    if (v < 1 || v > n || seen[v]) {
      throw Error(ErrorCode::VertexOutOfRange, "relabeling is not a permutation");
    }
    seen[v] = 1;
  }
  if (complex.is_void()) return SimplicialComplex::void_complex(n);
  std::vector<VertexSet> mapped;
  mapped.reserve(complex.facet_count());
  for (VertexSet f : complex.facets()) {
    std::uint64_t bits = 0;
    f.for_each([&](int v) { bits |= std::uint64_t{1} << (image[v - 1] - 1); });
    mapped.push_back(VertexSet::from_bits(bits));
  }
  return SimplicialComplex::from_facets(n, std::move(mapped));
}

std::vector<VertexSet> faces(const SimplicialComplex& complex) {
  std::vector<VertexSet> out;
  for (VertexSet f : complex.facets()) {
    const std::uint64_t bits = f.bits();
    for (std::uint64_t sub = bits; sub != 0; sub = (sub - 1) & bits) {
      out.push_back(VertexSet::from_bits(sub));
    }
  }
  sort_unique(out);
  return out;
}

std::vector<std::int64_t> f_vector(const SimplicialComplex& complex) {
  std::vector<std::int64_t> f(static_cast<std::size_t>(std::max(dimension(complex) + 1, 0)), 0);
  for (VertexSet face : faces(complex)) ++f[face.size() - 1];
  return f;
}

int dimension(const SimplicialComplex& complex) {
  int dim = -1;
  for (VertexSet f : complex.facets()) dim = std::max(dim, f.size() - 1);
  return dim;
}

std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& complex) {
  // A set is a nonface iff it meets the complement of every facet, so the
  // minimal nonfaces are the minimal transversals of those complements.
  const VertexSet ground = VertexSet::range(complex.ground_size());
  std::vector<VertexSet> edges;
  for (VertexSet f : complex.facets()) edges.push_back(ground - f);
  std::sort(edges.begin(), edges.end());

  std::vector<VertexSet> transversals{VertexSet{}};
  for (VertexSet edge : edges) {
    std::vector<VertexSet> next;
    for (VertexSet t : transversals) {
      if (!(t & edge).empty()) {
        next.push_back(t);
      } else {
        edge.for_each([&](int v) { next.push_back(t.with(v)); });
      }
    }
    transversals = minimal_elements(std::move(next));
    if (transversals.empty()) break;
  }
  return transversals;
}

SimplicialComplex skeleton(const SimplicialComplex& complex, int i) {
  const int dim = dimension(complex);
  if (i < 0 || i > dim) {
    throw Error(ErrorCode::SkeletonIndexOutOfRange,
                "skeleton index " + std::to_string(i) + " outside 0.." + std::to_string(dim));
  }
  std::vector<VertexSet> facets;
  for (VertexSet f : complex.facets()) {
    if (f.size() <= i + 1) {
      facets.push_back(f);
    } else {
      for_each_subset_of_size(f, i + 1, [&](VertexSet s) { facets.push_back(s); });
    }
  }
  return SimplicialComplex::from_facets(complex.ground_size(), std::move(facets));
}

LabeledGraph one_skeleton_graph(const SimplicialComplex& complex) {
  std::vector<Edge> edges;
  for (VertexSet f : complex.facets()) {
    const std::vector<int> elems = f.elements();
    for (std::size_t a = 0; a < elems.size(); ++a) {
      for (std::size_t b = a + 1; b < elems.size(); ++b) {
        edges.emplace_back(elems[a] - 1, elems[b] - 1);
      }
    }
  }
  return LabeledGraph(complex.ground_size(), std::move(edges));
}

std::vector<Component> connected_components(const SimplicialComplex& complex) {
  const int n = complex.ground_size();
  DisjointSets sets(n);
  for (VertexSet f : complex.facets()) {
    const int first = f.min();
    f.for_each([&](int v) { sets.unite(first - 1, v - 1); });
  }
  const VertexSet used = complex.vertex_set();

  std::vector<Component> out;
  std::vector<int> component_of(static_cast<std::size_t>(n), -1);
  used.for_each([&](int v) {
    const int root = sets.find(v - 1);
    if (component_of[root] < 0) {
      component_of[root] = static_cast<int>(out.size());
      out.push_back(Component{SimplicialComplex::empty_complex(1), {}});
    }
    out[component_of[root]].embedding.push_back(v);
  });

  std::vector<std::vector<VertexSet>> facets(out.size());
  for (VertexSet f : complex.facets()) {
    if (f.empty()) continue;
    const int c = component_of[sets.find(f.min() - 1)];
    const std::vector<int>& emb = out[c].embedding;
    std::uint64_t bits = 0;
    f.for_each([&](int v) {
      const auto pos = std::lower_bound(emb.begin(), emb.end(), v) - emb.begin();
      bits |= std::uint64_t{1} << pos;
    });
    facets[c].push_back(VertexSet::from_bits(bits));
  }
  for (std::size_t c = 0; c < out.size(); ++c) {
    out[c].complex = SimplicialComplex::from_facets(static_cast<int>(out[c].embedding.size()),
                                                    std::move(facets[c]));
  }
  return out;
}

bool is_connected(const SimplicialComplex& complex) {
  return connected_components(complex).size() == 1;
}

bool is_pure(const SimplicialComplex& complex) {
  const auto& f = complex.facets();
  return std::all_of(f.begin(), f.end(), [&](VertexSet s) { return s.size() == f.front().size(); });
}

std::int64_t euler_characteristic(const SimplicialComplex& complex) {
  std::int64_t chi = 0;
  const std::vector<std::int64_t> f = f_vector(complex);
  for (std::size_t i = 0; i < f.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * f[i];
  return chi;
}

bool is_skeleton_of_simplex(const SimplicialComplex& complex) {
  if (complex.is_void() || complex.is_empty() || !is_pure(complex)) return false;
  const int n = complex.vertex_set().size();
  const int k = complex.facets().front().size();
  // Binomial C(n, k), abandoned once it passes the facet count.
  std::uint64_t count = 1;
  for (int i = 1; i <= k; ++i) {
    count = count * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    if (count > complex.facet_count()) return false;
  }
  return count == complex.facet_count();
}

}  // namespace bary
