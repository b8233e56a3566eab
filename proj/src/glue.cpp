#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "hball/complex.hpp"

namespace hball {

namespace {

struct UnionFind {
  std::map<int, int> parent;
  int find(int x) {
    auto it = parent.find(x);
    if (it == parent.end()) return parent[x] = x;
    if (it->second == x) return x;
    return it->second = find(it->second);
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<int> pair_image(const GluePair& p) {
  if (p.image.empty()) return p.second.vertices();
  std::vector<int> sorted = p.image;
  std::sort(sorted.begin(), sorted.end());
  if (p.image.size() != p.first.size() || sorted != p.second.vertices())
    throw GlueError("glue bijection must map onto the second face");
  return p.image;
}

void require_boundary_ridge(const SimplicialComplex& c, const SimplicialComplex& bd, const Face& f) {
  if (static_cast<int>(f.size()) != c.dim()) throw GlueError("glued face " + to_string(f) + " is not a ridge");
  if (!std::binary_search(bd.facets().begin(), bd.facets().end(), f))
    throw GlueError("glued face " + to_string(f) + " is not a boundary ridge");
}

// A summand is one input complex with a label map into the result.
struct Summand {
  const SimplicialComplex* complex;
  std::function<int(int)> relabel;
};

SimplicialComplex glue_impl(const std::vector<Summand>& parts, const std::vector<std::pair<Face, Face>>& ridges,
                            UnionFind& uf) {
  auto phi = [&](int label) { return uf.find(label); };
  std::set<Face> glued_sides;
  for (const auto& [x, y] : ridges) {
    glued_sides.insert(x);
    glued_sides.insert(y);
  }
  auto in_glued = [&](const Face& f) {
    return std::any_of(glued_sides.begin(), glued_sides.end(), [&](const Face& g) { return f.is_subset_of(g); });
  };

  std::map<Face, std::vector<Face>> preimages;
  std::vector<Face> result;
  for (const Summand& s : parts) {
    for (const auto& layer : s.complex->faces_by_size()) {
      for (const Face& f : layer) {
        if (f.empty()) continue;
        std::vector<int> lifted, mapped;
        for (int v : f) lifted.push_back(s.relabel(v));
        for (int v : lifted) mapped.push_back(phi(v));
        std::vector<int> sorted = mapped;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
          throw GlueError("identification collapses face " + to_string(f));
        preimages[Face(std::move(sorted))].push_back(Face(std::move(lifted)));
      }
    }
    for (const Face& f : s.complex->facets()) {
      std::vector<int> mapped;
      for (int v : f) mapped.push_back(phi(s.relabel(v)));
      result.emplace_back(std::move(mapped));
    }
  }
  for (const auto& [img, pre] : preimages) {
    if (pre.size() < 2) continue;
    for (const Face& f : pre)
      if (!in_glued(f)) throw GlueError("identification merges faces outside the glued ridges at " + to_string(img));
  }
  std::vector<Face> sorted = result;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw GlueError("identification merges two facets");
  return SimplicialComplex(std::move(result));
}

}  // namespace

SimplicialComplex glue(const SimplicialComplex& a, const SimplicialComplex& b, const GlueMap& map) {
  if (!a.is_pure() || !b.is_pure() || a.dim() != b.dim() || a.is_void() || b.is_void())
    throw GlueError("gluing needs two pure complexes of the same dimension");
  const SimplicialComplex bda = ridge_boundary(a), bdb = ridge_boundary(b);
  const int offset = a.vertices().empty() ? 0 : a.vertices().back() + 1;
  auto shift = [offset](int v) { return v + offset; };

  UnionFind uf;
  std::vector<std::pair<Face, Face>> ridges;
  for (const GluePair& p : map.pairs) {
    require_boundary_ridge(a, bda, p.first);
    require_boundary_ridge(b, bdb, p.second);
    std::vector<int> img = pair_image(p);
    std::vector<int> shifted;
    for (std::size_t i = 0; i < img.size(); ++i) {
      uf.unite(p.first[i], shift(img[i]));
      shifted.push_back(shift(img[i]));
    }
    ridges.emplace_back(p.first, Face(shifted));
  }
  return glue_impl({{&a, [](int v) { return v; }}, {&b, shift}}, ridges, uf);
}

SimplicialComplex self_glue(const SimplicialComplex& a, const GlueMap& map) {
  if (!a.is_pure() || a.is_void()) throw GlueError("self-gluing needs a pure complex");
  const SimplicialComplex bd = ridge_boundary(a);
  UnionFind uf;
  std::vector<std::pair<Face, Face>> ridges;
  for (const GluePair& p : map.pairs) {
    require_boundary_ridge(a, bd, p.first);
    require_boundary_ridge(a, bd, p.second);
    if (p.first == p.second) throw GlueError("a ridge cannot be glued to itself");
    std::vector<int> img = pair_image(p);
    for (std::size_t i = 0; i < img.size(); ++i) uf.unite(p.first[i], img[i]);
    ridges.emplace_back(p.first, p.second);
  }
  return glue_impl({{&a, [](int v) { return v; }}}, ridges, uf);
}

}  // namespace hball
