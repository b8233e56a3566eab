#pragma once

// Shared test oracles. Everything here is written independently of the library internals.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "hball/complex.hpp"

namespace oracle {

using hball::Count;
using hball::Face;

inline Count choose(Count n, Count k) {
  if (k < 0 || n < k || n < 0) return 0;
  Count r = 1;
  for (Count i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Every subset of every facet, by brute force.
inline std::set<Face> closure(const std::vector<Face>& facets) {
  std::set<Face> out;
  for (const Face& f : facets) {
    const auto& v = f.vertices();
    for (unsigned m = 0; m < (1u << v.size()); ++m) {
      std::vector<int> s;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (m >> i & 1u) s.push_back(v[i]);
      out.insert(Face(s));
    }
  }
  return out;
}

/// h_k = sum_i (-1)^{k-i} C(d-i, k-i) f_{i-1}.
inline std::vector<Count> h_from_f(const std::vector<Count>& f) {
  const int d = static_cast<int>(f.size()) - 1;
  std::vector<Count> h(d + 1, 0);
  for (int k = 0; k <= d; ++k)
    for (int i = 0; i <= k; ++i) h[k] += ((k - i) % 2 ? -1 : 1) * choose(d - i, k - i) * f[i];
  return h;
}

/// f_{k-1} = sum_i C(d-i, k-i) h_i.
inline std::vector<Count> f_from_h(const std::vector<Count>& h) {
  const int d = static_cast<int>(h.size()) - 1;
  std::vector<Count> f(d + 1, 0);
  for (int k = 0; k <= d; ++k)
    for (int i = 0; i <= k; ++i) f[k] += choose(d - i, k - i) * h[i];
  return f;
}

inline std::vector<Count> f_by_count(const std::vector<Face>& facets, int d) {
  std::vector<Count> f(d + 1, 0);
  for (const Face& s : closure(facets)) ++f[s.size()];
  return f;
}

/// Random pure complex: `count` random k-subsets of {0..n-1}.
inline std::vector<Face> random_pure(std::mt19937& rng, int n, int k, int count) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  std::vector<Face> out;
  for (int c = 0; c < count; ++c) {
    std::shuffle(all.begin(), all.end(), rng);
    out.emplace_back(std::vector<int>(all.begin(), all.begin() + k));
  }
  return out;
}

/// Components of the subcomplex induced on the vertices outside `ridge`: two vertices are joined
/// when some facet contains both.
inline int components_without(const std::vector<Face>& facets, const Face& ridge) {
  std::set<int> verts;
  for (const Face& f : facets)
    for (int v : f)
      if (!ridge.contains(v)) verts.insert(v);
  std::vector<int> vs(verts.begin(), verts.end());
  std::vector<int> parent(vs.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto idx = [&](int v) { return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()); };
  for (const Face& f : facets) {
    int first = -1;
    for (int v : f) {
      if (ridge.contains(v)) continue;
      if (first < 0) first = idx(v);
      else parent[find(idx(v))] = find(first);
    }
  }
  int comps = 0;
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i)) ++comps;
  return comps;
}

}  // namespace oracle
