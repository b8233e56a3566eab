#include "hball/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace hball {

Graph Graph::from_edges(int vertices, const std::vector<std::pair<int, int>>& edges) {
  Graph g(vertices);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("bad edge");
  adj[u] |= 1u << v;
  adj[v] |= 1u << u;
}

int Graph::degree(int v) const { return std::popcount(adj[v]); }

int Graph::max_degree() const {
  int m = 0;
  for (int v = 0; v < n; ++v) m = std::max(m, degree(v));
  return m;
}

int Graph::edge_count() const {
  int s = 0;
  for (int v = 0; v < n; ++v) s += degree(v);
  return s / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

namespace {

using Code = std::vector<std::uint32_t>;

// Equitable refinement: colour classes split by the multiset of neighbour colours until stable.
void refine(const Graph& g, std::vector<int>& col) {
  const int k = g.n;
  int classes = static_cast<int>(std::set<int>(col.begin(), col.end()).size());
  std::vector<std::pair<std::vector<int>, int>> sig(k);
  while (true) {
    for (int v = 0; v < k; ++v) {
      std::vector<int> s{col[v]};
      std::vector<int> nb;
      for (std::uint32_t rest = g.adj[v]; rest; rest &= rest - 1) nb.push_back(col[std::countr_zero(rest)]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[v] = {std::move(s), v};
    }
    std::vector<std::vector<int>> distinct;
    for (auto& [s, v] : sig) distinct.push_back(s);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (auto& [s, v] : sig) col[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), s) - distinct.begin());
    const int now = static_cast<int>(distinct.size());
    if (now == classes) return;
    classes = now;
  }
}

struct ComponentSearch {
  const Graph& g;
  Code best;
  std::vector<int> best_col;

  void leaf(const std::vector<int>& col) {
    Code code(g.n, 0);
    for (int v = 0; v < g.n; ++v) {
      std::uint32_t row = 0;
      for (std::uint32_t rest = g.adj[v]; rest; rest &= rest - 1) row |= 1u << col[std::countr_zero(rest)];
      code[col[v]] = row;
    }
    if (best.empty() || code < best) {
      best = std::move(code);
      best_col = col;
    }
  }

  void search(std::vector<int> col) {
    refine(g, col);
    std::vector<int> size(g.n, 0);
    for (int c : col) ++size[c];
    int target = -1;
    for (int c = 0; c < g.n; ++c)
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
    if (target < 0) {
      leaf(col);
      return;
    }
    std::vector<int> tried;
    for (int v = 0; v < g.n; ++v) {
      if (col[v] != target) continue;
      // Twins in the same cell are swapped by an automorphism, so one representative suffices.
      bool twin = std::any_of(tried.begin(), tried.end(), [&](int w) {
        std::uint32_t mv = g.adj[v] & ~(1u << w), mw = g.adj[w] & ~(1u << v);
        return mv == mw;
      });
      if (twin) continue;
      tried.push_back(v);
      std::vector<int> next(g.n);
      for (int u = 0; u < g.n; ++u) next[u] = 2 * col[u] + (u == v ? 0 : 1);
      search(std::move(next));
    }
  }
};

}  // namespace

Graph canonical_form(const Graph& g) {
  std::vector<int> comp(g.n, -1);
  std::vector<std::vector<int>> members;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(members.size());
    members.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members[id].push_back(v);
      for (std::uint32_t rest = g.adj[v]; rest; rest &= rest - 1) {
        int u = std::countr_zero(rest);
        if (comp[u] < 0) {
          comp[u] = id;
          stack.push_back(u);
        }
      }
    }
    std::sort(members[id].begin(), members[id].end());
  }

  struct Piece {
    Code key;
    std::vector<int> order;  // original vertices in canonical order
  };
  std::vector<Piece> pieces;
  for (const auto& mem : members) {
    const int k = static_cast<int>(mem.size());
    Graph sub(k);
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (g.has_edge(mem[i], mem[j])) sub.add_edge(i, j);
    ComponentSearch cs{sub, {}, {}};
    cs.search(std::vector<int>(k, 0));
    Piece p;
    p.key.push_back(static_cast<std::uint32_t>(k));
    p.key.insert(p.key.end(), cs.best.begin(), cs.best.end());
    p.order.resize(k);
    for (int i = 0; i < k; ++i) p.order[cs.best_col[i]] = mem[i];
    pieces.push_back(std::move(p));
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.key < b.key; });

  std::vector<int> label(g.n);
  int next = 0;
  for (const Piece& p : pieces)
    for (int v : p.order) label[v] = next++;
  Graph out(g.n);
  for (auto [u, v] : g.edges()) out.add_edge(label[u], label[v]);
  return out;
}

const std::vector<Graph>& graphs_with_edges(int m, int max_vertices) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Graph>> cache;
  if (m < 0) throw std::invalid_argument("edge count must be nonnegative");
  if (max_vertices > 32) max_vertices = 32;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(m, max_vertices);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  std::vector<Graph> level{Graph(0)};
  for (int k = 0; k < m; ++k) {
    std::set<Graph> next;
    for (const Graph& g : level) {
      const int n = g.n;
      auto try_add = [&](int vertices, int u, int v) {
        Graph h = g;
        h.n = vertices;
        h.adj.resize(vertices, 0);
        h.add_edge(u, v);
        next.insert(canonical_form(h));
      };
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (!g.has_edge(u, v)) try_add(n, u, v);
      if (n + 1 <= max_vertices)
        for (int u = 0; u < n; ++u) try_add(n + 1, u, n);
      if (n + 2 <= max_vertices) try_add(n + 2, n, n + 1);
    }
    level.assign(next.begin(), next.end());
  }
  return cache.emplace(key, std::move(level)).first->second;
}

Count triples_touching(const Graph& g, int n) {
  if (g.n > n) throw std::invalid_argument("graph does not fit in K_n");
  const Count e = g.edge_count();
  Count wedges = 0, triangles = 0;
  for (int v = 0; v < g.n; ++v) {
    const Count d = g.degree(v);
    wedges += d * (d - 1) / 2;
  }
  for (auto [u, v] : g.edges()) triangles += std::popcount(g.adj[u] & g.adj[v]);
  triangles /= 3;
  // Inclusion-exclusion over the edges a triple contains.
  return e * (n - 2) - wedges + triangles;
}

Count complement_triangles(const Graph& g, int n) {
  const Count all = static_cast<Count>(n) * (n - 1) * (n - 2) / 6;
  return all - triples_touching(g, n);
}

}  // namespace hball
