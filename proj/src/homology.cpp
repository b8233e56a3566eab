#include "hball/homology.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <sstream>

namespace hball {

using detail::FaceLattice;
using detail::Mask;

namespace {

// ---------------------------------------------------------------------------
// Dense Smith normal form over arbitrary-precision integers.

std::vector<BigInt> dense_snf(IntMatrix a) {
  std::vector<BigInt> factors;
  const std::size_t R = a.rows, C = a.cols;
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < C; ++c) std::swap(a(i, c), a(j, c));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < R; ++r) std::swap(a(r, i), a(r, j));
  };

  for (std::size_t t = 0; t < std::min(R, C); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pr = R, pc = C;
    BigInt best;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j)
        if (a(i, j) != 0 && (pr == R || abs(a(i, j)) < best)) {
          best = abs(a(i, j));
          pr = i;
          pc = j;
        }
    if (pr == R) break;
    swap_rows(t, pr);
    swap_cols(t, pc);

    bool done = false;
    while (!done) {
      done = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (a(i, t) == 0) continue;
        BigInt q = a(i, t) / a(t, t);
        for (std::size_t c = t; c < C; ++c) a(i, c) -= q * a(t, c);
        if (a(i, t) != 0) {
          swap_rows(t, i);
          done = false;
        }
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (a(t, j) == 0) continue;
        BigInt q = a(t, j) / a(t, t);
        for (std::size_t r = t; r < R; ++r) a(r, j) -= q * a(r, t);
        if (a(t, j) != 0) {
          swap_cols(t, j);
          done = false;
        }
      }
      if (!done) continue;
      // Enforce divisibility of the remaining block by the pivot.
      for (std::size_t i = t + 1; i < R && done; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (a(i, j) % a(t, t) != 0) {
            for (std::size_t c = t; c < C; ++c) a(t, c) += a(i, c);
            done = false;
            break;
          }
    }
    factors.push_back(abs(a(t, t)));
  }
  return factors;
}

// ---------------------------------------------------------------------------
// Sparse elimination with unit pivots; leftovers go to the dense routine.

using Entry = std::pair<std::uint32_t, std::int64_t>;
using Column = std::vector<Entry>;

struct Overflow {};

std::int64_t checked_axpy(std::int64_t y, std::int64_t a, std::int64_t x) {
  std::int64_t prod, sum;
  if (__builtin_mul_overflow(a, x, &prod) || __builtin_add_overflow(y, prod, &sum)) throw Overflow{};
  return sum;
}

// target -= factor * pivot_col, both sorted by row.
void subtract_scaled(Column& target, const Column& pivot, std::int64_t factor, Column& scratch,
                     std::vector<std::uint32_t>& new_rows) {
  scratch.clear();
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
      scratch.push_back(target[i++]);
    } else if (i == target.size() || pivot[j].first < target[i].first) {
      scratch.emplace_back(pivot[j].first, checked_axpy(0, -factor, pivot[j].second));
      new_rows.push_back(pivot[j].first);
      ++j;
    } else {
      std::int64_t v = checked_axpy(target[i].second, -factor, pivot[j].second);
      if (v != 0) scratch.emplace_back(target[i].first, v);
      ++i;
      ++j;
    }
  }
  target.swap(scratch);
}

struct SparseResult {
  std::size_t units = 0;
  std::vector<BigInt> rest;  // invariant factors of the non-unit remainder
};

SparseResult sparse_snf(std::vector<Column> cols, std::size_t nrows) {
  SparseResult out;
  std::vector<std::vector<std::uint32_t>> row_cols(nrows);
  for (std::uint32_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : cols[c]) row_cols[r].push_back(c);

  std::vector<char> alive(cols.size(), 1);
  std::vector<std::uint32_t> order(cols.size());
  std::iota(order.begin(), order.end(), 0);
  Column scratch;
  std::vector<std::uint32_t> new_rows;

  bool progress = true;
  while (progress) {
    progress = false;
    for (std::uint32_t c : order) {
      if (!alive[c]) continue;
      if (cols[c].empty()) {
        alive[c] = 0;
        continue;
      }
      // Prefer the unit entry whose row touches the fewest columns.
      std::size_t best = cols[c].size();
      for (std::size_t k = 0; k < cols[c].size(); ++k) {
        const auto& [r, v] = cols[c][k];
        if ((v == 1 || v == -1) && (best == cols[c].size() || row_cols[r].size() < row_cols[cols[c][best].first].size()))
          best = k;
      }
      if (best == cols[c].size()) continue;
      const std::uint32_t prow = cols[c][best].first;
      const std::int64_t pval = cols[c][best].second;
      alive[c] = 0;
      const Column pivot = std::move(cols[c]);
      cols[c].clear();
      std::vector<std::uint32_t> touching;
      touching.swap(row_cols[prow]);
      for (std::uint32_t c2 : touching) {
        if (c2 == c || !alive[c2]) continue;
        auto it = std::lower_bound(cols[c2].begin(), cols[c2].end(), Entry{prow, INT64_MIN});
        if (it == cols[c2].end() || it->first != prow) continue;  // stale index entry
        new_rows.clear();
        subtract_scaled(cols[c2], pivot, checked_axpy(0, it->second, pval), scratch, new_rows);
        for (std::uint32_t r : new_rows) row_cols[r].push_back(c2);
      }
      ++out.units;
      progress = true;
    }
  }

  // Whatever survives has no unit entries.
  std::vector<std::uint32_t> rows_left;
  std::vector<std::uint32_t> cols_left;
  for (std::uint32_t c = 0; c < cols.size(); ++c)
    if (alive[c] && !cols[c].empty()) {
      cols_left.push_back(c);
      for (const auto& e : cols[c]) rows_left.push_back(e.first);
    }
  if (cols_left.empty()) return out;
  std::sort(rows_left.begin(), rows_left.end());
  rows_left.erase(std::unique(rows_left.begin(), rows_left.end()), rows_left.end());
  IntMatrix m(rows_left.size(), cols_left.size());
  for (std::size_t j = 0; j < cols_left.size(); ++j)
    for (const auto& [r, v] : cols[cols_left[j]]) {
      std::size_t i = std::lower_bound(rows_left.begin(), rows_left.end(), r) - rows_left.begin();
      m(i, j) = v;
    }
  out.rest = dense_snf(std::move(m));
  return out;
}

std::vector<Column> boundary_columns(const FaceLattice& lat, std::size_t size) {
  const auto& faces = lat.by_size[size];
  std::vector<Column> cols(faces.size());
  for (std::size_t j = 0; j < faces.size(); ++j) {
    Mask f = faces[j];
    int pos = 0;
    for (Mask rest = f; rest; rest &= rest - 1, ++pos) {
      Mask sub = f & ~(rest & -rest);
      std::size_t row = lat.index_of(size - 1, sub);
      cols[j].emplace_back(static_cast<std::uint32_t>(row), (pos % 2) ? -1 : 1);
    }
    std::sort(cols[j].begin(), cols[j].end());
  }
  return cols;
}

IntMatrix to_dense(const std::vector<Column>& cols, std::size_t nrows) {
  IntMatrix m(nrows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [r, v] : cols[j]) m(r, j) = v;
  return m;
}

struct MapInvariants {
  std::size_t rank = 0;
  std::vector<BigInt> nonunit;
};

MapInvariants boundary_invariants(const FaceLattice& lat, std::size_t size) {
  MapInvariants out;
  if (size == 0 || size >= lat.by_size.size()) return out;
  auto cols = boundary_columns(lat, size);
  const std::size_t nrows = lat.by_size[size - 1].size();
  std::vector<BigInt> factors;
  try {
    SparseResult s = sparse_snf(cols, nrows);
    out.rank = s.units + s.rest.size();
    factors = std::move(s.rest);
  } catch (const Overflow&) {
    factors = dense_snf(to_dense(cols, nrows));
    out.rank = factors.size();
  }
  for (auto& f : factors)
    if (f != 1) out.nonunit.push_back(f);
  std::sort(out.nonunit.begin(), out.nonunit.end());
  return out;
}

HomologyProfile homology_of_lattice(const FaceLattice& lat) {
  HomologyProfile p;
  const std::size_t top = lat.by_size.size();  // sizes 0..top-1
  if (top == 0) return p;
  std::vector<MapInvariants> maps(top + 1);
  for (std::size_t k = 1; k < top; ++k) maps[k] = boundary_invariants(lat, k);
  p.degrees.resize(top);
  long euler_chain = 0;
  for (std::size_t k = 0; k < top; ++k) {
    const std::size_t n = lat.by_size[k].size();
    p.degrees[k].rank = n - maps[k].rank - maps[k + 1].rank;
    p.degrees[k].torsion = maps[k + 1].nonunit;
    euler_chain += (k % 2 ? 1 : -1) * static_cast<long>(n);
  }
  if (euler_chain != p.reduced_euler()) throw std::logic_error("Euler characteristic cross-check failed");
  return p;
}

}  // namespace

IntMatrix boundary_matrix(const SimplicialComplex& c, int i) {
  if (i < 0 || i > c.dim() + 1) throw std::invalid_argument("boundary_matrix degree out of range");
  // Work on lexicographically sorted faces, as the public contract promises.
  auto faces = c.faces_by_size();
  const std::size_t size = static_cast<std::size_t>(i) + 1;
  const std::vector<Face> empty;
  const auto& colf = size < faces.size() ? faces[size] : empty;
  const auto& rowf = faces[size - 1];
  IntMatrix m(rowf.size(), colf.size());
  for (std::size_t j = 0; j < colf.size(); ++j) {
    const Face& f = colf[j];
    for (std::size_t pos = 0; pos < f.size(); ++pos) {
      Face sub = f.without(f[pos]);
      std::size_t r = std::lower_bound(rowf.begin(), rowf.end(), sub) - rowf.begin();
      m(r, j) = (pos % 2) ? -1 : 1;
    }
  }
  return m;
}

SmithForm smith_normal_form(IntMatrix m) { return SmithForm{dense_snf(std::move(m))}; }

const DegreeHomology& HomologyProfile::at(int degree) const {
  static const DegreeHomology zero{};
  if (degree < -1 || degree + 1 >= static_cast<int>(degrees.size())) return zero;
  return degrees[degree + 1];
}

bool HomologyProfile::acyclic() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const DegreeHomology& d) { return d.zero(); });
}

bool HomologyProfile::sphere_like(int k) const {
  for (int i = -1; i + 1 < static_cast<int>(degrees.size()); ++i) {
    const DegreeHomology& h = at(i);
    if (i == k) {
      if (h.rank != 1 || !h.torsion.empty()) return false;
    } else if (!h.zero()) {
      return false;
    }
  }
  return k + 1 < static_cast<int>(degrees.size());
}

long HomologyProfile::reduced_euler() const {
  long e = 0;
  for (std::size_t k = 0; k < degrees.size(); ++k) e += (k % 2 ? 1 : -1) * static_cast<long>(degrees[k].rank);
  return e;
}

std::string HomologyProfile::to_string() const {
  std::ostringstream ss;
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    if (degrees[k].zero()) continue;
    ss << "H" << static_cast<int>(k) - 1 << "=Z^" << degrees[k].rank;
    for (const auto& t : degrees[k].torsion) ss << "+Z/" << t;
    ss << ' ';
  }
  std::string s = ss.str();
  return s.empty() ? "acyclic" : s.substr(0, s.size() - 1);
}

HomologyProfile detail::reduced_homology_of_masks(const std::vector<Mask>& facets) {
  return homology_of_lattice(lattice_of(facets));
}

HomologyProfile reduced_homology(const SimplicialComplex& c) { return homology_of_lattice(c.lattice()); }

std::string to_string(TopologyKind k) {
  switch (k) {
    case TopologyKind::homology_ball: return "homology_ball";
    case TopologyKind::homology_sphere: return "homology_sphere";
    case TopologyKind::homology_manifold_with_boundary: return "homology_manifold_with_boundary";
    case TopologyKind::other: return "other";
  }
  return "other";
}

TopologicalClass classify(const SimplicialComplex& c) {
  TopologicalClass out;
  if (c.is_void() || !c.is_pure()) {
    out.reason = c.is_void() ? "void complex" : "not pure";
    return out;
  }
  const int dim = c.dim();
  if (dim < 0) {
    out.reason = "only the empty face";
    return out;
  }
  if (dim == 0) {
    // Points: one is a 0-ball bounded by {∅}, two form the 0-sphere.
    if (c.num_vertices() == 1) {
      out.kind = TopologyKind::homology_ball;
      out.boundary = SimplicialComplex::empty_face_only();
    } else if (c.num_vertices() == 2) {
      out.kind = TopologyKind::homology_sphere;
    } else {
      out.reason = "more than two points";
    }
    return out;
  }

  const auto& lat = c.lattice();
  std::vector<Mask> boundary_faces;
  std::vector<Mask> link_facets;
  for (std::size_t k = 1; k < lat.by_size.size(); ++k) {
    const int link_dim = dim - static_cast<int>(k);
    for (Mask f : lat.by_size[k]) {
      link_facets.clear();
      for (Mask g : c.facet_masks())
        if ((g & f) == f) link_facets.push_back(g & ~f);
      HomologyProfile h = detail::reduced_homology_of_masks(link_facets);
      if (h.sphere_like(link_dim)) continue;
      if (h.acyclic()) {
        boundary_faces.push_back(f);
        continue;
      }
      out.reason = "link of " + to_string(c.face_of(f)) + " has homology " + h.to_string();
      return out;
    }
  }

  HomologyProfile whole = reduced_homology(c);
  if (boundary_faces.empty()) {
    if (whole.sphere_like(dim)) {
      out.kind = TopologyKind::homology_sphere;
    } else {
      out.reason = "closed homology manifold that is not a homology sphere";
    }
    return out;
  }

  std::vector<Face> bgens;
  for (Mask m : boundary_faces) bgens.push_back(c.face_of(m));
  SimplicialComplex bd(std::move(bgens));
  out.boundary = bd;
  out.kind = TopologyKind::homology_manifold_with_boundary;
  if (!(bd == ridge_boundary(c))) {
    out.reason = "link boundary differs from the ridge boundary";
    return out;
  }
  if (!whole.acyclic()) {
    out.reason = "complex is not acyclic";
    return out;
  }
  TopologicalClass bclass = classify(bd);
  if (bclass.kind != TopologyKind::homology_sphere) {
    out.reason = "boundary is not a homology sphere: " + bclass.reason;
    return out;
  }
  out.kind = TopologyKind::homology_ball;
  return out;
}

std::size_t detail::component_count(const std::vector<Mask>& facets) {
  std::array<int, 64> parent;
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  Mask used = 0;
  for (Mask f : facets) {
    if (!f) continue;
    used |= f;
    const int root = find(std::countr_zero(f));
    for (Mask rest = f & (f - 1); rest; rest &= rest - 1) parent[find(std::countr_zero(rest))] = root;
  }
  std::size_t count = 0;
  for (Mask rest = used; rest; rest &= rest - 1) {
    int v = std::countr_zero(rest);
    if (find(v) == v) ++count;
  }
  return count;
}

Count hochster_beta_top(const SimplicialComplex& c, HochsterMode mode) {
  if (!c.is_pure() || c.is_void()) throw NotPure();
  const std::size_t n = c.num_vertices();
  const std::size_t d = c.facets().front().size();
  const Mask all = (n == 64) ? ~Mask{0} : ((Mask{1} << n) - 1);
  auto contribution = [&](Mask w) -> Count {
    std::vector<Mask> restricted;
    for (Mask g : c.facet_masks()) restricted.push_back(g & w);
    std::size_t k = detail::component_count(restricted);
    return k > 1 ? static_cast<Count>(k - 1) : 0;
  };
  Count total = 0;
  if (mode == HochsterMode::ridge_complements) {
    if (d < 2) return 0;
    const auto& lat = c.lattice();
    for (Mask r : lat.by_size[d - 1]) total += contribution(all & ~r);
    return total;
  }
  const std::size_t w = n + 1 - d;
  if (w > n) return 0;
  // Gosper's hack over all w-subsets of the n vertices.
  Mask s = w == 0 ? 0 : (Mask{1} << w) - 1;
  while (true) {
    total += contribution(s);
    if (s == 0 || w == n) break;
    Mask lo = s & -s, r = s + lo;
    if (r == 0) break;
    s = (((r ^ s) >> 2) / lo) | r;
    if (s & ~all) break;
  }
  return total;
}

}  // namespace hball
