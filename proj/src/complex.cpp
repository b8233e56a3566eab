#include "hball/complex.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace hball {

using detail::Mask;

std::size_t detail::FaceLattice::index_of(std::size_t size, Mask m) const {
  const auto& v = by_size.at(size);
  auto it = std::lower_bound(v.begin(), v.end(), m);
  if (it == v.end() || *it != m) return static_cast<std::size_t>(-1);
  return static_cast<std::size_t>(it - v.begin());
}

SimplicialComplex::SimplicialComplex() = default;

SimplicialComplex::SimplicialComplex(std::vector<Face> generators) {
  for (const Face& f : generators) labels_.insert(labels_.end(), f.begin(), f.end());
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
  if (labels_.size() > detail::kMaxVertices)
    throw std::length_error("complexes are limited to 64 vertices");

  std::vector<Mask> ms;
  ms.reserve(generators.size());
  for (const Face& f : generators) ms.push_back(mask_of(f));
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  // Larger faces first so each candidate only needs checking against kept ones.
  std::stable_sort(ms.begin(), ms.end(),
                   [](Mask a, Mask b) { return std::popcount(a) > std::popcount(b); });
  std::vector<Mask> kept;
  for (Mask m : ms) {
    bool covered = std::any_of(kept.begin(), kept.end(), [m](Mask k) { return (m & k) == m; });
    if (!covered) kept.push_back(m);
  }
  facets_.reserve(kept.size());
  for (Mask m : kept) facets_.push_back(face_of(m));
  std::sort(facets_.begin(), facets_.end());

  // A vertex only used by dropped generators cannot exist (they are subsets), so labels stay valid.
  masks_.reserve(facets_.size());
  for (const Face& f : facets_) masks_.push_back(mask_of(f));
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (const Face& f : facets_) d = std::max(d, f.dim());
  return d;
}

bool SimplicialComplex::is_pure() const {
  if (facets_.empty()) return true;
  std::size_t s = facets_.front().size();
  return std::all_of(facets_.begin(), facets_.end(), [s](const Face& f) { return f.size() == s; });
}

Mask SimplicialComplex::mask_of(const Face& f) const {
  Mask m = 0;
  for (int v : f) {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
    if (it == labels_.end() || *it != v) throw FaceNotInComplex(f);
    m |= Mask{1} << (it - labels_.begin());
  }
  return m;
}

Face SimplicialComplex::face_of(Mask m) const {
  std::vector<int> v;
  v.reserve(std::popcount(m));
  while (m) {
    int b = std::countr_zero(m);
    v.push_back(labels_[b]);
    m &= m - 1;
  }
  return Face(std::move(v));
}

bool SimplicialComplex::contains(const Face& f) const {
  Mask m;
  try {
    m = mask_of(f);
  } catch (const FaceNotInComplex&) {
    return false;
  }
  return std::any_of(masks_.begin(), masks_.end(), [m](Mask g) { return (g & m) == m; });
}

detail::FaceLattice detail::lattice_of(const std::vector<Mask>& facets) {
  FaceLattice lat;
  std::size_t top = 0;
  for (Mask g : facets) top = std::max<std::size_t>(top, std::popcount(g));
  lat.by_size.resize(facets.empty() ? 0 : top + 1);
  for (Mask g : facets) {
    // Enumerate every submask of g.
    Mask s = g;
    while (true) {
      lat.by_size[std::popcount(s)].push_back(s);
      if (s == 0) break;
      s = (s - 1) & g;
    }
  }
  for (auto& v : lat.by_size) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return lat;
}

const detail::FaceLattice& SimplicialComplex::lattice() const {
  // Lazily built; atomic publication keeps concurrent readers safe.
  auto cached = std::atomic_load(&lattice_);
  if (!cached) {
    auto built = std::make_shared<const detail::FaceLattice>(detail::lattice_of(masks_));
    // First writer wins so returned references never dangle.
    if (std::atomic_compare_exchange_strong(&lattice_, &cached, built)) cached = built;
  }
  return *cached;
}

std::vector<std::vector<Face>> SimplicialComplex::faces_by_size() const {
  const auto& lat = lattice();
  std::vector<std::vector<Face>> out(lat.by_size.size());
  for (std::size_t k = 0; k < lat.by_size.size(); ++k) {
    out[k].reserve(lat.by_size[k].size());
    for (Mask m : lat.by_size[k]) out[k].push_back(face_of(m));
    std::sort(out[k].begin(), out[k].end());
  }
  return out;
}

std::vector<std::vector<Face>> faces_by_dimension(const SimplicialComplex& c) { return c.faces_by_size(); }

std::ostream& operator<<(std::ostream& os, const SimplicialComplex& c) {
  os << '[';
  for (std::size_t i = 0; i < c.facets().size(); ++i) os << (i ? "," : "") << c.facets()[i];
  return os << ']';
}

SimplicialComplex link(const SimplicialComplex& c, const Face& f) {
  Mask m = c.mask_of(f);
  std::vector<Face> gens;
  for (Mask g : c.facet_masks())
    if ((g & m) == m) gens.push_back(c.face_of(g & ~m));
  if (gens.empty()) throw FaceNotInComplex(f);
  return SimplicialComplex(std::move(gens));
}

SimplicialComplex induced(const SimplicialComplex& c, const Face& w) {
  if (c.is_void()) return c;
  Mask m = 0;
  for (int v : w) {
    auto it = std::lower_bound(c.vertices().begin(), c.vertices().end(), v);
    if (it != c.vertices().end() && *it == v) m |= Mask{1} << (it - c.vertices().begin());
  }
  std::vector<Face> gens;
  for (Mask g : c.facet_masks()) gens.push_back(c.face_of(g & m));
  return SimplicialComplex(std::move(gens));
}

SimplicialComplex ridge_boundary(const SimplicialComplex& c) {
  if (!c.is_pure()) throw NotPure();
  std::unordered_map<Mask, int> count;
  for (Mask g : c.facet_masks()) {
    for (Mask rest = g; rest; rest &= rest - 1) ++count[g & ~(rest & -rest)];
  }
  std::vector<Face> gens;
  for (const auto& [r, n] : count)
    if (n == 1) gens.push_back(c.face_of(r));
  return SimplicialComplex(std::move(gens));
}

SimplicialComplex cone(const SimplicialComplex& c, int k) {
  if (k < 0) throw std::invalid_argument("cone needs k >= 0");
  int top = c.vertices().empty() ? 0 : c.vertices().back() + 1;
  std::vector<int> apex;
  for (int i = 0; i < k; ++i) apex.push_back(top + i);
  std::vector<Face> gens;
  if (c.is_void()) return c;
  for (const Face& f : c.facets()) {
    std::vector<int> v = f.vertices();
    v.insert(v.end(), apex.begin(), apex.end());
    gens.emplace_back(std::move(v));
  }
  return SimplicialComplex(std::move(gens));
}

}  // namespace hball
