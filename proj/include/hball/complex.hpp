#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hball {

using Count = std::int64_t;

/// A finite set of integer vertex labels, stored strictly increasing.
class Face {
 public:
  Face() = default;
  Face(std::initializer_list<int> vertices);
  explicit Face(std::vector<int> vertices);

  const std::vector<int>& vertices() const { return v_; }
  std::size_t size() const { return v_.size(); }
  int dim() const { return static_cast<int>(v_.size()) - 1; }
  bool empty() const { return v_.empty(); }
  bool contains(int vertex) const;
  bool is_subset_of(const Face& other) const;

  Face with(int vertex) const;
  Face without(int vertex) const;

  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }
  int operator[](std::size_t i) const { return v_[i]; }

  friend auto operator<=>(const Face&, const Face&) = default;
  friend bool operator==(const Face&, const Face&) = default;

 private:
  std::vector<int> v_;
};

std::ostream& operator<<(std::ostream& os, const Face& f);
std::string to_string(const Face& f);

Face face_union(const Face& a, const Face& b);
Face face_intersection(const Face& a, const Face& b);
Face face_difference(const Face& a, const Face& b);

class FaceNotInComplex : public std::invalid_argument {
 public:
  explicit FaceNotInComplex(const Face& f);
};

class NotPure : public std::invalid_argument {
 public:
  NotPure() : std::invalid_argument("complex is not pure") {}
};

namespace detail {
using Mask = std::uint64_t;
inline constexpr std::size_t kMaxVertices = 64;

/// Faces of a complex as bitmasks over its sorted vertex labels, grouped by size.
struct FaceLattice {
  std::vector<std::vector<Mask>> by_size;  // sorted ascending
  std::size_t index_of(std::size_t size, Mask m) const;
};

FaceLattice lattice_of(const std::vector<Mask>& facets);
}  // namespace detail

/**
 * A simplicial complex given by its facets.
 *
 * The constructor keeps only the inclusion-maximal generators, so the stored
 * facet list is always an antichain, sorted lexicographically. Two special
 * complexes exist: the void complex (no faces at all) and the complex whose
 * only face is the empty set.
 */
class SimplicialComplex {
 public:
  SimplicialComplex();
  explicit SimplicialComplex(std::vector<Face> generators);

  static SimplicialComplex void_complex() { return SimplicialComplex(); }
  static SimplicialComplex empty_face_only() { return SimplicialComplex({Face{}}); }
  static SimplicialComplex simplex(const Face& f) { return SimplicialComplex({f}); }

  const std::vector<Face>& facets() const { return facets_; }
  const std::vector<int>& vertices() const { return labels_; }
  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_facets() const { return facets_.size(); }

  /// Largest facet dimension; -1 for both the void complex and {∅}.
  int dim() const;
  bool is_void() const { return facets_.empty(); }
  bool is_pure() const;
  bool contains(const Face& f) const;

  /// All faces (including ∅) grouped by dimension: entry i holds the (i-1)-faces.
  std::vector<std::vector<Face>> faces_by_size() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.facets_ == b.facets_;
  }

  // Bitmask view used by the homology and shelling code.
  const std::vector<detail::Mask>& facet_masks() const { return masks_; }
  detail::Mask mask_of(const Face& f) const;
  Face face_of(detail::Mask m) const;
  const detail::FaceLattice& lattice() const;

 private:
  std::vector<Face> facets_;
  std::vector<int> labels_;
  std::vector<detail::Mask> masks_;
  mutable std::shared_ptr<const detail::FaceLattice> lattice_;
};

std::ostream& operator<<(std::ostream& os, const SimplicialComplex& c);

/// Faces of each dimension, lexicographically sorted; index i holds dimension i-1.
std::vector<std::vector<Face>> faces_by_dimension(const SimplicialComplex& c);

SimplicialComplex link(const SimplicialComplex& c, const Face& f);
SimplicialComplex induced(const SimplicialComplex& c, const Face& w);
/// Ridges lying in exactly one facet. Requires a pure complex.
SimplicialComplex ridge_boundary(const SimplicialComplex& c);
/// Joins k fresh apex vertices (labels above the current maximum).
SimplicialComplex cone(const SimplicialComplex& c, int k = 1);

// ---------------------------------------------------------------------------
// Counting vectors

enum class Role { f, h, g };

/**
 * An f-, h- or g-vector of a complex whose facets have d vertices.
 * f entries are f_{-1}..f_{d-1}; h entries are h_0..h_d; g entries g_i = h_i - h_{i-1}.
 */
struct CountVector {
  Role role = Role::h;
  int d = 0;
  std::vector<Count> entries;

  Count operator[](std::size_t i) const { return entries[i]; }
  Count at_or_zero(long i) const {
    return (i >= 0 && static_cast<std::size_t>(i) < entries.size()) ? entries[i] : 0;
  }
  std::size_t size() const { return entries.size(); }
  friend bool operator==(const CountVector&, const CountVector&) = default;
};

CountVector make_h(std::vector<Count> entries);
CountVector make_f(std::vector<Count> entries);

CountVector f_vector(const SimplicialComplex& c);
/// f <-> h through the polynomial identity sum h_i x^i = sum f_{i-1} x^i (1-x)^{d-i}.
CountVector convert(const CountVector& v, Role target);
CountVector g_of_h(const CountVector& h);
CountVector h_vector(const SimplicialComplex& c);

// ---------------------------------------------------------------------------
// Shellings

struct ShellingCertificate {
  std::vector<Face> order;
  std::vector<Face> restrictions;
  friend bool operator==(const ShellingCertificate&, const ShellingCertificate&) = default;
};

class NotAShelling : public std::invalid_argument {
 public:
  NotAShelling(std::size_t step, const std::string& why);
  /// 1-based position of the first facet whose new faces are not an interval.
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

/// Checks that the order is a shelling and returns its restriction faces.
ShellingCertificate verify_shelling(const std::vector<Face>& order);
/// Verifies the order and compares against the predicted restrictions.
bool certificate_matches(const ShellingCertificate& predicted);
CountVector h_from_certificate(const ShellingCertificate& cert);

// ---------------------------------------------------------------------------
// Gluing

struct GluePair {
  Face first;
  Face second;
  /// image[i] is the vertex of `second` identified with first[i]; empty means order-preserving.
  std::vector<int> image;
};

struct GlueMap {
  std::vector<GluePair> pairs;
};

class GlueError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Glues b onto a along boundary ridges; b's vertices are relabelled above a's.
SimplicialComplex glue(const SimplicialComplex& a, const SimplicialComplex& b, const GlueMap& map);
/// Identifies pairs of boundary ridges of a single complex.
SimplicialComplex self_glue(const SimplicialComplex& a, const GlueMap& map);

}  // namespace hball
