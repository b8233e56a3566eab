#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "hball/complex.hpp"

namespace hball {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  BigInt& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Boundary map from i-faces to (i-1)-faces; rows and columns follow lexicographic face order.
/// i = 0 gives the augmentation row onto the empty face.
IntMatrix boundary_matrix(const SimplicialComplex& c, int i);

struct SmithForm {
  std::vector<BigInt> factors;  // nonzero invariant factors d1 | d2 | ..., all positive
  std::size_t rank() const { return factors.size(); }
};

SmithForm smith_normal_form(IntMatrix m);

struct DegreeHomology {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1
  bool zero() const { return rank == 0 && torsion.empty(); }
  friend bool operator==(const DegreeHomology&, const DegreeHomology&) = default;
};

/// Reduced integer homology; degrees[i] holds degree i-1, so index 0 is degree -1.
struct HomologyProfile {
  std::vector<DegreeHomology> degrees;

  const DegreeHomology& at(int degree) const;
  bool acyclic() const;
  /// Reduced homology of a k-sphere: Z in degree k, zero elsewhere.
  bool sphere_like(int k) const;
  long reduced_euler() const;
  std::string to_string() const;
};

HomologyProfile reduced_homology(const SimplicialComplex& c);

enum class TopologyKind { homology_ball, homology_sphere, homology_manifold_with_boundary, other };
std::string to_string(TopologyKind k);

struct TopologicalClass {
  TopologyKind kind = TopologyKind::other;
  std::optional<SimplicialComplex> boundary;  // set for balls and manifolds with boundary
  std::string reason;
};

/// Classifies by the homology of every nonempty face link; boundary faces are those
/// whose link has vanishing top homology.
TopologicalClass classify(const SimplicialComplex& c);

enum class HochsterMode { ridge_complements, full_sum };

/**
 * beta_{n-d, n-d+1} of the face ring through Hochster's formula, n = number of vertices.
 * Only complements of ridges can contribute, so the default sums (components - 1) over
 * those; full_sum visits every vertex subset of size n-d+1 and is meant as a cross-check.
 */
Count hochster_beta_top(const SimplicialComplex& c, HochsterMode mode = HochsterMode::ridge_complements);

namespace detail {
HomologyProfile reduced_homology_of_masks(const std::vector<Mask>& facets);
std::size_t component_count(const std::vector<Mask>& facets);
}  // namespace detail

}  // namespace hball
