#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hball/complex.hpp"
#include "hball/homology.hpp"
#include "hball/monomial.hpp"

namespace hball {

/// alpha sends a monomial to a facet of B(I) inside F_d; alpha_prime to a ridge containing vertex 1.
enum class CorrespondenceMode { alpha, alpha_prime };

/**
 * A facet built from adjacent vertex pairs {i_j, i_j + 1}. For even d the extra vertex 0
 * is added. alpha uses (d+1)/2 pairs at i_j = e_j + 2j - 1; alpha_prime uses the base
 * vertex 1 plus (d+1)/2 - 1 pairs at i_j = e_j + 2j, where e is the extended representation.
 */
struct BLFacet {
  Face face;
  std::vector<int> pair_starts;
  bool apex = false;
};

/// n bounds the vertex labels (largest label <= n); 0 means unbounded.
BLFacet facet_of_monomial(const Monomial& m, CorrespondenceMode mode, int d, int n = 0);
Monomial monomial_of_facet(const Face& f, CorrespondenceMode mode, int d);

/// Lower covers in the partial order are reached by lowering one extended-representation entry.
bool is_partial_initial_segment(const std::vector<Monomial>& ms, std::size_t c);

struct BLBall {
  SimplicialComplex complex;
  ShellingCertificate certificate;
  std::vector<Monomial> order;  // monomial behind each facet of the certificate
  int max_vertex = 0;
};

/// The shellable ball with facets alpha(I), shelled by degree then rev-lex.
BLBall build_bl_ball(const OrderIdeal& ideal, int d, int n = 0);

/// Whether alpha_prime(m) is a boundary ridge of B(I): the shifted divisor max(e_j - 1, 0) lies in I.
bool boundary_facet_test(const Monomial& m, const OrderIdeal& ideal, int d);

/**
 * Sufficient conditions for building a ball with h-vector h (h_d = 0), t = floor(d/2),
 * q = floor((d-1)/2):
 *   (1, h_1 - h_0, ..., h_{t-1} - h_{t-2}, max(h_t - h_{t-1}, 0)) is an M-vector,
 *   (1, h_1 - h_{d-1}, ..., h_q - h_{d-q}) is an M-vector,
 *   h_{q+1} >= ... >= h_{d-1}.
 * The simplex (1,0,...,0) is accepted separately.
 */
struct ConstructionConditions {
  int d = 0;
  bool well_formed = false;
  bool simplex_base_case = false;
  std::vector<Count> g;
  std::vector<Count> G;
  MCheck g_check;
  MCheck G_check;
  bool tail_nonincreasing = false;

  bool literal() const { return well_formed && g_check.ok && G_check.ok && tail_nonincreasing; }
  bool satisfied() const { return simplex_base_case || literal(); }
  std::string failure() const;
};

ConstructionConditions construction_conditions(const CountVector& h);

class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(std::string stage, const std::string& what)
      : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

struct SelectionState {
  int d = 0;
  bool negative = false;  // h_t < h_{t-1}
  std::vector<Count> g;   // clamped, trailing zeros trimmed
  std::vector<Count> G;   // targets G_0..G_top
  OrderIdeal ideal;       // compressed ideal of g
  std::vector<std::vector<Monomial>> pools;     // S_k, rev-lex sorted
  std::vector<std::vector<int>> pool_types;     // 1 or 2, parallel to pools
  std::vector<std::vector<Monomial>> selected;  // M_k
  std::vector<Monomial> extra;                  // E, turned into gamma ridges
};

SelectionState select_type_sets(const CountVector& h);

struct ComplementParts {
  SelectionState selection;
  BLBall bl;
  SimplicialComplex sphere;    // ridge boundary of B(I)
  SimplicialComplex sub_ball;  // alpha_prime images plus gamma ridges
  SimplicialComplex ball;      // sphere facets outside the sub-ball
};

ComplementParts complement_construction(const CountVector& h);
SimplicialComplex complement_ball(const CountVector& h);

/// Explicit shelling of the complementary ball with predicted restriction faces.
ShellingCertificate appendix_shelling(const CountVector& h);

struct VerifiedBall {
  SimplicialComplex complex;
  ShellingCertificate certificate;
  TopologicalClass topology;
};

/// Builds, shells and certifies; throws ConstructionError naming the failing stage.
VerifiedBall construct_verified(const CountVector& h);

}  // namespace hball
