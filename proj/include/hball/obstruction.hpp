#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hball/complex.hpp"
#include "hball/graph.hpp"
#include "hball/monomial.hpp"

namespace hball {

enum class Verdict {
  bl_conditions_fail,
  impossible_betti_split,
  impossible_skeleton,
  impossible_family_certificate,
  constructible,
  unknown
};

std::string to_string(Verdict v);
bool is_impossible(Verdict v);

struct ObstructionReport {
  Verdict verdict = Verdict::unknown;
  std::string stage;
  nlohmann::ordered_json certificate = nlohmann::ordered_json::object();
  std::optional<SimplicialComplex> complex;
  std::optional<ShellingCertificate> shelling;
};

/// g_i of the boundary sphere, h_i - h_{d-i} for 0 <= i <= floor((d-1)/2). Throws if h_d != 0.
CountVector boundary_g(const CountVector& h);

struct ConeCondition {
  int k = 0;
  std::vector<Count> vector;  // (h_i - h_{d+k-i}) for i = 0..floor((d+k-1)/2)
  MCheck check;
  bool prefix_ok = false;     // first three entries form an M-vector
};

struct ConditionReport {
  int d = 0;
  std::vector<ConeCondition> cones;  // k = 0..d+1
  bool h_is_m_vector = false;
  bool top_zero = false;
  bool tail_step = false;            // h_{d-2} >= h_{d-1}
  bool prefixes_ok = false;

  bool all_pass() const;
  std::optional<int> first_failure() const;
};

ConditionReport gconditions(const CountVector& h);

struct VerifiedConditions {
  bool ok = false;
  std::vector<std::string> reasons;  // one per failed check
};

/// Checks known to hold for every homology ball.
VerifiedConditions verified_conditions(const CountVector& h);

struct PeevaBounds {
  Count lower = 0;
  Count upper = 0;
  Count beta_top = 0;  // beta_{n,n+1}
  Count beta_sub = 0;  // beta_{n-1,n+1}
  int variables = 0;   // n = h_1
};

PeevaBounds peeva_bounds(const CountVector& h);

struct SplitCandidate {
  CountVector first;
  CountVector second;
};

/// Pairs (h', h'') with h'_1 + h''_1 + 1 = h_1 and h'_i + h''_i = h_i otherwise, both passing
/// verified_conditions with an M-vector boundary prefix; h' >= h'' lexicographically.
/// recursive additionally requires that neither half can itself be ruled out by the split engine.
std::vector<SplitCandidate> enumerate_splits(const CountVector& h, bool recursive = false);

ObstructionReport betti_split_verdict(const CountVector& h, bool recursive = false);

/// Absent-edge counting on the 1- and 2-skeleton; graphs with more than cap edges give unknown.
ObstructionReport skeleton_search(const CountVector& h, int cap = 7);

struct FamilyParams {
  int x = 0;
  int y = 0;
  int d = 0;
};

/// (1, x, C(x,2), C(x+1,3)-2, ..., C(x,2)-(C(y,2)+1), x-y, 0) of length d+1.
CountVector family_hvector(const FamilyParams& p);

struct FamilyBudget {
  Count twice_budget = 0;     // 2 (C(d+x,3) - f_2)
  Count twice_bound = 0;      // min over the degree-k and matching bounds, doubled
  int best_k = 0;             // 0 when the matching bound is smallest
  Count twice_formula_budget = 0;
};

FamilyBudget family_budget(const FamilyParams& p);
ObstructionReport family_certificate(const FamilyParams& p, bool enumerate = true);

struct Conjecture61 {
  bool holds = false;
  std::optional<Count> witness;
};

/// Smallest m (starting at 0, or 1 when allow_zero is false) with (1, h_1 - m, h_2, ...) meeting
/// the construction conditions.
Conjecture61 conjecture61_predicate(const CountVector& h, bool allow_zero = true);

struct VerdictOptions {
  bool recursive_splits = false;
  int cap_absent_edges = 7;
};

ObstructionReport verdict(const CountVector& h, const VerdictOptions& opt = {});

}  // namespace hball
