#include <algorithm>

#include "hball/obstruction.hpp"

namespace hball {

using json = nlohmann::ordered_json;

namespace {

json edges_json(const Graph& g) {
  json e = json::array();
  for (auto [u, v] : g.edges()) e.push_back(json::array({u, v}));
  return e;
}

}  // namespace

// A vertex of a (d-1)-ball lies in some facet, so its degree is at least d-1. A vertex of
// degree exactly d-1 lies in a single facet, and deleting that facet lowers h_1 by one.
ObstructionReport skeleton_search(const CountVector& h, int cap) {
  if (h.role != Role::h) throw std::invalid_argument("expected an h-vector");
  ObstructionReport r;
  r.stage = "skeleton";
  json& c = r.certificate;
  c["h"] = h.entries;
  const int d = static_cast<int>(h.size()) - 1;
  if (d < 3) {
    c["reason"] = "needs d >= 3";
    return r;
  }
  if (h[0] != 1 || h[1] < 0) {
    c["reason"] = "not a normalized h-vector";
    return r;
  }
  const CountVector f = convert(h, Role::f);
  const Count n = d + h[1];
  const Count f1 = f[2], f2 = f[3];
  const Count absent = binomial(n, 2) - f1;
  c["vertices"] = n;
  c["f1"] = f1;
  c["f2"] = f2;
  c["absent_edges"] = absent;
  c["absent_triangle_budget"] = binomial(n, 3) - f2;
  if (absent < 0 || f2 < 0) {
    c["reason"] = "negative face counts";
    return r;
  }
  if (absent > cap) {
    c["reason"] = "absent-edge count exceeds the enumeration cap " + std::to_string(cap);
    return r;
  }
  if (n > 32) {
    c["reason"] = "too many vertices for the graph enumerator";
    return r;
  }

  const auto& graphs = graphs_with_edges(static_cast<int>(absent), static_cast<int>(n));
  c["graphs"] = graphs.size();
  json qualifying = json::array();
  Count best_degree = -1;
  bool any_at_threshold = false;
  for (const Graph& g : graphs) {
    const Count triangles = complement_triangles(g, static_cast<int>(n));
    if (triangles < f2) continue;
    const Count degree = n - 1 - g.max_degree();
    best_degree = std::max(best_degree, degree);
    any_at_threshold = any_at_threshold || degree == d - 1;
    qualifying.push_back(json{{"absent", edges_json(g)}, {"triangles", triangles}, {"min_degree", degree}});
  }
  c["qualifying"] = qualifying;
  if (qualifying.empty()) {
    r.verdict = Verdict::impossible_skeleton;
    c["reason"] = "no absent-edge graph leaves room for f_2 triangles";
    return r;
  }
  c["max_min_degree"] = best_degree;
  if (best_degree > d - 1) {
    c["reason"] = "some configuration has every vertex of degree at least d";
    return r;
  }
  if (!any_at_threshold) {
    r.verdict = Verdict::impossible_skeleton;
    c["reason"] = "every configuration has a vertex lying in no facet";
    return r;
  }
  if (h[1] < 1) {
    c["reason"] = "a single facet cannot be removed";
    return r;
  }

  std::vector<Count> lowered = h.entries;
  --lowered[1];
  const CountVector next = make_h(lowered);
  json step{{"h", lowered}};
  const VerifiedConditions vc = verified_conditions(next);
  if (!vc.ok) {
    step["reasons"] = vc.reasons;
    if (lowered[d] == 0) step["boundary_g"] = boundary_g(next).entries;
    c["decrement"] = step;
    r.verdict = Verdict::impossible_skeleton;
    c["reason"] = "removing a facet at a degree d-1 vertex gives a vector no ball has";
    return r;
  }
  ObstructionReport deeper = skeleton_search(next, cap);
  step["skeleton"] = deeper.certificate;
  c["decrement"] = step;
  if (deeper.verdict == Verdict::impossible_skeleton) {
    r.verdict = Verdict::impossible_skeleton;
    c["reason"] = "removing a facet at a degree d-1 vertex gives an impossible vector";
  } else {
    c["reason"] = "the decremented vector is not ruled out";
  }
  return r;
}

}  // namespace hball
