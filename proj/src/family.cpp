#include <algorithm>
#include <limits>

#include "hball/obstruction.hpp"

namespace hball {

using json = nlohmann::ordered_json;

namespace {

void require_params(const FamilyParams& p) {
  if (p.x <= 4) throw std::invalid_argument("family needs x > 4");
  if (p.y <= 1 || p.y >= p.x) throw std::invalid_argument("family needs 1 < y < x");
  if (p.d < 6) throw std::invalid_argument("family needs d >= 6");
}

}  // namespace

CountVector family_hvector(const FamilyParams& p) {
  require_params(p);
  const Count x = p.x, y = p.y;
  std::vector<Count> h(p.d + 1, binomial(x + 1, 3) - 2);
  h[0] = 1;
  h[1] = x;
  h[2] = binomial(x, 2);
  h[p.d - 2] = binomial(x, 2) - (binomial(y, 2) + 1);
  h[p.d - 1] = x - y;
  h[p.d] = 0;
  return make_h(std::move(h));
}

// Everything is doubled so the half-integer coefficients stay exact.
FamilyBudget family_budget(const FamilyParams& p) {
  require_params(p);
  const Count x = p.x, d = p.d;
  const CountVector f = convert(family_hvector(p), Role::f);
  FamilyBudget b;
  b.twice_budget = 2 * (binomial(d + x, 3) - f[3]);
  const Count base = x * x + (2 * d - 3) * x;
  b.twice_formula_budget = base + 4;
  // All absent edges pairwise disjoint: each touches d + x - 2 triples.
  b.twice_bound = 2 * x * (x + d - 2);
  for (Count k = 2; k < x; ++k) {
    const Count v = base + 2 * (k - 1) * (x - k);
    if (v < b.twice_bound) {
      b.twice_bound = v;
      b.best_k = static_cast<int>(k);
    }
  }
  return b;
}

ObstructionReport family_certificate(const FamilyParams& p, bool enumerate) {
  ObstructionReport r;
  r.stage = "family";
  json& c = r.certificate;
  const CountVector h = family_hvector(p);
  const Count x = p.x, d = p.d, n = d + x;
  c["x"] = p.x;
  c["y"] = p.y;
  c["d"] = p.d;
  c["h"] = h.entries;

  const ConditionReport g = gconditions(h);
  c["gconditions_pass"] = g.all_pass();
  if (!g.all_pass()) {
    r.verdict = Verdict::bl_conditions_fail;
    c["failing_k"] = *g.first_failure();
    return r;
  }

  const CountVector f = convert(h, Role::f);
  const bool counts_ok = f[1] == n && binomial(n, 2) - f[2] == x;
  c["f"] = f.entries;
  c["vertex_and_edge_counts_ok"] = counts_ok;

  const FamilyBudget b = family_budget(p);
  c["budget"] = b.twice_budget / 2;
  c["budget_matches_formula"] = b.twice_budget == b.twice_formula_budget;
  c["bound"] = b.twice_bound / 2;
  c["bound_k"] = b.best_k;
  c["excess"] = (b.twice_bound - b.twice_budget) / 2;

  // A vertex carrying all x absent edges has degree d-1; removing its facet gives this vector.
  std::vector<Count> lowered = h.entries;
  --lowered[1];
  const CountVector dec = make_h(lowered);
  const VerifiedConditions dv = verified_conditions(dec);
  c["decrement"] = json{{"h", lowered}, {"boundary_g", boundary_g(dec).entries}, {"fails", !dv.ok}};

  bool enumeration_ok = true;
  if (enumerate && x <= 8) {
    Count least = std::numeric_limits<Count>::max();
    std::size_t count = 0;
    for (const Graph& gr : graphs_with_edges(static_cast<int>(x), static_cast<int>(std::min<Count>(2 * x, n)))) {
      if (gr.max_degree() > x - 1) continue;
      ++count;
      least = std::min(least, triples_touching(gr, static_cast<int>(n)));
    }
    enumeration_ok = 2 * least >= b.twice_bound && 2 * least > b.twice_budget;
    c["enumeration"] = json{{"graphs", count}, {"min_absent_triangles", least}, {"confirms_bound", enumeration_ok}};
  }

  if (counts_ok && b.twice_budget == b.twice_formula_budget && b.twice_bound > b.twice_budget && !dv.ok &&
      enumeration_ok)
    r.verdict = Verdict::impossible_family_certificate;
  return r;
}

}  // namespace hball
