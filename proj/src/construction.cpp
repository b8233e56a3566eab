#include "hball/construction.hpp"

#include <algorithm>
#include <set>

namespace hball {

BLFacet facet_of_monomial(const Monomial& m, CorrespondenceMode mode, int d, int n) {
  if (d < 1) throw std::invalid_argument("facet_of_monomial needs d >= 1");
  const int p = (d + 1) / 2;
  const bool prime = mode == CorrespondenceMode::alpha_prime;
  const int pairs = prime ? p - 1 : p;
  if (m.degree() > pairs) throw std::invalid_argument("monomial degree exceeds the number of pairs");
  BLFacet out;
  out.apex = d % 2 == 0;
  std::vector<int> v;
  if (out.apex) v.push_back(0);
  if (prime) v.push_back(1);
  auto e = m.extended(static_cast<std::size_t>(pairs));
  for (int j = 1; j <= pairs; ++j) {
    const int i = e[j - 1] + 2 * j - (prime ? 0 : 1);
    out.pair_starts.push_back(i);
    v.push_back(i);
    v.push_back(i + 1);
  }
  if (n > 0 && !v.empty() && v.back() > n) throw std::out_of_range("vertex budget n is too small");
  out.face = Face(std::move(v));
  return out;
}

Monomial monomial_of_facet(const Face& f, CorrespondenceMode mode, int d) {
  const int p = (d + 1) / 2;
  const bool prime = mode == CorrespondenceMode::alpha_prime;
  const int pairs = prime ? p - 1 : p;
  std::vector<int> v = f.vertices();
  auto take = [&](int x) {
    auto it = std::find(v.begin(), v.end(), x);
    if (it == v.end()) throw std::invalid_argument("face is not in the image of the correspondence");
    v.erase(it);
  };
  if (d % 2 == 0) take(0);
  if (prime) take(1);
  if (static_cast<int>(v.size()) != 2 * pairs) throw std::invalid_argument("face has the wrong size");
  std::vector<int> ext;
  for (int j = 1; j <= pairs; ++j) {
    const int i = v[2 * j - 2];
    if (v[2 * j - 1] != i + 1) throw std::invalid_argument("face does not split into adjacent pairs");
    ext.push_back(i - 2 * j + (prime ? 0 : 1));
  }
  for (std::size_t j = 0; j < ext.size(); ++j)
    if (ext[j] < 0 || (j && ext[j] < ext[j - 1])) throw std::invalid_argument("pairs overlap");
  return Monomial::from_indices(ext);
}

bool is_partial_initial_segment(const std::vector<Monomial>& ms, std::size_t c) {
  std::set<Monomial> s(ms.begin(), ms.end());
  for (const Monomial& m : ms) {
    auto e = m.extended(c);
    for (std::size_t j = 0; j < c; ++j) {
      if (e[j] == 0 || (j && e[j - 1] > e[j] - 1)) continue;
      auto lower = e;
      --lower[j];
      if (!s.count(Monomial::from_indices(lower))) return false;
    }
  }
  return true;
}

BLBall build_bl_ball(const OrderIdeal& ideal, int d, int n) {
  const int p = (d + 1) / 2;
  std::vector<Monomial> ms = ideal.all();
  for (const Monomial& m : ms)
    if (m.degree() > p) throw std::invalid_argument("ideal degree exceeds (d+1)/2");
  if (!is_partial_initial_segment(ms, static_cast<std::size_t>(p)))
    throw std::invalid_argument("ideal is not an initial segment of the partial order");
  std::stable_sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return revlex_less(a, b);
  });
  BLBall out;
  std::vector<Face> order;
  for (const Monomial& m : ms) {
    BLFacet f = facet_of_monomial(m, CorrespondenceMode::alpha, d, n);
    out.max_vertex = std::max(out.max_vertex, f.face.vertices().back());
    order.push_back(f.face);
  }
  out.certificate = verify_shelling(order);
  for (std::size_t j = 0; j < ms.size(); ++j)
    if (static_cast<int>(out.certificate.restrictions[j].size()) != ms[j].degree())
      throw std::logic_error("restriction size differs from monomial degree");
  out.order = std::move(ms);
  out.complex = SimplicialComplex(std::move(order));
  return out;
}

bool boundary_facet_test(const Monomial& m, const OrderIdeal& ideal, int d) {
  const int q = (d + 1) / 2 - 1;
  auto e = m.extended(static_cast<std::size_t>(q));
  for (int& x : e) x = std::max(x - 1, 0);
  return ideal.contains(Monomial::from_indices(e));
}

std::string ConstructionConditions::failure() const {
  if (satisfied()) return "";
  if (!well_formed) return "h must start with 1, end with 0 and have d >= 1";
  if (!g_check.ok) return "difference vector is not an M-vector";
  if (!G_check.ok) return "symmetric difference vector is not an M-vector";
  return "upper entries are not non-increasing";
}

ConstructionConditions construction_conditions(const CountVector& h) {
  ConstructionConditions c;
  const auto& e = h.entries;
  c.d = static_cast<int>(e.size()) - 1;
  const int d = c.d;
  c.well_formed = d >= 1 && e[0] == 1 && e[d] == 0 &&
                  std::all_of(e.begin(), e.end(), [](Count x) { return x >= 0; });
  if (!c.well_formed) return c;
  c.simplex_base_case = std::all_of(e.begin() + 1, e.end(), [](Count x) { return x == 0; });
  const int t = d / 2, q = (d - 1) / 2;
  c.g = {1};
  for (int i = 1; i <= t; ++i) c.g.push_back(e[i] - e[i - 1]);
  if (t >= 1) c.g[t] = std::max<Count>(c.g[t], 0);
  c.G = {1};
  for (int k = 1; k <= q; ++k) c.G.push_back(e[k] - e[d - k]);
  c.g_check = is_m_vector(c.g);
  c.G_check = is_m_vector(c.G);
  c.tail_nonincreasing = true;
  for (int i = q + 1; i + 1 <= d - 1; ++i)
    if (e[i] < e[i + 1]) c.tail_nonincreasing = false;
  return c;
}

namespace {

Monomial shift_up(const Monomial& m) {
  std::vector<int> e{0};
  e.insert(e.end(), m.exponents().begin(), m.exponents().end());
  return Monomial(std::move(e));
}

void require_conditions(const CountVector& h) {
  if (h.role != Role::h) throw std::invalid_argument("expected an h-vector");
  ConstructionConditions c = construction_conditions(h);
  if (!c.satisfied()) throw ConstructionError("conditions", c.failure());
}

}  // namespace

SelectionState select_type_sets(const CountVector& h) {
  require_conditions(h);
  const auto& e = h.entries;
  SelectionState s;
  const int d = s.d = static_cast<int>(e.size()) - 1;
  const int t = d / 2, q = (d - 1) / 2;
  s.g = {1};
  for (int i = 1; i <= t; ++i) s.g.push_back(e[i] - e[i - 1]);
  if (t >= 1 && s.g[t] < 0) {
    s.g[t] = 0;
    s.negative = true;
  }
  while (s.g.size() > 1 && s.g.back() == 0) s.g.pop_back();
  s.ideal = compressed_ideal(s.g);

  s.G = {1};
  for (int k = 1; k <= q; ++k) s.G.push_back(e[k] - e[d - k]);
  if (s.negative) {
    if (d % 2 == 1) {
      s.G[q] = e[q - 1] - e[q + 1];
      s.G.push_back(e[q - 1] - e[q]);
    } else {
      s.G.push_back(e[q] - e[q + 1]);
    }
  }

  s.selected = {{Monomial()}};
  s.pools = {{Monomial()}};
  s.pool_types = {{1}};
  for (int k = 0; k < q; ++k) {
    std::vector<std::pair<Monomial, int>> pool;
    for (const Monomial& m : s.selected[k]) pool.emplace_back(m.times(1), 1);
    const bool only_type_one = s.negative && d % 2 == 1 && k + 1 == q;
    if (!only_type_one && k + 1 < static_cast<int>(s.ideal.by_degree.size()))
      for (const Monomial& u : s.ideal.by_degree[k + 1]) pool.emplace_back(shift_up(u), 2);
    std::sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) { return revlex_less(a.first, b.first); });
    const Count want = s.G[k + 1];
    if (static_cast<Count>(pool.size()) < want)
      throw ConstructionError("selection", "pool of degree " + std::to_string(k + 1) + " is too small");
    std::vector<Monomial> ms;
    std::vector<int> types;
    for (const auto& [m, ty] : pool) {
      ms.push_back(m);
      types.push_back(ty);
    }
    s.pools.push_back(ms);
    s.pool_types.push_back(types);
    s.selected.emplace_back(ms.begin(), ms.begin() + want);
  }
  if (s.negative) {
    const Count want = s.G[q + 1];
    const auto& top = s.selected[q];
    if (static_cast<Count>(top.size()) < want) throw ConstructionError("selection", "not enough monomials for E");
    s.extra.assign(top.begin(), top.begin() + want);
  }

  std::vector<Monomial> all;
  for (const auto& level : s.selected) all.insert(all.end(), level.begin(), level.end());
  if (!is_partial_initial_segment(all, static_cast<std::size_t>(q)))
    throw ConstructionError("selection", "selected monomials are not an initial segment");
  return s;
}

ComplementParts complement_construction(const CountVector& h) {
  ComplementParts parts;
  parts.selection = select_type_sets(h);
  const SelectionState& s = parts.selection;
  const int d = s.d;
  parts.bl = build_bl_ball(s.ideal, d);
  parts.sphere = ridge_boundary(parts.bl.complex);

  std::vector<Face> sub;
  for (const auto& level : s.selected)
    for (const Monomial& m : level) sub.push_back(facet_of_monomial(m, CorrespondenceMode::alpha_prime, d).face);
  for (const Monomial& m : s.extra) {
    Face f = facet_of_monomial(m, CorrespondenceMode::alpha_prime, d).face;
    sub.push_back(f.without(1).with(2));
  }
  const auto& bd = parts.sphere.facets();
  std::set<Face> subset(sub.begin(), sub.end());
  for (const Face& f : sub)
    if (!std::binary_search(bd.begin(), bd.end(), f))
      throw ConstructionError("sub-ball", "ridge " + to_string(f) + " is not on the boundary of B(I)");
  std::vector<Face> rest;
  for (const Face& f : bd)
    if (!subset.count(f)) rest.push_back(f);
  parts.sub_ball = SimplicialComplex(std::move(sub));
  parts.ball = SimplicialComplex(std::move(rest));
  return parts;
}

SimplicialComplex complement_ball(const CountVector& h) {
  require_conditions(h);
  if (construction_conditions(h).simplex_base_case) {
    std::vector<int> v(h.entries.size() - 1);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i) + 1;
    return SimplicialComplex({Face(v)});
  }
  return complement_construction(h).ball;
}

VerifiedBall construct_verified(const CountVector& h) {
  VerifiedBall out;
  out.complex = complement_ball(h);
  out.certificate = appendix_shelling(h);

  std::vector<Face> sorted = out.certificate.order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != out.complex.facets())
    throw ConstructionError("facet sets", "shelling order and complement disagree");
  if (!certificate_matches(out.certificate))
    throw ConstructionError("shelling", "predicted restriction faces are not confirmed");
  if (!(h_from_certificate(out.certificate) == h))
    throw ConstructionError("h-vector", "certificate histogram differs from the input");
  if (!(h_vector(out.complex) == h)) throw ConstructionError("h-vector", "face counts differ from the input");
  out.topology = classify(out.complex);
  if (out.topology.kind != TopologyKind::homology_ball)
    throw ConstructionError("topology", "not a homology ball: " + out.topology.reason);
  return out;
}

}  // namespace hball
