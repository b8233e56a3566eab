#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "hball/construction.hpp"
#include "hball/obstruction.hpp"
#include "support.hpp"

using namespace hball;

namespace {

Monomial Y(std::vector<int> idx) { return Monomial::from_indices(idx); }

Monomial random_monomial(std::mt19937& rng, int max_degree, int max_var) {
  std::uniform_int_distribution<int> deg(0, max_degree), var(1, max_var);
  std::vector<int> idx;
  for (int k = deg(rng); k > 0; --k) idx.push_back(var(rng));
  return Y(idx);
}

std::vector<Monomial> monomials_up_to(int degree, int vars) {
  std::vector<Monomial> out{Monomial()};
  std::vector<Monomial> layer{Monomial()};
  for (int k = 1; k <= degree; ++k) {
    std::set<Monomial> next;
    for (const auto& m : layer)
      for (int v = 1; v <= vars; ++v) next.insert(m.times(v));
    layer.assign(next.begin(), next.end());
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

// h of a complex counted from its facets with the binomial oracle.
std::vector<Count> oracle_h(const SimplicialComplex& c) {
  const int d = c.dim() + 1;
  return oracle::h_from_f(oracle::f_by_count(c.facets(), d));
}

std::vector<CountVector> satisfying(int d, Count top) {
  std::vector<CountVector> out;
  std::vector<Count> h(d + 1, 0);
  h[0] = 1;
  std::function<void(int)> rec = [&](int i) {
    if (i == d) {
      if (construction_conditions(make_h(h)).satisfied()) out.push_back(make_h(h));
      return;
    }
    for (Count v = 0; v <= top; ++v) {
      h[i] = v;
      rec(i + 1);
    }
    h[i] = 0;
  };
  rec(1);
  return out;
}

}  // namespace

TEST_CASE("alpha and alpha-prime examples", "[construction][alpha]") {
  CHECK(facet_of_monomial(Monomial(), CorrespondenceMode::alpha, 5).face == Face{1, 2, 3, 4, 5, 6});
  auto f = facet_of_monomial(Y({2, 3}), CorrespondenceMode::alpha, 5);
  CHECK(f.face == Face{1, 2, 5, 6, 8, 9});
  CHECK(f.pair_starts == std::vector<int>{1, 5, 8});
  CHECK(facet_of_monomial(Monomial(), CorrespondenceMode::alpha_prime, 5).face == Face{1, 2, 3, 4, 5});
  auto even = facet_of_monomial(Monomial(), CorrespondenceMode::alpha, 4);
  CHECK(even.apex);
  CHECK(even.face == Face{0, 1, 2, 3, 4});
  CHECK_THROWS(facet_of_monomial(Y({1, 1, 1, 1}), CorrespondenceMode::alpha, 5));
  CHECK_THROWS_AS(facet_of_monomial(Y({3}), CorrespondenceMode::alpha, 5, 6), std::out_of_range);
  CHECK_THROWS(monomial_of_facet(Face{1, 2, 3, 5, 6, 7}, CorrespondenceMode::alpha, 5));
}

TEST_CASE("correspondences round-trip", "[construction][alpha][property]") {
  std::mt19937 rng(7);
  for (auto mode : {CorrespondenceMode::alpha, CorrespondenceMode::alpha_prime})
    for (int d : {5, 6, 7}) {
      const int pairs = (d + 1) / 2 - (mode == CorrespondenceMode::alpha_prime ? 1 : 0);
      for (int k = 0; k < 500; ++k) {
        const Monomial m = random_monomial(rng, pairs, 9);
        const BLFacet f = facet_of_monomial(m, mode, d);
        REQUIRE(f.face.size() == static_cast<std::size_t>(mode == CorrespondenceMode::alpha ? d + 1 : d));
        REQUIRE(monomial_of_facet(f.face, mode, d) == m);
        for (std::size_t j = 1; j < f.pair_starts.size(); ++j) REQUIRE(f.pair_starts[j] > f.pair_starts[j - 1] + 1);
      }
    }
}

TEST_CASE("alpha preserves the partial order", "[construction][alpha][property]") {
  const int d = 5, c = 3;
  const auto ms = monomials_up_to(3, 4);
  for (const auto& a : ms)
    for (const auto& b : ms) {
      const auto fa = facet_of_monomial(a, CorrespondenceMode::alpha, d, 12);
      const auto fb = facet_of_monomial(b, CorrespondenceMode::alpha, d, 12);
      bool le = true, ge = true;
      for (int j = 0; j < c; ++j) {
        le = le && fa.pair_starts[j] <= fb.pair_starts[j];
        ge = ge && fa.pair_starts[j] >= fb.pair_starts[j];
      }
      const auto cmp = compare(a, b, MonomialOrder::partial, c);
      if (a == b) REQUIRE(cmp == Comparison::equal);
      else if (le) REQUIRE(cmp == Comparison::less);
      else if (ge) REQUIRE(cmp == Comparison::greater);
      else REQUIRE(cmp == Comparison::incomparable);
    }
}

TEST_CASE("Billera-Lee balls", "[construction][bl]") {
  auto one = build_bl_ball(compressed_ideal({1}), 5);
  CHECK(one.complex.num_facets() == 1);
  CHECK(h_vector(one.complex).entries == std::vector<Count>{1, 0, 0, 0, 0, 0, 0});
  auto two = build_bl_ball(compressed_ideal({1, 1}), 5);
  CHECK(two.complex.num_facets() == 2);
  CHECK(h_vector(two.complex).entries == std::vector<Count>{1, 1, 0, 0, 0, 0, 0});
  auto b = build_bl_ball(compressed_ideal({1, 2, 1}), 5);
  auto cls = classify(b.complex);
  CHECK(cls.kind == TopologyKind::homology_ball);
  CHECK(classify(ridge_boundary(b.complex)).kind == TopologyKind::homology_sphere);
}

TEST_CASE("restriction sizes equal monomial degrees", "[construction][bl][property]") {
  std::mt19937 rng(53);
  std::uniform_int_distribution<int> e(0, 5);
  int built = 0;
  for (int trial = 0; trial < 5000 && built < 60; ++trial) {
    std::vector<Count> seq{1};
    for (int k = 0, len = 1 + trial % 3; k < len; ++k) seq.push_back(e(rng));
    if (!is_m_vector(seq).ok) continue;
    auto I = compressed_ideal(seq);
    if (I.size() > 60) continue;
    ++built;
    const int top = static_cast<int>(seq.size()) - 1;
    for (int d : {2 * top - 1, 2 * top, 2 * top + 1}) {
      if (d < 1) continue;
      auto B = build_bl_ball(I, d);
      for (std::size_t i = 0; i < B.order.size(); ++i)
        REQUIRE(B.certificate.restrictions[i].size() == static_cast<std::size_t>(B.order[i].degree()));
      auto h = oracle_h(B.complex);
      for (std::size_t i = 0; i < h.size(); ++i) REQUIRE(h[i] == (i < seq.size() ? seq[i] : 0));
      // The boundary sphere's h steps are g_i - g_{d+1-i}.
      auto hb = oracle_h(ridge_boundary(B.complex));
      auto g = [&](int i) { return i >= 0 && i < static_cast<int>(seq.size()) ? seq[i] : Count{0}; };
      REQUIRE(hb.size() == static_cast<std::size_t>(d + 1));
      for (int i = 1; i <= d; ++i) REQUIRE(hb[i] - hb[i - 1] == g(i) - g(d + 1 - i));
    }
  }
  CHECK(built >= 50);
}

TEST_CASE("boundary ridge test agrees with a ridge census", "[construction][bl][property]") {
  for (const auto& seq : std::vector<std::vector<Count>>{{1}, {1, 1}, {1, 2, 1}, {1, 2, 3}, {1, 3, 2, 1}}) {
    auto I = compressed_ideal(seq);
    const int top = static_cast<int>(seq.size()) - 1;
    for (int d : {2 * top + 1, 2 * top + 2}) {
      auto B = build_bl_ball(I, d);
      std::map<Face, int> census;
      for (const auto& f : B.complex.facets())
        for (int v : f) ++census[f.without(v)];
      const int pairs = (d + 1) / 2 - 1;
      for (const auto& m : monomials_up_to(pairs, static_cast<int>(seq[1]) + 1)) {
        const Face r = facet_of_monomial(m, CorrespondenceMode::alpha_prime, d).face;
        const bool direct = census.count(r) && census[r] == 1;
        REQUIRE(boundary_facet_test(m, I, d) == direct);
      }
    }
  }
  CHECK(boundary_facet_test(Monomial(), compressed_ideal({1}), 5));
}

TEST_CASE("construction conditions", "[construction][conditions]") {
  // Proved impossible elsewhere, so the sufficient conditions must reject it.
  auto r = construction_conditions(make_h({1, 4, 5, 7, 3, 2, 0}));
  CHECK_FALSE(r.satisfied());
  CHECK_FALSE(r.failure().empty());
  auto odd = construction_conditions(make_h({1, 3, 6, 10, 5, 3, 0}));
  CHECK_FALSE(odd.satisfied());
  CHECK(odd.G == std::vector<Count>{1, 0, 1});
  CHECK(construction_conditions(make_h({1, 0, 0, 0})).satisfied());
  CHECK(construction_conditions(make_h({1, 2, 2, 1, 0})).satisfied());
  CHECK_FALSE(construction_conditions(make_h({1, 2, 0, 1})).satisfied());
}

TEST_CASE("type-set selection", "[construction][selection]") {
  auto s = select_type_sets(make_h({1, 1, 0, 0}));
  REQUIRE(s.selected.size() == 2);
  CHECK(s.selected[0] == std::vector<Monomial>{Monomial()});
  CHECK(s.selected[1] == std::vector<Monomial>{Y({1})});
  // Longer vectors of this shape have h_2 < h_1 below the middle and are out of reach.
  CHECK_FALSE(construction_conditions(make_h({1, 1, 0, 0, 0, 0, 0, 0})).satisfied());

  for (auto h : {make_h({1, 2, 2, 1, 1, 1, 0}), make_h({1, 3, 2, 1, 1, 0}), make_h({1, 3, 4, 3, 2, 1, 0})}) {
    auto st = select_type_sets(h);
    for (std::size_t k = 0; k < st.selected.size(); ++k) {
      REQUIRE(static_cast<Count>(st.selected[k].size()) == st.G[k]);
      for (const auto& m : st.selected[k])
        REQUIRE(std::find(st.pools[k].begin(), st.pools[k].end(), m) != st.pools[k].end());
    }
  }
  CHECK(select_type_sets(make_h({1, 3, 2, 1, 1, 0})).negative);
  CHECK(select_type_sets(make_h({1, 3, 4, 3, 2, 1, 0})).negative);
  CHECK(select_type_sets(make_h({1, 2, 2, 1, 1, 1, 0})).negative);
  CHECK(select_type_sets(make_h({1, 2, 2, 1, 0, 0, 0})).negative);
  CHECK_FALSE(select_type_sets(make_h({1, 2, 3, 4, 2, 1, 0})).negative);
  CHECK_THROWS(select_type_sets(make_h({1, 4, 5, 7, 3, 2, 0})));
}

TEST_CASE("complementary balls", "[construction][complement]") {
  auto s = complement_ball(make_h({1, 0, 0, 0}));
  CHECK(s.num_facets() == 1);
  CHECK(s.facets().front().size() == 3);
  CHECK_FALSE(construction_conditions(make_h({1, 2, 1, 0, 0, 0, 0})).satisfied());
  CHECK_THROWS_AS(complement_ball(make_h({1, 2, 1, 0, 0, 0, 0})), ConstructionError);
  for (auto h : {make_h({1, 2, 2, 1, 0, 0, 0}), make_h({1, 3, 3, 3, 1, 1, 0}), make_h({1, 3, 2, 1, 1, 0})}) {
    auto c = complement_ball(h);
    CHECK(oracle_h(c) == h.entries);
    CHECK(classify(c).kind == TopologyKind::homology_ball);
  }
}

TEST_CASE("complement h-vectors follow the subtraction law", "[construction][complement][property]") {
  for (int d = 3; d <= 6; ++d)
    for (const auto& h : satisfying(d, 3)) {
      if (construction_conditions(h).simplex_base_case) continue;
      auto p = complement_construction(h);
      const auto hs = oracle_h(p.sphere);
      const auto hb = oracle_h(p.sub_ball);
      const auto hc = oracle_h(p.ball);
      REQUIRE(hs.size() == static_cast<std::size_t>(d + 1));
      REQUIRE(hb.size() == static_cast<std::size_t>(d + 1));
      for (int i = 0; i <= d; ++i) REQUIRE(hc[i] == hs[i] - hb[d - i]);
      REQUIRE(hc == h.entries);
    }
}

TEST_CASE("appendix shelling", "[construction][appendix]") {
  auto base = appendix_shelling(make_h({1, 0, 0, 0, 0}));
  CHECK(base.order.size() == 1);
  CHECK(base.restrictions == std::vector<Face>{Face{}});

  for (auto h : {make_h({1, 2, 2, 1, 0, 0, 0}), make_h({1, 3, 2, 1, 1, 0}), make_h({1, 3, 4, 3, 2, 1, 0})}) {
    auto cert = appendix_shelling(h);
    CHECK(verify_shelling(cert.order) == cert);
    CHECK(h_from_certificate(cert) == h);
    std::set<Face> a(cert.order.begin(), cert.order.end());
    auto c = complement_ball(h);
    std::set<Face> b(c.facets().begin(), c.facets().end());
    CHECK(a == b);
  }
}

TEST_CASE("appendix predictions match the checker facet by facet", "[construction][appendix][property]") {
  std::size_t runs = 0;
  for (int d = 3; d <= 6; ++d)
    for (const auto& h : satisfying(d, 3)) {
      auto cert = appendix_shelling(h);
      auto computed = verify_shelling(cert.order);
      REQUIRE(computed.restrictions == cert.restrictions);
      ++runs;
    }
  CHECK(runs > 50);
}

TEST_CASE("constructed balls", "[construction][verified]") {
  auto two = construct_verified(make_h({1, 1, 0, 0}));
  CHECK(two.complex.num_facets() == 2);
  CHECK(two.complex.facets().front().size() == 3);
  auto three = construct_verified(make_h({1, 2, 2, 0, 0}));
  CHECK(three.topology.kind == TopologyKind::homology_ball);
  CHECK_THROWS_AS(construct_verified(make_h({1, 4, 5, 7, 3, 2, 0})), ConstructionError);
}

TEST_CASE("constructed balls have the predicted boundary", "[construction][verified][property]") {
  for (int d = 3; d <= 6; ++d)
    for (const auto& h : satisfying(d, 2)) {
      auto v = construct_verified(h);
      REQUIRE(v.topology.kind == TopologyKind::homology_ball);
      REQUIRE(v.topology.boundary);
      REQUIRE(classify(*v.topology.boundary).kind == TopologyKind::homology_sphere);
      const auto hb = oracle_h(*v.topology.boundary);
      const auto g = boundary_g(h).entries;
      for (std::size_t i = 1; i < g.size(); ++i) REQUIRE(hb[i] - hb[i - 1] == g[i]);
      // The top Betti number is positive exactly when some ridge disconnects the ball.
      const Count beta = hochster_beta_top(v.complex);
      REQUIRE(beta == hochster_beta_top(v.complex, HochsterMode::full_sum));
      bool splits = false;
      for (const auto& f : v.complex.facets())
        for (int u : f) splits = splits || oracle::components_without(v.complex.facets(), f.without(u)) > 1;
      REQUIRE((beta > 0) == splits);
    }
}
