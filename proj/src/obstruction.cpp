#include "hball/obstruction.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hball/construction.hpp"

namespace hball {

using json = nlohmann::ordered_json;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::bl_conditions_fail: return "bl_conditions_fail";
    case Verdict::impossible_betti_split: return "impossible_betti_split";
    case Verdict::impossible_skeleton: return "impossible_skeleton";
    case Verdict::impossible_family_certificate: return "impossible_family_certificate";
    case Verdict::constructible: return "constructible";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

bool is_impossible(Verdict v) {
  return v == Verdict::bl_conditions_fail || v == Verdict::impossible_betti_split ||
         v == Verdict::impossible_skeleton || v == Verdict::impossible_family_certificate;
}

namespace {

void require_h(const CountVector& h) {
  if (h.role != Role::h) throw std::invalid_argument("expected an h-vector");
  if (h.entries.empty()) throw std::invalid_argument("empty h-vector");
}

std::vector<Count> prefix(const std::vector<Count>& v, std::size_t n) {
  return {v.begin(), v.begin() + static_cast<long>(std::min(n, v.size()))};
}

}  // namespace

CountVector boundary_g(const CountVector& h) {
  require_h(h);
  const int d = static_cast<int>(h.size()) - 1;
  if (h[d] != 0) throw std::invalid_argument("boundary_g needs h_d = 0");
  std::vector<Count> g;
  for (int i = 0; i <= (d - 1) / 2; ++i) g.push_back(h[i] - h[d - i]);
  if (g.empty()) g.push_back(h[0]);
  return CountVector{Role::g, static_cast<int>(g.size()) - 1, g};
}

bool ConditionReport::all_pass() const {
  return std::all_of(cones.begin(), cones.end(), [](const ConeCondition& c) { return c.check.ok; });
}

std::optional<int> ConditionReport::first_failure() const {
  for (const auto& c : cones)
    if (!c.check.ok) return c.k;
  return std::nullopt;
}

ConditionReport gconditions(const CountVector& h) {
  require_h(h);
  ConditionReport r;
  const int d = r.d = static_cast<int>(h.size()) - 1;
  for (int k = 0; k <= d + 1; ++k) {
    ConeCondition c;
    c.k = k;
    const int m = (d + k - 1) / 2;
    for (int i = 0; i <= m; ++i) c.vector.push_back(h.at_or_zero(i) - h.at_or_zero(d + k - i));
    c.check = is_m_vector(c.vector);
    c.prefix_ok = is_m_vector(prefix(c.vector, 3)).ok;
    r.cones.push_back(std::move(c));
  }
  r.h_is_m_vector = is_m_vector(h.entries).ok;
  r.top_zero = h[d] == 0;
  // The inequality comes from the k = d-3 cone, which exists only for d >= 3.
  r.tail_step = d < 3 || h[d - 2] >= h[d - 1];
  r.prefixes_ok = std::all_of(r.cones.begin(), r.cones.end(), [](const ConeCondition& c) { return c.prefix_ok; });
  return r;
}

VerifiedConditions verified_conditions(const CountVector& h) {
  const ConditionReport r = gconditions(h);
  VerifiedConditions v;
  if (!r.h_is_m_vector) v.reasons.push_back("h is not an M-vector");
  if (!r.top_zero) v.reasons.push_back("h_d is not zero");
  if (!r.tail_step) v.reasons.push_back("h_{d-2} < h_{d-1}");
  for (const auto& c : r.cones)
    if (!c.prefix_ok) v.reasons.push_back("length-3 prefix fails for k = " + std::to_string(c.k));
  if (r.d <= 5)
    for (const auto& c : r.cones)
      if (!c.check.ok) v.reasons.push_back("cone condition fails for k = " + std::to_string(c.k));
  v.ok = v.reasons.empty();
  return v;
}

PeevaBounds peeva_bounds(const CountVector& h) {
  require_h(h);
  if (!is_m_vector(h.entries).ok) throw NotAnMVector("peeva_bounds needs an M-vector");
  PeevaBounds b;
  const int n = b.variables = static_cast<int>(h.size() > 1 ? h[1] : 0);
  if (n == 0) return b;
  const LexIdeal lex = lex_ideal_from_hilbert(h.entries, n);
  b.beta_top = ek_graded_betti(lex, n, n + 1);
  b.beta_sub = ek_graded_betti(lex, n - 1, n + 1);
  b.upper = b.beta_top;
  b.lower = std::max<Count>(0, b.beta_top - b.beta_sub);
  return b;
}

namespace {

bool split_component_ok(const std::vector<Count>& e) {
  const CountVector c = make_h(e);
  if (!verified_conditions(c).ok) return false;
  return is_m_vector(prefix(boundary_g(c).entries, 3)).ok;
}

// Whether the split engine alone rules h out.
bool split_rules_out(const CountVector& h, bool recursive) {
  if (!is_m_vector(h.entries).ok) return false;
  return peeva_bounds(h).lower > 0 && enumerate_splits(h, recursive).empty();
}

}  // namespace

std::vector<SplitCandidate> enumerate_splits(const CountVector& h, bool recursive) {
  require_h(h);
  std::vector<SplitCandidate> out;
  const int d = static_cast<int>(h.size()) - 1;
  if (d < 1 || h[0] != 1 || h[1] < 1) return out;
  std::vector<Count> a(d + 1, 0), b(d + 1, 0);
  a[0] = b[0] = 1;
  std::function<void(int)> rec = [&](int i) {
    if (i > d) {
      if (a < b) return;
      if (!split_component_ok(a) || !split_component_ok(b)) return;
      if (recursive && (split_rules_out(make_h(a), true) || split_rules_out(make_h(b), true))) return;
      out.push_back({make_h(a), make_h(b)});
      return;
    }
    const Count total = i == 1 ? h[1] - 1 : h[i];
    for (Count c = 0; c <= total; ++c) {
      a[i] = c;
      b[i] = total - c;
      // M-vector growth is checked on prefixes, so dead branches stop early.
      if (is_m_vector(prefix(a, i + 1)).ok && is_m_vector(prefix(b, i + 1)).ok) rec(i + 1);
    }
    a[i] = b[i] = 0;
  };
  rec(1);
  return out;
}

namespace {

json bounds_json(const PeevaBounds& b) {
  return json{{"variables", b.variables}, {"beta_n_n+1", b.beta_top}, {"beta_n-1_n+1", b.beta_sub},
              {"lower", b.lower}, {"upper", b.upper}};
}

}  // namespace

ObstructionReport betti_split_verdict(const CountVector& h, bool recursive) {
  require_h(h);
  ObstructionReport r;
  r.stage = "betti_split";
  if (!is_m_vector(h.entries).ok) {
    r.certificate["reason"] = "h is not an M-vector";
    return r;
  }
  const PeevaBounds b = peeva_bounds(h);
  r.certificate["peeva_bounds"] = bounds_json(b);
  r.certificate["recursive"] = recursive;
  if (b.lower <= 0) {
    r.certificate["reason"] = "lower bound on the socle Betti number is zero";
    return r;
  }
  const auto splits = enumerate_splits(h, recursive);
  json list = json::array();
  for (const auto& s : splits) list.push_back(json::array({s.first.entries, s.second.entries}));
  r.certificate["splits"] = list;
  if (splits.empty()) {
    r.verdict = Verdict::impossible_betti_split;
    r.certificate["reason"] = "every ball would split along a ridge, and no split is admissible";
  } else {
    r.certificate["reason"] = "admissible splits exist";
  }
  return r;
}

Conjecture61 conjecture61_predicate(const CountVector& h, bool allow_zero) {
  require_h(h);
  if (h.size() != 7) throw std::invalid_argument("conjecture61_predicate needs d = 6");
  Conjecture61 out;
  for (Count m = allow_zero ? 0 : 1; m <= h[1]; ++m) {
    std::vector<Count> e = h.entries;
    e[1] -= m;
    if (construction_conditions(make_h(e)).satisfied()) {
      out.holds = true;
      out.witness = m;
      return out;
    }
  }
  return out;
}

ObstructionReport verdict(const CountVector& h, const VerdictOptions& opt) {
  require_h(h);
  ObstructionReport r;
  r.certificate["h"] = h.entries;

  const VerifiedConditions v = verified_conditions(h);
  if (!v.ok) {
    r.verdict = Verdict::bl_conditions_fail;
    r.stage = "verified_conditions";
    r.certificate["reasons"] = v.reasons;
    return r;
  }
  const ConditionReport g = gconditions(h);
  if (!g.all_pass()) {
    r.verdict = Verdict::bl_conditions_fail;
    r.stage = "gconditions";
    r.certificate["conjectural"] = true;
    r.certificate["failing_k"] = *g.first_failure();
    r.certificate["vector"] = g.cones[*g.first_failure()].vector;
    return r;
  }

  ObstructionReport betti = betti_split_verdict(h, opt.recursive_splits);
  if (betti.verdict != Verdict::unknown) {
    betti.certificate = json{{"h", h.entries}, {"betti_split", betti.certificate}};
    return betti;
  }
  r.certificate["betti_split"] = betti.certificate;

  ObstructionReport skel = skeleton_search(h, opt.cap_absent_edges);
  if (skel.verdict != Verdict::unknown) {
    skel.certificate = json{{"h", h.entries}, {"betti_split", betti.certificate}, {"skeleton", skel.certificate}};
    return skel;
  }
  r.certificate["skeleton"] = skel.certificate;

  const ConstructionConditions cc = construction_conditions(h);
  r.certificate["construction_conditions"] = cc.satisfied();
  if (cc.satisfied()) {
    try {
      VerifiedBall ball = construct_verified(h);
      r.verdict = Verdict::constructible;
      r.stage = "construction";
      r.certificate["facets"] = ball.complex.num_facets();
      r.certificate["vertices"] = ball.complex.num_vertices();
      r.certificate["topology"] = to_string(ball.topology.kind);
      r.complex = std::move(ball.complex);
      r.shelling = std::move(ball.certificate);
      return r;
    } catch (const ConstructionError& e) {
      r.certificate["construction_error"] = e.what();
    }
  }
  r.stage = "none";
  return r;
}

}  // namespace hball
