#include <algorithm>
#include <set>
#include <tuple>

#include "hball/construction.hpp"

namespace hball {

namespace {

struct Blocks {
  std::size_t lead = 0;  // length of the prefix 1, 2, ..., lead
  std::vector<std::vector<int>> runs;
};

Blocks blocks_of(const Face& f) {
  Blocks b;
  const auto& v = f.vertices();
  while (b.lead < v.size() && v[b.lead] == static_cast<int>(b.lead) + 1) ++b.lead;
  for (std::size_t i = b.lead; i < v.size(); ++i) {
    if (!b.runs.empty() && b.runs.back().back() == v[i] - 1)
      b.runs.back().push_back(v[i]);
    else
      b.runs.push_back({v[i]});
  }
  return b;
}

// Every second vertex after the leading run, starting two places past it.
Face restriction_of_first(const Face& f) {
  const auto& v = f.vertices();
  const std::size_t lead = blocks_of(f).lead;
  std::vector<int> r;
  for (std::size_t k = lead + 2; k <= v.size(); k += 2) r.push_back(v[k - 1]);
  return Face(std::move(r));
}

bool precedes_first(const Face& f, const Face& g) {
  if (f == g) return false;
  const Blocks a = blocks_of(f), b = blocks_of(g);
  if (a.lead != b.lead) return a.lead > b.lead;
  for (std::size_t i = 0; i < std::min(a.runs.size(), b.runs.size()); ++i) {
    const auto &x = a.runs[i], &y = b.runs[i];
    if (x.front() != y.front()) return x.front() < y.front();
    const std::size_t lx = x.size(), ly = y.size();
    if (lx % 2 != ly % 2) return lx % 2 == 1;
    if (lx % 2 == 1) {
      if (lx != ly) return lx < ly;
      const Face diff = face_union(face_difference(f, g), face_difference(g, f));
      return f.contains(diff.vertices().back());
    }
    if (lx != ly) return lx > ly;
  }
  throw std::logic_error("block comparison did not separate " + to_string(f) + " and " + to_string(g));
}

struct Entry {
  std::size_t rank;
  std::size_t rsize;
  Face face;
  Face restriction;
};

Face odd_tail(const Face& facet, int low, int top, int s, int L) {
  std::vector<int> r;
  for (int i = low; i <= top - s; ++i) r.push_back(2 * i + 1);
  bool take = true;
  for (int v : facet) {
    if (v <= L) continue;
    if (take) r.push_back(v);
    take = !take;
  }
  return Face(std::move(r));
}

// Ridges removed from the second vertex set: facets of B(J) minus an even vertex k, and,
// in the negative case, minus vertex 1. dd is the odd dimension the pairs live in.
std::vector<Entry> second_half(const std::vector<Monomial>& J, const std::vector<Face>& facet, int dd,
                               const std::vector<Count>& h, int index_shift, bool negative, int apex) {
  std::vector<std::size_t> idx(J.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return revlex_less(J[b], J[a]); });

  const int top = (dd - 1) / 2;
  std::vector<Entry> sel;
  auto finish = [&](std::vector<int> r, std::size_t rank, Face f) {
    if (apex >= 0) {
      r.push_back(apex);
      f = f.with(apex);
    }
    Face rf(std::move(r));
    sel.push_back({rank, rf.size(), std::move(f), std::move(rf)});
  };
  for (int k = 2; k <= dd + 1; k += 2) {
    const Count n = h[(dd + k + index_shift) / 2];
    Count taken = 0;
    for (std::size_t rank = 0; rank < idx.size() && taken < n; ++rank) {
      const std::size_t e = idx[rank];
      const int s = J[e].degree();
      const int L = dd + 1 - 2 * s;
      if (k > L) continue;
      ++taken;
      std::vector<int> r;
      for (int i = 1; i < k; ++i) r.push_back(i);
      for (int v : odd_tail(facet[e], k / 2, top, s, L)) r.push_back(v);
      finish(std::move(r), rank, facet[e].without(k));
    }
  }
  if (negative) {
    const Count n = h[(dd + index_shift) / 2];
    for (std::size_t rank = 0; rank < idx.size() && static_cast<Count>(rank) < n; ++rank) {
      const std::size_t e = idx[rank];
      const int s = J[e].degree();
      Face t = odd_tail(facet[e], 1, top, s, dd + 1 - 2 * s);
      finish(std::vector<int>(t.begin(), t.end()), rank, facet[e].without(1));
    }
  }
  std::stable_sort(sel.begin(), sel.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.rank, a.rsize) < std::tie(b.rank, b.rsize);
  });
  return sel;
}

// Boundary ridges of B(J) obtained by dropping the left end of one pair.
std::vector<Face> first_half(const std::vector<Face>& facets, bool negative) {
  const SimplicialComplex bd = ridge_boundary(SimplicialComplex(facets));
  std::set<Face> out;
  for (const Face& f : facets) {
    const auto& v = f.vertices();
    for (std::size_t k = 0; k < v.size(); k += 2) {
      Face r = f.without(v[k]);
      if (std::binary_search(bd.facets().begin(), bd.facets().end(), r)) out.insert(r);
    }
  }
  std::vector<Face> res;
  for (const Face& r : out)
    if (!negative || r.contains(1)) res.push_back(r);
  std::sort(res.begin(), res.end(), precedes_first);
  return res;
}

}  // namespace

ShellingCertificate appendix_shelling(const CountVector& h) {
  ConstructionConditions cond = construction_conditions(h);
  if (!cond.satisfied()) throw ConstructionError("conditions", cond.failure());
  const int d = cond.d;
  ShellingCertificate cert;
  if (cond.simplex_base_case) {
    std::vector<int> v(d);
    for (int i = 0; i < d; ++i) v[i] = i + 1;
    cert.order.emplace_back(std::move(v));
    cert.restrictions.emplace_back();
    return cert;
  }

  const SelectionState s = select_type_sets(h);
  const std::vector<Monomial> J = s.ideal.all();
  // Odd d shells inside B(J); even d uses the same pairs one dimension down, coned with 0.
  const int dd = d % 2 == 1 ? d : d - 1;
  std::vector<Face> facet;
  for (const Monomial& m : J) facet.push_back(facet_of_monomial(m, CorrespondenceMode::alpha, dd).face);

  if (d % 2 == 0) {
    std::vector<std::size_t> idx(J.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      if (J[a].degree() != J[b].degree()) return J[a].degree() < J[b].degree();
      return revlex_less(J[a], J[b]);
    });
    for (std::size_t e : idx) {
      const auto& v = facet[e].vertices();
      std::vector<int> r;
      for (std::size_t j = 0; 2 * j < v.size(); ++j)
        if (v[2 * j] != static_cast<int>(2 * j) + 1) r.push_back(v[2 * j] + 1);
      cert.order.push_back(facet[e]);
      cert.restrictions.emplace_back(std::move(r));
    }
  }

  const int apex = d % 2 == 0 ? 0 : -1;
  for (const Face& r : first_half(facet, s.negative)) {
    cert.order.push_back(apex >= 0 ? r.with(0) : r);
    Face pr = restriction_of_first(r);
    cert.restrictions.push_back(apex >= 0 ? pr.with(0) : pr);
  }
  // N = h[(d+k-1)/2] for odd d and h[(d+k)/2] for even d; both equal h[(dd+k+shift)/2].
  const int shift = d % 2 == 1 ? -1 : 1;
  for (Entry& e : second_half(J, facet, dd, h.entries, shift, s.negative, apex)) {
    cert.order.push_back(std::move(e.face));
    cert.restrictions.push_back(std::move(e.restriction));
  }
  return cert;
}

}  // namespace hball
