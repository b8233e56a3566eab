#include <algorithm>

#include "hball/complex.hpp"

namespace hball {

namespace {

using Poly = std::vector<Count>;

Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly power(const Poly& base, int e) {
  Poly out{1};
  for (int i = 0; i < e; ++i) out = multiply(out, base);
  return out;
}

void add_scaled(Poly& acc, const Poly& p, Count scale) {
  if (acc.size() < p.size()) acc.resize(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i] += scale * p[i];
}

}  // namespace

CountVector make_h(std::vector<Count> entries) {
  if (entries.empty()) throw std::invalid_argument("h-vector needs at least one entry");
  int d = static_cast<int>(entries.size()) - 1;
  return CountVector{Role::h, d, std::move(entries)};
}

CountVector make_f(std::vector<Count> entries) {
  if (entries.empty() || entries[0] != 1) throw std::invalid_argument("f-vector must start with f_{-1} = 1");
  int d = static_cast<int>(entries.size()) - 1;
  return CountVector{Role::f, d, std::move(entries)};
}

CountVector f_vector(const SimplicialComplex& c) {
  if (c.is_void()) throw std::invalid_argument("the void complex has no f-vector");
  const auto& lat = c.lattice();
  std::vector<Count> f;
  for (const auto& layer : lat.by_size) f.push_back(static_cast<Count>(layer.size()));
  return make_f(std::move(f));
}

CountVector convert(const CountVector& v, Role target) {
  if (v.entries.size() != static_cast<std::size_t>(v.d) + 1)
    throw std::invalid_argument("count vector length must be d+1");
  if (v.role == target) return v;
  const int d = v.d;
  if (v.role == Role::g) {
    std::vector<Count> h(v.entries.size());
    Count run = 0;
    for (std::size_t i = 0; i < h.size(); ++i) h[i] = run += v.entries[i];
    return convert(CountVector{Role::h, d, std::move(h)}, target);
  }
  if (target == Role::g) {
    return g_of_h(v.role == Role::h ? v : convert(v, Role::h));
  }
  Poly acc;
  if (v.role == Role::f) {
    // sum_i f_{i-1} x^i (1-x)^{d-i}
    if (v.entries[0] != 1) throw std::invalid_argument("f-vector must start with f_{-1} = 1");
    for (int i = 0; i <= d; ++i) {
      Poly term = multiply(power({0, 1}, i), power({1, -1}, d - i));
      add_scaled(acc, term, v.entries[i]);
    }
  } else {
    // Substituting x = y/(1+y) turns the identity into sum_i h_i y^i (1+y)^{d-i} = sum_i f_{i-1} y^i.
    for (int i = 0; i <= d; ++i) {
      Poly term = multiply(power({0, 1}, i), power({1, 1}, d - i));
      add_scaled(acc, term, v.entries[i]);
    }
  }
  acc.resize(d + 1, 0);
  return CountVector{target, d, std::move(acc)};
}

CountVector g_of_h(const CountVector& h) {
  if (h.role != Role::h) throw std::invalid_argument("g_of_h expects an h-vector");
  std::vector<Count> g(h.entries.size());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = h.entries[i] - (i ? h.entries[i - 1] : 0);
  return CountVector{Role::g, h.d, std::move(g)};
}

CountVector h_vector(const SimplicialComplex& c) { return convert(f_vector(c), Role::h); }

}  // namespace hball
