#include "hball/monomial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace hball {

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
  if (std::any_of(e_.begin(), e_.end(), [](int x) { return x < 0; }))
    throw std::invalid_argument("negative exponent");
  while (!e_.empty() && e_.back() == 0) e_.pop_back();
  degree_ = std::accumulate(e_.begin(), e_.end(), 0);
}

Monomial Monomial::from_indices(const std::vector<int>& indices) {
  std::vector<int> e;
  for (int i : indices) {
    if (i == 0) continue;  // padding in extended representations
    if (i < 0) throw std::invalid_argument("variable index must be positive");
    if (static_cast<int>(e.size()) < i) e.resize(i, 0);
    ++e[i - 1];
  }
  return Monomial(std::move(e));
}

std::vector<int> Monomial::extended(std::size_t c) const {
  if (static_cast<std::size_t>(degree_) > c) throw std::invalid_argument("extended length below degree");
  std::vector<int> out(c - degree_, 0);
  for (std::size_t i = 0; i < e_.size(); ++i) out.insert(out.end(), e_[i], static_cast<int>(i) + 1);
  return out;
}

Monomial Monomial::times(int var) const {
  std::vector<int> e = e_;
  if (static_cast<int>(e.size()) < var) e.resize(var, 0);
  ++e[var - 1];
  return Monomial(std::move(e));
}

Monomial Monomial::over(int var) const {
  if (exponent(var) == 0) throw std::invalid_argument("variable does not divide the monomial");
  std::vector<int> e = e_;
  --e[var - 1];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (e_.size() > other.e_.size()) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

std::string Monomial::to_string(char letter) const {
  if (degree_ == 0) return "1";
  std::ostringstream ss;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (!e_[i]) continue;
    ss << letter << i + 1;
    if (e_[i] > 1) ss << '^' << e_[i];
  }
  return ss.str();
}

bool revlex_less(const Monomial& a, const Monomial& b) {
  const int top = std::max(a.max_variable(), b.max_variable());
  for (int k = top; k >= 1; --k)
    if (a.exponent(k) != b.exponent(k)) return a.exponent(k) < b.exponent(k);
  return false;
}

Comparison compare(const Monomial& a, const Monomial& b, MonomialOrder order, std::size_t c) {
  if (a == b) return Comparison::equal;
  if (order == MonomialOrder::partial) {
    if (c == 0) c = static_cast<std::size_t>(std::max(a.degree(), b.degree()));
    auto ea = a.extended(c), eb = b.extended(c);
    bool le = true, ge = true;
    for (std::size_t i = 0; i < c; ++i) {
      le = le && ea[i] <= eb[i];
      ge = ge && ea[i] >= eb[i];
    }
    if (le) return Comparison::less;
    if (ge) return Comparison::greater;
    return Comparison::incomparable;
  }
  if (a.degree() != b.degree()) throw DegreeMismatch();
  if (order == MonomialOrder::revlex) return revlex_less(a, b) ? Comparison::less : Comparison::greater;
  const int top = std::max(a.max_variable(), b.max_variable());
  for (int k = 1; k <= top; ++k)
    if (a.exponent(k) != b.exponent(k)) return a.exponent(k) > b.exponent(k) ? Comparison::less : Comparison::greater;
  return Comparison::equal;
}

std::vector<Monomial> first_monomials(int n, int degree, Count count, MonomialOrder order) {
  if (order == MonomialOrder::partial) throw std::invalid_argument("partial order has no initial segments");
  std::vector<Monomial> out;
  if (count <= 0 || n < 0) return out;
  if (n == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::vector<int> e(n, 0);
  // lex ascending: Y1 exponent descending, then Y2, ...; rev-lex ascending: Y_n exponent ascending, then Y_{n-1}, ...
  std::function<bool(int, int)> rec = [&](int pos, int left) -> bool {
    const bool lex = order == MonomialOrder::lex;
    const int var = lex ? pos : n - 1 - pos;
    if (pos == n - 1) {
      e[var] = left;
      out.emplace_back(e);
      e[var] = 0;
      return static_cast<Count>(out.size()) < count;
    }
    for (int t = 0; t <= left; ++t) {
      const int x = lex ? left - t : t;
      e[var] = x;
      bool more = rec(pos + 1, left - x);
      e[var] = 0;
      if (!more) return false;
    }
    return true;
  };
  rec(0, degree);
  return out;
}

Count binomial(Count n, Count k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  Count r = 1;
  for (Count i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<CanonicalTerm> canonical_rep(Count l, int i) {
  if (l < 1 || i < 1) throw std::invalid_argument("canonical_rep needs l >= 1 and i >= 1");
  std::vector<CanonicalTerm> out;
  for (int k = i; k >= 1 && l > 0; --k) {
    Count n = k;
    while (binomial(n + 1, k) <= l) ++n;
    out.push_back({n, k});
    l -= binomial(n, k);
  }
  return out;
}

Count pseudo_power(Count l, int i) {
  if (l == 0) return 0;
  Count s = 0;
  for (const auto& t : canonical_rep(l, i)) s += binomial(t.n + 1, t.k + 1);
  return s;
}

MCheck is_m_vector(const std::vector<Count>& v) {
  if (v.empty()) return {false, 0};
  if (v[0] != 1) return {false, 0};
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] < 0) return {false, i};
    if (i >= 2 && v[i] > pseudo_power(v[i - 1], static_cast<int>(i - 1))) return {false, i};
  }
  return {true, std::nullopt};
}

std::vector<Monomial> OrderIdeal::all() const {
  std::vector<Monomial> out;
  for (const auto& d : by_degree) out.insert(out.end(), d.begin(), d.end());
  return out;
}

bool OrderIdeal::contains(const Monomial& m) const {
  if (m.degree() >= static_cast<int>(by_degree.size())) return false;
  const auto& d = by_degree[m.degree()];
  return std::find(d.begin(), d.end(), m) != d.end();
}

std::vector<Count> OrderIdeal::degree_sequence() const {
  std::vector<Count> s;
  for (const auto& d : by_degree) s.push_back(static_cast<Count>(d.size()));
  return s;
}

std::size_t OrderIdeal::size() const {
  std::size_t s = 0;
  for (const auto& d : by_degree) s += d.size();
  return s;
}

OrderIdeal compressed_ideal(const std::vector<Count>& seq) {
  MCheck chk = is_m_vector(seq);
  if (!chk.ok) throw NotAnMVector("degree sequence is not an M-vector");
  OrderIdeal ideal;
  ideal.variables = seq.size() > 1 ? static_cast<int>(seq[1]) : 0;
  for (std::size_t j = 0; j < seq.size(); ++j) {
    auto ms = first_monomials(ideal.variables, static_cast<int>(j), seq[j], MonomialOrder::revlex);
    if (static_cast<Count>(ms.size()) != seq[j]) throw NotAnMVector("not enough monomials in degree " + std::to_string(j));
    ideal.by_degree.push_back(std::move(ms));
  }
  while (ideal.by_degree.size() > 1 && ideal.by_degree.back().empty()) ideal.by_degree.pop_back();
  for (std::size_t j = 1; j < ideal.by_degree.size(); ++j)
    for (const Monomial& m : ideal.by_degree[j])
      for (int v = 1; v <= m.max_variable(); ++v)
        if (m.exponent(v) && !ideal.contains(m.over(v)))
          throw std::logic_error("compressed ideal is not closed under division");
  return ideal;
}

LexIdeal lex_ideal_from_hilbert(const std::vector<Count>& h, int n) {
  if (h.empty() || h[0] != 1) throw NotRealizable("Hilbert function must start with 1");
  if (n < 0) throw NotRealizable("negative variable count");
  LexIdeal out{n, h, {}};
  std::set<Monomial> prev;
  for (std::size_t i = 1; i <= h.size(); ++i) {
    const Count hi = i < h.size() ? h[i] : 0;
    const Count dim = binomial(n + static_cast<Count>(i) - 1, static_cast<Count>(i));
    if (hi < 0 || hi > dim) throw NotRealizable("h_" + std::to_string(i) + " exceeds the monomial count");
    auto span_v = first_monomials(n, static_cast<int>(i), dim - hi, MonomialOrder::lex);
    std::set<Monomial> span(span_v.begin(), span_v.end());
    for (const Monomial& m : prev)
      for (int v = 1; v <= n; ++v)
        if (!span.count(m.times(v)))
          throw NotRealizable("lex segment in degree " + std::to_string(i) + " is not closed under multiplication");
    for (const Monomial& m : span_v) {
      bool divisible = false;
      for (int v = 1; v <= m.max_variable() && !divisible; ++v)
        divisible = m.exponent(v) && prev.count(m.over(v));
      if (!divisible) out.generators.push_back(m);
    }
    prev = std::move(span);
  }
  return out;
}

Count ek_graded_betti(const LexIdeal& ideal, int i, int j) {
  if (i < 0) return 0;
  if (i == 0) return j == 0 ? 1 : 0;
  Count total = 0;
  for (const Monomial& u : ideal.generators)
    if (u.degree() == j - (i - 1)) total += binomial(u.max_variable() - 1, i - 1);
  return total;
}

}  // namespace hball
