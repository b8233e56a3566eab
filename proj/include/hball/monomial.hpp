#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hball/complex.hpp"

namespace hball {

/// A monomial in variables Y_1, Y_2, ...; exponents()[i] is the power of Y_{i+1}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  /// Product of the listed variables, with repetition: {1,1,3} is Y_1^2 Y_3.
  static Monomial from_indices(const std::vector<int>& indices);

  const std::vector<int>& exponents() const { return e_; }
  int exponent(int var) const { return var >= 1 && var <= static_cast<int>(e_.size()) ? e_[var - 1] : 0; }
  int degree() const { return degree_; }
  /// Largest variable index with a positive exponent; 0 for the constant monomial.
  int max_variable() const { return static_cast<int>(e_.size()); }

  /// Sorted variable indices padded with leading zeros to length c.
  std::vector<int> extended(std::size_t c) const;
  Monomial times(int var) const;
  /// m / Y_var; requires a positive exponent.
  Monomial over(int var) const;
  bool divides(const Monomial& other) const;
  std::string to_string(char letter = 'Y') const;

  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.e_ <=> b.e_; }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

 private:
  std::vector<int> e_;
  int degree_ = 0;
};

enum class MonomialOrder { lex, revlex, partial };
enum class Comparison { less, equal, greater, incomparable };

class DegreeMismatch : public std::invalid_argument {
 public:
  DegreeMismatch() : std::invalid_argument("lex and rev-lex compare monomials of equal degree") {}
};

/**
 * lex: a < b when the first differing exponent of a is larger.
 * revlex: a < b when the last differing exponent of a is smaller.
 * partial: componentwise on extended representations of length c (c = 0 uses the larger degree).
 */
Comparison compare(const Monomial& a, const Monomial& b, MonomialOrder order, std::size_t c = 0);

/// Rev-lex read on raw exponent vectors, also across degrees; used to sort mixed-degree families.
bool revlex_less(const Monomial& a, const Monomial& b);

/// First `count` monomials of the given degree in n variables, ascending in the order.
std::vector<Monomial> first_monomials(int n, int degree, Count count, MonomialOrder order);
Count binomial(Count n, Count k);

struct CanonicalTerm {
  Count n;
  int k;
  friend bool operator==(const CanonicalTerm&, const CanonicalTerm&) = default;
};

/// Greedy i-canonical representation l = C(n_i, i) + C(n_{i-1}, i-1) + ...
std::vector<CanonicalTerm> canonical_rep(Count l, int i);
/// l^{<i>} = sum C(n_k + 1, k + 1) over the i-canonical representation; 0^{<i>} = 0.
Count pseudo_power(Count l, int i);

struct MCheck {
  bool ok = false;
  std::optional<std::size_t> failure_index;
};

MCheck is_m_vector(const std::vector<Count>& v);

class NotAnMVector : public std::invalid_argument {
 public:
  explicit NotAnMVector(const std::string& what) : std::invalid_argument(what) {}
};

/// Order ideal of monomials, kept by degree; each degree is sorted ascending in rev-lex.
struct OrderIdeal {
  int variables = 0;
  std::vector<std::vector<Monomial>> by_degree;

  /// Degree first, then rev-lex.
  std::vector<Monomial> all() const;
  bool contains(const Monomial& m) const;
  std::vector<Count> degree_sequence() const;
  std::size_t size() const;
};

/// Degree j takes the first seq_j rev-lex monomials in seq_1 variables.
OrderIdeal compressed_ideal(const std::vector<Count>& seq);

class NotRealizable : public std::invalid_argument {
 public:
  explicit NotRealizable(const std::string& what) : std::invalid_argument(what) {}
};

/// The lex-segment ideal L with Hilbert function h (padded with zeros) in n variables.
struct LexIdeal {
  int variables = 0;
  std::vector<Count> hilbert;
  std::vector<Monomial> generators;  // minimal generators, by degree then lex
};

LexIdeal lex_ideal_from_hilbert(const std::vector<Count>& h, int n);

/// beta_{i,j}(R/L) by the Eliahou-Kervaire formula.
Count ek_graded_betti(const LexIdeal& ideal, int i, int j);

}  // namespace hball
