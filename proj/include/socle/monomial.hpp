#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "socle/macaulay.hpp"
#include "socle/vectors.hpp"

namespace socle {

/// Monomial in x_1..x_r as an exponent vector; the degree is cached.
class Monomial {
 public:
  explicit Monomial(std::vector<int> exponents);

  int vars() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  const std::vector<int>& exponents() const { return exps_; }
  int exponent(int var) const;  // var is 1-based

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
  int degree_;
};

/// Degree-lexicographic comparison: -1, 0 or +1 as a < b, a == b, a > b.
/// Higher degree wins; within a degree the first non-zero exponent
/// difference decides.
int deglex_cmp(const Monomial& a, const Monomial& b);

struct DeglexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return deglex_cmp(a, b) > 0; }
};

/// Largest variable index (1-based) dividing t; rejects degree 0.
int m_of(const Monomial& t);

/// All monomials of the given degree, in descending deg-lex order.
std::vector<Monomial> monomials_of_degree(int r, int d);

/// Neighbours within the fixed-degree descending list.
std::optional<Monomial> deglex_next(const Monomial& m);  // next smaller
std::optional<Monomial> deglex_prev(const Monomial& m);  // next larger

Monomial multiply_var(const Monomial& m, int var);
std::optional<Monomial> divide_var(const Monomial& m, int var);

/// {m * x_k} over all monomials and variables, sorted descending, deduplicated.
std::vector<Monomial> multiply_by_variables(const std::vector<Monomial>& piece, int r);

/// Degree-(d-1) divisors of a set of degree-d monomials, sorted descending.
std::vector<Monomial> first_divisors(const std::vector<Monomial>& piece, int r);

/// Parses `x1^2*x3` and, for r <= 3, the aliases `x^2 y z`.
Monomial parse_monomial(const std::string& text, int r);
std::string format_monomial(const Monomial& m);

/// Degree-truncated monomial ideal: dense degree pieces I_0..I_bound,
/// each sorted descending in deg-lex.
class MonomialIdeal {
 public:
  MonomialIdeal(int r, int bound);  // zero ideal

  static MonomialIdeal from_pieces(int r, int bound,
                                   const std::map<int, std::vector<Monomial>>& pieces);

  int vars() const { return r_; }
  int bound() const { return bound_; }
  const std::vector<Monomial>& piece(int d) const;
  void set_piece(int d, std::vector<Monomial> monomials);
  bool contains(const Monomial& m) const;

  /// R_1 I_d is contained in I_{d+1} for every stored degree; throws otherwise.
  void check_ideal_property() const;

  /// I_d \ R_1 I_{d-1}.
  std::vector<Monomial> generators(int d) const;
  std::map<int, std::vector<Monomial>> minimal_generators() const;

  /// Every stored piece is an initial segment of its degree in deg-lex order.
  bool is_lex_segment() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int r_;
  int bound_;
  std::vector<std::vector<Monomial>> pieces_;
};

/// Lex-segment ideal with Hilbert function h, stored through `bound` >= e + 1.
MonomialIdeal lex_ideal_for_h(const HVector& h, int bound);

/// h_d = dim R_d - |I_d| for d <= top, trailing zeros trimmed.
HVector hilbert_function(const MonomialIdeal& ideal, int top);

/// Socle entries s_1..s_top of R/I; requires pieces through top + 1 and an
/// artinian truncation (I_{top+1} = R_{top+1}).
SocleVector socle_vector(const MonomialIdeal& ideal, int top);
SocleVector socle_vector(const MonomialIdeal& ideal);  // top located automatically

/// All divisors, by degree, of a finite monomial generating set (degree 0
/// included), i.e. the graded pieces of the monomial module they span.
std::map<int, std::vector<Monomial>> divisor_closure(
    const std::map<int, std::vector<Monomial>>& generators);

/// Per-degree counts of a divisor closure, as an h-vector.
HVector closure_h_vector(const std::map<int, std::vector<Monomial>>& closure);

/// Minimal-generator counts of the monomial module with the given closure.
SocleVector closure_socle_vector(const std::map<int, std::vector<Monomial>>& closure);

/// Monomial generators, by degree, of the module spanned per degree by the
/// latest possible monomials: working top-down, each degree contributes
/// `counts[degree]` new generators immediately before the divisors of the
/// degree above.  This realizes min_h_for_socle when counts is a socle-vector.
std::map<int, std::vector<Monomial>> lex_inverse_system_generators(
    int r, const std::map<int, long>& counts);

}  // namespace socle
