#ifndef GKM_POLYNOMIAL_HPP
#define GKM_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "gkm/monomial.hpp"
#include "gkm/rational.hpp"

namespace gkm {

// Multivariate polynomial over the rationals in a fixed number of weight
// variables. Immutable value semantics: every term map is kept pruned of
// zero coefficients, so equality is structural.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}

  static Polynomial zero(std::size_t num_vars) { return Polynomial(num_vars); }
  static Polynomial constant(std::size_t num_vars, const Rational& c);
  // The degree-1 monomial a_{index+1}; index is zero-based.
  static Polynomial variable(std::size_t num_vars, std::size_t index);
  static Polynomial term(const Monomial& m, const Rational& c);

  std::size_t num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;

  // Adds c * m, pruning if the coefficient cancels.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& scalar) const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);

  bool operator==(const Polynomial& other) const {
    return num_vars_ == other.num_vars_ && terms_ == other.terms_;
  }
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  // Largest exponent degree among terms; -1 for the zero polynomial.
  int total_degree() const;
  // True iff all terms share one exponent degree (the zero polynomial is
  // homogeneous of every degree).
  bool is_homogeneous() const;
  // Splits into homogeneous layers keyed by exponent degree.
  std::map<int, Polynomial> homogeneous_parts() const;

  Rational evaluate(const std::vector<Rational>& point) const;

  // Human-readable form with variables a1..an, graded-lex term order.
  std::string to_string() const;

 private:
  void check_same_vars(const Polynomial& other) const;

  std::size_t num_vars_;
  TermMap terms_;
};

inline Polynomial operator*(const Rational& scalar, const Polynomial& p) { return p * scalar; }

}  // namespace gkm

#endif  // GKM_POLYNOMIAL_HPP
