#ifndef GKM_MONOMIAL_HPP
#define GKM_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <vector>

namespace gkm {

// A monomial in n weight variables, stored as its exponent vector.
// Each variable carries cohomological degree 2, so the cohomological
// degree of a monomial is twice its exponent sum.
struct Monomial {
  std::vector<int> exponents;

  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : exponents(std::move(exps)) {}
  static Monomial one(std::size_t num_vars) { return Monomial(std::vector<int>(num_vars, 0)); }

  std::size_t num_vars() const { return exponents.size(); }

  int degree() const {
    int sum = 0;
    for (int e : exponents) sum += e;
    return sum;
  }

  int cohomological_degree() const { return 2 * degree(); }

  Monomial operator*(const Monomial& other) const;

  bool operator==(const Monomial& other) const { return exponents == other.exponents; }
  bool operator!=(const Monomial& other) const { return !(*this == other); }
};

// Global term order: graded, then lexicographic with a1 dominant, so within
// one degree a1^2 precedes a1*a2 precedes a2^2.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// All monomials of the given exponent degree, in MonomialOrder.
// Count is C(num_vars + degree - 1, degree).
std::vector<Monomial> monomial_basis(std::size_t num_vars, int degree);

}  // namespace gkm

#endif  // GKM_MONOMIAL_HPP
