#ifndef GKM_SOLVER_HPP
#define GKM_SOLVER_HPP

#include <vector>

#include "gkm/automorphism.hpp"
#include "gkm/classes.hpp"
#include "gkm/linalg.hpp"
#include "gkm/series.hpp"

namespace gkm {

// Canonical basis of one graded layer of the solution space; classes are
// linearly independent and span the layer, normalized by reduced row
// echelon form of their coefficient vectors.
struct EvenBasis {
  int degree = 0;
  std::vector<EvenClass> classes;
  std::size_t dimension() const { return classes.size(); }
};

struct OddBasis {
  int degree = 0;
  std::vector<OddClass> classes;
  std::size_t dimension() const { return classes.size(); }
};

// Solves the congruence system in one cohomological degree. Even graphs
// have empty odd layers (the generators sit in degree 2); odd graphs carry
// P data in even layers and Q data in odd layers.
// Throws InvalidGraph when the graph fails validation.
EvenBasis degree_component_even(const EvenGkmGraph& g, int degree);
OddBasis degree_component_odd(const OddGkmGraph& g, int degree);

// Dimensions for degrees 0..max_degree. Degrees are independent pure
// computations; with parallel set they are evaluated concurrently and
// merged by index, so the output does not depend on scheduling.
PoincareSeries poincare_series(const EvenGkmGraph& g, int max_degree, bool parallel = false);
PoincareSeries poincare_series(const OddGkmGraph& g, int max_degree, bool parallel = false);

struct EvenGenerator {
  int degree = 0;
  EvenClass cls;
};
struct OddGenerator {
  int degree = 0;
  OddClass cls;
};

// Degree-by-degree minimal module generators up to max_degree: in each
// degree, a basis of the solution layer modulo products of monomials with
// the generators already found. Deterministic for the fixed monomial order.
std::vector<EvenGenerator> module_generators(const EvenGkmGraph& g, int max_degree);
std::vector<OddGenerator> module_generators(const OddGkmGraph& g, int max_degree);

// Dimension of the Gamma-fixed subspace of the degree-d layer, computed as
// the rank of the averaging operator in basis coordinates.
// Throws NotAutomorphism if the group does not act on g.
long long invariant_dimension(const EvenGkmGraph& g, const GraphAutomorphismGroup& gamma,
                              int degree);

// Coefficient coordinates of the degree-d homogeneous layer of a class,
// with respect to the vertex-by-monomial column layout the solver uses.
QVector even_class_coordinates(const EvenGkmGraph& g, const EvenClass& c, int degree);
QVector odd_class_coordinates(const OddGkmGraph& g, const OddClass& c, int degree);

}  // namespace gkm

#endif  // GKM_SOLVER_HPP
