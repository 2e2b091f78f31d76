#ifndef GKM_BUILDERS_HPP
#define GKM_BUILDERS_HPP

#include "gkm/even_graph.hpp"
#include "gkm/odd_graph.hpp"

namespace gkm {

// S^{2n}: two fixed points joined by n parallel solid edges weighted by the
// standard basis covectors.
EvenGkmGraph build_even_sphere(std::size_t n);

// RP^{2n}: one fixed point with n dotted edges.
EvenGkmGraph build_even_rp(std::size_t n);

// S^{2n+1}: one fixed circle meeting n orientable boxes, one incidence each
// with sign +1. Lens spaces L_m(1, l_1..l_n) have the same skeleton graph,
// so this doubles as their builder.
OddGkmGraph build_odd_sphere(std::size_t n);

// M x S^1 for an even GKM graph of M: vertices become circles, each solid
// edge becomes an orientable box with signs +1/-1 at its two ends, each
// dotted edge a non-orientable box with a single incidence.
// Throws InvalidInput when the input graph fails validation.
OddGkmGraph product_with_circle(const EvenGkmGraph& g);

}  // namespace gkm

#endif  // GKM_BUILDERS_HPP
