#ifndef GKM_CATALOG_HPP
#define GKM_CATALOG_HPP

#include <string>
#include <variant>
#include <vector>

#include "gkm/even_graph.hpp"
#include "gkm/odd_graph.hpp"

namespace gkm {

using AnyGraph = std::variant<EvenGkmGraph, OddGkmGraph>;

// GKM graph of the oriented Grassmannian G~_2(R^5) under the canonical
// T^2-action: four fixed points, solid edges weighted [a2-a1] and [a2+a1],
// one dotted edge per vertex.
EvenGkmGraph grassmann_g2r5_tilde();
// GKM graph of the real Grassmannian G_2(R^5), the Z/2 quotient of the above.
EvenGkmGraph grassmann_g2r5();
// GKM graph of G_2(R^4): two vertices joined by edges [a2-a1] and [a2+a1].
EvenGkmGraph grassmann_g2r4();
// 1-skeleton graph shared by G_3(R^6) and G~_3(R^6): two fixed circles, six
// orientable boxes weighted [a1], [a2], [a2-a1], [a2+a1].
OddGkmGraph grassmann_g3r6();
// GKM graph of the full flag manifold Fl(3): vertices S_3, nine edges
// weighted [a_j - a_i].
EvenGkmGraph flag_fl3();
// GKM graph of CP^2 under the T^3-action: a triangle.
EvenGkmGraph projective_cp2();
// 1-skeleton graph of the 7-dimensional cohomogeneity-one manifold over
// CP^2: three fixed circles, six orientable boxes.
OddGkmGraph cohomogeneity_ng7();

struct BuiltinFamily {
  std::string name;
  bool takes_n;
  std::string description;
};

const std::vector<BuiltinFamily>& builtin_families();

// Builds a named family; n is ignored by the fixed fixtures.
// Throws InvalidInput for an unknown name or a bad n.
AnyGraph build_builtin(const std::string& family, std::size_t n);

}  // namespace gkm

#endif  // GKM_CATALOG_HPP
