#ifndef GKM_CLASSES_HPP
#define GKM_CLASSES_HPP

#include <vector>

#include "gkm/even_graph.hpp"
#include "gkm/odd_graph.hpp"
#include "gkm/polynomial.hpp"

namespace gkm {

// Equivariant class on an even graph: one polynomial per solid vertex,
// index-aligned with the graph's vertex list.
struct EvenClass {
  std::vector<Polynomial> assignment;

  bool operator==(const EvenClass& other) const { return assignment == other.assignment; }
};

// Equivariant class on an odd graph: P + Q theta per fixed circle, with
// theta the degree-1 circle generator (theta^2 = 0).
struct OddClass {
  std::vector<Polynomial> p;
  std::vector<Polynomial> q;

  bool operator==(const OddClass& other) const { return p == other.p && q == other.q; }
};

// True iff every congruence of the graph holds for the assignment.
// Throws VertexMismatch when the class does not cover the vertices.
bool membership(const EvenGkmGraph& g, const EvenClass& c);
bool membership(const OddGkmGraph& g, const OddClass& c);

// Vertexwise product; on odd classes (P,Q)*(P',Q') = (PP', PQ' + P'Q).
EvenClass class_mul(const EvenClass& a, const EvenClass& b);
OddClass class_mul(const OddClass& a, const OddClass& b);

EvenClass class_add(const EvenClass& a, const EvenClass& b);
OddClass class_add(const OddClass& a, const OddClass& b);

// Module action of the polynomial ring.
EvenClass scalar_mul(const Polynomial& r, const EvenClass& c);
OddClass scalar_mul(const Polynomial& r, const OddClass& c);

EvenClass zero_even_class(const EvenGkmGraph& g);
OddClass zero_odd_class(const OddGkmGraph& g);
EvenClass one_even_class(const EvenGkmGraph& g);
OddClass one_odd_class(const OddGkmGraph& g);

}  // namespace gkm

#endif  // GKM_CLASSES_HPP
