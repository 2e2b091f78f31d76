#ifndef GKM_AUTOMORPHISM_HPP
#define GKM_AUTOMORPHISM_HPP

#include <map>
#include <string>
#include <vector>

#include "gkm/even_graph.hpp"

namespace gkm {

// Finite group of weight-preserving automorphisms of an even GKM graph,
// playing the role of a deck transformation group. Elements store the
// vertex permutation together with the induced permutations of solid and
// dotted edges; the set is closed under composition and inverse and
// contains the identity.
class GraphAutomorphismGroup {
 public:
  struct Element {
    std::vector<std::size_t> vertex_map;
    std::vector<std::size_t> solid_edge_map;
    std::vector<std::size_t> dotted_edge_map;

    bool operator==(const Element& other) const { return vertex_map == other.vertex_map; }
  };

  static GraphAutomorphismGroup trivial(const EvenGkmGraph& g);

  // Builds the group generated by the given vertex permutations (closing
  // under composition). Edge permutations are derived by matching endpoint
  // pairs and weights; throws NotAutomorphism when a generator does not
  // preserve the graph or when the edge image is ambiguous.
  static GraphAutomorphismGroup generate(const EvenGkmGraph& g,
                                         const std::vector<std::vector<std::size_t>>& vertex_maps);

  // Same, with generators given as id -> id maps.
  static GraphAutomorphismGroup generate_from_ids(
      const EvenGkmGraph& g, const std::vector<std::map<std::string, std::string>>& maps);

  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

 private:
  std::vector<Element> elements_;
};

// Quotient GKM graph: vertices are vertex orbits; free solid-edge orbits
// stay solid, non-free ones (some element fixes the edge while swapping its
// endpoints) become dotted edges, and dotted-edge orbits stay dotted.
EvenGkmGraph quotient_graph(const EvenGkmGraph& g, const GraphAutomorphismGroup& gamma);

}  // namespace gkm

#endif  // GKM_AUTOMORPHISM_HPP
