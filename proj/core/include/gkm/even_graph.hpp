#ifndef GKM_EVEN_GRAPH_HPP
#define GKM_EVEN_GRAPH_HPP

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "gkm/linear_form.hpp"
#include "gkm/validation.hpp"

namespace gkm {

// GKM graph of an even-dimensional action: solid vertices for fixed points,
// weighted solid multi-edges for the 2-spheres of the 1-skeleton, dotted
// edges for its RP^2 components. Empty dots are implicit in dotted-edge
// records; they carry no constraints over the rationals but still count
// toward vertex degrees.
class EvenGkmGraph {
 public:
  struct SolidEdge {
    std::size_t u;
    std::size_t v;
    Weight weight;
  };
  struct DottedEdge {
    std::size_t v;
    Weight weight;
  };

  EvenGkmGraph(std::size_t torus_rank, std::size_t gkm_degree,
               std::vector<std::string> vertex_ids, std::vector<SolidEdge> solid_edges,
               std::vector<DottedEdge> dotted_edges);

  std::size_t torus_rank() const { return torus_rank_; }
  std::size_t gkm_degree() const { return gkm_degree_; }
  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  std::size_t vertex_count() const { return vertex_ids_.size(); }
  const std::vector<SolidEdge>& solid_edges() const { return solid_edges_; }
  const std::vector<DottedEdge>& dotted_edges() const { return dotted_edges_; }

  // Throws UnknownVertex.
  std::size_t vertex_index(const std::string& id) const;
  bool has_vertex(const std::string& id) const;

  bool operator==(const EvenGkmGraph& other) const;

 private:
  std::size_t torus_rank_;
  std::size_t gkm_degree_;
  std::vector<std::string> vertex_ids_;
  std::vector<SolidEdge> solid_edges_;
  std::vector<DottedEdge> dotted_edges_;
  std::unordered_map<std::string, std::size_t> index_of_;
};

bool operator==(const EvenGkmGraph::SolidEdge& a, const EvenGkmGraph::SolidEdge& b);
bool operator==(const EvenGkmGraph::DottedEdge& a, const EvenGkmGraph::DottedEdge& b);

// Checks the GKM graph invariants: every solid vertex meets exactly
// gkm_degree edge ends, incident weights are pairwise linearly independent,
// and no solid edge is a loop. Violations are report entries, not failures.
ValidationReport validate_even(const EvenGkmGraph& g);

// Number of connected components under solid edges only (dotted edges
// connect nothing).
std::size_t solid_component_count(const EvenGkmGraph& g);

// Deterministic relabeling: vertices renamed "0".."m-1" in sorted-id order,
// edge lists sorted. Two graphs with equal canonical forms are isomorphic
// via the sorted-id correspondence.
EvenGkmGraph canonical_form(const EvenGkmGraph& g);

// Weight-preserving isomorphism test by brute force over vertex bijections;
// intended for the small fixture graphs.
bool graphs_isomorphic(const EvenGkmGraph& a, const EvenGkmGraph& b);

}  // namespace gkm

#endif  // GKM_EVEN_GRAPH_HPP
