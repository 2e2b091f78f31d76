#ifndef GKM_ODD_GRAPH_HPP
#define GKM_ODD_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gkm/linear_form.hpp"
#include "gkm/validation.hpp"

namespace gkm {

// 1-skeleton graph of an odd-dimensional action: circle vertices for the
// fixed circles, box vertices for the 3-dimensional components of the
// corank-1 fixed sets. A box carries a weight and an orientability flag;
// incidences of orientable boxes carry the sign comparing the circle's
// prechosen orientation with the one the component induces.
class OddGkmGraph {
 public:
  struct Box {
    std::string id;
    Weight weight;
    bool orientable;
  };
  struct Incidence {
    std::size_t box;
    std::size_t circle;
    std::optional<int> sign;  // +1 or -1; present iff the box is orientable
  };

  OddGkmGraph(std::size_t torus_rank, std::size_t gkm_degree,
              std::vector<std::string> circle_ids, std::vector<Box> boxes,
              std::vector<Incidence> incidences);

  std::size_t torus_rank() const { return torus_rank_; }
  // Edges per circle; equals half of (dim M - 1) for a geometric skeleton.
  std::size_t gkm_degree() const { return gkm_degree_; }
  const std::vector<std::string>& circle_ids() const { return circle_ids_; }
  std::size_t circle_count() const { return circle_ids_.size(); }
  const std::vector<Box>& boxes() const { return boxes_; }
  const std::vector<Incidence>& incidences() const { return incidences_; }

  std::size_t circle_index(const std::string& id) const;
  std::size_t box_index(const std::string& id) const;

  // Incidence list of one box, in stored order.
  std::vector<const Incidence*> box_incidences(std::size_t box) const;

  bool operator==(const OddGkmGraph& other) const;

 private:
  std::size_t torus_rank_;
  std::size_t gkm_degree_;
  std::vector<std::string> circle_ids_;
  std::vector<Box> boxes_;
  std::vector<Incidence> incidences_;
  std::unordered_map<std::string, std::size_t> circle_index_;
  std::unordered_map<std::string, std::size_t> box_index_;
};

// Checks: every circle meets gkm_degree distinct boxes with pairwise
// independent weights, every box has at least one incidence and at most one
// per circle, and signs are present exactly on orientable boxes.
ValidationReport validate_odd(const OddGkmGraph& g);

// Number of connected components of the circle/box incidence graph.
std::size_t skeleton_component_count(const OddGkmGraph& g);

}  // namespace gkm

#endif  // GKM_ODD_GRAPH_HPP
