#include "gkm/odd_graph.hpp"

#include <numeric>
#include <set>
#include <sstream>

#include "gkm/errors.hpp"

namespace gkm {

OddGkmGraph::OddGkmGraph(std::size_t torus_rank, std::size_t gkm_degree,
                         std::vector<std::string> circle_ids, std::vector<Box> boxes,
                         std::vector<Incidence> incidences)
    : torus_rank_(torus_rank),
      gkm_degree_(gkm_degree),
      circle_ids_(std::move(circle_ids)),
      boxes_(std::move(boxes)),
      incidences_(std::move(incidences)) {
  for (std::size_t i = 0; i < circle_ids_.size(); ++i) {
    auto [it, inserted] = circle_index_.emplace(circle_ids_[i], i);
    if (!inserted) throw InvalidInput("duplicate circle id: " + circle_ids_[i]);
  }
  for (std::size_t i = 0; i < boxes_.size(); ++i) {
    auto [it, inserted] = box_index_.emplace(boxes_[i].id, i);
    if (!inserted) throw InvalidInput("duplicate box id: " + boxes_[i].id);
    if (boxes_[i].weight.num_vars() != torus_rank_) {
      throw InvalidInput("box weight has wrong rank: " + boxes_[i].id);
    }
  }
  for (const auto& inc : incidences_) {
    if (inc.box >= boxes_.size() || inc.circle >= circle_ids_.size()) {
      throw InvalidInput("incidence references an unknown box or circle");
    }
    if (inc.sign && *inc.sign != 1 && *inc.sign != -1) {
      throw InvalidInput("incidence sign must be +1 or -1");
    }
  }
}

std::size_t OddGkmGraph::circle_index(const std::string& id) const {
  auto it = circle_index_.find(id);
  if (it == circle_index_.end()) throw UnknownVertex("unknown circle id: " + id);
  return it->second;
}

std::size_t OddGkmGraph::box_index(const std::string& id) const {
  auto it = box_index_.find(id);
  if (it == box_index_.end()) throw UnknownVertex("unknown box id: " + id);
  return it->second;
}

std::vector<const OddGkmGraph::Incidence*> OddGkmGraph::box_incidences(std::size_t box) const {
  std::vector<const Incidence*> out;
  for (const auto& inc : incidences_) {
    if (inc.box == box) out.push_back(&inc);
  }
  return out;
}

bool OddGkmGraph::operator==(const OddGkmGraph& other) const {
  auto box_eq = [](const Box& a, const Box& b) {
    return a.id == b.id && a.weight == b.weight && a.orientable == b.orientable;
  };
  auto inc_eq = [](const Incidence& a, const Incidence& b) {
    return a.box == b.box && a.circle == b.circle && a.sign == b.sign;
  };
  if (torus_rank_ != other.torus_rank_ || gkm_degree_ != other.gkm_degree_ ||
      circle_ids_ != other.circle_ids_ || boxes_.size() != other.boxes_.size() ||
      incidences_.size() != other.incidences_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < boxes_.size(); ++i) {
    if (!box_eq(boxes_[i], other.boxes_[i])) return false;
  }
  for (std::size_t i = 0; i < incidences_.size(); ++i) {
    if (!inc_eq(incidences_[i], other.incidences_[i])) return false;
  }
  return true;
}

ValidationReport validate_odd(const OddGkmGraph& g) {
  ValidationReport report;

  std::vector<std::vector<std::size_t>> circle_boxes(g.circle_count());
  std::vector<std::size_t> box_degree(g.boxes().size(), 0);
  std::set<std::pair<std::size_t, std::size_t>> seen_pairs;

  for (const auto& inc : g.incidences()) {
    circle_boxes[inc.circle].push_back(inc.box);
    box_degree[inc.box] += 1;
    if (!seen_pairs.insert({inc.box, inc.circle}).second) {
      std::ostringstream msg;
      msg << "box " << g.boxes()[inc.box].id << " meets circle " << g.circle_ids()[inc.circle]
          << " more than once";
      report.add("repeated-incidence", msg.str());
    }
    const bool orientable = g.boxes()[inc.box].orientable;
    if (orientable && !inc.sign) {
      std::ostringstream msg;
      msg << "orientable box " << g.boxes()[inc.box].id << " has a signless incidence at circle "
          << g.circle_ids()[inc.circle];
      report.add("missing-sign", msg.str());
    }
    if (!orientable && inc.sign) {
      std::ostringstream msg;
      msg << "non-orientable box " << g.boxes()[inc.box].id << " carries a sign at circle "
          << g.circle_ids()[inc.circle];
      report.add("unexpected-sign", msg.str());
    }
  }

  for (std::size_t c = 0; c < g.circle_count(); ++c) {
    if (circle_boxes[c].size() != g.gkm_degree()) {
      std::ostringstream msg;
      msg << "circle " << g.circle_ids()[c] << " has degree " << circle_boxes[c].size()
          << ", expected " << g.gkm_degree();
      report.add("degree-mismatch", msg.str());
    }
    for (std::size_t i = 0; i < circle_boxes[c].size(); ++i) {
      for (std::size_t j = i + 1; j < circle_boxes[c].size(); ++j) {
        const auto& wi = g.boxes()[circle_boxes[c][i]].weight;
        const auto& wj = g.boxes()[circle_boxes[c][j]].weight;
        if (circle_boxes[c][i] != circle_boxes[c][j] && wi == wj) {
          std::ostringstream msg;
          msg << "circle " << g.circle_ids()[c] << " has linearly dependent incident weights "
              << wi.to_string();
          report.add("dependent-weights", msg.str());
        }
      }
    }
  }

  for (std::size_t b = 0; b < g.boxes().size(); ++b) {
    if (box_degree[b] == 0) {
      report.add("isolated-box", "box " + g.boxes()[b].id + " has no incidences");
    }
  }
  return report;
}

std::size_t skeleton_component_count(const OddGkmGraph& g) {
  // Union over the bipartite incidence graph; boxes are offset past circles.
  const std::size_t total = g.circle_count() + g.boxes().size();
  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& inc : g.incidences()) {
    parent[find(inc.circle)] = find(g.circle_count() + inc.box);
  }
  std::set<std::size_t> roots;
  for (std::size_t c = 0; c < g.circle_count(); ++c) roots.insert(find(c));
  return roots.size();
}

}  // namespace gkm
