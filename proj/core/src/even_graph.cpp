#include "gkm/even_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "gkm/errors.hpp"

namespace gkm {

EvenGkmGraph::EvenGkmGraph(std::size_t torus_rank, std::size_t gkm_degree,
                           std::vector<std::string> vertex_ids,
                           std::vector<SolidEdge> solid_edges,
                           std::vector<DottedEdge> dotted_edges)
    : torus_rank_(torus_rank),
      gkm_degree_(gkm_degree),
      vertex_ids_(std::move(vertex_ids)),
      solid_edges_(std::move(solid_edges)),
      dotted_edges_(std::move(dotted_edges)) {
  for (std::size_t i = 0; i < vertex_ids_.size(); ++i) {
    auto [it, inserted] = index_of_.emplace(vertex_ids_[i], i);
    if (!inserted) throw InvalidInput("duplicate vertex id: " + vertex_ids_[i]);
  }
  for (const auto& e : solid_edges_) {
    if (e.u >= vertex_ids_.size() || e.v >= vertex_ids_.size()) {
      throw InvalidInput("solid edge references a vertex out of range");
    }
    if (e.weight.num_vars() != torus_rank_) {
      throw InvalidInput("solid edge weight has wrong rank");
    }
  }
  for (const auto& e : dotted_edges_) {
    if (e.v >= vertex_ids_.size()) {
      throw InvalidInput("dotted edge references a vertex out of range");
    }
    if (e.weight.num_vars() != torus_rank_) {
      throw InvalidInput("dotted edge weight has wrong rank");
    }
  }
}

std::size_t EvenGkmGraph::vertex_index(const std::string& id) const {
  auto it = index_of_.find(id);
  if (it == index_of_.end()) throw UnknownVertex("unknown vertex id: " + id);
  return it->second;
}

bool EvenGkmGraph::has_vertex(const std::string& id) const {
  return index_of_.count(id) > 0;
}

bool operator==(const EvenGkmGraph::SolidEdge& a, const EvenGkmGraph::SolidEdge& b) {
  return a.u == b.u && a.v == b.v && a.weight == b.weight;
}

bool operator==(const EvenGkmGraph::DottedEdge& a, const EvenGkmGraph::DottedEdge& b) {
  return a.v == b.v && a.weight == b.weight;
}

bool EvenGkmGraph::operator==(const EvenGkmGraph& other) const {
  return torus_rank_ == other.torus_rank_ && gkm_degree_ == other.gkm_degree_ &&
         vertex_ids_ == other.vertex_ids_ && solid_edges_ == other.solid_edges_ &&
         dotted_edges_ == other.dotted_edges_;
}

ValidationReport validate_even(const EvenGkmGraph& g) {
  ValidationReport report;

  std::vector<std::vector<const Weight*>> incident(g.vertex_count());
  for (std::size_t i = 0; i < g.solid_edges().size(); ++i) {
    const auto& e = g.solid_edges()[i];
    if (e.u == e.v) {
      std::ostringstream msg;
      msg << "solid edge " << i << " at vertex " << g.vertex_ids()[e.u] << " is a loop";
      report.add("loop-edge", msg.str());
      continue;
    }
    incident[e.u].push_back(&e.weight);
    incident[e.v].push_back(&e.weight);
  }
  for (const auto& e : g.dotted_edges()) {
    incident[e.v].push_back(&e.weight);
  }

  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (incident[v].size() != g.gkm_degree()) {
      std::ostringstream msg;
      msg << "vertex " << g.vertex_ids()[v] << " has degree " << incident[v].size()
          << ", expected " << g.gkm_degree();
      report.add("degree-mismatch", msg.str());
    }
    // Canonical weights are proportional iff equal.
    for (std::size_t i = 0; i < incident[v].size(); ++i) {
      for (std::size_t j = i + 1; j < incident[v].size(); ++j) {
        if (*incident[v][i] == *incident[v][j]) {
          std::ostringstream msg;
          msg << "vertex " << g.vertex_ids()[v] << " has linearly dependent incident weights "
              << incident[v][i]->to_string();
          report.add("dependent-weights", msg.str());
        }
      }
    }
  }
  return report;
}

std::size_t solid_component_count(const EvenGkmGraph& g) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.solid_edges()) parent[find(e.u)] = find(e.v);
  std::set<std::size_t> roots;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) roots.insert(find(v));
  return roots.size();
}

EvenGkmGraph canonical_form(const EvenGkmGraph& g) {
  std::vector<std::size_t> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return g.vertex_ids()[a] < g.vertex_ids()[b];
  });
  std::vector<std::size_t> new_index(g.vertex_count());
  for (std::size_t i = 0; i < order.size(); ++i) new_index[order[i]] = i;

  std::vector<std::string> ids(g.vertex_count());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = std::to_string(i);

  std::vector<EvenGkmGraph::SolidEdge> solid;
  for (const auto& e : g.solid_edges()) {
    std::size_t u = new_index[e.u];
    std::size_t v = new_index[e.v];
    if (u > v) std::swap(u, v);
    solid.push_back({u, v, e.weight});
  }
  std::sort(solid.begin(), solid.end(), [](const auto& a, const auto& b) {
    return std::tie(a.u, a.v, a.weight.coeffs()) < std::tie(b.u, b.v, b.weight.coeffs());
  });

  std::vector<EvenGkmGraph::DottedEdge> dotted;
  for (const auto& e : g.dotted_edges()) dotted.push_back({new_index[e.v], e.weight});
  std::sort(dotted.begin(), dotted.end(), [](const auto& a, const auto& b) {
    return std::tie(a.v, a.weight.coeffs()) < std::tie(b.v, b.weight.coeffs());
  });

  return EvenGkmGraph(g.torus_rank(), g.gkm_degree(), std::move(ids), std::move(solid),
                      std::move(dotted));
}

namespace {

bool isomorphic_under(const EvenGkmGraph& a, const EvenGkmGraph& b,
                      const std::vector<std::size_t>& vertex_map) {
  auto edge_key = [](std::size_t u, std::size_t v, const Weight& w) {
    if (u > v) std::swap(u, v);
    return std::tuple(u, v, w.coeffs());
  };
  std::multiset<std::tuple<std::size_t, std::size_t, std::vector<std::int64_t>>> ea, eb;
  for (const auto& e : a.solid_edges()) ea.insert(edge_key(vertex_map[e.u], vertex_map[e.v], e.weight));
  for (const auto& e : b.solid_edges()) eb.insert(edge_key(e.u, e.v, e.weight));
  if (ea != eb) return false;
  std::multiset<std::pair<std::size_t, std::vector<std::int64_t>>> da, db;
  for (const auto& e : a.dotted_edges()) da.insert({vertex_map[e.v], e.weight.coeffs()});
  for (const auto& e : b.dotted_edges()) db.insert({e.v, e.weight.coeffs()});
  return da == db;
}

}  // namespace

bool graphs_isomorphic(const EvenGkmGraph& a, const EvenGkmGraph& b) {
  if (a.torus_rank() != b.torus_rank() || a.gkm_degree() != b.gkm_degree() ||
      a.vertex_count() != b.vertex_count() ||
      a.solid_edges().size() != b.solid_edges().size() ||
      a.dotted_edges().size() != b.dotted_edges().size()) {
    return false;
  }
  std::vector<std::size_t> perm(a.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (isomorphic_under(a, b, perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace gkm
