#include "gkm/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "gkm/errors.hpp"

namespace gkm {

namespace {

// Derives the edge permutations induced by a vertex permutation, verifying
// that every edge maps onto an edge with the same weight.
GraphAutomorphismGroup::Element complete_element(const EvenGkmGraph& g,
                                                 std::vector<std::size_t> vertex_map) {
  const std::size_t nv = g.vertex_count();
  if (vertex_map.size() != nv) {
    throw NotAutomorphism("vertex map has wrong size");
  }
  std::vector<bool> hit(nv, false);
  for (std::size_t image : vertex_map) {
    if (image >= nv || hit[image]) throw NotAutomorphism("vertex map is not a permutation");
    hit[image] = true;
  }

  GraphAutomorphismGroup::Element element;
  element.vertex_map = std::move(vertex_map);

  const auto& solid = g.solid_edges();
  element.solid_edge_map.resize(solid.size());
  std::vector<bool> used(solid.size(), false);
  for (std::size_t i = 0; i < solid.size(); ++i) {
    std::size_t u = element.vertex_map[solid[i].u];
    std::size_t v = element.vertex_map[solid[i].v];
    if (u > v) std::swap(u, v);
    std::size_t found = solid.size();
    for (std::size_t j = 0; j < solid.size(); ++j) {
      if (used[j]) continue;
      std::size_t a = solid[j].u;
      std::size_t b = solid[j].v;
      if (a > b) std::swap(a, b);
      if (a == u && b == v && solid[j].weight == solid[i].weight) {
        if (found != solid.size()) {
          throw NotAutomorphism("ambiguous solid edge image (parallel edges of equal weight)");
        }
        found = j;
      }
    }
    if (found == solid.size()) {
      std::ostringstream msg;
      msg << "solid edge " << i << " has no image with weight " << solid[i].weight.to_string();
      throw NotAutomorphism(msg.str());
    }
    used[found] = true;
    element.solid_edge_map[i] = found;
  }

  const auto& dotted = g.dotted_edges();
  element.dotted_edge_map.resize(dotted.size());
  std::vector<bool> dused(dotted.size(), false);
  for (std::size_t i = 0; i < dotted.size(); ++i) {
    const std::size_t v = element.vertex_map[dotted[i].v];
    std::size_t found = dotted.size();
    for (std::size_t j = 0; j < dotted.size(); ++j) {
      if (dused[j]) continue;
      if (dotted[j].v == v && dotted[j].weight == dotted[i].weight) {
        found = j;
        break;
      }
    }
    if (found == dotted.size()) {
      throw NotAutomorphism("dotted edge has no image under the vertex map");
    }
    dused[found] = true;
    element.dotted_edge_map[i] = found;
  }
  return element;
}

std::vector<std::size_t> compose(const std::vector<std::size_t>& f,
                                 const std::vector<std::size_t>& g) {
  // (f after g)(x) = f[g[x]]
  std::vector<std::size_t> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[g[i]];
  return out;
}

}  // namespace

GraphAutomorphismGroup GraphAutomorphismGroup::trivial(const EvenGkmGraph& g) {
  std::vector<std::size_t> identity(g.vertex_count());
  std::iota(identity.begin(), identity.end(), 0);
  return generate(g, {identity});
}

GraphAutomorphismGroup GraphAutomorphismGroup::generate(
    const EvenGkmGraph& g, const std::vector<std::vector<std::size_t>>& vertex_maps) {
  std::vector<std::size_t> identity(g.vertex_count());
  std::iota(identity.begin(), identity.end(), 0);

  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> worklist;
  auto push = [&](std::vector<std::size_t> map) {
    if (seen.insert(map).second) worklist.push_back(std::move(map));
  };
  push(identity);
  for (const auto& map : vertex_maps) push(map);

  for (std::size_t i = 0; i < worklist.size(); ++i) {
    for (const auto& generator : vertex_maps) {
      push(compose(generator, worklist[i]));
    }
    if (worklist.size() > 100000) {
      throw GroupTooLarge("automorphism group closure exceeds 100000 elements");
    }
  }

  GraphAutomorphismGroup group;
  for (const auto& map : worklist) {
    group.elements_.push_back(complete_element(g, map));
  }
  return group;
}

GraphAutomorphismGroup GraphAutomorphismGroup::generate_from_ids(
    const EvenGkmGraph& g, const std::vector<std::map<std::string, std::string>>& maps) {
  std::vector<std::vector<std::size_t>> vertex_maps;
  for (const auto& map : maps) {
    std::vector<std::size_t> vm(g.vertex_count());
    std::iota(vm.begin(), vm.end(), 0);
    for (const auto& [from, to] : map) {
      vm[g.vertex_index(from)] = g.vertex_index(to);
    }
    vertex_maps.push_back(std::move(vm));
  }
  return generate(g, vertex_maps);
}

EvenGkmGraph quotient_graph(const EvenGkmGraph& g, const GraphAutomorphismGroup& gamma) {
  if (gamma.elements().empty()) throw NotAutomorphism("empty automorphism group");
  for (const auto& element : gamma.elements()) {
    if (element.vertex_map.size() != g.vertex_count()) {
      throw NotAutomorphism("group does not act on this graph");
    }
  }

  const std::size_t nv = g.vertex_count();
  // Vertex orbits, represented by their smallest member in input order.
  std::vector<std::size_t> vertex_rep(nv);
  std::iota(vertex_rep.begin(), vertex_rep.end(), 0);
  for (const auto& element : gamma.elements()) {
    for (std::size_t v = 0; v < nv; ++v) {
      std::size_t image = element.vertex_map[v];
      std::size_t a = std::min(vertex_rep[v], vertex_rep[image]);
      // Propagate the smaller representative through both classes.
      std::size_t rv = vertex_rep[v], ri = vertex_rep[image];
      for (std::size_t x = 0; x < nv; ++x) {
        if (vertex_rep[x] == rv || vertex_rep[x] == ri) vertex_rep[x] = a;
      }
    }
  }
  std::vector<std::size_t> orbit_index(nv);
  std::vector<std::string> orbit_ids;
  {
    std::map<std::size_t, std::size_t> rep_to_index;
    for (std::size_t v = 0; v < nv; ++v) {
      auto [it, inserted] = rep_to_index.emplace(vertex_rep[v], orbit_ids.size());
      if (inserted) orbit_ids.push_back(g.vertex_ids()[vertex_rep[v]]);
      orbit_index[v] = it->second;
    }
  }

  // Solid edge orbits.
  const auto& solid = g.solid_edges();
  std::vector<std::size_t> edge_rep(solid.size());
  std::iota(edge_rep.begin(), edge_rep.end(), 0);
  std::vector<bool> orbit_nonfree(solid.size(), false);
  for (const auto& element : gamma.elements()) {
    for (std::size_t e = 0; e < solid.size(); ++e) {
      const std::size_t image = element.solid_edge_map[e];
      std::size_t a = std::min(edge_rep[e], edge_rep[image]);
      std::size_t re = edge_rep[e], ri = edge_rep[image];
      for (std::size_t x = 0; x < solid.size(); ++x) {
        if (edge_rep[x] == re || edge_rep[x] == ri) edge_rep[x] = a;
      }
      if (image == e && element.vertex_map[solid[e].u] == solid[e].v) {
        orbit_nonfree[e] = true;
      }
    }
  }
  // A nonfree flag anywhere in an orbit marks the whole orbit.
  for (std::size_t e = 0; e < solid.size(); ++e) {
    if (orbit_nonfree[e]) orbit_nonfree[edge_rep[e]] = true;
  }

  std::vector<EvenGkmGraph::SolidEdge> new_solid;
  std::vector<EvenGkmGraph::DottedEdge> new_dotted;
  for (std::size_t e = 0; e < solid.size(); ++e) {
    if (edge_rep[e] != e) continue;  // one record per orbit
    if (orbit_nonfree[e]) {
      new_dotted.push_back({orbit_index[solid[e].u], solid[e].weight});
    } else {
      new_solid.push_back({orbit_index[solid[e].u], orbit_index[solid[e].v], solid[e].weight});
    }
  }

  // Dotted edge orbits.
  const auto& dotted = g.dotted_edges();
  std::vector<std::size_t> dotted_rep(dotted.size());
  std::iota(dotted_rep.begin(), dotted_rep.end(), 0);
  for (const auto& element : gamma.elements()) {
    for (std::size_t e = 0; e < dotted.size(); ++e) {
      const std::size_t image = element.dotted_edge_map[e];
      std::size_t a = std::min(dotted_rep[e], dotted_rep[image]);
      std::size_t re = dotted_rep[e], ri = dotted_rep[image];
      for (std::size_t x = 0; x < dotted.size(); ++x) {
        if (dotted_rep[x] == re || dotted_rep[x] == ri) dotted_rep[x] = a;
      }
    }
  }
  for (std::size_t e = 0; e < dotted.size(); ++e) {
    if (dotted_rep[e] != e) continue;
    new_dotted.push_back({orbit_index[dotted[e].v], dotted[e].weight});
  }

  return EvenGkmGraph(g.torus_rank(), g.gkm_degree(), std::move(orbit_ids), std::move(new_solid),
                      std::move(new_dotted));
}

}  // namespace gkm
