#include "gkm/builders.hpp"

#include <stdexcept>

#include "gkm/errors.hpp"

namespace gkm {

namespace {

Weight basis_weight(std::size_t n, std::size_t i) {
  std::vector<std::int64_t> v(n, 0);
  v[i] = 1;
  return Weight::canonical(std::move(v));
}

}  // namespace

EvenGkmGraph build_even_sphere(std::size_t n) {
  if (n < 1) throw std::invalid_argument("build_even_sphere: n >= 1 required");
  std::vector<EvenGkmGraph::SolidEdge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({0, 1, basis_weight(n, i)});
  return EvenGkmGraph(n, n, {"N", "S"}, std::move(edges), {});
}

EvenGkmGraph build_even_rp(std::size_t n) {
  if (n < 1) throw std::invalid_argument("build_even_rp: n >= 1 required");
  std::vector<EvenGkmGraph::DottedEdge> dotted;
  for (std::size_t i = 0; i < n; ++i) dotted.push_back({0, basis_weight(n, i)});
  return EvenGkmGraph(n, n, {"p"}, {}, std::move(dotted));
}

OddGkmGraph build_odd_sphere(std::size_t n) {
  if (n < 1) throw std::invalid_argument("build_odd_sphere: n >= 1 required");
  std::vector<OddGkmGraph::Box> boxes;
  std::vector<OddGkmGraph::Incidence> incidences;
  for (std::size_t i = 0; i < n; ++i) {
    boxes.push_back({"b" + std::to_string(i + 1), basis_weight(n, i), true});
    incidences.push_back({i, 0, 1});
  }
  return OddGkmGraph(n, n, {"c"}, std::move(boxes), std::move(incidences));
}

OddGkmGraph product_with_circle(const EvenGkmGraph& g) {
  const ValidationReport report = validate_even(g);
  if (!report.ok()) {
    throw InvalidInput("product_with_circle: input graph is not GKM-valid:\n" +
                       report.to_string());
  }
  std::vector<OddGkmGraph::Box> boxes;
  std::vector<OddGkmGraph::Incidence> incidences;
  // Over each 2-sphere, the product component S^2 x S^1 has weights alpha
  // and -alpha at its two fixed circles, so the signed sum reads Q_u - Q_v.
  for (std::size_t i = 0; i < g.solid_edges().size(); ++i) {
    const auto& e = g.solid_edges()[i];
    const std::size_t box = boxes.size();
    boxes.push_back({"e" + std::to_string(i), e.weight, true});
    incidences.push_back({box, e.u, 1});
    incidences.push_back({box, e.v, -1});
  }
  // RP^2 x S^1 components are non-orientable.
  for (std::size_t i = 0; i < g.dotted_edges().size(); ++i) {
    const auto& e = g.dotted_edges()[i];
    const std::size_t box = boxes.size();
    boxes.push_back({"d" + std::to_string(i), e.weight, false});
    incidences.push_back({box, e.v, std::nullopt});
  }
  return OddGkmGraph(g.torus_rank(), g.gkm_degree(), g.vertex_ids(), std::move(boxes),
                     std::move(incidences));
}

}  // namespace gkm
