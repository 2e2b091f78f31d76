#include "gkm/solver.hpp"

#include <future>
#include <map>

#include "gkm/errors.hpp"

namespace gkm {

namespace {

void require_valid(const EvenGkmGraph& g) {
  const ValidationReport report = validate_even(g);
  if (!report.ok()) throw InvalidGraph("even graph fails validation:\n" + report.to_string());
}

void require_valid(const OddGkmGraph& g) {
  const ValidationReport report = validate_odd(g);
  if (!report.ok()) throw InvalidGraph("odd graph fails validation:\n" + report.to_string());
}

// Row layout shared by all constraint blocks of one degree: one row per
// monomial of the layer's polynomial degree.
struct MonomialIndex {
  std::vector<Monomial> monomials;
  std::map<Monomial, std::size_t, MonomialOrder> index;

  MonomialIndex(std::size_t num_vars, int degree) : monomials(monomial_basis(num_vars, degree)) {
    for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
  }
  std::size_t size() const { return monomials.size(); }
};

// Images of the layer's monomials under restriction to Ker(alpha), as
// columns of coefficients over the same monomial list.
std::vector<Polynomial> restriction_images(const MonomialIndex& mons, const Weight& alpha) {
  std::vector<Polynomial> images;
  images.reserve(mons.size());
  for (const auto& m : mons.monomials) {
    images.push_back(restrict_to_hyperplane(Polynomial::term(m, Rational(1)), alpha));
  }
  return images;
}

// Appends the rows of "restrict(sum_i coeff_i * block_i, alpha) = 0" where
// each block contributes its monomial coefficients at the given column
// offset with the given sign.
void append_congruence_rows(QRowList& rows, std::size_t total_cols, const MonomialIndex& mons,
                            const std::vector<Polynomial>& images,
                            const std::vector<std::pair<std::size_t, int>>& blocks) {
  const std::size_t first = rows.size();
  for (std::size_t r = 0; r < mons.size(); ++r) {
    rows.emplace_back(total_cols, Rational(0));
  }
  for (std::size_t j = 0; j < mons.size(); ++j) {
    for (const auto& [m, c] : images[j].terms()) {
      const std::size_t r = mons.index.at(m);
      for (const auto& [offset, sign] : blocks) {
        rows[first + r][offset + j] += sign > 0 ? c : -c;
      }
    }
  }
}

EvenClass even_class_from_vector(const EvenGkmGraph& g, const MonomialIndex& mons,
                                 const QVector& v) {
  EvenClass cls = zero_even_class(g);
  for (std::size_t vert = 0; vert < g.vertex_count(); ++vert) {
    for (std::size_t j = 0; j < mons.size(); ++j) {
      cls.assignment[vert].add_term(mons.monomials[j], v[vert * mons.size() + j]);
    }
  }
  return cls;
}

OddClass odd_class_from_vector(const OddGkmGraph& g, const MonomialIndex& mons, const QVector& v,
                               bool q_layer) {
  OddClass cls = zero_odd_class(g);
  auto& target = q_layer ? cls.q : cls.p;
  for (std::size_t c = 0; c < g.circle_count(); ++c) {
    for (std::size_t j = 0; j < mons.size(); ++j) {
      target[c].add_term(mons.monomials[j], v[c * mons.size() + j]);
    }
  }
  return cls;
}

QRowList even_constraint_rows(const EvenGkmGraph& g, const MonomialIndex& mons) {
  const std::size_t cols = g.vertex_count() * mons.size();
  QRowList rows;
  std::map<Weight, std::vector<Polynomial>> image_cache;
  for (const auto& e : g.solid_edges()) {
    auto [it, inserted] = image_cache.try_emplace(e.weight);
    if (inserted) it->second = restriction_images(mons, e.weight);
    append_congruence_rows(rows, cols, mons, it->second,
                           {{e.u * mons.size(), 1}, {e.v * mons.size(), -1}});
  }
  return rows;
}

QRowList odd_constraint_rows(const OddGkmGraph& g, const MonomialIndex& mons, bool q_layer) {
  const std::size_t cols = g.circle_count() * mons.size();
  QRowList rows;
  std::map<Weight, std::vector<Polynomial>> image_cache;
  for (std::size_t b = 0; b < g.boxes().size(); ++b) {
    const auto incident = g.box_incidences(b);
    const Weight& alpha = g.boxes()[b].weight;
    const bool orientable = g.boxes()[b].orientable;
    if (q_layer && !orientable) continue;
    if (!q_layer && incident.size() < 2) continue;
    auto [it, inserted] = image_cache.try_emplace(alpha);
    if (inserted) it->second = restriction_images(mons, alpha);
    if (q_layer) {
      std::vector<std::pair<std::size_t, int>> blocks;
      for (const auto* inc : incident) {
        blocks.emplace_back(inc->circle * mons.size(), inc->sign.value_or(1));
      }
      append_congruence_rows(rows, cols, mons, it->second, blocks);
    } else {
      for (std::size_t i = 0; i + 1 < incident.size(); ++i) {
        append_congruence_rows(rows, cols, mons, it->second,
                               {{incident[i]->circle * mons.size(), 1},
                                {incident[i + 1]->circle * mons.size(), -1}});
      }
    }
  }
  return rows;
}

}  // namespace

EvenBasis degree_component_even(const EvenGkmGraph& g, int degree) {
  if (degree < 0) throw std::invalid_argument("degree must be >= 0");
  require_valid(g);
  EvenBasis basis;
  basis.degree = degree;
  if (degree % 2 != 0 || g.vertex_count() == 0) return basis;
  if (g.torus_rank() == 0) throw InvalidGraph("torus rank must be positive");

  const MonomialIndex mons(g.torus_rank(), degree / 2);
  const QRowList rows = even_constraint_rows(g, mons);
  const QRowList kernel = kernel_basis(rows, g.vertex_count() * mons.size());
  for (const auto& v : kernel) basis.classes.push_back(even_class_from_vector(g, mons, v));
  return basis;
}

OddBasis degree_component_odd(const OddGkmGraph& g, int degree) {
  if (degree < 0) throw std::invalid_argument("degree must be >= 0");
  require_valid(g);
  OddBasis basis;
  basis.degree = degree;
  if (g.circle_count() == 0) return basis;
  if (g.torus_rank() == 0) throw InvalidGraph("torus rank must be positive");

  const bool q_layer = degree % 2 != 0;
  const MonomialIndex mons(g.torus_rank(), q_layer ? (degree - 1) / 2 : degree / 2);
  const QRowList rows = odd_constraint_rows(g, mons, q_layer);
  const QRowList kernel = kernel_basis(rows, g.circle_count() * mons.size());
  for (const auto& v : kernel) {
    basis.classes.push_back(odd_class_from_vector(g, mons, v, q_layer));
  }
  return basis;
}

namespace {

template <typename Graph, typename Dimension>
PoincareSeries series_impl(const Graph& g, int max_degree, bool parallel, Dimension dimension) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
  require_valid(g);
  PoincareSeries series;
  series.coefficients.resize(max_degree + 1);
  if (parallel) {
    std::vector<std::future<long long>> futures;
    futures.reserve(max_degree + 1);
    for (int d = 0; d <= max_degree; ++d) {
      futures.push_back(std::async(std::launch::async, [&, d] { return dimension(d); }));
    }
    for (int d = 0; d <= max_degree; ++d) series.coefficients[d] = futures[d].get();
  } else {
    for (int d = 0; d <= max_degree; ++d) series.coefficients[d] = dimension(d);
  }
  return series;
}

}  // namespace

PoincareSeries poincare_series(const EvenGkmGraph& g, int max_degree, bool parallel) {
  return series_impl(g, max_degree, parallel, [&](int d) {
    return static_cast<long long>(degree_component_even(g, d).dimension());
  });
}

PoincareSeries poincare_series(const OddGkmGraph& g, int max_degree, bool parallel) {
  return series_impl(g, max_degree, parallel, [&](int d) {
    return static_cast<long long>(degree_component_odd(g, d).dimension());
  });
}

QVector even_class_coordinates(const EvenGkmGraph& g, const EvenClass& c, int degree) {
  const MonomialIndex mons(g.torus_rank(), degree / 2);
  QVector v(g.vertex_count() * mons.size(), Rational(0));
  if (degree % 2 != 0) return v;
  for (std::size_t vert = 0; vert < g.vertex_count(); ++vert) {
    for (std::size_t j = 0; j < mons.size(); ++j) {
      v[vert * mons.size() + j] = c.assignment[vert].coefficient(mons.monomials[j]);
    }
  }
  return v;
}

QVector odd_class_coordinates(const OddGkmGraph& g, const OddClass& c, int degree) {
  const bool q_layer = degree % 2 != 0;
  const MonomialIndex mons(g.torus_rank(), q_layer ? (degree - 1) / 2 : degree / 2);
  QVector v(g.circle_count() * mons.size(), Rational(0));
  const auto& source = q_layer ? c.q : c.p;
  for (std::size_t circ = 0; circ < g.circle_count(); ++circ) {
    for (std::size_t j = 0; j < mons.size(); ++j) {
      v[circ * mons.size() + j] = source[circ].coefficient(mons.monomials[j]);
    }
  }
  return v;
}

namespace {

// Shared generator scan: in each degree, the solution layer is compared
// against the span of monomial multiples of the generators found so far.
template <typename Graph, typename Generator, typename BasisFn, typename FlattenFn,
          typename ScaleFn>
std::vector<Generator> generators_impl(const Graph& g, int max_degree, BasisFn layer_basis,
                                       FlattenFn flatten, ScaleFn scale) {
  std::vector<Generator> generators;
  for (int d = 0; d <= max_degree; ++d) {
    auto basis = layer_basis(d);
    if (basis.empty()) continue;
    QRowList span_rows;
    for (const auto& gen : generators) {
      if ((d - gen.degree) % 2 != 0 || d < gen.degree) continue;
      for (const auto& m : monomial_basis(g.torus_rank(), (d - gen.degree) / 2)) {
        span_rows.push_back(flatten(scale(Polynomial::term(m, Rational(1)), gen.cls), d));
      }
    }
    const std::size_t cols = flatten(basis.front().second, d).size();
    Rref span = reduced_row_echelon(std::move(span_rows), cols);
    for (auto& [vec, cls] : basis) {
      const QVector residual = reduce_against(span, vec);
      bool zero = true;
      for (const auto& entry : residual) {
        if (entry != 0) {
          zero = false;
          break;
        }
      }
      if (zero) continue;
      generators.push_back({d, cls});
      QRowList extended = std::move(span.rows);
      extended.push_back(vec);
      span = reduced_row_echelon(std::move(extended), cols);
    }
  }
  return generators;
}

}  // namespace

std::vector<EvenGenerator> module_generators(const EvenGkmGraph& g, int max_degree) {
  return generators_impl<EvenGkmGraph, EvenGenerator>(
      g, max_degree,
      [&](int d) {
        std::vector<std::pair<QVector, EvenClass>> out;
        for (auto& cls : degree_component_even(g, d).classes) {
          out.emplace_back(even_class_coordinates(g, cls, d), std::move(cls));
        }
        return out;
      },
      [&](const EvenClass& cls, int d) { return even_class_coordinates(g, cls, d); },
      [](const Polynomial& r, const EvenClass& cls) { return scalar_mul(r, cls); });
}

std::vector<OddGenerator> module_generators(const OddGkmGraph& g, int max_degree) {
  return generators_impl<OddGkmGraph, OddGenerator>(
      g, max_degree,
      [&](int d) {
        std::vector<std::pair<QVector, OddClass>> out;
        for (auto& cls : degree_component_odd(g, d).classes) {
          out.emplace_back(odd_class_coordinates(g, cls, d), std::move(cls));
        }
        return out;
      },
      [&](const OddClass& cls, int d) { return odd_class_coordinates(g, cls, d); },
      [](const Polynomial& r, const OddClass& cls) { return scalar_mul(r, cls); });
}

long long invariant_dimension(const EvenGkmGraph& g, const GraphAutomorphismGroup& gamma,
                              int degree) {
  require_valid(g);
  if (gamma.elements().empty()) throw NotAutomorphism("empty automorphism group");
  for (const auto& element : gamma.elements()) {
    if (element.vertex_map.size() != g.vertex_count() ||
        element.solid_edge_map.size() != g.solid_edges().size()) {
      throw NotAutomorphism("group does not act on this graph");
    }
    for (std::size_t e = 0; e < g.solid_edges().size(); ++e) {
      const auto& src = g.solid_edges()[e];
      const auto& dst = g.solid_edges()[element.solid_edge_map[e]];
      const bool endpoints_match =
          (element.vertex_map[src.u] == dst.u && element.vertex_map[src.v] == dst.v) ||
          (element.vertex_map[src.u] == dst.v && element.vertex_map[src.v] == dst.u);
      if (!endpoints_match || !(src.weight == dst.weight)) {
        throw NotAutomorphism("element does not preserve the weighted edge structure");
      }
    }
  }

  const EvenBasis basis = degree_component_even(g, degree);
  const std::size_t m = basis.dimension();
  if (m == 0) return 0;
  if (degree % 2 != 0) return 0;

  const MonomialIndex mons(g.torus_rank(), degree / 2);
  const std::size_t block = mons.size();
  QRowList basis_vectors;
  for (const auto& cls : basis.classes) {
    basis_vectors.push_back(even_class_coordinates(g, cls, degree));
  }
  const Rref basis_rref = reduced_row_echelon(basis_vectors, g.vertex_count() * block);
  if (basis_rref.rank() != m) throw InvalidGraph("basis is not in general position");

  // Average of the permutation action in basis coordinates; coordinates of
  // a solution are its entries at the pivot columns of the RREF basis.
  QRowList averaged(m, QVector(m, Rational(0)));
  const Rational scale = make_rational(1, static_cast<long>(gamma.size()));
  for (const auto& element : gamma.elements()) {
    for (std::size_t j = 0; j < m; ++j) {
      QVector image(g.vertex_count() * block, Rational(0));
      for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const std::size_t target = element.vertex_map[v];
        for (std::size_t t = 0; t < block; ++t) {
          image[target * block + t] = basis_vectors[j][v * block + t];
        }
      }
      QVector coords(m);
      for (std::size_t i = 0; i < m; ++i) coords[i] = image[basis_rref.pivot_cols[i]];
      // The image must stay inside the solution space.
      QVector residual = reduce_against(basis_rref, std::move(image));
      for (const auto& entry : residual) {
        if (entry != 0) {
          throw NotAutomorphism("group element does not preserve the solution space");
        }
      }
      for (std::size_t i = 0; i < m; ++i) averaged[i][j] += scale * coords[i];
    }
  }
  return static_cast<long long>(rank_of(std::move(averaged), m));
}

}  // namespace gkm
