#include "gkm/root_datum.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gkm/errors.hpp"
#include "gkm/rational.hpp"

namespace gkm {

namespace {

// Row-major square matrix over the rationals, acting on covectors.
using Matrix = std::vector<Rational>;

Matrix identity_matrix(std::size_t n) {
  Matrix m(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b, std::size_t n) {
  Matrix out(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& aik = a[i * n + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        out[i * n + j] += aik * b[k * n + j];
      }
    }
  }
  return out;
}

// Orthogonal reflection through the hyperplane of the root, with respect to
// the standard inner product on coefficient vectors.
Matrix reflection(const std::vector<std::int64_t>& root, std::size_t n) {
  Rational norm(0);
  for (std::int64_t c : root) norm += Rational(static_cast<long>(c)) * Rational(static_cast<long>(c));
  if (norm == 0) throw ZeroVector("root must be nonzero");
  Matrix m = identity_matrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i * n + j] -= Rational(2) * Rational(static_cast<long>(root[i])) *
                      Rational(static_cast<long>(root[j])) / norm;
    }
  }
  return m;
}

std::vector<Rational> apply(const Matrix& m, const std::vector<std::int64_t>& v, std::size_t n) {
  std::vector<Rational> out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i * n + j] == 0 || v[j] == 0) continue;
      out[i] += m[i * n + j] * Rational(static_cast<long>(v[j]));
    }
  }
  return out;
}

Weight canonical_from_rational(const std::vector<Rational>& v) {
  Integer common(1);
  for (const auto& q : v) {
    common = common * q.get_den() / gcd(common, q.get_den());
  }
  std::vector<std::int64_t> ints(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Integer scaled = v[i].get_num() * (common / v[i].get_den());
    if (!scaled.fits_slong_p()) {
      throw InvalidInput("weight entry overflows during Weyl construction");
    }
    ints[i] = scaled.get_si();
  }
  return Weight::canonical(std::move(ints));
}

struct Closure {
  std::vector<Matrix> elements;            // BFS order, identity first
  std::map<Matrix, std::size_t> index_of;  // deterministic lookup
};

Closure close_group(const std::vector<Matrix>& generators, std::size_t n, std::size_t cap) {
  Closure group;
  auto push = [&](Matrix m) {
    auto [it, inserted] = group.index_of.emplace(std::move(m), group.elements.size());
    if (inserted) group.elements.push_back(it->first);
    return inserted;
  };
  push(identity_matrix(n));
  for (std::size_t i = 0; i < group.elements.size(); ++i) {
    for (const auto& gen : generators) {
      Matrix next = multiply(group.elements[i], gen, n);
      push(std::move(next));
      if (group.elements.size() > cap) {
        std::ostringstream msg;
        msg << "reflection group closure exceeds the cap of " << cap << " elements";
        throw GroupTooLarge(msg.str());
      }
    }
  }
  return group;
}

void validate_datum(const RootDatum& datum) {
  if (datum.torus_rank == 0) throw InvalidInput("root datum needs torus_rank >= 1");
  for (const auto& root : datum.positive_roots_g) {
    if (root.size() != datum.torus_rank) {
      throw InvalidInput("G-root has wrong length");
    }
    if (std::all_of(root.begin(), root.end(), [](std::int64_t c) { return c == 0; })) {
      throw InvalidInput("G-root must be nonzero");
    }
  }
  for (const auto& root : datum.positive_roots_k) {
    if (std::find(datum.positive_roots_g.begin(), datum.positive_roots_g.end(), root) ==
        datum.positive_roots_g.end()) {
      throw InvalidInput("K-roots must be a sublist of the G-roots");
    }
  }
}

}  // namespace

EvenGkmGraph build_weyl_coset_graph(const RootDatum& datum, std::size_t group_cap) {
  validate_datum(datum);
  const std::size_t n = datum.torus_rank;

  std::vector<Matrix> g_reflections;
  for (const auto& root : datum.positive_roots_g) g_reflections.push_back(reflection(root, n));
  std::vector<Matrix> k_reflections;
  for (const auto& root : datum.positive_roots_k) k_reflections.push_back(reflection(root, n));

  const Closure wg = close_group(g_reflections, n, group_cap);
  const Closure wk = close_group(k_reflections, n, group_cap);
  for (const auto& element : wk.elements) {
    if (!wg.index_of.count(element)) {
      throw NotClosed("K-root reflections generate elements outside W_G");
    }
  }

  // Left cosets w W_K, indexed by first appearance in BFS order; the
  // representative is the first-seen element of each coset.
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset_of(wg.elements.size(), kUnassigned);
  std::vector<std::size_t> coset_rep;
  for (std::size_t i = 0; i < wg.elements.size(); ++i) {
    if (coset_of[i] != kUnassigned) continue;
    const std::size_t coset = coset_rep.size();
    coset_rep.push_back(i);
    for (const auto& k : wk.elements) {
      Matrix wk_elem = multiply(wg.elements[i], k, n);
      coset_of[wg.index_of.at(wk_elem)] = coset;
    }
  }

  std::vector<std::string> vertex_ids(coset_rep.size());
  for (std::size_t c = 0; c < coset_rep.size(); ++c) vertex_ids[c] = std::to_string(c);

  // Roots of G outside K, with their reflections classified once.
  std::vector<EvenGkmGraph::SolidEdge> solid;
  std::vector<EvenGkmGraph::DottedEdge> dotted;
  for (const auto& root : datum.positive_roots_g) {
    if (std::find(datum.positive_roots_k.begin(), datum.positive_roots_k.end(), root) !=
        datum.positive_roots_k.end()) {
      continue;
    }
    const Matrix sigma = reflection(root, n);
    const bool sigma_in_wk = wk.index_of.count(sigma) > 0;
    for (std::size_t c = 0; c < coset_rep.size(); ++c) {
      const Matrix& w = wg.elements[coset_rep[c]];
      const Weight weight = canonical_from_rational(apply(w, root, n));
      if (sigma_in_wk) {
        dotted.push_back({c, weight});
        continue;
      }
      const Matrix target = multiply(w, sigma, n);
      auto it = wg.index_of.find(target);
      if (it == wg.index_of.end()) throw NotClosed("group closure is missing a product");
      const std::size_t target_coset = coset_of[it->second];
      // Each undirected edge shows up once from either end.
      if (c < target_coset) {
        solid.push_back({c, target_coset, weight});
      }
    }
  }

  const std::size_t degree =
      datum.positive_roots_g.size() - datum.positive_roots_k.size();
  return EvenGkmGraph(n, degree, std::move(vertex_ids), std::move(solid), std::move(dotted));
}

std::size_t weyl_group_order(const RootDatum& datum, std::size_t group_cap) {
  validate_datum(datum);
  std::vector<Matrix> reflections;
  for (const auto& root : datum.positive_roots_g) {
    reflections.push_back(reflection(root, datum.torus_rank));
  }
  return close_group(reflections, datum.torus_rank, group_cap).elements.size();
}

}  // namespace gkm
