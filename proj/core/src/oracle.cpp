#include "gkm/oracle.hpp"

#include <map>
#include <random>

#include "gkm/errors.hpp"
#include "gkm/monomial.hpp"

namespace gkm {
namespace oracle {

namespace {

using IntRow = std::vector<Integer>;
using IntMatrix = std::vector<IntRow>;

// Fraction-free Bareiss elimination; all intermediate divisions are exact.
std::size_t bareiss_rank(IntMatrix m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  Integer prev(1);
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < m.size(); ++col) {
    std::size_t pivot = m.size();
    for (std::size_t i = r; i < m.size(); ++i) {
      if (m[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == m.size()) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        m[i][j] = (m[r][col] * m[i][j] - m[i][col] * m[r][j]) / prev;
      }
      m[i][col] = 0;
    }
    prev = m[r][col];
    ++r;
  }
  return r;
}

struct Congruence {
  std::vector<std::pair<std::size_t, int>> blocks;  // (block index, sign)
  Polynomial modulus;                               // integer coefficients

  Congruence(std::vector<std::pair<std::size_t, int>> b, Polynomial m)
      : blocks(std::move(b)), modulus(std::move(m)) {}
};

// Dimension of the class part of the stacked system
//   sum_b sign_b f_b = modulus_c * h_c   for every congruence c,
// with f blocks homogeneous of exponent degree k. The auxiliary unknowns
// are uniquely determined by the class part, so the kernel dimension is the
// class dimension.
long long system_dimension(std::size_t num_vars, std::size_t num_blocks, int exponent_degree,
                           const std::vector<Congruence>& congruences) {
  const std::vector<Monomial> mons = monomial_basis(num_vars, exponent_degree);
  std::map<Monomial, std::size_t, MonomialOrder> mon_index;
  for (std::size_t i = 0; i < mons.size(); ++i) mon_index.emplace(mons[i], i);

  const std::size_t class_cols = num_blocks * mons.size();
  std::size_t total_cols = class_cols;
  std::vector<std::size_t> aux_offset;
  std::vector<std::vector<Monomial>> aux_mons;
  for (const auto& congruence : congruences) {
    const int aux_degree = exponent_degree - congruence.modulus.total_degree();
    aux_offset.push_back(total_cols);
    if (aux_degree >= 0) {
      aux_mons.push_back(monomial_basis(num_vars, aux_degree));
      total_cols += aux_mons.back().size();
    } else {
      aux_mons.emplace_back();
    }
  }

  IntMatrix matrix;
  for (std::size_t c = 0; c < congruences.size(); ++c) {
    const auto& congruence = congruences[c];
    const std::size_t first = matrix.size();
    matrix.resize(first + mons.size(), IntRow(total_cols, Integer(0)));
    for (const auto& [block, sign] : congruence.blocks) {
      for (std::size_t j = 0; j < mons.size(); ++j) {
        matrix[first + j][block * mons.size() + j] += sign;
      }
    }
    for (std::size_t a = 0; a < aux_mons[c].size(); ++a) {
      for (const auto& [m, coeff] : congruence.modulus.terms()) {
        const Monomial target = m * aux_mons[c][a];
        matrix[first + mon_index.at(target)][aux_offset[c] + a] -= coeff.get_num();
      }
    }
  }
  return static_cast<long long>(total_cols) - static_cast<long long>(bareiss_rank(std::move(matrix)));
}

void check_degree(int degree, int cap) {
  if (degree < 0) throw std::invalid_argument("degree must be >= 0");
  if (degree > cap) {
    throw DegreeTooLarge("brute-force oracle capped at degree " + std::to_string(cap));
  }
}

}  // namespace

bool divisibility_by_division(const Polynomial& p, const LinearForm& alpha) {
  if (p.num_vars() != alpha.num_vars()) {
    throw VariableCountMismatch("polynomial and linear form variable counts differ");
  }
  const std::size_t n = p.num_vars();
  const std::size_t k = alpha.last_nonzero_index();
  const Rational ak(static_cast<long>(alpha.coeffs()[k]));
  const Polynomial lifted = alpha.lift();

  Polynomial remainder = p;
  while (true) {
    int top = -1;
    for (const auto& [m, c] : remainder.terms()) {
      if (m.exponents[k] > top) top = m.exponents[k];
    }
    if (top < 1) break;
    Polynomial step(n);
    for (const auto& [m, c] : remainder.terms()) {
      if (m.exponents[k] != top) continue;
      Monomial reduced = m;
      reduced.exponents[k] -= 1;
      step.add_term(reduced, c / ak);
    }
    remainder -= step * lifted;
  }
  return remainder.is_zero();
}

long long brute_force_dimension(const EvenGkmGraph& g, int degree, int degree_cap) {
  check_degree(degree, degree_cap);
  const ValidationReport report = validate_even(g);
  if (!report.ok()) throw InvalidGraph("even graph fails validation:\n" + report.to_string());
  if (degree % 2 != 0) return 0;
  if (g.vertex_count() == 0) return 0;

  std::vector<Congruence> congruences;
  for (const auto& e : g.solid_edges()) {
    congruences.emplace_back(std::vector<std::pair<std::size_t, int>>{{e.u, 1}, {e.v, -1}},
                             e.weight.lift());
  }
  return system_dimension(g.torus_rank(), g.vertex_count(), degree / 2, congruences);
}

long long brute_force_dimension(const OddGkmGraph& g, int degree, int degree_cap) {
  check_degree(degree, degree_cap);
  const ValidationReport report = validate_odd(g);
  if (!report.ok()) throw InvalidGraph("odd graph fails validation:\n" + report.to_string());
  if (g.circle_count() == 0) return 0;

  const bool q_layer = degree % 2 != 0;
  std::vector<Congruence> congruences;
  for (std::size_t b = 0; b < g.boxes().size(); ++b) {
    const auto incident = g.box_incidences(b);
    const Polynomial modulus = g.boxes()[b].weight.lift();
    if (q_layer) {
      if (!g.boxes()[b].orientable) continue;
      std::vector<std::pair<std::size_t, int>> blocks;
      for (const auto* inc : incident) blocks.emplace_back(inc->circle, inc->sign.value_or(1));
      congruences.emplace_back(std::move(blocks), modulus);
    } else {
      for (std::size_t i = 0; i + 1 < incident.size(); ++i) {
        congruences.emplace_back(std::vector<std::pair<std::size_t, int>>{
                                     {incident[i]->circle, 1}, {incident[i + 1]->circle, -1}},
                                 modulus);
      }
    }
  }
  return system_dimension(g.torus_rank(), g.circle_count(), q_layer ? (degree - 1) / 2 : degree / 2,
                          congruences);
}

long long pair_congruence_dimension(std::size_t num_vars, const std::vector<Weight>& moduli,
                                    int degree) {
  if (degree < 0) throw std::invalid_argument("degree must be >= 0");
  if (degree % 2 != 0) return 0;
  Polynomial product = Polynomial::constant(num_vars, Rational(1));
  for (const auto& w : moduli) product = product * w.lift();
  std::vector<Congruence> congruences;
  congruences.emplace_back(std::vector<std::pair<std::size_t, int>>{{0, 1}, {1, -1}},
                           std::move(product));
  return system_dimension(num_vars, 2, degree / 2, congruences);
}

bool random_hyperplane_check(const Polynomial& p, const LinearForm& alpha,
                             const OracleConfig& config) {
  if (p.num_vars() != alpha.num_vars()) {
    throw VariableCountMismatch("polynomial and linear form variable counts differ");
  }
  const std::size_t n = p.num_vars();
  const std::size_t pivot = alpha.last_nonzero_index();
  const auto& a = alpha.coeffs();

  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<std::int64_t> numerator(-config.coefficient_bound,
                                                        config.coefficient_bound);
  std::uniform_int_distribution<std::int64_t> denominator(1, config.coefficient_bound);

  for (int trial = 0; trial < config.trials; ++trial) {
    std::vector<Rational> point(n, Rational(0));
    Rational pivot_value(0);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == pivot) continue;
      point[i] = make_rational(static_cast<long>(numerator(rng)),
                               static_cast<long>(denominator(rng)));
      pivot_value -= Rational(static_cast<long>(a[i])) * point[i];
    }
    point[pivot] = pivot_value / Rational(static_cast<long>(a[pivot]));
    if (p.evaluate(point) != 0) return false;
  }
  return true;
}

}  // namespace oracle
}  // namespace gkm
