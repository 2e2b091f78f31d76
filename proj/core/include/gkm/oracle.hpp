#ifndef GKM_ORACLE_HPP
#define GKM_ORACLE_HPP

#include <cstdint>

#include "gkm/even_graph.hpp"
#include "gkm/linear_form.hpp"
#include "gkm/odd_graph.hpp"

namespace gkm {

// Cross-checks that deliberately invert the solver's algorithmic
// conventions: division instead of substitution, the opposite variable
// elimination index, auxiliary unknowns instead of restriction rows, and
// fraction-free integer elimination instead of rational RREF. Agreement is
// then evidence of correctness rather than of shared bugs.
namespace oracle {

struct OracleConfig {
  int trials = 20;
  std::uint64_t seed = 0x6b6d67u;  // fixed so CI runs are reproducible
  std::int64_t coefficient_bound = 10;
};

// Long division of p by the linear form, eliminating the largest-index
// variable with a nonzero coefficient; true iff the remainder vanishes.
// Must agree with divisible_by on every input.
bool divisibility_by_division(const Polynomial& p, const LinearForm& alpha);

inline constexpr int kDefaultDegreeCap = 8;

// Dimension of the degree-d layer via explicit auxiliary unknowns: each
// congruence p = q mod alpha becomes p - q = alpha * h with a fresh
// unknown h, and the stacked integer system is eliminated fraction-free.
// Throws DegreeTooLarge beyond the cap.
long long brute_force_dimension(const EvenGkmGraph& g, int degree,
                                int degree_cap = kDefaultDegreeCap);
long long brute_force_dimension(const OddGkmGraph& g, int degree,
                                int degree_cap = kDefaultDegreeCap);

// Dimension of {(f, g) homogeneous of the given cohomological degree with
// f = g mod the product of the moduli}, by the same auxiliary-unknown
// encoding with a single congruence.
long long pair_congruence_dimension(std::size_t num_vars, const std::vector<Weight>& moduli,
                                    int degree);

// Samples rational points on the hyperplane alpha = 0 and evaluates p;
// false on any nonzero value. A true result is probabilistic evidence
// only, but a nonzero evaluation certifies non-divisibility.
bool random_hyperplane_check(const Polynomial& p, const LinearForm& alpha,
                             const OracleConfig& config);

}  // namespace oracle
}  // namespace gkm

#endif  // GKM_ORACLE_HPP
