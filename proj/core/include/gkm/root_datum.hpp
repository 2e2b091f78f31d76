#ifndef GKM_ROOT_DATUM_HPP
#define GKM_ROOT_DATUM_HPP

#include <cstdint>
#include <vector>

#include "gkm/even_graph.hpp"

namespace gkm {

// Positive roots of a compact group G and of a full-rank subgroup K, given
// as integer covectors. The K-roots must be a subset of the G-roots.
struct RootDatum {
  std::size_t torus_rank = 0;
  std::vector<std::vector<std::int64_t>> positive_roots_g;
  std::vector<std::vector<std::int64_t>> positive_roots_k;
};

inline constexpr std::size_t kDefaultWeylCap = 10080;

// GKM graph of G/K: vertices are the cosets W_G/W_K; for each coset [w] and
// each positive root alpha of G outside K, a solid edge [w] -- [w sigma_alpha]
// weighted [w alpha] when sigma_alpha is not in W_K, and a dotted edge at [w]
// otherwise. W_G is the brute-force closure of the reflections through the
// G-roots; throws GroupTooLarge past the cap and NotClosed if the K-roots
// generate elements outside that closure.
EvenGkmGraph build_weyl_coset_graph(const RootDatum& datum,
                                    std::size_t group_cap = kDefaultWeylCap);

// Order of the reflection group generated by the G-roots (mostly for tests).
std::size_t weyl_group_order(const RootDatum& datum, std::size_t group_cap = kDefaultWeylCap);

}  // namespace gkm

#endif  // GKM_ROOT_DATUM_HPP
