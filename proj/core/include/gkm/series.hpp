#ifndef GKM_SERIES_HPP
#define GKM_SERIES_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace gkm {

// Graded dimensions of the solution space, truncated at max degree; index
// is the cohomological degree.
struct PoincareSeries {
  std::vector<long long> coefficients;

  int max_degree() const { return static_cast<int>(coefficients.size()) - 1; }
  long long at(int degree) const {
    return degree >= 0 && degree <= max_degree() ? coefficients[degree] : 0;
  }
  std::string to_text() const;  // one "d: dim" line per degree
};

enum class BettiVerdict { kConsistentWithFormal, kInconsistent };

// Coefficients of series(t) * (1 - t^2)^rank, truncated at D - 2*rank. For
// a free module these are the candidate ordinary Betti numbers; a negative
// entry rules freeness out. The verdict only speaks up to the computed
// truncation.
struct BettiResult {
  std::vector<long long> coefficients;
  BettiVerdict verdict = BettiVerdict::kConsistentWithFormal;

  bool consistent() const { return verdict == BettiVerdict::kConsistentWithFormal; }
  std::string to_text() const;  // polynomial in t plus the verdict
};

BettiResult betti_polynomial(const PoincareSeries& series, std::size_t rank, int max_degree);

// True iff a[d] = b[d] + b[d - shift] for all d <= max_degree, the
// dimension identity of a trivial extension B[r]/r^2 with deg r = shift.
bool series_factor_check(const PoincareSeries& a, const PoincareSeries& b, int shift,
                         int max_degree);

}  // namespace gkm

#endif  // GKM_SERIES_HPP
