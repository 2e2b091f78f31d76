#include "gkm/series.hpp"

#include <sstream>
#include <stdexcept>

namespace gkm {

std::string PoincareSeries::to_text() const {
  std::ostringstream out;
  for (std::size_t d = 0; d < coefficients.size(); ++d) {
    out << d << ": " << coefficients[d] << "\n";
  }
  return out.str();
}

BettiResult betti_polynomial(const PoincareSeries& series, std::size_t rank, int max_degree) {
  if (max_degree > series.max_degree()) {
    throw std::invalid_argument("betti_polynomial: series is not computed that far");
  }
  BettiResult result;
  const int top = max_degree - 2 * static_cast<int>(rank);
  // (1 - t^2)^rank expanded against the series by binomial convolution.
  std::vector<long long> binom(rank + 1, 0);
  binom[0] = 1;
  for (std::size_t r = 1; r <= rank; ++r) {
    for (std::size_t j = r; j > 0; --j) binom[j] += binom[j - 1];
  }
  for (int d = 0; d <= top; ++d) {
    long long value = 0;
    long long sign = 1;
    for (std::size_t j = 0; j <= rank; ++j) {
      value += sign * binom[j] * series.at(d - 2 * static_cast<int>(j));
      sign = -sign;
    }
    result.coefficients.push_back(value);
    if (value < 0) result.verdict = BettiVerdict::kInconsistent;
  }
  return result;
}

std::string BettiResult::to_text() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t d = 0; d < coefficients.size(); ++d) {
    if (coefficients[d] == 0) continue;
    const long long magnitude = coefficients[d] < 0 ? -coefficients[d] : coefficients[d];
    if (first) {
      if (coefficients[d] < 0) out << "-";
      first = false;
    } else {
      out << (coefficients[d] < 0 ? " - " : " + ");
    }
    if (magnitude != 1 || d == 0) out << magnitude;
    if (d > 0) {
      if (magnitude != 1) out << "*";
      out << "t";
      if (d > 1) out << "^" << d;
    }
  }
  if (first) out << "0";
  out << "\n" << (consistent() ? "consistent-with-formal" : "inconsistent") << "\n";
  return out.str();
}

bool series_factor_check(const PoincareSeries& a, const PoincareSeries& b, int shift,
                         int max_degree) {
  if (max_degree > a.max_degree() || max_degree > b.max_degree()) {
    throw std::invalid_argument("series_factor_check: series not computed to max_degree");
  }
  for (int d = 0; d <= max_degree; ++d) {
    if (a.at(d) != b.at(d) + b.at(d - shift)) return false;
  }
  return true;
}

}  // namespace gkm
