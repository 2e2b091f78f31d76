#ifndef GKM_LINEAR_FORM_HPP
#define GKM_LINEAR_FORM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gkm/polynomial.hpp"

namespace gkm {

// Primitive integer covector in canonical form: nonzero, gcd of entries 1,
// first nonzero entry positive. This is the shared representation for
// isotropy weights (defined only up to sign) and for the linear forms the
// congruence relations reduce by.
class LinearForm {
 public:
  // Canonicalizes an arbitrary nonzero integer vector; throws ZeroVector.
  static LinearForm canonical(std::vector<std::int64_t> coeffs);
  // True iff the vector is already in canonical form.
  static bool is_canonical(const std::vector<std::int64_t>& coeffs);

  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::size_t num_vars() const { return coeffs_.size(); }

  // Smallest index with a nonzero coefficient.
  std::size_t pivot_index() const;
  // Largest index with a nonzero coefficient.
  std::size_t last_nonzero_index() const;

  // The form as a degree-1 polynomial.
  Polynomial lift() const;

  std::string to_string() const;

  bool operator==(const LinearForm& other) const { return coeffs_ == other.coeffs_; }
  bool operator!=(const LinearForm& other) const { return !(*this == other); }
  bool operator<(const LinearForm& other) const { return coeffs_ < other.coeffs_; }

 private:
  explicit LinearForm(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {}

  std::vector<std::int64_t> coeffs_;
};

// Isotropy weights are covectors modulo sign; the canonical form quotients
// the sign away, so the two notions coincide in code.
using Weight = LinearForm;

inline Weight canonical_weight(std::vector<std::int64_t> coeffs) {
  return Weight::canonical(std::move(coeffs));
}

// Substitutes the pivot variable x_k := -(sum_{i != k} a_i x_i)/a_k where k
// is the smallest index with a_k != 0. The result vanishes iff alpha
// divides p.
Polynomial restrict_to_hyperplane(const Polynomial& p, const LinearForm& alpha);

// True iff alpha | p in the polynomial ring.
bool divisible_by(const Polynomial& p, const LinearForm& alpha);

// Exact quotient p / alpha; throws NotDivisible.
Polynomial divide_by_linear(const Polynomial& p, const LinearForm& alpha);

}  // namespace gkm

#endif  // GKM_LINEAR_FORM_HPP
