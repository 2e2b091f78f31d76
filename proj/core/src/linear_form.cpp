#include "gkm/linear_form.hpp"

#include <numeric>
#include <sstream>

#include "gkm/errors.hpp"

namespace gkm {

LinearForm LinearForm::canonical(std::vector<std::int64_t> coeffs) {
  std::int64_t g = 0;
  for (std::int64_t c : coeffs) g = std::gcd(g, c);
  if (g == 0) throw ZeroVector("weight vector must be nonzero");
  for (auto& c : coeffs) c /= g;
  for (std::int64_t c : coeffs) {
    if (c == 0) continue;
    if (c < 0) {
      for (auto& x : coeffs) x = -x;
    }
    break;
  }
  return LinearForm(std::move(coeffs));
}

bool LinearForm::is_canonical(const std::vector<std::int64_t>& coeffs) {
  std::int64_t g = 0;
  for (std::int64_t c : coeffs) g = std::gcd(g, c);
  if (g != 1) return false;
  for (std::int64_t c : coeffs) {
    if (c == 0) continue;
    return c > 0;
  }
  return false;
}

std::size_t LinearForm::pivot_index() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return i;
  }
  throw ZeroVector("canonical form is never zero");
}

std::size_t LinearForm::last_nonzero_index() const {
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] != 0) return i;
  }
  throw ZeroVector("canonical form is never zero");
}

Polynomial LinearForm::lift() const {
  Polynomial p(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) {
      p += Polynomial::variable(coeffs_.size(), i) * Rational(static_cast<long>(coeffs_[i]));
    }
  }
  return p;
}

std::string LinearForm::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out << ",";
    out << coeffs_[i];
  }
  out << "]";
  return out.str();
}

Polynomial restrict_to_hyperplane(const Polynomial& p, const LinearForm& alpha) {
  if (p.num_vars() != alpha.num_vars()) {
    throw VariableCountMismatch("polynomial and linear form variable counts differ");
  }
  const std::size_t n = p.num_vars();
  const std::size_t k = alpha.pivot_index();
  const auto& a = alpha.coeffs();

  // x_k maps to -(sum_{i != k} a_i x_i) / a_k.
  Polynomial image(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k || a[i] == 0) continue;
    image += Polynomial::variable(n, i) *
             make_rational(-static_cast<long>(a[i]), static_cast<long>(a[k]));
  }

  std::vector<Polynomial> image_powers = {Polynomial::constant(n, Rational(1))};
  Polynomial result(n);
  for (const auto& [m, c] : p.terms()) {
    const int ek = m.exponents[k];
    while (static_cast<int>(image_powers.size()) <= ek) {
      image_powers.push_back(image_powers.back() * image);
    }
    Monomial rest = m;
    rest.exponents[k] = 0;
    result += Polynomial::term(rest, c) * image_powers[ek];
  }
  return result;
}

bool divisible_by(const Polynomial& p, const LinearForm& alpha) {
  return restrict_to_hyperplane(p, alpha).is_zero();
}

Polynomial divide_by_linear(const Polynomial& p, const LinearForm& alpha) {
  if (p.num_vars() != alpha.num_vars()) {
    throw VariableCountMismatch("polynomial and linear form variable counts differ");
  }
  const std::size_t n = p.num_vars();
  const std::size_t k = alpha.pivot_index();
  const Rational ak(static_cast<long>(alpha.coeffs()[k]));
  const Polynomial lifted = alpha.lift();

  // Long division with respect to x_k: peel off the top x_k-layer until no
  // x_k remains; the final remainder is free of x_k, so divisibility by
  // alpha forces it to vanish.
  Polynomial quotient(n);
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
    quotient += step;
    remainder -= step * lifted;
  }
  if (!remainder.is_zero()) {
    throw NotDivisible("polynomial is not divisible by the linear form");
  }
  return quotient;
}

}  // namespace gkm
