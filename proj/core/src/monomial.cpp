#include "gkm/monomial.hpp"

#include <stdexcept>

namespace gkm {

Monomial Monomial::operator*(const Monomial& other) const {
  if (exponents.size() != other.exponents.size()) {
    throw std::invalid_argument("monomial product: variable counts differ");
  }
  Monomial result = *this;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    result.exponents[i] += other.exponents[i];
  }
  return result;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  // Within a degree the lexicographically larger exponent vector comes first.
  return a.exponents > b.exponents;
}

namespace {

void enumerate(std::size_t var, int remaining, Monomial& current, std::vector<Monomial>& out) {
  if (var + 1 == current.exponents.size()) {
    current.exponents[var] = remaining;
    out.push_back(current);
    current.exponents[var] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current.exponents[var] = e;
    enumerate(var + 1, remaining - e, current, out);
  }
  current.exponents[var] = 0;
}

}  // namespace

std::vector<Monomial> monomial_basis(std::size_t num_vars, int degree) {
  if (num_vars == 0 || degree < 0) {
    throw std::invalid_argument("monomial_basis: need num_vars >= 1 and degree >= 0");
  }
  std::vector<Monomial> out;
  Monomial current = Monomial::one(num_vars);
  enumerate(0, degree, current, out);
  return out;
}

}  // namespace gkm
