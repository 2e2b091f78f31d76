#include "gkm/polynomial.hpp"

#include <sstream>

#include "gkm/errors.hpp"

namespace gkm {

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(Monomial::one(num_vars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw std::invalid_argument("variable index out of range");
  Monomial m = Monomial::one(num_vars);
  m.exponents[index] = 1;
  Polynomial p(num_vars);
  p.add_term(m, Rational(1));
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p(m.num_vars());
  p.add_term(m, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.num_vars() != num_vars_) {
    throw VariableCountMismatch("term has wrong variable count");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_same_vars(const Polynomial& other) const {
  if (num_vars_ != other.num_vars_) {
    throw VariableCountMismatch("polynomials live in different variable counts");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial result(num_vars_);
  for (const auto& [m, c] : terms_) result.terms_.emplace(m, -c);
  return result;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial result = *this;
  result += other;
  return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_vars(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial result = *this;
  result -= other;
  return result;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_vars(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_same_vars(other);
  Polynomial result(num_vars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      result.add_term(ma * mb, ca * cb);
    }
  }
  return result;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
  Polynomial result(num_vars_);
  if (scalar == 0) return result;
  for (const auto& [m, c] : terms_) result.terms_.emplace(m, c * scalar);
  return result;
}

int Polynomial::total_degree() const {
  int best = -1;
  for (const auto& [m, c] : terms_) {
    int d = m.degree();
    if (d > best) best = d;
  }
  return best;
}

bool Polynomial::is_homogeneous() const {
  int seen = -1;
  for (const auto& [m, c] : terms_) {
    int d = m.degree();
    if (seen == -1) {
      seen = d;
    } else if (d != seen) {
      return false;
    }
  }
  return true;
}

std::map<int, Polynomial> Polynomial::homogeneous_parts() const {
  std::map<int, Polynomial> parts;
  for (const auto& [m, c] : terms_) {
    auto [it, inserted] = parts.emplace(m.degree(), Polynomial(num_vars_));
    it->second.add_term(m, c);
  }
  return parts;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != num_vars_) {
    throw VariableCountMismatch("evaluation point has wrong dimension");
  }
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational value = c;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      for (int e = 0; e < m.exponents[i]; ++e) value *= point[i];
    }
    total += value;
  }
  return total;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational abs_c = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const bool is_constant_term = m.degree() == 0;
    if (abs_c != 1 || is_constant_term) {
      out << abs_c.get_str();
      if (!is_constant_term) out << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (m.exponents[i] == 0) continue;
      if (!first_var) out << "*";
      first_var = false;
      out << "a" << (i + 1);
      if (m.exponents[i] > 1) out << "^" << m.exponents[i];
    }
  }
  return out.str();
}

}  // namespace gkm
