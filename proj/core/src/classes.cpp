#include "gkm/classes.hpp"

#include "gkm/errors.hpp"

namespace gkm {

namespace {

void check_size(std::size_t expected, std::size_t actual, const char* what) {
  if (expected != actual) {
    throw VertexMismatch(std::string(what) + ": class covers " + std::to_string(actual) +
                         " vertices, graph has " + std::to_string(expected));
  }
}

}  // namespace

bool membership(const EvenGkmGraph& g, const EvenClass& c) {
  check_size(g.vertex_count(), c.assignment.size(), "even membership");
  for (const auto& p : c.assignment) {
    if (p.num_vars() != g.torus_rank()) {
      throw VertexMismatch("class polynomial has wrong variable count");
    }
  }
  for (const auto& e : g.solid_edges()) {
    if (!divisible_by(c.assignment[e.u] - c.assignment[e.v], e.weight)) return false;
  }
  return true;
}

bool membership(const OddGkmGraph& g, const OddClass& c) {
  check_size(g.circle_count(), c.p.size(), "odd membership (P)");
  check_size(g.circle_count(), c.q.size(), "odd membership (Q)");
  for (std::size_t i = 0; i < c.p.size(); ++i) {
    if (c.p[i].num_vars() != g.torus_rank() || c.q[i].num_vars() != g.torus_rank()) {
      throw VertexMismatch("class polynomial has wrong variable count");
    }
  }
  for (std::size_t b = 0; b < g.boxes().size(); ++b) {
    const auto incident = g.box_incidences(b);
    const Weight& alpha = g.boxes()[b].weight;
    // P-chain holds for orientable and non-orientable components alike.
    for (std::size_t i = 0; i + 1 < incident.size(); ++i) {
      if (!divisible_by(c.p[incident[i]->circle] - c.p[incident[i + 1]->circle], alpha)) {
        return false;
      }
    }
    if (!g.boxes()[b].orientable) continue;
    Polynomial signed_sum(g.torus_rank());
    for (const auto* inc : incident) {
      const int sign = inc->sign.value_or(1);
      if (sign > 0) {
        signed_sum += c.q[inc->circle];
      } else {
        signed_sum -= c.q[inc->circle];
      }
    }
    if (!divisible_by(signed_sum, alpha)) return false;
  }
  return true;
}

EvenClass class_mul(const EvenClass& a, const EvenClass& b) {
  check_size(a.assignment.size(), b.assignment.size(), "even product");
  EvenClass out;
  out.assignment.reserve(a.assignment.size());
  for (std::size_t i = 0; i < a.assignment.size(); ++i) {
    out.assignment.push_back(a.assignment[i] * b.assignment[i]);
  }
  return out;
}

OddClass class_mul(const OddClass& a, const OddClass& b) {
  check_size(a.p.size(), b.p.size(), "odd product");
  OddClass out;
  out.p.reserve(a.p.size());
  out.q.reserve(a.p.size());
  // theta^2 = 0, so (P + Q theta)(P' + Q' theta) = PP' + (PQ' + P'Q) theta.
  for (std::size_t i = 0; i < a.p.size(); ++i) {
    out.p.push_back(a.p[i] * b.p[i]);
    out.q.push_back(a.p[i] * b.q[i] + b.p[i] * a.q[i]);
  }
  return out;
}

EvenClass class_add(const EvenClass& a, const EvenClass& b) {
  check_size(a.assignment.size(), b.assignment.size(), "even sum");
  EvenClass out;
  for (std::size_t i = 0; i < a.assignment.size(); ++i) {
    out.assignment.push_back(a.assignment[i] + b.assignment[i]);
  }
  return out;
}

OddClass class_add(const OddClass& a, const OddClass& b) {
  check_size(a.p.size(), b.p.size(), "odd sum");
  OddClass out;
  for (std::size_t i = 0; i < a.p.size(); ++i) {
    out.p.push_back(a.p[i] + b.p[i]);
    out.q.push_back(a.q[i] + b.q[i]);
  }
  return out;
}

EvenClass scalar_mul(const Polynomial& r, const EvenClass& c) {
  EvenClass out;
  for (const auto& f : c.assignment) out.assignment.push_back(r * f);
  return out;
}

OddClass scalar_mul(const Polynomial& r, const OddClass& c) {
  OddClass out;
  for (std::size_t i = 0; i < c.p.size(); ++i) {
    out.p.push_back(r * c.p[i]);
    out.q.push_back(r * c.q[i]);
  }
  return out;
}

EvenClass zero_even_class(const EvenGkmGraph& g) {
  EvenClass out;
  out.assignment.assign(g.vertex_count(), Polynomial::zero(g.torus_rank()));
  return out;
}

OddClass zero_odd_class(const OddGkmGraph& g) {
  OddClass out;
  out.p.assign(g.circle_count(), Polynomial::zero(g.torus_rank()));
  out.q.assign(g.circle_count(), Polynomial::zero(g.torus_rank()));
  return out;
}

EvenClass one_even_class(const EvenGkmGraph& g) {
  EvenClass out;
  out.assignment.assign(g.vertex_count(), Polynomial::constant(g.torus_rank(), Rational(1)));
  return out;
}

OddClass one_odd_class(const OddGkmGraph& g) {
  OddClass out = zero_odd_class(g);
  for (auto& p : out.p) p = Polynomial::constant(g.torus_rank(), Rational(1));
  return out;
}

}  // namespace gkm
