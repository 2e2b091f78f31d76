#include "gkm/catalog.hpp"

#include "gkm/builders.hpp"
#include "gkm/errors.hpp"

namespace gkm {

namespace {

Weight w(std::vector<std::int64_t> v) { return Weight::canonical(std::move(v)); }

}  // namespace

EvenGkmGraph grassmann_g2r5_tilde() {
  std::vector<std::string> vertices = {"v1+", "v1-", "v2+", "v2-"};
  std::vector<EvenGkmGraph::SolidEdge> solid = {
      {0, 2, w({1, -1})},  // v1+ -- v2+  [a2-a1]
      {0, 3, w({1, 1})},   // v1+ -- v2-  [a2+a1]
      {1, 3, w({1, -1})},  // v1- -- v2-  [a2-a1]
      {1, 2, w({1, 1})},   // v1- -- v2+  [a2+a1]
  };
  std::vector<EvenGkmGraph::DottedEdge> dotted = {
      {0, w({1, 0})},
      {1, w({1, 0})},
      {2, w({0, 1})},
      {3, w({0, 1})},
  };
  return EvenGkmGraph(2, 3, std::move(vertices), std::move(solid), std::move(dotted));
}

EvenGkmGraph grassmann_g2r5() {
  std::vector<EvenGkmGraph::SolidEdge> solid = {
      {0, 1, w({1, -1})},
      {0, 1, w({1, 1})},
  };
  std::vector<EvenGkmGraph::DottedEdge> dotted = {
      {0, w({1, 0})},
      {1, w({0, 1})},
  };
  return EvenGkmGraph(2, 3, {"v1", "v2"}, std::move(solid), std::move(dotted));
}

EvenGkmGraph grassmann_g2r4() {
  std::vector<EvenGkmGraph::SolidEdge> solid = {
      {0, 1, w({1, -1})},
      {0, 1, w({1, 1})},
  };
  return EvenGkmGraph(2, 2, {"v1", "v2"}, std::move(solid), {});
}

OddGkmGraph grassmann_g3r6() {
  std::vector<std::string> circles = {"C1", "C2"};
  std::vector<OddGkmGraph::Box> boxes = {
      {"sum", w({1, 1}), true},    // [a2+a1], meets both circles
      {"diff", w({1, -1}), true},  // [a2-a1], meets both circles
      {"a1C1", w({1, 0}), true},
      {"a2C1", w({0, 1}), true},
      {"a1C2", w({1, 0}), true},
      {"a2C2", w({0, 1}), true},
  };
  std::vector<OddGkmGraph::Incidence> incidences = {
      {0, 0, 1}, {0, 1, -1}, {1, 0, 1}, {1, 1, -1},
      {2, 0, 1}, {3, 0, 1},  {4, 1, 1}, {5, 1, 1},
  };
  return OddGkmGraph(2, 4, std::move(circles), std::move(boxes), std::move(incidences));
}

EvenGkmGraph flag_fl3() {
  // Vertices are the one-line permutation labels of the paper's figure.
  std::vector<std::string> vertices = {"(123)", "(213)", "(132)", "(312)", "(321)", "(231)"};
  const Weight w21 = w({1, -1, 0});  // [a2-a1]
  const Weight w31 = w({1, 0, -1});  // [a3-a1]
  const Weight w32 = w({0, 1, -1});  // [a3-a2]
  auto idx = [](const char* id) -> std::size_t {
    const std::vector<std::string> order = {"(123)", "(213)", "(132)", "(312)", "(321)", "(231)"};
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (order[i] == id) return i;
    }
    throw InvalidInput("bad flag vertex");
  };
  std::vector<EvenGkmGraph::SolidEdge> solid = {
      {idx("(213)"), idx("(123)"), w21}, {idx("(132)"), idx("(231)"), w21},
      {idx("(312)"), idx("(321)"), w21}, {idx("(132)"), idx("(312)"), w31},
      {idx("(123)"), idx("(321)"), w31}, {idx("(213)"), idx("(231)"), w31},
      {idx("(321)"), idx("(231)"), w32}, {idx("(213)"), idx("(312)"), w32},
      {idx("(123)"), idx("(132)"), w32},
  };
  return EvenGkmGraph(3, 3, std::move(vertices), std::move(solid), {});
}

EvenGkmGraph projective_cp2() {
  std::vector<EvenGkmGraph::SolidEdge> solid = {
      {0, 1, w({1, -1, 0})},  // [a2-a1]
      {0, 2, w({1, 0, -1})},  // [a3-a1]
      {1, 2, w({0, 1, -1})},  // [a3-a2]
  };
  return EvenGkmGraph(3, 2, {"1", "2", "3"}, std::move(solid), {});
}

OddGkmGraph cohomogeneity_ng7() {
  std::vector<std::string> circles = {"1", "2", "3"};
  std::vector<OddGkmGraph::Box> boxes = {
      {"v31", w({1, 0, -1}), true},  // [a3-a1], circles 3 and 1
      {"v32", w({0, 1, -1}), true},  // [a3-a2], circles 3 and 2
      {"v21", w({1, -1, 0}), true},  // [a2-a1], circles 1 and 2
      {"v1", w({0, 1, -1}), true},   // [a3-a2] at circle 1
      {"v2", w({1, 0, -1}), true},   // [a3-a1] at circle 2
      {"v3", w({1, -1, 0}), true},   // [a2-a1] at circle 3
  };
  std::vector<OddGkmGraph::Incidence> incidences = {
      {0, 2, 1}, {0, 0, -1},  // v31
      {1, 2, 1}, {1, 1, -1},  // v32
      {2, 0, 1}, {2, 1, -1},  // v21
      {3, 0, 1},              // v1
      {4, 1, 1},              // v2
      {5, 2, 1},              // v3
  };
  return OddGkmGraph(3, 3, std::move(circles), std::move(boxes), std::move(incidences));
}

const std::vector<BuiltinFamily>& builtin_families() {
  static const std::vector<BuiltinFamily> families = {
      {"sphere-even", true, "S^{2n}: two fixed points, n parallel edges"},
      {"rp-even", true, "RP^{2n}: one fixed point, n dotted edges"},
      {"sphere-odd", true, "S^{2n+1}: one fixed circle, n boxes"},
      {"lens", true, "lens space L_m(1,l_1..l_n); same skeleton as S^{2n+1}"},
      {"g2r4", false, "G_2(R^4) GKM graph"},
      {"g2r5", false, "G_2(R^5) GKM graph"},
      {"g2r5-tilde", false, "oriented Grassmannian G~_2(R^5) GKM graph"},
      {"g3r6", false, "G_3(R^6) 1-skeleton graph"},
      {"g3r6-tilde", false, "G~_3(R^6) 1-skeleton graph (same as g3r6)"},
      {"fl3", false, "full flag manifold Fl(3) GKM graph"},
      {"cp2", false, "CP^2 GKM graph under T^3"},
      {"ng7", false, "cohomogeneity-one N_G^7 1-skeleton graph"},
  };
  return families;
}

AnyGraph build_builtin(const std::string& family, std::size_t n) {
  if (family == "sphere-even") return build_even_sphere(n);
  if (family == "rp-even") return build_even_rp(n);
  if (family == "sphere-odd" || family == "lens") return build_odd_sphere(n);
  if (family == "g2r4") return grassmann_g2r4();
  if (family == "g2r5") return grassmann_g2r5();
  if (family == "g2r5-tilde") return grassmann_g2r5_tilde();
  if (family == "g3r6" || family == "g3r6-tilde") return grassmann_g3r6();
  if (family == "fl3") return flag_fl3();
  if (family == "cp2") return projective_cp2();
  if (family == "ng7") return cohomogeneity_ng7();
  throw InvalidInput("unknown builtin family: " + family);
}

}  // namespace gkm
