#include "gkm/graph_io.hpp"

#include <nlohmann/json.hpp>

#include "gkm/errors.hpp"

namespace gkm {

namespace {

using json = nlohmann::ordered_json;

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("document is not valid JSON");
  return doc;
}

std::string id_field(const json& value, const char* where) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  throw ParseError(std::string(where) + ": id must be a string or integer");
}

std::vector<std::int64_t> int_vector(const json& value, const char* where) {
  if (!value.is_array()) throw ParseError(std::string(where) + ": expected an integer array");
  std::vector<std::int64_t> out;
  for (const auto& entry : value) {
    if (!entry.is_number_integer()) {
      throw ParseError(std::string(where) + ": expected an integer array");
    }
    out.push_back(entry.get<std::int64_t>());
  }
  return out;
}

Weight weight_field(const json& value, std::size_t rank, const char* where,
                    std::vector<std::string>* warnings) {
  std::vector<std::int64_t> raw = int_vector(value, where);
  if (raw.size() != rank) {
    throw ParseError(std::string(where) + ": weight length does not match torus_rank");
  }
  const bool canonical = Weight::is_canonical(raw);
  Weight w = [&] {
    try {
      return Weight::canonical(raw);
    } catch (const ZeroVector&) {
      throw ParseError(std::string(where) + ": weight must be nonzero");
    }
  }();
  if (!canonical && warnings) {
    warnings->push_back(std::string(where) + ": weight " + json(raw).dump() +
                        " canonicalized to " + w.to_string());
  }
  return w;
}

std::size_t size_field(const json& doc, const char* name) {
  if (!doc.contains(name) || !doc[name].is_number_integer() || doc[name].get<long long>() < 0) {
    throw ParseError(std::string(name) + ": expected a nonnegative integer");
  }
  return doc[name].get<std::size_t>();
}

std::vector<std::string> vertex_list(const json& doc) {
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ParseError("vertices: expected an array");
  }
  std::vector<std::string> ids;
  for (const auto& v : doc["vertices"]) ids.push_back(id_field(v, "vertices"));
  return ids;
}

ParsedGraph parse_even(const json& doc) {
  std::vector<std::string> warnings;
  const std::size_t rank = size_field(doc, "torus_rank");
  const std::size_t degree = size_field(doc, "gkm_degree");
  std::vector<std::string> ids = vertex_list(doc);

  EvenGkmGraph lookup = [&] {
    try {
      return EvenGkmGraph(rank, degree, ids, {}, {});
    } catch (const InvalidInput& err) {
      throw ParseError(err.what());
    }
  }();
  std::vector<EvenGkmGraph::SolidEdge> solid;
  if (doc.contains("solid_edges")) {
    if (!doc["solid_edges"].is_array()) throw ParseError("solid_edges: expected an array");
    for (const auto& e : doc["solid_edges"]) {
      if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e.contains("weight")) {
        throw ParseError("solid_edges: each entry needs u, v, weight");
      }
      std::size_t u, v;
      try {
        u = lookup.vertex_index(id_field(e["u"], "solid_edges.u"));
        v = lookup.vertex_index(id_field(e["v"], "solid_edges.v"));
      } catch (const UnknownVertex& err) {
        throw ParseError(std::string("solid_edges: ") + err.what());
      }
      solid.push_back({u, v, weight_field(e["weight"], rank, "solid_edges.weight", &warnings)});
    }
  }
  std::vector<EvenGkmGraph::DottedEdge> dotted;
  if (doc.contains("dotted_edges")) {
    if (!doc["dotted_edges"].is_array()) throw ParseError("dotted_edges: expected an array");
    for (const auto& e : doc["dotted_edges"]) {
      if (!e.is_object() || !e.contains("v") || !e.contains("weight")) {
        throw ParseError("dotted_edges: each entry needs v, weight");
      }
      std::size_t v;
      try {
        v = lookup.vertex_index(id_field(e["v"], "dotted_edges.v"));
      } catch (const UnknownVertex& err) {
        throw ParseError(std::string("dotted_edges: ") + err.what());
      }
      dotted.push_back({v, weight_field(e["weight"], rank, "dotted_edges.weight", &warnings)});
    }
  }
  try {
    return {EvenGkmGraph(rank, degree, std::move(ids), std::move(solid), std::move(dotted)),
            std::move(warnings)};
  } catch (const InvalidInput& err) {
    throw ParseError(err.what());
  }
}

ParsedGraph parse_odd(const json& doc) {
  std::vector<std::string> warnings;
  const std::size_t rank = size_field(doc, "torus_rank");
  std::vector<std::string> ids = vertex_list(doc);

  std::vector<OddGkmGraph::Box> boxes;
  std::vector<std::string> box_ids;
  if (!doc.contains("boxes") || !doc["boxes"].is_array()) {
    throw ParseError("boxes: expected an array");
  }
  for (const auto& b : doc["boxes"]) {
    if (!b.is_object() || !b.contains("id") || !b.contains("weight") || !b.contains("orientable")) {
      throw ParseError("boxes: each entry needs id, weight, orientable");
    }
    if (!b["orientable"].is_boolean()) throw ParseError("boxes.orientable: expected a boolean");
    boxes.push_back({id_field(b["id"], "boxes.id"),
                     weight_field(b["weight"], rank, "boxes.weight", &warnings),
                     b["orientable"].get<bool>()});
    box_ids.push_back(boxes.back().id);
  }

  auto find_index = [](const std::vector<std::string>& list, const std::string& id,
                       const char* where) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i] == id) return i;
    }
    throw ParseError(std::string(where) + ": unknown id " + id);
  };

  std::vector<OddGkmGraph::Incidence> incidences;
  if (!doc.contains("incidences") || !doc["incidences"].is_array()) {
    throw ParseError("incidences: expected an array");
  }
  for (const auto& inc : doc["incidences"]) {
    if (!inc.is_object() || !inc.contains("box") || !inc.contains("circle") ||
        !inc.contains("sign")) {
      throw ParseError("incidences: each entry needs box, circle, sign");
    }
    const std::size_t box = find_index(box_ids, id_field(inc["box"], "incidences.box"),
                                       "incidences.box");
    const std::size_t circle = find_index(ids, id_field(inc["circle"], "incidences.circle"),
                                          "incidences.circle");
    std::optional<int> sign;
    if (!inc["sign"].is_null()) {
      if (!inc["sign"].is_number_integer()) {
        throw ParseError("incidences.sign: expected 1, -1 or null");
      }
      const int s = inc["sign"].get<int>();
      if (s != 1 && s != -1) throw ParseError("incidences.sign: expected 1, -1 or null");
      if (!boxes[box].orientable) {
        throw ParseError("incidences.sign: non-orientable box " + box_ids[box] +
                         " cannot carry a sign");
      }
      sign = s;
    }
    incidences.push_back({box, circle, sign});
  }

  // The odd document does not spell out the per-circle degree; take it from
  // the first circle and leave disagreements to the validator.
  std::vector<std::size_t> circle_degree(ids.size(), 0);
  for (const auto& inc : incidences) circle_degree[inc.circle] += 1;
  const std::size_t degree = ids.empty() ? 0 : circle_degree[0];

  try {
    return {OddGkmGraph(rank, degree, std::move(ids), std::move(boxes), std::move(incidences)),
            std::move(warnings)};
  } catch (const InvalidInput& err) {
    throw ParseError(err.what());
  }
}

json weight_to_json(const Weight& w) {
  json out = json::array();
  for (std::int64_t c : w.coeffs()) out.push_back(c);
  return out;
}

json polynomial_to_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) {
    json exps = json::array();
    for (int e : m.exponents) exps.push_back(e);
    out.push_back(json::array({exps, c.get_num().get_str(), c.get_den().get_str()}));
  }
  return out;
}

Polynomial polynomial_from_json(const json& value, std::size_t num_vars, const char* where) {
  if (!value.is_array()) throw ParseError(std::string(where) + ": expected a term array");
  Polynomial p(num_vars);
  for (const auto& term : value) {
    if (!term.is_array() || term.size() != 3) {
      throw ParseError(std::string(where) + ": each term is [exponents, numerator, denominator]");
    }
    std::vector<std::int64_t> raw = int_vector(term[0], where);
    std::vector<int> exps;
    for (std::int64_t e : raw) {
      if (e < 0) throw ParseError(std::string(where) + ": exponents must be nonnegative");
      exps.push_back(static_cast<int>(e));
    }
    if (exps.size() != num_vars) {
      throw ParseError(std::string(where) + ": exponent vector has wrong length");
    }
    auto scalar = [&](const json& v) -> Integer {
      if (v.is_number_integer()) return Integer(v.get<long long>());
      if (v.is_string()) {
        try {
          return Integer(v.get<std::string>());
        } catch (const std::invalid_argument&) {
          throw ParseError(std::string(where) + ": malformed integer literal");
        }
      }
      throw ParseError(std::string(where) + ": numerator/denominator must be integer or string");
    };
    const Integer num = scalar(term[1]);
    const Integer den = scalar(term[2]);
    if (den <= 0) throw ParseError(std::string(where) + ": denominator must be positive");
    p.add_term(Monomial(std::move(exps)), make_rational(num, den));
  }
  return p;
}

}  // namespace

ParsedGraph parse_graph(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) {
    throw ParseError("kind: expected \"even\" or \"odd\"");
  }
  const std::string kind = doc["kind"].get<std::string>();
  if (kind == "even") return parse_even(doc);
  if (kind == "odd") return parse_odd(doc);
  throw ParseError("kind: unknown graph kind \"" + kind + "\"");
}

std::string serialize_graph(const EvenGkmGraph& g) {
  json doc;
  doc["kind"] = "even";
  doc["torus_rank"] = g.torus_rank();
  doc["gkm_degree"] = g.gkm_degree();
  doc["vertices"] = g.vertex_ids();
  json solid = json::array();
  for (const auto& e : g.solid_edges()) {
    solid.push_back({{"u", g.vertex_ids()[e.u]},
                     {"v", g.vertex_ids()[e.v]},
                     {"weight", weight_to_json(e.weight)}});
  }
  doc["solid_edges"] = std::move(solid);
  json dotted = json::array();
  for (const auto& e : g.dotted_edges()) {
    dotted.push_back({{"v", g.vertex_ids()[e.v]}, {"weight", weight_to_json(e.weight)}});
  }
  doc["dotted_edges"] = std::move(dotted);
  return doc.dump(2) + "\n";
}

std::string serialize_graph(const OddGkmGraph& g) {
  json doc;
  doc["kind"] = "odd";
  doc["torus_rank"] = g.torus_rank();
  doc["vertices"] = g.circle_ids();
  json boxes = json::array();
  for (const auto& b : g.boxes()) {
    boxes.push_back(
        {{"id", b.id}, {"weight", weight_to_json(b.weight)}, {"orientable", b.orientable}});
  }
  doc["boxes"] = std::move(boxes);
  json incidences = json::array();
  for (const auto& inc : g.incidences()) {
    json entry;
    entry["box"] = g.boxes()[inc.box].id;
    entry["circle"] = g.circle_ids()[inc.circle];
    entry["sign"] = inc.sign ? json(*inc.sign) : json(nullptr);
    incidences.push_back(std::move(entry));
  }
  doc["incidences"] = std::move(incidences);
  return doc.dump(2) + "\n";
}

std::string serialize_graph(const AnyGraph& g) {
  return std::visit([](const auto& graph) { return serialize_graph(graph); }, g);
}

RootDatum parse_root_datum(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  RootDatum datum;
  datum.torus_rank = size_field(doc, "torus_rank");
  if (!doc.contains("positive_roots_G") || !doc["positive_roots_G"].is_array()) {
    throw ParseError("positive_roots_G: expected an array of integer vectors");
  }
  for (const auto& root : doc["positive_roots_G"]) {
    auto v = int_vector(root, "positive_roots_G");
    if (v.size() != datum.torus_rank) {
      throw ParseError("positive_roots_G: root length does not match torus_rank");
    }
    datum.positive_roots_g.push_back(std::move(v));
  }
  if (doc.contains("positive_roots_K")) {
    if (!doc["positive_roots_K"].is_array()) {
      throw ParseError("positive_roots_K: expected an array of integer vectors");
    }
    for (const auto& root : doc["positive_roots_K"]) {
      auto v = int_vector(root, "positive_roots_K");
      if (v.size() != datum.torus_rank) {
        throw ParseError("positive_roots_K: root length does not match torus_rank");
      }
      datum.positive_roots_k.push_back(std::move(v));
    }
  }
  return datum;
}

std::string serialize_root_datum(const RootDatum& datum) {
  json doc;
  doc["torus_rank"] = datum.torus_rank;
  doc["positive_roots_G"] = datum.positive_roots_g;
  doc["positive_roots_K"] = datum.positive_roots_k;
  return doc.dump(2) + "\n";
}

EvenClass parse_even_class(const std::string& text, const EvenGkmGraph& g) {
  const json doc = parse_json(text);
  if (!doc.is_object() || doc.value("kind", "") != "even-class" || !doc.contains("assignment") ||
      !doc["assignment"].is_object()) {
    throw ParseError("expected {\"kind\":\"even-class\",\"assignment\":{vertex: poly}}");
  }
  EvenClass c;
  c.assignment.assign(g.vertex_count(), Polynomial::zero(g.torus_rank()));
  std::vector<bool> seen(g.vertex_count(), false);
  for (const auto& [id, poly] : doc["assignment"].items()) {
    std::size_t v;
    try {
      v = g.vertex_index(id);
    } catch (const UnknownVertex& err) {
      throw VertexMismatch(err.what());
    }
    seen[v] = true;
    c.assignment[v] = polynomial_from_json(poly, g.torus_rank(), "assignment");
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!seen[v]) throw VertexMismatch("assignment is missing vertex " + g.vertex_ids()[v]);
  }
  return c;
}

OddClass parse_odd_class(const std::string& text, const OddGkmGraph& g) {
  const json doc = parse_json(text);
  if (!doc.is_object() || doc.value("kind", "") != "odd-class" || !doc.contains("assignment") ||
      !doc["assignment"].is_object()) {
    throw ParseError("expected {\"kind\":\"odd-class\",\"assignment\":{circle: {P,Q}}}");
  }
  OddClass c;
  c.p.assign(g.circle_count(), Polynomial::zero(g.torus_rank()));
  c.q.assign(g.circle_count(), Polynomial::zero(g.torus_rank()));
  std::vector<bool> seen(g.circle_count(), false);
  for (const auto& [id, parts] : doc["assignment"].items()) {
    std::size_t circle;
    try {
      circle = g.circle_index(id);
    } catch (const UnknownVertex& err) {
      throw VertexMismatch(err.what());
    }
    seen[circle] = true;
    if (!parts.is_object()) throw ParseError("assignment: expected {\"P\": .., \"Q\": ..}");
    if (parts.contains("P")) {
      c.p[circle] = polynomial_from_json(parts["P"], g.torus_rank(), "assignment.P");
    }
    if (parts.contains("Q")) {
      c.q[circle] = polynomial_from_json(parts["Q"], g.torus_rank(), "assignment.Q");
    }
  }
  for (std::size_t i = 0; i < g.circle_count(); ++i) {
    if (!seen[i]) throw VertexMismatch("assignment is missing circle " + g.circle_ids()[i]);
  }
  return c;
}

std::string serialize_class(const EvenGkmGraph& g, const EvenClass& c) {
  json doc;
  doc["kind"] = "even-class";
  json assignment;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    assignment[g.vertex_ids()[v]] = polynomial_to_json(c.assignment[v]);
  }
  doc["assignment"] = std::move(assignment);
  return doc.dump(2) + "\n";
}

std::string serialize_class(const OddGkmGraph& g, const OddClass& c) {
  json doc;
  doc["kind"] = "odd-class";
  json assignment;
  for (std::size_t i = 0; i < g.circle_count(); ++i) {
    assignment[g.circle_ids()[i]] = {{"P", polynomial_to_json(c.p[i])},
                                     {"Q", polynomial_to_json(c.q[i])}};
  }
  doc["assignment"] = std::move(assignment);
  return doc.dump(2) + "\n";
}

GraphAutomorphismGroup parse_automorphism_group(const std::string& text, const EvenGkmGraph& g) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("generators") || !doc["generators"].is_array()) {
    throw ParseError("expected {\"generators\": [{vertex: image, ...}, ...]}");
  }
  std::vector<std::map<std::string, std::string>> maps;
  for (const auto& gen : doc["generators"]) {
    if (!gen.is_object()) throw ParseError("generators: each generator is an id -> id object");
    std::map<std::string, std::string> map;
    for (const auto& [from, to] : gen.items()) {
      map[from] = id_field(to, "generators");
    }
    maps.push_back(std::move(map));
  }
  try {
    return GraphAutomorphismGroup::generate_from_ids(g, maps);
  } catch (const UnknownVertex& err) {
    throw ParseError(std::string("generators: ") + err.what());
  }
}

std::vector<long long> parse_series(const std::string& text) {
  json doc = parse_json(text);
  if (doc.is_object()) {
    if (doc.contains("results") && doc["results"].is_object() &&
        doc["results"].contains("dims")) {
      doc = doc["results"]["dims"];
    } else if (doc.contains("dims")) {
      doc = doc["dims"];
    }
  }
  if (!doc.is_array()) {
    throw ParseError("expected a dimension array, possibly under results.dims");
  }
  std::vector<long long> dims;
  for (const auto& entry : doc) {
    if (!entry.is_number_integer() || entry.get<long long>() < 0) {
      throw ParseError("series entries must be nonnegative integers");
    }
    dims.push_back(entry.get<long long>());
  }
  return dims;
}

}  // namespace gkm
