// Command-line front end for the GKM graph cohomology library. Graphs
// stream through stdin/stdout as JSON documents so commands compose with
// pipes:
//
//   gkm build sphere-odd --n 2 | gkm series --max-degree 8
//
// Exit codes: 0 success, 1 validation/verification failure, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gkm/builders.hpp"
#include "gkm/catalog.hpp"
#include "gkm/errors.hpp"
#include "gkm/graph_io.hpp"
#include "gkm/oracle.hpp"
#include "gkm/solver.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CommandContext {
  bool json_output = false;
  std::string input_hash = "0";
};

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string hash_hex(const std::string& text) {
  std::ostringstream out;
  out << std::hex << fnv1a(text);
  return out.str();
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw gkm::InvalidInput("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void emit(const CommandContext& ctx, const std::string& command, const json& results,
          const std::string& text) {
  if (ctx.json_output) {
    json out;
    out["command"] = command;
    out["input_hash"] = ctx.input_hash;
    out["results"] = results;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

gkm::ParsedGraph load_graph(const std::string& path, CommandContext& ctx) {
  const std::string text = read_input(path);
  ctx.input_hash = hash_hex(text);
  gkm::ParsedGraph parsed = gkm::parse_graph(text);
  for (const auto& warning : parsed.warnings) {
    std::cerr << "warning: " << warning << "\n";
  }
  return parsed;
}

gkm::PoincareSeries series_of(const gkm::AnyGraph& graph, int max_degree, bool parallel) {
  return std::visit(
      [&](const auto& g) { return gkm::poincare_series(g, max_degree, parallel); }, graph);
}

// Recomputes low degrees with the auxiliary-unknown oracle and reports any
// divergence; returns false (after printing a diff) on mismatch.
bool cross_check_series(const gkm::AnyGraph& graph, const gkm::PoincareSeries& series) {
  const int cap = std::min(series.max_degree(), gkm::oracle::kDefaultDegreeCap);
  bool ok = true;
  for (int d = 0; d <= cap; ++d) {
    const long long expected = std::visit(
        [&](const auto& g) { return gkm::oracle::brute_force_dimension(g, d); }, graph);
    if (expected != series.at(d)) {
      std::cerr << "cross-check: degree " << d << ": solver " << series.at(d) << " != oracle "
                << expected << "\n";
      ok = false;
    }
  }
  return ok;
}

json series_json(const gkm::PoincareSeries& series) {
  json dims = json::array();
  for (long long c : series.coefficients) dims.push_back(c);
  return dims;
}

int run_validate(const std::string& path, CommandContext ctx) {
  gkm::ParsedGraph parsed = [&] {
    try {
      return load_graph(path, ctx);
    } catch (const gkm::ParseError& err) {
      // A malformed document is a validation failure for this command.
      std::cerr << "parse-error: " << err.what() << "\n";
      std::exit(kExitFailure);
    }
  }();
  const gkm::ValidationReport report = std::visit(
      [](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, gkm::EvenGkmGraph>) {
          return gkm::validate_even(g);
        } else {
          return gkm::validate_odd(g);
        }
      },
      parsed.graph);
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"code", v.code}, {"message", v.message}});
  }
  emit(ctx, "validate", {{"valid", report.ok()}, {"violations", violations}},
       report.ok() ? "valid\n" : report.to_string());
  return report.ok() ? kExitOk : kExitFailure;
}

int run_series(const std::string& path, int max_degree, bool cross_check, bool parallel,
               CommandContext ctx) {
  gkm::ParsedGraph parsed = load_graph(path, ctx);
  const gkm::PoincareSeries series = series_of(parsed.graph, max_degree, parallel);
  if (cross_check && !cross_check_series(parsed.graph, series)) return kExitFailure;
  emit(ctx, "series", {{"dims", series_json(series)}}, series.to_text());
  return kExitOk;
}

int run_betti(const std::string& path, int max_degree, int rank, bool cross_check, bool parallel,
              CommandContext ctx) {
  gkm::ParsedGraph parsed = load_graph(path, ctx);
  const std::size_t effective_rank =
      rank >= 0 ? static_cast<std::size_t>(rank)
                : std::visit([](const auto& g) { return g.torus_rank(); }, parsed.graph);
  const gkm::PoincareSeries series = series_of(parsed.graph, max_degree, parallel);
  if (cross_check && !cross_check_series(parsed.graph, series)) return kExitFailure;
  const gkm::BettiResult betti = gkm::betti_polynomial(series, effective_rank, max_degree);
  json coeffs = json::array();
  for (long long c : betti.coefficients) coeffs.push_back(c);
  emit(ctx, "betti",
       {{"coefficients", coeffs},
        {"verdict", betti.consistent() ? "consistent-with-formal" : "inconsistent"}},
       betti.to_text());
  return kExitOk;
}

int run_basis(const std::string& path, int degree, bool cross_check, CommandContext ctx) {
  gkm::ParsedGraph parsed = load_graph(path, ctx);
  json classes = json::array();
  std::ostringstream text;
  std::size_t dimension = 0;
  if (const auto* even = std::get_if<gkm::EvenGkmGraph>(&parsed.graph)) {
    const gkm::EvenBasis basis = gkm::degree_component_even(*even, degree);
    dimension = basis.dimension();
    for (std::size_t i = 0; i < basis.classes.size(); ++i) {
      classes.push_back(json::parse(gkm::serialize_class(*even, basis.classes[i])));
      text << "class " << i << ":\n";
      for (std::size_t v = 0; v < even->vertex_count(); ++v) {
        text << "  " << even->vertex_ids()[v] << ": "
             << basis.classes[i].assignment[v].to_string() << "\n";
      }
    }
  } else {
    const auto& odd = std::get<gkm::OddGkmGraph>(parsed.graph);
    const gkm::OddBasis basis = gkm::degree_component_odd(odd, degree);
    dimension = basis.dimension();
    for (std::size_t i = 0; i < basis.classes.size(); ++i) {
      classes.push_back(json::parse(gkm::serialize_class(odd, basis.classes[i])));
      text << "class " << i << ":\n";
      for (std::size_t c = 0; c < odd.circle_count(); ++c) {
        text << "  " << odd.circle_ids()[c] << ": P = " << basis.classes[i].p[c].to_string()
             << ", Q = " << basis.classes[i].q[c].to_string() << "\n";
      }
    }
  }
  if (cross_check && degree <= gkm::oracle::kDefaultDegreeCap) {
    const long long expected = std::visit(
        [&](const auto& g) { return gkm::oracle::brute_force_dimension(g, degree); },
        parsed.graph);
    if (expected != static_cast<long long>(dimension)) {
      std::cerr << "cross-check: degree " << degree << ": solver " << dimension << " != oracle "
                << expected << "\n";
      return kExitFailure;
    }
  }
  text << "dimension: " << dimension << "\n";
  emit(ctx, "basis", {{"degree", degree}, {"dimension", dimension}, {"classes", classes}},
       text.str());
  return kExitOk;
}

int run_generators(const std::string& path, int max_degree, bool cross_check, CommandContext ctx) {
  gkm::ParsedGraph parsed = load_graph(path, ctx);
  if (cross_check) {
    const gkm::PoincareSeries series =
        series_of(parsed.graph, std::min(max_degree, gkm::oracle::kDefaultDegreeCap), false);
    if (!cross_check_series(parsed.graph, series)) return kExitFailure;
  }
  json generators = json::array();
  std::ostringstream text;
  if (const auto* even = std::get_if<gkm::EvenGkmGraph>(&parsed.graph)) {
    for (const auto& gen : gkm::module_generators(*even, max_degree)) {
      generators.push_back({{"degree", gen.degree},
                            {"class", json::parse(gkm::serialize_class(*even, gen.cls))}});
      text << "degree " << gen.degree << ":\n";
      for (std::size_t v = 0; v < even->vertex_count(); ++v) {
        text << "  " << even->vertex_ids()[v] << ": " << gen.cls.assignment[v].to_string() << "\n";
      }
    }
  } else {
    const auto& odd = std::get<gkm::OddGkmGraph>(parsed.graph);
    for (const auto& gen : gkm::module_generators(odd, max_degree)) {
      generators.push_back(
          {{"degree", gen.degree}, {"class", json::parse(gkm::serialize_class(odd, gen.cls))}});
      text << "degree " << gen.degree << ":\n";
      for (std::size_t c = 0; c < odd.circle_count(); ++c) {
        text << "  " << odd.circle_ids()[c] << ": P = " << gen.cls.p[c].to_string()
             << ", Q = " << gen.cls.q[c].to_string() << "\n";
      }
    }
  }
  emit(ctx, "generators", {{"generators", generators}}, text.str());
  return kExitOk;
}

int run_member(const std::string& graph_path, const std::string& class_path, bool cross_check,
               CommandContext ctx) {
  const std::string graph_text = read_input(graph_path);
  const std::string class_text = read_input(class_path);
  ctx.input_hash = hash_hex(graph_text + class_text);
  gkm::ParsedGraph parsed = gkm::parse_graph(graph_text);

  bool member = false;
  if (const auto* even = std::get_if<gkm::EvenGkmGraph>(&parsed.graph)) {
    const gkm::EvenClass cls = gkm::parse_even_class(class_text, *even);
    member = gkm::membership(*even, cls);
    if (cross_check) {
      for (const auto& e : even->solid_edges()) {
        const gkm::Polynomial diff = cls.assignment[e.u] - cls.assignment[e.v];
        if (gkm::divisible_by(diff, e.weight) !=
            gkm::oracle::divisibility_by_division(diff, e.weight)) {
          std::cerr << "cross-check: divisibility routes disagree on edge weight "
                    << e.weight.to_string() << "\n";
          return kExitFailure;
        }
      }
    }
  } else {
    const auto& odd = std::get<gkm::OddGkmGraph>(parsed.graph);
    const gkm::OddClass cls = gkm::parse_odd_class(class_text, odd);
    member = gkm::membership(odd, cls);
    if (cross_check) {
      for (std::size_t b = 0; b < odd.boxes().size(); ++b) {
        const auto incident = odd.box_incidences(b);
        for (std::size_t i = 0; i + 1 < incident.size(); ++i) {
          const gkm::Polynomial diff =
              cls.p[incident[i]->circle] - cls.p[incident[i + 1]->circle];
          if (gkm::divisible_by(diff, odd.boxes()[b].weight) !=
              gkm::oracle::divisibility_by_division(diff, odd.boxes()[b].weight)) {
            std::cerr << "cross-check: divisibility routes disagree at box "
                      << odd.boxes()[b].id << "\n";
            return kExitFailure;
          }
        }
      }
    }
  }
  emit(ctx, "member", {{"member", member}}, member ? "member: true\n" : "member: false\n");
  return member ? kExitOk : kExitFailure;
}

int run_build(const std::string& family, std::size_t n, const std::string& input_path,
              CommandContext ctx) {
  if (family == "product-circle") {
    gkm::ParsedGraph parsed = load_graph(input_path, ctx);
    const auto* even = std::get_if<gkm::EvenGkmGraph>(&parsed.graph);
    if (!even) throw gkm::InvalidGraph("product-circle expects an even graph document");
    const std::string doc = gkm::serialize_graph(gkm::product_with_circle(*even));
    emit(ctx, "build", json::parse(doc), doc);
    return kExitOk;
  }
  if (family == "weyl") {
    const std::string text = read_input(input_path);
    ctx.input_hash = hash_hex(text);
    const gkm::RootDatum datum = gkm::parse_root_datum(text);
    const std::string doc = gkm::serialize_graph(gkm::build_weyl_coset_graph(datum));
    emit(ctx, "build", json::parse(doc), doc);
    return kExitOk;
  }
  ctx.input_hash = hash_hex(family + ":" + std::to_string(n));
  const gkm::AnyGraph graph = [&] {
    try {
      return gkm::build_builtin(family, n);
    } catch (const gkm::InvalidInput& err) {
      std::cerr << "usage: " << err.what() << "\n";
      std::exit(kExitUsage);
    }
  }();
  const std::string doc = gkm::serialize_graph(graph);
  emit(ctx, "build", json::parse(doc), doc);
  return kExitOk;
}

int run_quotient(const std::string& graph_path, const std::string& group_path,
                 CommandContext ctx) {
  const std::string graph_text = read_input(graph_path);
  const std::string group_text = read_input(group_path);
  ctx.input_hash = hash_hex(graph_text + group_text);
  gkm::ParsedGraph parsed = gkm::parse_graph(graph_text);
  const auto* even = std::get_if<gkm::EvenGkmGraph>(&parsed.graph);
  if (!even) throw gkm::InvalidGraph("quotient expects an even graph document");
  const gkm::GraphAutomorphismGroup group = gkm::parse_automorphism_group(group_text, *even);
  const std::string doc = gkm::serialize_graph(gkm::quotient_graph(*even, group));
  emit(ctx, "quotient", json::parse(doc), doc);
  return kExitOk;
}

int run_compare_series(const std::string& path_a, const std::string& path_b, int shift,
                       int max_degree, CommandContext ctx) {
  const std::string text_a = read_input(path_a);
  const std::string text_b = read_input(path_b);
  ctx.input_hash = hash_hex(text_a + text_b);
  gkm::PoincareSeries a{gkm::parse_series(text_a)};
  gkm::PoincareSeries b{gkm::parse_series(text_b)};
  const int top = max_degree >= 0 ? max_degree : std::min(a.max_degree(), b.max_degree());
  if (top > a.max_degree() || top > b.max_degree()) {
    throw gkm::InvalidInput("series are not computed to the requested degree");
  }
  const bool equal = gkm::series_factor_check(a, b, shift, top);
  emit(ctx, "compare-series", {{"equal", equal}, {"shift", shift}, {"max_degree", top}},
       equal ? "equal: true\n" : "equal: false\n");
  return equal ? kExitOk : kExitFailure;
}

int run_weyl(const std::string& path, std::size_t cap, CommandContext ctx) {
  const std::string text = read_input(path);
  ctx.input_hash = hash_hex(text);
  const gkm::RootDatum datum = gkm::parse_root_datum(text);
  const std::string doc = gkm::serialize_graph(gkm::build_weyl_coset_graph(datum, cap));
  emit(ctx, "weyl", json::parse(doc), doc);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GKM graph equivariant cohomology calculator"};
  app.require_subcommand(1);

  // Shared option storage; each subcommand registers the flags it uses.
  std::string graph_path = "-";
  std::string second_path;
  std::string class_file;
  std::string group_file;
  int max_degree = 16;
  int degree = 0;
  int rank = -1;
  int shift = 0;
  int compare_max_degree = -1;
  std::size_t n = 1;
  std::size_t weyl_cap = gkm::kDefaultWeylCap;
  std::string family;
  bool json_output = false;
  bool cross_check = false;
  bool parallel = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", json_output, "machine-readable JSON output");
  };

  CLI::App* validate = app.add_subcommand("validate", "check the GKM graph invariants");
  validate->add_option("graph", graph_path, "graph document ('-' for stdin)");
  add_common(validate);

  CLI::App* series = app.add_subcommand("series", "graded dimensions of the solution space");
  series->add_option("graph", graph_path, "graph document ('-' for stdin)");
  series->add_option("--max-degree", max_degree, "top cohomological degree")
      ->check(CLI::NonNegativeNumber);
  series->add_flag("--cross-check", cross_check, "verify low degrees against the oracle");
  series->add_flag("--parallel", parallel, "evaluate degrees concurrently");
  add_common(series);

  CLI::App* betti = app.add_subcommand("betti", "extract candidate Betti numbers");
  betti->add_option("graph", graph_path, "graph document ('-' for stdin)");
  betti->add_option("--max-degree", max_degree, "top cohomological degree")
      ->check(CLI::NonNegativeNumber);
  betti->add_option("--rank", rank, "torus rank to divide out (default: the graph's)");
  betti->add_flag("--cross-check", cross_check, "verify low degrees against the oracle");
  betti->add_flag("--parallel", parallel, "evaluate degrees concurrently");
  add_common(betti);

  CLI::App* basis = app.add_subcommand("basis", "canonical basis of one graded layer");
  basis->add_option("graph", graph_path, "graph document ('-' for stdin)");
  basis->add_option("--degree", degree, "cohomological degree")->check(CLI::NonNegativeNumber);
  basis->add_flag("--cross-check", cross_check, "verify the dimension against the oracle");
  add_common(basis);

  CLI::App* generators = app.add_subcommand("generators", "minimal module generators");
  generators->add_option("graph", graph_path, "graph document ('-' for stdin)");
  generators->add_option("--max-degree", max_degree, "top cohomological degree")
      ->check(CLI::NonNegativeNumber);
  generators->add_flag("--cross-check", cross_check, "verify low degrees against the oracle");
  add_common(generators);

  CLI::App* member = app.add_subcommand("member", "test a class against the congruences");
  member->add_option("graph", graph_path, "graph document ('-' for stdin)");
  member->add_option("--class-file", class_file, "class document")->required();
  member->add_flag("--cross-check", cross_check, "compare both divisibility routes");
  add_common(member);

  std::size_t lens_order = 2;
  CLI::App* build = app.add_subcommand("build", "emit a builtin graph document");
  build->add_option("family", family, "builtin family name")->required();
  build->add_option("--n", n, "size parameter for the parametric families");
  build->add_option("--m", lens_order,
                    "lens space order; the skeleton graph does not depend on it");
  build->add_option("--input", second_path, "input document for product-circle/weyl");
  add_common(build);

  CLI::App* quotient = app.add_subcommand("quotient", "quotient by an automorphism group");
  quotient->add_option("graph", graph_path, "graph document ('-' for stdin)");
  quotient->add_option("--group-file", group_file, "automorphism generators document")->required();
  add_common(quotient);

  CLI::App* compare = app.add_subcommand("compare-series", "trivial-extension dimension identity");
  compare->add_option("a", graph_path, "series document A")->required();
  compare->add_option("b", second_path, "series document B")->required();
  compare->add_option("--shift", shift, "degree of the extension generator")->required();
  compare->add_option("--max-degree", compare_max_degree, "top degree to compare");
  add_common(compare);

  CLI::App* weyl = app.add_subcommand("weyl", "Weyl coset graph from a root datum");
  weyl->add_option("rootdatum", graph_path, "root datum document ('-' for stdin)");
  weyl->add_option("--cap", weyl_cap, "largest allowed reflection group order");
  add_common(weyl);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion") {
      return app.exit(e);
    }
    app.exit(e);
    return kExitUsage;
  }

  CommandContext ctx;
  ctx.json_output = json_output;

  try {
    if (validate->parsed()) return run_validate(graph_path, ctx);
    if (series->parsed()) return run_series(graph_path, max_degree, cross_check, parallel, ctx);
    if (betti->parsed()) {
      return run_betti(graph_path, max_degree, rank, cross_check, parallel, ctx);
    }
    if (basis->parsed()) return run_basis(graph_path, degree, cross_check, ctx);
    if (generators->parsed()) return run_generators(graph_path, max_degree, cross_check, ctx);
    if (member->parsed()) return run_member(graph_path, class_file, cross_check, ctx);
    if (build->parsed()) return run_build(family, n, second_path, ctx);
    if (quotient->parsed()) return run_quotient(graph_path, group_file, ctx);
    if (compare->parsed()) {
      return run_compare_series(graph_path, second_path, shift, compare_max_degree, ctx);
    }
    if (weyl->parsed()) return run_weyl(graph_path, weyl_cap, ctx);
  } catch (const gkm::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitFailure;
  } catch (const std::invalid_argument& err) {
    std::cerr << "usage: " << err.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
