#ifndef GKM_GRAPH_IO_HPP
#define GKM_GRAPH_IO_HPP

#include <string>
#include <vector>

#include "gkm/automorphism.hpp"
#include "gkm/catalog.hpp"
#include "gkm/classes.hpp"
#include "gkm/root_datum.hpp"

namespace gkm {

struct ParsedGraph {
  AnyGraph graph;
  // Non-fatal notes, e.g. weights that had to be canonicalized.
  std::vector<std::string> warnings;
};

// Parses the UTF-8 JSON graph document ("kind": "even" | "odd").
// Throws ParseError with field diagnostics on malformed input.
ParsedGraph parse_graph(const std::string& text);

// Canonical serialization; weights are stored canonicalized and field order
// is fixed, so serialize . parse . serialize == serialize.
std::string serialize_graph(const EvenGkmGraph& g);
std::string serialize_graph(const OddGkmGraph& g);
std::string serialize_graph(const AnyGraph& g);

RootDatum parse_root_datum(const std::string& text);
std::string serialize_root_datum(const RootDatum& datum);

// Class documents pair vertex/circle ids with serialized polynomials
// (lists of (exponent vector, numerator, denominator) triples).
EvenClass parse_even_class(const std::string& text, const EvenGkmGraph& g);
OddClass parse_odd_class(const std::string& text, const OddGkmGraph& g);
std::string serialize_class(const EvenGkmGraph& g, const EvenClass& c);
std::string serialize_class(const OddGkmGraph& g, const OddClass& c);

// Automorphism groups are given by generator maps {"from": "to", ...}.
GraphAutomorphismGroup parse_automorphism_group(const std::string& text, const EvenGkmGraph& g);

// Series documents: either a bare JSON array of dimensions or an object
// carrying "dims" (possibly nested under "results").
std::vector<long long> parse_series(const std::string& text);

}  // namespace gkm

#endif  // GKM_GRAPH_IO_HPP
