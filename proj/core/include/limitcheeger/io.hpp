#pragma once

#include <string>

#include "limitcheeger/graphing.hpp"
#include "limitcheeger/graphon.hpp"

namespace limitcheeger {

// Reads a whole file; missing or unreadable paths raise input_error.
std::string load_file(const std::string& path);

// Comma-separated "lo:hi" pairs, e.g. "0:0.25,0.5:0.75".
IntervalSet parse_interval_set(const std::string& text);
std::string format_interval_set(const IntervalSet& a);

// {"cuts":[0,...,1],"matrix":[[...],...]}
StepGraphon parse_graphon_json(const std::string& text);
std::string graphon_to_json(const StepGraphon& w);

// Header line "n", then "u v w" edges (1-based); symmetric closure is
// applied and a duplicate edge is an input error.
WeightedGraph parse_graph_text(const std::string& text);
std::string graph_to_text(const WeightedGraph& g);

// {"atoms":[[x,m],...],"atom_edges":[[i,j],...]} or
// {"maps":[{"domain":"lo:hi,...","offset":t},...]}
Graphing parse_graphing_json(const std::string& text);
std::string graphing_to_json(const Graphing& g);

}  // namespace limitcheeger
