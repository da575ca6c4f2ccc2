#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "chronos/temporal_graph.hpp"

namespace chronos {

// Edge-list text: one "u v t" per line, '#' starts a comment, blank lines are
// ignored. Vertex ids are non-negative integers and n is max id + 1 unless a
// "# n=<N>" header asks for more (serialize_edge_list writes one so isolated
// trailing vertices survive a round trip). The result is normalized.
TemporalGraph parse_edge_list(std::string_view text);
TemporalGraph read_edge_list(std::istream& in);
std::string serialize_edge_list(const TemporalGraph& g);

// {"n": N, "T": T, "edges": [[u, v, t], ...]}
TemporalGraph parse_json(std::string_view text);
std::string serialize_json(const TemporalGraph& g);

// Dispatches on the first non-blank character ('{' means JSON).
TemporalGraph parse_any(std::string_view text);

}  // namespace chronos
