#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chronos/reductions.hpp"
#include "chronos/temporal_graph.hpp"
#include "chronos/tfvs.hpp"

namespace chronos {

enum class Algo { automatic, oracle, forest, vimw, tfvs, fen };

const char* algo_name(Algo a);
std::optional<Algo> parse_algo(std::string_view name);

struct DispatchCaps {
  std::size_t vimw = 10;
  std::size_t fen = 20;
  std::size_t tfvs = 6;
  std::uint64_t oracle = 1'000'000;      // partial paths explored
  std::uint64_t tfvs_node_limit = 200'000;  // search budget when measuring |X|
};

struct GraphParameters {
  std::size_t n = 0;
  std::size_t time_edges = 0;
  Time lifetime = 0;
  bool forest = false;
  std::size_t vimw = 0;
  std::vector<std::size_t> vim_histogram;  // bag size -> number of steps
  std::size_t fen = 0;
  std::size_t fen_path_links = 0;
  // Minimum timed FVS when the search finished within `tfvs_cap`, else
  // nullopt; tfvs_budget_exceeded tells the two failure modes apart.
  std::optional<TimedFVS> tfvs;
  bool tfvs_budget_exceeded = false;
};

// fen_path_links needs terminals, so it is measured for (s, z) when given.
GraphParameters measure_parameters(const TemporalGraph& g, std::optional<std::size_t> tfvs_cap,
                                   std::uint64_t tfvs_node_limit, std::optional<std::pair<Vertex, Vertex>> terminals = {});

struct Route {
  Algo algo = Algo::automatic;
  std::string reason;
};

// Forest if the underlying graph is a forest, else whichever of vimw, fen
// and timed FVS size is smallest among those within their caps (ties in that
// order), else the oracle if it stays within its limit. Throws
// no_feasible_algorithm otherwise.
BigCount dispatch_count(const TemporalGraph& g, Vertex s, Vertex z, Algo algo, const DispatchCaps& caps = {},
                        Route* route = nullptr);

Counter make_counter(Algo algo, const DispatchCaps& caps = {});

}  // namespace chronos
