#include "chronos/dispatch.hpp"

#include "chronos/error.hpp"
#include "chronos/fen.hpp"
#include "chronos/forest_dp.hpp"
#include "chronos/oracle.hpp"
#include "chronos/vimw.hpp"

namespace chronos {

const char* algo_name(Algo a) {
  switch (a) {
    case Algo::automatic: return "auto";
    case Algo::oracle: return "oracle";
    case Algo::forest: return "forest";
    case Algo::vimw: return "vimw";
    case Algo::tfvs: return "tfvs";
    case Algo::fen: return "fen";
  }
  return "?";
}

std::optional<Algo> parse_algo(std::string_view name) {
  for (Algo a : {Algo::automatic, Algo::oracle, Algo::forest, Algo::vimw, Algo::tfvs, Algo::fen}) {
    if (name == algo_name(a)) return a;
  }
  return std::nullopt;
}

GraphParameters measure_parameters(const TemporalGraph& g, std::optional<std::size_t> tfvs_cap,
                                   std::uint64_t tfvs_node_limit, std::optional<std::pair<Vertex, Vertex>> terminals) {
  GraphParameters p;
  p.n = g.vertex_count();
  p.time_edges = g.edges().size();
  p.lifetime = g.lifetime();
  p.forest = underlying_graph(g).is_forest();
  p.vimw = vim_width(g);
  p.vim_histogram = vim_bag_histogram(g);
  p.fen = feedback_edge_number(g);
  if (terminals) p.fen_path_links = condense(g, terminals->first, terminals->second).path_links();
  if (p.forest) {
    p.tfvs = TimedFVS{};
    return p;
  }
  try {
    TfvsSearchOptions options;
    options.max_size = tfvs_cap;
    options.node_limit = tfvs_node_limit;
    p.tfvs = compute_timed_fvs(g, options);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::budget_exceeded) throw;
    p.tfvs_budget_exceeded = true;
  }
  return p;
}

BigCount dispatch_count(const TemporalGraph& g, Vertex s, Vertex z, Algo algo, const DispatchCaps& caps,
                        Route* route) {
  if (s >= g.vertex_count() || z >= g.vertex_count()) throw Error(ErrorCode::invalid_vertex, "vertex out of range");
  auto chosen = [&](Algo a, std::string reason) {
    if (route) *route = {a, std::move(reason)};
  };
  switch (algo) {
    case Algo::oracle:
      chosen(algo, "requested");
      return oracle::count_paths_bf(g, s, z);
    case Algo::forest:
      chosen(algo, "requested");
      return count_forest(g, s, z);
    case Algo::vimw:
      chosen(algo, "requested");
      return count_vimw(g, s, z);
    case Algo::tfvs:
      chosen(algo, "requested");
      return count_tfvs(g, s, z);
    case Algo::fen:
      chosen(algo, "requested");
      return count_fen(g, s, z);
    case Algo::automatic:
      break;
  }

  if (underlying_graph(g).is_forest()) {
    chosen(Algo::forest, "underlying graph is a forest");
    return count_forest(g, s, z);
  }
  const std::size_t w = vim_width(g);
  const std::size_t f = feedback_edge_number(g);
  std::optional<TimedFVS> x;
  const std::size_t best_cheap = std::min(w <= caps.vimw ? w : SIZE_MAX, f <= caps.fen ? f : SIZE_MAX);
  // Only search for a timed FVS that could beat the other parameters.
  std::size_t x_cap = caps.tfvs;
  if (best_cheap != SIZE_MAX && best_cheap > 0) x_cap = std::min(x_cap, best_cheap - 1);
  if (best_cheap == SIZE_MAX || best_cheap > 0) {
    try {
      TfvsSearchOptions options;
      options.max_size = x_cap;
      options.node_limit = caps.tfvs_node_limit;
      x = compute_timed_fvs(g, options);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::budget_exceeded) throw;
    }
  }

  if (x && (best_cheap == SIZE_MAX || x->size() < best_cheap)) {
    chosen(Algo::tfvs, "timed FVS size " + std::to_string(x->size()));
    return count_tfvs(g, s, z, x);
  }
  if (w <= caps.vimw && w == best_cheap) {
    chosen(Algo::vimw, "vimw " + std::to_string(w));
    return count_vimw(g, s, z);
  }
  if (f <= caps.fen) {
    chosen(Algo::fen, "feedback edge number " + std::to_string(f));
    return count_fen(g, s, z);
  }
  try {
    auto c = oracle::count_paths_limited(g, s, z, caps.oracle);
    chosen(Algo::oracle, "all parameters above their caps");
    return c;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::explosion) throw;
  }
  throw Error(ErrorCode::no_feasible_algorithm, "vimw " + std::to_string(w) + ", feedback edge number " +
                                                    std::to_string(f) + " and timed FVS size exceed their caps, "
                                                    "and the oracle exceeded its limit");
}

Counter make_counter(Algo algo, const DispatchCaps& caps) {
  return [algo, caps](const TemporalGraph& g, Vertex s, Vertex z) { return dispatch_count(g, s, z, algo, caps); };
}

}  // namespace chronos
