#include "chronos/fen.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "chronos/error.hpp"
#include "chronos/forest_dp.hpp"

namespace chronos {

TemporalGraph prune_degree_one(const TemporalGraph& g, Vertex s, Vertex z) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> degree(n);
  std::vector<char> removed(n, 0);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.underlying_neighbors(v).size();
    if (v != s && v != z && degree[v] <= 1) {
      removed[v] = 1;
      queue.push_back(v);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto [w, id] : g.underlying_neighbors(queue[head])) {
      (void)id;
      if (removed[w]) continue;
      if (--degree[w] <= 1 && w != s && w != z) {
        removed[w] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<TimeEdge> kept;
  for (const auto& e : g.edges()) {
    if (!removed[e.u] && !removed[e.v]) kept.push_back(e);
  }
  return TemporalGraph(n, std::move(kept), g.lifetime());
}

std::vector<std::pair<Vertex, Vertex>> feedback_edge_set(const StaticGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<Vertex> parent(n, kNoVertex), queue;
  for (Vertex r = 0; r < n; ++r) {
    if (seen[r]) continue;
    seen[r] = 1;
    queue.assign(1, r);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (seen[w]) continue;
        seen[w] = 1;
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  std::vector<std::pair<Vertex, Vertex>> out;
  for (auto [u, v] : g.edges()) {
    if (parent[u] != v && parent[v] != u) out.emplace_back(u, v);
  }
  return out;
}

std::size_t feedback_edge_number(const TemporalGraph& g) {
  const auto u = underlying_graph(g);
  return u.edge_count() + u.component_count() - u.vertex_count();
}

CondensedGraph condense(const TemporalGraph& g, Vertex s, Vertex z) {
  const auto pruned = prune_degree_one(g, s, z);
  const auto u = underlying_graph(pruned);
  const std::size_t n = u.vertex_count();
  CondensedGraph c;
  const auto feedback = feedback_edge_set(u);
  c.f = feedback.size();

  std::vector<char> terminal(n, 0);
  for (auto [a, b] : feedback) terminal[a] = terminal[b] = 1;
  for (Vertex v = 0; v < n; ++v) {
    if (u.degree(v) >= 3) terminal[v] = 1;
  }
  if (s < n) terminal[s] = 1;
  if (z < n) terminal[z] = 1;
  for (Vertex v = 0; v < n; ++v) {
    if (terminal[v]) c.terminals.push_back(v);
  }

  for (auto [a, b] : feedback) c.links.push_back({{a, b}, true});

  // Walk every forest edge from a terminal through non-terminals.
  auto is_feedback = [&](Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return std::binary_search(feedback.begin(), feedback.end(), std::pair<Vertex, Vertex>{a, b});
  };
  std::set<std::pair<Vertex, Vertex>> covered;
  auto key = [](Vertex a, Vertex b) { return a < b ? std::pair{a, b} : std::pair{b, a}; };
  for (Vertex t : c.terminals) {
    for (Vertex w : u.neighbors(t)) {
      if (is_feedback(t, w) || covered.count(key(t, w))) continue;
      std::vector<Vertex> walk{t, w};
      Vertex prev = t, cur = w;
      while (!terminal[cur]) {
        Vertex next = kNoVertex;
        for (Vertex x : u.neighbors(cur)) {
          if (x != prev && !is_feedback(cur, x)) next = x;
        }
        if (next == kNoVertex) break;
        prev = cur;
        cur = next;
        walk.push_back(cur);
      }
      for (std::size_t i = 1; i < walk.size(); ++i) covered.insert(key(walk[i - 1], walk[i]));
      c.links.push_back({std::move(walk), false});
    }
  }
  return c;
}

namespace {

class LinkWalker {
 public:
  LinkWalker(const TemporalGraph& g, const CondensedGraph& c, Vertex z, double cap)
      : g_(g), c_(c), z_(z), cap_(cap), used_(g.vertex_count(), 0), incident_(g.vertex_count()) {
    for (std::size_t i = 0; i < c.links.size(); ++i) {
      incident_[c.links[i].vertices.front()].push_back(i);
      incident_[c.links[i].vertices.back()].push_back(i);
    }
  }

  void run(Vertex s, FenStats* stats) {
    used_[s] = 1;
    walk(s, ArrivalProfile::seed(1));
    if (stats) {
      stats->candidates = candidates_;
      stats->sequences = sequences_;
    }
  }

  const BigCount& total() const { return total_; }

 private:
  void walk(Vertex at, const ArrivalProfile& profile) {
    for (std::size_t id : incident_[at]) {
      const auto& vs = c_.links[id].vertices;
      // A link whose two ends coincide cannot be part of a simple path.
      if (vs.front() == vs.back()) continue;
      const bool forward = vs.front() == at;
      if (++candidates_ > cap_) throw Error(ErrorCode::precondition, "link enumeration exceeds its bound");
      std::vector<Vertex> marked;
      ArrivalProfile p = profile;
      bool ok = true;
      for (std::size_t i = 1; i < vs.size() && ok; ++i) {
        const Vertex prev = forward ? vs[i - 1] : vs[vs.size() - i];
        const Vertex next = forward ? vs[i] : vs[vs.size() - 1 - i];
        if (used_[next]) {
          ok = false;
          break;
        }
        used_[next] = 1;
        marked.push_back(next);
        p = p.extend(g_.labels_between(prev, next));
        if (p.is_zero()) ok = false;
        if (next == z_ && i + 1 < vs.size()) ok = false;
      }
      if (ok) {
        const Vertex end = forward ? vs.back() : vs.front();
        if (end == z_) {
          ++sequences_;
          total_ += p.at(g_.lifetime());
        } else {
          walk(end, p);
        }
      }
      for (Vertex v : marked) used_[v] = 0;
    }
  }

  const TemporalGraph& g_;
  const CondensedGraph& c_;
  Vertex z_;
  double cap_;
  std::vector<char> used_;
  std::vector<std::vector<std::size_t>> incident_;
  BigCount total_ = 0;
  std::uint64_t candidates_ = 0;
  std::uint64_t sequences_ = 0;
};

}  // namespace

BigCount count_fen(const TemporalGraph& g, Vertex s, Vertex z, FenStats* stats, const FenOptions& options) {
  if (s >= g.vertex_count() || z >= g.vertex_count()) throw Error(ErrorCode::invalid_vertex, "vertex out of range");
  if (stats) *stats = {};
  if (s == z) return 1;
  const auto pruned = prune_degree_one(g, s, z);
  const auto c = condense(pruned, s, z);
  if (stats) {
    stats->f = c.f;
    stats->path_links = c.path_links();
  }
  const double f = static_cast<double>(c.f);
  const double cap = options.candidate_factor * std::pow(8.0, f) * std::tgamma(f + 3.0);
  LinkWalker walker(pruned, c, z, cap);
  walker.run(s, stats);
  return walker.total();
}

}  // namespace chronos
