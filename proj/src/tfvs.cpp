#include "chronos/tfvs.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "chronos/chordal.hpp"
#include "chronos/error.hpp"
#include "chronos/forest_dp.hpp"

namespace chronos {
namespace {

// Per-vertex sorted appearance times.
class AppearanceSet {
 public:
  AppearanceSet(std::size_t n, const TimedFVS& x) : times_(n) {
    for (const auto& a : x) {
      if (a.v < n) times_[a.v].push_back(a.t);
    }
    for (auto& t : times_) {
      std::sort(t.begin(), t.end());
      t.erase(std::unique(t.begin(), t.end()), t.end());
    }
  }
  bool contains(Vertex v, Time t) const {
    if (v >= times_.size()) return false;
    return std::binary_search(times_[v].begin(), times_[v].end(), t);
  }

 private:
  std::vector<std::vector<Time>> times_;
};

// Time-edges indexed by (underlying edge, label position), with how many
// chosen appearances cover each one.
class Residual {
 public:
  explicit Residual(const TemporalGraph& g) : g_(g) {
    offset_.assign(g.underlying_edge_count() + 1, 0);
    for (std::size_t id = 0; id < g.underlying_edge_count(); ++id) {
      offset_[id + 1] = offset_[id] + g.labels(id).size();
    }
    cover_.assign(offset_.back(), 0);
    alive_.resize(g.underlying_edge_count());
    for (std::size_t id = 0; id < alive_.size(); ++id) alive_[id] = g.labels(id).size();
  }

  void add(VertexAppearance a) { apply(a, +1); }
  void remove(VertexAppearance a) { apply(a, -1); }

  bool edge_alive(std::uint32_t id) const { return alive_[id] > 0; }

  // Alive time-edges of underlying edge id.
  std::vector<Time> alive_labels(std::uint32_t id) const {
    std::vector<Time> out;
    auto labels = g_.labels(id);
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (cover_[offset_[id] + j] == 0) out.push_back(labels[j]);
    }
    return out;
  }

  // Shortest cycle of the residual underlying graph as (vertex list, edge id
  // list), or empty when it is a forest.
  std::pair<std::vector<Vertex>, std::vector<std::uint32_t>> shortest_cycle() const {
    const std::size_t n = g_.vertex_count();
    std::size_t best = static_cast<std::size_t>(-1);
    std::pair<std::vector<Vertex>, std::vector<std::uint32_t>> result;
    std::vector<std::uint32_t> dist(n), parent_edge(n);
    std::vector<Vertex> parent(n), queue;
    for (Vertex root = 0; root < n; ++root) {
      std::fill(dist.begin(), dist.end(), UINT32_MAX);
      dist[root] = 0;
      parent[root] = kNoVertex;
      parent_edge[root] = UINT32_MAX;
      queue.assign(1, root);
      bool done = false;
      for (std::size_t head = 0; head < queue.size() && !done; ++head) {
        const Vertex u = queue[head];
        if (2 * dist[u] + 1 >= best) break;
        for (auto [w, id] : g_.underlying_neighbors(u)) {
          if (!edge_alive(id) || id == parent_edge[u]) continue;
          if (dist[w] == UINT32_MAX) {
            dist[w] = dist[u] + 1;
            parent[w] = u;
            parent_edge[w] = id;
            queue.push_back(w);
            continue;
          }
          const std::size_t len = dist[u] + dist[w] + 1;
          if (len < best) {
            best = len;
            result = close_cycle(u, w, id, parent, parent_edge, dist);
            if (best == 3) done = true;
          }
          if (done) break;
        }
      }
      if (best == 3) break;
    }
    return result;
  }

 private:
  static std::pair<std::vector<Vertex>, std::vector<std::uint32_t>> close_cycle(
      Vertex u, Vertex w, std::uint32_t id, const std::vector<Vertex>& parent,
      const std::vector<std::uint32_t>& parent_edge, const std::vector<std::uint32_t>& dist) {
    // Climb from both ends to their meeting point; the two branches and the
    // closing edge form a simple cycle.
    std::vector<Vertex> left{u}, right{w};
    std::vector<std::uint32_t> edges{id}, right_edges;
    Vertex a = u, b = w;
    while (a != b) {
      if (dist[a] >= dist[b]) {
        edges.push_back(parent_edge[a]);
        a = parent[a];
        left.push_back(a);
      } else {
        right_edges.push_back(parent_edge[b]);
        b = parent[b];
        right.push_back(b);
      }
    }
    right.pop_back();
    left.insert(left.end(), right.rbegin(), right.rend());
    edges.insert(edges.end(), right_edges.begin(), right_edges.end());
    return {left, edges};
  }

  void apply(VertexAppearance a, int delta) {
    for (auto [w, id] : g_.underlying_neighbors(a.v)) {
      (void)w;
      auto labels = g_.labels(id);
      auto it = std::lower_bound(labels.begin(), labels.end(), a.t);
      if (it == labels.end() || *it != a.t) continue;
      auto& c = cover_[offset_[id] + static_cast<std::size_t>(it - labels.begin())];
      if (delta > 0) {
        if (c++ == 0) --alive_[id];
      } else {
        if (--c == 0) ++alive_[id];
      }
    }
  }

  const TemporalGraph& g_;
  std::vector<std::size_t> offset_;
  std::vector<std::uint32_t> cover_;
  std::vector<std::size_t> alive_;
};

std::vector<VertexAppearance> branch_candidates(const TemporalGraph& g, const Residual& r,
                                                const std::vector<std::uint32_t>& cycle_edges) {
  std::vector<VertexAppearance> out;
  for (auto id : cycle_edges) {
    auto [u, v] = g.underlying_edge(id);
    for (Time t : r.alive_labels(id)) {
      out.push_back({u, t});
      out.push_back({v, t});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

class FvsSearch {
 public:
  FvsSearch(const TemporalGraph& g, std::uint64_t node_limit) : g_(g), residual_(g), node_limit_(node_limit) {}

  bool solve(std::size_t budget) {
    seen_.clear();
    return branch(budget);
  }

  const TimedFVS& solution() const { return chosen_; }

 private:
  bool branch(std::size_t budget) {
    if (++nodes_ > node_limit_) {
      throw Error(ErrorCode::budget_exceeded, "timed FVS search exceeded its node limit");
    }
    auto cycle = residual_.shortest_cycle();
    if (cycle.first.empty()) return true;
    if (budget == 0) return false;
    for (const auto& a : branch_candidates(g_, residual_, cycle.second)) {
      auto key = chosen_;
      key.push_back(a);
      std::sort(key.begin(), key.end());
      if (!seen_.insert(key).second) continue;
      chosen_.push_back(a);
      residual_.add(a);
      if (branch(budget - 1)) return true;
      residual_.remove(a);
      chosen_.pop_back();
    }
    return false;
  }

  const TemporalGraph& g_;
  Residual residual_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  TimedFVS chosen_;
  std::set<TimedFVS> seen_;
};

// ---------------------------------------------------------------------------
// Forest index over the residual forest: depth, component and ancestors.

class ForestIndex {
 public:
  explicit ForestIndex(const TemporalGraph& f) {
    const std::size_t n = f.vertex_count();
    depth_.assign(n, 0);
    comp_.assign(n, kNoVertex);
    levels_ = 1;
    while ((std::size_t{1} << levels_) < n) ++levels_;
    up_.assign(levels_, std::vector<Vertex>(n, 0));
    std::vector<Vertex> queue;
    for (Vertex r = 0; r < n; ++r) {
      if (comp_[r] != kNoVertex) continue;
      comp_[r] = r;
      up_[0][r] = r;
      queue.assign(1, r);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        for (auto [w, id] : f.underlying_neighbors(u)) {
          (void)id;
          if (comp_[w] != kNoVertex) continue;
          comp_[w] = r;
          depth_[w] = depth_[u] + 1;
          up_[0][w] = u;
          queue.push_back(w);
        }
      }
    }
    for (std::size_t k = 1; k < levels_; ++k) {
      for (Vertex v = 0; v < n; ++v) up_[k][v] = up_[k - 1][up_[k - 1][v]];
    }
  }

  bool connected(Vertex a, Vertex b) const { return comp_[a] == comp_[b]; }
  Vertex parent(Vertex v) const { return up_[0][v]; }

  Vertex lca(Vertex a, Vertex b) const {
    if (depth_[a] < depth_[b]) std::swap(a, b);
    std::uint32_t diff = depth_[a] - depth_[b];
    for (std::size_t k = 0; diff; ++k, diff >>= 1) {
      if (diff & 1) a = up_[k][a];
    }
    if (a == b) return a;
    for (std::size_t k = levels_; k-- > 0;) {
      if (up_[k][a] != up_[k][b]) {
        a = up_[k][a];
        b = up_[k][b];
      }
    }
    return up_[0][a];
  }

  std::uint32_t dist(Vertex a, Vertex b) const { return depth_[a] + depth_[b] - 2 * depth_[lca(a, b)]; }

  bool on_path(Vertex a, Vertex b, Vertex p) const {
    if (!connected(a, p) || !connected(a, b)) return false;
    return dist(a, p) + dist(p, b) == dist(a, b);
  }

  bool paths_intersect(Vertex a, Vertex b, Vertex c, Vertex d) const {
    if (!connected(a, c)) return false;
    const Vertex m1 = lca(a, b), m2 = lca(c, d);
    return depth_[m1] >= depth_[m2] ? on_path(c, d, m1) : on_path(a, b, m2);
  }

  std::vector<Vertex> path(Vertex a, Vertex b) const {
    const Vertex m = lca(a, b);
    std::vector<Vertex> left, right;
    for (Vertex v = a; v != m; v = parent(v)) left.push_back(v);
    left.push_back(m);
    for (Vertex v = b; v != m; v = parent(v)) right.push_back(v);
    left.insert(left.end(), right.rbegin(), right.rend());
    return left;
  }

 private:
  std::vector<std::uint32_t> depth_;
  std::vector<Vertex> comp_;
  std::size_t levels_;
  std::vector<std::vector<Vertex>> up_;
};

// ---------------------------------------------------------------------------
// Traversal patterns.

enum class Role : std::uint8_t { in_only, out_only, both };

bool has_in(Role r) { return r != Role::out_only; }
bool has_out(Role r) { return r != Role::in_only; }

struct Element {
  Vertex v;
  Time t;
  Role role;
};

// A residual-forest segment joining two consecutive pattern elements; a is
// kNoVertex for the empty segment (a direct time-edge or waiting at a vertex).
// allow_* are pattern vertices the segment may contain (its own endpoints).
struct Candidate {
  Vertex a = kNoVertex;
  Vertex b = kNoVertex;
  BigCount weight;
  Vertex allow_1 = kNoVertex;
  Vertex allow_2 = kNoVertex;
};

class PatternCounter {
 public:
  PatternCounter(const TemporalGraph& g, Vertex s, Vertex z, const TimedFVS& x)
      : g_(g), s_(s), z_(z), x_(x), in_x_(g.vertex_count(), x), residual_(remove_appearances(g, x)),
        forest_(residual_) {
    std::sort(x_.begin(), x_.end(), [](const VertexAppearance& a, const VertexAppearance& b) {
      return a.t != b.t ? a.t < b.t : a.v < b.v;
    });
    used_.assign(x_.size(), 0);
    T_ = g.lifetime();
    const long double k = static_cast<long double>(x_.size() + 2);
    pattern_cap_ = std::pow(4.0L, k) * std::tgamma(k + 1.0L);
  }

  BigCount run(TfvsStats* stats) {
    seq_.push_back({s_, 1, Role::in_only});
    vertices_.push_back(s_);
    dfs();
    if (stats) {
      stats->patterns = patterns_;
      stats->nonzero_patterns = nonzero_;
      stats->chordal_vertices = chordal_vertices_;
    }
    return total_;
  }

 private:
  const BigCount& window(Vertex a, Vertex b, Time lo, Time hi) {
    auto key = std::make_tuple(a, b, lo, hi);
    auto it = windows_.find(key);
    if (it != windows_.end()) return it->second;
    BigCount c = 0;
    if (forest_.connected(a, b)) {
      const auto path = forest_.path(a, b);
      c = count_along_path(residual_, path, lo, hi);
    }
    return windows_.emplace(key, std::move(c)).first->second;
  }

  void push_segment(std::vector<Candidate>& out, Vertex a, Vertex b, Time lo, Time hi, Vertex allow_1,
                    Vertex allow_2) {
    if (!forest_.connected(a, b)) return;
    const BigCount& w = window(a, b, lo, hi);
    if (w != 0) out.push_back({a, b, w, allow_1, allow_2});
  }

  const std::vector<Candidate>& candidates(const Element& p, const Element& q) {
    auto key = std::make_tuple(p.v, p.t, static_cast<int>(p.role), q.v, q.t, static_cast<int>(q.role));
    auto it = candidates_.find(key);
    if (it != candidates_.end()) return it->second;
    std::vector<Candidate> out;
    if (has_out(p.role)) {
      if (has_in(q.role)) {
        // Leave p on a time-edge at p.t, cross the forest, enter q at q.t.
        if (p.t == q.t && g_.has_edge(p.v, q.v, p.t)) out.push_back({kNoVertex, kNoVertex, 1});
        for (const auto& w1 : g_.neighbors_at(p.v, p.t)) {
          if (in_x_.contains(w1.v, p.t)) continue;
          for (const auto& w2 : g_.neighbors_at(q.v, q.t)) {
            if (in_x_.contains(w2.v, q.t)) continue;
            push_segment(out, w1.v, w2.v, p.t, q.t, kNoVertex, kNoVertex);
          }
        }
      } else {
        // Leave p at p.t, reach q in the forest and wait there until q.t.
        for (const auto& w1 : g_.neighbors_at(p.v, p.t)) {
          if (in_x_.contains(w1.v, p.t)) continue;
          if (w1.v == q.v) {
            out.push_back({q.v, q.v, 1, q.v});
          } else {
            push_segment(out, w1.v, q.v, p.t, q.t, q.v, kNoVertex);
          }
        }
      }
    } else {
      if (has_in(q.role)) {
        // Start at p no earlier than p.t, enter q on a time-edge at q.t.
        for (const auto& w2 : g_.neighbors_at(q.v, q.t)) {
          if (in_x_.contains(w2.v, q.t)) continue;
          if (w2.v == p.v) {
            out.push_back({p.v, p.v, 1, p.v});
          } else {
            push_segment(out, p.v, w2.v, p.t, q.t, p.v, kNoVertex);
          }
        }
      } else if (p.v == q.v) {
        out.push_back({kNoVertex, kNoVertex, 1});  // waiting at p
      } else {
        push_segment(out, p.v, q.v, p.t, q.t, p.v, q.v);
      }
    }
    return candidates_.emplace(key, std::move(out)).first->second;
  }

  bool avoids(const Candidate& c, const std::vector<Vertex>& vertices) const {
    if (c.a == kNoVertex) return true;
    for (Vertex p : vertices) {
      if (p == c.allow_1 || p == c.allow_2) continue;
      if (forest_.on_path(c.a, c.b, p)) return false;
    }
    return true;
  }

  bool pair_feasible(const Element& p, const Element& q) {
    for (const auto& c : candidates(p, q)) {
      if (avoids(c, vertices_)) return true;
    }
    return false;
  }

  void evaluate() {
    ++patterns_;
    if (static_cast<long double>(patterns_) > pattern_cap_) {
      throw Error(ErrorCode::precondition, "traversal pattern count exceeds its bound");
    }
    ChordalInstance inst;
    std::vector<const Candidate*> chosen;
    const auto k = static_cast<std::uint32_t>(seq_.size() - 1);
    for (std::uint32_t i = 0; i < k; ++i) {
      bool any = false;
      for (const auto& c : candidates(seq_[i], seq_[i + 1])) {
        if (!avoids(c, vertices_)) continue;
        chosen.push_back(&c);
        inst.colour.push_back(i);
        inst.weight.push_back(c.weight);
        any = true;
      }
      if (!any) return;
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      if (chosen[i]->a == kNoVertex) continue;
      for (std::size_t j = i + 1; j < chosen.size(); ++j) {
        if (chosen[j]->a == kNoVertex) continue;
        if (forest_.paths_intersect(chosen[i]->a, chosen[i]->b, chosen[j]->a, chosen[j]->b)) {
          edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
      }
    }
    inst.graph = StaticGraph(chosen.size(), std::move(edges));
    chordal_vertices_ += chosen.size();
    BigCount c = count_weighted_mc_is(inst, k);
    if (c != 0) ++nonzero_;
    total_ += c;
  }

  void dfs() {
    const Element last = seq_.back();
    const Element end{z_, T_, Role::out_only};
    vertices_.push_back(z_);
    if (pair_feasible(last, end)) {
      seq_.push_back(end);
      evaluate();
      seq_.pop_back();
    }
    vertices_.pop_back();

    for (std::size_t i = 0; i < x_.size(); ++i) {
      if (used_[i] || x_[i].t < last.t) continue;
      const Vertex v = x_[i].v;
      const bool seen = std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
      // A vertex may come back only as in-only then out-only, back to back.
      if (seen && !(last.v == v && last.role == Role::in_only && x_[i].t > last.t &&
                    std::count(vertices_.begin(), vertices_.end(), v) == 1)) {
        continue;
      }
      for (Role role : {Role::in_only, Role::out_only, Role::both}) {
        if (seen && role != Role::out_only) continue;
        const Element next{v, x_[i].t, role};
        vertices_.push_back(v);
        if (pair_feasible(last, next)) {
          used_[i] = 1;
          seq_.push_back(next);
          dfs();
          seq_.pop_back();
          used_[i] = 0;
        }
        vertices_.pop_back();
      }
    }
  }

  const TemporalGraph& g_;
  Vertex s_, z_;
  TimedFVS x_;
  AppearanceSet in_x_;
  TemporalGraph residual_;
  ForestIndex forest_;
  Time T_ = 0;
  long double pattern_cap_ = 0;

  std::vector<char> used_;
  std::vector<Element> seq_;
  std::vector<Vertex> vertices_;  // pattern vertices, with repeats for waiting
  std::map<std::tuple<Vertex, Vertex, Time, Time>, BigCount> windows_;
  std::map<std::tuple<Vertex, Time, int, Vertex, Time, int>, std::vector<Candidate>> candidates_;

  BigCount total_ = 0;
  std::uint64_t patterns_ = 0;
  std::uint64_t nonzero_ = 0;
  std::uint64_t chordal_vertices_ = 0;
};

}  // namespace

TemporalGraph remove_appearances(const TemporalGraph& g, const TimedFVS& x) {
  AppearanceSet in_x(g.vertex_count(), x);
  std::vector<TimeEdge> kept;
  for (const auto& e : g.edges()) {
    if (in_x.contains(e.u, e.t) || in_x.contains(e.v, e.t)) continue;
    kept.push_back(e);
  }
  return TemporalGraph(g.vertex_count(), std::move(kept), g.lifetime());
}

bool is_timed_fvs(const TemporalGraph& g, const TimedFVS& x) {
  return underlying_graph(remove_appearances(g, x)).is_forest();
}

TimedFVS compute_timed_fvs(const TemporalGraph& g, const TfvsSearchOptions& options) {
  FvsSearch search(g, options.node_limit);
  for (std::size_t k = 0;; ++k) {
    if (options.max_size && k > *options.max_size) {
      throw Error(ErrorCode::budget_exceeded, "no timed FVS within the size limit");
    }
    if (search.solve(k)) {
      auto x = search.solution();
      std::sort(x.begin(), x.end());
      return x;
    }
  }
}

std::optional<TimedFVS> minimum_timed_fvs_bf(const TemporalGraph& g, std::size_t max_size) {
  std::vector<VertexAppearance> pool;
  for (const auto& e : g.edges()) {
    pool.push_back({e.u, e.t});
    pool.push_back({e.v, e.t});
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  for (std::size_t k = 0; k <= std::min(max_size, pool.size()); ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      TimedFVS x;
      for (auto i : idx) x.push_back(pool[i]);
      if (is_timed_fvs(g, x)) return x;
      // Next k-combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

TimedFVS greedy_timed_fvs(const TemporalGraph& g) {
  Residual residual(g);
  TimedFVS x;
  while (true) {
    auto cycle = residual.shortest_cycle();
    if (cycle.first.empty()) break;
    // Cut the cycle edge with the fewest alive labels at its busier endpoint.
    std::uint32_t best_id = cycle.second.front();
    std::size_t best_count = residual.alive_labels(best_id).size();
    for (auto id : cycle.second) {
      const auto c = residual.alive_labels(id).size();
      if (c < best_count) {
        best_count = c;
        best_id = id;
      }
    }
    auto [u, v] = g.underlying_edge(best_id);
    const Vertex pick = g.temporal_degree(u) >= g.temporal_degree(v) ? u : v;
    for (Time t : residual.alive_labels(best_id)) {
      x.push_back({pick, t});
      residual.add({pick, t});
    }
  }
  for (std::size_t i = x.size(); i-- > 0;) {
    residual.remove(x[i]);
    if (residual.shortest_cycle().first.empty()) {
      x.erase(x.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      residual.add(x[i]);
    }
  }
  std::sort(x.begin(), x.end());
  return x;
}

TimedFVS parse_timed_fvs(const std::string& text, const TemporalGraph& g) {
  std::istringstream in(text);
  std::string line;
  TimedFVS x;
  const auto& originals = g.original_labels();
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long long v = 0, t = 0;
    while (fields >> v) {
      if (!(fields >> t) || v < 0 || t < 1) throw Error(ErrorCode::malformed_input, "timed FVS: expected \"v t\" pairs");
      if (static_cast<std::size_t>(v) >= g.vertex_count()) throw Error(ErrorCode::invalid_vertex, "timed FVS: vertex out of range");
      Time label = static_cast<Time>(t);
      if (!originals.empty()) {
        auto it = std::lower_bound(originals.begin() + 1, originals.end(), label);
        if (it == originals.end() || *it != label) continue;  // label unused by any time-edge
        label = static_cast<Time>(it - originals.begin());
      }
      x.push_back({static_cast<Vertex>(v), label});
    }
    if (!fields.eof()) throw Error(ErrorCode::malformed_input, "timed FVS: expected integers");
  }
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  return x;
}

Preprocessed preprocess_terminals(const TemporalGraph& g, Vertex s, Vertex z) {
  const Time T = std::max<Time>(g.lifetime(), 1);
  auto s_ok = [&] {
    auto nb = g.neighbors(s);
    return nb.size() == 1 && nb[0].t == 1 && nb[0].v != z;
  };
  auto z_ok = [&] {
    auto nb = g.neighbors(z);
    return nb.size() == 1 && nb[0].t == T && nb[0].v != s;
  };
  std::vector<TimeEdge> edges(g.edges().begin(), g.edges().end());
  Preprocessed out;
  std::size_t n = g.vertex_count();
  out.s = s;
  out.z = z;
  if (!s_ok()) {
    out.s = static_cast<Vertex>(n++);
    edges.push_back({out.s, s, 1});
  }
  if (!z_ok()) {
    out.z = static_cast<Vertex>(n++);
    edges.push_back({z, out.z, T});
  }
  out.g = TemporalGraph(n, std::move(edges), T);
  return out;
}

BigCount count_tfvs(const TemporalGraph& g, Vertex s, Vertex z, const std::optional<TimedFVS>& x, TfvsStats* stats,
                    const TfvsSearchOptions& search) {
  if (s >= g.vertex_count() || z >= g.vertex_count()) throw Error(ErrorCode::invalid_vertex, "vertex out of range");
  if (stats) *stats = {};
  if (s == z) return 1;
  if (g.empty()) return 0;

  TimedFVS fvs;
  if (x) {
    fvs = *x;
    for (const auto& a : fvs) {
      if (a.v >= g.vertex_count() || a.t < 1) throw Error(ErrorCode::invalid_vertex, "appearance out of range");
    }
    if (!is_timed_fvs(g, fvs)) throw Error(ErrorCode::precondition, "supplied set is not a timed FVS");
  } else {
    try {
      fvs = compute_timed_fvs(g, search);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::budget_exceeded) throw;
      if (auto small = minimum_timed_fvs_bf(g, 3)) {
        fvs = std::move(*small);
      } else {
        fvs = greedy_timed_fvs(g);
        if (stats) stats->greedy_fallback = true;
      }
    }
  }

  const auto pre = preprocess_terminals(g, s, z);
  // New terminals are leaves, so dropping their appearances keeps X valid.
  TimedFVS inner;
  for (const auto& a : fvs) {
    if (a.v != pre.s && a.v != pre.z && !pre.g.neighbors_at(a.v, a.t).empty()) inner.push_back(a);
  }
  if (stats) stats->x_size = inner.size();
  PatternCounter counter(pre.g, pre.s, pre.z, inner);
  return counter.run(stats);
}

}  // namespace chronos
