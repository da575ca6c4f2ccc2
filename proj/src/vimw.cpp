#include "chronos/vimw.hpp"

#include <algorithm>
#include <map>

#include "chronos/error.hpp"

namespace chronos {
namespace {

struct Span {
  std::vector<Time> first, last;  // kNone when isolated
};

constexpr Time kNone = 0;

Span vertex_spans(const TemporalGraph& g) {
  Span sp;
  sp.first.assign(g.vertex_count(), kNone);
  sp.last.assign(g.vertex_count(), kNone);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    if (nb.empty()) continue;
    sp.first[v] = nb.front().t;
    sp.last[v] = nb.back().t;
  }
  return sp;
}

// Signed bag-size changes: +1 at first(v), -1 at last(v) + 1.
std::vector<long> size_deltas(const TemporalGraph& g) {
  const auto sp = vertex_spans(g);
  std::vector<long> delta(static_cast<std::size_t>(g.lifetime()) + 2, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (sp.first[v] == kNone) continue;
    ++delta[sp.first[v]];
    --delta[sp.last[v] + 1];
  }
  return delta;
}

using Key = std::pair<Vertex, std::vector<Vertex>>;

// Simple paths of length >= 1 from a fixed start inside one snapshot E_t,
// stored as (end vertex, sorted vertex set including start and end).
struct SnapshotPaths {
  struct Path {
    Vertex end;
    std::vector<Vertex> vertices;
  };
  std::vector<Path> paths;
};

void snapshot_dfs(const TemporalGraph& g, Time t, Vertex cur, Vertex z, std::vector<Vertex>& stack,
                  SnapshotPaths& out) {
  for (const auto& nb : g.neighbors_at(cur, t)) {
    if (std::find(stack.begin(), stack.end(), nb.v) != stack.end()) continue;
    stack.push_back(nb.v);
    auto sorted = stack;
    std::sort(sorted.begin(), sorted.end());
    out.paths.push_back({nb.v, std::move(sorted)});
    if (nb.v != z) snapshot_dfs(g, t, nb.v, z, stack, out);
    stack.pop_back();
  }
}

bool disjoint_sorted(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) ++i; else ++j;
  }
  return true;
}

}  // namespace

VIMSequence vim_sequence(const TemporalGraph& g) {
  const auto sp = vertex_spans(g);
  VIMSequence seq;
  seq.bags.resize(g.lifetime());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (sp.first[v] == kNone) continue;
    for (Time t = sp.first[v]; t <= sp.last[v]; ++t) seq.bags[t - 1].push_back(v);
  }
  for (const auto& b : seq.bags) seq.width = std::max(seq.width, b.size());
  return seq;
}

std::size_t vim_width(const TemporalGraph& g) {
  const auto delta = size_deltas(g);
  long cur = 0, best = 0;
  for (Time t = 1; t <= g.lifetime(); ++t) {
    cur += delta[t];
    best = std::max(best, cur);
  }
  return static_cast<std::size_t>(best);
}

std::vector<std::size_t> vim_bag_histogram(const TemporalGraph& g) {
  const auto delta = size_deltas(g);
  std::vector<std::size_t> hist;
  long cur = 0;
  for (Time t = 1; t <= g.lifetime(); ++t) {
    cur += delta[t];
    if (hist.size() <= static_cast<std::size_t>(cur)) hist.resize(cur + 1, 0);
    ++hist[cur];
  }
  return hist;
}

BigCount count_vimw(const TemporalGraph& g, Vertex s, Vertex z) {
  if (s >= g.vertex_count() || z >= g.vertex_count()) throw Error(ErrorCode::invalid_vertex, "vertex out of range");
  if (s == z) return 1;
  const auto sp = vertex_spans(g);
  if (sp.first[s] == kNone || sp.first[z] == kNone) return 0;
  // Snapshots after z's last edge cannot end an (s,z)-path.
  const Time t_end = sp.last[z];
  const Time t_begin = sp.first[s];
  if (t_begin > t_end) return 0;

  BigCount answer = 0;
  std::map<Key, BigCount> states;
  std::map<Key, BigCount> next;
  std::vector<Vertex> stack;
  std::map<Vertex, SnapshotPaths> memo;

  for (Time t = t_begin; t <= t_end; ++t) {
    if (g.edges_at(t).empty()) continue;
    const bool last_step = t == t_end;

    // Carry over: drop vertices whose interval has ended.
    next.clear();
    for (auto& [key, count] : states) {
      if (sp.last[key.first] < t) continue;
      std::vector<Vertex> x;
      x.reserve(key.second.size());
      for (Vertex w : key.second) {
        if (sp.last[w] >= t) x.push_back(w);
      }
      auto [it, fresh] = next.try_emplace(Key{key.first, std::move(x)}, 0);
      it->second += count;
    }
    states.swap(next);

    // Extend every state (and the empty path at s) by a segment inside E_t.
    memo.clear();
    std::vector<std::pair<Key, BigCount>> produced;
    auto extend = [&](Vertex u, const std::vector<Vertex>& y, const BigCount& count) {
      if (g.neighbors_at(u, t).empty()) return;
      auto [it, fresh] = memo.try_emplace(u);
      if (fresh) {
        stack.assign(1, u);
        snapshot_dfs(g, t, u, z, stack, it->second);
      }
      for (const auto& p : it->second.paths) {
        if (!disjoint_sorted(p.vertices, y)) continue;
        if (p.end == z) {
          answer += count;
          continue;
        }
        if (last_step || sp.last[p.end] <= t) continue;
        std::vector<Vertex> x;
        std::merge(y.begin(), y.end(), p.vertices.begin(), p.vertices.end(), std::back_inserter(x));
        x.erase(std::remove_if(x.begin(), x.end(),
                               [&](Vertex w) { return w == p.end || sp.last[w] < t; }),
                x.end());
        produced.emplace_back(Key{p.end, std::move(x)}, count);
      }
    };
    for (const auto& [key, count] : states) extend(key.first, key.second, count);
    if (sp.last[s] >= t) extend(s, {}, BigCount(1));

    for (auto& [key, count] : produced) {
      auto [it, fresh] = states.try_emplace(std::move(key), 0);
      it->second += count;
    }
  }
  return answer;
}

}  // namespace chronos
