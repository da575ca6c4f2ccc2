#include "chronos/chordal.hpp"

#include <algorithm>
#include <functional>
#include <list>

#include "chronos/error.hpp"

namespace chronos {

std::size_t CliqueTree::max_bag_size() const {
  std::size_t m = 0;
  for (const auto& n : nodes) m = std::max(m, n.bag.size());
  return m;
}

std::vector<Vertex> maximum_cardinality_search(const StaticGraph& g) {
  const std::size_t n = g.vertex_count();
  // Bucket queue keyed by the number of already numbered neighbours.
  std::vector<std::list<Vertex>> buckets(n + 1);
  std::vector<std::list<Vertex>::iterator> where(n);
  std::vector<std::size_t> weight(n, 0);
  std::vector<char> done(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    buckets[0].push_front(v);
    where[v] = buckets[0].begin();
  }
  std::vector<Vertex> order;
  order.reserve(n);
  std::size_t top = 0;
  for (std::size_t step = 0; step < n; ++step) {
    while (buckets[top].empty()) --top;
    const Vertex v = buckets[top].front();
    buckets[top].pop_front();
    done[v] = 1;
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (done[w]) continue;
      buckets[weight[w]].erase(where[w]);
      ++weight[w];
      buckets[weight[w]].push_front(w);
      where[w] = buckets[weight[w]].begin();
      top = std::max(top, weight[w]);
    }
  }
  return order;
}

namespace {

struct Elimination {
  std::vector<std::size_t> pos;             // position in the elimination order
  std::vector<std::vector<Vertex>> later;   // N+(v), neighbours eliminated after v
  std::vector<Vertex> parent;               // closest later neighbour or kNoVertex
  bool perfect = true;
};

Elimination eliminate(const StaticGraph& g) {
  const std::size_t n = g.vertex_count();
  auto order = maximum_cardinality_search(g);
  std::reverse(order.begin(), order.end());
  Elimination e;
  e.pos.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) e.pos[order[i]] = i;
  e.later.assign(n, {});
  e.parent.assign(n, kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) {
      if (e.pos[w] > e.pos[v]) e.later[v].push_back(w);
    }
    std::sort(e.later[v].begin(), e.later[v].end(),
              [&](Vertex a, Vertex b) { return e.pos[a] < e.pos[b]; });
    if (!e.later[v].empty()) e.parent[v] = e.later[v].front();
  }
  // N+(v) \ {p(v)} must be inside N+(p(v)) for every v.
  std::vector<Vertex> mark(n, kNoVertex);
  for (Vertex v = 0; v < n && e.perfect; ++v) {
    const Vertex p = e.parent[v];
    if (p == kNoVertex) continue;
    for (Vertex w : e.later[p]) mark[w] = v;
    for (std::size_t i = 1; i < e.later[v].size(); ++i) {
      if (mark[e.later[v][i]] != v) {
        e.perfect = false;
        break;
      }
    }
  }
  return e;
}

}  // namespace

bool is_chordal(const StaticGraph& g) { return eliminate(g).perfect; }

CliqueTree build_clique_tree(const StaticGraph& g) {
  const std::size_t n = g.vertex_count();
  CliqueTree tree;
  if (n == 0) return tree;
  const auto e = eliminate(g);
  if (!e.perfect) throw Error(ErrorCode::not_chordal, "graph is not chordal");

  std::vector<Vertex> by_pos(n);
  for (Vertex v = 0; v < n; ++v) by_pos[e.pos[v]] = v;

  // Raw tree on C_v = {v} u N+(v), parent C_p(v). Walking from the end of the
  // elimination order visits parents first. C_p(v) is contained in C_v iff
  // |N+(v)| = |N+(p(v))| + 1; the first such child takes over p's node.
  std::vector<std::size_t> node_of(n, CliqueTree::kNoParent);
  std::vector<std::size_t> raw_parent;
  std::vector<std::vector<Vertex>> raw_bags;
  std::vector<Vertex> owner;
  for (std::size_t i = n; i-- > 0;) {
    const Vertex v = by_pos[i];
    const Vertex p = e.parent[v];
    std::vector<Vertex> bag = e.later[v];
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    if (p != kNoVertex && owner[node_of[p]] == p && e.later[v].size() == e.later[p].size() + 1) {
      node_of[v] = node_of[p];
      raw_bags[node_of[v]] = std::move(bag);
      owner[node_of[v]] = v;
      continue;
    }
    node_of[v] = raw_bags.size();
    raw_bags.push_back(std::move(bag));
    owner.push_back(v);
    raw_parent.push_back(p == kNoVertex ? CliqueTree::kNoParent : node_of[p]);
  }

  // Link the roots of different components under the first root.
  const std::size_t raw_count = raw_bags.size();
  std::vector<std::vector<std::size_t>> raw_children(raw_count);
  std::size_t raw_root = CliqueTree::kNoParent;
  for (std::size_t i = 0; i < raw_count; ++i) {
    if (raw_parent[i] == CliqueTree::kNoParent) {
      if (raw_root == CliqueTree::kNoParent) {
        raw_root = i;
        continue;
      }
      raw_parent[i] = raw_root;
    }
    raw_children[raw_parent[i]].push_back(i);
  }

  // Normalize: a node with m >= 2 children becomes a chain of binary joins
  // over copies of its bag, each copy with a single real child below it.
  auto add_node = [&](std::vector<Vertex> bag, std::size_t parent) {
    tree.nodes.push_back({std::move(bag), {}, parent});
    const std::size_t id = tree.nodes.size() - 1;
    if (parent != CliqueTree::kNoParent) tree.nodes[parent].children.push_back(id);
    return id;
  };
  // Explicit stack of (raw node, parent in the new tree).
  std::vector<std::pair<std::size_t, std::size_t>> stack{{raw_root, CliqueTree::kNoParent}};
  while (!stack.empty()) {
    auto [r, parent] = stack.back();
    stack.pop_back();
    const std::size_t id = add_node(raw_bags[r], parent);
    if (parent == CliqueTree::kNoParent) tree.root = id;
    const auto& kids = raw_children[r];
    if (kids.size() == 1) {
      stack.emplace_back(kids[0], id);
      continue;
    }
    std::size_t join = id;
    for (std::size_t c = 0; c < kids.size(); ++c) {
      const std::size_t remaining = kids.size() - c;
      if (remaining == 1) {
        stack.emplace_back(kids[c], join);
        break;
      }
      const std::size_t left = add_node(raw_bags[r], join);
      const std::size_t right = add_node(raw_bags[r], join);
      stack.emplace_back(kids[c], left);
      if (remaining == 2) {
        stack.emplace_back(kids[c + 1], right);
        break;
      }
      join = right;
    }
  }
  return tree;
}

bool check_clique_tree(const StaticGraph& g, const CliqueTree& tree, std::string* why) {
  auto fail = [why](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  const std::size_t n = g.vertex_count();
  if (n == 0) return tree.nodes.empty() ? true : fail("non-empty tree for empty graph");
  if (tree.root >= tree.nodes.size()) return fail("bad root");
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& node = tree.nodes[i];
    for (std::size_t a = 0; a < node.bag.size(); ++a) {
      for (std::size_t b = a + 1; b < node.bag.size(); ++b) {
        if (!g.adjacent(node.bag[a], node.bag[b])) return fail("bag " + std::to_string(i) + " is not a clique");
      }
    }
    if (node.children.size() > 2) return fail("node " + std::to_string(i) + " has more than two children");
    if (node.children.size() == 2) {
      for (std::size_t c : node.children) {
        if (tree.nodes[c].bag != node.bag) return fail("join node " + std::to_string(i) + " has a different child");
      }
    }
    for (std::size_t c : node.children) {
      if (tree.nodes[c].parent != i) return fail("parent link mismatch");
    }
  }
  std::vector<std::vector<std::size_t>> holding(n);
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    for (Vertex v : tree.nodes[i].bag) holding[v].push_back(i);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (holding[v].empty()) return fail("vertex " + std::to_string(v) + " is in no bag");
    // Connected iff exactly one holder has a parent that does not hold v.
    std::size_t tops = 0;
    for (std::size_t i : holding[v]) {
      const auto p = tree.nodes[i].parent;
      if (p == CliqueTree::kNoParent || !std::binary_search(tree.nodes[p].bag.begin(), tree.nodes[p].bag.end(), v)) {
        ++tops;
      }
    }
    if (tops != 1) return fail("bags holding vertex " + std::to_string(v) + " are not connected");
  }
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (std::size_t i : holding[u]) {
      if (std::binary_search(tree.nodes[i].bag.begin(), tree.nodes[i].bag.end(), v)) {
        covered = true;
        break;
      }
    }
    if (!covered) return fail("edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag");
  }
  std::size_t reachable = 0;
  std::vector<std::size_t> stack{tree.root};
  while (!stack.empty()) {
    const auto i = stack.back();
    stack.pop_back();
    ++reachable;
    for (auto c : tree.nodes[i].children) stack.push_back(c);
  }
  if (reachable != tree.nodes.size()) return fail("tree is not connected");
  return true;
}

BigCount count_weighted_mc_is(const ChordalInstance& instance, std::uint32_t k, MulticolourStats* stats) {
  const auto& g0 = instance.graph;
  if (instance.colour.size() != g0.vertex_count() || instance.weight.size() != g0.vertex_count()) {
    throw Error(ErrorCode::precondition, "colour and weight must cover every vertex");
  }
  if (k > 24) throw Error(ErrorCode::invalid_parameter, "too many colours");
  for (Vertex v = 0; v < g0.vertex_count(); ++v) {
    if (instance.colour[v] >= k) throw Error(ErrorCode::precondition, "colour out of range");
    if (instance.weight[v] < 0) throw Error(ErrorCode::precondition, "negative weight");
  }
  if (stats) *stats = {};
  if (k == 0) return 1;

  // Drop zero-weight vertices.
  std::vector<Vertex> keep, index(g0.vertex_count(), kNoVertex);
  for (Vertex v = 0; v < g0.vertex_count(); ++v) {
    if (instance.weight[v] != 0) {
      index[v] = static_cast<Vertex>(keep.size());
      keep.push_back(v);
    }
  }
  if (keep.empty()) return 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [u, v] : g0.edges()) {
    if (index[u] != kNoVertex && index[v] != kNoVertex) edges.emplace_back(index[u], index[v]);
  }
  const StaticGraph g(keep.size(), std::move(edges));
  auto colour = [&](Vertex v) { return instance.colour[keep[v]]; };
  auto weight = [&](Vertex v) -> const BigCount& { return instance.weight[keep[v]]; };

  const CliqueTree tree = build_clique_tree(g);
  const std::uint32_t full = (1u << k) - 1;
  const std::size_t subsets = std::size_t{1} << k;
  if (stats) {
    stats->bags = tree.nodes.size();
    stats->max_bag = tree.max_bag_size();
  }

  // table[C * (|B| + 1) + j]: j = 0 selects nothing from B, j = i + 1 selects bag[i].
  std::vector<std::vector<BigCount>> tables(tree.nodes.size());
  std::vector<std::size_t> order;
  {
    std::vector<std::size_t> stack{tree.root};
    while (!stack.empty()) {
      auto i = stack.back();
      stack.pop_back();
      order.push_back(i);
      for (auto c : tree.nodes[i].children) stack.push_back(c);
    }
    std::reverse(order.begin(), order.end());
  }

  for (std::size_t id : order) {
    const auto& node = tree.nodes[id];
    const auto& bag = node.bag;
    const std::size_t width = bag.size() + 1;
    auto& F = tables[id];
    F.assign(subsets * width, 0);
    if (stats) stats->entries += F.size();
    auto at = [width](std::vector<BigCount>& t, std::uint32_t c, std::size_t j) -> BigCount& {
      return t[c * width + j];
    };

    if (node.children.empty()) {
      at(F, 0, 0) = 1;  // the empty set
      for (std::size_t i = 0; i < bag.size(); ++i) at(F, 1u << colour(bag[i]), i + 1) = weight(bag[i]);
    } else if (node.children.size() == 1) {
      auto& child = tables[node.children[0]];
      const auto& cbag = tree.nodes[node.children[0]].bag;
      const std::size_t cw = cbag.size() + 1;
      // Child selections compatible with selecting nothing from this bag.
      std::vector<std::size_t> forgotten{0};
      for (std::size_t i = 0; i < cbag.size(); ++i) {
        if (!std::binary_search(bag.begin(), bag.end(), cbag[i])) forgotten.push_back(i + 1);
      }
      std::vector<BigCount> none(subsets, 0);
      for (std::uint32_t c = 0; c < subsets; ++c) {
        for (auto j : forgotten) none[c] += child[c * cw + j];
        at(F, c, 0) = none[c];
      }
      for (std::size_t i = 0; i < bag.size(); ++i) {
        const Vertex v = bag[i];
        const std::uint32_t cv = 1u << colour(v);
        auto it = std::lower_bound(cbag.begin(), cbag.end(), v);
        if (it != cbag.end() && *it == v) {
          const std::size_t j = static_cast<std::size_t>(it - cbag.begin()) + 1;
          for (std::uint32_t c = 0; c < subsets; ++c) at(F, c, i + 1) = child[c * cw + j];
        } else {
          for (std::uint32_t c = 0; c < subsets; ++c) {
            if (c & cv) at(F, c, i + 1) = weight(v) * none[c ^ cv];
          }
        }
      }
      std::vector<BigCount>().swap(child);
    } else {
      auto& left = tables[node.children[0]];
      auto& right = tables[node.children[1]];
      BigCount product, quotient;
      for (std::uint32_t c = 0; c < subsets; ++c) {
        // Empty selection: split C between the two sides.
        for (std::uint32_t c1 = c;; c1 = (c1 - 1) & c) {
          const auto& a = left[c1 * width];
          if (a != 0) {
            const auto& b = right[(c ^ c1) * width];
            if (b != 0) at(F, c, 0) += a * b;
          }
          if (c1 == 0) break;
        }
        for (std::size_t i = 0; i < bag.size(); ++i) {
          const Vertex v = bag[i];
          const std::uint32_t cv = 1u << colour(v);
          if (!(c & cv)) continue;
          // Both sides contain v, so their colour sets overlap in exactly cv.
          const std::uint32_t rest = c ^ cv;
          BigCount sum = 0;
          for (std::uint32_t r1 = rest;; r1 = (r1 - 1) & rest) {
            const auto& a = left[(r1 | cv) * width + i + 1];
            if (a != 0) {
              const auto& b = right[((rest ^ r1) | cv) * width + i + 1];
              if (b != 0) sum += a * b;
            }
            if (r1 == 0) break;
          }
          if (sum != 0) {
            mpz_tdiv_qr(quotient.get_mpz_t(), product.get_mpz_t(), sum.get_mpz_t(), weight(v).get_mpz_t());
            if (product != 0) throw Error(ErrorCode::precondition, "join division left a remainder");
            at(F, c, i + 1) = quotient;
          }
        }
      }
      std::vector<BigCount>().swap(left);
      std::vector<BigCount>().swap(right);
    }
  }

  const auto& root = tables[tree.root];
  const std::size_t width = tree.nodes[tree.root].bag.size() + 1;
  BigCount total = 0;
  for (std::size_t j = 0; j < width; ++j) total += root[full * width + j];
  return total;
}

}  // namespace chronos
