#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "unavoidable/errors.hpp"
#include "unavoidable/graph.hpp"
#include "unavoidable/trees.hpp"

namespace unavoidable {

namespace detail {

struct LeafStep {
  vertex_t leaf;
  vertex_t neighbour;
};

// Peels the tree (as an undirected graph) down to one vertex, always taking
// the lowest-index leaf. Returns the steps in removal order and the survivor.
inline std::pair<std::vector<LeafStep>, vertex_t> leaf_removal_order(const Graph& tree) {
  const std::size_t d = tree.vertex_count();
  std::vector<std::size_t> deg(d);
  std::vector<bool> gone(d, false);
  std::set<vertex_t> leaves;
  for (vertex_t v = 0; v < d; ++v) {
    deg[v] = tree.degree(v);
    if (deg[v] == 1) leaves.insert(v);
  }
  std::vector<LeafStep> steps;
  std::size_t remaining = d;
  std::size_t remaining_edges = tree.edge_count();
  while (remaining > 1) {
    if (leaves.empty()) throw consistency_error("tree ran out of leaves during peeling");
    vertex_t leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    vertex_t nb = d;
    for (vertex_t u : tree.neighbours(leaf))
      if (!gone[u]) nb = u;
    gone[leaf] = true;
    --remaining;
    --remaining_edges;
    if (remaining_edges + 1 != remaining)
      throw consistency_error("leaf removal did not leave a tree");
    if (--deg[nb] == 1 && remaining > 1) leaves.insert(nb);
    steps.push_back({leaf, nb});
  }
  vertex_t survivor = 0;
  while (survivor < d && gone[survivor]) ++survivor;
  return {std::move(steps), survivor};
}

// Full backtracking subgraph search, tree vertices taken in BFS order.
inline std::optional<std::vector<vertex_t>> backtrack_tree_subgraph(const Graph& g,
                                                                    const RootedTree& t,
                                                                    std::uint64_t budget) {
  const std::size_t d = t.size();
  std::vector<vertex_t> order{t.root()};
  for (std::size_t head = 0; head < order.size(); ++head)
    for (vertex_t c : t.children(order[head])) order.push_back(c);
  auto tree_degree = [&t](vertex_t v) { return t.children(v).size() + (t.parent(v) ? 1 : 0); };

  std::vector<vertex_t> image(d, 0);
  std::vector<bool> used(g.vertex_count(), false);
  std::uint64_t nodes = 0;
  bool out_of_budget = false;

  std::function<bool(std::size_t)> place = [&](std::size_t pos) {
    if (pos == d) return true;
    if (++nodes > budget) {
      out_of_budget = true;
      return false;
    }
    const vertex_t v = order[pos];
    auto try_host = [&](vertex_t x) {
      if (used[x] || g.degree(x) < tree_degree(v)) return false;
      used[x] = true;
      image[v] = x;
      if (place(pos + 1)) return true;
      used[x] = false;
      return false;
    };
    if (pos == 0) {
      for (vertex_t x = 0; x < g.vertex_count() && !out_of_budget; ++x)
        if (try_host(x)) return true;
    } else {
      for (vertex_t x : g.neighbours(image[*t.parent(v)])) {
        if (out_of_budget) break;
        if (try_host(x)) return true;
      }
    }
    return false;
  };
  if (place(0)) return image;
  return std::nullopt;
}

}  // namespace detail

/// Finds a (not necessarily induced) copy of `t` in `g`; result[v] is the
/// host image of tree vertex v.
///
/// When the degeneracy of g is at least |t|, the copy is built greedily inside
/// the |t|-core: every core vertex has |t| core neighbours while fewer than
/// |t| are in use, so each peeled leaf can be re-attached. Below that
/// threshold a budgeted backtracking search is tried instead and may give up.
inline std::optional<std::vector<vertex_t>> embed_tree_subgraph(const Graph& g,
                                                                const RootedTree& t,
                                                                SearchBudget budget = {}) {
  const std::size_t d = t.size();
  if (degeneracy(g).degeneracy < d) return detail::backtrack_tree_subgraph(g, t, budget.max_nodes);

  const VertexSet core = d_core(g, d);
  std::vector<bool> in_core(g.vertex_count(), false);
  for (vertex_t v : core) in_core[v] = true;

  auto [steps, base] = detail::leaf_removal_order(t.as_graph());
  std::vector<vertex_t> image(d, 0);
  std::vector<bool> used(g.vertex_count(), false);
  image[base] = core.front();
  used[core.front()] = true;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    std::optional<vertex_t> pick;
    for (vertex_t y : g.neighbours(image[it->neighbour]))
      if (in_core[y] && !used[y]) {
        pick = y;
        break;
      }
    if (!pick) throw consistency_error("core vertex ran out of free neighbours");
    image[it->leaf] = *pick;
    used[*pick] = true;
  }
  return image;
}

/// True iff `map` is injective into g and sends every tree edge to a g edge.
inline bool is_subgraph_embedding(const Graph& g, const RootedTree& t,
                                  const std::vector<vertex_t>& map) {
  if (map.size() != t.size()) return false;
  std::vector<bool> used(g.vertex_count(), false);
  for (vertex_t x : map) {
    if (x >= g.vertex_count() || used[x]) return false;
    used[x] = true;
  }
  for (auto [u, v] : t.edges())
    if (!g.has_edge(map[u], map[v])) return false;
  return true;
}

}  // namespace unavoidable
