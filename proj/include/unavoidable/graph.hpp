#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "unavoidable/errors.hpp"

namespace unavoidable {

using vertex_t = std::size_t;
using Edge = std::pair<vertex_t, vertex_t>;

// Sorted ascending, no duplicates, by convention.
using VertexSet = std::vector<vertex_t>;

/// Undirected simple graph on the dense vertex range [0, vertex_count).
///
/// Neighbour lists are kept sorted so that every traversal is deterministic
/// and `has_edge` is a binary search.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count) : adj_(vertex_count) {}

  Graph(std::size_t vertex_count, std::span<const Edge> edges) : adj_(vertex_count) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  std::size_t vertex_count() const noexcept { return adj_.size(); }

  std::size_t edge_count() const noexcept {
    std::size_t twice = 0;
    for (const auto& nb : adj_) twice += nb.size();
    return twice / 2;
  }

  // Adding an existing edge is a no-op.
  void add_edge(vertex_t u, vertex_t v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
  }

  bool has_edge(vertex_t u, vertex_t v) const {
    if (u >= adj_.size() || v >= adj_.size()) return false;
    const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    const vertex_t other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(nb.begin(), nb.end(), other);
  }

  std::span<const vertex_t> neighbours(vertex_t v) const {
    check_vertex(v);
    return adj_[v];
  }

  std::size_t degree(vertex_t v) const { return neighbours(v).size(); }

  // Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (vertex_t u = 0; u < adj_.size(); ++u)
      for (vertex_t v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(vertex_t v) const {
    if (v >= adj_.size())
      throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " +
                                  std::to_string(adj_.size()) + ")");
  }

  static void insert_sorted(std::vector<vertex_t>& list, vertex_t v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it == list.end() || *it != v) list.insert(it, v);
  }

  std::vector<std::vector<vertex_t>> adj_;
};

// ---------------------------------------------------------------------------
// Standard families

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (vertex_t u = 0; u < n; ++u)
    for (vertex_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

// Sides are [0, a) and [a, a + b).
inline Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (vertex_t u = 0; u < a; ++u)
    for (vertex_t v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (vertex_t v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline Graph complement(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Graph out(n);
  for (vertex_t u = 0; u < n; ++u)
    for (vertex_t v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

// ---------------------------------------------------------------------------
// Degeneracy and cores

struct EliminationOrder {
  std::vector<vertex_t> order;
  std::size_t degeneracy = 0;
};

/// Exact degeneracy by repeated minimum-degree removal. Ties go to the
/// smallest vertex index, so the order is fully determined by the graph.
inline EliminationOrder degeneracy(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> deg(n);
  std::set<std::pair<std::size_t, vertex_t>> queue;
  for (vertex_t v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<bool> removed(n, false);
  EliminationOrder result;
  result.order.reserve(n);
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = true;
    result.order.push_back(v);
    result.degeneracy = std::max(result.degeneracy, d);
    for (vertex_t u : g.neighbours(v)) {
      if (removed[u]) continue;
      queue.erase({deg[u], u});
      queue.emplace(--deg[u], u);
    }
  }
  return result;
}

/// Maximum vertex set inducing minimum degree >= d; empty when none exists.
inline VertexSet d_core(const Graph& g, std::size_t d) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> deg(n);
  std::vector<bool> removed(n, false);
  std::deque<vertex_t> pending;
  for (vertex_t v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] < d) {
      removed[v] = true;
      pending.push_back(v);
    }
  }
  while (!pending.empty()) {
    vertex_t v = pending.front();
    pending.pop_front();
    for (vertex_t u : g.neighbours(v)) {
      if (removed[u]) continue;
      if (--deg[u] < d) {
        removed[u] = true;
        pending.push_back(u);
      }
    }
  }
  VertexSet core;
  for (vertex_t v = 0; v < n; ++v)
    if (!removed[v]) core.push_back(v);
  return core;
}

// ---------------------------------------------------------------------------
// Induced subgraphs

struct InducedSubgraph {
  Graph graph;
  // to_host[i] is the host vertex that became vertex i.
  std::vector<vertex_t> to_host;
};

/// Vertex i of the result is members[i]; the given order is kept.
inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const vertex_t> members) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> local(n, n);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] >= n)
      throw std::invalid_argument("vertex " + std::to_string(members[i]) + " out of range");
    if (local[members[i]] != n)
      throw std::invalid_argument("duplicate vertex " + std::to_string(members[i]));
    local[members[i]] = i;
  }
  InducedSubgraph out{Graph(members.size()), {members.begin(), members.end()}};
  for (std::size_t i = 0; i < members.size(); ++i)
    for (vertex_t u : g.neighbours(members[i]))
      if (local[u] != n && local[u] > i) out.graph.add_edge(i, local[u]);
  return out;
}

/// True iff `map` carries `pattern` onto an induced copy inside `host`.
inline bool is_induced_copy(const Graph& host, const Graph& pattern,
                            std::span<const vertex_t> map) {
  if (map.size() != pattern.vertex_count())
    throw std::invalid_argument("map must cover every pattern vertex");
  std::vector<bool> used(host.vertex_count(), false);
  for (vertex_t image : map) {
    if (image >= host.vertex_count())
      throw std::invalid_argument("map image " + std::to_string(image) + " out of range");
    if (used[image]) throw std::invalid_argument("map is not injective");
    used[image] = true;
  }
  for (vertex_t u = 0; u < map.size(); ++u)
    for (vertex_t v = u + 1; v < map.size(); ++v)
      if (pattern.has_edge(u, v) != host.has_edge(map[u], map[v])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Exhaustive detectors

struct SearchBudget {
  std::uint64_t max_nodes = 20'000'000;
};

enum class SearchStatus { found, absent, budget_exhausted };

template <typename T>
struct SearchResult {
  SearchStatus status = SearchStatus::absent;
  T value{};

  bool found() const noexcept { return status == SearchStatus::found; }
  bool exhausted() const noexcept { return status == SearchStatus::budget_exhausted; }
};

// Pipeline stages call this: running out of budget is never "absent".
template <typename T>
const SearchResult<T>& require_decided(const SearchResult<T>& r, const char* what) {
  if (r.exhausted()) throw search_budget_exceeded(std::string(what) + ": node budget exhausted");
  return r;
}

namespace detail {

// Finds `size` members of `candidates` that are pairwise `compatible`, with
// plain size-bound pruning. Returns false when the node budget runs out.
class SetSearch {
 public:
  using Compatible = std::function<bool(vertex_t, vertex_t)>;

  SetSearch(Compatible compatible, std::uint64_t budget, std::uint64_t* nodes)
      : compatible_(std::move(compatible)), budget_(budget), nodes_(nodes) {}

  SearchStatus run(std::vector<vertex_t> candidates, std::size_t size, VertexSet& out) {
    chosen_.clear();
    target_ = size;
    if (size == 0) {
      out.clear();
      return SearchStatus::found;
    }
    auto st = expand(candidates);
    if (st == SearchStatus::found) {
      out = chosen_;
      std::sort(out.begin(), out.end());
    }
    return st;
  }

 private:
  SearchStatus expand(const std::vector<vertex_t>& cand) {
    if (++*nodes_ > budget_) return SearchStatus::budget_exhausted;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (chosen_.size() + (cand.size() - i) < target_) return SearchStatus::absent;
      const vertex_t v = cand[i];
      chosen_.push_back(v);
      if (chosen_.size() == target_) return SearchStatus::found;
      std::vector<vertex_t> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        if (compatible_(v, cand[j])) next.push_back(cand[j]);
      auto st = expand(next);
      if (st != SearchStatus::absent) return st;
      chosen_.pop_back();
    }
    return SearchStatus::absent;
  }

  Compatible compatible_;
  std::uint64_t budget_;
  std::uint64_t* nodes_;
  std::size_t target_ = 0;
  VertexSet chosen_;
};

}  // namespace detail

/// Exhaustive search for a clique on p vertices (cliques are always induced).
inline SearchResult<VertexSet> find_induced_clique(const Graph& g, std::size_t p,
                                                   SearchBudget budget = {}) {
  if (p == 0) throw std::invalid_argument("clique size must be at least 1");
  std::vector<vertex_t> cand;
  for (vertex_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) + 1 >= p) cand.push_back(v);
  std::uint64_t nodes = 0;
  detail::SetSearch search([&g](vertex_t u, vertex_t v) { return g.has_edge(u, v); },
                           budget.max_nodes, &nodes);
  SearchResult<VertexSet> r;
  r.status = search.run(std::move(cand), p, r.value);
  return r;
}

/// Independent set search, run as clique search on the complement.
inline SearchResult<VertexSet> find_independent_set(const Graph& g, std::size_t p,
                                                    SearchBudget budget = {}) {
  return find_induced_clique(complement(g), p, budget);
}

struct BicliqueSides {
  VertexSet side_a;
  VertexSet side_b;
};

/// Exhaustive search for an induced K_{p,p}: two independent p-sets that are
/// complete to each other. side_a holds the smaller minimum vertex.
inline SearchResult<BicliqueSides> find_induced_biclique(const Graph& g, std::size_t p,
                                                         SearchBudget budget = {}) {
  if (p == 0) throw std::invalid_argument("biclique side must be at least 1");
  const std::size_t n = g.vertex_count();
  std::uint64_t nodes = 0;
  SearchResult<BicliqueSides> result;
  VertexSet side_a;

  auto independent = [&g](vertex_t u, vertex_t v) { return !g.has_edge(u, v); };

  // Grows side A over `extend`; `common` holds vertices adjacent to all of A.
  std::function<SearchStatus(const std::vector<vertex_t>&, const std::vector<vertex_t>&)> grow =
      [&](const std::vector<vertex_t>& extend, const std::vector<vertex_t>& common) {
        if (++nodes > budget.max_nodes) return SearchStatus::budget_exhausted;
        if (side_a.size() == p) {
          std::vector<vertex_t> pool;
          for (vertex_t v : common)
            if (v > side_a.front()) pool.push_back(v);
          detail::SetSearch inner(independent, budget.max_nodes, &nodes);
          VertexSet side_b;
          auto st = inner.run(std::move(pool), p, side_b);
          if (st == SearchStatus::found) result.value = {side_a, side_b};
          return st;
        }
        for (std::size_t i = 0; i < extend.size(); ++i) {
          if (side_a.size() + (extend.size() - i) < p) break;
          const vertex_t v = extend[i];
          std::vector<vertex_t> next_common;
          for (vertex_t u : common)
            if (g.has_edge(u, v)) next_common.push_back(u);
          if (next_common.size() < p) continue;
          std::vector<vertex_t> next_extend;
          for (std::size_t j = i + 1; j < extend.size(); ++j)
            if (!g.has_edge(v, extend[j])) next_extend.push_back(extend[j]);
          side_a.push_back(v);
          auto st = grow(next_extend, next_common);
          if (st != SearchStatus::absent) return st;
          side_a.pop_back();
        }
        return SearchStatus::absent;
      };

  std::vector<vertex_t> start;
  for (vertex_t v = 0; v < n; ++v)
    if (g.degree(v) >= p) start.push_back(v);
  std::vector<vertex_t> all(n);
  for (vertex_t v = 0; v < n; ++v) all[v] = v;
  result.status = grow(start, all);
  return result;
}

}  // namespace unavoidable
