#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "unavoidable/big_count.hpp"
#include "unavoidable/errors.hpp"
#include "unavoidable/graph.hpp"

namespace unavoidable {

/// Rooted tree over vertices [0, size). Children are ordered by index and
/// each vertex records its generation (distance from the root).
class RootedTree {
 public:
  /// Builds from parent links; exactly one entry must be empty (the root).
  static RootedTree from_parents(std::vector<std::optional<vertex_t>> parent) {
    RootedTree t;
    const std::size_t n = parent.size();
    if (n == 0) throw std::invalid_argument("a rooted tree needs at least one vertex");
    t.parent_ = std::move(parent);
    t.children_.assign(n, {});
    std::optional<vertex_t> root;
    for (vertex_t v = 0; v < n; ++v) {
      if (!t.parent_[v]) {
        if (root) throw std::invalid_argument("more than one root");
        root = v;
        continue;
      }
      vertex_t p = *t.parent_[v];
      if (p >= n) throw std::invalid_argument("parent of " + std::to_string(v) + " out of range");
      if (p == v) throw std::invalid_argument("vertex " + std::to_string(v) + " is its own parent");
      t.children_[p].push_back(v);
    }
    if (!root) throw std::invalid_argument("no root");
    t.root_ = *root;
    t.index();
    return t;
  }

  std::size_t size() const noexcept { return parent_.size(); }
  vertex_t root() const noexcept { return root_; }
  std::optional<vertex_t> parent(vertex_t v) const { return parent_.at(v); }
  std::span<const vertex_t> children(vertex_t v) const { return children_.at(v); }
  std::size_t generation(vertex_t v) const { return generation_.at(v); }
  std::size_t height() const noexcept { return height_; }

  // Strict: a vertex is not its own ancestor.
  bool is_ancestor(vertex_t a, vertex_t d) const {
    return a != d && tin_.at(a) <= tin_.at(d) && tout_.at(d) <= tout_.at(a);
  }

  bool related(vertex_t u, vertex_t v) const { return is_ancestor(u, v) || is_ancestor(v, u); }

  // The generation-`gen` ancestor of v (v itself when gen == generation(v)).
  vertex_t ancestor_at(vertex_t v, std::size_t gen) const {
    if (gen > generation(v)) throw std::invalid_argument("ancestor generation below vertex");
    while (generation_[v] > gen) v = *parent_[v];
    return v;
  }

  std::vector<vertex_t> generation_members(std::size_t gen) const {
    std::vector<vertex_t> out;
    for (vertex_t v : preorder_)
      if (generation_[v] == gen) out.push_back(v);
    return out;
  }

  // Descendants of v at generation `gen`, in preorder (children by index).
  std::vector<vertex_t> descendants_at(vertex_t v, std::size_t gen) const {
    std::vector<vertex_t> out;
    for (std::size_t i = tin_.at(v); i < tout_.at(v); ++i)
      if (generation_[preorder_[i]] == gen) out.push_back(preorder_[i]);
    return out;
  }

  // v and all its descendants, in preorder.
  std::vector<vertex_t> subtree(vertex_t v) const {
    return {preorder_.begin() + static_cast<std::ptrdiff_t>(tin_.at(v)),
            preorder_.begin() + static_cast<std::ptrdiff_t>(tout_.at(v))};
  }

  std::size_t max_branching() const {
    std::size_t best = 0;
    for (const auto& c : children_) best = std::max(best, c.size());
    return best;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (vertex_t v = 0; v < size(); ++v)
      if (parent_[v]) out.emplace_back(std::min(v, *parent_[v]), std::max(v, *parent_[v]));
    std::sort(out.begin(), out.end());
    return out;
  }

  Graph as_graph() const {
    auto e = edges();
    return Graph(size(), e);
  }

  const std::vector<std::optional<vertex_t>>& parents() const noexcept { return parent_; }

 private:
  void index() {
    const std::size_t n = size();
    generation_.assign(n, 0);
    tin_.assign(n, 0);
    tout_.assign(n, 0);
    preorder_.clear();
    preorder_.reserve(n);
    height_ = 0;
    // iterative preorder DFS
    std::vector<std::pair<vertex_t, std::size_t>> stack{{root_, 0}};
    tin_[root_] = 0;
    preorder_.push_back(root_);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < children_[v].size()) {
        vertex_t c = children_[v][next++];
        generation_[c] = generation_[v] + 1;
        height_ = std::max(height_, generation_[c]);
        tin_[c] = preorder_.size();
        preorder_.push_back(c);
        stack.emplace_back(c, 0);
      } else {
        tout_[v] = preorder_.size();
        stack.pop_back();
      }
    }
    if (preorder_.size() != n)
      throw std::invalid_argument("parent links do not form a single tree");
  }

  std::vector<std::optional<vertex_t>> parent_;
  std::vector<std::vector<vertex_t>> children_;
  std::vector<std::size_t> generation_;
  std::vector<std::size_t> tin_, tout_;
  std::vector<vertex_t> preorder_;
  vertex_t root_ = 0;
  std::size_t height_ = 0;
};

/// Child counts per generation: the (k1, ..., kn) of a (k1, ..., kn)-tree.
class BranchingVector {
 public:
  BranchingVector() = default;
  explicit BranchingVector(std::vector<std::size_t> ks) : ks_(std::move(ks)) {
    for (auto k : ks_)
      if (k == 0) throw std::invalid_argument("branching entries must be positive");
  }

  // The n-tree: n generations below the root, each vertex with n children.
  static BranchingVector n_tree(std::size_t n) {
    return BranchingVector(std::vector<std::size_t>(n, n));
  }

  std::size_t height() const noexcept { return ks_.size(); }
  std::span<const std::size_t> entries() const noexcept { return ks_; }
  std::size_t operator[](std::size_t i) const { return ks_.at(i); }

  friend bool operator==(const BranchingVector&, const BranchingVector&) = default;

 private:
  std::vector<std::size_t> ks_;
};

/// 1 + p1 + p1 p2 + ... + p1 p2 ... pt, exactly.
template <typename Count>
BigCount tree_size(std::span<const Count> ks) {
  BigCount total = 1;
  BigCount layer = 1;
  for (const auto& k : ks) {
    layer *= BigCount(k);
    total += layer;
  }
  return total;
}

inline BigCount tree_size(const BranchingVector& bv) { return tree_size(bv.entries()); }

inline constexpr std::size_t default_vertex_limit = std::size_t{1} << 24;

/// The (k1, ..., kn)-tree with breadth-first numbering: root 0, then each
/// generation left to right.
inline RootedTree build_k_tree(const BranchingVector& bv,
                               std::size_t vertex_limit = default_vertex_limit) {
  if (tree_size(bv) > BigCount(vertex_limit))
    throw capacity_error("tree of size " + tree_size(bv).str() + " exceeds the vertex limit " +
                         std::to_string(vertex_limit));
  std::vector<std::optional<vertex_t>> parent{std::nullopt};
  std::vector<vertex_t> layer{0};
  for (std::size_t k : bv.entries()) {
    std::vector<vertex_t> next;
    for (vertex_t v : layer)
      for (std::size_t c = 0; c < k; ++c) {
        next.push_back(parent.size());
        parent.emplace_back(v);
      }
    layer = std::move(next);
  }
  return RootedTree::from_parents(std::move(parent));
}

/// A graph together with a spanning rooted tree made of host edges.
class HostedTree {
 public:
  HostedTree(Graph host, RootedTree tree) : host_(std::move(host)), tree_(std::move(tree)) {
    if (host_.vertex_count() != tree_.size())
      throw std::invalid_argument("host and tree vertex counts differ");
    for (auto [u, v] : tree_.edges())
      if (!host_.has_edge(u, v))
        throw std::invalid_argument("tree edge " + std::to_string(u) + "-" + std::to_string(v) +
                                    " is not a host edge");
  }

  // The tree as its own host: no non-tree edges.
  static HostedTree bare(const RootedTree& tree) { return HostedTree(tree.as_graph(), tree); }

  const Graph& host() const noexcept { return host_; }
  const RootedTree& tree() const noexcept { return tree_; }
  std::size_t size() const noexcept { return tree_.size(); }

  std::vector<Edge> non_tree_edges() const {
    std::vector<Edge> out;
    for (auto [u, v] : host_.edges())
      if (tree_.parent(u) != v && tree_.parent(v) != u) out.emplace_back(u, v);
    return out;
  }

 private:
  Graph host_;
  RootedTree tree_;
};

/// A hosted tree cut out of a larger one; origin[i] is vertex i's index in
/// the tree it was extracted from.
struct ExtractedTree {
  HostedTree hosted;
  std::vector<vertex_t> origin;
};

/// Keeps the vertices flagged in `keep`, which must contain the root and be
/// closed under taking parents. Relabels breadth-first with children in their
/// original order, so a bare (k1..kn)-tree maps onto build_k_tree numbering.
inline ExtractedTree extract_subtree(const HostedTree& ht, const std::vector<bool>& keep) {
  const RootedTree& t = ht.tree();
  if (keep.size() != t.size()) throw std::invalid_argument("keep mask has the wrong size");
  if (!keep[t.root()]) throw std::invalid_argument("extraction must keep the root");
  std::vector<vertex_t> order{t.root()};
  for (std::size_t head = 0; head < order.size(); ++head)
    for (vertex_t c : t.children(order[head]))
      if (keep[c]) order.push_back(c);
  std::vector<vertex_t> local(t.size(), t.size());
  for (std::size_t i = 0; i < order.size(); ++i) local[order[i]] = i;
  for (vertex_t v = 0; v < t.size(); ++v)
    if (keep[v] && local[v] == t.size())
      throw std::invalid_argument("kept vertex " + std::to_string(v) + " lost its parent");
  std::vector<std::optional<vertex_t>> parent(order.size());
  for (std::size_t i = 1; i < order.size(); ++i) parent[i] = local[*t.parent(order[i])];
  auto sub = induced_subgraph(ht.host(), order);
  return {HostedTree(std::move(sub.graph), RootedTree::from_parents(std::move(parent))),
          std::move(order)};
}

/// Generations 0..max_generation only.
inline ExtractedTree truncate(const HostedTree& ht, std::size_t max_generation) {
  std::vector<bool> keep(ht.size());
  for (vertex_t v = 0; v < ht.size(); ++v) keep[v] = ht.tree().generation(v) <= max_generation;
  return extract_subtree(ht, keep);
}

// ---------------------------------------------------------------------------
// Structural checks

struct DescendantOnlyReport {
  std::vector<Edge> violations;
  bool ok() const noexcept { return violations.empty(); }
};

inline DescendantOnlyReport check_descendant_only(const HostedTree& ht) {
  DescendantOnlyReport report;
  for (auto [u, v] : ht.non_tree_edges())
    if (!ht.tree().related(u, v)) report.violations.emplace_back(u, v);
  return report;
}

enum class LinkStatus { complete, anticomplete, mixed };

inline const char* to_string(LinkStatus s) {
  switch (s) {
    case LinkStatus::complete: return "complete";
    case LinkStatus::anticomplete: return "anticomplete";
    case LinkStatus::mixed: return "mixed";
  }
  return "?";
}

/// Complete / anticomplete / mixed status of every generation pair i < j.
class LinkProfile {
 public:
  explicit LinkProfile(std::size_t height)
      : height_(height), status_((height + 1) * (height + 1), LinkStatus::anticomplete) {}

  std::size_t height() const noexcept { return height_; }

  LinkStatus status(std::size_t i, std::size_t j) const { return status_.at(slot(i, j)); }
  void set(std::size_t i, std::size_t j, LinkStatus s) { status_.at(slot(i, j)) = s; }

  bool linked_generation() const {
    for (std::size_t i = 0; i <= height_; ++i)
      for (std::size_t j = i + 1; j <= height_; ++j)
        if (status(i, j) == LinkStatus::mixed) return false;
    return true;
  }

 private:
  std::size_t slot(std::size_t i, std::size_t j) const {
    if (i >= j || j > height_) throw std::out_of_range("generation pair out of range");
    return i * (height_ + 1) + j;
  }

  std::size_t height_;
  std::vector<LinkStatus> status_;
};

/// Scans every (vertex at i, descendant at j) pair. Requires a
/// descendant-only input.
inline LinkProfile check_linked_generation(const HostedTree& ht) {
  if (!check_descendant_only(ht).ok())
    throw std::invalid_argument("linked-generation check needs a descendant-only tree");
  const RootedTree& t = ht.tree();
  const std::size_t h = t.height();
  std::vector<std::size_t> adjacent((h + 1) * (h + 1), 0), total((h + 1) * (h + 1), 0);
  for (vertex_t w = 0; w < t.size(); ++w) {
    const std::size_t j = t.generation(w);
    for (auto a = t.parent(w); a; a = t.parent(*a)) {
      const std::size_t slot = t.generation(*a) * (h + 1) + j;
      ++total[slot];
      if (ht.host().has_edge(*a, w)) ++adjacent[slot];
    }
  }
  LinkProfile profile(h);
  for (std::size_t i = 0; i <= h; ++i)
    for (std::size_t j = i + 1; j <= h; ++j) {
      const std::size_t slot = i * (h + 1) + j;
      profile.set(i, j, adjacent[slot] == 0            ? LinkStatus::anticomplete
                        : adjacent[slot] == total[slot] ? LinkStatus::complete
                                                        : LinkStatus::mixed);
    }
  return profile;
}

// ---------------------------------------------------------------------------
// Forests inside n-trees

struct ForestEmbedding {
  std::size_t n = 1;
  // map[v] is the n-tree vertex (build_k_tree numbering) hosting forest vertex v.
  std::vector<vertex_t> map;
};

/// Places a forest as an induced subgraph of some n-tree. Each component is
/// rooted at its lowest vertex and laid out along tree children; with one
/// component it sits at the n-tree root, otherwise component c hangs from the
/// root's c-th child so distinct components never touch.
inline ForestEmbedding embed_forest_in_n_tree(const Graph& f) {
  const std::size_t size = f.vertex_count();
  // union-find cycle check
  std::vector<vertex_t> uf(size);
  std::iota(uf.begin(), uf.end(), vertex_t{0});
  auto find = [&uf](vertex_t v) {
    while (uf[v] != v) v = uf[v] = uf[uf[v]];
    return v;
  };
  for (auto [u, v] : f.edges()) {
    auto ru = find(u), rv = find(v);
    if (ru == rv) throw std::invalid_argument("graph has a cycle");
    uf[ru] = rv;
  }

  // Root components at their lowest vertex; BFS gives children and depth.
  std::vector<vertex_t> roots;
  std::vector<std::vector<vertex_t>> kids(size);
  std::vector<std::size_t> depth(size, 0);
  std::vector<bool> seen(size, false);
  std::size_t max_children = 0, max_height = 0;
  for (vertex_t r = 0; r < size; ++r) {
    if (seen[r]) continue;
    roots.push_back(r);
    seen[r] = true;
    std::vector<vertex_t> queue{r};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      vertex_t v = queue[head];
      for (vertex_t u : f.neighbours(v)) {
        if (seen[u]) continue;
        seen[u] = true;
        depth[u] = depth[v] + 1;
        max_height = std::max(max_height, depth[u]);
        kids[v].push_back(u);
        queue.push_back(u);
      }
      max_children = std::max(max_children, kids[v].size());
    }
  }
  const std::size_t components = roots.size();
  const std::size_t offset = components > 1 ? 1 : 0;
  ForestEmbedding out;
  out.n = std::max({components, max_children, max_height + offset, std::size_t{1}});
  out.map.assign(size, 0);
  if (size == 0) return out;

  // In build_k_tree numbering of the n-tree, the c-th child of vertex x at
  // generation g is first_index(g + 1) + n * (x - first_index(g)) + c.
  const std::size_t n = out.n;
  std::vector<std::size_t> first{0};
  for (std::size_t g = 0, width = 1; g < n; ++g, width *= n) first.push_back(first.back() + width);
  auto child = [&](vertex_t x, std::size_t gen, std::size_t c) {
    return first[gen + 1] + n * (x - first[gen]) + c;
  };

  for (std::size_t c = 0; c < components; ++c) {
    const vertex_t r = roots[c];
    out.map[r] = offset ? child(0, 0, c) : 0;
    std::vector<vertex_t> queue{r};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      vertex_t v = queue[head];
      for (std::size_t i = 0; i < kids[v].size(); ++i) {
        out.map[kids[v][i]] = child(out.map[v], depth[v] + offset, i);
        queue.push_back(kids[v][i]);
      }
    }
  }
  return out;
}

}  // namespace unavoidable
