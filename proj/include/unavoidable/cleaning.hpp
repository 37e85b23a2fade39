#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "unavoidable/certificates.hpp"
#include "unavoidable/detectors.hpp"
#include "unavoidable/errors.hpp"
#include "unavoidable/graph.hpp"
#include "unavoidable/trees.hpp"

namespace unavoidable {

// ---------------------------------------------------------------------------
// Anticomplete subfamilies

struct Anticomplete {
  std::vector<std::size_t> indices;  // ascending family indices
};

struct Exhausted {};

using FamilyOutcome = std::variant<Anticomplete, CliqueCert, BicliqueCert, Exhausted>;

/// Graph on family indices with an edge whenever two subsets touch.
inline Graph conflict_graph(const Graph& g, const std::vector<VertexSet>& family) {
  std::vector<std::size_t> owner(g.vertex_count(), family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].empty()) throw std::invalid_argument("family subsets must be nonempty");
    for (vertex_t v : family[i]) {
      if (v >= g.vertex_count())
        throw std::invalid_argument("family vertex " + std::to_string(v) + " out of range");
      if (owner[v] != family.size())
        throw std::invalid_argument("family subsets overlap at vertex " + std::to_string(v));
      owner[v] = i;
    }
  }
  Graph conflicts(family.size());
  for (std::size_t i = 0; i < family.size(); ++i)
    for (vertex_t v : family[i])
      for (vertex_t u : g.neighbours(v))
        if (owner[u] != family.size() && owner[u] != i) conflicts.add_edge(i, owner[u]);
  return conflicts;
}

/// Looks for p pairwise anticomplete subsets, else an induced K_p or K_{p,p}
/// inside the union of the family, trying the three in `order`. Certificates
/// use host indices.
inline FamilyOutcome anticomplete_subfamily(const Graph& g, const std::vector<VertexSet>& family,
                                            std::size_t p,
                                            DetectorOrder order = default_detector_order,
                                            SearchBudget budget = {}) {
  if (p == 0) throw std::invalid_argument("p must be at least 1");
  const Graph conflicts = conflict_graph(g, family);

  VertexSet members;
  for (const auto& s : family) members.insert(members.end(), s.begin(), s.end());
  std::sort(members.begin(), members.end());
  std::optional<InducedSubgraph> joined;
  auto union_graph = [&]() -> const InducedSubgraph& {
    if (!joined) joined = induced_subgraph(g, members);
    return *joined;
  };

  for (Structure s : order) {
    switch (s) {
      case Structure::tree: {
        auto r = require_decided(find_independent_set(conflicts, p, budget), "anticomplete subfamily");
        if (r.found()) return Anticomplete{r.value};
        break;
      }
      case Structure::clique: {
        const auto& u = union_graph();
        auto r = require_decided(find_induced_clique(u.graph, p, budget), "family clique");
        if (r.found()) return std::get<CliqueCert>(relabel(CliqueCert{r.value}, u.to_host));
        break;
      }
      case Structure::biclique: {
        const auto& u = union_graph();
        auto r = require_decided(find_induced_biclique(u.graph, p, budget), "family biclique");
        if (r.found())
          return std::get<BicliqueCert>(
              relabel(BicliqueCert{r.value.side_a, r.value.side_b}, u.to_host));
        break;
      }
    }
  }
  return Exhausted{};
}

// ---------------------------------------------------------------------------
// Descendant-only extraction

struct Insufficient {
  std::string reason;
};

using CleanOutcome = std::variant<ExtractedTree, CliqueCert, BicliqueCert, Insufficient>;

namespace detail {

// A uniform m-ary selection below some vertex: `height` generations deep,
// each selected vertex keeping exactly m selected children.
struct Selection {
  std::size_t height = 0;
  std::vector<std::pair<vertex_t, Selection>> children;
};

using SelectionOrCert = std::variant<Selection, Certificate>;

inline SelectionOrCert select_descendant_only(const HostedTree& ht, vertex_t v, std::size_t m,
                                              const DetectorOrder& order,
                                              const SearchBudget& budget) {
  const RootedTree& t = ht.tree();
  const auto kids = t.children(v);
  if (kids.empty()) return Selection{};

  std::vector<VertexSet> family;
  for (vertex_t c : kids) {
    auto sub = t.subtree(c);
    std::sort(sub.begin(), sub.end());
    family.push_back(std::move(sub));
  }
  FamilyOutcome outcome = anticomplete_subfamily(ht.host(), family, m, order, budget);
  if (auto* c = std::get_if<CliqueCert>(&outcome)) return Certificate{*c};
  if (auto* b = std::get_if<BicliqueCert>(&outcome)) return Certificate{*b};
  if (std::holds_alternative<Exhausted>(outcome)) return Selection{};

  // Widen to a largest anticomplete subfamily so the recursion has more
  // subtrees to choose the deepest m from.
  std::vector<std::size_t> chosen = std::get<Anticomplete>(outcome).indices;
  const Graph conflicts = conflict_graph(ht.host(), family);
  for (std::size_t size = family.size(); size > chosen.size(); --size) {
    auto r = find_independent_set(conflicts, size, budget);
    if (r.found()) {
      chosen = r.value;
      break;
    }
  }

  std::vector<std::pair<vertex_t, Selection>> below;
  for (std::size_t idx : chosen) {
    auto sub = select_descendant_only(ht, kids[idx], m, order, budget);
    if (auto* cert = std::get_if<Certificate>(&sub)) return *cert;
    below.emplace_back(kids[idx], std::move(std::get<Selection>(sub)));
  }
  std::stable_sort(below.begin(), below.end(),
                   [](const auto& a, const auto& b) { return a.second.height > b.second.height; });
  below.resize(m);
  std::sort(below.begin(), below.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Selection out;
  out.height = 1 + below.back().second.height;
  for (const auto& [c, s] : below) out.height = std::min(out.height, 1 + s.height);
  out.children = std::move(below);
  return out;
}

inline void mark_selection(const Selection& s, vertex_t v, std::size_t depth,
                           std::vector<bool>& keep) {
  keep[v] = true;
  if (depth == 0) return;
  for (const auto& [c, sub] : s.children) mark_selection(sub, c, depth - 1, keep);
}

}  // namespace detail

/// Extracts an induced descendant-only (m, ..., m)-tree rooted at the input
/// root, as deep as the recursion allows, or a K_m / K_{m,m} certificate in
/// host indices.
///
/// At every vertex the child subtrees form a disjoint family; an anticomplete
/// subfamily of size >= m is recursed into and the m deepest results are
/// kept. Subtrees with no edges between them cannot create a non-tree edge
/// between unrelated vertices, which is what keeps the result descendant-only.
inline CleanOutcome clean_descendant_only(const HostedTree& ht, std::size_t m,
                                          DetectorOrder order = default_detector_order,
                                          SearchBudget budget = {}) {
  if (m == 0) throw std::invalid_argument("m must be at least 1");
  auto top = detail::select_descendant_only(ht, ht.tree().root(), m, order, budget);
  if (auto* cert = std::get_if<Certificate>(&top)) {
    if (auto* c = std::get_if<CliqueCert>(cert)) return *c;
    return std::get<BicliqueCert>(*cert);
  }
  const auto& sel = std::get<detail::Selection>(top);
  if (sel.height == 0)
    return Insufficient{"root has fewer than " + std::to_string(m) +
                        " pairwise anticomplete child subtrees and no K_" + std::to_string(m) +
                        " or K_" + std::to_string(m) + "," + std::to_string(m)};
  std::vector<bool> keep(ht.size(), false);
  detail::mark_selection(sel, ht.tree().root(), sel.height, keep);
  ExtractedTree out = extract_subtree(ht, keep);
  if (!check_descendant_only(out.hosted).ok())
    throw consistency_error("descendant-only extraction produced a cross edge");
  return out;
}

// ---------------------------------------------------------------------------
// Majority-rule cleaning

struct ChildLoss {
  vertex_t vertex;       // index in the input tree
  std::size_t before;    // children before cleaning
  std::size_t after;     // surviving children
  bool strict_majority;  // the vertex's colour won outright (no tie)

  bool within_bound() const noexcept {
    return strict_majority ? 2 * after >= before + (before % 2) : 2 * after >= before - (before % 2);
  }
};

struct PairCleaning {
  ExtractedTree result;
  bool root_black = false;
  std::vector<ChildLoss> losses;
};

/// Makes generation i complete or anticomplete to its generation-j
/// descendants. Generation-j vertices are black when adjacent to their
/// generation-i ancestor; colours propagate upward by strict majority of
/// children (ties white); every vertex coloured unlike the root is removed
/// together with its descendants.
inline PairCleaning majority_clean_pair(const HostedTree& ht, std::size_t i, std::size_t j) {
  const RootedTree& t = ht.tree();
  if (j < i + 2) throw std::invalid_argument("generations must be at least two apart");
  if (j > t.height()) throw std::invalid_argument("generation j beyond the tree height");
  if (!check_descendant_only(ht).ok())
    throw std::invalid_argument("majority cleaning needs a descendant-only tree");

  const std::size_t n = t.size();
  std::vector<char> black(n, 0);
  std::vector<std::vector<vertex_t>> by_gen(j + 1);
  for (vertex_t v = 0; v < n; ++v)
    if (t.generation(v) <= j) by_gen[t.generation(v)].push_back(v);
  for (vertex_t v : by_gen[j]) black[v] = ht.host().has_edge(t.ancestor_at(v, i), v);

  std::vector<char> tie(n, 0);
  for (std::size_t gen = j; gen-- > 0;)
    for (vertex_t v : by_gen[gen]) {
      std::size_t b = 0, w = 0;
      for (vertex_t c : t.children(v)) (black[c] ? b : w)++;
      black[v] = b > w;
      tie[v] = b == w;
    }
  const char root_colour = black[t.root()];

  std::vector<bool> keep(n, false);
  std::vector<vertex_t> bfs{t.root()};
  keep[t.root()] = true;
  for (std::size_t head = 0; head < bfs.size(); ++head)
    for (vertex_t c : t.children(bfs[head])) {
      keep[c] = t.generation(c) > j || black[c] == root_colour;
      if (keep[c]) bfs.push_back(c);
    }

  PairCleaning out{extract_subtree(ht, keep), root_colour != 0, {}};
  for (vertex_t v : bfs) {
    if (t.generation(v) >= j) continue;
    std::size_t after = 0;
    for (vertex_t c : t.children(v)) after += keep[c];
    ChildLoss loss{v, t.children(v).size(), after, !tie[v]};
    if (!loss.within_bound())
      throw consistency_error("vertex " + std::to_string(v) + " lost more than half its children");
    out.losses.push_back(loss);
  }
  return out;
}

struct PairStep {
  std::size_t i, j;
  bool root_black;
  std::vector<ChildLoss> losses;
};

struct LinkedCleaningTrace {
  std::vector<PairStep> steps;
};

/// Keeps generations 0..k, majority-cleans every pair (i, j) with j - i >= 2
/// in lexicographic order, then trims each internal vertex to its k
/// lowest-index children. Absent when some internal vertex ends up with
/// fewer than k children.
inline std::optional<ExtractedTree> clean_linked_generation(const HostedTree& ht, std::size_t k,
                                                            LinkedCleaningTrace* trace = nullptr) {
  if (!check_descendant_only(ht).ok())
    throw std::invalid_argument("linked-generation cleaning needs a descendant-only tree");
  if (ht.tree().height() < k) return std::nullopt;

  ExtractedTree cur = truncate(ht, k);
  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t j = i + 2; j <= k; ++j) {
      if (cur.hosted.tree().height() < j) return std::nullopt;
      PairCleaning step = majority_clean_pair(cur.hosted, i, j);
      std::vector<vertex_t> origin(step.result.origin.size());
      for (std::size_t x = 0; x < origin.size(); ++x) origin[x] = cur.origin[step.result.origin[x]];
      if (trace) {
        // report losses in the caller's indices
        for (auto& loss : step.losses) loss.vertex = cur.origin[loss.vertex];
        trace->steps.push_back({i, j, step.root_black, std::move(step.losses)});
      }
      cur = ExtractedTree{std::move(step.result.hosted), std::move(origin)};
    }

  const RootedTree& t = cur.hosted.tree();
  std::vector<bool> keep(t.size(), false);
  std::vector<vertex_t> bfs{t.root()};
  keep[t.root()] = true;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    const vertex_t v = bfs[head];
    if (t.generation(v) == k) continue;
    const auto kids = t.children(v);
    if (kids.size() < k) return std::nullopt;
    for (std::size_t c = 0; c < k; ++c) {
      keep[kids[c]] = true;
      bfs.push_back(kids[c]);
    }
  }
  ExtractedTree pruned = extract_subtree(cur.hosted, keep);
  for (auto& o : pruned.origin) o = cur.origin[o];
  if (pruned.hosted.tree().height() != k || !check_linked_generation(pruned.hosted).linked_generation())
    throw consistency_error("linked-generation cleaning left a mixed generation pair");
  return pruned;
}

}  // namespace unavoidable
