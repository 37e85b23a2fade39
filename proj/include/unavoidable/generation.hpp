#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "unavoidable/certificates.hpp"
#include "unavoidable/cleaning.hpp"
#include "unavoidable/detectors.hpp"
#include "unavoidable/errors.hpp"
#include "unavoidable/graph.hpp"
#include "unavoidable/trees.hpp"

namespace unavoidable {

/// Generations 0..K of a linked-generation tree, with i ~ j when generation
/// i is complete to its generation-j descendants.
class GenerationGraph {
 public:
  explicit GenerationGraph(const LinkProfile& profile) : links_(profile.height() + 1) {
    for (std::size_t i = 0; i <= profile.height(); ++i)
      for (std::size_t j = i + 1; j <= profile.height(); ++j) {
        const LinkStatus s = profile.status(i, j);
        if (s == LinkStatus::mixed)
          throw std::invalid_argument("generation pair (" + std::to_string(i) + "," +
                                      std::to_string(j) + ") is mixed");
        if (s == LinkStatus::complete) links_.add_edge(i, j);
      }
    for (std::size_t i = 0; i + 1 < links_.vertex_count(); ++i)
      if (!links_.has_edge(i, i + 1))
        throw consistency_error("generation graph lacks the tree path edge " + std::to_string(i) +
                                "-" + std::to_string(i + 1));
  }

  explicit GenerationGraph(Graph links) : links_(std::move(links)) {
    for (std::size_t i = 0; i + 1 < links_.vertex_count(); ++i)
      if (!links_.has_edge(i, i + 1))
        throw std::invalid_argument("generation graph must contain the path 0-1-...-K");
  }

  std::size_t size() const noexcept { return links_.vertex_count(); }
  std::size_t height() const noexcept { return size() == 0 ? 0 : size() - 1; }
  bool linked(std::size_t i, std::size_t j) const { return links_.has_edge(i, j); }
  const Graph& graph() const noexcept { return links_; }

 private:
  Graph links_;
};

inline GenerationGraph generation_graph(const HostedTree& ht) {
  return GenerationGraph(check_linked_generation(ht));
}

struct CliqueGens {
  VertexSet generations;
};
struct BicliqueGens {
  VertexSet side_a;
  VertexSet side_b;
};
struct IncreasingPath {
  std::vector<std::size_t> generations;  // ascending
};
struct NotFound {};

using GenerationAnalysis = std::variant<CliqueGens, BicliqueGens, IncreasingPath, NotFound>;

struct AnalysisRequest {
  std::size_t path_length = 1;
  std::size_t clique_size = 1;
  std::size_t biclique_side = 1;
  DetectorOrder order = default_detector_order;
  SearchBudget budget = {};
};

/// Lexicographically first ascending sequence of `length` generations that
/// is an induced path: consecutive entries linked, all others unlinked.
inline SearchResult<std::vector<std::size_t>> find_increasing_path(const GenerationGraph& gg,
                                                                   std::size_t length,
                                                                   SearchBudget budget = {}) {
  SearchResult<std::vector<std::size_t>> result;
  if (length == 0) {
    result.status = SearchStatus::found;
    return result;
  }
  const std::size_t k = gg.size();
  std::vector<std::size_t> path;
  std::uint64_t nodes = 0;
  std::function<SearchStatus()> extend = [&]() {
    if (++nodes > budget.max_nodes) return SearchStatus::budget_exhausted;
    if (path.size() == length) return SearchStatus::found;
    // room check: ascending, so at most k - 1 - last more entries
    if (path.size() + (k - 1 - path.back()) < length) return SearchStatus::absent;
    for (std::size_t next = path.back() + 1; next < k; ++next) {
      if (!gg.linked(path.back(), next)) continue;
      bool chord = false;
      for (std::size_t i = 0; i + 1 < path.size() && !chord; ++i) chord = gg.linked(path[i], next);
      if (chord) continue;
      path.push_back(next);
      auto st = extend();
      if (st != SearchStatus::absent) return st;
      path.pop_back();
    }
    return SearchStatus::absent;
  };
  for (std::size_t start = 0; start + length <= k; ++start) {
    path = {start};
    auto st = extend();
    if (st != SearchStatus::absent) {
      result.status = st;
      if (st == SearchStatus::found) result.value = path;
      return result;
    }
  }
  result.status = SearchStatus::absent;
  return result;
}

/// Searches the generation graph for an induced increasing path, a clique
/// or an induced biclique in the requested order; the first hit wins.
inline GenerationAnalysis analyze_generation_graph(const GenerationGraph& gg,
                                                   const AnalysisRequest& req) {
  for (Structure s : req.order) {
    switch (s) {
      case Structure::tree: {
        auto r = require_decided(find_increasing_path(gg, req.path_length, req.budget),
                                 "increasing path");
        if (r.found()) return IncreasingPath{r.value};
        break;
      }
      case Structure::clique: {
        if (req.clique_size == 0) break;
        auto r = require_decided(find_induced_clique(gg.graph(), req.clique_size, req.budget),
                                 "generation clique");
        if (r.found()) return CliqueGens{r.value};
        break;
      }
      case Structure::biclique: {
        if (req.biclique_side == 0) break;
        auto r = require_decided(find_induced_biclique(gg.graph(), req.biclique_side, req.budget),
                                 "generation biclique");
        if (r.found()) return BicliqueGens{r.value.side_a, r.value.side_b};
        break;
      }
    }
  }
  return NotFound{};
}

inline GenerationAnalysis analyze_generation_graph(const GenerationGraph& gg, std::size_t n,
                                                   DetectorOrder order = default_detector_order) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  return analyze_generation_graph(gg, AnalysisRequest{n, n, n, order, {}});
}

namespace detail {

// Root followed by first children all the way down.
inline std::vector<vertex_t> first_branch(const RootedTree& t) {
  std::vector<vertex_t> branch{t.root()};
  while (!t.children(branch.back()).empty()) branch.push_back(t.children(branch.back()).front());
  return branch;
}

}  // namespace detail

/// Turns a generation-graph finding into a certificate in ht's indices.
///
/// Cliques and bicliques are read off the first root-to-leaf branch, where
/// every pair is an ancestor-descendant pair and so follows the link
/// relation exactly. An increasing path of L generations becomes an induced
/// n-ary tree of height L - 1: each chosen vertex takes its n lowest-index
/// descendants at the next chosen generation.
inline Certificate lift_to_host(const HostedTree& ht, const GenerationAnalysis& analysis,
                                std::size_t n) {
  if (std::holds_alternative<NotFound>(analysis))
    throw std::invalid_argument("nothing to lift: analysis found no structure");
  if (!check_linked_generation(ht).linked_generation())
    throw std::invalid_argument("lift needs a linked-generation tree");
  const RootedTree& t = ht.tree();
  const auto branch = detail::first_branch(t);
  auto on_branch = [&](const VertexSet& gens) {
    VertexSet out;
    for (std::size_t g : gens) {
      if (g >= branch.size()) throw capacity_error("generation beyond the first branch");
      out.push_back(branch[g]);
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  if (const auto* c = std::get_if<CliqueGens>(&analysis)) return CliqueCert{on_branch(c->generations)};
  if (const auto* b = std::get_if<BicliqueGens>(&analysis)) {
    BicliqueCert cert{on_branch(b->side_a), on_branch(b->side_b)};
    if (cert.side_b.front() < cert.side_a.front()) std::swap(cert.side_a, cert.side_b);
    return cert;
  }

  const auto& gens = std::get<IncreasingPath>(analysis).generations;
  if (gens.empty()) throw std::invalid_argument("empty increasing path");
  if (gens.front() >= branch.size()) throw capacity_error("generation beyond the first branch");
  InducedTreeCert cert{BranchingVector(std::vector<std::size_t>(gens.size() - 1, n)), {}};
  std::vector<vertex_t> layer{branch[gens.front()]};
  cert.map = layer;
  for (std::size_t step = 1; step < gens.size(); ++step) {
    std::vector<vertex_t> next;
    for (vertex_t x : layer) {
      auto below = t.descendants_at(x, gens[step]);
      if (below.size() < n)
        throw capacity_error("vertex " + std::to_string(x) + " has only " +
                             std::to_string(below.size()) + " descendants at generation " +
                             std::to_string(gens[step]));
      std::sort(below.begin(), below.end());
      next.insert(next.end(), below.begin(), below.begin() + static_cast<std::ptrdiff_t>(n));
    }
    cert.map.insert(cert.map.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Full pipeline

struct StageRecord {
  std::string stage;
  std::string detail;
};

struct PipelineFound {
  Certificate certificate;  // original host indices
  std::vector<StageRecord> stages;
};

struct PipelineInsufficient {
  std::string stage;  // furthest stage reached
  std::string reason;
  std::vector<StageRecord> stages;
};

using PipelineResult = std::variant<PipelineFound, PipelineInsufficient>;

/// Cuts a clique to n vertices or a biclique to n per side (lowest first).
inline Certificate trim_certificate(const Certificate& cert, std::size_t n) {
  if (const auto* c = std::get_if<CliqueCert>(&cert)) {
    if (c->vertices.size() < n) throw std::invalid_argument("clique smaller than n");
    return CliqueCert{VertexSet(c->vertices.begin(), c->vertices.begin() + static_cast<std::ptrdiff_t>(n))};
  }
  if (const auto* b = std::get_if<BicliqueCert>(&cert)) {
    if (b->side_a.size() < n) throw std::invalid_argument("biclique smaller than n");
    auto cut = [n](const VertexSet& s) {
      return VertexSet(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n));
    };
    return BicliqueCert{cut(b->side_a), cut(b->side_b)};
  }
  return cert;
}

/// Searches ht for an induced K_n, an induced K_{n,n} or an induced n-tree
/// (height n) by descendant-only cleaning, linked-generation cleaning and
/// generation-graph analysis. Branching m runs from the largest available
/// down to n and the linked height k from min(m, height) down to n; the first
/// certificate found is returned in host indices, verified.
inline PipelineResult find_unavoidable_structure(const HostedTree& ht, std::size_t n,
                                                 DetectorOrder order = default_detector_order,
                                                 SearchBudget budget = {}) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  std::vector<StageRecord> stages;
  std::string furthest = "descendant-only";
  std::string reason = "maximum branching " + std::to_string(ht.tree().max_branching()) +
                       " is below n = " + std::to_string(n);

  auto finish = [&](Certificate cert) -> PipelineResult {
    auto verdict = verify_certificate(ht.host(), cert);
    if (!verdict) throw consistency_error("pipeline produced an invalid certificate: " + verdict.reason);
    stages.push_back({"verify", std::string(kind_name(cert)) + " valid"});
    return PipelineFound{std::move(cert), std::move(stages)};
  };

  for (std::size_t m = ht.tree().max_branching(); m >= n && m > 0; --m) {
    CleanOutcome clean = clean_descendant_only(ht, m, order, budget);
    if (auto* c = std::get_if<CliqueCert>(&clean)) {
      stages.push_back({"descendant-only", "m=" + std::to_string(m) + " clique"});
      return finish(trim_certificate(*c, n));
    }
    if (auto* b = std::get_if<BicliqueCert>(&clean)) {
      stages.push_back({"descendant-only", "m=" + std::to_string(m) + " biclique"});
      return finish(trim_certificate(*b, n));
    }
    if (auto* ins = std::get_if<Insufficient>(&clean)) {
      stages.push_back({"descendant-only", "m=" + std::to_string(m) + " insufficient"});
      reason = ins->reason;
      continue;
    }
    const auto& desc = std::get<ExtractedTree>(clean);
    const std::size_t height = desc.hosted.tree().height();
    stages.push_back({"descendant-only", "m=" + std::to_string(m) + " height=" + std::to_string(height)});
    if (height < n) {
      reason = "descendant-only tree of height " + std::to_string(height) + " is shorter than n";
      continue;
    }
    furthest = "linked-generation";
    for (std::size_t k = std::min(m, height); k >= n; --k) {
      auto linked = clean_linked_generation(desc.hosted, k);
      if (!linked) {
        stages.push_back({"linked-generation", "k=" + std::to_string(k) + " absent"});
        reason = "majority cleaning left fewer than k children";
        continue;
      }
      stages.push_back({"linked-generation", "k=" + std::to_string(k)});
      furthest = "generation-analysis";
      GenerationGraph gg = generation_graph(linked->hosted);
      GenerationAnalysis found =
          analyze_generation_graph(gg, AnalysisRequest{n + 1, n, n, order, budget});
      if (std::holds_alternative<NotFound>(found)) {
        stages.push_back({"generation-analysis", "k=" + std::to_string(k) + " none"});
        reason = "generation graph has no increasing path, clique or biclique of the requested size";
        continue;
      }
      Certificate local = lift_to_host(linked->hosted, found, n);
      std::vector<vertex_t> to_host(linked->origin.size());
      for (std::size_t x = 0; x < to_host.size(); ++x) to_host[x] = desc.origin[linked->origin[x]];
      stages.push_back({"generation-analysis", std::string(kind_name(local)) + " over " +
                                                   std::to_string(gg.size()) + " generations"});
      return finish(relabel(local, to_host));
    }
  }
  return PipelineInsufficient{furthest, reason, std::move(stages)};
}

}  // namespace unavoidable
