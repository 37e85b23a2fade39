#include <gtest/gtest.h>

#include "oracles.hpp"
#include "unavoidable/generation.hpp"
#include "unavoidable/io.hpp"

using namespace unavoidable;

namespace {

HostedTree with_extra_edges(const BranchingVector& bv, const std::vector<Edge>& extra) {
  RootedTree t = build_k_tree(bv);
  Graph host = t.as_graph();
  for (auto [u, v] : extra) host.add_edge(u, v);
  return HostedTree(std::move(host), std::move(t));
}

Graph with_path(std::size_t k, const Graph& extra) {
  Graph g = path_graph(k);
  for (auto [u, v] : extra.edges()) g.add_edge(u, v);
  return g;
}

bool is_increasing_path(const Graph& g, const std::vector<vertex_t>& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (g.has_edge(s[a], s[b]) != (b == a + 1)) return false;
  return true;
}

// K_{3,3} with sides {0,1,2} and {3,4,5}, spanned by 0-3, 0-4, 3-1, 4-2, 1-5.
HostedTree k33_hosted() {
  return HostedTree(complete_bipartite_graph(3, 3),
                    RootedTree::from_parents({std::nullopt, 3, 4, 0, 0, 1}));
}

}  // namespace

TEST(GenerationGraph, FromTrees) {
  const auto pure = generation_graph(HostedTree::bare(build_k_tree(BranchingVector({2, 2}))));
  EXPECT_EQ(pure.graph(), path_graph(3));

  const auto linked = generation_graph(with_extra_edges(BranchingVector({2, 2}), {{0, 3}, {0, 4}, {0, 5}, {0, 6}}));
  EXPECT_EQ(linked.graph(), complete_graph(3));

  EXPECT_THROW(generation_graph(with_extra_edges(BranchingVector({2, 2}), {{0, 3}})), std::invalid_argument);
  EXPECT_THROW(GenerationGraph(Graph(3)), std::invalid_argument);
}

TEST(AnalyzeGenerationGraph, Examples) {
  auto path = analyze_generation_graph(GenerationGraph(path_graph(4)), 4);
  ASSERT_TRUE(std::holds_alternative<IncreasingPath>(path));
  EXPECT_EQ(std::get<IncreasingPath>(path).generations, (std::vector<std::size_t>{0, 1, 2, 3}));

  auto clique = analyze_generation_graph(GenerationGraph(complete_graph(4)), 3);
  ASSERT_TRUE(std::holds_alternative<CliqueGens>(clique));
  EXPECT_EQ(std::get<CliqueGens>(clique).generations, (VertexSet{0, 1, 2}));

  Graph chord = path_graph(4);
  chord.add_edge(0, 2);
  auto skip = analyze_generation_graph(GenerationGraph(chord), 3);
  ASSERT_TRUE(std::holds_alternative<IncreasingPath>(skip));
  EXPECT_EQ(std::get<IncreasingPath>(skip).generations, (std::vector<std::size_t>{0, 2, 3}));

  // the 4-cycle 0-1-2-3 is K_{2,2}
  auto b = analyze_generation_graph(GenerationGraph(cycle_graph(4)), 2, parse_detector_order("biclique,path,clique"));
  ASSERT_TRUE(std::holds_alternative<BicliqueGens>(b));
  const auto& sides = std::get<BicliqueGens>(b);
  EXPECT_EQ(sides.side_a, (VertexSet{0, 2}));
  EXPECT_EQ(sides.side_b, (VertexSet{1, 3}));
}

TEST(AnalyzeGenerationGraph, AgreesWithEnumeration) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t k = 3 + seed % 6;
    const Graph g = with_path(k, generate_random_graph(k, Rational{1 + seed % 4, 6}, seed * 13));
    const GenerationGraph gg(g);
    const auto all = oracle::all_vertices(g);
    for (std::size_t n = 1; n <= 3; ++n) {
      const bool path = oracle::any_subset(all, n, [&](const auto& s) { return is_increasing_path(g, s); });
      const bool bic = oracle::has_biclique(g, n);
      const bool clique = oracle::has_clique(g, n);
      auto r = analyze_generation_graph(gg, n);
      if (path) {
        ASSERT_TRUE(std::holds_alternative<IncreasingPath>(r)) << "seed " << seed << " n " << n;
        EXPECT_TRUE(is_increasing_path(g, std::get<IncreasingPath>(r).generations));
        EXPECT_EQ(std::get<IncreasingPath>(r).generations.size(), n);
      } else if (bic) {
        ASSERT_TRUE(std::holds_alternative<BicliqueGens>(r)) << "seed " << seed << " n " << n;
      } else if (clique) {
        ASSERT_TRUE(std::holds_alternative<CliqueGens>(r)) << "seed " << seed << " n " << n;
      } else {
        EXPECT_TRUE(std::holds_alternative<NotFound>(r));
      }
    }
  }
}

TEST(AnalyzeGenerationGraph, PathOfEveryLengthInPureTrees) {
  for (std::size_t k = 1; k <= 6; ++k) {
    const GenerationGraph gg(path_graph(k));
    auto r = find_increasing_path(gg, k);
    ASSERT_TRUE(r.found());
  }
}

TEST(LiftToHost, PureTreeIsTheNTree) {
  const HostedTree ht = HostedTree::bare(build_k_tree(BranchingVector({2, 2})));
  const Certificate c = lift_to_host(ht, IncreasingPath{{0, 1, 2}}, 2);
  const auto& t = std::get<InducedTreeCert>(c);
  EXPECT_EQ(std::vector<std::size_t>(t.shape.entries().begin(), t.shape.entries().end()),
            (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(t.map, (std::vector<vertex_t>{0, 1, 2, 3, 4, 5, 6}));
  EXPECT_TRUE(verify_certificate(ht.host(), c));
}

TEST(LiftToHost, SkippedGenerations) {
  // (2,2,2) with generation 0 complete to generation 2: path 0-1-2-3 plus 0-2
  std::vector<Edge> extra;
  for (vertex_t v = 3; v <= 6; ++v) extra.emplace_back(0, v);
  const HostedTree ht = with_extra_edges(BranchingVector({2, 2, 2}), extra);
  const auto gg = generation_graph(ht);
  auto r = analyze_generation_graph(gg, 3);
  ASSERT_TRUE(std::holds_alternative<IncreasingPath>(r));
  EXPECT_EQ(std::get<IncreasingPath>(r).generations, (std::vector<std::size_t>{0, 2, 3}));
  const Certificate c = lift_to_host(ht, r, 2);
  const auto& t = std::get<InducedTreeCert>(c);
  EXPECT_EQ(t.map, (std::vector<vertex_t>{0, 3, 4, 7, 8, 9, 10}));
  EXPECT_TRUE(verify_certificate(ht.host(), c));
}

TEST(LiftToHost, CliqueOnFirstBranch) {
  const HostedTree ht = with_extra_edges(BranchingVector({2, 2}), {{0, 3}, {0, 4}, {0, 5}, {0, 6}});
  const Certificate c = lift_to_host(ht, CliqueGens{{0, 1, 2}}, 3);
  EXPECT_EQ(std::get<CliqueCert>(c).vertices, (VertexSet{0, 1, 3}));
  EXPECT_TRUE(verify_certificate(ht.host(), c));
  EXPECT_THROW(lift_to_host(ht, NotFound{}, 2), std::invalid_argument);
}

TEST(LiftToHost, TooFewDescendants) {
  const HostedTree ht = HostedTree::bare(build_k_tree(BranchingVector({1, 1})));
  EXPECT_THROW(lift_to_host(ht, IncreasingPath{{0, 1, 2}}, 2), capacity_error);
}

TEST(LiftToHost, SoundOnCleanedTrees) {
  std::size_t lifted = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    GeneratorConfig cfg{BranchingVector({6, 6, 6}), NoiseMode::ancestor_descendant_only,
                        Rational{1 + seed % 3, 4}, seed};
    const HostedTree ht = generate_hosted_tree(cfg);
    for (std::size_t k = 3; k >= 2; --k) {
      auto linked = clean_linked_generation(ht, k);
      if (!linked) continue;
      const auto gg = generation_graph(linked->hosted);
      for (std::size_t n = 1; n <= k; ++n) {
        auto r = analyze_generation_graph(gg, AnalysisRequest{n + 1, n, n});
        if (std::holds_alternative<NotFound>(r)) continue;
        const Certificate local = lift_to_host(linked->hosted, r, n);
        ASSERT_TRUE(verify_certificate(linked->hosted.host(), local)) << "seed " << seed;
        ASSERT_TRUE(verify_certificate(ht.host(), relabel(local, linked->origin)));
        ++lifted;
      }
      break;
    }
  }
  EXPECT_GT(lifted, 100u);
}

TEST(Pipeline, PureTreeGivesInducedTree) {
  const HostedTree ht = HostedTree::bare(build_k_tree(BranchingVector({2, 2})));
  auto r = find_unavoidable_structure(ht, 2);
  ASSERT_TRUE(std::holds_alternative<PipelineFound>(r));
  const auto& cert = std::get<PipelineFound>(r).certificate;
  ASSERT_TRUE(std::holds_alternative<InducedTreeCert>(cert));
  EXPECT_EQ(std::get<InducedTreeCert>(cert).map, (std::vector<vertex_t>{0, 1, 2, 3, 4, 5, 6}));
}

TEST(Pipeline, CompleteStarGivesClique) {
  const HostedTree ht(complete_graph(5), build_k_tree(BranchingVector({4})));
  auto r = find_unavoidable_structure(ht, 3);
  ASSERT_TRUE(std::holds_alternative<PipelineFound>(r));
  const auto& cert = std::get<PipelineFound>(r).certificate;
  ASSERT_TRUE(std::holds_alternative<CliqueCert>(cert));
  EXPECT_EQ(std::get<CliqueCert>(cert).vertices.size(), 3u);
}

TEST(Pipeline, CompleteBipartiteGivesBiclique) {
  const HostedTree ht = k33_hosted();
  auto r = find_unavoidable_structure(ht, 2);
  ASSERT_TRUE(std::holds_alternative<PipelineFound>(r));
  const auto& cert = std::get<PipelineFound>(r).certificate;
  ASSERT_TRUE(std::holds_alternative<BicliqueCert>(cert));
  EXPECT_TRUE(verify_certificate(ht.host(), cert));
}

TEST(Pipeline, PathIsInsufficient) {
  auto r = find_unavoidable_structure(HostedTree::bare(build_k_tree(BranchingVector({1, 1, 1}))), 2);
  ASSERT_TRUE(std::holds_alternative<PipelineInsufficient>(r));
  EXPECT_EQ(std::get<PipelineInsufficient>(r).stage, "descendant-only");
}

TEST(Pipeline, EveryCertificateVerifies) {
  std::size_t found = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const NoiseMode mode = seed % 2 ? NoiseMode::arbitrary : NoiseMode::ancestor_descendant_only;
    GeneratorConfig cfg{BranchingVector({4, 4, 4}), mode, Rational{1 + seed % 4, 10}, seed};
    const HostedTree ht = generate_hosted_tree(cfg);
    auto r = find_unavoidable_structure(ht, 2);
    if (auto* f = std::get_if<PipelineFound>(&r)) {
      EXPECT_TRUE(verify_certificate(ht.host(), f->certificate)) << "seed " << seed;
      ++found;
    }
  }
  EXPECT_GT(found, 60u);
}
