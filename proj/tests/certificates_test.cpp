#include <gtest/gtest.h>

#include "unavoidable/certificates.hpp"
#include "unavoidable/io.hpp"

using namespace unavoidable;

TEST(VerifyCertificate, Examples) {
  EXPECT_TRUE(verify_certificate(complete_graph(3), CliqueCert{{0, 1, 2}}));
  EXPECT_TRUE(verify_certificate(cycle_graph(4), BicliqueCert{{0, 2}, {1, 3}}));

  const Verdict v = verify_certificate(complete_graph(3), InducedTreeCert{BranchingVector({2}), {0, 1, 2}});
  EXPECT_FALSE(v);
  ASSERT_TRUE(v.pair);
  EXPECT_EQ(*v.pair, (Edge{1, 2}));
}

TEST(VerifyCertificate, Failures) {
  EXPECT_FALSE(verify_certificate(path_graph(3), CliqueCert{{0, 1, 2}}));
  EXPECT_FALSE(verify_certificate(complete_graph(3), CliqueCert{}));
  EXPECT_FALSE(verify_certificate(complete_graph(3), CliqueCert{{1, 1}}));
  EXPECT_FALSE(verify_certificate(complete_graph(4), BicliqueCert{{0, 1}, {2, 3}}));
  EXPECT_FALSE(verify_certificate(cycle_graph(4), BicliqueCert{{0}, {1, 3}}));
  EXPECT_FALSE(verify_certificate(cycle_graph(4), BicliqueCert{{0, 2}, {2, 3}}));
  EXPECT_FALSE(verify_certificate(path_graph(3), InducedTreeCert{BranchingVector({2}), {0, 1, 1}}));
  EXPECT_FALSE(verify_certificate(path_graph(3), InducedTreeCert{BranchingVector({2}), {0, 1}}));
  EXPECT_TRUE(verify_certificate(path_graph(3), InducedTreeCert{BranchingVector({2}), {1, 0, 2}}));
}

TEST(VerifyCertificate, OutOfRangeIsAnError) {
  EXPECT_THROW(verify_certificate(complete_graph(3), CliqueCert{{0, 5}}), std::invalid_argument);
  EXPECT_THROW(verify_certificate(complete_graph(3), BicliqueCert{{0}, {9}}), std::invalid_argument);
}

TEST(VerifyCertificate, IgnoresEdgesOutsideTheCertificate) {
  const Certificate certs[] = {CliqueCert{{0, 1, 2}}, BicliqueCert{{0, 2}, {1, 3}},
                               InducedTreeCert{BranchingVector({1, 1}), {0, 1, 2}}};
  Graph base(8);
  base.add_edge(0, 1);
  base.add_edge(1, 2);
  base.add_edge(0, 2);
  Graph c4(8);
  for (auto [u, v] : cycle_graph(4).edges()) c4.add_edge(u, v);
  Graph p3(8);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  const Graph hosts[] = {base, c4, p3};
  for (std::size_t i = 0; i < 3; ++i) {
    ASSERT_TRUE(verify_certificate(hosts[i], certs[i]));
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      // add random edges that touch at least one vertex outside the certificate
      Graph g = hosts[i];
      const Graph noise = generate_random_graph(8, Rational{1, 2}, seed);
      for (auto [u, v] : noise.edges())
        if (v >= 4) g.add_edge(u, v);
      EXPECT_TRUE(verify_certificate(g, certs[i]));
    }
  }
}

TEST(Relabel, MapsThroughOuterIndices) {
  const std::vector<vertex_t> to_outer{10, 4, 7, 2};
  auto c = std::get<CliqueCert>(relabel(CliqueCert{{0, 1, 2}}, to_outer));
  EXPECT_EQ(c.vertices, (VertexSet{4, 7, 10}));
  auto b = std::get<BicliqueCert>(relabel(BicliqueCert{{0, 1}, {2, 3}}, to_outer));
  EXPECT_EQ(b.side_a, (VertexSet{2, 7}));
  EXPECT_EQ(b.side_b, (VertexSet{4, 10}));
  auto t = std::get<InducedTreeCert>(relabel(InducedTreeCert{BranchingVector({2}), {3, 0, 1}}, to_outer));
  EXPECT_EQ(t.map, (std::vector<vertex_t>{2, 10, 4}));
}
