#include <gtest/gtest.h>

#include "dqa/flag_complex.hpp"
#include "dqa/generators.hpp"
#include "oracles.hpp"

using namespace dqa;

namespace {

std::set<oracle::Tuple> flatten(const FlagComplex& c) {
  std::set<oracle::Tuple> out;
  for (int d = 0; d <= c.max_dim(); ++d) {
    for (const auto& s : c.level(d)) out.insert(oracle::Tuple(s.begin(), s.end()));
  }
  return out;
}

DirectedGraph three_cycle() {
  const std::vector<EdgePair> e{{0, 1}, {1, 2}, {2, 0}};
  return DirectedGraph(3, e);
}

}  // namespace

TEST(FlagComplex, TournamentLevelsAreBinomial) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto c = build_flag_complex(generate(Tournament{n}));
    ASSERT_EQ(c.max_dim(), static_cast<int>(n) - 1);
    for (int d = 0; d <= c.max_dim(); ++d) {
      EXPECT_EQ(c.level_size(d), binomial(n, static_cast<std::uint64_t>(d) + 1)) << n << " " << d;
    }
  }
}

TEST(FlagComplex, ThreeCycleHasNoTriangle) {
  const auto c = build_flag_complex(three_cycle());
  EXPECT_EQ(c.max_dim(), 1);
  EXPECT_EQ(c.level_size(1), 3u);
  EXPECT_EQ(c.level_size(2), 0u);
}

TEST(FlagComplex, EmptyAndEdgeless) {
  const auto empty = build_flag_complex(DirectedGraph(0, {}));
  EXPECT_EQ(empty.level_sizes(), std::vector<std::size_t>{0});
  const auto isolated = build_flag_complex(DirectedGraph(3, {}));
  EXPECT_EQ(isolated.level_sizes(), std::vector<std::size_t>{3});
}

TEST(FlagComplex, ReciprocalEdgesGiveBothOrders) {
  const std::vector<EdgePair> e{{0, 1}, {1, 0}, {0, 2}, {1, 2}};
  const auto c = build_flag_complex(DirectedGraph(3, e));
  EXPECT_TRUE(c.find(Simplex{0, 1, 2}));
  EXPECT_TRUE(c.find(Simplex{1, 0, 2}));
  EXPECT_EQ(c.level_size(2), 2u);
}

TEST(FlagComplex, MatchesSubsetPermutationOracle) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    for (double p : {0.3, 0.6, 0.9}) {
      const auto g = generate(ErdosRenyi{7, p, seed});
      const auto c = build_flag_complex(g);
      EXPECT_EQ(flatten(c), oracle::all_simplices(g)) << describe(ErdosRenyi{7, p, seed});
    }
  }
}

TEST(FlagComplex, LevelsSortedAndIdsRoundTrip) {
  const auto c = build_flag_complex(generate(ErdosRenyi{9, 0.6, 3}));
  for (int d = 0; d <= c.max_dim(); ++d) {
    const auto level = c.level(d);
    EXPECT_TRUE(std::is_sorted(level.begin(), level.end()));
    for (std::uint32_t k = 0; k < level.size(); ++k) {
      const SimplexId id{static_cast<std::uint32_t>(d), k};
      EXPECT_EQ(c.find(level[k]), id);
      EXPECT_EQ(SimplexId::unpack(id.packed()), id);
      EXPECT_EQ(&c.simplex(id), &level[k]);
    }
  }
  EXPECT_FALSE(c.find(Simplex{0, 0}));
  EXPECT_EQ((SimplexId{3, 17}).to_string(), "3.17");
  EXPECT_LT((SimplexId{1, 99}).packed(), (SimplexId{2, 0}).packed());
}

TEST(FlagComplex, ClippingDropsHigherLevels) {
  const auto g = generate(Tournament{6});
  const auto c = build_flag_complex(g, 2);
  EXPECT_EQ(c.max_dim(), 2);
  EXPECT_EQ(c.d_max(), 2);
  EXPECT_EQ(c.level_size(2), 20u);
  EXPECT_EQ(c.count_from(1), 15u + 20u);
  EXPECT_THROW(build_flag_complex(g, 0), std::invalid_argument);
}

TEST(FlagComplex, InsertionCandidatesMatchBruteForce) {
  const auto g = generate(ErdosRenyi{8, 0.6, 5});
  const auto c = build_flag_complex(g);
  for (int d = 0; d <= std::min(c.max_dim(), 3); ++d) {
    for (const auto& s : c.level(d)) {
      for (std::size_t pos = 0; pos <= s.size(); ++pos) {
        std::vector<VertexId> expected;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
          if (s.contains(v)) continue;
          oracle::Tuple t(s.begin(), s.end());
          t.insert(t.begin() + static_cast<std::ptrdiff_t>(pos), v);
          if (oracle::is_simplex(g, t)) expected.push_back(v);
        }
        EXPECT_EQ(insertion_candidates(s.vertices(), pos, g), expected);
      }
    }
  }
}

TEST(FlagComplex, CofaceScanInvertsFace) {
  const auto g = generate(ErdosRenyi{8, 0.6, 11});
  const auto c = build_flag_complex(g);
  for (int d = 1; d < c.max_dim(); ++d) {
    for (const auto& s : c.level(d)) {
      for (std::size_t i = 0; i <= s.size(); ++i) {
        std::set<Simplex> expected;
        for (const auto& t : c.level(d + 1)) {
          if (face(t, i) == s) expected.insert(t);
        }
        const auto got = coface_scan(s, i, g);
        EXPECT_EQ(std::set<Simplex>(got.begin(), got.end()), expected);
      }
    }
  }
}

TEST(FlagComplex, RootedEnumerationPartitionsTheComplex) {
  const auto g = generate(ErdosRenyi{9, 0.5, 2});
  const auto c = build_flag_complex(g);
  std::set<oracle::Tuple> seen;
  std::size_t visits = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for_each_simplex_rooted(g, v, -1, [&](std::span<const VertexId> t) {
      EXPECT_EQ(t.front(), v);
      seen.insert(oracle::Tuple(t.begin(), t.end()));
      ++visits;
    });
  }
  EXPECT_EQ(visits, seen.size());
  EXPECT_EQ(seen, flatten(c));
}

TEST(Generators, TournamentEdgeCount) {
  EXPECT_EQ(generate(Tournament{5}).edge_count(), 10u);
}

TEST(Generators, ErdosRenyiExtremes) {
  EXPECT_EQ(generate(ErdosRenyi{100, 0.0, 4}).edge_count(), 0u);
  EXPECT_EQ(generate(ErdosRenyi{20, 1.0, 4}).edge_count(), 20u * 19u);
}

TEST(Generators, Reproducible) {
  const ErdosRenyi spec{50, 0.2, 99};
  EXPECT_EQ(generate(spec).edges(), generate(spec).edges());
  EXPECT_NE(generate(spec).edges(), generate(ErdosRenyi{50, 0.2, 100}).edges());
  const LayeredDag dag{30, 5, 0.5, 7};
  EXPECT_EQ(generate(dag).edges(), generate(dag).edges());
}

TEST(Generators, ErdosRenyiThousandNodesNearFiftyThousandEdges) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto e = static_cast<double>(generate(ErdosRenyi{1000, 0.05, seed}).edge_count());
    EXPECT_NEAR(e, 50000.0, 2500.0) << "seed " << seed;
  }
}

TEST(Generators, LayeredDagOnlyPointsForward) {
  const auto g = generate(LayeredDag{40, 6, 0.7, 3});
  EXPECT_GT(g.edge_count(), 0u);
  for (const auto& [u, v] : g.edges()) EXPECT_LT(u / 6, v / 6);
}

TEST(Generators, RejectsInvalidSpecs) {
  EXPECT_THROW(generate(ErdosRenyi{0, 0.5, 1}), std::invalid_argument);
  EXPECT_THROW(generate(ErdosRenyi{5, 1.5, 1}), std::invalid_argument);
  EXPECT_THROW(generate(ErdosRenyi{5, -0.1, 1}), std::invalid_argument);
  EXPECT_THROW(generate(LayeredDag{5, 0, 0.5, 1}), std::invalid_argument);
  EXPECT_THROW(generate(Tournament{0}), std::invalid_argument);
}

TEST(Generators, Describe) {
  EXPECT_EQ(describe(ErdosRenyi{12, 0.5, 7}), "erdos_renyi(12,0.5,7)");
  EXPECT_EQ(kind_name(Tournament{4}), "tournament");
}
