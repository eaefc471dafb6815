#include <gtest/gtest.h>

#include "dqa/bottomup.hpp"
#include "dqa/engine.hpp"
#include "dqa/generators.hpp"
#include "dqa/hybrid.hpp"
#include "dqa/topdown.hpp"
#include "oracles.hpp"

using namespace dqa;

namespace {

std::vector<Direction> novel_directions(int q) {
  std::vector<Direction> out;
  for (unsigned i = 0; i <= static_cast<unsigned>(q) + 1; ++i) {
    for (unsigned j = 0; j <= static_cast<unsigned>(q) + 1; ++j) {
      out.push_back({FaceIndex(i), FaceIndex(j), Definition::Novel});
    }
  }
  out.push_back({FaceIndex(0), FaceIndex::last(), Definition::Novel});
  return out;
}

std::vector<Direction> hat_directions() {
  std::vector<Direction> out;
  for (FaceIndex i : {FaceIndex(0), FaceIndex(1), FaceIndex(2), FaceIndex(3), FaceIndex::last()}) {
    for (FaceIndex j : {FaceIndex(0), FaceIndex(1), FaceIndex(2), FaceIndex(3), FaceIndex::last()}) {
      out.push_back({i, j, Definition::Hat});
    }
  }
  return out;
}

std::string label(int q, const Direction& d) {
  return std::string(to_string(d.definition)) + " q=" + std::to_string(q) + " (" +
         d.i.to_string() + "," + d.j.to_string() + ")";
}

}  // namespace

TEST(TopDown, MatchesPairwiseOracle) {
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto c = build_flag_complex(generate(ErdosRenyi{6, 0.6, seed}));
    for (int q = 0; q <= 2; ++q) {
      for (const auto& d : novel_directions(q)) {
        ASSERT_EQ(oracle::triples(get_q_topdown(c, q, d)), oracle::q_digraph(c, q, d))
            << label(q, d);
      }
      for (const auto& d : hat_directions()) {
        ASSERT_EQ(oracle::triples(get_q_topdown(c, q, d)), oracle::q_digraph(c, q, d))
            << label(q, d);
      }
    }
  }
}

TEST(TopDown, CountsEveryOrderedPair) {
  const auto c = build_flag_complex(generate(ErdosRenyi{9, 0.5, 4}));
  for (int q = 0; q <= 2; ++q) {
    const auto g = get_q_topdown(c, q, {FaceIndex(0), FaceIndex(0), Definition::Novel});
    const auto n = static_cast<std::uint64_t>(c.count_from(q));
    EXPECT_EQ(g.stats.pair_checks, n * n - n);
    EXPECT_EQ(g.vertex_count(), n);
  }
}

TEST(TopDown, QAboveMaxDimensionIsEmpty) {
  const auto c = build_flag_complex(generate(Tournament{4}));
  const auto g = get_q_topdown(c, 7, {FaceIndex(0), FaceIndex(0), Definition::Novel});
  EXPECT_TRUE(g.edges.empty());
  EXPECT_EQ(g.vertex_count(), 0u);
}

TEST(Hybrid, InclusionPassOnTournamentFour) {
  const auto c = build_flag_complex(generate(Tournament{4}));
  const int cache = 2;
  const auto pass = compute_inclusions(c, 1, std::span<const int>(&cache, 1));
  // (dim-1 faces of 4 triangles) + (edges and triangles of the tetrahedron).
  EXPECT_EQ(pass.edges.size(), 4u * 3u + 6u + 4u);
  EXPECT_EQ(pass.emitted, 22u);
  EXPECT_TRUE(std::is_sorted(pass.edges.begin(), pass.edges.end()));
  for (std::uint32_t k = 0; k < c.level_size(2); ++k) {
    const auto up = pass.upsets[{2, k}];
    ASSERT_EQ(up.size(), 1u);
    EXPECT_EQ(up[0], (SimplexId{3, 0}));
  }
}

TEST(Hybrid, UpSetsMatchBruteForce) {
  const auto c = build_flag_complex(generate(ErdosRenyi{8, 0.65, 8}));
  const std::vector<int> dims{1, 2};
  const auto pass = compute_inclusions(c, 1, dims);
  for (int d : dims) {
    for (std::uint32_t k = 0; k < c.level_size(d); ++k) {
      const SimplexId id{static_cast<std::uint32_t>(d), k};
      const auto& s = c.simplex(id);
      std::set<SimplexId> expected;
      for (int e = d + 1; e <= c.max_dim(); ++e) {
        for (std::uint32_t m = 0; m < c.level_size(e); ++m) {
          const auto& t = c.simplex({static_cast<std::uint32_t>(e), m});
          if (oracle::subsequence(oracle::Tuple(s.begin(), s.end()), oracle::Tuple(t.begin(), t.end()))) {
            expected.insert({static_cast<std::uint32_t>(e), m});
          }
        }
      }
      const auto up = pass.upsets[id];
      EXPECT_EQ(std::set<SimplexId>(up.begin(), up.end()), expected);
    }
  }
}

TEST(Hybrid, BottomLevelProductMatchesOracle) {
  const auto c = build_flag_complex(generate(ErdosRenyi{8, 0.6, 12}));
  const int q = 1;
  for (const auto& d : novel_directions(q)) {
    const auto cache = build_coface_cache(c, q, d);
    const auto eq1 = compute_e_q1(c, q, cache);
    std::set<std::pair<SimplexId, SimplexId>> got;
    for (const auto& [k, e] : eq1.edges) got.insert({SimplexId::unpack(k.src), SimplexId::unpack(k.dst)});
    std::set<std::pair<SimplexId, SimplexId>> expected;
    for (const auto& [a, b, p] : oracle::q_digraph(c, q, d)) {
      const auto sa = SimplexId::unpack(a);
      const auto sb = SimplexId::unpack(b);
      if (sa.dim == 2 && sb.dim == 2 && has(p, Provenance::SharedFace)) expected.insert({sa, sb});
    }
    EXPECT_EQ(got, expected) << label(q, d);
  }
}

TEST(Hybrid, RejectsWrongDefinition) {
  const auto c = build_flag_complex(generate(Tournament{4}));
  EXPECT_THROW(get_q_hybrid(c, 1, {FaceIndex(0), FaceIndex(0), Definition::Hat}),
               std::invalid_argument);
  EXPECT_THROW(get_qhat_hybrid(c, 1, {FaceIndex(0), FaceIndex(0), Definition::Novel}),
               std::invalid_argument);
  EXPECT_THROW(get_q_hybrid(c, 1, {FaceIndex(3), FaceIndex(0), Definition::Novel}),
               std::invalid_argument);
}

TEST(BottomUp, SupersimplexClosureOfEdgeInTournamentFour) {
  const auto g = generate(Tournament{4});
  const auto closure = supersimplex_closure(Simplex{0, 1}, g);
  EXPECT_EQ(closure, (std::vector<Simplex>{{0, 1, 2}, {0, 1, 2, 3}, {0, 1, 3}}));
  EXPECT_EQ(supersimplex_closure(Simplex{0, 1}, g, 2),
            (std::vector<Simplex>{{0, 1, 2}, {0, 1, 3}}));
}

TEST(BottomUp, ClosureMatchesBruteForce) {
  const auto g = generate(ErdosRenyi{7, 0.6, 6});
  const auto all = oracle::all_simplices(g);
  for (const auto& mu : all) {
    if (mu.size() > 3) continue;
    std::vector<Simplex> expected;
    for (const auto& t : all) {
      if (t.size() > mu.size() && oracle::subsequence(mu, t)) expected.push_back(Simplex(t));
    }
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(supersimplex_closure(Simplex(mu), g), expected);
  }
}

TEST(BottomUp, RejectsHat) {
  const auto g = generate(Tournament{4});
  EXPECT_THROW(bottomup_edges(g, 1, {FaceIndex(0), FaceIndex(0), Definition::Hat}, {}),
               std::invalid_argument);
}

// Engines agree with the top-down oracle on random inputs, including
// reciprocal edges and clipped complexes.
class EngineAgreement : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(EngineAgreement, AllEnginesMatchTopDown) {
  const auto g = generate(ErdosRenyi{8, 0.5, GetParam()});
  for (std::optional<int> clip : {std::optional<int>{}, std::optional<int>{3}}) {
    const auto c = build_flag_complex(g, clip);
    for (int q = 0; q <= 2; ++q) {
      for (const auto& d : novel_directions(q)) {
        const auto ref = oracle::triples(get_q_topdown(c, q, d));
        ASSERT_EQ(oracle::triples(get_q_hybrid(c, q, d)), ref) << label(q, d);
        ASSERT_EQ(oracle::triples(get_q_bottomup(g, c, q, d)), ref) << label(q, d);
      }
      for (const auto& d : hat_directions()) {
        ASSERT_EQ(oracle::triples(get_qhat_hybrid(c, q, d)),
                  oracle::triples(get_q_topdown(c, q, d)))
            << label(q, d);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, EngineAgreement, ::testing::Values(1, 2, 3, 4, 5, 6));

TEST(Engines, DuplicateCountsRespectBound) {
  const auto g = generate(ErdosRenyi{10, 0.6, 2});
  const auto c = build_flag_complex(g);
  const int D = c.max_dim();
  for (int q = 0; q < D; ++q) {
    const auto bound = binomial(D + 1, q + 1) * (D - q) * (D - q);
    const auto h = get_q_hybrid(c, q, {FaceIndex(0), FaceIndex::last(), Definition::Novel});
    EXPECT_LE(h.stats.max_duplicates, bound);
    std::uint64_t shared = 0;
    for (const auto& e : h.edges) shared += has(e.provenance, Provenance::SharedFace);
    EXPECT_GE(h.stats.emissions, shared);
  }
}

TEST(Engines, Dispatch) {
  EXPECT_EQ(parse_algorithm("bottomup"), Algorithm::BottomUp);
  EXPECT_THROW(parse_algorithm("fast"), std::invalid_argument);
  EXPECT_THROW(validate_combination(Algorithm::BottomUp,
                                    {FaceIndex(0), FaceIndex(0), Definition::Hat}),
               std::invalid_argument);
  const auto g = generate(Tournament{5});
  const auto c = build_flag_complex(g);
  const Direction d{FaceIndex(0), FaceIndex::last(), Definition::Hat};
  EXPECT_EQ(run_engine(Algorithm::Hybrid, g, c, 1, d).edges,
            run_engine(Algorithm::TopDown, g, c, 1, d).edges);
}
