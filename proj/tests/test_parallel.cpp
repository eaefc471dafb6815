#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>

#include "dqa/bottomup.hpp"
#include "dqa/generators.hpp"
#include "dqa/hybrid.hpp"
#include "dqa/parallel.hpp"
#include "dqa/topdown.hpp"

using namespace dqa;

namespace {

Strategy make(StrategyKind k, unsigned workers) {
  Strategy s;
  s.kind = k;
  s.workers = workers;
  return s;
}

constexpr StrategyKind kAll[] = {StrategyKind::Sequential, StrategyKind::SharedAccumulator,
                                 StrategyKind::SplitAndMerge, StrategyKind::ShardedBottomUp};

// Item k emits (k % 7, k % 5) twice and (1, 1) once: heavy overlap across shards.
ShardedEdges<EdgeKey> toy(std::size_t items, const Strategy& s) {
  return run_sharded<EdgeKey, EdgeKeyHash>(
      items,
      [](std::size_t k, EdgeSink<EdgeKey, EdgeKeyHash>& sink) {
        sink.emit({k % 7, k % 5}, Provenance::SharedFace);
        sink.emit({k % 7, k % 5}, Provenance::SharedFace);
        sink.emit({1, 1}, k % 2 ? Provenance::Inclusion : Provenance::SharedFace);
      },
      s);
}

}  // namespace

TEST(Strategy, ParseAndEffectiveKind) {
  EXPECT_EQ(parse_strategy("mutex"), StrategyKind::SharedAccumulator);
  EXPECT_EQ(parse_strategy("split_and_merge"), StrategyKind::SplitAndMerge);
  EXPECT_EQ(parse_strategy("sharded_bottom_up"), StrategyKind::ShardedBottomUp);
  EXPECT_THROW(parse_strategy("gpu"), std::invalid_argument);
  EXPECT_EQ(to_string(StrategyKind::Sequential), "sequential");
  EXPECT_EQ(make(StrategyKind::SplitAndMerge, 1).effective_kind(), StrategyKind::Sequential);
  EXPECT_EQ(make(StrategyKind::SplitAndMerge, 3).effective_kind(), StrategyKind::SplitAndMerge);
}

TEST(RunSharded, AllStrategiesProduceTheSameEntries) {
  const auto ref = toy(100, {});
  ASSERT_EQ(ref.edges.size(), 35u);
  EXPECT_EQ(ref.emissions, 300u);
  for (StrategyKind k : kAll) {
    for (unsigned w : {1u, 2u, 3u, 4u, 8u, 16u}) {
      const auto got = toy(100, make(k, w));
      ASSERT_EQ(got.edges.size(), ref.edges.size()) << to_string(k) << " " << w;
      EXPECT_EQ(got.emissions, ref.emissions);
      for (std::size_t x = 0; x < ref.edges.size(); ++x) {
        EXPECT_EQ(got.edges[x].first, ref.edges[x].first);
        EXPECT_EQ(got.edges[x].second.provenance, ref.edges[x].second.provenance);
        EXPECT_EQ(got.edges[x].second.emissions, ref.edges[x].second.emissions);
      }
      EXPECT_EQ(got.edges[0].first, (EdgeKey{0, 0}));
    }
  }
  EXPECT_EQ(ref.max_emissions(Provenance::Inclusion), 106u);
}

TEST(RunSharded, SplitAndMergeDepthIsLogarithmic) {
  for (unsigned w : {2u, 3u, 4u, 5u, 8u, 13u}) {
    const auto got = toy(200, make(StrategyKind::SplitAndMerge, w));
    EXPECT_LE(got.max_merge_count, static_cast<unsigned>(std::ceil(std::log2(w)))) << w;
    EXPECT_GE(got.max_merge_count, 1u);
  }
}

TEST(RunSharded, SmallBatchesAndFewerItemsThanWorkers) {
  Strategy s = make(StrategyKind::SharedAccumulator, 8);
  s.batch_size = 1;
  EXPECT_EQ(toy(3, s).edges.size(), toy(3, {}).edges.size());
  EXPECT_TRUE(toy(0, make(StrategyKind::ShardedBottomUp, 4)).edges.empty());
}

TEST(RunSharded, WorkerFailureRaisesShardError) {
  for (StrategyKind k : kAll) {
    auto run = [&] {
      run_sharded<EdgeKey, EdgeKeyHash>(
          50,
          [](std::size_t item, EdgeSink<EdgeKey, EdgeKeyHash>& sink) {
            if (item == 37) throw std::runtime_error("boom");
            sink.emit({item, item + 1}, Provenance::SharedFace);
          },
          make(k, 4));
    };
    EXPECT_THROW(run(), ShardError) << to_string(k);
  }
}

TEST(RunSharded, SpilledRunsMergeToTheSameResult) {
  const auto dir = std::filesystem::temp_directory_path() / "dqa_spill_test";
  std::filesystem::remove_all(dir);
  Strategy s = make(StrategyKind::ShardedBottomUp, 3);
  s.spill_dir = dir;
  const auto got = toy(150, s);
  const auto ref = toy(150, {});
  ASSERT_EQ(got.edges.size(), ref.edges.size());
  for (std::size_t x = 0; x < ref.edges.size(); ++x) {
    EXPECT_EQ(got.edges[x].first, ref.edges[x].first);
    EXPECT_EQ(got.edges[x].second.emissions, ref.edges[x].second.emissions);
  }
  std::filesystem::remove_all(dir);
}

TEST(RunSharded, EnginesAreStrategyInvariant) {
  const auto g = generate(ErdosRenyi{10, 0.55, 9});
  const auto c = build_flag_complex(g);
  const Direction d{FaceIndex(0), FaceIndex::last(), Definition::Novel};
  const auto ref = get_q_hybrid(c, 1, d).edges;
  const auto dir = std::filesystem::temp_directory_path() / "dqa_spill_engine";
  for (StrategyKind k : kAll) {
    for (unsigned w : {2u, 4u}) {
      Strategy s = make(k, w);
      EXPECT_EQ(get_q_hybrid(c, 1, d, s).edges, ref);
      EXPECT_EQ(get_q_topdown(c, 1, d, s).edges, ref);
      if (k == StrategyKind::ShardedBottomUp) s.spill_dir = dir;
      EXPECT_EQ(get_q_bottomup(g, c, 1, d, s).edges, ref);
    }
  }
  std::filesystem::remove_all(dir);
}
