#include "dqa/parallel.hpp"

namespace dqa {

std::string_view to_string(StrategyKind k) {
  switch (k) {
    case StrategyKind::Sequential: return "sequential";
    case StrategyKind::SharedAccumulator: return "shared_accumulator";
    case StrategyKind::SplitAndMerge: return "split_and_merge";
    case StrategyKind::ShardedBottomUp: return "sharded_bottom_up";
  }
  return "unknown";
}

StrategyKind parse_strategy(std::string_view token) {
  if (token == "sequential") return StrategyKind::Sequential;
  if (token == "shared_accumulator" || token == "mutex") return StrategyKind::SharedAccumulator;
  if (token == "split_and_merge") return StrategyKind::SplitAndMerge;
  if (token == "sharded_bottom_up") return StrategyKind::ShardedBottomUp;
  throw std::invalid_argument("unknown strategy \"" + std::string(token) + "\"");
}

}  // namespace dqa
