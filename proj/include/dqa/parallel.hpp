#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <mutex>
#include <queue>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dqa/qdigraph.hpp"

namespace dqa {

/// How the sharded loops of the engines are executed and how per-worker
/// output is combined.
///
///  - Sequential: one thread, one hash set.
///  - SharedAccumulator: one mutex-guarded hash set; workers flush local
///    buffers of `batch_size` edges per lock acquisition.
///  - SplitAndMerge: private hash set per worker, combined pairwise in a
///    balanced reduction tree (smaller set merged into the larger).
///  - ShardedBottomUp: nothing is shared while shards run; every work item
///    produces a sorted, collapsed run and a final k-way merge deduplicates.
enum class StrategyKind { Sequential, SharedAccumulator, SplitAndMerge, ShardedBottomUp };

std::string_view to_string(StrategyKind k);
/// Accepts sequential, shared_accumulator (or mutex), split_and_merge, sharded_bottom_up.
StrategyKind parse_strategy(std::string_view token);

struct Strategy {
  StrategyKind kind = StrategyKind::Sequential;
  unsigned workers = 1;
  std::size_t batch_size = 1024;
  /// ShardedBottomUp only: when set, runs are written to files here and
  /// merged from disk.
  std::filesystem::path spill_dir;

  /// A single worker always behaves sequentially.
  StrategyKind effective_kind() const {
    return workers <= 1 ? StrategyKind::Sequential : kind;
  }
};

/// Per-edge bookkeeping carried through every strategy.
struct EdgeEntry {
  Provenance provenance = Provenance::None;
  std::uint8_t merges = 0;      // times this edge was moved by a split-and-merge step
  std::uint32_t emissions = 0;  // times a shard emitted it
};

inline void absorb(EdgeEntry& into, const EdgeEntry& from) {
  into.provenance = into.provenance | from.provenance;
  into.emissions += from.emissions;
  into.merges = std::max(into.merges, from.merges);
}

/// Deduplicated, key-sorted union of all shard outputs.
template <class Key>
struct ShardedEdges {
  std::vector<std::pair<Key, EdgeEntry>> edges;
  std::uint64_t emissions = 0;
  std::uint32_t max_merge_count = 0;
  std::size_t runs = 0;

  /// Largest emission count among edges carrying `criterion`.
  std::uint32_t max_emissions(Provenance criterion) const {
    std::uint32_t m = 0;
    for (const auto& [k, e] : edges) {
      if (has(e.provenance, criterion)) m = std::max(m, e.emissions);
    }
    return m;
  }
};

/// A worker threw; the run is abandoned and no partial result is returned.
class ShardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Key, class Hash>
using EdgeTable = std::unordered_map<Key, EdgeEntry, Hash>;

template <class Key, class Hash = std::hash<Key>>
class EdgeSink;

/// Runs shard_fn(item, sink) for every item in [0, item_count) under the
/// given strategy and returns the deduplicated union of all emitted edges.
/// The resulting edge set is identical for every strategy and worker count.
template <class Key, class Hash = std::hash<Key>, class ShardFn>
ShardedEdges<Key> run_sharded(std::size_t item_count, ShardFn&& shard_fn,
                              const Strategy& strategy);

/// Output handle given to a shard function. One writer per sink.
template <class Key, class Hash>
class EdgeSink {
 public:
  void emit(const Key& key, Provenance p) {
    ++emitted_;
    if (table_) {
      auto& e = (*table_)[key];
      e.provenance = e.provenance | p;
      ++e.emissions;
      return;
    }
    buffer_.emplace_back(key, p);
    if (shared_ && buffer_.size() >= batch_size_) flush();
  }

  std::uint64_t emitted() const { return emitted_; }

 private:
  template <class K, class H, class F>
  friend ShardedEdges<K> run_sharded(std::size_t, F&&, const Strategy&);

  EdgeSink() = default;

  void flush() {
    if (buffer_.empty()) return;
    std::lock_guard lock(*shared_mutex_);
    for (const auto& [k, p] : buffer_) {
      auto& e = (*shared_)[k];
      e.provenance = e.provenance | p;
      ++e.emissions;
    }
    buffer_.clear();
  }

  // Collapses the buffered emissions of one shard into a sorted run.
  std::vector<std::pair<Key, EdgeEntry>> take_run() {
    std::sort(buffer_.begin(), buffer_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Key, EdgeEntry>> run;
    for (const auto& [k, p] : buffer_) {
      if (run.empty() || run.back().first < k) {
        run.emplace_back(k, EdgeEntry{p, 0, 1});
      } else {
        run.back().second.provenance = run.back().second.provenance | p;
        ++run.back().second.emissions;
      }
    }
    buffer_.clear();
    return run;
  }

  EdgeTable<Key, Hash>* table_ = nullptr;
  EdgeTable<Key, Hash>* shared_ = nullptr;
  std::mutex* shared_mutex_ = nullptr;
  std::size_t batch_size_ = 1;
  std::vector<std::pair<Key, Provenance>> buffer_;
  std::uint64_t emitted_ = 0;
};

namespace detail {

/// Runs body(worker, begin, end) on `workers` threads over a static uniform
/// chunking of [0, items). Any exception aborts the run and is rethrown as
/// ShardError after all threads joined.
template <class Body>
void for_each_chunk(unsigned workers, std::size_t items, Body&& body) {
  workers = std::max(1u, workers);
  auto chunk = [&](unsigned w) {
    const std::size_t begin = items * w / workers;
    const std::size_t end = items * (w + 1) / workers;
    body(w, begin, end);
  };
  if (workers == 1) {
    try {
      chunk(0);
    } catch (const std::exception& e) {
      throw ShardError(std::string("worker 0 failed: ") + e.what());
    }
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          chunk(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (unsigned w = 0; w < workers; ++w) {
    if (!errors[w]) continue;
    try {
      std::rethrow_exception(errors[w]);
    } catch (const std::exception& e) {
      throw ShardError("worker " + std::to_string(w) + " failed: " + e.what());
    } catch (...) {
      throw ShardError("worker " + std::to_string(w) + " failed");
    }
  }
}

template <class Key, class Hash>
std::vector<std::pair<Key, EdgeEntry>> sorted_entries(EdgeTable<Key, Hash>& table) {
  std::vector<std::pair<Key, EdgeEntry>> out(std::make_move_iterator(table.begin()),
                                             std::make_move_iterator(table.end()));
  table.clear();
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// Merges `from` into `into`; every moved element counts one more merge.
template <class Key, class Hash>
void merge_tables(EdgeTable<Key, Hash>& into, EdgeTable<Key, Hash>& from) {
  if (into.size() < from.size()) into.swap(from);
  for (auto& [k, e] : from) {
    EdgeEntry moved = e;
    ++moved.merges;
    auto [it, inserted] = into.try_emplace(k, moved);
    if (!inserted) absorb(it->second, moved);
  }
  from.clear();
}

template <class Key>
concept SpillableKey = requires(std::ostream& os, std::istream& is, Key& k) {
  RunCodec<Key>::write(os, k);
  { RunCodec<Key>::read(is, k) } -> std::convertible_to<bool>;
};

/// Source of sorted (key, entry) items: either an in-memory run or a file.
template <class Key>
class RunSource {
 public:
  explicit RunSource(std::vector<std::pair<Key, EdgeEntry>> run) : memory_(std::move(run)) {}
  explicit RunSource(const std::filesystem::path& file)
      : file_(std::make_unique<std::ifstream>(file, std::ios::binary)) {}

  bool next(std::pair<Key, EdgeEntry>& item) {
    if (!file_) {
      if (pos_ == memory_.size()) return false;
      item = std::move(memory_[pos_++]);
      return true;
    }
    if constexpr (SpillableKey<Key>) {
      if (!RunCodec<Key>::read(*file_, item.first)) return false;
      std::uint8_t prov = 0;
      file_->read(reinterpret_cast<char*>(&prov), 1);
      file_->read(reinterpret_cast<char*>(&item.second.emissions), sizeof(std::uint32_t));
      item.second.provenance = static_cast<Provenance>(prov);
      item.second.merges = 0;
      return static_cast<bool>(*file_);
    }
    return false;
  }

 private:
  std::vector<std::pair<Key, EdgeEntry>> memory_;
  std::size_t pos_ = 0;
  std::unique_ptr<std::ifstream> file_;
};

template <class Key>
void write_run(const std::filesystem::path& file, const std::vector<std::pair<Key, EdgeEntry>>& run) {
  if constexpr (SpillableKey<Key>) {
    std::ofstream os(file, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open spill file " + file.string());
    for (const auto& [k, e] : run) {
      RunCodec<Key>::write(os, k);
      const auto prov = static_cast<std::uint8_t>(e.provenance);
      os.write(reinterpret_cast<const char*>(&prov), 1);
      os.write(reinterpret_cast<const char*>(&e.emissions), sizeof(std::uint32_t));
    }
    if (!os) throw std::runtime_error("failed writing spill file " + file.string());
  } else {
    (void)file;
    (void)run;
    throw std::logic_error("edge key type has no RunCodec; cannot spill");
  }
}

/// k-way merge with deduplication of sorted sources; emits to `out`.
template <class Key, class Out>
void merge_runs(std::vector<RunSource<Key>>& sources, Out&& out) {
  using Item = std::pair<Key, EdgeEntry>;
  struct Head {
    Item item;
    std::size_t source;
  };
  auto greater = [](const Head& a, const Head& b) { return b.item.first < a.item.first; };
  std::priority_queue<Head, std::vector<Head>, decltype(greater)> heap(greater);
  for (std::size_t s = 0; s < sources.size(); ++s) {
    Item item;
    if (sources[s].next(item)) heap.push({std::move(item), s});
  }
  bool have = false;
  Item current;
  while (!heap.empty()) {
    Head h = heap.top();
    heap.pop();
    if (have && !(current.first < h.item.first)) {
      absorb(current.second, h.item.second);
    } else {
      if (have) out(std::move(current));
      current = h.item;
      have = true;
    }
    Item item;
    if (sources[h.source].next(item)) heap.push({std::move(item), h.source});
  }
  if (have) out(std::move(current));
}

}  // namespace detail

template <class Key, class Hash, class ShardFn>
ShardedEdges<Key> run_sharded(std::size_t item_count, ShardFn&& shard_fn,
                              const Strategy& strategy) {
  using Sink = EdgeSink<Key, Hash>;
  ShardedEdges<Key> result;
  const unsigned workers = std::max(1u, strategy.workers);
  std::atomic<bool> abort{false};
  std::atomic<std::uint64_t> emitted{0};

  auto drive = [&](Sink& sink, std::size_t begin, std::size_t end, auto&& after_item) {
    try {
      for (std::size_t item = begin; item < end && !abort.load(std::memory_order_relaxed);
           ++item) {
        shard_fn(item, sink);
        after_item(item, sink);
      }
    } catch (...) {
      abort = true;
      throw;
    }
    emitted += sink.emitted();
  };
  auto nothing = [](std::size_t, Sink&) {};

  switch (strategy.effective_kind()) {
    case StrategyKind::Sequential: {
      EdgeTable<Key, Hash> table;
      detail::for_each_chunk(1, item_count, [&](unsigned, std::size_t b, std::size_t e) {
        Sink sink;
        sink.table_ = &table;
        drive(sink, b, e, nothing);
      });
      result.edges = detail::sorted_entries(table);
      result.runs = 1;
      break;
    }
    case StrategyKind::SharedAccumulator: {
      EdgeTable<Key, Hash> shared;
      std::mutex mutex;
      detail::for_each_chunk(workers, item_count, [&](unsigned, std::size_t b, std::size_t e) {
        Sink sink;
        sink.shared_ = &shared;
        sink.shared_mutex_ = &mutex;
        sink.batch_size_ = std::max<std::size_t>(1, strategy.batch_size);
        drive(sink, b, e, nothing);
        sink.flush();
      });
      result.edges = detail::sorted_entries(shared);
      result.runs = 1;
      break;
    }
    case StrategyKind::SplitAndMerge: {
      std::vector<EdgeTable<Key, Hash>> tables(workers);
      detail::for_each_chunk(workers, item_count, [&](unsigned w, std::size_t b, std::size_t e) {
        Sink sink;
        sink.table_ = &tables[w];
        drive(sink, b, e, nothing);
      });
      for (std::size_t stride = 1; stride < workers; stride *= 2) {
        const std::size_t pairs = (workers + 2 * stride - 1) / (2 * stride);
        detail::for_each_chunk(static_cast<unsigned>(pairs), pairs,
                               [&](unsigned, std::size_t b, std::size_t e) {
                                 for (std::size_t p = b; p < e; ++p) {
                                   const std::size_t left = p * 2 * stride;
                                   const std::size_t right = left + stride;
                                   if (right < workers) detail::merge_tables(tables[left], tables[right]);
                                 }
                               });
      }
      result.edges = detail::sorted_entries(tables[0]);
      result.runs = workers;
      break;
    }
    case StrategyKind::ShardedBottomUp: {
      const bool spill = !strategy.spill_dir.empty();
      if (spill) std::filesystem::create_directories(strategy.spill_dir);
      std::vector<std::vector<std::vector<std::pair<Key, EdgeEntry>>>> runs(workers);
      std::vector<std::vector<std::filesystem::path>> files(workers);
      detail::for_each_chunk(workers, item_count, [&](unsigned w, std::size_t b, std::size_t e) {
        Sink sink;
        drive(sink, b, e, [&](std::size_t item, Sink& s) {
          auto run = s.take_run();
          if (run.empty()) return;
          if (spill) {
            auto path = strategy.spill_dir / ("run-" + std::to_string(item) + ".bin");
            detail::write_run(path, run);
            files[w].push_back(std::move(path));
          } else {
            runs[w].push_back(std::move(run));
          }
        });
      });
      std::vector<detail::RunSource<Key>> sources;
      for (auto& per_worker : runs) {
        for (auto& run : per_worker) sources.emplace_back(std::move(run));
      }
      std::vector<std::filesystem::path> spilled;
      for (auto& per_worker : files) {
        for (auto& f : per_worker) spilled.push_back(std::move(f));
      }
      // Merge spilled runs in groups so that few files are open at once.
      constexpr std::size_t kFanIn = 64;
      std::size_t generation = 0;
      while (spilled.size() > kFanIn) {
        std::vector<std::filesystem::path> next;
        for (std::size_t g = 0; g < spilled.size(); g += kFanIn) {
          std::vector<detail::RunSource<Key>> group;
          const std::size_t end = std::min(spilled.size(), g + kFanIn);
          for (std::size_t f = g; f < end; ++f) group.emplace_back(spilled[f]);
          std::vector<std::pair<Key, EdgeEntry>> merged;
          detail::merge_runs(group, [&](auto&& item) { merged.push_back(std::move(item)); });
          group.clear();
          for (std::size_t f = g; f < end; ++f) std::filesystem::remove(spilled[f]);
          auto path = strategy.spill_dir / ("merge-" + std::to_string(generation) + "-" +
                                            std::to_string(g / kFanIn) + ".bin");
          detail::write_run(path, merged);
          next.push_back(std::move(path));
        }
        spilled = std::move(next);
        ++generation;
      }
      for (const auto& f : spilled) sources.emplace_back(f);
      result.runs = sources.size();
      detail::merge_runs(sources, [&](auto&& item) { result.edges.push_back(std::move(item)); });
      sources.clear();
      for (const auto& f : spilled) std::filesystem::remove(f);
      break;
    }
  }

  result.emissions = emitted.load();
  for (const auto& [k, e] : result.edges) {
    result.max_merge_count = std::max<std::uint32_t>(result.max_merge_count, e.merges);
  }
  return result;
}

/// Converts sharded id-pair output into QDigraph edges (already sorted).
inline std::vector<Edge> to_edges(const std::vector<std::pair<EdgeKey, EdgeEntry>>& entries) {
  std::vector<Edge> out;
  out.reserve(entries.size());
  for (const auto& [k, e] : entries) {
    out.push_back({SimplexId::unpack(k.src), SimplexId::unpack(k.dst), e.provenance});
  }
  return out;
}

}  // namespace dqa
