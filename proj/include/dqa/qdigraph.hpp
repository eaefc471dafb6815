#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

#include "dqa/flag_complex.hpp"
#include "dqa/nearness.hpp"

namespace dqa {

/// Which criterion produced an edge: [I] inclusion, [II] shared face, or both.
enum class Provenance : std::uint8_t { None = 0, Inclusion = 1, SharedFace = 2, Both = 3 };

constexpr Provenance operator|(Provenance a, Provenance b) {
  return static_cast<Provenance>(static_cast<std::uint8_t>(a) | static_cast<std::uint8_t>(b));
}
constexpr bool has(Provenance p, Provenance flag) {
  return (static_cast<std::uint8_t>(p) & static_cast<std::uint8_t>(flag)) != 0;
}

/// "I", "II" or "both".
std::string_view to_string(Provenance p);
Provenance parse_provenance(std::string_view token);

/// Hash-set key for an edge between two simplex ids (packed).
struct EdgeKey {
  std::uint64_t src = 0;
  std::uint64_t dst = 0;

  static EdgeKey of(SimplexId a, SimplexId b) { return {a.packed(), b.packed()}; }

  auto operator<=>(const EdgeKey&) const = default;
};

struct EdgeKeyHash {
  std::size_t operator()(const EdgeKey& k) const noexcept {
    std::uint64_t h = k.src * 0x9e3779b97f4a7c15ULL ^ (k.dst + 0x632be59bd9b4e019ULL);
    h ^= h >> 31;
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }
};

struct Edge {
  SimplexId src;
  SimplexId dst;
  Provenance provenance = Provenance::None;

  bool operator==(const Edge&) const = default;
};

/// Instrumentation counters filled by the engines. Zero where not applicable.
struct EngineStats {
  std::uint64_t pair_checks = 0;          // top-down: ordered pairs examined
  std::uint64_t inclusion_emissions = 0;  // inclusion pass: (face, supersimplex) items
  std::uint64_t emissions = 0;            // criterion-[II] candidate edges emitted
  std::uint32_t max_duplicates = 0;       // most emissions of one criterion-[II] edge
  std::uint32_t max_merge_count = 0;      // split-and-merge: most merges of one element
  std::size_t peak_shard_state = 0;       // bottom-up: largest per-shard closure state
};

/// (q,i,j)-digraph on Σ_{>=q}: the vertex set is described by the level sizes
/// of dimensions q, q+1, ...; edges are sorted by (src, dst) and self-loop free.
struct QDigraph {
  int q = 0;
  Direction direction;
  std::vector<std::size_t> level_sizes;
  std::vector<Edge> edges;
  EngineStats stats;

  std::size_t vertex_count() const;
};

/// Builds the digraph shell (level sizes of Σ_{>=q}) for `complex`.
QDigraph make_qdigraph(const FlagComplex& complex, int q, const Direction& dir);

/// Edges present in exactly one of the two digraphs (including provenance
/// mismatches), at most `limit` of each side.
struct EdgeDifference {
  std::vector<Edge> only_left;
  std::vector<Edge> only_right;
  bool empty() const { return only_left.empty() && only_right.empty(); }
};
EdgeDifference edge_difference(const QDigraph& left, const QDigraph& right,
                               std::size_t limit = 10);

/// Keeps only edges whose provenance includes `criterion`.
QDigraph filter_by_criterion(const QDigraph& g, Provenance criterion);

/// Binary codec used for spilled sorted runs.
template <class Key>
struct RunCodec;

template <>
struct RunCodec<EdgeKey> {
  static void write(std::ostream& os, const EdgeKey& k) {
    os.write(reinterpret_cast<const char*>(&k.src), sizeof k.src);
    os.write(reinterpret_cast<const char*>(&k.dst), sizeof k.dst);
  }
  static bool read(std::istream& is, EdgeKey& k) {
    is.read(reinterpret_cast<char*>(&k.src), sizeof k.src);
    is.read(reinterpret_cast<char*>(&k.dst), sizeof k.dst);
    return static_cast<bool>(is);
  }
};

}  // namespace dqa
