#include "dqa/flag_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace dqa {

std::string SimplexId::to_string() const {
  return std::to_string(dim) + "." + std::to_string(ordinal);
}

std::span<const Simplex> FlagComplex::level(int d) const {
  if (d < 0 || d > max_dim()) return {};
  return levels_[static_cast<std::size_t>(d)];
}

std::vector<std::size_t> FlagComplex::level_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(levels_.size());
  for (const auto& l : levels_) sizes.push_back(l.size());
  return sizes;
}

std::size_t FlagComplex::count_from(int q) const {
  std::size_t n = 0;
  for (int d = std::max(q, 0); d <= max_dim(); ++d) n += level_size(d);
  return n;
}

std::optional<SimplexId> FlagComplex::find(const Simplex& s) const {
  const int d = s.dim();
  if (d < 0 || d > max_dim()) return std::nullopt;
  const auto& idx = index_[static_cast<std::size_t>(d)];
  auto it = idx.find(s);
  if (it == idx.end()) return std::nullopt;
  return SimplexId{static_cast<std::uint32_t>(d), it->second};
}

std::optional<SimplexId> FlagComplex::find(std::span<const VertexId> vertices) const {
  return find(Simplex(vertices));
}

FlagComplex build_flag_complex(const DirectedGraph& graph, std::optional<int> d_max) {
  if (d_max && *d_max < 1) {
    throw std::invalid_argument("d_max must be >= 1, got " + std::to_string(*d_max));
  }
  FlagComplex fc;
  fc.d_max_ = d_max;
  const int limit = d_max ? *d_max : -1;
  auto collect = [&](std::span<const VertexId> t) {
    const std::size_t d = t.size() - 1;
    if (fc.levels_.size() <= d) fc.levels_.resize(d + 1);
    fc.levels_[d].emplace_back(t);
  };
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    for_each_simplex_rooted(graph, v, limit, collect);
  }
  if (fc.levels_.empty()) fc.levels_.resize(1);  // dim 0 always present, possibly empty

  fc.index_.resize(fc.levels_.size());
  for (std::size_t d = 0; d < fc.levels_.size(); ++d) {
    auto& level = fc.levels_[d];
    std::sort(level.begin(), level.end());
    auto& idx = fc.index_[d];
    idx.reserve(level.size());
    for (std::uint32_t k = 0; k < level.size(); ++k) idx.emplace(level[k], k);
  }
  return fc;
}

void intersect_sorted(std::span<const VertexId> a, std::span<const VertexId> b,
                      std::vector<VertexId>& out) {
  out.clear();
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
}

std::vector<VertexId> insertion_candidates(std::span<const VertexId> tuple, std::size_t position,
                                           const DirectedGraph& graph) {
  std::vector<VertexId> current;
  std::vector<VertexId> scratch;
  bool first = true;
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    const auto adjacent = k < position ? graph.successors(tuple[k]) : graph.predecessors(tuple[k]);
    if (first) {
      current.assign(adjacent.begin(), adjacent.end());
      first = false;
    } else {
      intersect_sorted(current, adjacent, scratch);
      current.swap(scratch);
    }
    if (current.empty()) break;
  }
  if (first) {
    // Empty tuple: every vertex can be inserted.
    current.resize(graph.vertex_count());
    for (VertexId v = 0; v < graph.vertex_count(); ++v) current[v] = v;
  }
  return current;
}

std::vector<Simplex> coface_scan(const Simplex& s, std::size_t i, const DirectedGraph& graph) {
  if (i > s.size()) {
    throw std::out_of_range("coface position " + std::to_string(i) + " out of range for " +
                            to_string(s));
  }
  std::vector<Simplex> out;
  std::vector<VertexId> t(s.size() + 1);
  for (VertexId v : insertion_candidates(s.vertices(), i, graph)) {
    std::copy(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i), t.begin());
    t[i] = v;
    std::copy(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
              t.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    out.emplace_back(t);
  }
  return out;
}

}  // namespace dqa
