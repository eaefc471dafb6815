#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "dqa/graph.hpp"

namespace dqa {

/// Ordered tuple of distinct vertices (v0 v1 ... vd); a d-simplex when every
/// earlier vertex has an edge to every later one.
class Simplex {
 public:
  Simplex() = default;
  Simplex(std::initializer_list<VertexId> vertices) : vertices_(vertices) {}
  explicit Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {}
  explicit Simplex(std::span<const VertexId> vertices)
      : vertices_(vertices.begin(), vertices.end()) {}

  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }

  VertexId operator[](std::size_t k) const { return vertices_[k]; }
  VertexId front() const { return vertices_.front(); }
  VertexId back() const { return vertices_.back(); }

  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  std::span<const VertexId> vertices() const { return vertices_; }

  bool contains(VertexId v) const;

  auto operator<=>(const Simplex&) const = default;
  bool operator==(const Simplex&) const = default;

 private:
  std::vector<VertexId> vertices_;
};

struct SimplexHash {
  std::size_t operator()(std::span<const VertexId> vertices) const noexcept;
  std::size_t operator()(const Simplex& s) const noexcept { return (*this)(s.vertices()); }
};

/// Formats as "(0 1 2)".
std::ostream& operator<<(std::ostream& os, const Simplex& s);
std::string to_string(const Simplex& s);

/// Index of a face map: a concrete position or LAST (remove the final vertex).
class FaceIndex {
 public:
  constexpr FaceIndex() = default;
  constexpr explicit FaceIndex(unsigned position) : value_(position) {}

  static constexpr FaceIndex last() { return FaceIndex(kLast); }

  /// Accepts a non-negative integer or "inf".
  static FaceIndex parse(std::string_view token);

  constexpr bool is_last() const { return value_ == kLast; }
  constexpr unsigned position() const { return value_; }

  /// Position used by the novel definition; LAST becomes q+1.
  constexpr unsigned resolve_novel(int q) const {
    return is_last() ? static_cast<unsigned>(q + 1) : value_;
  }
  /// Position used by the hatted face map of a simplex of dimension dim.
  constexpr unsigned resolve_hat(int dim) const {
    const auto top = static_cast<unsigned>(dim);
    return value_ > top ? top : value_;
  }

  std::string to_string() const;

  constexpr bool operator==(const FaceIndex&) const = default;

 private:
  static constexpr unsigned kLast = std::numeric_limits<unsigned>::max();
  unsigned value_ = 0;
};

/// d_i: removes the vertex at position i. Throws std::out_of_range unless
/// 0 <= i <= dim(s) and dim(s) >= 1.
Simplex face(const Simplex& s, std::size_t i);

/// Clamped face map: removes position min(i, dim s); LAST removes the final vertex.
Simplex hat_face(const Simplex& s, FaceIndex i);

/// Every n-dimensional face of s (ordered sub-tuples of n+1 vertices) in
/// lexicographic position order. Throws std::out_of_range unless 0 <= n <= dim s.
std::vector<Simplex> faces_of_dim(const Simplex& s, int n);

/// Calls fn(std::span<const VertexId>) for every sub-tuple of `count`
/// vertices, in lexicographic position order. The span is only valid during
/// the call. If fn returns bool, returning false stops the enumeration.
template <class Fn>
void for_each_subtuple(std::span<const VertexId> vertices, std::size_t count, Fn&& fn) {
  const std::size_t n = vertices.size();
  if (count > n) return;
  std::vector<std::size_t> pick(count);
  std::vector<VertexId> buffer(count);
  for (std::size_t k = 0; k < count; ++k) pick[k] = k;
  while (true) {
    for (std::size_t k = 0; k < count; ++k) buffer[k] = vertices[pick[k]];
    if constexpr (std::is_same_v<std::invoke_result_t<Fn&, std::span<const VertexId>>, bool>) {
      if (!fn(std::span<const VertexId>(buffer))) return;
    } else {
      fn(std::span<const VertexId>(buffer));
    }
    std::size_t k = count;
    while (k > 0 && pick[k - 1] == n - count + k - 1) --k;
    if (k == 0) return;
    ++pick[k - 1];
    for (std::size_t m = k; m < count; ++m) pick[m] = pick[m - 1] + 1;
  }
}

/// True iff `sub` is an order-preserving sub-tuple of `super` (sub ↪ super).
bool includes(std::span<const VertexId> sub, std::span<const VertexId> super);
inline bool includes(const Simplex& sub, const Simplex& super) {
  return includes(sub.vertices(), super.vertices());
}

/// Number of vertices the two tuples have in common (as sets).
std::size_t common_vertex_count(std::span<const VertexId> a, std::span<const VertexId> b);

/// Binomial coefficient; 0 when k > n.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace dqa
