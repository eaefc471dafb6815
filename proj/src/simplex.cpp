#include "dqa/simplex.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dqa {

bool Simplex::contains(VertexId v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

std::size_t SimplexHash::operator()(std::span<const VertexId> vertices) const noexcept {
  // FNV-1a over the 32-bit ids followed by a final mix.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (VertexId v : vertices) {
    h ^= v;
    h *= 0x100000001b3ULL;
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return static_cast<std::size_t>(h);
}

std::ostream& operator<<(std::ostream& os, const Simplex& s) {
  os << '(';
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) os << ' ';
    os << s[k];
  }
  return os << ')';
}

std::string to_string(const Simplex& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

FaceIndex FaceIndex::parse(std::string_view token) {
  if (token == "inf" || token == "INF" || token == "last") return last();
  unsigned value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end || value == kLast) {
    throw std::invalid_argument("face index must be a non-negative integer or \"inf\", got \"" +
                                std::string(token) + "\"");
  }
  return FaceIndex(value);
}

std::string FaceIndex::to_string() const {
  return is_last() ? std::string("inf") : std::to_string(value_);
}

Simplex face(const Simplex& s, std::size_t i) {
  if (s.dim() < 1 || i > static_cast<std::size_t>(s.dim())) {
    throw std::out_of_range("face index " + std::to_string(i) + " out of range for " +
                            to_string(s));
  }
  std::vector<VertexId> out;
  out.reserve(s.size() - 1);
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k != i) out.push_back(s[k]);
  }
  return Simplex(std::move(out));
}

Simplex hat_face(const Simplex& s, FaceIndex i) {
  if (s.dim() < 1) {
    throw std::out_of_range("hat_face needs a simplex of dimension >= 1, got " + to_string(s));
  }
  return face(s, i.resolve_hat(s.dim()));
}

std::vector<Simplex> faces_of_dim(const Simplex& s, int n) {
  if (n < 0 || n > s.dim()) {
    throw std::out_of_range("no faces of dimension " + std::to_string(n) + " in " +
                            to_string(s));
  }
  std::vector<Simplex> out;
  out.reserve(binomial(s.size(), static_cast<std::uint64_t>(n) + 1));
  for_each_subtuple(s.vertices(), static_cast<std::size_t>(n) + 1,
                    [&](std::span<const VertexId> t) { out.emplace_back(t); });
  return out;
}

bool includes(std::span<const VertexId> sub, std::span<const VertexId> super) {
  std::size_t k = 0;
  for (VertexId v : super) {
    if (k == sub.size()) break;
    if (sub[k] == v) ++k;
  }
  return k == sub.size();
}

std::size_t common_vertex_count(std::span<const VertexId> a, std::span<const VertexId> b) {
  std::size_t count = 0;
  for (VertexId v : a) {
    count += static_cast<std::size_t>(std::find(b.begin(), b.end(), v) != b.end());
  }
  return count;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t m = 1; m <= k; ++m) r = r * (n - k + m) / m;
  return r;
}

}  // namespace dqa
