#include "dqa/nearness.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace dqa {

namespace {

bool has_vertex(std::span<const VertexId> s, VertexId v) {
  return std::find(s.begin(), s.end(), v) != s.end();
}

bool passes_gate(const Simplex& sigma, const Simplex& tau, int q) {
  return common_vertex_count(sigma.vertices(), tau.vertices()) > static_cast<std::size_t>(q);
}

// d_pos(mu) for every (q+1)-face mu of s, stored flat with stride q+1. Tuples
// using a vertex outside `other` cannot appear on the other side and are skipped.
void collect_novel_alphas(std::span<const VertexId> s, std::span<const VertexId> other, int q,
                          unsigned pos, std::vector<VertexId>& out) {
  out.clear();
  const std::size_t width = static_cast<std::size_t>(q) + 2;
  for_each_subtuple(s, width, [&](std::span<const VertexId> mu) {
    for (std::size_t k = 0; k < width; ++k) {
      if (k != pos && !has_vertex(other, mu[k])) return;
    }
    for (std::size_t k = 0; k < width; ++k) {
      if (k != pos) out.push_back(mu[k]);
    }
  });
}

bool share_tuple(const std::vector<VertexId>& a, const std::vector<VertexId>& b,
                 std::size_t stride) {
  for (std::size_t x = 0; x < a.size(); x += stride) {
    for (std::size_t y = 0; y < b.size(); y += stride) {
      if (std::equal(a.begin() + static_cast<std::ptrdiff_t>(x),
                     a.begin() + static_cast<std::ptrdiff_t>(x + stride),
                     b.begin() + static_cast<std::ptrdiff_t>(y))) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

std::string_view to_string(Definition d) { return d == Definition::Novel ? "novel" : "hat"; }

Definition parse_definition(std::string_view token) {
  if (token == "novel") return Definition::Novel;
  if (token == "hat") return Definition::Hat;
  throw std::invalid_argument("definition must be \"novel\" or \"hat\", got \"" +
                              std::string(token) + "\"");
}

void validate_direction(const Direction& dir, int q) {
  if (q < 0) throw std::invalid_argument("q must be >= 0");
  if (dir.definition != Definition::Novel) return;
  for (const FaceIndex& k : {dir.i, dir.j}) {
    if (!k.is_last() && k.position() > static_cast<unsigned>(q) + 1) {
      throw std::invalid_argument("novel face index " + k.to_string() + " outside {0, ..., " +
                                  std::to_string(q + 1) + "}");
    }
  }
}

bool shares_face_novel(const Simplex& sigma, const Simplex& tau, int q, unsigned i, unsigned j) {
  if (sigma.dim() < q + 1 || tau.dim() < q + 1) return false;
  if (!passes_gate(sigma, tau, q)) return false;
  thread_local std::vector<VertexId> alpha_sigma;
  thread_local std::vector<VertexId> alpha_tau;
  collect_novel_alphas(sigma.vertices(), tau.vertices(), q, i, alpha_sigma);
  if (alpha_sigma.empty()) return false;
  collect_novel_alphas(tau.vertices(), sigma.vertices(), q, j, alpha_tau);
  return share_tuple(alpha_sigma, alpha_tau, static_cast<std::size_t>(q) + 1);
}

bool shares_face_hat(const Simplex& sigma, const Simplex& tau, int q, FaceIndex i, FaceIndex j) {
  if (sigma.dim() < q + 1 || tau.dim() < q + 1) return false;
  if (!passes_gate(sigma, tau, q)) return false;
  const Simplex face_sigma = hat_face(sigma, i);
  const Simplex face_tau = hat_face(tau, j);
  bool found = false;
  for_each_subtuple(face_sigma.vertices(), static_cast<std::size_t>(q) + 1,
                    [&](std::span<const VertexId> alpha) {
                      found = includes(alpha, face_tau.vertices());
                      return !found;
                    });
  return found;
}

bool is_q_near_novel(const Simplex& sigma, const Simplex& tau, int q, FaceIndex i, FaceIndex j) {
  validate_direction({i, j, Definition::Novel}, q);
  if (includes(sigma, tau)) return true;
  return shares_face_novel(sigma, tau, q, i.resolve_novel(q), j.resolve_novel(q));
}

bool is_q_near_hat(const Simplex& sigma, const Simplex& tau, int q, FaceIndex i, FaceIndex j) {
  if (includes(sigma, tau)) return true;
  return shares_face_hat(sigma, tau, q, i, j);
}

bool is_q_near(const Simplex& sigma, const Simplex& tau, int q, const Direction& dir) {
  return dir.definition == Definition::Novel ? is_q_near_novel(sigma, tau, q, dir.i, dir.j)
                                             : is_q_near_hat(sigma, tau, q, dir.i, dir.j);
}

bool shares_face(const Simplex& sigma, const Simplex& tau, int q, const Direction& dir) {
  if (dir.definition == Definition::Novel) {
    return shares_face_novel(sigma, tau, q, dir.i.resolve_novel(q), dir.j.resolve_novel(q));
  }
  return shares_face_hat(sigma, tau, q, dir.i, dir.j);
}

namespace {

// All `count`-vertex sub-tuples of `piece` that are also sub-tuples of `other`.
std::vector<std::vector<VertexId>> shared_pieces(std::span<const VertexId> piece,
                                                 std::span<const VertexId> other,
                                                 std::size_t count) {
  std::vector<std::vector<VertexId>> out;
  for_each_subtuple(piece, count, [&](std::span<const VertexId> t) {
    if (includes(t, other)) out.emplace_back(t.begin(), t.end());
  });
  return out;
}

// Concatenations (shared prefix piece, shared suffix piece) over every split
// point s >= k of x, where x[s] is the removed vertex.
std::vector<std::vector<VertexId>> split_candidates(const Simplex& x, const Simplex& other, int q,
                                                    unsigned k) {
  std::vector<std::vector<VertexId>> out;
  const auto v = x.vertices();
  const std::size_t after = static_cast<std::size_t>(q) + 1 - k;
  for (std::size_t split = k; split < v.size(); ++split) {
    const auto before_part = v.subspan(0, split);
    const auto after_part = v.subspan(split + 1);
    if (before_part.size() < k || after_part.size() < after) continue;
    const auto heads = shared_pieces(before_part, other.vertices(), k);
    if (heads.empty()) continue;
    const auto tails = shared_pieces(after_part, other.vertices(), after);
    for (const auto& h : heads) {
      for (const auto& t : tails) {
        std::vector<VertexId> joined(h);
        joined.insert(joined.end(), t.begin(), t.end());
        out.push_back(std::move(joined));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

bool is_q_near_decomposition(const Simplex& sigma, const Simplex& tau, int q, unsigned i,
                             unsigned j) {
  if (q < 0 || sigma.dim() < q + 1 || tau.dim() < q + 1) return false;
  const auto top = static_cast<unsigned>(q) + 1;
  if (i > top || j > top) {
    throw std::invalid_argument("decomposition indices must lie in {0, ..., q+1}");
  }
  const auto from_sigma = split_candidates(sigma, tau, q, i);
  if (from_sigma.empty()) return false;
  const auto from_tau = split_candidates(tau, sigma, q, j);
  std::vector<std::vector<VertexId>> common;
  std::set_intersection(from_sigma.begin(), from_sigma.end(), from_tau.begin(), from_tau.end(),
                        std::back_inserter(common));
  return !common.empty();
}

}  // namespace dqa
