#pragma once

// Brute-force reference implementations used only by the tests. None of them
// call the library's enumeration helpers (for_each_subtuple, face maps,
// insertion_candidates); they work on plain vectors and bitmasks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "dqa/flag_complex.hpp"
#include "dqa/graph.hpp"
#include "dqa/nearness.hpp"
#include "dqa/qdigraph.hpp"

namespace oracle {

using Tuple = std::vector<dqa::VertexId>;

inline bool is_simplex(const dqa::DirectedGraph& g, const Tuple& t) {
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = a + 1; b < t.size(); ++b) {
      if (!g.has_edge(t[a], t[b])) return false;
    }
  }
  return true;
}

/// Every simplex of g, by trying every vertex subset in every order.
/// Exponential; meant for n <= 8.
inline std::set<Tuple> all_simplices(const dqa::DirectedGraph& g) {
  std::set<Tuple> out;
  const auto n = static_cast<unsigned>(g.vertex_count());
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    Tuple t;
    for (unsigned v = 0; v < n; ++v) {
      if (mask & (1u << v)) t.push_back(v);
    }
    do {
      if (is_simplex(g, t)) out.insert(t);
    } while (std::next_permutation(t.begin(), t.end()));
  }
  return out;
}

/// Sub-tuples of t with exactly k entries, chosen by bitmask.
inline std::vector<Tuple> subtuples(const Tuple& t, std::size_t k) {
  std::vector<Tuple> out;
  const auto n = t.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    Tuple s;
    for (std::size_t p = 0; p < n; ++p) {
      if (mask & (1u << p)) s.push_back(t[p]);
    }
    out.push_back(s);
  }
  return out;
}

inline Tuple erase_at(Tuple t, std::size_t pos) {
  t.erase(t.begin() + static_cast<std::ptrdiff_t>(pos));
  return t;
}

/// sub is an order-preserving sub-tuple of super (greedy matching).
inline bool subsequence(const Tuple& sub, const Tuple& super) {
  std::size_t k = 0;
  for (auto v : super) {
    if (k < sub.size() && sub[k] == v) ++k;
  }
  return k == sub.size();
}

inline std::size_t common_count(const Tuple& a, const Tuple& b) {
  std::size_t c = 0;
  for (auto v : a) c += std::count(b.begin(), b.end(), v);
  return c;
}

inline std::size_t lcs(const Tuple& a, const Tuple& b) {
  std::vector<std::vector<std::size_t>> dp(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t x = 1; x <= a.size(); ++x) {
    for (std::size_t y = 1; y <= b.size(); ++y) {
      dp[x][y] = a[x - 1] == b[y - 1] ? dp[x - 1][y - 1] + 1 : std::max(dp[x - 1][y], dp[x][y - 1]);
    }
  }
  return dp[a.size()][b.size()];
}

/// Criterion [II], novel: nested loops over all (q+1)-faces of both sides.
inline bool novel_shared(const Tuple& s, const Tuple& t, int q, unsigned i, unsigned j) {
  const auto width = static_cast<std::size_t>(q) + 2;
  if (s.size() < width || t.size() < width) return false;
  if (common_count(s, t) <= static_cast<std::size_t>(q)) return false;
  for (const auto& mu : subtuples(s, width)) {
    const Tuple a = erase_at(mu, i);
    for (const auto& nu : subtuples(t, width)) {
      if (erase_at(nu, j) == a) return true;
    }
  }
  return false;
}

inline Tuple hat_erase(const Tuple& s, dqa::FaceIndex k) {
  const std::size_t top = s.size() - 1;
  const std::size_t pos = k.is_last() ? top : std::min<std::size_t>(k.position(), top);
  return erase_at(s, pos);
}

/// Criterion [II], hat: the clamped faces have a common subsequence of q+1
/// vertices.
inline bool hat_shared(const Tuple& s, const Tuple& t, int q, dqa::FaceIndex i, dqa::FaceIndex j) {
  const auto width = static_cast<std::size_t>(q) + 2;
  if (s.size() < width || t.size() < width) return false;
  if (common_count(s, t) <= static_cast<std::size_t>(q)) return false;
  return lcs(hat_erase(s, i), hat_erase(t, j)) >= static_cast<std::size_t>(q) + 1;
}

inline bool shared(const Tuple& s, const Tuple& t, int q, const dqa::Direction& d) {
  if (d.definition == dqa::Definition::Novel) {
    return novel_shared(s, t, q, d.i.resolve_novel(q), d.j.resolve_novel(q));
  }
  return hat_shared(s, t, q, d.i, d.j);
}

using EdgeTriple = std::tuple<std::uint64_t, std::uint64_t, dqa::Provenance>;

/// The full Q-digraph by checking every ordered pair with the oracles above.
inline std::vector<EdgeTriple> q_digraph(const dqa::FlagComplex& c, int q, const dqa::Direction& d) {
  std::vector<std::pair<dqa::SimplexId, Tuple>> nodes;
  for (int dim = q; dim <= c.max_dim(); ++dim) {
    const auto level = c.level(dim);
    for (std::uint32_t k = 0; k < level.size(); ++k) {
      const auto v = level[k].vertices();
      nodes.push_back({{static_cast<std::uint32_t>(dim), k}, Tuple(v.begin(), v.end())});
    }
  }
  std::vector<EdgeTriple> out;
  for (const auto& [a, s] : nodes) {
    for (const auto& [b, t] : nodes) {
      if (a == b) continue;
      dqa::Provenance p = dqa::Provenance::None;
      if (subsequence(s, t)) p = p | dqa::Provenance::Inclusion;
      if (shared(s, t, q, d)) p = p | dqa::Provenance::SharedFace;
      if (p != dqa::Provenance::None) out.emplace_back(a.packed(), b.packed(), p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<EdgeTriple> triples(const dqa::QDigraph& g) {
  std::vector<EdgeTriple> out;
  for (const auto& e : g.edges) out.emplace_back(e.src.packed(), e.dst.packed(), e.provenance);
  return out;
}

}  // namespace oracle
