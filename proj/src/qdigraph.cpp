#include "dqa/qdigraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dqa {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Inclusion: return "I";
    case Provenance::SharedFace: return "II";
    case Provenance::Both: return "both";
    default: return "none";
  }
}

Provenance parse_provenance(std::string_view token) {
  if (token == "I") return Provenance::Inclusion;
  if (token == "II") return Provenance::SharedFace;
  if (token == "both") return Provenance::Both;
  throw std::invalid_argument("unknown provenance \"" + std::string(token) + "\"");
}

std::size_t QDigraph::vertex_count() const {
  std::size_t n = 0;
  for (auto s : level_sizes) n += s;
  return n;
}

QDigraph make_qdigraph(const FlagComplex& complex, int q, const Direction& dir) {
  QDigraph g;
  g.q = q;
  g.direction = dir;
  for (int d = std::max(q, 0); d <= complex.max_dim(); ++d) {
    g.level_sizes.push_back(complex.level_size(d));
  }
  return g;
}

namespace {

bool edge_less(const Edge& a, const Edge& b) {
  if (a.src != b.src) return a.src < b.src;
  if (a.dst != b.dst) return a.dst < b.dst;
  return a.provenance < b.provenance;
}

}  // namespace

EdgeDifference edge_difference(const QDigraph& left, const QDigraph& right, std::size_t limit) {
  EdgeDifference diff;
  auto a = left.edges.begin();
  auto b = right.edges.begin();
  while (a != left.edges.end() || b != right.edges.end()) {
    if (b == right.edges.end() || (a != left.edges.end() && edge_less(*a, *b))) {
      if (diff.only_left.size() < limit) diff.only_left.push_back(*a);
      ++a;
    } else if (a == left.edges.end() || edge_less(*b, *a)) {
      if (diff.only_right.size() < limit) diff.only_right.push_back(*b);
      ++b;
    } else {
      ++a;
      ++b;
    }
  }
  return diff;
}

QDigraph filter_by_criterion(const QDigraph& g, Provenance criterion) {
  QDigraph out = g;
  std::erase_if(out.edges, [&](const Edge& e) { return !has(e.provenance, criterion); });
  return out;
}

}  // namespace dqa
