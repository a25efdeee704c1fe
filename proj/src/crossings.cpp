#include "rotsys/crossings.hpp"

#include <algorithm>
#include <tuple>

#include "rotsys/errors.hpp"

namespace rotsys {

std::pair<Edge, Edge> pairing_edges(Pairing p, const Vertex q[4]) {
  switch (p) {
    case Pairing::AbCd:
      return {{q[0], q[1]}, {q[2], q[3]}};
    case Pairing::AcBd:
      return {{q[0], q[2]}, {q[1], q[3]}};
    case Pairing::AdBc:
    default:
      return {{q[0], q[3]}, {q[1], q[2]}};
  }
}

CrossingMap::CrossingMap(int n) : n_(n), edges_(n * (n - 1) / 2) {
  matrix_.assign(static_cast<std::size_t>(edges_) * edges_, -1);
}

void CrossingMap::add(Edge e, Edge f, int direction) {
  e = make_edge(e.first, e.second);
  f = make_edge(f.first, f.second);
  if (!disjoint(e, f)) throw InvalidArgument("crossing edges must be vertex-disjoint");
  if (f.first < e.first) std::swap(e, f);
  const int ie = edge_index(n_, e.first, e.second), jf = edge_index(n_, f.first, f.second);
  if (matrix_[static_cast<std::size_t>(ie) * edges_ + jf] >= 0) return;
  matrix_[static_cast<std::size_t>(ie) * edges_ + jf] = static_cast<std::int8_t>(direction);
  matrix_[static_cast<std::size_t>(jf) * edges_ + ie] = static_cast<std::int8_t>(direction);
  CrossingPair cp{e, f, direction};
  auto key = [](const CrossingPair& c) { return std::tie(c.e, c.f); };
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), cp,
                             [&](const CrossingPair& l, const CrossingPair& r) { return key(l) < key(r); });
  pairs_.insert(it, cp);
}

bool CrossingMap::crosses(Edge e, Edge f) const {
  const int ie = edge_index(n_, e.first, e.second), jf = edge_index(n_, f.first, f.second);
  return matrix_[static_cast<std::size_t>(ie) * edges_ + jf] >= 0;
}

int CrossingMap::direction(Edge e, Edge f) const {
  const int ie = edge_index(n_, e.first, e.second), jf = edge_index(n_, f.first, f.second);
  return matrix_[static_cast<std::size_t>(ie) * edges_ + jf];
}

std::vector<Edge> CrossingMap::crossing_edges(Edge e) const {
  std::vector<Edge> out;
  for (const auto& cp : pairs_) {
    if (cp.e == e) out.push_back(cp.f);
    if (cp.f == e) out.push_back(cp.e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const CrossingMap& a, const CrossingMap& b) {
  if (a.n_ != b.n_ || a.pairs_.size() != b.pairs_.size()) return false;
  for (std::size_t i = 0; i < a.pairs_.size(); ++i)
    if (a.pairs_[i].e != b.pairs_[i].e || a.pairs_[i].f != b.pairs_[i].f) return false;
  return true;
}

}  // namespace rotsys
