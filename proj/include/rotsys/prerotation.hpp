#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rotsys {

// Vertices are 0-based internally; the JSON-lines format is 1-based.
using Vertex = int;

// n cyclic permutations, one per vertex, each stored with its smallest
// element first so that equality is positional.
class PreRotationSystem {
 public:
  // Validates and normalizes; throws InvalidArgument.
  explicit PreRotationSystem(const std::vector<std::vector<Vertex>>& rotations);

  int size() const { return n_; }
  std::span<const Vertex> rotation(Vertex a) const {
    return {flat_.data() + static_cast<std::size_t>(a) * (n_ - 1),
            static_cast<std::size_t>(n_ - 1)};
  }
  Vertex at(Vertex a, int i) const { return flat_[static_cast<std::size_t>(a) * (n_ - 1) + i]; }
  // Index of b in the rotation of a.
  int position(Vertex a, Vertex b) const { return pos_[static_cast<std::size_t>(a) * n_ + b]; }

  // True iff b, c, d appear in this cyclic order around a.
  bool ccw(Vertex a, Vertex b, Vertex c, Vertex d) const;

  std::vector<std::vector<Vertex>> rotations() const;
  const std::vector<Vertex>& flat() const { return flat_; }

  bool natural() const;

  friend bool operator==(const PreRotationSystem& l, const PreRotationSystem& r) {
    return l.n_ == r.n_ && l.flat_ == r.flat_;
  }
  friend std::strong_ordering operator<=>(const PreRotationSystem& l, const PreRotationSystem& r) {
    if (auto c = l.n_ <=> r.n_; c != 0) return c;
    return l.flat_ <=> r.flat_;
  }

 private:
  PreRotationSystem(int n, std::vector<Vertex> flat);
  friend PreRotationSystem make_from_flat(int n, std::vector<Vertex> flat);
  void build_positions();

  int n_ = 0;
  std::vector<Vertex> flat_;
  std::vector<int> pos_;
};

// Restriction to an ordered vertex list, relabeled 0..k-1 by list order.
PreRotationSystem restrict_to(const PreRotationSystem& pi, std::span<const Vertex> subset);

// relabeling[old] = new. Reflection reverses every cyclic order.
PreRotationSystem transform(const PreRotationSystem& pi, std::span<const Vertex> relabeling,
                            bool reflect);

PreRotationSystem reflect(const PreRotationSystem& pi);

// Lexicographic minimum of the concatenated rotations over all natural
// relabelings (first vertex, second vertex, reflection).
PreRotationSystem canonical_form(const PreRotationSystem& pi);

// All distinct natural members of the isomorphism class of pi.
std::vector<PreRotationSystem> natural_relabelings(const PreRotationSystem& pi);

// All distinct members (every relabeling, with and without reflection).
std::vector<PreRotationSystem> all_relabelings(const PreRotationSystem& pi);

bool isomorphic(const PreRotationSystem& a, const PreRotationSystem& b);

// True if some induced subconfiguration of pi is isomorphic to target.
bool contains_configuration(const PreRotationSystem& pi, const PreRotationSystem& target);

// {"n": 5, "rotations": [[2,3,4,5], ...]} with 1-based vertices.
std::string to_json_line(const PreRotationSystem& pi);
PreRotationSystem from_json_line(std::string_view line);

// Reference systems.
// Points in convex position, labeled counterclockwise.
PreRotationSystem convex_position_system(int n);
// The perfect twisted system: ad crosses bc exactly when a < b < c < d.
PreRotationSystem twisted_system(int n);

}  // namespace rotsys
