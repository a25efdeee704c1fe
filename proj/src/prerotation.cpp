#include "rotsys/prerotation.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>

#include "rotsys/combinatorics.hpp"
#include "rotsys/errors.hpp"

namespace rotsys {

PreRotationSystem make_from_flat(int n, std::vector<Vertex> flat) {
  return PreRotationSystem(n, std::move(flat));
}

namespace {

// Rotates a cyclic sequence so that its smallest element comes first.
void normalize_row(std::span<Vertex> row) {
  auto it = std::min_element(row.begin(), row.end());
  std::rotate(row.begin(), it, row.end());
}

}  // namespace

PreRotationSystem::PreRotationSystem(const std::vector<std::vector<Vertex>>& rotations) {
  n_ = static_cast<int>(rotations.size());
  if (n_ < 3) throw InvalidArgument("a pre-rotation system needs at least 3 vertices");
  flat_.reserve(static_cast<std::size_t>(n_) * (n_ - 1));
  for (int a = 0; a < n_; ++a) {
    const auto& row = rotations[a];
    if (static_cast<int>(row.size()) != n_ - 1)
      throw InvalidArgument("rotation of vertex " + std::to_string(a + 1) + " has wrong length");
    std::vector<bool> seen(n_, false);
    for (Vertex b : row) {
      if (b < 0 || b >= n_ || b == a || seen[b])
        throw InvalidArgument("rotation of vertex " + std::to_string(a + 1) +
                              " is not a permutation of the other vertices");
      seen[b] = true;
    }
    flat_.insert(flat_.end(), row.begin(), row.end());
    normalize_row(std::span(flat_).subspan(static_cast<std::size_t>(a) * (n_ - 1), n_ - 1));
  }
  build_positions();
}

PreRotationSystem::PreRotationSystem(int n, std::vector<Vertex> flat) : n_(n), flat_(std::move(flat)) {
  for (int a = 0; a < n_; ++a)
    normalize_row(std::span(flat_).subspan(static_cast<std::size_t>(a) * (n_ - 1), n_ - 1));
  build_positions();
}

void PreRotationSystem::build_positions() {
  pos_.assign(static_cast<std::size_t>(n_) * n_, -1);
  for (int a = 0; a < n_; ++a)
    for (int i = 0; i < n_ - 1; ++i) pos_[static_cast<std::size_t>(a) * n_ + at(a, i)] = i;
}

bool PreRotationSystem::ccw(Vertex a, Vertex b, Vertex c, Vertex d) const {
  const int i = position(a, b), j = position(a, c), k = position(a, d);
  return (i < j && j < k) || (j < k && k < i) || (k < i && i < j);
}

std::vector<std::vector<Vertex>> PreRotationSystem::rotations() const {
  std::vector<std::vector<Vertex>> out(n_);
  for (int a = 0; a < n_; ++a) {
    auto r = rotation(a);
    out[a].assign(r.begin(), r.end());
  }
  return out;
}

bool PreRotationSystem::natural() const {
  for (int i = 0; i < n_ - 1; ++i)
    if (at(0, i) != i + 1) return false;
  return true;
}

PreRotationSystem restrict_to(const PreRotationSystem& pi, std::span<const Vertex> subset) {
  const int k = static_cast<int>(subset.size());
  if (k < 3) throw InvalidArgument("restriction needs at least 3 vertices");
  std::vector<int> label(pi.size(), -1);
  for (int i = 0; i < k; ++i) {
    Vertex v = subset[i];
    if (v < 0 || v >= pi.size()) throw InvalidArgument("restriction vertex out of range");
    if (label[v] != -1) throw InvalidArgument("restriction vertex repeated");
    label[v] = i;
  }
  std::vector<Vertex> flat;
  flat.reserve(static_cast<std::size_t>(k) * (k - 1));
  for (int i = 0; i < k; ++i)
    for (Vertex b : pi.rotation(subset[i]))
      if (label[b] >= 0) flat.push_back(label[b]);
  return make_from_flat(k, std::move(flat));
}

PreRotationSystem transform(const PreRotationSystem& pi, std::span<const Vertex> relabeling,
                            bool reflect_orders) {
  const int n = pi.size();
  if (static_cast<int>(relabeling.size()) != n) throw InvalidArgument("relabeling has wrong size");
  std::vector<Vertex> inverse(n, -1);
  for (int a = 0; a < n; ++a) {
    Vertex s = relabeling[a];
    if (s < 0 || s >= n || inverse[s] != -1) throw InvalidArgument("relabeling is not a bijection");
    inverse[s] = a;
  }
  std::vector<Vertex> flat;
  flat.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int A = 0; A < n; ++A) {
    auto row = pi.rotation(inverse[A]);
    if (reflect_orders) {
      for (auto it = row.rbegin(); it != row.rend(); ++it) flat.push_back(relabeling[*it]);
    } else {
      for (Vertex b : row) flat.push_back(relabeling[b]);
    }
  }
  return make_from_flat(n, std::move(flat));
}

PreRotationSystem reflect(const PreRotationSystem& pi) {
  std::vector<Vertex> id(pi.size());
  for (int i = 0; i < pi.size(); ++i) id[i] = i;
  return transform(pi, id, true);
}

namespace {

// Natural relabeling: `first` becomes 0 and the rotation of `first`, read
// from `second` in direction `dir`, receives labels 1..n-1.
std::vector<Vertex> natural_labels(const PreRotationSystem& pi, Vertex first, Vertex second, int dir) {
  const int n = pi.size();
  std::vector<Vertex> sigma(n);
  sigma[first] = 0;
  const int start = pi.position(first, second);
  for (int j = 0; j < n - 1; ++j) {
    int p = ((start + dir * j) % (n - 1) + (n - 1)) % (n - 1);
    sigma[pi.at(first, p)] = j + 1;
  }
  return sigma;
}

// Writes the flat vector of the natural candidate into out.
void candidate_flat(const PreRotationSystem& pi, Vertex first, Vertex second, int dir,
                    std::vector<Vertex>& sigma, std::vector<Vertex>& inverse, std::vector<Vertex>& out) {
  const int n = pi.size();
  sigma = natural_labels(pi, first, second, dir);
  for (int a = 0; a < n; ++a) inverse[sigma[a]] = a;
  out.clear();
  for (int A = 0; A < n; ++A) {
    const Vertex a = inverse[A];
    // Row A starts at its smallest element: 0 (= first) unless A is 0 itself.
    const Vertex anchor = (A == 0) ? inverse[1] : first;
    const int p0 = pi.position(a, anchor);
    for (int j = 0; j < n - 1; ++j) {
      int p = ((p0 + dir * j) % (n - 1) + (n - 1)) % (n - 1);
      out.push_back(sigma[pi.at(a, p)]);
    }
  }
}

}  // namespace

PreRotationSystem canonical_form(const PreRotationSystem& pi) {
  const int n = pi.size();
  std::vector<Vertex> best, cur, sigma, inverse(n);
  for (Vertex f = 0; f < n; ++f)
    for (Vertex s : pi.rotation(f))
      for (int dir : {1, -1}) {
        candidate_flat(pi, f, s, dir, sigma, inverse, cur);
        if (best.empty() || cur < best) best.swap(cur);
      }
  return make_from_flat(n, std::move(best));
}

std::vector<PreRotationSystem> natural_relabelings(const PreRotationSystem& pi) {
  const int n = pi.size();
  std::set<std::vector<Vertex>> seen;
  std::vector<Vertex> cur, sigma, inverse(n);
  std::vector<PreRotationSystem> out;
  for (Vertex f = 0; f < n; ++f)
    for (Vertex s : pi.rotation(f))
      for (int dir : {1, -1}) {
        candidate_flat(pi, f, s, dir, sigma, inverse, cur);
        if (seen.insert(cur).second) out.push_back(make_from_flat(n, cur));
      }
  return out;
}

std::vector<PreRotationSystem> all_relabelings(const PreRotationSystem& pi) {
  const int n = pi.size();
  std::set<PreRotationSystem> seen;
  std::vector<Vertex> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    seen.insert(transform(pi, perm, false));
    seen.insert(transform(pi, perm, true));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {seen.begin(), seen.end()};
}

bool isomorphic(const PreRotationSystem& a, const PreRotationSystem& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

bool contains_configuration(const PreRotationSystem& pi, const PreRotationSystem& target) {
  const int k = target.size();
  if (k > pi.size()) return false;
  const auto goal = canonical_form(target);
  bool found = false;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  do {
    if (canonical_form(restrict_to(pi, c)) == goal) {
      found = true;
      break;
    }
  } while (next_combination(c, pi.size()));
  return found;
}

std::string to_json_line(const PreRotationSystem& pi) {
  nlohmann::json rows = nlohmann::json::array();
  for (int a = 0; a < pi.size(); ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (Vertex b : pi.rotation(a)) row.push_back(b + 1);
    rows.push_back(std::move(row));
  }
  nlohmann::ordered_json j;
  j["n"] = pi.size();
  j["rotations"] = std::move(rows);
  return j.dump();
}

PreRotationSystem from_json_line(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed rotation-system JSON: ") + e.what());
  }
  if (!j.contains("rotations")) throw InvalidArgument("rotation-system JSON lacks \"rotations\"");
  std::vector<std::vector<Vertex>> rows;
  for (const auto& row : j["rotations"]) {
    std::vector<Vertex> r;
    for (const auto& v : row) r.push_back(v.get<int>() - 1);
    rows.push_back(std::move(r));
  }
  if (j.contains("n") && j["n"].get<int>() != static_cast<int>(rows.size()))
    throw InvalidArgument("rotation-system JSON: n does not match the number of rotations");
  return PreRotationSystem(rows);
}

PreRotationSystem convex_position_system(int n) {
  std::vector<std::vector<Vertex>> rows(n);
  for (int a = 0; a < n; ++a)
    for (int j = 1; j < n; ++j) rows[a].push_back((a + j) % n);
  return PreRotationSystem(rows);
}

PreRotationSystem twisted_system(int n) {
  std::vector<std::vector<Vertex>> rows(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < a; ++b) rows[a].push_back(b);
    for (int b = n - 1; b > a; --b) rows[a].push_back(b);
  }
  return PreRotationSystem(rows);
}

}  // namespace rotsys
