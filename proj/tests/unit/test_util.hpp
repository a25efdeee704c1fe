#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "rotsys/prerotation.hpp"

namespace rotsys {

inline PreRotationSystem random_system(int n, std::mt19937& rng) {
  std::vector<std::vector<Vertex>> rows(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (b != a) rows[a].push_back(b);
    std::shuffle(rows[a].begin(), rows[a].end(), rng);
  }
  return PreRotationSystem(rows);
}

// Calls fn on every pre-rotation system on n elements (rows smallest-first).
template <class Fn>
void for_each_system(int n, Fn&& fn) {
  std::vector<std::vector<std::vector<Vertex>>> options(n);
  for (int a = 0; a < n; ++a) {
    std::vector<Vertex> rest;
    for (int b = 0; b < n; ++b)
      if (b != a) rest.push_back(b);
    do options[a].push_back(rest);
    while (std::next_permutation(rest.begin() + 1, rest.end()));
  }
  std::vector<std::size_t> idx(n, 0);
  std::vector<std::vector<Vertex>> rows(n);
  while (true) {
    for (int a = 0; a < n; ++a) rows[a] = options[a][idx[a]];
    fn(PreRotationSystem(rows));
    int a = n - 1;
    while (a >= 0 && ++idx[a] == options[a].size()) idx[a--] = 0;
    if (a < 0) break;
  }
}

}  // namespace rotsys
