#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <vector>

namespace reeunital {

using Perm = std::vector<int>;

inline Perm perm_compose(const Perm& f, const Perm& g) {
  // (f then g): x -> g[f[x]]
  Perm r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    r[i] = g[static_cast<std::size_t>(f[i])];
  return r;
}

/// Closure of the generators under composition (BFS). Throws if the group
/// exceeds the limit.
inline std::vector<Perm> generate_permutation_group(
    const std::vector<Perm>& gens, std::size_t limit = 1u << 20) {
  if (gens.empty()) return {};
  std::size_t deg = gens[0].size();
  Perm id(deg);
  for (std::size_t i = 0; i < deg; ++i) id[i] = static_cast<int>(i);
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& p : frontier)
      for (const Perm& g : gens) {
        Perm q = perm_compose(p, g);
        if (seen.insert(q).second) {
          if (seen.size() > limit)
            throw std::runtime_error("permutation group exceeds limit");
          next.push_back(std::move(q));
        }
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// Number of ordered pairs reachable from (0,1) under the generators;
/// equals deg*(deg-1) exactly for a doubly transitive action.
inline std::size_t ordered_pair_orbit_size(const std::vector<Perm>& gens) {
  if (gens.empty()) return 0;
  std::size_t deg = gens[0].size();
  if (deg < 2) return 0;
  std::set<std::pair<int, int>> seen{{0, 1}};
  std::vector<std::pair<int, int>> frontier{{0, 1}};
  while (!frontier.empty()) {
    std::vector<std::pair<int, int>> next;
    for (auto [a, b] : frontier)
      for (const Perm& g : gens) {
        std::pair<int, int> q{g[static_cast<std::size_t>(a)],
                              g[static_cast<std::size_t>(b)]};
        if (seen.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace reeunital
