#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace reeunital {

/// A finite incidence structure: v points (indices 0..v-1) and a list of
/// blocks, each a sorted duplicate-free tuple of point indices.
struct IncidenceStructure {
  int v = 0;
  std::vector<std::vector<int>> blocks;
  std::vector<std::vector<int>> point_blocks;  // derived index

  IncidenceStructure() = default;
  IncidenceStructure(int v_, std::vector<std::vector<int>> blocks_)
      : v(v_), blocks(std::move(blocks_)) {
    for (auto& blk : blocks) {
      std::sort(blk.begin(), blk.end());
      if (std::adjacent_find(blk.begin(), blk.end()) != blk.end())
        throw std::invalid_argument("incidence: duplicate point in block");
      for (int p : blk)
        if (p < 0 || p >= v)
          throw std::invalid_argument("incidence: point index out of range");
    }
    build_index();
  }

  void build_index() {
    point_blocks.assign(static_cast<std::size_t>(v), {});
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (int p : blocks[b])
        point_blocks[static_cast<std::size_t>(p)].push_back(
            static_cast<int>(b));
  }

  int b() const { return static_cast<int>(blocks.size()); }

  bool incident(int p, int blk) const {
    const auto& row = blocks[static_cast<std::size_t>(blk)];
    return std::binary_search(row.begin(), row.end(), p);
  }
};

struct DesignParams {
  long long v = 0, b = 0, r = 0, k = 0, lambda = 0;
  friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

struct DesignCheck {
  bool ok = false;
  DesignParams params;
  std::string failure;
};

/// Checks that s is a 2-design: constant block size, constant replication,
/// every point pair on exactly lambda blocks.
inline DesignCheck verify_2design(const IncidenceStructure& s) {
  DesignCheck res;
  if (s.blocks.empty() || s.v < 2) {
    res.failure = "degenerate: need at least 2 points and 1 block";
    return res;
  }
  std::size_t k = s.blocks.front().size();
  for (const auto& blk : s.blocks)
    if (blk.size() != k) {
      res.failure = "non-constant block size";
      return res;
    }
  std::size_t r = s.point_blocks.front().size();
  for (int p = 0; p < s.v; ++p)
    if (s.point_blocks[static_cast<std::size_t>(p)].size() != r) {
      res.failure = "non-constant replication at point " + std::to_string(p);
      return res;
    }
  long long lambda =
      static_cast<long long>(r) * (static_cast<long long>(k) - 1) /
      (static_cast<long long>(s.v) - 1);
  if (lambda * (s.v - 1) != static_cast<long long>(r) *
                                (static_cast<long long>(k) - 1)) {
    res.failure = "r(k-1) not divisible by v-1";
    return res;
  }

  auto fail_pair = [&](int i, int j, const char* why) {
    res.failure = std::string(why) + ": pair (" + std::to_string(i) + "," +
                  std::to_string(j) + ")";
  };

  if (lambda == 1) {
    // bitset over unordered pairs; a second hit is a violation
    const std::uint64_t v64 = static_cast<std::uint64_t>(s.v);
    const std::uint64_t npairs = v64 * (v64 - 1) / 2;
    std::vector<std::uint64_t> seen((npairs + 63) / 64, 0);
    auto pair_idx = [v64](int i, int j) {
      std::uint64_t a = static_cast<std::uint64_t>(i);
      return a * (2 * v64 - a - 1) / 2 + static_cast<std::uint64_t>(j - i - 1);
    };
    for (const auto& blk : s.blocks)
      for (std::size_t x = 0; x < blk.size(); ++x)
        for (std::size_t y = x + 1; y < blk.size(); ++y) {
          std::uint64_t idx = pair_idx(blk[x], blk[y]);
          std::uint64_t& w = seen[idx >> 6];
          std::uint64_t bit = 1ULL << (idx & 63);
          if (w & bit) {
            fail_pair(blk[x], blk[y], "pair on more than one block");
            return res;
          }
          w |= bit;
        }
    std::uint64_t covered = 0;
    for (std::uint64_t w : seen) covered += static_cast<std::uint64_t>(__builtin_popcountll(w));
    if (covered != npairs) {
      // locate a witness for the report
      for (int i = 0; i < s.v; ++i)
        for (int j = i + 1; j < s.v; ++j)
          if (!(seen[pair_idx(i, j) >> 6] & (1ULL << (pair_idx(i, j) & 63)))) {
            fail_pair(i, j, "pair on no block");
            return res;
          }
    }
  } else {
    // small-case generic counting
    std::vector<int> cnt(static_cast<std::size_t>(s.v) *
                             static_cast<std::size_t>(s.v),
                         0);
    for (const auto& blk : s.blocks)
      for (std::size_t x = 0; x < blk.size(); ++x)
        for (std::size_t y = x + 1; y < blk.size(); ++y)
          ++cnt[static_cast<std::size_t>(blk[x]) *
                    static_cast<std::size_t>(s.v) +
                static_cast<std::size_t>(blk[y])];
    for (int i = 0; i < s.v; ++i)
      for (int j = i + 1; j < s.v; ++j)
        if (cnt[static_cast<std::size_t>(i) * static_cast<std::size_t>(s.v) +
                static_cast<std::size_t>(j)] != lambda) {
          fail_pair(i, j, "pair with wrong block count");
          return res;
        }
  }

  res.ok = true;
  res.params = {s.v, s.b(), static_cast<long long>(r),
                static_cast<long long>(k), lambda};
  return res;
}

/// A sub-incidence-structure of a host: chosen points and chosen blocks;
/// flags are induced from the host.
struct Configuration {
  std::vector<int> points;
  std::vector<int> blocks;
};

/// Expected induced degrees: one entry per chosen point / block, compared
/// as multisets.
struct DegreeSpec {
  std::vector<int> point_degrees;
  std::vector<int> block_degrees;
};

inline bool validate_configuration(const IncidenceStructure& host,
                                   const Configuration& cfg,
                                   const DegreeSpec& spec) {
  for (int p : cfg.points)
    if (p < 0 || p >= host.v)
      throw std::invalid_argument("configuration: point id out of range");
  for (int blk : cfg.blocks)
    if (blk < 0 || blk >= host.b())
      throw std::invalid_argument("configuration: block id out of range");

  std::vector<int> pdeg, bdeg;
  for (int p : cfg.points) {
    int d = 0;
    for (int blk : cfg.blocks)
      if (host.incident(p, blk)) ++d;
    pdeg.push_back(d);
  }
  for (int blk : cfg.blocks) {
    int d = 0;
    for (int p : cfg.points)
      if (host.incident(p, blk)) ++d;
    bdeg.push_back(d);
  }
  std::vector<int> ep = spec.point_degrees, eb = spec.block_degrees;
  std::sort(pdeg.begin(), pdeg.end());
  std::sort(bdeg.begin(), bdeg.end());
  std::sort(ep.begin(), ep.end());
  std::sort(eb.begin(), eb.end());
  return pdeg == ep && bdeg == eb;
}

enum class SearchStatus { Found, NoneExists, Undecided };

struct DualKnResult {
  SearchStatus status = SearchStatus::Undecided;
  std::optional<Configuration> witness;
  std::uint64_t nodes = 0;  // backtrack nodes visited (exhaustion audit)
};

/// Searches for n blocks pairwise meeting in C(n,2) distinct points with
/// no meeting point on a third chosen block (the dual of K_n). Candidate
/// blocks are tried in ascending id; the first witness in that canonical
/// order is returned. The budget is a backtrack-node count.
inline DualKnResult find_dual_kn(const IncidenceStructure& s, int n,
                                 std::uint64_t budget = 1'000'000'000ULL) {
  if (n < 3) throw std::invalid_argument("find_dual_kn: n must be >= 3");
  DualKnResult res;

  std::vector<int> chosen;
  std::vector<int> meets;  // meeting points of chosen pairs
  bool exhausted = true;

  auto intersect_one = [&](int b1, int b2, int& point) {
    const auto& r1 = s.blocks[static_cast<std::size_t>(b1)];
    const auto& r2 = s.blocks[static_cast<std::size_t>(b2)];
    int cnt = 0;
    std::size_t i = 0, j = 0;
    while (i < r1.size() && j < r2.size()) {
      if (r1[i] < r2[j]) ++i;
      else if (r2[j] < r1[i]) ++j;
      else { point = r1[i]; ++cnt; ++i; ++j; }
    }
    return cnt == 1;
  };

  std::function<bool(int)> dfs = [&](int from) -> bool {
    if (static_cast<int>(chosen.size()) == n) return true;
    for (int cand = from; cand < s.b(); ++cand) {
      if (res.nodes >= budget) { exhausted = false; return false; }
      ++res.nodes;
      std::vector<int> new_meets;
      bool ok = true;
      for (int prev : chosen) {
        int p = -1;
        if (!intersect_one(prev, cand, p)) { ok = false; break; }
        // distinct from all existing meeting points
        if (std::find(meets.begin(), meets.end(), p) != meets.end() ||
            std::find(new_meets.begin(), new_meets.end(), p) !=
                new_meets.end()) { ok = false; break; }
        // not on a third chosen block
        for (int other : chosen)
          if (other != prev && s.incident(p, other)) { ok = false; break; }
        if (!ok) break;
        if (s.incident(p, cand) /* always true */) new_meets.push_back(p);
      }
      if (!ok) continue;
      // existing meeting points must avoid the candidate
      for (int p : meets)
        if (s.incident(p, cand)) { ok = false; break; }
      if (!ok) continue;
      chosen.push_back(cand);
      meets.insert(meets.end(), new_meets.begin(), new_meets.end());
      if (dfs(cand + 1)) return true;
      chosen.pop_back();
      meets.resize(meets.size() - new_meets.size());
    }
    return false;
  };

  if (dfs(0)) {
    Configuration cfg;
    cfg.blocks = chosen;
    cfg.points = meets;
    std::sort(cfg.points.begin(), cfg.points.end());
    res.status = SearchStatus::Found;
    res.witness = std::move(cfg);
  } else {
    res.status = exhausted ? SearchStatus::NoneExists : SearchStatus::Undecided;
  }
  return res;
}

/// A point bijection from one structure onto another; valid when it maps
/// every block of the first onto a block of the second (as a set).
struct PointBijection {
  std::vector<int> image;  // image[p1] = p2
};

inline bool is_block_preserving(const IncidenceStructure& s1,
                                const IncidenceStructure& s2,
                                const std::vector<int>& image) {
  if (static_cast<int>(image.size()) != s1.v || s1.v != s2.v) return false;
  std::vector<std::vector<int>> sorted2 = s2.blocks;
  std::sort(sorted2.begin(), sorted2.end());
  for (const auto& blk : s1.blocks) {
    std::vector<int> img;
    img.reserve(blk.size());
    for (int p : blk) img.push_back(image[static_cast<std::size_t>(p)]);
    std::sort(img.begin(), img.end());
    if (!std::binary_search(sorted2.begin(), sorted2.end(), img))
      return false;
  }
  return true;
}

/// Backtracking isomorphism search with degree and collinearity pruning.
/// Returns a block-preserving bijection, or nullopt after exhausting the
/// pruned search tree.
inline std::optional<PointBijection> isomorphism_search(
    const IncidenceStructure& s1, const IncidenceStructure& s2) {
  if (s1.v != s2.v || s1.b() != s2.b()) return std::nullopt;
  const int v = s1.v;

  auto degree = [](const IncidenceStructure& s, int p) {
    return static_cast<int>(s.point_blocks[static_cast<std::size_t>(p)].size());
  };
  {
    std::vector<int> d1, d2;
    for (int p = 0; p < v; ++p) { d1.push_back(degree(s1, p)); d2.push_back(degree(s2, p)); }
    std::sort(d1.begin(), d1.end());
    std::sort(d2.begin(), d2.end());
    if (d1 != d2) return std::nullopt;
    auto sizes = [](const IncidenceStructure& s) {
      std::vector<std::size_t> k;
      for (const auto& blk : s.blocks) k.push_back(blk.size());
      std::sort(k.begin(), k.end());
      return k;
    };
    if (sizes(s1) != sizes(s2)) return std::nullopt;
  }

  // line-through-pair tables; -1 when not unique or absent
  auto line_table = [v](const IncidenceStructure& s) {
    std::vector<int> line(static_cast<std::size_t>(v) *
                              static_cast<std::size_t>(v),
                          -1);
    std::vector<bool> multi(line.size(), false);
    for (std::size_t b = 0; b < s.blocks.size(); ++b)
      for (std::size_t x = 0; x < s.blocks[b].size(); ++x)
        for (std::size_t y = x + 1; y < s.blocks[b].size(); ++y) {
          std::size_t i1 = static_cast<std::size_t>(s.blocks[b][x]) *
                               static_cast<std::size_t>(v) +
                           static_cast<std::size_t>(s.blocks[b][y]);
          std::size_t i2 = static_cast<std::size_t>(s.blocks[b][y]) *
                               static_cast<std::size_t>(v) +
                           static_cast<std::size_t>(s.blocks[b][x]);
          if (line[i1] != -1) { multi[i1] = true; multi[i2] = true; }
          line[i1] = static_cast<int>(b);
          line[i2] = static_cast<int>(b);
        }
    for (std::size_t i = 0; i < line.size(); ++i)
      if (multi[i]) line[i] = -2;  // ambiguous
    return line;
  };
  const std::vector<int> line1 = line_table(s1);
  const std::vector<int> line2 = line_table(s2);
  bool prunable = std::find(line1.begin(), line1.end(), -2) == line1.end() &&
                  std::find(line2.begin(), line2.end(), -2) == line2.end();

  // static assignment order: seed point 0, then favor points sharing
  // blocks with already-ordered ones
  std::vector<int> order;
  {
    std::vector<bool> placed(static_cast<std::size_t>(v), false);
    order.push_back(0);
    placed[0] = true;
    while (static_cast<int>(order.size()) < v) {
      int best = -1, best_links = -1;
      for (int p = 0; p < v; ++p) {
        if (placed[static_cast<std::size_t>(p)]) continue;
        int links = 0;
        for (int q : order)
          if (line1[static_cast<std::size_t>(p) * static_cast<std::size_t>(v) +
                    static_cast<std::size_t>(q)] >= 0)
            ++links;
        if (links > best_links) { best_links = links; best = p; }
      }
      order.push_back(best);
      placed[static_cast<std::size_t>(best)] = true;
    }
  }

  std::vector<int> image(static_cast<std::size_t>(v), -1);
  std::vector<bool> used(static_cast<std::size_t>(v), false);

  auto collinear = [v](const std::vector<int>& line, int a, int b, int c) {
    int l1 = line[static_cast<std::size_t>(a) * static_cast<std::size_t>(v) +
                  static_cast<std::size_t>(b)];
    int l2 = line[static_cast<std::size_t>(a) * static_cast<std::size_t>(v) +
                  static_cast<std::size_t>(c)];
    return l1 >= 0 && l1 == l2;
  };

  std::function<bool(std::size_t)> dfs = [&](std::size_t depth) -> bool {
    if (depth == order.size())
      return is_block_preserving(s1, s2, image);
    int p = order[depth];
    for (int cand = 0; cand < v; ++cand) {
      if (used[static_cast<std::size_t>(cand)]) continue;
      if (degree(s1, p) != degree(s2, cand)) continue;
      bool ok = true;
      if (prunable) {
        for (std::size_t i = 0; i < depth && ok; ++i)
          for (std::size_t j = i + 1; j < depth && ok; ++j) {
            int q = order[i], r = order[j];
            if (collinear(line1, p, q, r) !=
                collinear(line2, cand, image[static_cast<std::size_t>(q)],
                          image[static_cast<std::size_t>(r)]))
              ok = false;
          }
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(p)] = cand;
      used[static_cast<std::size_t>(cand)] = true;
      if (dfs(depth + 1)) return true;
      image[static_cast<std::size_t>(p)] = -1;
      used[static_cast<std::size_t>(cand)] = false;
    }
    return false;
  };

  if (dfs(0)) return PointBijection{image};
  return std::nullopt;
}

// ---- incidence file format ----
// header: "incidence v=<v> b=<b>"
// then one block per line, space-separated ascending point indices

inline void write_incidence(std::ostream& os, const IncidenceStructure& s,
                            const std::vector<std::string>& comments = {}) {
  for (const auto& c : comments) os << "# " << c << "\n";
  os << "incidence v=" << s.v << " b=" << s.b() << "\n";
  for (const auto& blk : s.blocks) {
    for (std::size_t i = 0; i < blk.size(); ++i) {
      if (i) os << ' ';
      os << blk[i];
    }
    os << "\n";
  }
}

inline IncidenceStructure read_incidence(std::istream& is) {
  std::string line;
  int v = -1, b = -1;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (std::sscanf(line.c_str(), "incidence v=%d b=%d", &v, &b) != 2)
      throw std::invalid_argument("incidence file: bad header");
    break;
  }
  if (v < 0 || b < 0)
    throw std::invalid_argument("incidence file: missing header");
  std::vector<std::vector<int>> blocks;
  blocks.reserve(static_cast<std::size_t>(b));
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::vector<int> blk;
    int p;
    while (ss >> p) blk.push_back(p);
    if (!blk.empty()) blocks.push_back(std::move(blk));
  }
  if (static_cast<int>(blocks.size()) != b)
    throw std::invalid_argument("incidence file: block count mismatch");
  return IncidenceStructure(v, std::move(blocks));
}

}  // namespace reeunital
