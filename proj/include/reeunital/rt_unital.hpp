#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "reeunital/gf3n.hpp"
#include "reeunital/incidence.hpp"
#include "reeunital/root_group.hpp"

namespace reeunital {

/// The unique block through two distinct points of RT(q).
///
/// Through infinity and <x1,x2,x3> the fixed-point parameterization gives
/// (a,c) = (-x1, -x1 x2 - x3) directly. Two finite points are first moved
/// by a right translation and omega so that one of them becomes infinity,
/// then the block is pulled back through the same maps.
inline std::vector<ReePoint> join_rt(const ReePoint& p, const ReePoint& r,
                                     const F3nCtx& ctx) {
  if (p == r) throw std::invalid_argument("join_rt: equal points");
  if (r.infinite) return join_rt(r, p, ctx);
  if (p.infinite) {
    const XiElt& x = r.xi;
    InvolutionParam iv{-x.a, -(x.a * x.b) - x.c};
    return involution_fixed_points(iv);
  }
  XiElt pinv = xi_inv(p.xi);
  ReePoint moved = omega(ReePoint::at(xi_mul(r.xi, pinv)));
  std::vector<ReePoint> base = join_rt(ReePoint::inf(ctx), moved, ctx);
  std::vector<ReePoint> out;
  out.reserve(base.size());
  for (const ReePoint& b : base) {
    ReePoint w = omega(b);
    out.push_back(w.infinite ? w : ReePoint::at(xi_mul(w.xi, p.xi)));
  }
  return out;
}

/// RT(q) as a materialized incidence structure, q in {3, 27}.
struct RTUnital {
  const F3nCtx* ctx = nullptr;
  long long v = 0;
  std::vector<std::vector<int>> blocks;  // canonical: sorted tuples, sorted list
  /// block index (into blocks) of Fix(eta_{-1} <a,-a^{theta+1},c>),
  /// indexed by rank(a)*q + rank(c)
  std::vector<int> through_infinity;

  IncidenceStructure to_incidence() const {
    return IncidenceStructure(static_cast<int>(v), blocks);
  }
};

/// Materializes all blocks: the q^2 fixed-point sets through infinity
/// explicitly, the blocks through o as their omega-images, every other
/// block as a right translate of a block through o. A translate B0*xi is
/// kept exactly when xi is the minimal point of the result, so each block
/// appears once without a dedup table.
inline RTUnital build_rt(const F3nCtx& ctx) {
  const long long q = ctx.q();
  if (q != 3 && q != 27)
    throw std::invalid_argument("build_rt: full materialization only for q in {3, 27}");
  const long long q3 = q * q * q;

  RTUnital rt;
  rt.ctx = &ctx;
  rt.v = q3 + 1;

  auto ids_of = [](const std::vector<ReePoint>& pts) {
    std::vector<int> ids;
    ids.reserve(pts.size());
    for (const ReePoint& p : pts) ids.push_back(static_cast<int>(point_id(p)));
    std::sort(ids.begin(), ids.end());
    return ids;
  };

  // blocks through infinity, and their omega images (the pencil of o)
  std::vector<std::vector<int>> all;
  std::vector<std::vector<XiElt>> base_blocks;  // through o, not through inf
  for (long long ra = 0; ra < q; ++ra)
    for (long long rc = 0; rc < q; ++rc) {
      InvolutionParam iv{ctx.from_rank(ra), ctx.from_rank(rc)};
      std::vector<ReePoint> fix = involution_fixed_points(iv);
      all.push_back(ids_of(fix));
      std::vector<ReePoint> through_o;
      through_o.reserve(fix.size());
      bool has_inf = false;
      for (const ReePoint& p : fix) {
        ReePoint w = omega(p);
        if (w.infinite) has_inf = true;
        through_o.push_back(w);
      }
      if (has_inf) {
        // the block joining o and infinity is omega-fixed and already
        // listed among the fixed-point blocks
      } else {
        std::vector<XiElt> xs;
        for (const ReePoint& p : through_o) xs.push_back(p.xi);
        base_blocks.push_back(std::move(xs));
      }
    }

  // translates of the base blocks, kept at their minimal point
  for (const auto& base : base_blocks) {
    for (long long t = 0; t < q3; ++t) {
      XiElt xi = detail::xi_from_id(ctx, t);
      long long target = 1 + t;  // point_id of xi
      std::vector<int> ids;
      ids.reserve(base.size());
      bool minimal = true;
      for (const XiElt& b : base) {
        long long id = point_id(ReePoint::at(xi_mul(b, xi)));
        if (id < target) { minimal = false; break; }
        ids.push_back(static_cast<int>(id));
      }
      if (!minimal) continue;
      std::sort(ids.begin(), ids.end());
      all.push_back(std::move(ids));
    }
  }

  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw std::logic_error("build_rt: duplicate block generated");
  long long expect_b = q * q * (q3 + 1) / (q + 1);
  if (static_cast<long long>(all.size()) != expect_b)
    throw std::logic_error("build_rt: block count mismatch");

  // per-point replication must be q^2
  {
    std::vector<std::uint32_t> r(static_cast<std::size_t>(rt.v), 0);
    for (const auto& blk : all)
      for (int p : blk) ++r[static_cast<std::size_t>(p)];
    for (auto cnt : r)
      if (cnt != static_cast<std::uint32_t>(q * q))
        throw std::logic_error("build_rt: point replication != q^2");
  }

  rt.blocks = std::move(all);

  // locate the through-infinity blocks in the canonical order
  rt.through_infinity.assign(static_cast<std::size_t>(q * q), -1);
  for (long long ra = 0; ra < q; ++ra)
    for (long long rc = 0; rc < q; ++rc) {
      InvolutionParam iv{ctx.from_rank(ra), ctx.from_rank(rc)};
      std::vector<int> ids;
      for (const ReePoint& p : involution_fixed_points(iv))
        ids.push_back(static_cast<int>(point_id(p)));
      std::sort(ids.begin(), ids.end());
      auto it = std::lower_bound(rt.blocks.begin(), rt.blocks.end(), ids);
      rt.through_infinity[static_cast<std::size_t>(ra * q + rc)] =
          static_cast<int>(it - rt.blocks.begin());
    }
  return rt;
}

/// A super O'Nan configuration in RT(q): five blocks (as sorted point-id
/// tuples) pairwise meeting in ten distinct points.
struct RTSuperOnan {
  std::vector<std::vector<long long>> blocks;  // 5 sorted id tuples
  std::vector<long long> points;               // the 10 intersection ids
};

namespace detail {

inline std::vector<long long> sorted_ids(const std::vector<ReePoint>& pts) {
  std::vector<long long> ids;
  ids.reserve(pts.size());
  for (const ReePoint& p : pts) ids.push_back(point_id(p));
  std::sort(ids.begin(), ids.end());
  return ids;
}

inline std::vector<ReePoint> translate_block(const std::vector<ReePoint>& blk,
                                             const XiElt& xi) {
  std::vector<ReePoint> out;
  out.reserve(blk.size());
  for (const ReePoint& p : blk)
    out.push_back(p.infinite ? p : ReePoint::at(xi_mul(p.xi, xi)));
  return out;
}

inline RTSuperOnan validate_super_onan(
    const std::vector<std::vector<long long>>& blocks) {
  if (blocks.size() != 5)
    throw std::invalid_argument("super O'Nan: need 5 blocks");
  RTSuperOnan cfg;
  cfg.blocks = blocks;
  std::set<long long> meets;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) {
      std::vector<long long> common;
      std::set_intersection(blocks[i].begin(), blocks[i].end(),
                            blocks[j].begin(), blocks[j].end(),
                            std::back_inserter(common));
      if (common.size() != 1)
        throw std::runtime_error(
            "super O'Nan: blocks " + std::to_string(i) + "," +
            std::to_string(j) + " share " + std::to_string(common.size()) +
            " points");
      if (!meets.insert(common.front()).second)
        throw std::runtime_error(
            "super O'Nan: repeated intersection point at blocks " +
            std::to_string(i) + "," + std::to_string(j));
    }
  cfg.points.assign(meets.begin(), meets.end());
  return cfg;
}

}  // namespace detail

/// The five base blocks Fix tau, Fix tau^sigma, Fix iota, Fix iota.lambda,
/// Fix iota.lambda^2 through epsilon = <0,0,-1>.
inline std::vector<std::vector<ReePoint>> super_onan_blocks(
    const F3nCtx& ctx) {
  XiElt eps{ctx.zero(), ctx.zero(), ctx.scalar(-1)};
  XiElt lam{ctx.zero(), ctx.one(), ctx.zero()};
  XiElt epsPrime = xi_mul(eta_xi(ctx.scalar(-1), eps), lam);  // eps^sigma lambda

  std::vector<std::vector<ReePoint>> blocks;
  blocks.push_back(join_rt(ReePoint::inf(ctx), ReePoint::at(eps), ctx));
  blocks.push_back(join_rt(ReePoint::inf(ctx),
                           ReePoint::at(eta_xi(ctx.scalar(-1), eps)), ctx));
  std::vector<ReePoint> fix_iota =
      join_rt(ReePoint::at(eps), ReePoint::at(epsPrime), ctx);
  blocks.push_back(fix_iota);
  blocks.push_back(detail::translate_block(fix_iota, lam));
  blocks.push_back(detail::translate_block(fix_iota, xi_mul(lam, lam)));
  return blocks;
}

/// The super O'Nan configuration S of RT(q), validated as a dual K5.
inline RTSuperOnan super_onan(const F3nCtx& ctx) {
  std::vector<std::vector<long long>> ids;
  for (const auto& blk : super_onan_blocks(ctx))
    ids.push_back(detail::sorted_ids(blk));
  return detail::validate_super_onan(ids);
}

/// The q/3 translates of S under lambda_t, t ranging over coset
/// representatives of GF(3) in K (constant coefficient zero). They share
/// the blocks Fix tau, Fix tau^sigma and the point infinity; the union
/// has 3q+1 points and q+2 blocks.
struct PearlChain {
  std::vector<RTSuperOnan> configs;
  std::size_t union_points = 0;
  std::size_t union_blocks = 0;
};

inline PearlChain string_of_pearls(const F3nCtx& ctx) {
  const long long q = ctx.q();
  if (q % 3 != 0 && q != 3)
    throw std::invalid_argument("string_of_pearls: q must be a power of 3");
  auto base = super_onan_blocks(ctx);
  std::vector<long long> fix_tau = detail::sorted_ids(base[0]);
  std::vector<long long> fix_tau_sigma = detail::sorted_ids(base[1]);

  PearlChain chain;
  std::set<long long> upoints;
  std::set<std::vector<long long>> ublocks;
  for (long long r = 0; r < q; ++r) {
    F3nElt t = ctx.from_rank(r);
    if (t.coeffs()[0] != 0) continue;  // coset representatives of GF(3)
    XiElt lam_t{ctx.zero(), t, ctx.zero()};
    std::vector<std::vector<long long>> ids;
    for (const auto& blk : base)
      ids.push_back(detail::sorted_ids(detail::translate_block(blk, lam_t)));
    RTSuperOnan cfg = detail::validate_super_onan(ids);
    if (cfg.blocks[0] != fix_tau || cfg.blocks[1] != fix_tau_sigma)
      throw std::runtime_error(
          "string_of_pearls: translate moved Fix tau or Fix tau^sigma");
    if (!std::binary_search(cfg.points.begin(), cfg.points.end(), 0LL))
      throw std::runtime_error("string_of_pearls: infinity not shared");
    for (long long p : cfg.points) upoints.insert(p);
    for (const auto& blk : cfg.blocks) ublocks.insert(blk);
    chain.configs.push_back(std::move(cfg));
  }
  chain.union_points = upoints.size();
  chain.union_blocks = ublocks.size();
  return chain;
}

/// A solution (x, s, m) of the block-intersection equations for
/// Fix iota and Fix iota^mu, mu = lambda_m.
struct IntersectionSolution {
  F3nElt x, s, m;
};

/// Enumerates the solutions of the coordinatewise equations
///   (1-x)/X = (1-s)/S,
///   x^theta/X = (s^theta - mS)/S,
///   -1/X = ((1-s)m - 1)/S,
/// over pairs (x,s) with X = x^{theta+1}+1 != 0, S = s^{theta+1}+1 != 0,
/// deriving m from the middle coordinate and requiring m != 0. Pairs are
/// pre-grouped by the first-coordinate invariant (1-t)/(t^{theta+1}+1),
/// so only pairs that already satisfy the first equation are examined.
inline std::vector<IntersectionSolution> intersection_search(
    const F3nCtx& ctx, int workers = 1) {
  const long long q = ctx.q();
  F3nElt one = ctx.one();

  struct Entry {
    long long rank;
    F3nElt th;   // t^theta
    F3nElt X;    // t^{theta+1} + 1
    F3nElt Xinv;
    F3nElt om;   // 1 - t
  };
  std::map<long long, std::vector<Entry>> buckets;  // keyed by rank of (1-t)/X
  for (long long r = 0; r < q; ++r) {
    F3nElt t = ctx.from_rank(r);
    F3nElt th = t.theta();
    F3nElt X = th * t + one;
    if (X.is_zero()) continue;
    Entry e{r, th, X, X.inverse(), one - t};
    buckets[(e.om * e.Xinv).rank()].push_back(std::move(e));
  }

  std::vector<std::vector<Entry>> work;
  for (auto& [key, v] : buckets) work.push_back(std::move(v));

  auto scan = [&](std::size_t begin, std::size_t end,
                  std::vector<IntersectionSolution>& out) {
    for (std::size_t w = begin; w < end; ++w) {
      const auto& group = work[w];
      for (const Entry& ex : group)
        for (const Entry& es : group) {
          // m = (X s^theta - S x^theta) / (X S)
          F3nElt m = (ex.X * es.th - es.X * ex.th) * (ex.Xinv * es.Xinv);
          if (m.is_zero()) continue;
          // third coordinate: -S == X ((1-s) m - 1)
          if (-es.X != ex.X * (es.om * m - one)) continue;
          out.push_back({ctx.from_rank(ex.rank), ctx.from_rank(es.rank), m});
        }
    }
  };

  std::vector<IntersectionSolution> sols;
  if (workers <= 1 || work.size() < 2) {
    scan(0, work.size(), sols);
  } else {
    std::size_t nw = std::min<std::size_t>(static_cast<std::size_t>(workers),
                                           work.size());
    std::vector<std::vector<IntersectionSolution>> parts(nw);
    std::vector<std::thread> threads;
    std::size_t chunk = (work.size() + nw - 1) / nw;
    for (std::size_t i = 0; i < nw; ++i)
      threads.emplace_back([&, i] {
        scan(i * chunk, std::min(work.size(), (i + 1) * chunk), parts[i]);
      });
    for (auto& th : threads) th.join();
    for (auto& part : parts)
      sols.insert(sols.end(), part.begin(), part.end());
  }
  std::sort(sols.begin(), sols.end(),
            [](const IntersectionSolution& a, const IntersectionSolution& b) {
              if (a.x.rank() != b.x.rank()) return a.x.rank() < b.x.rank();
              if (a.s.rank() != b.s.rank()) return a.s.rank() < b.s.rank();
              return a.m.rank() < b.m.rank();
            });
  return sols;
}

/// All points of P fixed by omega, by scan.
inline std::vector<ReePoint> omega_fix(const F3nCtx& ctx) {
  const long long q3 = ctx.q() * ctx.q() * ctx.q();
  std::vector<ReePoint> fixed;
  for (long long id = 1; id <= q3; ++id) {  // infinity is moved by omega
    ReePoint p = point_from_id(ctx, id);
    if (omega(p) == p) fixed.push_back(p);
  }
  return fixed;
}

}  // namespace reeunital
