#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "reeunital/rt_unital.hpp"

using namespace reeunital;

namespace {
XiElt elt(const F3nCtx& ctx, int a, int b, int c) {
  return {ctx.scalar(a), ctx.scalar(b), ctx.scalar(c)};
}
}  // namespace

TEST_CASE("RT(3) is a unital of order 3") {
  F3nCtx ctx(1);
  RTUnital rt = build_rt(ctx);
  REQUIRE(rt.v == 28);
  DesignCheck chk = verify_2design(rt.to_incidence());
  REQUIRE(chk.ok);
  REQUIRE(chk.params == DesignParams{28, 63, 9, 4, 1});
}

TEST_CASE("join_rt returns the unique block through two points") {
  F3nCtx ctx(1);
  RTUnital rt = build_rt(ctx);
  IncidenceStructure inc = rt.to_incidence();
  for (long long i = 0; i <= 27; ++i)
    for (long long j = i + 1; j <= 27; ++j) {
      auto blk = join_rt(point_from_id(ctx, i), point_from_id(ctx, j), ctx);
      std::vector<int> ids;
      for (const ReePoint& p : blk) ids.push_back(static_cast<int>(point_id(p)));
      std::sort(ids.begin(), ids.end());
      REQUIRE(std::binary_search(rt.blocks.begin(), rt.blocks.end(), ids));
      REQUIRE(std::binary_search(ids.begin(), ids.end(), static_cast<int>(i)));
      REQUIRE(std::binary_search(ids.begin(), ids.end(), static_cast<int>(j)));
    }
  ReePoint p = point_from_id(ctx, 5);
  REQUIRE_THROWS_AS(join_rt(p, p, ctx), std::invalid_argument);
}

TEST_CASE("the block joining epsilon and epsilon' contains psi and psi*lambda") {
  F3nCtx ctx(1);
  XiElt eps = elt(ctx, 0, 0, -1);
  XiElt epsPrime = elt(ctx, 0, 1, 1);
  XiElt psi = elt(ctx, -1, -1, 1);
  XiElt psiLambda = elt(ctx, -1, 0, 0);
  REQUIRE(xi_mul(psi, elt(ctx, 0, 1, 0)) == psiLambda);

  auto blk = join_rt(ReePoint::at(eps), ReePoint::at(epsPrime), ctx);
  std::set<long long> ids;
  for (const ReePoint& p : blk) ids.insert(point_id(p));
  std::set<long long> expect{point_id(ReePoint::at(eps)),
                             point_id(ReePoint::at(epsPrime)),
                             point_id(ReePoint::at(psi)),
                             point_id(ReePoint::at(psiLambda))};
  REQUIRE(ids == expect);
}

TEST_CASE("fixed points of omega") {
  F3nCtx ctx(1);
  auto fixed = omega_fix(ctx);
  std::set<long long> ids;
  for (const ReePoint& p : fixed) ids.insert(point_id(p));
  std::set<long long> expect{
      point_id(ReePoint::at(elt(ctx, 0, 1, 1))),
      point_id(ReePoint::at(elt(ctx, 0, 1, -1))),
      point_id(ReePoint::at(elt(ctx, 1, 1, 0))),
      point_id(ReePoint::at(elt(ctx, -1, 1, 0)))};
  REQUIRE(ids == expect);

  F3nCtx big(3);
  REQUIRE(omega_fix(big).size() == 28);  // frozen regression value
}

TEST_CASE("super O'Nan configuration and pearls at q=3") {
  F3nCtx ctx(1);
  RTSuperOnan cfg = super_onan(ctx);  // validates internally
  REQUIRE(cfg.blocks.size() == 5);
  REQUIRE(cfg.points.size() == 10);

  PearlChain chain = string_of_pearls(ctx);
  REQUIRE(chain.configs.size() == 1);
  REQUIRE(chain.union_points == 10);
  REQUIRE(chain.union_blocks == 5);
}

TEST_CASE("string of pearls at q=27") {
  F3nCtx ctx(3);
  PearlChain chain = string_of_pearls(ctx);
  REQUIRE(chain.configs.size() == 9);
  REQUIRE(chain.union_points == 82);
  REQUIRE(chain.union_blocks == 29);
  for (const auto& cfg : chain.configs) {
    REQUIRE(cfg.blocks.size() == 5);
    REQUIRE(cfg.points.size() == 10);
    // infinity and the two tau-blocks are shared
    REQUIRE(std::binary_search(cfg.points.begin(), cfg.points.end(), 0LL));
    REQUIRE(cfg.blocks[0] == chain.configs.front().blocks[0]);
    REQUIRE(cfg.blocks[1] == chain.configs.front().blocks[1]);
  }
}

TEST_CASE("intersection search matches the full scan at q=3") {
  F3nCtx ctx(1);
  F3nElt one = ctx.one();
  // brute force over all (x, s, m)
  std::set<std::array<long long, 3>> brute;
  for (long long rx = 0; rx < 3; ++rx)
    for (long long rs = 0; rs < 3; ++rs)
      for (long long rm = 1; rm < 3; ++rm) {
        F3nElt x = ctx.from_rank(rx), s = ctx.from_rank(rs),
               m = ctx.from_rank(rm);
        F3nElt X = x.theta() * x + one, S = s.theta() * s + one;
        if (X.is_zero() || S.is_zero()) continue;
        if ((one - x) * S != (one - s) * X) continue;
        if (x.theta() * S != X * (s.theta() - m * S)) continue;
        if (-S != X * ((one - s) * m - one)) continue;
        brute.insert({rx, rs, rm});
      }
  auto sols = intersection_search(ctx);
  std::set<std::array<long long, 3>> fast;
  for (const auto& sol : sols)
    fast.insert({sol.x.rank(), sol.s.rank(), sol.m.rank()});
  REQUIRE(fast == brute);
  REQUIRE(brute == std::set<std::array<long long, 3>>{{0, 2, 1}, {2, 0, 2}});
}

TEST_CASE("intersection solutions have s in {0,-1}, small fields") {
  for (int n : {1, 3, 5}) {
    F3nCtx ctx(n);
    auto sols = intersection_search(ctx, 2);
    REQUIRE(sols.size() == 2);
    for (const auto& sol : sols) {
      bool s_ok = sol.s.is_zero() || sol.s == ctx.scalar(-1);
      REQUIRE(s_ok);
      REQUIRE_FALSE(sol.m.is_zero());
    }
  }
}

TEST_CASE("build_rt rejects unsupported field sizes") {
  F3nCtx ctx(5);
  REQUIRE_THROWS_AS(build_rt(ctx), std::invalid_argument);
}
