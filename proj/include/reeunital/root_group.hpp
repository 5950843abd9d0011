#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "reeunital/gf3n.hpp"
#include "reeunital/permgroup.hpp"

namespace reeunital {

/// An element <a,b,c> of the root group Xi over GF(3^n).
struct XiElt {
  F3nElt a, b, c;

  friend bool operator==(const XiElt& x, const XiElt& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
  }
  friend bool operator!=(const XiElt& x, const XiElt& y) { return !(x == y); }

  std::string str() const {
    return "(" + a.str() + "," + b.str() + "," + c.str() + ")";
  }
};

inline XiElt xi_identity(const F3nCtx& ctx) {
  return {ctx.zero(), ctx.zero(), ctx.zero()};
}

/// The twisted group operation:
/// <a,b,c> * <x,y,z> = <a+x, b+y+a x^theta, ay - bx + c + z - a x^{theta+1}>.
inline XiElt xi_mul(const XiElt& u, const XiElt& v) {
  F3nElt xt = v.a.theta();
  F3nElt a = u.a + v.a;
  F3nElt b = u.b + v.b + u.a * xt;
  F3nElt c = u.a * v.b - u.b * v.a + u.c + v.c - u.a * (xt * v.a);
  return {a, b, c};
}

/// <a,b,c>^{-1} = <-a, a^{theta+1} - b, -c>
inline XiElt xi_inv(const XiElt& u) {
  return {-u.a, u.a.theta() * u.a - u.b, -u.c};
}

/// <a,b,c>^3 = <0, 0, -a^{theta+2}>; expanding ((x*x)*x) from the group
/// law gives the third coordinate -4 a^{theta+2} = -a^{theta+2}.
inline XiElt xi_cube(const XiElt& u) {
  const F3nCtx& ctx = u.a.ctx();
  return {ctx.zero(), ctx.zero(), -(u.a.theta() * (u.a * u.a))};
}

inline XiElt xi_pow(const XiElt& u, int e) {
  XiElt r = xi_identity(u.a.ctx());
  XiElt b = u;
  if (e < 0) { b = xi_inv(b); e = -e; }
  while (e) {
    if (e & 1) r = xi_mul(r, b);
    b = xi_mul(b, b);
    e >>= 1;
  }
  return r;
}

/// N(a,b,c) = -ac^theta + a^{theta+1}b^theta - a^{theta+3}b - a^2 b^2
///            + b^{theta+1} + c^2 - a^{2 theta+4}
inline F3nElt norm(const XiElt& u) {
  F3nElt at = u.a.theta(), bt = u.b.theta(), ct = u.c.theta();
  F3nElt a2 = u.a * u.a, a3 = a2 * u.a, a4 = a2 * a2;
  F3nElt at2 = at * at;
  return -(u.a * ct) + (at * u.a) * bt - (at * a3) * u.b - a2 * (u.b * u.b) +
         bt * u.b + u.c * u.c - at2 * a4;
}

/// A point of P = Xi union {infinity}.
struct ReePoint {
  bool infinite = false;
  XiElt xi;  // valid when !infinite

  // carries the identity triple so the field context stays reachable
  static ReePoint inf(const F3nCtx& ctx) { return {true, xi_identity(ctx)}; }
  static ReePoint at(const XiElt& x) { return {false, x}; }

  friend bool operator==(const ReePoint& p, const ReePoint& q) {
    if (p.infinite != q.infinite) return false;
    return p.infinite || p.xi == q.xi;
  }
  friend bool operator!=(const ReePoint& p, const ReePoint& q) {
    return !(p == q);
  }

  std::string str() const { return infinite ? "inf" : xi.str(); }
};

/// Dense point id: infinity -> 0, <a,b,c> -> 1 + rank(a) q^2 + rank(b) q + rank(c).
inline long long point_id(const ReePoint& p) {
  if (p.infinite) return 0;
  long long q = p.xi.a.ctx().q();
  return 1 + p.xi.a.rank() * q * q + p.xi.b.rank() * q + p.xi.c.rank();
}

inline ReePoint point_from_id(const F3nCtx& ctx, long long id) {
  if (id == 0) return ReePoint::inf(ctx);
  long long q = ctx.q();
  long long t = id - 1;
  return ReePoint::at({ctx.from_rank(t / (q * q)),
                       ctx.from_rank((t / q) % q), ctx.from_rank(t % q)});
}

/// omega: swaps infinity and o; elsewhere the (-1/N)-scaled triple. An
/// involution on P. N vanishing off o would be a hard error; it is
/// verified non-vanishing exhaustively for q <= 27.
inline ReePoint omega(const ReePoint& p) {
  if (p.infinite) return ReePoint::at(xi_identity(p.xi.a.ctx()));
  const F3nCtx& ctx = p.xi.a.ctx();
  const XiElt& u = p.xi;
  if (u == xi_identity(ctx)) return ReePoint::inf(ctx);
  F3nElt N = norm(u);
  if (N.is_zero())
    throw std::domain_error("omega: vanishing norm off the identity");
  F3nElt s = -N.inverse();
  F3nElt at = u.a.theta(), bt = u.b.theta(), ct = u.c.theta();
  F3nElt a2 = u.a * u.a, a3 = a2 * u.a, b2 = u.b * u.b;
  F3nElt at2 = at * at;
  // <a^t b^t - c^t + a b^2 + bc - a^{2t+3},  a^2 b - ac + b^t - a^{t+3},  c>
  F3nElt f = at * bt - ct + u.a * b2 + u.b * u.c - at2 * a3;
  F3nElt g = a2 * u.b - u.a * u.c + bt - at * a3;
  return ReePoint::at({s * f, s * g, s * u.c});
}

/// eta_s: <a,b,c> -> <s a, s^{theta+1} b, s^{theta+2} c>, fixing infinity.
inline ReePoint eta(const F3nElt& s, const ReePoint& p) {
  if (s.is_zero()) throw std::invalid_argument("eta: s must be nonzero");
  if (p.infinite) return p;
  F3nElt st = s.theta();
  F3nElt s1 = st * s, s2 = st * (s * s);
  return ReePoint::at({s * p.xi.a, s1 * p.xi.b, s2 * p.xi.c});
}

inline XiElt eta_xi(const F3nElt& s, const XiElt& x) {
  return eta(s, ReePoint::at(x)).xi;
}

/// [alpha, xi] = alpha^{-1} xi^{-1} alpha xi, closed form
/// <0, x^t a - a^t x, bx - ay + (x-a)(a^t x + x^t a)>.
inline XiElt commutator(const XiElt& al, const XiElt& xi) {
  const F3nCtx& ctx = al.a.ctx();
  F3nElt at = al.a.theta(), xt = xi.a.theta();
  F3nElt b = xt * al.a - at * xi.a;
  F3nElt c = al.b * xi.a - al.a * xi.b +
             (xi.a - al.a) * (at * xi.a + xt * al.a);
  return {ctx.zero(), b, c};
}

/// Parameters (a,c) of the involution eta_{-1} <a, -a^{theta+1}, c>;
/// exactly q^2 involutions in the stabilizer of infinity.
struct InvolutionParam {
  F3nElt a, c;

  XiElt xi_part() const { return {a, -(a.theta() * a), c}; }
};

/// Fix(eta_{-1} xi) = {infinity} union {<-a, y, ay - c> : y in K}.
inline std::vector<ReePoint> involution_fixed_points(
    const InvolutionParam& iv) {
  const F3nCtx& ctx = iv.a.ctx();
  std::vector<ReePoint> pts;
  pts.reserve(static_cast<std::size_t>(ctx.q()) + 1);
  pts.push_back(ReePoint::inf(ctx));
  for (long long r = 0; r < ctx.q(); ++r) {
    F3nElt y = ctx.from_rank(r);
    pts.push_back(ReePoint::at({-iv.a, y, iv.a * y - iv.c}));
  }
  return pts;
}

/// The image of a point under the involution fixing exactly
/// involution_fixed_points(iv): apply eta_{-1}, then right-translate by
/// <a, -a^{theta+1}, c - a^{theta+2}>.  Solving eta_{-1}(p) * xi = p for
/// xi = <a, -a^{theta+1}, z> shows the fixed set {<-a, y, ay - c>} demands
/// z = c - a^{theta+2}, not z = c.
inline ReePoint involution_apply(const InvolutionParam& iv,
                                 const ReePoint& p) {
  const F3nCtx& ctx = iv.a.ctx();
  if (p.infinite) return p;
  XiElt xi{iv.a, -(iv.a.theta() * iv.a), iv.c - iv.a.theta() * (iv.a * iv.a)};
  ReePoint q = eta(ctx.scalar(-1), p);
  return ReePoint::at(xi_mul(q.xi, xi));
}

struct StructureReport {
  std::vector<std::pair<std::string, bool>> items;
  bool all_pass = true;
  void add(const std::string& name, bool pass) {
    items.emplace_back(name, pass);
    all_pass = all_pass && pass;
  }
};

namespace detail {

inline long long xi_id(const XiElt& x) {
  long long q = x.a.ctx().q();
  return x.a.rank() * q * q + x.b.rank() * q + x.c.rank();
}

inline XiElt xi_from_id(const F3nCtx& ctx, long long id) {
  long long q = ctx.q();
  return {ctx.from_rank(id / (q * q)), ctx.from_rank((id / q) % q),
          ctx.from_rank(id % q)};
}

// Closure of a seed set under the group operation (finite exponent, so
// products alone suffice).
inline std::set<long long> subgroup_closure(const F3nCtx& ctx,
                                            std::set<long long> seed) {
  seed.insert(0);  // identity has id 0 in xi_id numbering
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<long long> cur(seed.begin(), seed.end());
    for (long long i : cur)
      for (long long j : cur) {
        long long p = xi_id(xi_mul(xi_from_id(ctx, i), xi_from_id(ctx, j)));
        if (seed.insert(p).second) grew = true;
      }
  }
  return seed;
}

}  // namespace detail

/// Exhaustive structural verification of Xi for q in {3, 27}: exponent,
/// center, derived subgroup, nilpotency class, the centralizer of
/// eta_{-1}, and the Xi-conjugacy orbit of sigma = eta_{-1}.
inline StructureReport structural_checks(const F3nCtx& ctx) {
  long long q = ctx.q();
  if (q != 3 && q != 27)
    throw std::invalid_argument(
        "structural_checks: exhaustive regime is q in {3, 27}");
  StructureReport rep;
  const long long q3 = q * q * q;
  XiElt o = xi_identity(ctx);

  // exponent 9: cube closed form agrees with repeated product, ninth
  // power trivial
  {
    bool ok = true;
    bool some_order9 = false;
    for (long long id = 0; id < q3 && ok; ++id) {
      XiElt x = detail::xi_from_id(ctx, id);
      XiElt c3 = xi_cube(x);
      ok = ok && c3 == xi_mul(xi_mul(x, x), x);
      ok = ok && xi_cube(c3) == o;
      if (c3 != o) some_order9 = true;
    }
    rep.add("exponent 9 (cube closed form, ninth powers trivial)",
            ok && some_order9);
  }

  // center == Z = {<0,0,c>}
  {
    std::set<long long> center;
    std::vector<XiElt> gens;
    for (long long r = 0; r < q; ++r) {
      gens.push_back({ctx.from_rank(r), ctx.zero(), ctx.zero()});
      gens.push_back({ctx.zero(), ctx.from_rank(r), ctx.zero()});
    }
    for (long long id = 0; id < q3; ++id) {
      XiElt x = detail::xi_from_id(ctx, id);
      bool central = true;
      for (const XiElt& g : gens)
        if (xi_mul(x, g) != xi_mul(g, x)) { central = false; break; }
      if (central) center.insert(id);
    }
    std::set<long long> z;
    for (long long rc = 0; rc < q; ++rc) z.insert(rc);
    rep.add("center of Xi equals Z = {<0,0,c>}",
            center == z && static_cast<long long>(center.size()) == q);
  }

  // derived subgroup
  std::set<long long> derived;
  {
    std::set<long long> comms;
    for (long long ra = 0; ra < q; ++ra)
      for (long long rb = 0; rb < q; ++rb) {
        XiElt al{ctx.from_rank(ra), ctx.from_rank(rb), ctx.zero()};
        for (long long rx = 0; rx < q; ++rx)
          for (long long ry = 0; ry < q; ++ry) {
            XiElt xi{ctx.from_rank(rx), ctx.from_rank(ry), ctx.zero()};
            comms.insert(detail::xi_id(commutator(al, xi)));
          }
      }
    derived = detail::subgroup_closure(ctx, std::move(comms));
    if (q == 3) {
      std::set<long long> z;
      for (long long rc = 0; rc < q; ++rc) z.insert(rc);
      rep.add("derived subgroup equals Z (q=3)", derived == z);
    } else {
      std::set<long long> bc;
      for (long long rb = 0; rb < q; ++rb)
        for (long long rc = 0; rc < q; ++rc) bc.insert(rb * q + rc);
      rep.add("derived subgroup equals {<0,b,c>} (q=27)", derived == bc);
    }
  }

  // nilpotency class via the lower central series
  {
    std::set<long long> gamma = derived;  // gamma_2
    int cls = 1;
    while (gamma.size() > 1 && cls < 6) {
      ++cls;
      std::set<long long> comms;
      for (long long gid : gamma) {
        XiElt g = detail::xi_from_id(ctx, gid);
        for (long long id = 0; id < q3; ++id)
          comms.insert(
              detail::xi_id(commutator(g, detail::xi_from_id(ctx, id))));
      }
      gamma = detail::subgroup_closure(ctx, std::move(comms));
    }
    rep.add("nilpotency class " + std::string(q == 3 ? "2" : "3"),
            cls == (q == 3 ? 2 : 3));
  }

  // Lambda = C_Xi(eta_{-1}) = {<0,b,0>}
  {
    F3nElt minus1 = ctx.scalar(-1);
    std::set<long long> fixed;
    for (long long id = 0; id < q3; ++id) {
      XiElt x = detail::xi_from_id(ctx, id);
      if (eta_xi(minus1, x) == x) fixed.insert(id);
    }
    std::set<long long> lambda;
    for (long long rb = 0; rb < q; ++rb) lambda.insert(rb * q);
    rep.add("centralizer of eta_{-1} in Xi equals Lambda", fixed == lambda);
  }

  // Xi-conjugacy orbit of sigma = eta_{-1} has size q^2:
  // sigma^xi = sigma . R_j with j = eta_{-1}(xi)^{-1} xi
  {
    F3nElt minus1 = ctx.scalar(-1);
    std::set<long long> orbit;
    for (long long id = 0; id < q3; ++id) {
      XiElt x = detail::xi_from_id(ctx, id);
      orbit.insert(detail::xi_id(xi_mul(xi_inv(eta_xi(minus1, x)), x)));
    }
    rep.add("Xi-conjugacy orbit of sigma has size q^2",
            static_cast<long long>(orbit.size()) == q * q);
  }

  return rep;
}

/// The permutation group generated by omega and the right translations of
/// Xi on the 28 points of P for q=3: order and double transitivity.
struct ReePermGroupInfo {
  std::size_t order = 0;
  bool doubly_transitive = false;
};

inline ReePermGroupInfo ree_q3_permutation_group(const F3nCtx& ctx) {
  if (ctx.q() != 3)
    throw std::invalid_argument("ree_q3_permutation_group: q must be 3");
  const int npts = 28;
  auto as_perm = [&](auto&& f) {
    Perm perm(npts);
    for (long long id = 0; id < npts; ++id)
      perm[static_cast<std::size_t>(id)] =
          static_cast<int>(point_id(f(point_from_id(ctx, id))));
    return perm;
  };
  std::vector<Perm> gens;
  gens.push_back(as_perm([](const ReePoint& p) { return omega(p); }));
  for (XiElt g : {XiElt{ctx.one(), ctx.zero(), ctx.zero()},
                  XiElt{ctx.zero(), ctx.one(), ctx.zero()},
                  XiElt{ctx.zero(), ctx.zero(), ctx.one()}})
    gens.push_back(as_perm([&](const ReePoint& p) {
      return p.infinite ? p : ReePoint::at(xi_mul(p.xi, g));
    }));
  ReePermGroupInfo info;
  info.order = generate_permutation_group(gens, 4000).size();
  info.doubly_transitive = ordered_pair_orbit_size(gens) == 28u * 27u;
  return info;
}

}  // namespace reeunital
