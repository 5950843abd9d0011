#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "reeunital/incidence.hpp"
#include "reeunital/mat2.hpp"
#include "reeunital/permgroup.hpp"

namespace reeunital {

/// The unital S of order 3: points are the 28 Sylow 3-subgroups of
/// SL(2,8) (identified with their normalizers), blocks are the 63
/// involutions, a point lies on a block when the involution normalizes
/// the subgroup.
struct UnitalS {
  std::vector<SylowPoint> points;      // 28, ids 0..27
  std::vector<Mat2> blocks;            // 63 involutions, enumeration order
  std::vector<std::vector<int>> rows;  // per block: sorted point ids
  std::vector<std::vector<int>> pencils;  // per point: sorted block ids

  /// p_X: the unique point whose Sylow subgroup contains X (X of order
  /// 3 or 9; distinct Sylow subgroups intersect trivially).
  int point_of(const Mat2& x) const {
    for (const auto& p : points)
      if (p.contains(x) && x != Mat2::identity()) return p.id;
    throw std::invalid_argument("UnitalS: element lies in no Sylow subgroup");
  }

  int block_of(const Mat2& inv) const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
      if (blocks[i] == inv) return static_cast<int>(i);
    throw std::invalid_argument("UnitalS: not a block");
  }

  IncidenceStructure to_incidence() const {
    return IncidenceStructure(static_cast<int>(points.size()), rows);
  }
};

inline UnitalS build_unital_s() {
  UnitalS u;
  u.points = sylow3_points();
  for (const Mat2& m : enumerate_sl28())
    if (is_involution(m)) u.blocks.push_back(m);

  u.rows.assign(u.blocks.size(), {});
  u.pencils.assign(u.points.size(), {});
  for (std::size_t b = 0; b < u.blocks.size(); ++b)
    for (const auto& p : u.points)
      if (normalizes(u.blocks[b], p)) {
        u.rows[b].push_back(p.id);
        u.pencils[static_cast<std::size_t>(p.id)].push_back(
            static_cast<int>(b));
      }

  if (u.points.size() != 28 || u.blocks.size() != 63)
    throw std::runtime_error("UnitalS: wrong point/block count");
  std::size_t flags = 0;
  for (const auto& row : u.rows) {
    if (row.size() != 4) throw std::runtime_error("UnitalS: block size != 4");
    flags += row.size();
  }
  for (const auto& pen : u.pencils)
    if (pen.size() != 9)
      throw std::runtime_error("UnitalS: point replication != 9");
  if (flags != 252) throw std::runtime_error("UnitalS: flag count != 252");
  return u;
}

/// The unique block through two distinct points, found by scanning the
/// 63 involutions for the one normalizing both Sylow subgroups.
inline Mat2 join_points(const UnitalS& u, int p, int q) {
  if (p == q) throw std::invalid_argument("join_points: equal points");
  const SylowPoint& P = u.points[static_cast<std::size_t>(p)];
  const SylowPoint& Q = u.points[static_cast<std::size_t>(q)];
  for (const Mat2& inv : u.blocks)
    if (normalizes(inv, P) && normalizes(inv, Q)) return inv;
  throw std::logic_error("join_points: no joining involution found");
}

/// The common point of two blocks, when the product IL has order 3 or 9
/// (trace in {1,u,u^2,u^4}); empty otherwise.
inline std::optional<int> meet_blocks(const UnitalS& u, const Mat2& I,
                                      const Mat2& L) {
  if (!is_involution(I) || !is_involution(L))
    throw std::invalid_argument("meet_blocks: inputs must be involutions");
  Mat2 prod = I * L;
  F8 t = prod.trace();
  bool meets = false;
  if (!t.is_zero()) {
    int k = t.log();
    meets = (k == 0 || k == 1 || k == 2 || k == 4);
  }
  if (!meets) return std::nullopt;
  return u.point_of(prod);
}

/// The named matrices of the explicit examples; derived entries are
/// computed from the base ones via conjugation.
struct NamedCatalog {
  Mat2 S, T, TS, A, D;
  Mat2 Y, Ydelta, Ydelta2, YS, YSdelta, YSdelta2;
  Mat2 G, Gdelta, Gdelta2;
  Mat2 E, Edelta, Edelta2, ES, ESdelta, ESdelta2;
  Mat2 M, Mdelta, Mdelta2;
  Mat2 I, Idelta, Idelta2, IS, ISdelta, ISdelta2;
  Mat2 F, Fdelta, Fdelta2, FS, FSdelta, FSdelta2;
  Mat2 DveeF, DveeFdelta;
};

inline const NamedCatalog& named_catalog() {
  static const NamedCatalog cat = [] {
    auto up = [](int k) { return F8::from_power(k); };
    F8 z = F8::zero(), o = F8::one();
    NamedCatalog c;
    c.S = {z, o, o, z};
    c.T = {o, z, o, o};
    c.A = {up(2), up(1), up(1), up(4)};
    c.D = c.T * c.S;
    c.TS = c.T.conj_by(c.S);
    c.Y = {up(1), up(2), up(4), up(1)};
    c.Ydelta = c.Y.delta();
    c.Ydelta2 = c.Ydelta.delta();
    c.YS = c.Y.conj_by(c.S);
    c.YSdelta = c.YS.delta();
    c.YSdelta2 = c.YSdelta.delta();
    c.G = {up(1), up(6), up(6), up(3)};
    c.Gdelta = c.G.delta();
    c.Gdelta2 = c.Gdelta.delta();
    c.E = Mat2{o, up(1), o, up(3)}.pow(3);
    c.Edelta = c.E.delta();
    c.Edelta2 = c.Edelta.delta();
    c.ES = c.E.conj_by(c.S);
    c.ESdelta = c.ES.delta();
    c.ESdelta2 = c.ESdelta.delta();
    c.M = {up(3), up(1), up(1), up(3)};
    c.Mdelta = c.M.delta();
    c.Mdelta2 = c.Mdelta.delta();
    c.I = {up(5), o, up(1), up(5)};
    c.Idelta = c.I.delta();
    c.Idelta2 = c.Idelta.delta();
    c.IS = c.I.conj_by(c.S);
    c.ISdelta = c.IS.delta();
    c.ISdelta2 = c.ISdelta.delta();
    c.F = (c.Idelta * c.I).pow(3);
    c.Fdelta = c.F.delta();
    c.Fdelta2 = c.Fdelta.delta();
    c.FS = c.F.conj_by(c.S);
    c.FSdelta = c.FS.delta();
    c.FSdelta2 = c.FSdelta.delta();
    c.DveeF = {up(2), up(1), up(4), up(2)};
    c.DveeFdelta = c.DveeF.delta();
    return c;
  }();
  return cat;
}

/// The point permutation induced by conjugation with g in SL(2,8).
inline Perm point_perm(const UnitalS& u, const Mat2& g) {
  Perm perm(u.points.size());
  for (const auto& p : u.points)
    perm[static_cast<std::size_t>(p.id)] = u.point_of(p.generator.conj_by(g));
  return perm;
}

/// The point permutation induced by delta (entrywise 4th power).
inline Perm point_perm_delta(const UnitalS& u) {
  Perm perm(u.points.size());
  for (const auto& p : u.points)
    perm[static_cast<std::size_t>(p.id)] = u.point_of(p.generator.delta());
  return perm;
}

struct CatalogReport {
  std::vector<std::pair<std::string, bool>> items;
  bool all_pass = true;
  void add(const std::string& name, bool pass) {
    items.emplace_back(name, pass);
    all_pass = all_pass && pass;
  }
};

/// Re-derives every item of the explicit example list and reports each
/// one as pass/fail.
inline CatalogReport verify_explicit_catalog(const UnitalS& u) {
  const NamedCatalog& c = named_catalog();
  CatalogReport rep;

  auto block_set = [&](std::initializer_list<Mat2> ms) {
    std::set<int> s;
    for (const Mat2& m : ms) s.insert(u.block_of(m));
    return s;
  };
  auto point_set = [&](std::initializer_list<Mat2> ms) {
    std::set<int> s;
    for (const Mat2& m : ms) s.insert(u.point_of(m));
    return s;
  };
  auto pencil_of = [&](int p) {
    const auto& pen = u.pencils[static_cast<std::size_t>(p)];
    return std::set<int>(pen.begin(), pen.end());
  };
  auto row_of = [&](const Mat2& blk) {
    const auto& row = u.rows[static_cast<std::size_t>(u.block_of(blk))];
    return std::set<int>(row.begin(), row.end());
  };

  int pD = u.point_of(c.D);

  rep.add("blocks through p_D",
          pencil_of(pD) == block_set({c.S, c.T, c.TS, c.Y, c.Ydelta,
                                      c.Ydelta2, c.YS, c.YSdelta,
                                      c.YSdelta2}));
  rep.add("S, T, T^S and p_D fixed by delta",
          c.S.delta() == c.S && c.T.delta() == c.T && c.TS.delta() == c.TS &&
              point_perm_delta(u)[static_cast<std::size_t>(pD)] == pD);
  rep.add("points on S",
          row_of(c.S) == point_set({c.D, c.G, c.Gdelta, c.Gdelta2}));
  rep.add("points on T",
          row_of(c.T) == point_set({c.D, c.E, c.Edelta, c.Edelta2}));
  rep.add("points on T^S",
          row_of(c.TS) == point_set({c.D, c.ES, c.ESdelta, c.ESdelta2}));

  {
    bool ok = join_points(u, u.point_of(c.E), u.point_of(c.ES)) == c.M;
    ok = ok && c.M.conj_by(c.S) == c.M && c.Mdelta.conj_by(c.S) == c.Mdelta &&
         c.Mdelta2.conj_by(c.S) == c.Mdelta2;
    ok = ok && !meet_blocks(u, c.M, c.Mdelta) &&
         !meet_blocks(u, c.M, c.Mdelta2) &&
         !meet_blocks(u, c.Mdelta, c.Mdelta2);
    rep.add("M joins E and E^S; M-family S-fixed and pairwise disjoint", ok);
  }
  rep.add("I-family joins",
          join_points(u, u.point_of(c.E), u.point_of(c.ESdelta)) == c.I &&
              join_points(u, u.point_of(c.Edelta),
                          u.point_of(c.ESdelta2)) == c.Idelta &&
              join_points(u, u.point_of(c.Edelta2), u.point_of(c.ES)) ==
                  c.Idelta2);
  {
    auto meet = meet_blocks(u, c.Idelta, c.I);
    rep.add("I^delta meets I in p_F with F = (I^delta I)^3",
            meet && *meet == u.point_of(c.F) &&
                (c.Idelta * c.I).pow(3) == c.F);
  }
  // Note: the fourth point on I is p_{F^{delta^2}}, not p_{F^delta};
  // applying delta^2 to "I^delta and I meet in p_F" moves p_F to
  // p_{F^{delta^2}} on I (p_{F^delta} lies on I^delta instead).
  rep.add("points on I",
          row_of(c.I) == point_set({c.E, c.ESdelta, c.F, c.Fdelta2}));
  {
    bool ok = true;
    ok = ok && join_points(u, pD, u.point_of(c.E)) == c.T;
    ok = ok && join_points(u, pD, u.point_of(c.ESdelta)) == c.TS;
    ok = ok && join_points(u, pD, u.point_of(c.F)) == c.DveeF;
    ok = ok && join_points(u, pD, u.point_of(c.Fdelta)) == c.DveeFdelta;
    ok = ok && c.DveeFdelta == c.DveeF.delta();
    ok = ok &&
         join_points(u, pD, u.point_of(c.Fdelta2)) == c.DveeFdelta.delta();
    rep.add("blocks joining p_D to the F-family points", ok);
  }
  {
    auto m1 = meet_blocks(u, c.ISdelta, c.I);
    auto m2 = meet_blocks(u, c.ISdelta2, c.I);
    auto m3 = meet_blocks(u, c.IS, c.I);
    rep.add("I^{S delta}, I^{S delta^2} meet I; I^S misses I (trace u^6)",
            m1 && *m1 == u.point_of(c.ESdelta) && m2 &&
                *m2 == u.point_of(c.E) && !m3 &&
                (c.IS * c.I).trace() == F8::from_power(6));
  }
  {
    // the six S-fixed blocks B_X partition the 24 points off S
    std::set<int> on_s = row_of(c.S);
    std::set<int> covered;
    bool ok = true;
    for (const Mat2& x :
         {c.E, c.Edelta, c.Edelta2, c.F, c.Fdelta, c.Fdelta2}) {
      int px = u.point_of(x);
      int pxs = u.point_of(x.conj_by(c.S));
      Mat2 bx = join_points(u, px, pxs);
      ok = ok && bx.conj_by(c.S) == bx;
      for (int p : u.rows[static_cast<std::size_t>(u.block_of(bx))]) {
        ok = ok && !on_s.count(p) && !covered.count(p);
        covered.insert(p);
      }
    }
    rep.add("six S-fixed blocks partition the 24 points off S",
            ok && covered.size() == 24);
  }
  return rep;
}

struct SConfigurations {
  Configuration dual_k4;   // the O'Nan configuration
  Configuration dual_k5;   // the super O'Nan configuration
  Configuration config_k;  // union of the two super O'Nan configurations
};

/// The explicit O'Nan (dual-K4), super O'Nan (dual-K5) and K
/// configurations, each validated against its incidence pattern.
inline SConfigurations onan_and_super_onan(const UnitalS& u) {
  const NamedCatalog& c = named_catalog();
  IncidenceStructure inc = u.to_incidence();
  SConfigurations out;

  auto pts = [&](std::initializer_list<Mat2> ms) {
    std::vector<int> v;
    for (const Mat2& m : ms) v.push_back(u.point_of(m));
    return v;
  };
  auto blks = [&](std::initializer_list<Mat2> ms) {
    std::vector<int> v;
    for (const Mat2& m : ms) v.push_back(u.block_of(m));
    return v;
  };

  out.dual_k4.points =
      pts({c.D, c.E, c.Edelta, c.ESdelta, c.ESdelta2, c.F});
  out.dual_k4.blocks = blks({c.T, c.TS, c.I, c.Idelta});
  if (!validate_configuration(inc, out.dual_k4,
                              {{2, 2, 2, 2, 2, 2}, {3, 3, 3, 3}}))
    throw std::runtime_error("dual-K4 configuration failed validation");

  out.dual_k5.points = pts({c.D, c.E, c.Edelta, c.Edelta2, c.ES, c.ESdelta,
                            c.ESdelta2, c.F, c.Fdelta, c.Fdelta2});
  out.dual_k5.blocks = blks({c.T, c.TS, c.I, c.Idelta, c.Idelta2});
  if (!validate_configuration(inc, out.dual_k5,
                              {{2, 2, 2, 2, 2, 2, 2, 2, 2, 2},
                               {4, 4, 4, 4, 4}}))
    throw std::runtime_error("dual-K5 configuration failed validation");

  // orbits of p_D, p_E, p_F, T, I under <delta, S>
  out.config_k.points =
      pts({c.D, c.E, c.Edelta, c.Edelta2, c.ES, c.ESdelta, c.ESdelta2, c.F,
           c.Fdelta, c.Fdelta2, c.FS, c.FSdelta, c.FSdelta2});
  out.config_k.blocks = blks(
      {c.T, c.TS, c.I, c.Idelta, c.Idelta2, c.IS, c.ISdelta, c.ISdelta2});
  if (!validate_configuration(
          inc, out.config_k,
          {{2, 3, 3, 3, 3, 3, 3, 2, 2, 2, 2, 2, 2},
           {4, 4, 4, 4, 4, 4, 4, 4}}))
    throw std::runtime_error("configuration K failed validation");
  return out;
}

}  // namespace reeunital
