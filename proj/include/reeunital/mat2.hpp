#pragma once

#include <array>
#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "reeunital/gf8.hpp"

namespace reeunital {

/// A 2x2 matrix over GF(8).
struct Mat2 {
  F8 x00, x01, x10, x11;

  static Mat2 identity() { return {F8::one(), F8::zero(), F8::zero(), F8::one()}; }

  F8 det() const { return x00 * x11 + x01 * x10; }  // char 2: a-b = a+b
  F8 trace() const { return x00 + x11; }

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.x00 * b.x00 + a.x01 * b.x10, a.x00 * b.x01 + a.x01 * b.x11,
            a.x10 * b.x00 + a.x11 * b.x10, a.x10 * b.x01 + a.x11 * b.x11};
  }

  Mat2 inverse() const {
    F8 d = det();
    if (d.is_zero()) throw std::domain_error("Mat2: singular matrix");
    F8 di = d.inverse();
    return {di * x11, di * x01, di * x10, di * x00};
  }

  Mat2 transpose() const { return {x00, x10, x01, x11}; }

  /// Conjugation by delta: each entry raised to the 4th power.
  Mat2 delta() const {
    return {x00.pow(4), x01.pow(4), x10.pow(4), x11.pow(4)};
  }

  /// g^{-1} * M * g
  Mat2 conj_by(const Mat2& g) const { return g.inverse() * (*this) * g; }

  Mat2 pow(int e) const {
    Mat2 r = identity();
    Mat2 b = *this;
    if (e < 0) { b = b.inverse(); e = -e; }
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  /// 12-bit packed key; the fixed total order on matrices.
  std::uint16_t key() const {
    return static_cast<std::uint16_t>(x00.bits() | (x01.bits() << 3) |
                                      (x10.bits() << 6) | (x11.bits() << 9));
  }

  std::string str() const {
    return "[[" + x00.str() + "," + x01.str() + "],[" + x10.str() + "," +
           x11.str() + "]]";
  }

  friend bool operator==(const Mat2& a, const Mat2& b) {
    return a.key() == b.key();
  }
  friend bool operator!=(const Mat2& a, const Mat2& b) { return !(a == b); }
  friend bool operator<(const Mat2& a, const Mat2& b) {
    return a.key() < b.key();
  }
};

inline bool is_involution(const Mat2& m) {
  return m != Mat2::identity() && m * m == Mat2::identity();
}

/// Order by repeated multiplication.
inline int order_of(const Mat2& m) {
  Mat2 p = m;
  int k = 1;
  while (p != Mat2::identity()) {
    p = p * m;
    ++k;
    if (k > 63) throw std::logic_error("order_of: not a torsion element?");
  }
  return k;
}

/// Element order in SL(2,8) read off the trace: 2 for trace 0, 3 for
/// trace 1, 7 for trace in {u^3,u^5,u^6}, 9 for trace in {u,u^2,u^4}.
inline int order_by_trace(const Mat2& m) {
  if (m == Mat2::identity())
    throw std::invalid_argument("order_by_trace: identity has no case");
  F8 t = m.trace();
  if (t.is_zero()) return 2;
  int k = t.log();
  if (k == 0) return 3;
  if (k == 1 || k == 2 || k == 4) return 9;
  return 7;
}

/// All 504 elements of SL(2,8), row-major over entry bit patterns.
inline const std::vector<Mat2>& enumerate_sl28() {
  static const std::vector<Mat2> elems = [] {
    std::vector<Mat2> v;
    v.reserve(504);
    for (std::uint8_t a = 0; a < 8; ++a)
      for (std::uint8_t b = 0; b < 8; ++b)
        for (std::uint8_t c = 0; c < 8; ++c)
          for (std::uint8_t d = 0; d < 8; ++d) {
            Mat2 m{F8(a), F8(b), F8(c), F8(d)};
            if (m.det() == F8::one()) v.push_back(m);
          }
    return v;
  }();
  return elems;
}

/// An element delta^m * M of SigmaL(2,8) = <delta> SL(2,8).
struct SemiLinearElt {
  int m = 0;  // delta exponent mod 3
  Mat2 mat = Mat2::identity();

  static SemiLinearElt identity() { return {}; }

  // (delta^m M)(delta^k N) = delta^{m+k} (M^{delta^k}) N
  friend SemiLinearElt operator*(const SemiLinearElt& a,
                                 const SemiLinearElt& b) {
    Mat2 twisted = a.mat;
    for (int i = 0; i < b.m; ++i) twisted = twisted.delta();
    return {(a.m + b.m) % 3, twisted * b.mat};
  }

  SemiLinearElt inverse() const {
    // (delta^m M)^{-1} = delta^{-m} (M^{-1})^{delta^{-m}}
    int mi = (3 - m) % 3;
    Mat2 inv = mat.inverse();
    for (int i = 0; i < mi; ++i) inv = inv.delta();
    return {mi, inv};
  }

  friend bool operator==(const SemiLinearElt& a, const SemiLinearElt& b) {
    return a.m == b.m && a.mat == b.mat;
  }
  friend bool operator<(const SemiLinearElt& a, const SemiLinearElt& b) {
    return a.m != b.m ? a.m < b.m : a.mat < b.mat;
  }
};

/// A point of the unital S: a Sylow 3-subgroup of SL(2,8), cyclic of
/// order 9, in canonical form (the sorted list of its 9 elements).
struct SylowPoint {
  Mat2 generator;                 // an order-9 generator
  std::array<Mat2, 9> subgroup;   // sorted by Mat2 key
  int id = -1;

  bool contains(const Mat2& m) const {
    for (const auto& e : subgroup)
      if (e == m) return true;
    return false;
  }

  friend bool operator==(const SylowPoint& a, const SylowPoint& b) {
    return a.subgroup == b.subgroup;
  }
};

/// The 28 Sylow 3-subgroups of SL(2,8), ids assigned in enumeration order
/// of their first-found order-9 generator.
inline const std::vector<SylowPoint>& sylow3_points() {
  static const std::vector<SylowPoint> points = [] {
    std::vector<SylowPoint> pts;
    for (const Mat2& m : enumerate_sl28()) {
      if (m == Mat2::identity() || order_by_trace(m) != 9) continue;
      SylowPoint p;
      p.generator = m;
      Mat2 cur = Mat2::identity();
      for (int i = 0; i < 9; ++i) {
        p.subgroup[static_cast<std::size_t>(i)] = cur;
        cur = cur * m;
      }
      std::sort(p.subgroup.begin(), p.subgroup.end());
      bool seen = false;
      for (const auto& old : pts)
        if (old == p) { seen = true; break; }
      if (!seen) {
        p.id = static_cast<int>(pts.size());
        pts.push_back(p);
      }
    }
    return pts;
  }();
  return points;
}

/// Whether the involution I normalizes the Sylow subgroup p:
/// I^{-1} <gen> I = <gen>, tested on the generator.
inline bool normalizes(const Mat2& I, const SylowPoint& p) {
  return p.contains(p.generator.conj_by(I));
}

}  // namespace reeunital
