#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace reeunital {

class F3nElt;

/// Field context for GF(3^n), n odd, 1 <= n <= 9, as a polynomial
/// basis modulo a fixed irreducible monic polynomial over GF(3).
///
/// The modulus per degree is the irreducible monic polynomial with the
/// fewest nonzero terms, ties broken by the smallest radix-3 value of the
/// little-endian coefficient vector:
///   n=1: x          n=3: x^3+2x+1    n=5: x^5+2x+1
///   n=7: x^7+x^2+2  n=9: x^9+x^4+2
///
/// Also carries the Tits endomorphism theta = phi^((n+1)/2), where
/// phi(x) = x^3, so that theta(theta(x)) = x^3.
class F3nCtx {
public:
  static constexpr int kMaxDegree = 9;

  explicit F3nCtx(int n);

  F3nCtx(const F3nCtx&) = delete;
  F3nCtx& operator=(const F3nCtx&) = delete;

  int n() const { return n_; }
  long long q() const { return q_; }
  int theta_exponent() const { return (n_ + 1) / 2; }

  /// Modulus coefficients c[0..n-1] of x^n + c[n-1]x^{n-1} + ... + c[0].
  const std::array<std::uint8_t, kMaxDegree>& modulus() const { return mod_; }
  std::string modulus_str() const;
  /// Header form used in serialized output: "GF(3^n) mod <poly>".
  std::string header() const {
    return "GF(3^" + std::to_string(n_) + ") mod " + modulus_str();
  }

  F3nElt zero() const;
  F3nElt one() const;
  /// The constant v mod 3.
  F3nElt scalar(int v) const;
  /// Element with radix-3 little-endian rank r, 0 <= r < q.
  F3nElt from_rank(long long r) const;
  F3nElt from_coeffs(const std::vector<int>& coeffs) const;

  static bool is_irreducible(const std::array<std::uint8_t, kMaxDegree>& mod,
                             int n);

  // Raw coefficient-vector arithmetic; used by F3nElt.
  using Coeffs = std::array<std::uint8_t, kMaxDegree>;
  void mul(const Coeffs& a, const Coeffs& b, Coeffs& out) const;
  void frobenius(const Coeffs& a, Coeffs& out) const { apply(frob_, a, out); }
  void theta(const Coeffs& a, Coeffs& out) const { apply(theta_, a, out); }
  void inverse(const Coeffs& a, Coeffs& out) const;

private:
  int n_;
  long long q_;
  Coeffs mod_{};
  // red_[t] = x^{n+t} mod modulus, t = 0..n-2
  std::array<Coeffs, kMaxDegree - 1> red_{};
  // images of the basis monomials under phi and theta
  std::array<Coeffs, kMaxDegree> frob_{};
  std::array<Coeffs, kMaxDegree> theta_{};

  void apply(const std::array<Coeffs, kMaxDegree>& m, const Coeffs& a,
             Coeffs& out) const;
};

/// An element of GF(3^n), value-semantic, bound to its context.
class F3nElt {
public:
  F3nElt() : ctx_(nullptr), c_{} {}
  F3nElt(const F3nCtx* ctx, const F3nCtx::Coeffs& c) : ctx_(ctx), c_(c) {}

  const F3nCtx& ctx() const { return *ctx_; }
  const F3nCtx::Coeffs& coeffs() const { return c_; }

  bool is_zero() const {
    for (int i = 0; i < ctx_->n(); ++i)
      if (c_[i]) return false;
    return true;
  }

  long long rank() const {
    long long r = 0, p = 1;
    for (int i = 0; i < ctx_->n(); ++i, p *= 3) r += p * c_[i];
    return r;
  }

  friend F3nElt operator+(const F3nElt& a, const F3nElt& b) {
    a.check(b);
    F3nCtx::Coeffs r{};
    for (int i = 0; i < a.ctx_->n(); ++i)
      r[i] = static_cast<std::uint8_t>((a.c_[i] + b.c_[i]) % 3);
    return {a.ctx_, r};
  }

  friend F3nElt operator-(const F3nElt& a, const F3nElt& b) {
    a.check(b);
    F3nCtx::Coeffs r{};
    for (int i = 0; i < a.ctx_->n(); ++i)
      r[i] = static_cast<std::uint8_t>((3 + a.c_[i] - b.c_[i]) % 3);
    return {a.ctx_, r};
  }

  F3nElt operator-() const {
    F3nCtx::Coeffs r{};
    for (int i = 0; i < ctx_->n(); ++i)
      r[i] = static_cast<std::uint8_t>((3 - c_[i]) % 3);
    return {ctx_, r};
  }

  friend F3nElt operator*(const F3nElt& a, const F3nElt& b) {
    a.check(b);
    F3nCtx::Coeffs r{};
    a.ctx_->mul(a.c_, b.c_, r);
    return {a.ctx_, r};
  }

  F3nElt inverse() const {
    if (is_zero()) throw std::domain_error("GF(3^n): inversion of 0");
    F3nCtx::Coeffs r{};
    ctx_->inverse(c_, r);
    return {ctx_, r};
  }

  F3nElt frobenius() const {
    F3nCtx::Coeffs r{};
    ctx_->frobenius(c_, r);
    return {ctx_, r};
  }

  F3nElt theta() const {
    F3nCtx::Coeffs r{};
    ctx_->theta(c_, r);
    return {ctx_, r};
  }

  F3nElt pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    F3nElt r = ctx_->one();
    F3nElt b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  /// Little-endian coefficient string over {0,1,2}, e.g. "120" for
  /// 1 + 2x in GF(27).
  std::string str() const {
    std::string s;
    for (int i = 0; i < ctx_->n(); ++i)
      s.push_back(static_cast<char>('0' + c_[i]));
    return s;
  }

  friend bool operator==(const F3nElt& a, const F3nElt& b) {
    a.check(b);
    for (int i = 0; i < a.ctx_->n(); ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }
  friend bool operator!=(const F3nElt& a, const F3nElt& b) {
    return !(a == b);
  }

private:
  const F3nCtx* ctx_;
  F3nCtx::Coeffs c_;

  void check(const F3nElt& other) const {
    if (ctx_ != other.ctx_)
      throw std::invalid_argument("GF(3^n): mixed field contexts");
  }
};

inline F3nElt F3nCtx::zero() const { return {this, Coeffs{}}; }

inline F3nElt F3nCtx::one() const { return scalar(1); }

inline F3nElt F3nCtx::scalar(int v) const {
  Coeffs c{};
  c[0] = static_cast<std::uint8_t>(((v % 3) + 3) % 3);
  return {this, c};
}

inline F3nElt F3nCtx::from_rank(long long r) const {
  if (r < 0 || r >= q_) throw std::invalid_argument("GF(3^n): rank out of range");
  Coeffs c{};
  for (int i = 0; i < n_; ++i) {
    c[i] = static_cast<std::uint8_t>(r % 3);
    r /= 3;
  }
  return {this, c};
}

inline F3nElt F3nCtx::from_coeffs(const std::vector<int>& coeffs) const {
  if (static_cast<int>(coeffs.size()) > n_)
    throw std::invalid_argument("GF(3^n): too many coefficients");
  Coeffs c{};
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    c[i] = static_cast<std::uint8_t>(((coeffs[i] % 3) + 3) % 3);
  return {this, c};
}

inline void F3nCtx::mul(const Coeffs& a, const Coeffs& b, Coeffs& out) const {
  int acc[2 * kMaxDegree - 1] = {};
  for (int i = 0; i < n_; ++i) {
    int ai = a[i];
    if (!ai) continue;
    for (int j = 0; j < n_; ++j) acc[i + j] += ai * b[j];
  }
  for (int k = 2 * n_ - 2; k >= n_; --k) {
    int c = acc[k] % 3;
    if (c) {
      const Coeffs& row = red_[k - n_];
      for (int j = 0; j < n_; ++j) acc[j] += c * row[j];
    }
  }
  for (int j = 0; j < n_; ++j) out[j] = static_cast<std::uint8_t>(acc[j] % 3);
}

inline void F3nCtx::apply(const std::array<Coeffs, kMaxDegree>& m,
                          const Coeffs& a, Coeffs& out) const {
  int acc[kMaxDegree] = {};
  for (int i = 0; i < n_; ++i) {
    int ai = a[i];
    if (!ai) continue;
    for (int j = 0; j < n_; ++j) acc[j] += ai * m[i][j];
  }
  for (int j = 0; j < n_; ++j) out[j] = static_cast<std::uint8_t>(acc[j] % 3);
}

namespace detail {

// Polynomial helpers over GF(3) for context setup; degrees stay small.
using Poly = std::vector<int>;  // little-endian, no trailing-zero guarantee

inline int poly_deg(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[static_cast<std::size_t>(i)]) return i;
  return -1;
}

inline Poly poly_mod(Poly a, const Poly& m) {
  int dm = poly_deg(m);
  int lead_inv = m[static_cast<std::size_t>(dm)] == 1 ? 1 : 2;
  for (int da = poly_deg(a); da >= dm; da = poly_deg(a)) {
    int f = (a[static_cast<std::size_t>(da)] * lead_inv) % 3;
    for (int j = 0; j <= dm; ++j) {
      auto& c = a[static_cast<std::size_t>(da - dm + j)];
      c = ((c - f * m[static_cast<std::size_t>(j)]) % 3 + 3) % 3;
    }
  }
  return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m) {
  Poly r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j)
        r[i + j] = (r[i + j] + a[i] * b[j]) % 3;
  return poly_mod(std::move(r), m);
}

inline bool poly_eq(const Poly& a, const Poly& b) {
  int d = poly_deg(a);
  if (d != poly_deg(b)) return false;
  for (int i = 0; i <= d; ++i)
    if (a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)])
      return false;
  return true;
}

}  // namespace detail

inline bool F3nCtx::is_irreducible(
    const std::array<std::uint8_t, kMaxDegree>& mod, int n) {
  using detail::Poly;
  Poly m(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = mod[i];
  m[static_cast<std::size_t>(n)] = 1;

  auto frob_iter = [&](int k) {
    // x^(3^k) mod m
    Poly e(static_cast<std::size_t>(n) + 1, 0);
    if (n == 1)
      e[0] = (3 - mod[0]) % 3;  // x = -c0 mod (x + c0)
    else
      e[1] = 1;
    for (int t = 0; t < k; ++t) {
      Poly e2 = detail::poly_mulmod(e, e, m);
      e = detail::poly_mulmod(e2, e, m);
    }
    return e;
  };

  Poly x(static_cast<std::size_t>(n) + 1, 0);
  if (n == 1)
    x[0] = (3 - mod[0]) % 3;
  else
    x[1] = 1;

  if (!detail::poly_eq(frob_iter(n), x)) return false;
  // x^(3^(n/p)) != x for each prime divisor p of n
  int t = n;
  for (int p = 2; p <= t; ++p) {
    if (t % p != 0) continue;
    if (detail::poly_eq(frob_iter(n / p), x)) return false;
    while (t % p == 0) t /= p;
  }
  return true;
}

inline F3nCtx::F3nCtx(int n) : n_(n) {
  if (n < 1 || n > kMaxDegree || n % 2 == 0)
    throw std::invalid_argument(
        "GF(3^n): n must be odd and between 1 and 9");
  q_ = 1;
  for (int i = 0; i < n; ++i) q_ *= 3;

  switch (n) {
    case 1: mod_ = {0}; break;
    case 3: mod_ = {1, 2, 0}; break;
    case 5: mod_ = {1, 2, 0, 0, 0}; break;
    case 7: mod_ = {2, 0, 1, 0, 0, 0, 0}; break;
    case 9: mod_ = {2, 0, 0, 0, 1, 0, 0, 0, 0}; break;
    default: throw std::logic_error("unreachable");
  }
  if (!is_irreducible(mod_, n))
    throw std::logic_error("GF(3^n): fixed modulus is not irreducible");

  // x^{n+t} mod modulus, by repeated shift-and-reduce
  Coeffs cur{};  // x^n mod m = -mod_
  for (int i = 0; i < n; ++i)
    cur[i] = static_cast<std::uint8_t>((3 - mod_[i]) % 3);
  red_[0] = cur;
  for (int t = 1; t <= n - 2; ++t) {
    Coeffs next{};
    std::uint8_t carry = cur[static_cast<std::size_t>(n - 1)];
    for (int i = n - 1; i >= 1; --i) next[i] = cur[i - 1];
    next[0] = 0;
    if (carry)
      for (int i = 0; i < n; ++i)
        next[i] = static_cast<std::uint8_t>(
            (next[i] + carry * red_[0][i]) % 3);
    red_[static_cast<std::size_t>(t)] = next;
    cur = next;
  }

  // frobenius / theta matrices: images of basis monomials
  for (int i = 0; i < n; ++i) {
    Coeffs xi{};
    xi[i] = 1;
    Coeffs x3{}, tmp{};
    mul(xi, xi, tmp);
    mul(tmp, xi, x3);
    frob_[i] = x3;
  }
  int te = theta_exponent();
  for (int i = 0; i < n; ++i) {
    Coeffs v{};
    v[i] = 1;
    for (int t = 0; t < te; ++t) {
      Coeffs w{};
      apply(frob_, v, w);
      v = w;
    }
    theta_[i] = v;
  }
}

inline void F3nCtx::inverse(const Coeffs& a, Coeffs& out) const {
  // extended Euclid over GF(3)[x]
  using detail::Poly;
  Poly r0(static_cast<std::size_t>(n_) + 1, 0);
  for (int i = 0; i < n_; ++i) r0[static_cast<std::size_t>(i)] = mod_[i];
  r0[static_cast<std::size_t>(n_)] = 1;
  Poly r1(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i) r1[static_cast<std::size_t>(i)] = a[i];
  Poly s0(1, 0), s1(1, 1);  // coefficients of a in the Bezout identity

  while (detail::poly_deg(r1) > 0) {
    // divide r0 by r1
    Poly q(r0.size(), 0);
    Poly rem = r0;
    int d1 = detail::poly_deg(r1);
    int lead = r1[static_cast<std::size_t>(d1)];
    int lead_inv = lead == 1 ? 1 : 2;
    for (int d = detail::poly_deg(rem); d >= d1; d = detail::poly_deg(rem)) {
      int f = (rem[static_cast<std::size_t>(d)] * lead_inv) % 3;
      q[static_cast<std::size_t>(d - d1)] = f;
      for (int j = 0; j <= d1; ++j) {
        auto& c = rem[static_cast<std::size_t>(d - d1 + j)];
        c = ((c - f * r1[static_cast<std::size_t>(j)]) % 3 + 3) % 3;
      }
    }
    // s_next = s0 - q*s1
    Poly qs(q.size() + s1.size(), 0);
    for (std::size_t i = 0; i < q.size(); ++i)
      if (q[i])
        for (std::size_t j = 0; j < s1.size(); ++j)
          qs[i + j] = (qs[i + j] + q[i] * s1[j]) % 3;
    Poly snext(std::max(s0.size(), qs.size()), 0);
    for (std::size_t i = 0; i < snext.size(); ++i) {
      int v0 = i < s0.size() ? s0[i] : 0;
      int v1 = i < qs.size() ? qs[i] : 0;
      snext[i] = ((v0 - v1) % 3 + 3) % 3;
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(snext);
  }
  if (detail::poly_deg(r1) < 0)
    throw std::domain_error("GF(3^n): inversion of 0");
  // r1 is a nonzero constant c; inverse = s1 / c
  int c = r1[0];
  int c_inv = c == 1 ? 1 : 2;
  out = Coeffs{};
  for (int i = 0; i < n_ && i < static_cast<int>(s1.size()); ++i)
    out[i] = static_cast<std::uint8_t>((s1[static_cast<std::size_t>(i)] *
                                        c_inv) % 3);
}

inline std::string F3nCtx::modulus_str() const {
  std::string s = "x^" + std::to_string(n_);
  if (n_ == 1) s = "x";
  for (int i = n_ - 1; i >= 0; --i) {
    int c = mod_[i];
    if (!c) continue;
    s += "+";
    if (i == 0) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c);
      s += i == 1 ? "x" : ("x^" + std::to_string(i));
    }
  }
  return s;
}

}  // namespace reeunital
