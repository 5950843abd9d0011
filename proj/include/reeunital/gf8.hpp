#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace reeunital {

/// An element of GF(8) = GF(2)[u]/(u^3 + u + 1), stored as three
/// coefficient bits (bit i is the coefficient of u^i).
///
/// The nonzero elements are the powers u^0 .. u^6 with u^7 = 1.
class F8 {
public:
  constexpr F8() : bits_(0) {}
  constexpr explicit F8(std::uint8_t bits) : bits_(bits & 7u) {}

  static constexpr F8 zero() { return F8(0); }
  static constexpr F8 one() { return F8(1); }
  static constexpr F8 u() { return F8(2); }

  /// u^k (k taken mod 7). The zero element is not a power of u.
  static F8 from_power(int k) {
    int r = k % 7;
    if (r < 0) r += 7;
    return pow_table()[static_cast<std::size_t>(r)];
  }

  constexpr std::uint8_t bits() const { return bits_; }
  constexpr bool is_zero() const { return bits_ == 0; }

  friend constexpr F8 operator+(F8 a, F8 b) { return F8(a.bits_ ^ b.bits_); }
  friend F8 operator*(F8 a, F8 b) { return F8(mul_table()[a.bits_][b.bits_]); }

  F8 inverse() const {
    if (bits_ == 0) throw std::domain_error("F8: inversion of 0");
    return from_power(7 - log());
  }

  F8 pow(int e) const {
    if (bits_ == 0) {
      if (e == 0) return one();
      if (e < 0) throw std::domain_error("F8: negative power of 0");
      return zero();
    }
    return from_power(log() * (e % 7));
  }

  /// Discrete log base u, for nonzero elements.
  int log() const {
    if (bits_ == 0) throw std::domain_error("F8: log of 0");
    for (int k = 0; k < 7; ++k)
      if (pow_table()[static_cast<std::size_t>(k)].bits_ == bits_) return k;
    throw std::logic_error("F8: corrupt element");
  }

  std::string str() const {
    if (bits_ == 0) return "0";
    int k = log();
    if (k == 0) return "1";
    if (k == 1) return "u";
    return "u^" + std::to_string(k);
  }

  friend constexpr bool operator==(F8 a, F8 b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(F8 a, F8 b) { return a.bits_ != b.bits_; }
  friend constexpr bool operator<(F8 a, F8 b) { return a.bits_ < b.bits_; }

private:
  std::uint8_t bits_;

  // Polynomial product modulo u^3 = u + 1.
  static constexpr std::uint8_t raw_mul(std::uint8_t a, std::uint8_t b) {
    std::uint8_t r = 0;
    for (int i = 0; i < 3; ++i)
      if (a & (1u << i))
        for (int j = 0; j < 3; ++j)
          if (b & (1u << j)) r ^= static_cast<std::uint8_t>(1u << (i + j));
    // reduce u^4, u^3
    if (r & 16u) r = static_cast<std::uint8_t>((r & 15u) ^ 6u);  // u^4 = u^2+u
    if (r & 8u) r = static_cast<std::uint8_t>((r & 7u) ^ 3u);    // u^3 = u+1
    return r;
  }

  static const std::array<std::array<std::uint8_t, 8>, 8>& mul_table() {
    static const auto table = [] {
      std::array<std::array<std::uint8_t, 8>, 8> t{};
      for (std::uint8_t a = 0; a < 8; ++a)
        for (std::uint8_t b = 0; b < 8; ++b) t[a][b] = raw_mul(a, b);
      return t;
    }();
    return table;
  }

  static const std::array<F8, 7>& pow_table() {
    static const auto table = [] {
      std::array<F8, 7> t{};
      t[0] = one();
      for (int k = 1; k < 7; ++k) t[k] = t[k - 1] * u();
      return t;
    }();
    return table;
  }
};

}  // namespace reeunital
