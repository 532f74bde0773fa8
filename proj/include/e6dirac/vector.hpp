#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rational.hpp"

namespace e6 {

inline constexpr std::size_t kAmbientDim = 8;
inline constexpr std::size_t kRank = 6;

/// A point of the 8-coordinate realization of the weight space. The bilinear
/// form B is the standard dot product in these coordinates.
class AmbientVector {
 public:
  AmbientVector() = default;
  explicit AmbientVector(const std::array<Rational, kAmbientDim>& c) : c_(c) {}
  AmbientVector(std::initializer_list<Rational> xs) {
    if (xs.size() != kAmbientDim) throw std::invalid_argument("AmbientVector needs 8 coordinates");
    std::size_t i = 0;
    for (const auto& x : xs) c_[i++] = x;
  }

  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const std::array<Rational, kAmbientDim>& coords() const { return c_; }

  AmbientVector& operator+=(const AmbientVector& o) {
    for (std::size_t i = 0; i < kAmbientDim; ++i) c_[i] += o.c_[i];
    return *this;
  }
  AmbientVector& operator-=(const AmbientVector& o) {
    for (std::size_t i = 0; i < kAmbientDim; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  AmbientVector& operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  friend AmbientVector operator+(AmbientVector a, const AmbientVector& b) { return a += b; }
  friend AmbientVector operator-(AmbientVector a, const AmbientVector& b) { return a -= b; }
  friend AmbientVector operator*(const Rational& s, AmbientVector a) { return a *= s; }
  friend AmbientVector operator*(AmbientVector a, const Rational& s) { return a *= s; }
  friend AmbientVector operator-(AmbientVector a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend bool operator==(const AmbientVector& a, const AmbientVector& b) { return a.c_ == b.c_; }
  friend bool operator!=(const AmbientVector& a, const AmbientVector& b) { return !(a == b); }
  friend bool operator<(const AmbientVector& a, const AmbientVector& b) { return a.c_ < b.c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

 private:
  std::array<Rational, kAmbientDim> c_{};
};

/// B(u, v).
inline Rational dot(const AmbientVector& u, const AmbientVector& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < kAmbientDim; ++i)
    if (u[i] != 0 && v[i] != 0) s += u[i] * v[i];
  return s;
}

inline Rational norm_sq(const AmbientVector& v) { return dot(v, v); }

/// Comma-separated "p/q" coordinates.
inline std::string to_string(const AmbientVector& v) {
  std::string out;
  for (std::size_t i = 0; i < kAmbientDim; ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const AmbientVector& v) { return os << "(" << to_string(v) << ")"; }

inline AmbientVector parse_ambient(std::string_view s) {
  s = detail::trim(s);
  if (!s.empty() && (s.front() == '(' || s.front() == '[')) s = s.substr(1, s.size() - 2);
  AmbientVector v;
  std::size_t i = 0;
  while (true) {
    auto comma = s.find(',');
    if (i >= kAmbientDim) throw std::invalid_argument("too many coordinates");
    v[i++] = parse_rational(s.substr(0, comma));
    if (comma == std::string_view::npos) break;
    s = s.substr(comma + 1);
  }
  if (i != kAmbientDim) throw std::invalid_argument("expected 8 coordinates");
  return v;
}

struct AmbientVectorHash {
  std::size_t operator()(const AmbientVector& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < kAmbientDim; ++i) {
      h ^= std::hash<std::int64_t>{}(v[i].numerator()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h ^= std::hash<std::int64_t>{}(v[i].denominator()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// Six rational coordinates; used for the zeta basis, the K basis and atlas
/// parameters.
using Coords6 = std::array<Rational, kRank>;

/// "[a,b,c,d,e,f]" with rationals rendered as "p/q".
inline std::string bracket(const Coords6& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < kRank; ++i) {
    if (i) out += ",";
    out += to_string(c[i]);
  }
  return out + "]";
}

/// Parses "[a,b,c,d,e,f]" (brackets optional, whitespace tolerated). Also
/// accepts the atlas form "[a,b,c,d,e,f]/q".
inline Coords6 parse_bracket(std::string_view s) {
  s = detail::trim(s);
  Rational scale = 1;
  if (auto close = s.rfind(']'); close != std::string_view::npos && close + 1 < s.size()) {
    auto tail = detail::trim(s.substr(close + 1));
    if (tail.empty() || tail.front() != '/') throw std::invalid_argument("bad bracket suffix: " + std::string(s));
    scale = Rational(1, detail::parse_int(tail.substr(1)));
    s = s.substr(0, close + 1);
  }
  if (!s.empty() && s.front() == '[') s.remove_prefix(1);
  if (!s.empty() && s.back() == ']') s.remove_suffix(1);
  Coords6 c{};
  std::size_t i = 0;
  while (true) {
    auto comma = s.find(',');
    if (i >= kRank) throw std::invalid_argument("too many coordinates in " + std::string(s));
    c[i++] = parse_rational(s.substr(0, comma)) * scale;
    if (comma == std::string_view::npos) break;
    s = s.substr(comma + 1);
  }
  if (i != kRank) throw std::invalid_argument("expected 6 coordinates");
  return c;
}

inline Coords6 coords6(std::initializer_list<std::int64_t> xs) {
  if (xs.size() != kRank) throw std::invalid_argument("expected 6 coordinates");
  Coords6 c{};
  std::size_t i = 0;
  for (auto x : xs) c[i++] = x;
  return c;
}

}  // namespace e6
