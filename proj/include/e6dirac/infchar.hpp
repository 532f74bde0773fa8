#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "root_datum.hpp"

namespace e6 {

/// Dominant integral infinitesimal character sum n_i zeta_i.
struct InfChar {
  std::array<std::int64_t, kRank> n{};

  InfChar() = default;
  InfChar(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t e, std::int64_t f) : n{a, b, c, d, e, f} {
    for (auto x : n)
      if (x < 0) throw DomainError("InfChar coordinates must be nonnegative");
  }

  AmbientVector ambient(const RootDatum& d) const {
    AmbientVector v;
    for (std::size_t i = 0; i < kRank; ++i) v += Rational(n[i]) * d.fundamental_weights[i];
    return v;
  }

  /// Converts exact zeta-coordinates; fails unless they are nonnegative integers.
  static InfChar from_zeta(const Coords6& z) {
    InfChar l;
    for (std::size_t i = 0; i < kRank; ++i) {
      if (!is_integer(z[i]) || z[i] < 0) throw DomainError("not a dominant integral infinitesimal character: " + bracket(z));
      l.n[i] = z[i].numerator();
    }
    return l;
  }

  /// Componentwise order: this <= o iff every coordinate of o - this is >= 0.
  bool precedes(const InfChar& o) const {
    for (std::size_t i = 0; i < kRank; ++i)
      if (n[i] > o.n[i]) return false;
    return true;
  }

  friend bool operator==(const InfChar& a, const InfChar& b) { return a.n == b.n; }
  friend bool operator!=(const InfChar& a, const InfChar& b) { return a.n != b.n; }
  friend bool operator<(const InfChar& a, const InfChar& b) { return a.n < b.n; }
};

inline Rational norm_sq(const RootDatum& d, const InfChar& l) { return norm_sq(l.ambient(d)); }

inline std::string to_string(const InfChar& l) {
  std::string out = "[";
  for (std::size_t i = 0; i < kRank; ++i) {
    if (i) out += ",";
    out += std::to_string(l.n[i]);
  }
  return out + "]";
}

inline std::ostream& operator<<(std::ostream& os, const InfChar& l) { return os << to_string(l); }

inline InfChar parse_infchar(std::string_view s) { return InfChar::from_zeta(parse_bracket(s)); }

struct InfCharHash {
  std::size_t operator()(const InfChar& l) const noexcept {
    std::size_t h = 0;
    for (auto x : l.n) h = h * 1000003u + static_cast<std::size_t>(x);
    return h;
  }
};

}  // namespace e6
