#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace boost {
// With C++20 rewritten comparisons, boost's mixed rational/int operator==
// selects its own reversed form and recurses forever. Exact-match overloads
// take precedence over those templates.
inline bool operator==(const rational<std::int64_t>& a, int b) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator==(int b, const rational<std::int64_t>& a) { return a == b; }
inline bool operator==(const rational<std::int64_t>& a, long b) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator==(long b, const rational<std::int64_t>& a) { return a == b; }
inline bool operator==(const rational<std::int64_t>& a, long long b) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator==(long long b, const rational<std::int64_t>& a) { return a == b; }
}  // namespace boost

namespace e6 {

/// Exact scalar used everywhere. Always kept in lowest terms with a positive
/// denominator.
using Rational = boost::rational<std::int64_t>;

/// Raised for arguments outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

inline std::int64_t to_integer(const Rational& r) {
  if (!is_integer(r)) throw DomainError("not an integer: " + std::to_string(r.numerator()) + "/" + std::to_string(r.denominator()));
  return r.numerator();
}

inline std::int64_t floor(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

inline std::int64_t ceil(const Rational& r) { return -floor(-r); }

/// "p/q", denominator omitted when 1.
inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

namespace detail {
inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

inline std::int64_t parse_int(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t pos = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    pos = 1;
  }
  if (pos == s.size()) throw std::invalid_argument("bad integer: " + std::string(s));
  std::int64_t v = 0;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (c < '0' || c > '9') throw std::invalid_argument("bad integer: " + std::string(s));
    v = v * 10 + (c - '0');
  }
  return neg ? -v : v;
}
}  // namespace detail

/// Parses "p", "p/q" or "-p/q".
inline Rational parse_rational(std::string_view s) {
  s = detail::trim(s);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_int(s));
  auto den = detail::parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
  return Rational(detail::parse_int(s.substr(0, slash)), den);
}

}  // namespace e6
