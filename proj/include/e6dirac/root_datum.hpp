#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "linalg.hpp"
#include "vector.hpp"

namespace e6 {

/// Highest weight of a K-type in the basis {w1..w5, zeta/4}: [a,b,c,d,e,f]
/// stands for a*w1 + ... + e*w5 + (f/4)*zeta.
struct KTypeWeight {
  Coords6 k{};

  KTypeWeight() = default;
  explicit KTypeWeight(const Coords6& c) : k(c) {}
  KTypeWeight(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t e, std::int64_t f)
      : k(coords6({a, b, c, d, e, f})) {}

  friend bool operator==(const KTypeWeight& x, const KTypeWeight& y) { return x.k == y.k; }
  friend bool operator!=(const KTypeWeight& x, const KTypeWeight& y) { return x.k != y.k; }
  friend bool operator<(const KTypeWeight& x, const KTypeWeight& y) { return x.k < y.k; }
};

inline std::string to_string(const KTypeWeight& mu) { return bracket(mu.k); }
inline std::ostream& operator<<(std::ostream& os, const KTypeWeight& mu) { return os << to_string(mu); }
inline KTypeWeight parse_ktype(std::string_view s) { return KTypeWeight(parse_bracket(s)); }

struct KTypeWeightHash {
  std::size_t operator()(const KTypeWeight& mu) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (const auto& x : mu.k) {
      h ^= std::hash<std::int64_t>{}(x.numerator()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h ^= std::hash<std::int64_t>{}(x.denominator()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// The E6(-14) root datum in the 8-coordinate realization. Immutable after
/// construction.
class RootDatum {
 public:
  std::array<AmbientVector, kRank> simple_roots;
  std::vector<AmbientVector> all_roots;  // positives (by height) followed by their negatives
  std::vector<AmbientVector> positive_roots;
  std::vector<AmbientVector> compact_positive;
  std::vector<AmbientVector> noncompact_positive;
  std::array<AmbientVector, kRank> fundamental_weights;  // zeta_1..zeta_6
  std::array<AmbientVector, 5> k_simple_roots;           // gamma_i = alpha_{i+1}
  std::array<AmbientVector, 5> k_fundamental_weights;    // varpi_1..varpi_5, orthogonal to zeta
  AmbientVector rho, rho_c, rho_n, zeta;
  AmbientVector beta;  // highest weight of p+

  bool is_root(const AmbientVector& v) const { return root_index_.count(v) != 0; }
  std::size_t root_index(const AmbientVector& v) const {
    auto it = root_index_.find(v);
    if (it == root_index_.end()) throw DomainError("not a root: " + to_string(v));
    return it->second;
  }

  /// A root is compact iff it is orthogonal to zeta.
  bool is_compact(const AmbientVector& alpha) const { return dot(alpha, zeta) == 0; }

  /// <v, alpha^vee> = 2B(v,alpha)/B(alpha,alpha); alpha must be a root.
  Rational coroot_pairing(const AmbientVector& v, const AmbientVector& alpha) const {
    if (!is_root(alpha)) throw DomainError("coroot_pairing: not a root: " + to_string(alpha));
    return 2 * dot(v, alpha) / dot(alpha, alpha);
  }

  /// Coefficients of v along alpha_1..alpha_6 (v must lie in the root span).
  Coords6 simple_coords(const AmbientVector& v) const {
    Coords6 c{};
    for (std::size_t i = 0; i < kRank; ++i) c[i] = dot(v, fundamental_weights[i]);
    return c;
  }

  bool in_weight_space(const AmbientVector& v) const { return from_zeta(raw_zeta_coords(v)) == v; }

  /// Coordinates of v in the basis zeta_1..zeta_6.
  Coords6 zeta_coords(const AmbientVector& v) const {
    Coords6 c = raw_zeta_coords(v);
    if (from_zeta(c) != v) throw DomainError("not in weight space: " + to_string(v));
    return c;
  }

  AmbientVector from_zeta(const Coords6& c) const {
    AmbientVector v;
    for (std::size_t i = 0; i < kRank; ++i)
      if (c[i] != 0) v += c[i] * fundamental_weights[i];
    return v;
  }

  /// a*w1+...+e*w5 + (f/4) zeta.
  AmbientVector ktype_to_ambient(const KTypeWeight& mu) const {
    AmbientVector v = (mu.k[5] / 4) * zeta;
    for (std::size_t i = 0; i < 5; ++i)
      if (mu.k[i] != 0) v += mu.k[i] * k_fundamental_weights[i];
    return v;
  }

  /// Inverse of ktype_to_ambient on the weight space.
  KTypeWeight ambient_to_ktype(const AmbientVector& v) const {
    if (!in_weight_space(v)) throw DomainError("not in weight space: " + to_string(v));
    KTypeWeight mu;
    for (std::size_t i = 0; i < 5; ++i) mu.k[i] = dot(v, k_simple_roots[i]);
    mu.k[5] = 4 * dot(v, zeta) / dot(zeta, zeta);
    return mu;
  }

  /// K-basis coordinates re-expressed in the zeta basis.
  Coords6 ktype_to_zeta(const KTypeWeight& mu) const { return zeta_coords(ktype_to_ambient(mu)); }
  KTypeWeight zeta_to_ktype(const Coords6& c) const { return ambient_to_ktype(from_zeta(c)); }

 private:
  friend RootDatum build_e6_datum();

  Coords6 raw_zeta_coords(const AmbientVector& v) const {
    Coords6 c{};
    for (std::size_t i = 0; i < kRank; ++i) c[i] = dot(v, simple_roots[i]);
    return c;
  }

  std::unordered_map<AmbientVector, std::size_t, AmbientVectorHash> root_index_;
};

namespace detail {

[[noreturn]] inline void datum_bug(const std::string& what) {
  throw std::logic_error("root datum construction failed: " + what);
}

inline AmbientVector half_sum(const std::vector<AmbientVector>& roots) {
  AmbientVector s;
  for (const auto& r : roots) s += r;
  return Rational(1, 2) * s;
}

}  // namespace detail

/// Builds the E6(-14) datum: simple roots of the Vogan diagram, root closure,
/// fundamental weights by exact solve, and the K-side bases.
inline RootDatum build_e6_datum() {
  RootDatum d;
  const Rational h(1, 2);
  auto unit = [](std::size_t i) {
    AmbientVector v;
    v[i] = 1;
    return v;
  };
  d.simple_roots[0] = AmbientVector{h, -h, -h, -h, -h, -h, -h, h};
  d.simple_roots[1] = unit(0) + unit(1);
  for (std::size_t i = 3; i <= 6; ++i) d.simple_roots[i - 1] = unit(i - 2) - unit(i - 3);

  // Closure: for distinct roots a, b in a simply-laced system a+b is a root
  // iff B(a,b) = -1.
  std::vector<AmbientVector> roots;
  std::unordered_set<AmbientVector, AmbientVectorHash> seen;
  for (const auto& a : d.simple_roots) {
    for (const auto& r : {a, -a})
      if (seen.insert(r).second) roots.push_back(r);
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (i == j || dot(roots[i], roots[j]) != -1) continue;
      AmbientVector s = roots[i] + roots[j];
      if (seen.insert(s).second) roots.push_back(s);
    }
  }

  // Fundamental weights: zeta_i = sum_k (C^{-1})_{ik} alpha_k.
  linalg::Matrix cartan = linalg::zeros(kRank, kRank);
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t j = 0; j < kRank; ++j) cartan[i][j] = dot(d.simple_roots[i], d.simple_roots[j]);
  auto cinv = linalg::inverse(cartan);
  if (!cinv) detail::datum_bug("singular Cartan matrix");
  for (std::size_t i = 0; i < kRank; ++i) {
    AmbientVector w;
    for (std::size_t k = 0; k < kRank; ++k) w += (*cinv)[i][k] * d.simple_roots[k];
    d.fundamental_weights[i] = w;
  }

  auto height_key = [&](const AmbientVector& r) {
    Coords6 c = d.simple_coords(r);
    Rational ht = std::accumulate(c.begin(), c.end(), Rational(0));
    return std::make_pair(ht, c);
  };
  for (const auto& r : roots) {
    Coords6 c = d.simple_coords(r);
    bool nonneg = std::all_of(c.begin(), c.end(), [](const Rational& x) { return x >= 0; });
    if (nonneg) d.positive_roots.push_back(r);
  }
  std::sort(d.positive_roots.begin(), d.positive_roots.end(),
            [&](const AmbientVector& a, const AmbientVector& b) { return height_key(a) < height_key(b); });
  d.all_roots = d.positive_roots;
  for (const auto& r : d.positive_roots) d.all_roots.push_back(-r);
  for (std::size_t i = 0; i < d.all_roots.size(); ++i) d.root_index_[d.all_roots[i]] = i;

  d.zeta = d.fundamental_weights[0];
  for (const auto& r : d.positive_roots) (d.is_compact(r) ? d.compact_positive : d.noncompact_positive).push_back(r);

  for (std::size_t i = 0; i < 5; ++i) d.k_simple_roots[i] = d.simple_roots[i + 1];
  // varpi_i = zeta_{i+1} - c_i zeta_1, the linear identity relating the two bases.
  const std::array<Rational, 5> shift{Rational(3, 4), Rational(5, 4), Rational(3, 2), Rational(1), Rational(1, 2)};
  for (std::size_t i = 0; i < 5; ++i) d.k_fundamental_weights[i] = d.fundamental_weights[i + 1] - shift[i] * d.zeta;

  d.rho = detail::half_sum(d.positive_roots);
  d.rho_c = detail::half_sum(d.compact_positive);
  d.rho_n = d.rho - d.rho_c;
  d.beta = d.positive_roots.back();

  // Invariants.
  if (roots.size() != 72 || d.positive_roots.size() != 36) detail::datum_bug("root counts");
  if (d.compact_positive.size() != 20 || d.noncompact_positive.size() != 16) detail::datum_bug("compact split");
  for (const auto& r : d.all_roots)
    if (dot(r, r) != 2) detail::datum_bug("root length");
  for (const auto& r : d.noncompact_positive)
    if (dot(r, d.zeta) <= 0) detail::datum_bug("noncompact root not in p+");
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t j = 0; j < kRank; ++j)
      if (dot(d.fundamental_weights[i], d.simple_roots[j]) != (i == j ? 1 : 0)) detail::datum_bug("weight duality");
  for (std::size_t i = 0; i < 5; ++i) {
    if (dot(d.k_fundamental_weights[i], d.zeta) != 0) detail::datum_bug("varpi not orthogonal to zeta");
    for (std::size_t j = 0; j < 5; ++j)
      if (dot(d.k_fundamental_weights[i], d.k_simple_roots[j]) != (i == j ? 1 : 0)) detail::datum_bug("varpi duality");
  }
  const AmbientVector rho_expected{0, 1, 2, 3, 4, -4, -4, 4};
  const AmbientVector rho_c_expected{0, 1, 2, 3, 4, 0, 0, 0};
  if (d.rho != rho_expected || d.rho_c != rho_c_expected) detail::datum_bug("rho / rho_c");
  if (d.zeta != AmbientVector{0, 0, 0, 0, 0, Rational(-2, 3), Rational(-2, 3), Rational(2, 3)}) detail::datum_bug("zeta");
  return d;
}

/// Process-wide shared datum.
inline const RootDatum& e6_datum() {
  static const RootDatum datum = build_e6_datum();
  return datum;
}

/// Integrality test for highest weights of K(R)-types: a..e nonnegative
/// integers, f an integer, and -3a/4 - 5b/4 - 3c/2 - d - e/2 + f/4 integral.
inline bool is_ktype_weight(const KTypeWeight& mu) {
  for (std::size_t i = 0; i < 5; ++i)
    if (!is_integer(mu.k[i]) || mu.k[i] < 0) return false;
  if (!is_integer(mu.k[5])) return false;
  const auto& k = mu.k;
  Rational t = -Rational(3, 4) * k[0] - Rational(5, 4) * k[1] - Rational(3, 2) * k[2] - k[3] - Rational(1, 2) * k[4] + k[5] / 4;
  return is_integer(t);
}

/// Weyl dimension formula over the positive compact roots.
inline std::int64_t dim_ktype(const RootDatum& d, const KTypeWeight& mu) {
  for (std::size_t i = 0; i < 5; ++i)
    if (!is_integer(mu.k[i]) || mu.k[i] < 0) throw DomainError("dim_ktype: not dominant integral: " + to_string(mu));
  const AmbientVector shifted = d.ktype_to_ambient(mu) + d.rho_c;
  Rational prod = 1;
  for (const auto& a : d.compact_positive) prod *= dot(shifted, a) / dot(d.rho_c, a);
  return to_integer(prod);
}

}  // namespace e6
