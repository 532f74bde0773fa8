#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "infchar.hpp"
#include "ktype_norms.hpp"
#include "weyl.hpp"

namespace e6 {

/// Cartan involution theta_x of a KGB element, restricted to the fundamental
/// Cartan. kgb_index is -1 when the record is not tied to a specific label.
struct InvolutionRecord {
  std::int64_t kgb_index = -1;
  WeylElement::MatrixT matrix{};
  std::set<int> support;

  WeylElement element() const { return WeylElement(matrix); }
  AmbientVector apply(const AmbientVector& v) const { return element().apply(v); }
  bool fully_supported() const { return support.size() == kRank; }

  friend bool operator==(const InvolutionRecord& a, const InvolutionRecord& b) {
    return a.kgb_index == b.kgb_index && a.matrix == b.matrix && a.support == b.support;
  }
};

/// Support of a Weyl group element: the simple roots in any reduced word.
/// w lies in W_J iff it fixes zeta_i for every i outside J.
inline std::set<int> weyl_support(const RootDatum& d, const WeylElement& w) {
  std::set<int> s;
  for (std::size_t i = 0; i < kRank; ++i)
    if (w(d.fundamental_weights[i]) != d.fundamental_weights[i]) s.insert(static_cast<int>(i));
  return s;
}

/// Rejects anything that is not an involution of the root system with the
/// stated support. The message names the record.
inline void validate_involution(const RootDatum& d, const InvolutionRecord& r) {
  const std::string who = "involution record kgb_index=" + std::to_string(r.kgb_index) + ": ";
  const WeylElement w = r.element();
  if (!(w * w).is_identity()) throw DomainError(who + "theta^2 != id");
  if (!(w * w.inverse()).is_identity()) throw DomainError(who + "theta does not preserve B");
  for (const auto& a : d.all_roots)
    if (!d.is_root(w(a))) throw DomainError(who + "theta does not permute the roots");
  if (weyl_support(d, w) != r.support) throw DomainError(who + "support does not match the matrix");
}

inline InvolutionRecord make_involution(const RootDatum& d, const WeylElement& w, std::int64_t kgb_index = -1) {
  InvolutionRecord r{kgb_index, w.matrix(), weyl_support(d, w)};
  validate_involution(d, r);
  return r;
}

/// Lambda - rho = sum (n_i - 1) zeta_i, so every coordinate must be >= 1.
inline bool is_strongly_regular(const InfChar& l) {
  return std::all_of(l.n.begin(), l.n.end(), [](std::int64_t x) { return x >= 1; });
}

/// Conjectured shape of the infinitesimal character of a fully supported
/// module with nonzero Dirac cohomology: all coordinates 0 or 1.
inline bool conjecture_check(const InfChar& l) {
  return std::all_of(l.n.begin(), l.n.end(), [](std::int64_t x) { return x == 0 || x == 1; });
}

/// (Lambda - theta Lambda) / 2.
inline AmbientVector nu_of(const RootDatum& d, const InfChar& l, const InvolutionRecord& theta) {
  const AmbientVector v = l.ambient(d);
  return Rational(1, 2) * (v - theta.apply(v));
}

/// (1 + theta) lambda / 2 + nu, made dominant; lambda and nu in zeta-coordinates.
inline InfChar infchar_from_parameter(const RootDatum& d, const InvolutionRecord& theta, const Coords6& lambda, const Coords6& nu) {
  const AmbientVector l = d.from_zeta(lambda);
  const AmbientVector gamma = Rational(1, 2) * (l + theta.apply(l)) + d.from_zeta(nu);
  const Coords6 z = d.zeta_coords(make_dominant(d, gamma, RootSystem::full).vector);
  for (const auto& x : z)
    if (!is_integer(x)) throw DomainError("non-integral infinitesimal character " + bracket(z));
  return InfChar::from_zeta(z);
}

using QuadForm = std::array<std::array<Rational, kRank>, kRank>;

/// Q with ||Lambda - theta Lambda||^2 = n^T Q n.
inline QuadForm quadratic_form(const RootDatum& d, const InvolutionRecord& theta) {
  std::array<AmbientVector, kRank> img;
  for (std::size_t i = 0; i < kRank; ++i) img[i] = d.fundamental_weights[i] - theta.apply(d.fundamental_weights[i]);
  QuadForm q;
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t j = 0; j < kRank; ++j) q[i][j] = dot(img[i], img[j]);
  return q;
}

inline Rational evaluate(const QuadForm& q, const InfChar& l) {
  Rational s = 0;
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t j = 0; j < kRank; ++j) s += q[i][j] * l.n[i] * l.n[j];
  return s;
}

/// Positive diagonal and nonnegative off-diagonal entries.
inline bool has_positive_sign_structure(const QuadForm& q) {
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t j = 0; j < kRank; ++j) {
      if (i == j && q[i][i] <= 0) return false;
      if (i != j && q[i][j] < 0) return false;
    }
  return true;
}

/// ||2 rho||^2.
inline constexpr std::int64_t kOmegaBound = 312;

/// Omega: non-strongly-regular Lambda with ||Lambda - theta Lambda||^2 <= 312
/// for some theta in the set.
std::set<InfChar> build_omega(const RootDatum& d, const std::vector<InvolutionRecord>& thetas);

/// Dominant conjugates of the spin shifts {mu - rho_n^(j)} + rho_c over all
/// u-small mu and all j, minus the strongly regular ones.
std::set<InfChar> build_omega2(const RootDatum& d, const std::vector<CosetRep>& reps, const std::vector<KTypeWeight>& usmall);

inline std::set<InfChar> build_omega2() { return build_omega2(e6_datum(), e6_coset_reps(), enumerate_usmall()); }

/// Elements of s that dominate no other element of s.
std::set<InfChar> minimal_elements(const std::set<InfChar>& s);

struct OmegaPartition {
  std::set<InfChar> omega, omega1, omega2, omega3, V;
};

/// Omega3 = members of Omega \ Omega2 above some element of V; Omega1 is the rest.
OmegaPartition partition_omega(const std::set<InfChar>& omega, const std::set<InfChar>& omega2, const std::set<InfChar>& v);

}  // namespace e6
