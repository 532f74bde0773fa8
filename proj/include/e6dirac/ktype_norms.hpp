#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "root_datum.hpp"
#include "weyl.hpp"

namespace e6 {

/// The 27 representatives for the shared datum, computed once.
inline const std::vector<CosetRep>& e6_coset_reps() {
  static const std::vector<CosetRep> reps = minimal_coset_reps(e6_datum());
  return reps;
}

struct SpinNormResult {
  Rational norm_sq;
  std::vector<std::size_t> argmin_js;
  std::vector<AmbientVector> dominant_shifts;  // parallel to argmin_js
};

/// {mu - rho_n^(j)} + rho_c for every j, in coset-rep order.
inline std::vector<AmbientVector> spin_shifts(const RootDatum& d, const std::vector<CosetRep>& reps, const KTypeWeight& mu) {
  const AmbientVector m = d.ktype_to_ambient(mu);
  std::vector<AmbientVector> out;
  out.reserve(reps.size());
  for (const auto& r : reps) out.push_back(make_dominant(d, m - r.rho_n_shift, RootSystem::compact).vector + d.rho_c);
  return out;
}

inline SpinNormResult spin_norm(const RootDatum& d, const std::vector<CosetRep>& reps, const KTypeWeight& mu) {
  const auto shifts = spin_shifts(d, reps, mu);
  SpinNormResult res;
  for (std::size_t j = 0; j < shifts.size(); ++j) {
    const Rational n = norm_sq(shifts[j]);
    if (res.argmin_js.empty() || n < res.norm_sq) {
      res.norm_sq = n;
      res.argmin_js.clear();
      res.dominant_shifts.clear();
    } else if (n != res.norm_sq) {
      continue;
    }
    res.argmin_js.push_back(j);
    res.dominant_shifts.push_back(shifts[j]);
  }
  return res;
}

inline SpinNormResult spin_norm(const KTypeWeight& mu) { return spin_norm(e6_datum(), e6_coset_reps(), mu); }

struct LambdaResult {
  AmbientVector lambda_a;
  Rational norm_sq;
  std::int64_t height = 0;
};

/// Chamber-free lambda statistics: conjugate mu + 2 rho_c to the dominant
/// chamber by w, project (that - rho) onto the dominant cone, and carry the
/// projection back by w^-1.
inline LambdaResult lambda_stats(const RootDatum& d, const KTypeWeight& mu, TieBreak order = TieBreak::lowest_index) {
  const AmbientVector m = d.ktype_to_ambient(mu);
  if (!is_ktype_weight(mu)) throw DomainError("lambda_stats: " + to_string(mu) + " is not a K-type highest weight");
  const auto dc = make_dominant(d, m + 2 * d.rho_c, RootSystem::full, order);
  const AmbientVector q = project_dominant_cone(d, dc.vector - d.rho);
  const Rational h = dot(q, 2 * d.rho);
  if (!is_integer(h)) throw std::logic_error("lambda_stats: non-integral height " + to_string(h) + " for " + to_string(mu));
  return {dc.element(d).inverse()(q), norm_sq(q), to_integer(h)};
}

inline LambdaResult lambda_stats(const KTypeWeight& mu) { return lambda_stats(e6_datum(), mu); }

/// One inequality coef . [a..f] <= rhs of the u-small region.
struct LinearInequality {
  std::array<Rational, 6> coef;
  Rational rhs;
};

/// The 27 x 6 conditions B(mu + 2 rho_c, w^(j) zeta_i) <= 2 B(rho, zeta_i),
/// rewritten as linear conditions on the K-coordinates of mu.
inline std::vector<LinearInequality> usmall_inequalities(const RootDatum& d, const std::vector<CosetRep>& reps) {
  std::array<AmbientVector, 6> basis;
  for (std::size_t l = 0; l < 6; ++l) {
    Coords6 e{};
    e[l] = 1;
    basis[l] = d.ktype_to_ambient(KTypeWeight(e));
  }
  std::vector<LinearInequality> rows;
  for (const auto& r : reps) {
    for (std::size_t i = 0; i < kRank; ++i) {
      const AmbientVector g = r.w(d.fundamental_weights[i]);
      LinearInequality ineq;
      for (std::size_t l = 0; l < 6; ++l) ineq.coef[l] = dot(basis[l], g);
      ineq.rhs = 2 * dot(d.rho, d.fundamental_weights[i]) - dot(2 * d.rho_c, g);
      rows.push_back(ineq);
    }
  }
  return rows;
}

inline const std::vector<LinearInequality>& e6_usmall_inequalities() {
  static const auto rows = usmall_inequalities(e6_datum(), e6_coset_reps());
  return rows;
}

inline bool is_usmall(const KTypeWeight& mu) {
  for (const auto& ineq : e6_usmall_inequalities()) {
    Rational lhs;
    for (std::size_t l = 0; l < 6; ++l) lhs += ineq.coef[l] * mu.k[l];
    if (lhs > ineq.rhs) return false;
  }
  return true;
}

/// Integer bounds lo[l] <= mu_l <= hi[l] for every point of the u-small
/// region with a..e >= 0, from one exact LP per direction.
struct CoordinateBounds {
  std::array<std::int64_t, 6> lo{}, hi{};
};

CoordinateBounds usmall_bounds();

/// All K(R)-type highest weights in the u-small region. The LP box bounds
/// a..e; for each (a..e) the admissible f form an interval read off directly
/// from the inequalities.
std::vector<KTypeWeight> enumerate_usmall();

}  // namespace e6
