#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "infchar.hpp"
#include "ktype_norms.hpp"

namespace e6 {

/// Weights of the spin module: half-sums (1/2) sum eps_k beta_k over the 16
/// positive noncompact roots, one entry per sign vector.
struct SpinWeightMultiset {
  std::unordered_map<AmbientVector, std::int64_t, AmbientVectorHash> entries;

  std::int64_t total() const {
    std::int64_t t = 0;
    for (const auto& [w, m] : entries) t += m;
    return t;
  }
};

inline SpinWeightMultiset build_spin_weights(const RootDatum& d) {
  SpinWeightMultiset s;
  s.entries[AmbientVector{}] = 1;
  const Rational h(1, 2);
  for (const auto& beta : d.noncompact_positive) {
    SpinWeightMultiset next;
    for (const auto& [w, m] : s.entries) {
      next.entries[w + h * beta] += m;
      next.entries[w - h * beta] += m;
    }
    s = std::move(next);
  }
  return s;
}

inline const SpinWeightMultiset& spin_weights() {
  static const SpinWeightMultiset s = build_spin_weights(e6_datum());
  return s;
}

/// Brauer-Klimyk decomposition of E_mu (x) S into K-types, with multiplicities.
inline std::map<KTypeWeight, std::int64_t> tensor_with_spin(const RootDatum& d, const SpinWeightMultiset& spin, const KTypeWeight& mu) {
  if (!is_ktype_weight(mu)) throw DomainError("tensor_with_spin: " + to_string(mu) + " is not a K-type highest weight");
  const AmbientVector shifted = d.ktype_to_ambient(mu) + d.rho_c;
  std::map<KTypeWeight, std::int64_t> acc;
  for (const auto& [nu, m] : spin.entries) {
    const auto dc = make_dominant(d, shifted + nu, RootSystem::compact);
    // Singular on some compact root iff the dominant conjugate is.
    if (!is_strictly_dominant(d, dc.vector, RootSystem::compact)) continue;
    acc[d.ambient_to_ktype(dc.vector - d.rho_c)] += dc.parity() * m;
  }
  std::map<KTypeWeight, std::int64_t> out;
  for (const auto& [k, c] : acc) {
    if (c < 0) throw std::logic_error("tensor_with_spin: negative multiplicity at " + to_string(k));
    if (c > 0) out.emplace(k, c);
  }
  return out;
}

inline std::map<KTypeWeight, std::int64_t> tensor_with_spin(const KTypeWeight& mu) {
  return tensor_with_spin(e6_datum(), spin_weights(), mu);
}

/// atlas parameter a branching was computed from: KGB element, lambda, nu.
struct SourceParameter {
  std::int64_t x = 0;
  Coords6 lambda{}, nu{};

  friend bool operator==(const SourceParameter&, const SourceParameter&) = default;
};

/// K-types of a module up to a height bound.
struct BranchList {
  std::vector<std::pair<KTypeWeight, std::int64_t>> ktypes;
  std::int64_t height_bound = 0;
  std::optional<SourceParameter> source;

  friend bool operator==(const BranchList&, const BranchList&) = default;
};

/// Entries must be K-type highest weights with positive multiplicity and
/// atlas height within the bound.
inline void validate_branch(const BranchList& b) {
  for (const auto& [mu, m] : b.ktypes) {
    if (!is_ktype_weight(mu)) throw DomainError("branch entry " + to_string(mu) + " is not a K-type highest weight");
    if (m <= 0) throw DomainError("branch entry " + to_string(mu) + " has nonpositive multiplicity");
    if (lambda_stats(mu).height > b.height_bound)
      throw DomainError("branch entry " + to_string(mu) + " exceeds height bound " + std::to_string(b.height_bound));
  }
}

struct SpinLowest {
  std::vector<KTypeWeight> ktypes;
  Rational spin_sq;
};

inline SpinLowest spin_lowest(const BranchList& b) {
  if (b.ktypes.empty()) throw DomainError("spin_lowest: empty branch");
  SpinLowest out;
  for (const auto& [mu, m] : b.ktypes) {
    const Rational s = spin_norm(mu).norm_sq;
    if (out.ktypes.empty() || s < out.spin_sq) {
      out.spin_sq = s;
      out.ktypes.clear();
    }
    if (s == out.spin_sq) out.ktypes.push_back(mu);
  }
  return out;
}

/// ||mu||_spin^2 >= ||Lambda||^2.
inline bool dirac_inequality_holds(const KTypeWeight& mu, const InfChar& lambda) {
  return spin_norm(mu).norm_sq >= norm_sq(e6_datum(), lambda);
}

struct HDResult {
  std::map<KTypeWeight, std::int64_t> with_multiplicity;

  std::set<KTypeWeight> weights() const {
    std::set<KTypeWeight> s;
    for (const auto& [k, m] : with_multiplicity) s.insert(k);
    return s;
  }
  bool empty() const { return with_multiplicity.empty(); }
};

/// Dirac cohomology of a unitary module from its branching: zero unless the
/// Dirac inequality is an equality; otherwise the K~-types gamma of
/// E_mu (x) S, mu spin-lowest, with gamma + rho_c conjugate to Lambda.
inline HDResult dirac_cohomology(const BranchList& b, const InfChar& lambda) {
  const auto& d = e6_datum();
  for (const auto& [mu, m] : b.ktypes)
    if (!is_ktype_weight(mu)) throw DomainError("dirac_cohomology: inconsistent branch entry " + to_string(mu));
  const auto lowest = spin_lowest(b);
  const AmbientVector target = lambda.ambient(d);
  const Rational target_sq = norm_sq(target);
  HDResult out;
  if (lowest.spin_sq != target_sq) return out;
  for (const auto& [mu, m] : b.ktypes) {
    if (std::find(lowest.ktypes.begin(), lowest.ktypes.end(), mu) == lowest.ktypes.end()) continue;
    for (const auto& [gamma, c] : tensor_with_spin(mu)) {
      const AmbientVector g = d.ktype_to_ambient(gamma) + d.rho_c;
      if (norm_sq(g) != target_sq) continue;
      if (make_dominant(d, g, RootSystem::full).vector != target) continue;
      out.with_multiplicity[gamma] += m * c;
    }
  }
  return out;
}

}  // namespace e6
