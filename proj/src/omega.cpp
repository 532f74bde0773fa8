#include <e6dirac/omega.hpp>

#include <future>

namespace e6 {

namespace {

// Depth-first scan of {n >= 0 : n^T Q n <= bound}. With nonnegative
// off-diagonal entries the partial sums only grow, so a branch is cut as soon
// as it exceeds the bound; this also enforces n_i^2 Q_ii <= bound.
void scan_ellipsoid(const std::array<std::array<std::int64_t, kRank>, kRank>& q, std::int64_t bound,
                           std::set<InfChar>& out) {
  std::array<std::int64_t, kRank> n{};
  auto rec = [&](auto&& self, std::size_t k, std::int64_t acc) -> void {
    if (k == kRank) {
      InfChar l;
      l.n = n;
      if (!is_strongly_regular(l)) out.insert(l);
      return;
    }
    std::int64_t cross = 0;
    for (std::size_t i = 0; i < k; ++i) cross += q[k][i] * n[i];
    for (std::int64_t v = 0;; ++v) {
      const std::int64_t val = acc + q[k][k] * v * v + 2 * v * cross;
      if (val > bound) break;
      n[k] = v;
      self(self, k + 1, val);
    }
    n[k] = 0;
  };
  rec(rec, 0, 0);
}


}  // namespace

std::set<InfChar> build_omega(const RootDatum& d, const std::vector<InvolutionRecord>& thetas) {
  std::set<WeylElement::MatrixT> distinct;
  for (const auto& t : thetas) {
    if (!t.fully_supported())
      throw DomainError("build_omega: involution kgb_index=" + std::to_string(t.kgb_index) + " is not fully supported");
    distinct.insert(t.matrix);
  }
  std::vector<std::future<std::set<InfChar>>> jobs;
  for (const auto& m : distinct) {
    jobs.push_back(std::async(std::launch::async, [&d, m] {
      const QuadForm qr = quadratic_form(d, InvolutionRecord{-1, m, {}});
      if (!has_positive_sign_structure(qr)) throw std::logic_error("build_omega: quadratic form has a negative coefficient");
      std::array<std::array<std::int64_t, kRank>, kRank> q{};
      for (std::size_t i = 0; i < kRank; ++i)
        for (std::size_t j = 0; j < kRank; ++j) q[i][j] = to_integer(qr[i][j]);
      std::set<InfChar> part;
      scan_ellipsoid(q, kOmegaBound, part);
      return part;
    }));
  }
  std::set<InfChar> omega;
  for (auto& j : jobs) omega.merge(j.get());
  return omega;
}

std::set<InfChar> build_omega2(const RootDatum& d, const std::vector<CosetRep>& reps, const std::vector<KTypeWeight>& usmall) {
  std::set<InfChar> out;
  for (const auto& mu : usmall) {
    for (const auto& s : spin_shifts(d, reps, mu)) {
      const Coords6 z = d.zeta_coords(make_dominant(d, s, RootSystem::full).vector);
      const InfChar l = InfChar::from_zeta(z);
      if (!is_strongly_regular(l)) out.insert(l);
    }
  }
  return out;
}

std::set<InfChar> minimal_elements(const std::set<InfChar>& s) {
  std::set<InfChar> out;
  for (const auto& a : s) {
    bool minimal = true;
    for (const auto& b : s)
      if (b != a && b.precedes(a)) {
        minimal = false;
        break;
      }
    if (minimal) out.insert(a);
  }
  return out;
}

OmegaPartition partition_omega(const std::set<InfChar>& omega, const std::set<InfChar>& omega2, const std::set<InfChar>& v) {
  for (const auto& l : omega2)
    if (!omega.count(l)) throw DomainError("partition_omega: Omega2 is not contained in Omega (" + to_string(l) + ")");
  OmegaPartition p{omega, {}, omega2, {}, v};
  for (const auto& l : omega) {
    if (omega2.count(l)) continue;
    const bool above = std::any_of(v.begin(), v.end(), [&](const InfChar& m) { return m.precedes(l); });
    (above ? p.omega3 : p.omega1).insert(l);
  }
  return p;
}

}  // namespace e6
