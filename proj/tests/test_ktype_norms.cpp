#include <e6dirac/ktype_norms.hpp>

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace e6;

namespace {

const RootDatum& D() { return e6_datum(); }

KTypeWeight K(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t e, std::int64_t f) {
  return KTypeWeight(a, b, c, d, e, f);
}

// A random K-type: f is pushed into the residue class mod 4 that makes the
// integrality condition hold.
KTypeWeight random_ktype(std::mt19937& rng, int max_abcde, int f_range) {
  std::uniform_int_distribution<int> small(0, max_abcde), central(-f_range, f_range);
  std::array<std::int64_t, 5> x{};
  for (auto& v : x) v = small(rng);
  std::int64_t f = central(rng);
  const std::int64_t want = ((3 * x[0] + 5 * x[1] + 6 * x[2] + 4 * x[3] + 2 * x[4]) % 4 + 4) % 4;
  while (((f % 4) + 4) % 4 != want) ++f;
  return KTypeWeight(x[0], x[1], x[2], x[3], x[4], f);
}

// Dominant W(k)-conjugate by exhausting the 1920 elements.
AmbientVector brute_compact_dominant(const AmbientVector& v) {
  static const auto wk = generate_group(D(), simple_indices(RootSystem::compact));
  for (const auto& w : wk) {
    AmbientVector x = w(v);
    if (is_dominant(D(), x, RootSystem::compact)) return x;
  }
  throw std::logic_error("no dominant conjugate");
}

// u-small inequalities evaluated directly on ambient vectors.
bool brute_usmall(const KTypeWeight& mu) {
  const auto& d = D();
  const AmbientVector m = d.ktype_to_ambient(mu) + 2 * d.rho_c;
  for (const auto& r : e6_coset_reps())
    for (std::size_t i = 0; i < kRank; ++i)
      if (dot(m, r.w(d.fundamental_weights[i])) > 2 * dot(d.rho, d.fundamental_weights[i])) return false;
  return true;
}

const std::vector<KTypeWeight>& usmall() {
  static const auto all = enumerate_usmall();
  return all;
}

}  // namespace

TEST(SpinNorm, Examples) {
  EXPECT_EQ(spin_norm(K(0, 0, 0, 0, 0, 0)).norm_sq, 78);
  EXPECT_EQ(spin_norm(K(0, 0, 0, 0, 2, -24)).norm_sq, 50);
  EXPECT_EQ(spin_norm(K(0, 3, 0, 0, 0, -21)).norm_sq, 42);
}

TEST(SpinNorm, BranchKTypes) {
  const std::vector<std::pair<KTypeWeight, int>> cases{
      {K(0, 0, 0, 0, 1, -18), 42}, {K(0, 1, 0, 0, 1, -21), 42}, {K(0, 0, 0, 0, 2, -24), 50},
      {K(0, 2, 0, 0, 1, -24), 42}, {K(0, 0, 0, 0, 0, -12), 42}, {K(0, 1, 0, 0, 0, -15), 42},
      {K(0, 2, 0, 0, 0, -18), 42}, {K(0, 3, 0, 0, 0, -21), 42}};
  for (const auto& [mu, n] : cases) EXPECT_EQ(spin_norm(mu).norm_sq, n) << mu;
}

TEST(SpinNorm, MinimizingShiftOfEta1) {
  const auto& d = D();
  const KTypeWeight eta1 = K(0, 0, 0, 0, 1, -18);
  auto res = spin_norm(eta1);
  ASSERT_FALSE(res.argmin_js.empty());
  const auto& rep = e6_coset_reps()[res.argmin_js.front()];
  auto dom = make_dominant(d, d.ktype_to_ambient(eta1) - rep.rho_n_shift, RootSystem::compact);
  EXPECT_EQ(norm_sq(dom.vector + d.rho_c), 42);
}

TEST(SpinNorm, ShiftsAgreeWithExhaustiveConjugation) {
  const auto& d = D();
  const auto& reps = e6_coset_reps();
  for (const auto& mu : {K(0, 0, 0, 0, 1, -18), K(1, 0, 2, 0, 1, 3), K(0, 0, 0, 0, 0, 12)}) {
    auto shifts = spin_shifts(d, reps, mu);
    for (std::size_t j = 0; j < reps.size(); ++j)
      EXPECT_EQ(shifts[j], brute_compact_dominant(d.ktype_to_ambient(mu) - reps[j].rho_n_shift) + d.rho_c);
  }
}

TEST(SpinNorm, ResultInvariants) {
  const auto& d = D();
  std::mt19937 rng(23);
  for (int it = 0; it < 40; ++it) {
    KTypeWeight mu = random_ktype(rng, 3, 120);
    ASSERT_TRUE(is_ktype_weight(mu));
    auto res = spin_norm(mu);
    auto again = spin_norm(mu);
    ASSERT_FALSE(res.argmin_js.empty());
    EXPECT_EQ(res.argmin_js, again.argmin_js);
    for (const auto& s : res.dominant_shifts) EXPECT_EQ(norm_sq(s), res.norm_sq);
    for (const auto& s : spin_shifts(d, e6_coset_reps(), mu)) EXPECT_GE(norm_sq(s), res.norm_sq);
  }
}

TEST(Lambda, TrivialKType) {
  const auto& d = D();
  auto res = lambda_stats(K(0, 0, 0, 0, 0, 0));
  EXPECT_EQ(res.norm_sq, 5);
  EXPECT_EQ(res.height, 38);
  const Rational h(1, 2);
  const AmbientVector printed{0, h, h, 3 * h, 3 * h, 0, 0, 0};
  EXPECT_EQ(make_dominant(d, res.lambda_a, RootSystem::full).vector, make_dominant(d, printed, RootSystem::full).vector);
}

TEST(Lambda, BranchHeights) {
  // Heights printed next to the two branchings; the squared norms are the
  // "lambda norm" column values.
  const std::vector<std::tuple<KTypeWeight, std::int64_t, Rational>> cases{
      {K(0, 0, 0, 0, 1, -18), 70, 17},         {K(0, 1, 0, 0, 1, -21), 91, Rational(55, 2)},
      {K(0, 0, 0, 0, 2, -24), 94, 32},         {K(0, 2, 0, 0, 1, -24), 113, Rational(83, 2)},
      {K(0, 0, 0, 0, 0, -12), 46, 8},          {K(0, 1, 0, 0, 0, -15), 67, Rational(31, 2)},
      {K(0, 2, 0, 0, 0, -18), 88, 26},         {K(0, 3, 0, 0, 0, -21), 110, 40}};
  for (const auto& [mu, height, nsq] : cases) {
    auto res = lambda_stats(mu);
    EXPECT_EQ(res.height, height) << mu;
    EXPECT_EQ(res.norm_sq, nsq) << mu;
  }
}

TEST(Lambda, HeightIsSumOverPositiveCoroots) {
  const auto& d = D();
  std::mt19937 rng(29);
  for (int it = 0; it < 30; ++it) {
    KTypeWeight mu = random_ktype(rng, 3, 120);
    auto res = lambda_stats(mu);
    AmbientVector q = make_dominant(d, res.lambda_a, RootSystem::full).vector;
    Rational sum;
    for (const auto& a : d.positive_roots) sum += d.coroot_pairing(q, a);
    EXPECT_EQ(sum, res.height);
    EXPECT_EQ(norm_sq(res.lambda_a), res.norm_sq);
  }
}

TEST(Lambda, TieBreakIndependence) {
  const auto& d = D();
  std::mt19937 rng(31);
  for (int it = 0; it < 60; ++it) {
    // Small a..e make mu + 2 rho_c singular often enough to matter.
    KTypeWeight mu = random_ktype(rng, 2, 40);
    auto lo = lambda_stats(d, mu, TieBreak::lowest_index);
    auto hi = lambda_stats(d, mu, TieBreak::highest_index);
    EXPECT_EQ(lo.norm_sq, hi.norm_sq) << mu;
    EXPECT_EQ(lo.height, hi.height) << mu;
  }
}

TEST(Lambda, RejectsInvalidWeights) {
  EXPECT_THROW(lambda_stats(K(0, -1, 0, 0, 0, 0)), DomainError);
  EXPECT_THROW(lambda_stats(K(0, 0, 0, 0, 0, 1)), DomainError);
}

TEST(USmall, Examples) {
  EXPECT_TRUE(is_usmall(K(0, 0, 0, 0, 0, 0)));
  EXPECT_TRUE(is_usmall(K(0, 0, 0, 0, 0, 12)));
  // The central direction is bounded by |f| <= 48; [0,0,0,0,0,40] is still
  // inside the region cut out by the 162 inequalities.
  EXPECT_TRUE(is_usmall(K(0, 0, 0, 0, 0, 40)));
  EXPECT_TRUE(is_usmall(K(0, 0, 0, 0, 0, -48)));
  EXPECT_FALSE(is_usmall(K(0, 0, 0, 0, 0, 52)));
  EXPECT_FALSE(is_usmall(K(0, 0, 0, 0, 0, -52)));
  EXPECT_FALSE(is_usmall(K(7, 0, 0, 0, 0, 0)));
  EXPECT_EQ(e6_usmall_inequalities().size(), 162u);
}

TEST(USmall, LinearizedRowsMatchDirectEvaluation) {
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> small(0, 6), central(-60, 60);
  for (int it = 0; it < 300; ++it) {
    KTypeWeight mu = K(small(rng), small(rng), small(rng), small(rng), small(rng), central(rng));
    EXPECT_EQ(is_usmall(mu), brute_usmall(mu)) << mu;
  }
}

TEST(USmall, Census) {
  const auto& all = usmall();
  EXPECT_EQ(all.size(), 3153u);
  std::set<KTypeWeight> distinct(all.begin(), all.end());
  EXPECT_EQ(distinct.size(), all.size());
  for (const auto& mu : all) {
    EXPECT_TRUE(is_ktype_weight(mu)) << mu;
    EXPECT_TRUE(brute_usmall(mu)) << mu;
  }
}

TEST(USmall, BoxIsExhaustive) {
  // Nothing just outside the LP box is u-small.
  const auto box = usmall_bounds();
  for (std::size_t l = 0; l < 6; ++l) {
    Coords6 c{};
    c[l] = box.hi[l] + 1;
    EXPECT_FALSE(is_usmall(KTypeWeight(c)));
  }
  Coords6 c{};
  c[5] = box.lo[5] - 1;
  EXPECT_FALSE(is_usmall(KTypeWeight(c)));
}

TEST(USmall, MinimizingShiftsAreIntegral) {
  // The shifts are K-dominant with integral zeta-coordinates; only their
  // full-W dominant conjugates have all coordinates >= 0 (zeta_1 may be
  // negative before conjugation, e.g. for [0,0,0,0,0,-48]).
  const auto& d = D();
  bool saw_negative = false;
  for (const auto& mu : usmall()) {
    auto res = spin_norm(mu);
    for (const auto& s : res.dominant_shifts) {
      const Coords6 z = d.zeta_coords(s);
      for (const auto& x : z) ASSERT_TRUE(is_integer(x)) << mu;
      for (std::size_t i = 1; i < kRank; ++i) ASSERT_GE(z[i], 0) << mu;
      saw_negative = saw_negative || z[0] < 0;
      for (const auto& x : d.zeta_coords(make_dominant(d, s, RootSystem::full).vector)) ASSERT_GE(x, 0) << mu;
    }
  }
  EXPECT_TRUE(saw_negative);
}
