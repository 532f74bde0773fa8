#include <e6dirac/fixtures.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace e6;

namespace {

const RootDatum& D() { return e6_datum(); }

const std::vector<InvolutionRecord>& thetas() {
  static const auto t = load_involutions(fixture_dir() / "kgb_involutions.json");
  return t;
}

const std::set<InfChar>& omega() {
  static const auto o = build_omega(D(), thetas());
  return o;
}

const std::set<InfChar>& omega2() {
  static const auto o = build_omega2();
  return o;
}

const InvolutionRecord& theta_of(std::int64_t x) {
  const auto* r = find_involution(thetas(), x);
  if (!r) throw std::runtime_error("no involution for x=" + std::to_string(x));
  return *r;
}

InvolutionRecord identity_theta() { return make_involution(D(), WeylElement()); }

// ||Lambda - theta Lambda||^2 straight from ambient vectors.
Rational direct_norm(const InfChar& l, const InvolutionRecord& t) {
  const AmbientVector v = l.ambient(D());
  return norm_sq(v - t.apply(v));
}

// Omega for one theta by scanning the whole box [0,12]^6 (12^2 * 2 > 312, and
// every diagonal entry is >= 2).
std::set<InfChar> brute_omega(const InvolutionRecord& t) {
  std::set<InfChar> out;
  const QuadForm qr = quadratic_form(D(), t);
  std::array<std::array<std::int64_t, kRank>, kRank> q{};
  for (std::size_t i = 0; i < kRank; ++i)
    for (std::size_t j = 0; j < kRank; ++j) q[i][j] = to_integer(qr[i][j]);
  auto value = [&](const InfChar& l) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < kRank; ++i)
      for (std::size_t j = 0; j < kRank; ++j) s += q[i][j] * l.n[i] * l.n[j];
    return s;
  };
  InfChar l;
  for (l.n[0] = 0; l.n[0] <= 12; ++l.n[0])
    for (l.n[1] = 0; l.n[1] <= 12; ++l.n[1])
      for (l.n[2] = 0; l.n[2] <= 12; ++l.n[2])
        for (l.n[3] = 0; l.n[3] <= 12; ++l.n[3])
          for (l.n[4] = 0; l.n[4] <= 12; ++l.n[4])
            for (l.n[5] = 0; l.n[5] <= 12; ++l.n[5])
              if (!is_strongly_regular(l) && value(l) <= kOmegaBound) out.insert(l);
  return out;
}

}  // namespace

TEST(StrongRegularity, Examples) {
  EXPECT_TRUE(is_strongly_regular(InfChar(1, 1, 1, 1, 1, 1)));
  EXPECT_FALSE(is_strongly_regular(InfChar(0, 1, 1, 1, 1, 1)));
  EXPECT_TRUE(is_strongly_regular(InfChar(2, 1, 1, 1, 1, 1)));
  // Same thing via <Lambda - rho, alpha_i^vee> >= 0.
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::int64_t> c(0, 3);
  for (int it = 0; it < 50; ++it) {
    InfChar l(c(rng), c(rng), c(rng), c(rng), c(rng), c(rng));
    bool pairing = true;
    for (const auto& a : D().simple_roots) pairing = pairing && D().coroot_pairing(l.ambient(D()) - D().rho, a) >= 0;
    EXPECT_EQ(is_strongly_regular(l), pairing) << l;
  }
}

TEST(InfCharType, Basics) {
  EXPECT_THROW(InfChar(0, 0, 0, 0, 0, -1), DomainError);
  EXPECT_THROW(parse_infchar("[1/2,0,0,0,0,0]"), DomainError);
  EXPECT_EQ(parse_infchar("[1, 1, 1, 0, 1, 1]"), InfChar(1, 1, 1, 0, 1, 1));
  EXPECT_EQ(norm_sq(D(), InfChar(1, 1, 1, 1, 1, 1)), 78);
  EXPECT_EQ(norm_sq(D(), InfChar(0, 0, 1, 1, 1, 7)), Rational(508, 3));
  EXPECT_TRUE(InfChar(0, 0, 0, 0, 0, 0).precedes(InfChar(1, 0, 0, 0, 0, 0)));
  EXPECT_FALSE(InfChar(1, 0, 0, 0, 0, 0).precedes(InfChar(0, 1, 0, 0, 0, 0)));
}

TEST(ConjectureCheck, Examples) {
  EXPECT_TRUE(conjecture_check(InfChar(1, 1, 1, 0, 1, 1)));
  EXPECT_FALSE(conjecture_check(InfChar(0, 0, 1, 1, 1, 7)));
  EXPECT_TRUE(conjecture_check(InfChar(0, 0, 0, 0, 0, 0)));
}

TEST(Involutions, ValidationRejectsNonInvolutions) {
  const auto& d = D();
  const auto& a = d.simple_roots;
  // s1 s3 has order 3.
  InvolutionRecord r{-1, (WeylElement::reflection(a[0]) * WeylElement::reflection(a[2])).matrix(), {0, 2}};
  EXPECT_THROW(validate_involution(d, r), DomainError);
  // A reflection with the wrong support.
  InvolutionRecord s{-1, WeylElement::reflection(a[0]).matrix(), {0, 1}};
  EXPECT_THROW(validate_involution(d, s), DomainError);
  // Scaling an axis by 2 is neither an involution nor orthogonal.
  InvolutionRecord t = identity_theta();
  t.matrix[0][0] = 2;
  EXPECT_THROW(validate_involution(d, t), DomainError);
  EXPECT_NO_THROW(validate_involution(d, identity_theta()));
  EXPECT_TRUE(identity_theta().support.empty());
}

TEST(Involutions, SupportOfReflections) {
  // The support of s_beta is the set of simple roots in beta.
  for (const auto& b : D().positive_roots) {
    std::set<int> expected;
    const Coords6 c = D().simple_coords(b);
    for (std::size_t i = 0; i < kRank; ++i)
      if (c[i] != 0) expected.insert(static_cast<int>(i));
    EXPECT_EQ(weyl_support(D(), WeylElement::reflection(b)), expected) << b;
  }
}

TEST(NuOf, Examples) {
  const auto& d = D();
  for (const auto& l : {InfChar(1, 1, 1, 1, 1, 1), InfChar(0, 3, 1, 0, 2, 5)})
    EXPECT_TRUE(nu_of(d, l, identity_theta()).is_zero());
  const Rational h(1, 2);
  const AmbientVector nu = nu_of(d, InfChar(1, 1, 1, 1, 1, 1), theta_of(512));
  EXPECT_EQ(d.zeta_coords(nu), (Coords6{5 * h, 3, 0, 0, 0, 5 * h}));
  // nu lies in the -1 eigenspace of theta.
  for (const auto& t : thetas()) {
    const AmbientVector v = nu_of(d, InfChar(1, 2, 0, 1, 0, 3), t);
    EXPECT_EQ(t.apply(v), -v);
  }
}

TEST(InfCharFromParameter, Examples) {
  const auto& d = D();
  EXPECT_EQ(infchar_from_parameter(d, theta_of(496), coords6({1, 3, 1, 0, 1, 1}), coords6({0, 4, 0, -1, 1, 1})),
            InfChar(1, 1, 1, 0, 1, 1));
  const Rational h(1, 2);
  EXPECT_EQ(infchar_from_parameter(d, theta_of(306), coords6({0, 0, 2, -1, 1, 3}), Coords6{0, 0, 3 * h, -3 * h, 0, 3}),
            InfChar(0, 0, 1, 0, 1, 1));
  EXPECT_EQ(infchar_from_parameter(d, theta_of(427), coords6({1, 1, 2, -1, 2, 1}), parse_bracket("[0,0,7,-7,6,2]/2")),
            InfChar(1, 1, 1, 0, 1, 1));
  for (const auto& l : {InfChar(0, 0, 0, 0, 0, 0), InfChar(2, 0, 1, 3, 0, 1)}) {
    Coords6 lam{};
    for (std::size_t i = 0; i < kRank; ++i) lam[i] = l.n[i];
    EXPECT_EQ(infchar_from_parameter(d, identity_theta(), lam, Coords6{}), l);
  }
  EXPECT_THROW(infchar_from_parameter(d, identity_theta(), Coords6{h, 0, 0, 0, 0, 0}, Coords6{}), DomainError);
}

TEST(QuadraticForm, IdentityIsZero) {
  const QuadForm q = quadratic_form(D(), identity_theta());
  for (const auto& row : q)
    for (const auto& x : row) EXPECT_EQ(x, 0);
}

TEST(QuadraticForm, SignStructureOnFullySupportedFixture) {
  ASSERT_EQ(thetas().size(), 170u);
  for (const auto& t : thetas()) {
    ASSERT_TRUE(t.fully_supported());
    const QuadForm q = quadratic_form(D(), t);
    EXPECT_TRUE(has_positive_sign_structure(q)) << "kgb_index " << t.kgb_index;
    for (std::size_t i = 0; i < kRank; ++i)
      for (std::size_t j = 0; j < kRank; ++j) {
        EXPECT_EQ(q[i][j], q[j][i]);
        EXPECT_TRUE(is_integer(q[i][j]));
      }
  }
}

TEST(QuadraticForm, MatchesDirectEvaluation) {
  // Longest element of W: make -rho dominant.
  const auto& d = D();
  const auto w0 = make_dominant(d, -d.rho, RootSystem::full).element(d);
  ASSERT_EQ(w0(-d.rho), d.rho);
  const auto t0 = make_involution(d, w0);
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::int64_t> c(0, 9);
  std::vector<InvolutionRecord> cases{t0, theta_of(512), theta_of(299), identity_theta()};
  for (const auto& t : cases) {
    const QuadForm q = quadratic_form(d, t);
    for (int it = 0; it < 20; ++it) {
      InfChar l(c(rng), c(rng), c(rng), c(rng), c(rng), c(rng));
      EXPECT_EQ(evaluate(q, l), direct_norm(l, t)) << l;
    }
  }
}

TEST(Omega, Census) {
  EXPECT_EQ(omega().size(), 45696u);
  EXPECT_FALSE(omega().count(InfChar(1, 1, 1, 1, 1, 1)));
  for (const auto& l : omega()) EXPECT_FALSE(is_strongly_regular(l));
}

TEST(Omega, ScanAgreesWithBruteForceBox) {
  std::set<WeylElement::MatrixT> seen;
  int checked = 0;
  for (const auto& t : thetas()) {
    if (!seen.insert(t.matrix).second || seen.size() % 27 != 1) continue;
    EXPECT_EQ(build_omega(D(), {t}), brute_omega(t)) << "kgb_index " << t.kgb_index;
    ++checked;
  }
  EXPECT_GE(checked, 5);
}

TEST(Omega, NuBoundHoldsForAWitness) {
  const auto& d = D();
  std::vector<QuadForm> forms;
  std::set<WeylElement::MatrixT> seen;
  for (const auto& t : thetas())
    if (seen.insert(t.matrix).second) forms.push_back(quadratic_form(d, t));
  EXPECT_EQ(forms.size(), 135u);
  for (const auto& l : omega()) {
    bool witnessed = false;
    for (const auto& q : forms) {
      const Rational v = evaluate(q, l);
      if (v <= kOmegaBound) {
        witnessed = true;
        EXPECT_LE(v / 4, 78);  // ||nu||^2 <= ||rho||^2
        break;
      }
    }
    EXPECT_TRUE(witnessed) << l;
  }
}

TEST(Omega, MonotoneInTheInvolutionSet) {
  std::vector<InvolutionRecord> half(thetas().begin(), thetas().begin() + 85);
  const auto small = build_omega(D(), half);
  EXPECT_LT(small.size(), omega().size());
  EXPECT_TRUE(std::includes(omega().begin(), omega().end(), small.begin(), small.end()));
  EXPECT_TRUE(build_omega(D(), {}).empty());
}

TEST(Omega, RejectsPartialSupport) {
  auto t = make_involution(D(), WeylElement::reflection(D().simple_roots[0]));
  EXPECT_THROW(build_omega(D(), {t}), DomainError);
}

TEST(Omega2, Census) {
  EXPECT_EQ(omega2().size(), 1976u);
  EXPECT_TRUE(omega2().count(InfChar(1, 1, 1, 0, 1, 1)));
  EXPECT_FALSE(omega2().count(InfChar(1, 1, 1, 1, 1, 1)));
  EXPECT_TRUE(std::includes(omega().begin(), omega().end(), omega2().begin(), omega2().end()));
}

TEST(MinimalElements, Examples) {
  const std::set<InfChar> v{InfChar(1, 0, 0, 1, 1, 1), InfChar(0, 0, 1, 1, 1, 1), InfChar(0, 1, 1, 0, 1, 1),
                            InfChar(1, 1, 0, 1, 0, 1), InfChar(1, 1, 1, 0, 1, 0), InfChar(1, 0, 1, 1, 0, 1),
                            InfChar(1, 0, 1, 1, 1, 0), InfChar(0, 1, 1, 1, 0, 1), InfChar(1, 1, 0, 1, 1, 0),
                            InfChar(0, 1, 1, 1, 1, 0)};
  EXPECT_EQ(minimal_elements(omega2()), v);
  const std::set<InfChar> one{InfChar(2, 0, 1, 0, 0, 0)};
  EXPECT_EQ(minimal_elements(one), one);
  EXPECT_EQ(minimal_elements({InfChar(0, 0, 0, 0, 0, 0), InfChar(1, 0, 0, 0, 0, 0)}),
            (std::set<InfChar>{InfChar(0, 0, 0, 0, 0, 0)}));
  EXPECT_TRUE(minimal_elements({}).empty());
}

TEST(Partition, Census) {
  const auto v = minimal_elements(omega2());
  const auto p = partition_omega(omega(), omega2(), v);
  EXPECT_EQ(p.omega1.size(), 17589u);
  EXPECT_EQ(p.omega3.size(), 26131u);
  EXPECT_EQ(p.omega1.size() + p.omega2.size() + p.omega3.size(), p.omega.size());
  std::set<InfChar> all = p.omega1;
  all.insert(p.omega2.begin(), p.omega2.end());
  all.insert(p.omega3.begin(), p.omega3.end());
  EXPECT_EQ(all, p.omega);
  for (const auto& l : p.omega3)
    EXPECT_TRUE(std::any_of(v.begin(), v.end(), [&](const InfChar& m) { return m.precedes(l); })) << l;
  for (const auto& l : p.omega1)
    EXPECT_FALSE(std::any_of(v.begin(), v.end(), [&](const InfChar& m) { return m.precedes(l); })) << l;
  // The failure-case character sits in Omega3.
  EXPECT_TRUE(p.omega3.count(InfChar(0, 0, 1, 1, 1, 7)));
  EXPECT_TRUE(p.omega1.count(InfChar(0, 0, 1, 0, 1, 1)));
}

TEST(Partition, RequiresOmega2InsideOmega) {
  std::set<InfChar> o{InfChar(0, 0, 0, 0, 0, 1)};
  EXPECT_THROW(partition_omega(o, {InfChar(1, 0, 0, 0, 0, 0)}, {}), DomainError);
}
