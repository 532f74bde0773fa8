#include <e6dirac/verify.hpp>

#include <future>
#include <random>

namespace e6 {

ScatteredRowReport verify_scattered_row(const ScatteredRow& row, const std::vector<InvolutionRecord>& thetas) {
  const auto& d = e6_datum();
  ScatteredRowReport rep;
  rep.x = row.x;
  rep.infchar = row.infchar;
  rep.infchar_sq = norm_sq(d, row.infchar);
  const AmbientVector target = row.infchar.ambient(d);

  if (const auto* th = find_involution(thetas, row.x)) {
    rep.a = nu_of(d, row.infchar, *th) == d.from_zeta(row.nu) ? Check::pass : Check::fail;
    try {
      rep.b = infchar_from_parameter(d, *th, row.lambda, row.nu) == row.infchar ? Check::pass : Check::fail;
    } catch (const DomainError& ex) {
      rep.b = Check::fail;
      rep.detail += ex.what();
    }
  } else {
    rep.detail += "fixture gap: no involution for x=" + std::to_string(row.x) + "; ";
  }

  bool c_ok = true, d_ok = true;
  for (const auto& mu : row.spin_lkts) {
    if (!is_ktype_weight(mu)) {
      c_ok = d_ok = false;
      rep.detail += to_string(mu) + " is not a K-type; ";
      continue;
    }
    const auto s = spin_norm(mu);
    bool conj = false;
    for (const auto& shift : s.dominant_shifts) conj = conj || make_dominant(d, shift, RootSystem::full).vector == target;
    if (s.norm_sq != rep.infchar_sq || !conj) {
      c_ok = false;
      rep.detail += to_string(mu) + " spin^2=" + to_string(s.norm_sq) + "; ";
    }
    if (!is_usmall(mu)) {
      d_ok = false;
      rep.detail += to_string(mu) + " not u-small; ";
    }
  }
  rep.c = c_ok ? Check::pass : Check::fail;
  rep.d = d_ok ? Check::pass : Check::fail;
  rep.e = conjecture_check(row.infchar) ? Check::pass : Check::fail;
  return rep;
}

std::vector<ScatteredRowReport> verify_scattered_table(const std::vector<ScatteredRow>& rows,
                                                              const std::vector<InvolutionRecord>& thetas) {
  std::vector<std::future<ScatteredRowReport>> jobs;
  for (const auto& r : rows) jobs.push_back(std::async(std::launch::async, [&r, &thetas] { return verify_scattered_row(r, thetas); }));
  std::vector<ScatteredRowReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

std::vector<IntegralRowReport> verify_integral_table(const std::vector<IntegralRow>& rows,
                                                            const std::vector<InvolutionRecord>& thetas) {
  const auto& d = e6_datum();
  const Rational rho_c_sq = norm_sq(d.rho_c);
  std::vector<IntegralRowReport> out;
  for (const auto& row : rows) {
    IntegralRowReport rep;
    rep.x = row.x;
    rep.infchar = row.infchar;
    rep.infchar_sq = norm_sq(d, row.infchar);
    rep.below_rho_c = rep.infchar_sq < rho_c_sq;
    if (const auto* th = find_involution(thetas, row.x)) {
      rep.nu_consistent = nu_of(d, row.infchar, *th) == d.from_zeta(row.nu) ? Check::pass : Check::fail;
      try {
        rep.parameter = infchar_from_parameter(d, *th, row.lambda, row.nu) == row.infchar ? Check::pass : Check::fail;
      } catch (const DomainError&) {
        rep.parameter = Check::fail;
      }
    }
    out.push_back(rep);
  }
  return out;
}

TemperedRowReport verify_tempered_row(const TemperedRow& row, std::size_t samples, std::uint64_t seed) {
  const auto& d = e6_datum();
  TemperedRowReport rep;
  rep.x = row.x;
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(row.x + 1)));
  std::uniform_int_distribution<std::int64_t> coord(0, 6);
  const std::size_t cap = 200 * samples;
  while (rep.accepted < samples && rep.drawn < cap) {
    Params p;
    for (auto& v : p) v = coord(rng);
    ++rep.drawn;
    if (!row.admits(p)) {
      ++rep.skipped;
      continue;
    }
    ++rep.accepted;
    const KTypeWeight mu = row.lkt(p);
    const InfChar lambda(p[0], p[1], p[2], p[3], p[4], p[5]);
    std::string why;
    if (!is_ktype_weight(mu)) {
      why = "not a K-type";
    } else {
      const Rational target = norm_sq(d, lambda);
      const Rational spin = spin_norm(mu).norm_sq;
      const Rational lam = lambda_stats(mu).norm_sq;
      if (spin != target) why = "spin^2=" + to_string(spin) + " vs " + to_string(target);
      else if (lam != target) why = "lambda^2=" + to_string(lam) + " vs " + to_string(target);
    }
    if (!why.empty()) {
      if (rep.failures++ == 0) rep.first_failure = to_string(lambda) + " -> " + to_string(mu) + ": " + why;
    }
  }
  rep.unsatisfiable = rep.accepted == 0;
  return rep;
}

std::vector<TemperedRowReport> verify_tempered_rows(const std::vector<TemperedRow>& rows, std::size_t samples,
                                                           std::uint64_t seed) {
  std::vector<std::future<TemperedRowReport>> jobs;
  for (const auto& r : rows)
    jobs.push_back(std::async(std::launch::async, [&r, samples, seed] { return verify_tempered_row(r, samples, seed); }));
  std::vector<TemperedRowReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

FailureReport verify_failure_case(const FailureFixture& f) {
  FailureReport rep;
  rep.infchar_sq = norm_sq(e6_datum(), f.infchar);
  rep.vacuous = f.lkts.empty();
  for (const auto& mu : f.lkts) {
    const Rational s = spin_norm(mu).norm_sq;
    rep.entries.push_back({mu, s, rep.infchar_sq - s});
    if (s < rep.infchar_sq) ++rep.strict;
  }
  return rep;
}

ConjectureAudit audit_conjecture(const std::vector<ScatteredRow>& scattered, const std::vector<IntegralRow>& integral) {
  ConjectureAudit a;
  std::set<InfChar> seen;
  for (const auto& r : scattered) seen.insert(r.infchar);
  for (const auto& r : integral) seen.insert(r.infchar);
  for (const auto& l : seen) {
    ++a.checked;
    if (!conjecture_check(l)) a.violations.push_back(l);
  }
  return a;
}

}  // namespace e6
