#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fixtures.hpp"

namespace e6 {

enum class Check { pass, fail, gap };

inline const char* to_string(Check c) {
  switch (c) {
    case Check::pass: return "pass";
    case Check::fail: return "FAIL";
    case Check::gap: return "gap";
  }
  return "?";
}

// ---------------------------------------------------------------- scattered table

struct ScatteredRowReport {
  std::int64_t x = 0;
  InfChar infchar;
  Rational infchar_sq;
  // (a) nu = (Lambda - theta Lambda)/2, (b) parameter gives Lambda,
  // (c) spin LKTs attain ||Lambda||^2 with a shift conjugate to Lambda,
  // (d) spin LKTs are u-small, (e) Lambda has 0/1 coordinates.
  Check a = Check::gap, b = Check::gap, c = Check::fail, d = Check::fail, e = Check::fail;
  std::string detail;

  bool ok() const {
    for (Check k : {a, b, c, d, e})
      if (k != Check::pass) return false;
    return true;
  }
};

ScatteredRowReport verify_scattered_row(const ScatteredRow& row, const std::vector<InvolutionRecord>& thetas);

std::vector<ScatteredRowReport> verify_scattered_table(const std::vector<ScatteredRow>& rows,
                                                              const std::vector<InvolutionRecord>& thetas);

// ---------------------------------------------------------------- FS-integral table

struct IntegralRowReport {
  std::int64_t x = 0;
  InfChar infchar;
  Rational infchar_sq;
  Check nu_consistent = Check::gap, parameter = Check::gap;
  bool below_rho_c = false;  // ||Lambda||^2 < ||rho_c||^2 = 30: H_D vanishes for norm reasons
};

std::vector<IntegralRowReport> verify_integral_table(const std::vector<IntegralRow>& rows,
                                                            const std::vector<InvolutionRecord>& thetas);

// ---------------------------------------------------------------- tempered rows

struct TemperedRowReport {
  std::int64_t x = 0;
  std::size_t drawn = 0, skipped = 0, accepted = 0, failures = 0;
  bool unsatisfiable = false;  // no admissible point found in the sample box
  std::string first_failure;

  bool ok() const { return !unsatisfiable && failures == 0; }
};

/// Samples a..f uniformly in [0,6] until `samples` admissible points are
/// found (or a draw cap is hit) and checks the three equalities at each.
TemperedRowReport verify_tempered_row(const TemperedRow& row, std::size_t samples, std::uint64_t seed);

std::vector<TemperedRowReport> verify_tempered_rows(const std::vector<TemperedRow>& rows, std::size_t samples,
                                                           std::uint64_t seed);

// ---------------------------------------------------------------- failure case

struct FailureEntry {
  KTypeWeight mu;
  Rational spin_sq, margin;  // margin = ||Lambda||^2 - spin^2
};

struct FailureReport {
  Rational infchar_sq;
  std::vector<FailureEntry> entries;
  std::size_t strict = 0;
  bool vacuous = false;

  bool ok() const { return strict == entries.size(); }
};

/// The Dirac inequality must fail strictly at every listed LKT.
FailureReport verify_failure_case(const FailureFixture& f);

// ---------------------------------------------------------------- conjecture audit

struct ConjectureAudit {
  std::size_t checked = 0;
  std::vector<InfChar> violations;
};

ConjectureAudit audit_conjecture(const std::vector<ScatteredRow>& scattered, const std::vector<IntegralRow>& integral);

}  // namespace e6
