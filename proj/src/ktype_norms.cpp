#include <e6dirac/ktype_norms.hpp>

#include "lp.hpp"

namespace e6 {

CoordinateBounds usmall_bounds() {
  using lp::BigRational;
  const auto& rows = e6_usmall_inequalities();
  auto big = [](const Rational& r) { return BigRational(r.numerator()) / BigRational(r.denominator()); };
  // Variables a..e >= 0 and f = f_plus - f_minus.
  std::vector<std::vector<BigRational>> a;
  std::vector<BigRational> b;
  for (const auto& ineq : rows) {
    std::vector<BigRational> row(7);
    for (std::size_t l = 0; l < 6; ++l) row[l] = big(ineq.coef[l]);
    row[6] = -row[5];
    a.push_back(std::move(row));
    b.push_back(big(ineq.rhs));
  }
  auto opt = [&](std::size_t var, int sign) {
    std::vector<BigRational> c(7);
    c[var] = sign;
    if (var == 5) c[6] = -sign;
    return lp::maximize(a, b, c);
  };
  auto floor_big = [](const BigRational& x) {
    using boost::multiprecision::cpp_int;
    cpp_int q = numerator(x) / denominator(x);
    if (q * denominator(x) > numerator(x)) --q;
    return q.convert_to<std::int64_t>();
  };
  CoordinateBounds out;
  for (std::size_t l = 0; l < 6; ++l) {
    out.hi[l] = floor_big(opt(l, 1));
    out.lo[l] = l < 5 ? 0 : -floor_big(opt(l, -1));
  }
  return out;
}

std::vector<KTypeWeight> enumerate_usmall() {
  const auto& rows = e6_usmall_inequalities();
  const auto box = usmall_bounds();
  std::vector<KTypeWeight> out;
  std::array<std::int64_t, 5> x{};
  auto scan_f = [&]() {
    Rational f_lo(box.lo[5]), f_hi(box.hi[5]);
    for (const auto& ineq : rows) {
      Rational rest = ineq.rhs;
      for (std::size_t l = 0; l < 5; ++l) rest -= ineq.coef[l] * x[l];
      const Rational cf = ineq.coef[5];
      if (cf > 0) f_hi = std::min(f_hi, rest / cf);
      else if (cf < 0) f_lo = std::max(f_lo, rest / cf);
      else if (rest < 0) return;
      if (f_lo > f_hi) return;
    }
    for (std::int64_t f = ceil(f_lo); f <= floor(f_hi); ++f) {
      KTypeWeight mu(x[0], x[1], x[2], x[3], x[4], f);
      if (is_ktype_weight(mu)) out.push_back(mu);
    }
  };
  for (x[0] = box.lo[0]; x[0] <= box.hi[0]; ++x[0])
    for (x[1] = box.lo[1]; x[1] <= box.hi[1]; ++x[1])
      for (x[2] = box.lo[2]; x[2] <= box.hi[2]; ++x[2])
        for (x[3] = box.lo[3]; x[3] <= box.hi[3]; ++x[3])
          for (x[4] = box.lo[4]; x[4] <= box.hi[4]; ++x[4]) scan_f();
  return out;
}

}  // namespace e6
