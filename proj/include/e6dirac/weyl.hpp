#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "root_datum.hpp"

namespace e6 {

using Word = std::vector<int>;  // simple-reflection indices 0..5, leftmost applied last

/// An element of W(g, t_f) stored as an 8x8 matrix acting on column vectors.
class WeylElement {
 public:
  using MatrixT = std::array<std::array<Rational, kAmbientDim>, kAmbientDim>;

  WeylElement() {
    for (std::size_t i = 0; i < kAmbientDim; ++i) m_[i][i] = 1;
  }
  explicit WeylElement(const MatrixT& m, std::optional<Word> word = std::nullopt) : m_(m), word_(std::move(word)) {}

  /// s_alpha(v) = v - B(v, alpha) alpha, alpha a root of squared length 2.
  static WeylElement reflection(const AmbientVector& alpha) {
    WeylElement w;
    for (std::size_t i = 0; i < kAmbientDim; ++i)
      for (std::size_t j = 0; j < kAmbientDim; ++j) w.m_[i][j] -= alpha[i] * alpha[j];
    return w;
  }

  static WeylElement from_word(const RootDatum& d, const Word& word) {
    WeylElement w;
    for (int s : word) w = w.times_reflection(d.simple_roots.at(static_cast<std::size_t>(s)));
    w.word_ = word;
    return w;
  }

  const MatrixT& matrix() const { return m_; }
  const std::optional<Word>& word() const { return word_; }

  AmbientVector apply(const AmbientVector& v) const {
    AmbientVector out;
    for (std::size_t i = 0; i < kAmbientDim; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < kAmbientDim; ++j)
        if (m_[i][j] != 0 && v[j] != 0) s += m_[i][j] * v[j];
      out[i] = s;
    }
    return out;
  }
  AmbientVector operator()(const AmbientVector& v) const { return apply(v); }

  /// this * s_alpha, computed as M - (M alpha) alpha^T.
  WeylElement times_reflection(const AmbientVector& alpha) const {
    const AmbientVector ma = apply(alpha);
    WeylElement out = *this;
    out.word_.reset();
    for (std::size_t i = 0; i < kAmbientDim; ++i) {
      if (ma[i] == 0) continue;
      for (std::size_t j = 0; j < kAmbientDim; ++j)
        if (alpha[j] != 0) out.m_[i][j] -= ma[i] * alpha[j];
    }
    return out;
  }

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    MatrixT m{};
    for (std::size_t i = 0; i < kAmbientDim; ++i)
      for (std::size_t k = 0; k < kAmbientDim; ++k) {
        if (a.m_[i][k] == 0) continue;
        for (std::size_t j = 0; j < kAmbientDim; ++j)
          if (b.m_[k][j] != 0) m[i][j] += a.m_[i][k] * b.m_[k][j];
      }
    std::optional<Word> w;
    if (a.word_ && b.word_) {
      w = *a.word_;
      w->insert(w->end(), b.word_->begin(), b.word_->end());
    }
    return WeylElement(m, w);
  }

  /// Orthogonal, so the inverse is the transpose.
  WeylElement inverse() const {
    MatrixT t{};
    for (std::size_t i = 0; i < kAmbientDim; ++i)
      for (std::size_t j = 0; j < kAmbientDim; ++j) t[i][j] = m_[j][i];
    std::optional<Word> w;
    if (word_) w = Word(word_->rbegin(), word_->rend());
    return WeylElement(t, w);
  }

  bool is_identity() const { return *this == WeylElement(); }

  Rational determinant() const {
    linalg::Matrix a = linalg::zeros(kAmbientDim, kAmbientDim);
    for (std::size_t i = 0; i < kAmbientDim; ++i)
      for (std::size_t j = 0; j < kAmbientDim; ++j) a[i][j] = m_[i][j];
    Rational det = 1;
    for (std::size_t c = 0; c < kAmbientDim; ++c) {
      std::size_t p = c;
      while (p < kAmbientDim && a[p][c] == 0) ++p;
      if (p == kAmbientDim) return 0;
      if (p != c) {
        std::swap(a[p], a[c]);
        det = -det;
      }
      det *= a[c][c];
      for (std::size_t r = c + 1; r < kAmbientDim; ++r) {
        if (a[r][c] == 0) continue;
        Rational f = a[r][c] / a[c][c];
        for (std::size_t k = c; k < kAmbientDim; ++k) a[r][k] -= f * a[c][k];
      }
    }
    return det;
  }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.m_ == b.m_; }
  friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

 private:
  MatrixT m_{};
  std::optional<Word> word_;
};

/// Indices of simple roots generating W(g) (all six) or W(k) (gamma_1..gamma_5).
enum class RootSystem { full, compact };

inline std::vector<int> simple_indices(RootSystem sys) {
  if (sys == RootSystem::full) return {0, 1, 2, 3, 4, 5};
  return {1, 2, 3, 4, 5};
}

/// Breadth-first closure of the group generated by the given simple
/// reflections. Elements are deduplicated through their action on rho, which is
/// regular.
inline std::vector<WeylElement> generate_group(const RootDatum& d, const std::vector<int>& generators, bool keep_words = false) {
  std::vector<WeylElement> elems;
  std::unordered_map<AmbientVector, std::size_t, AmbientVectorHash> index;
  WeylElement id = keep_words ? WeylElement(WeylElement().matrix(), Word{}) : WeylElement();
  elems.push_back(id);
  index.emplace(d.rho, 0);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (int s : generators) {
      const auto& alpha = d.simple_roots.at(static_cast<std::size_t>(s));
      // w s_alpha (rho) = w rho - B(rho, alpha) w alpha = w rho - w alpha.
      AmbientVector image = elems[head].apply(d.rho - alpha);
      if (index.count(image)) continue;
      WeylElement next = elems[head].times_reflection(alpha);
      if (keep_words) {
        Word w = *elems[head].word();
        w.push_back(s);
        next = WeylElement(next.matrix(), std::move(w));
      }
      index.emplace(std::move(image), elems.size());
      elems.push_back(std::move(next));
    }
  }
  return elems;
}

/// Result of moving a vector into the dominant chamber of a system.
struct DominantConjugate {
  AmbientVector vector;
  Word word;  // w = s_{word[0]} ... s_{word[n-1]} satisfies w(v) = vector

  int parity() const { return word.size() % 2 == 0 ? 1 : -1; }
  WeylElement element(const RootDatum& d) const { return WeylElement::from_word(d, word); }
};

enum class TieBreak { lowest_index, highest_index };

/// Repeatedly reflects in the lowest-index (or highest-index) simple root of
/// the system having negative pairing until the vector is dominant.
inline DominantConjugate make_dominant(const RootDatum& d, AmbientVector v, RootSystem sys,
                                       TieBreak order = TieBreak::lowest_index) {
  const auto idx = simple_indices(sys);
  Word applied;
  while (true) {
    std::optional<std::size_t> hit;
    Rational p;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const auto j = static_cast<std::size_t>(order == TieBreak::lowest_index ? idx[k] : idx[idx.size() - 1 - k]);
      p = dot(v, d.simple_roots[j]);
      if (p < 0) {
        hit = j;
        break;
      }
    }
    if (!hit) break;
    v -= p * d.simple_roots[*hit];
    applied.push_back(static_cast<int>(*hit));
  }
  return {std::move(v), Word(applied.rbegin(), applied.rend())};
}

inline bool is_dominant(const RootDatum& d, const AmbientVector& v, RootSystem sys) {
  for (int j : simple_indices(sys))
    if (dot(v, d.simple_roots[static_cast<std::size_t>(j)]) < 0) return false;
  return true;
}

inline bool is_strictly_dominant(const RootDatum& d, const AmbientVector& v, RootSystem sys) {
  for (int j : simple_indices(sys))
    if (dot(v, d.simple_roots[static_cast<std::size_t>(j)]) <= 0) return false;
  return true;
}

/// One of the 27 representatives w^(j) with its shift rho_n^(j) = w^(j) rho - rho_c.
struct CosetRep {
  WeylElement w;
  AmbientVector w_rho;
  AmbientVector rho_n_shift;
};

/// The elements w with w(rho) strictly Delta+(k)-dominant, ordered by length
/// and then by w(rho); w^(0) is the identity.
inline std::vector<CosetRep> minimal_coset_reps(const RootDatum& d, const std::vector<WeylElement>& full_group) {
  std::vector<CosetRep> reps;
  for (const auto& w : full_group) {
    AmbientVector wr = w.apply(d.rho);
    if (!is_strictly_dominant(d, wr, RootSystem::compact)) continue;
    // make_dominant(w rho) = (rho, u) with u w = 1, so w = u^{-1}.
    auto dc = make_dominant(d, wr, RootSystem::full);
    Word word(dc.word.rbegin(), dc.word.rend());
    reps.push_back({WeylElement(w.matrix(), word), wr, wr - d.rho_c});
  }
  std::sort(reps.begin(), reps.end(), [](const CosetRep& a, const CosetRep& b) {
    if (a.w.word()->size() != b.w.word()->size()) return a.w.word()->size() < b.w.word()->size();
    return b.w_rho < a.w_rho;
  });
  return reps;
}

/// The same 27 representatives found from the orbit of rho, without
/// materializing the group.
inline std::vector<CosetRep> minimal_coset_reps(const RootDatum& d) {
  std::vector<AmbientVector> orbit{d.rho};
  std::unordered_set<AmbientVector, AmbientVectorHash> seen{d.rho};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const auto& a : d.simple_roots) {
      AmbientVector next = orbit[head] - dot(orbit[head], a) * a;
      if (seen.insert(next).second) orbit.push_back(std::move(next));
    }
  }
  std::vector<CosetRep> reps;
  for (const auto& v : orbit) {
    if (!is_strictly_dominant(d, v, RootSystem::compact)) continue;
    auto dc = make_dominant(d, v, RootSystem::full);
    Word word(dc.word.rbegin(), dc.word.rend());
    reps.push_back({WeylElement::from_word(d, word), v, v - d.rho_c});
  }
  std::sort(reps.begin(), reps.end(), [](const CosetRep& a, const CosetRep& b) {
    if (a.w.word()->size() != b.w.word()->size()) return a.w.word()->size() < b.w.word()->size();
    return b.w_rho < a.w_rho;
  });
  return reps;
}

/// Nearest point (in the B-norm) of the closed dominant cone of the full system.
///
/// Active-set enumeration over the 64 subsets S of simple roots: the candidate
/// is the point of {x : B(x, alpha) = 0 for alpha in S} of the form
/// v + sum_{S} t_alpha alpha; it is accepted iff every t_alpha > 0 and the
/// candidate is dominant (the KKT conditions). Exactly one S is accepted.
inline AmbientVector project_dominant_cone(const RootDatum& d, const AmbientVector& v) {
  std::optional<AmbientVector> found;
  for (unsigned mask = 0; mask < (1u << kRank); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < kRank; ++j)
      if (mask & (1u << j)) s.push_back(j);
    linalg::Matrix g = linalg::zeros(s.size(), s.size());
    std::vector<Rational> rhs(s.size());
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = 0; b < s.size(); ++b) g[a][b] = dot(d.simple_roots[s[a]], d.simple_roots[s[b]]);
      rhs[a] = -dot(v, d.simple_roots[s[a]]);
    }
    auto t = linalg::solve(g, rhs);
    if (!t) continue;
    if (std::any_of(t->begin(), t->end(), [](const Rational& x) { return x <= 0; })) continue;
    AmbientVector x = v;
    for (std::size_t a = 0; a < s.size(); ++a) x += (*t)[a] * d.simple_roots[s[a]];
    if (!is_dominant(d, x, RootSystem::full)) continue;
    if (found) throw std::logic_error("project_dominant_cone: two active sets accepted");
    found = x;
  }
  if (!found) throw std::logic_error("project_dominant_cone: no active set accepted for " + to_string(v));
  return *found;
}

/// theta-stable parabolic q = l + u defined by a weight xi.
struct ParabolicData {
  AmbientVector defining_weight;
  std::vector<AmbientVector> levi_roots;
  std::vector<AmbientVector> nilrad_roots;
  AmbientVector rho_l;  // half-sum of the positive roots of l
  AmbientVector rho_u;
  AmbientVector rho_u_cap_p;
};

inline ParabolicData build_parabolic(const RootDatum& d, const AmbientVector& xi) {
  ParabolicData p;
  p.defining_weight = xi;
  for (const auto& a : d.all_roots) {
    Rational s = dot(xi, a);
    if (s == 0)
      p.levi_roots.push_back(a);
    else if (s > 0)
      p.nilrad_roots.push_back(a);
  }
  for (const auto& a : d.positive_roots)
    if (dot(xi, a) == 0) p.rho_l += a;
  p.rho_l *= Rational(1, 2);
  for (const auto& a : p.nilrad_roots) {
    p.rho_u += a;
    if (!d.is_compact(a)) p.rho_u_cap_p += a;
  }
  p.rho_u *= Rational(1, 2);
  p.rho_u_cap_p *= Rational(1, 2);
  return p;
}

enum class Range { good, weakly_good, neither };

inline const char* to_string(Range r) {
  switch (r) {
    case Range::good: return "good";
    case Range::weakly_good: return "weakly_good";
    case Range::neither: return "neither";
  }
  return "?";
}

inline Range classify_range(const RootDatum& d, const AmbientVector& lambda_l, const ParabolicData& p) {
  const AmbientVector shifted = lambda_l + p.rho_u;
  bool strict = true;
  for (const auto& a : p.nilrad_roots) {
    Rational s = d.coroot_pairing(shifted, a);
    if (s < 0) return Range::neither;
    if (s == 0) strict = false;
  }
  return strict ? Range::good : Range::weakly_good;
}

/// gamma_L + rho(u cap p) is Delta+(k)-dominant.
inline bool hd_shift_dominant(const RootDatum& d, const AmbientVector& gamma_l, const ParabolicData& p) {
  return is_dominant(d, gamma_l + p.rho_u_cap_p, RootSystem::compact);
}

}  // namespace e6
