#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trinomial/exact_int.hpp"
#include "trinomial/ring.hpp"
#include "trinomial/transform_triangle.hpp"
#include "trinomial/uni_poly.hpp"

namespace trinomial {

/// A ternary linear recurrence a(k) = alpha a(k-1) + beta a(k-2) + gamma a(k-3)
/// together with its three initial values. gamma must be nonzero and the
/// initial values must not all vanish.
class TernarySpec {
 public:
  TernarySpec(ExactInt alpha, ExactInt beta, ExactInt gamma, ExactInt a0, ExactInt a1, ExactInt a2)
      : alpha_(std::move(alpha)),
        beta_(std::move(beta)),
        gamma_(std::move(gamma)),
        initials_{std::move(a0), std::move(a1), std::move(a2)} {
    if (gamma_ == 0) throw std::invalid_argument("TernarySpec: gamma must be nonzero");
    if (initials_[0] == 0 && initials_[1] == 0 && initials_[2] == 0) {
      throw std::invalid_argument("TernarySpec: initial values must not all be zero");
    }
  }

  [[nodiscard]] const ExactInt& alpha() const { return alpha_; }
  [[nodiscard]] const ExactInt& beta() const { return beta_; }
  [[nodiscard]] const ExactInt& gamma() const { return gamma_; }
  [[nodiscard]] const ExactInt& a0() const { return initials_[0]; }
  [[nodiscard]] const ExactInt& a1() const { return initials_[1]; }
  [[nodiscard]] const ExactInt& a2() const { return initials_[2]; }
  [[nodiscard]] const std::array<ExactInt, 3>& initials() const { return initials_; }

  friend bool operator==(const TernarySpec&, const TernarySpec&) = default;

 private:
  ExactInt alpha_;
  ExactInt beta_;
  ExactInt gamma_;
  std::array<ExactInt, 3> initials_;
};

/// Coefficients derived from (alpha, beta, gamma):
///   diagonal recurrence  x(n) = A x(n-1) + B x(n-2) + C x(n-3),
///   column recurrence    gamma x(n) = P x(n-1) + Q x(n-2) + C x(n-3),
///   column sums          s(n) = sum_j sum6[j] s(n-1-j),
///   alternating sums     s-bar(n) = sum_j alt6[j] s-bar(n-1-j).
template <CommutativeRing R>
struct BasicDerivedCoeffs {
  R A, B, C;
  R P, Q;
  std::array<R, 6> sum6;
  std::array<R, 6> alt6;

  friend bool operator==(const BasicDerivedCoeffs&, const BasicDerivedCoeffs&) = default;
};

using DerivedCoeffs = BasicDerivedCoeffs<ExactInt>;

template <CommutativeRing R>
BasicDerivedCoeffs<R> derive_coefficients(const R& alpha, const R& beta, const R& gamma) {
  const auto k = [](std::int64_t v) { return R(ExactInt(v)); };
  const R a2 = alpha * alpha;
  const R b2 = beta * beta;
  const R g2 = gamma * gamma;
  const R ab = alpha * beta;
  const R ag = alpha * gamma;
  const R bg = beta * gamma;

  BasicDerivedCoeffs<R> d;
  d.A = a2 + alpha + k(2) * beta + k(3);
  d.B = k(-2) * a2 + ab + k(2) * ag - b2 - k(2) * alpha - k(3) * beta + k(3) * gamma - k(3);
  d.C = a2 - ab - ag + b2 - bg + g2 + alpha + beta - k(2) * gamma + k(1);
  d.P = ag - beta + k(3) * gamma;
  d.Q = ab - k(2) * ag + bg - alpha + k(2) * beta;

  const R& A = d.A;
  const R& B = d.B;
  const R& C = d.C;
  d.sum6 = {
      alpha + A,
      B - alpha * A + beta,
      -(alpha * B + beta * A - C - gamma),
      -(alpha * C + beta * B + gamma * A),
      -(beta * C + gamma * B),
      -(gamma * C),
  };
  d.alt6 = {
      alpha - A,
      B + alpha * A + beta,
      -(alpha * B - beta * A + C - gamma),
      alpha * C - beta * B + gamma * A,
      beta * C - gamma * B,
      gamma * C,
  };
  return d;
}

inline DerivedCoeffs derive(const TernarySpec& spec) {
  return derive_coefficients(spec.alpha(), spec.beta(), spec.gamma());
}

/// Memoizing generator for the base sequence of `spec`.
inline SequenceGenerator<ExactInt> ternary_sequence(const TernarySpec& spec) {
  return SequenceGenerator<ExactInt>::linear_recurrence(
      {spec.alpha(), spec.beta(), spec.gamma()},
      {spec.initials().begin(), spec.initials().end()});
}

/// a(k), with a(k) = 0 for negative k.
inline ExactInt seq_term(const TernarySpec& spec, std::int64_t k) {
  if (k < 0) return 0;
  auto gen = ternary_sequence(spec);
  return gen(static_cast<std::size_t>(k));
}

/// Continues `terms` by x(n) = sum_j coeffs[j] x(n-1-j) until it has
/// `count` entries. Requires terms.size() >= coeffs.size() when extending.
inline void extend_recurrence(std::vector<ExactInt>& terms, std::span<const ExactInt> coeffs, std::size_t count) {
  if (terms.size() >= count) {
    terms.resize(count);
    return;
  }
  if (terms.size() < coeffs.size()) throw std::invalid_argument("extend_recurrence: not enough seed terms");
  terms.reserve(count);
  while (terms.size() < count) {
    const std::size_t n = terms.size();
    ExactInt next = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) next += coeffs[j] * terms[n - 1 - j];
    terms.push_back(std::move(next));
  }
}

/// Whether x(n) = sum_j coeffs[j] x(n-1-j) for every n from coeffs.size() on.
inline bool satisfies_recurrence(std::span<const ExactInt> seq, std::span<const ExactInt> coeffs) {
  for (std::size_t n = coeffs.size(); n < seq.size(); ++n) {
    ExactInt expected = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) expected += coeffs[j] * seq[n - 1 - j];
    if (expected != seq[n]) return false;
  }
  return true;
}

/// First `count` terms of the trinomial transform, from the closed initial
/// values b0, b1, b2 and the A, B, C recurrence.
inline std::vector<ExactInt> transform_fast(const TernarySpec& spec, std::size_t count) {
  if (count == 0) throw std::invalid_argument("transform_fast: count must be at least 1");
  const ExactInt& al = spec.alpha();
  const ExactInt& be = spec.beta();
  const ExactInt& ga = spec.gamma();
  std::vector<ExactInt> b{
      spec.a0(),
      spec.a0() + spec.a1() + spec.a2(),
      (al * ga + 2 * ga + 1) * spec.a0() + (al * be + 2 * be + ga + 2) * spec.a1() +
          (al * al + 2 * al + be + 3) * spec.a2(),
  };
  const DerivedCoeffs d = derive(spec);
  const std::array<ExactInt, 3> coeffs{d.A, d.B, d.C};
  extend_recurrence(b, coeffs, count);
  return b;
}

/// (a(n, n+offset)) for n < count: three terms from a small built triangle,
/// the rest from the A, B, C recurrence.
inline std::vector<ExactInt> diagonal_fast(const TernarySpec& spec, std::size_t offset, std::size_t count) {
  if (count == 0) throw std::invalid_argument("diagonal_fast: count must be at least 1");
  auto gen = ternary_sequence(spec);
  const auto seed = TransformTriangle<ExactInt>::build(gen, offset + 2, 2);
  std::vector<ExactInt> terms = diagonal(seed, offset, 3);
  const DerivedCoeffs d = derive(spec);
  const std::array<ExactInt, 3> coeffs{d.A, d.B, d.C};
  extend_recurrence(terms, coeffs, count);
  return terms;
}

/// The three column entries directly above a(n,k), nearest first:
/// a(n-1,k), a(n-2,k), a(n-3,k).
using ColumnWindow = std::array<ExactInt, 3>;

/// a(n,k) = (P a(n-1,k) + Q a(n-2,k) + C a(n-3,k)) / gamma. The division must
/// be exact; exact_division_error signals entries not taken from a triangle
/// of this spec.
inline ExactInt column_step(const DerivedCoeffs& d, const ExactInt& gamma, const ColumnWindow& above) {
  return exact_div(d.P * above[0] + d.Q * above[1] + d.C * above[2], gamma);
}

inline ExactInt column_step(const TernarySpec& spec, const ColumnWindow& above) {
  return column_step(derive(spec), spec.gamma(), above);
}

/// Column k (rows 0..k): three entries from a small built triangle, the rest
/// by column_step.
inline std::vector<ExactInt> column_fast(const TernarySpec& spec, std::size_t k) {
  auto gen = ternary_sequence(spec);
  const std::size_t seed_rows = std::min<std::size_t>(k, 2);
  const auto seed = TransformTriangle<ExactInt>::build(gen, k, seed_rows);
  std::vector<ExactInt> col = seed.column(k);
  const DerivedCoeffs d = derive(spec);
  while (col.size() <= k) {
    const std::size_t n = col.size();
    col.push_back(column_step(d, spec.gamma(), {col[n - 1], col[n - 2], col[n - 3]}));
  }
  return col;
}

struct ColumnSums {
  std::vector<ExactInt> sums;
  std::vector<ExactInt> alt_sums;
};

/// s(n) and s-bar(n) for n < count: six terms of each from a built triangle,
/// the rest from the sixth-order recurrences.
inline ColumnSums sums_fast(const TernarySpec& spec, std::size_t count) {
  if (count == 0) throw std::invalid_argument("sums_fast: count must be at least 1");
  auto gen = ternary_sequence(spec);
  const auto seed = TransformTriangle<ExactInt>::build(gen, 5);
  ColumnSums out;
  for (std::size_t n = 0; n < 6; ++n) {
    out.sums.push_back(column_sum(seed, n));
    out.alt_sums.push_back(alt_column_sum(seed, n));
  }
  const DerivedCoeffs d = derive(spec);
  extend_recurrence(out.sums, d.sum6, count);
  extend_recurrence(out.alt_sums, d.alt6, count);
  return out;
}

/// a(n,-n), a(n,-n+1), a(n,-n+2) when row 0 is extended by zeros to the left.
inline std::array<ExactInt, 3> row_boundary(const TernarySpec& spec, std::size_t n) {
  const ExactInt nn = n;
  return {
      spec.a0(),
      nn * spec.a0() + spec.a1(),
      binomial(static_cast<std::int64_t>(n) + 1, 2) * spec.a0() + nn * spec.a1() + spec.a2(),
  };
}

/// Whether a(n,k) = alpha a(n,k-1) + beta a(n,k-2) + gamma a(n,k-3) holds in `t`.
inline bool row_recurrence_check(const TernarySpec& spec, const TransformTriangle<ExactInt>& t, std::size_t n,
                                 std::size_t k) {
  if (k < 3 || n > k - 3 || !t.contains(n, k)) {
    throw std::out_of_range("row_recurrence_check: needs n <= k-3 within the triangle");
  }
  return t.at(n, k) == spec.alpha() * t.at(n, k - 1) + spec.beta() * t.at(n, k - 2) + spec.gamma() * t.at(n, k - 3);
}

/// t^3 - alpha t^2 - beta t - gamma.
inline IntPoly characteristic_polynomial(const TernarySpec& spec) {
  return IntPoly{-spec.gamma(), -spec.beta(), -spec.alpha(), ExactInt(1)};
}

/// Characteristic polynomial of the transformed sequence: the roots w of p
/// become w^2 + w + 1. Computed as Res_t(p(t), s - t^2 - t - 1).
inline IntPoly char_poly_transform(const IntPoly& p) {
  if (p.degree() < 1) throw std::invalid_argument("char_poly_transform: degree must be at least 1");
  if (!p.is_monic()) throw std::invalid_argument("char_poly_transform: polynomial must be monic");
  return resultant_in_t(p, trinomial_root_map());
}

/// Recurrence coefficients (c1..cr with x(n) = sum c_j x(n-j)) read off a
/// monic characteristic polynomial.
inline std::vector<ExactInt> recurrence_coefficients(const IntPoly& monic) {
  if (!monic.is_monic()) throw std::invalid_argument("recurrence_coefficients: polynomial must be monic");
  const auto r = static_cast<std::size_t>(monic.degree());
  std::vector<ExactInt> c(r);
  for (std::size_t j = 1; j <= r; ++j) c[j - 1] = -monic.coeff(r - j);
  return c;
}

}  // namespace trinomial
