#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trinomial/exact_int.hpp"

namespace trinomial {

/// Dense univariate polynomial, coefficients in ascending degree.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and reports degree -1.
template <class Coeff>
class UniPoly {
 public:
  static constexpr std::ptrdiff_t zero_degree = -1;

  UniPoly() = default;
  explicit UniPoly(const ExactInt& constant) : coeffs_{Coeff(constant)} { normalize(); }
  explicit UniPoly(std::vector<Coeff> ascending) : coeffs_(std::move(ascending)) { normalize(); }
  UniPoly(std::initializer_list<Coeff> ascending) : coeffs_(ascending) { normalize(); }

  /// The monomial c * t^power.
  static UniPoly monomial(Coeff c, std::size_t power) {
    std::vector<Coeff> v(power + 1, Coeff(ExactInt(0)));
    v[power] = std::move(c);
    return UniPoly(std::move(v));
  }

  [[nodiscard]] std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] const std::vector<Coeff>& coeffs() const { return coeffs_; }

  /// Coefficient of t^i; zero beyond the degree.
  [[nodiscard]] Coeff coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Coeff(ExactInt(0));
  }

  [[nodiscard]] const Coeff& leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  [[nodiscard]] bool is_monic() const { return !is_zero() && leading() == Coeff(ExactInt(1)); }

  template <class Value>
  [[nodiscard]] Value evaluate(const Value& at) const {
    Value acc = Value(ExactInt(0));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + Value(*it);
    return acc;
  }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  friend UniPoly operator+(const UniPoly& p, const UniPoly& q) {
    std::vector<Coeff> out(std::max(p.coeffs_.size(), q.coeffs_.size()), Coeff(ExactInt(0)));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out[i] = out[i] + p.coeffs_[i];
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) out[i] = out[i] + q.coeffs_[i];
    return UniPoly(std::move(out));
  }

  friend UniPoly operator-(const UniPoly& p) {
    std::vector<Coeff> out;
    out.reserve(p.coeffs_.size());
    for (const auto& c : p.coeffs_) out.push_back(-c);
    return UniPoly(std::move(out));
  }

  friend UniPoly operator-(const UniPoly& p, const UniPoly& q) { return p + (-q); }

  friend UniPoly operator*(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Coeff> out(p.coeffs_.size() + q.coeffs_.size() - 1, Coeff(ExactInt(0)));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
        out[i + j] = out[i + j] + p.coeffs_[i] * q.coeffs_[j];
      }
    }
    return UniPoly(std::move(out));
  }

  UniPoly& operator+=(const UniPoly& q) { return *this = *this + q; }
  UniPoly& operator-=(const UniPoly& q) { return *this = *this - q; }
  UniPoly& operator*=(const UniPoly& q) { return *this = *this * q; }

 private:
  void normalize() {
    const Coeff zero(ExactInt(0));
    while (!coeffs_.empty() && coeffs_.back() == zero) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPoly = UniPoly<ExactInt>;
/// Polynomial in t whose coefficients are polynomials in s.
using BiPoly = UniPoly<IntPoly>;

/// Exact quotient p / q; throws exact_division_error on a nonzero remainder.
template <class Coeff>
UniPoly<Coeff> exact_div(const UniPoly<Coeff>& p, const UniPoly<Coeff>& q) {
  if (q.is_zero()) throw exact_division_error("exact_div: polynomial division by zero");
  if (p.is_zero()) return {};
  if (p.degree() < q.degree()) throw exact_division_error("exact_div: polynomial remainder is nonzero");

  std::vector<Coeff> rem = p.coeffs();
  const std::size_t qn = q.coeffs().size();
  std::vector<Coeff> quot(rem.size() - qn + 1, Coeff(ExactInt(0)));
  for (std::size_t shift = quot.size(); shift-- > 0;) {
    const Coeff& top = rem[shift + qn - 1];
    if (top == Coeff(ExactInt(0))) continue;
    Coeff factor = exact_div(top, q.leading());
    for (std::size_t j = 0; j < qn; ++j) rem[shift + j] = rem[shift + j] - factor * q.coeffs()[j];
    quot[shift] = std::move(factor);
  }
  for (const auto& c : rem) {
    if (!(c == Coeff(ExactInt(0)))) throw exact_division_error("exact_div: polynomial remainder is nonzero");
  }
  return UniPoly<Coeff>(std::move(quot));
}

/// Fraction-free (Bareiss) determinant over an integral domain R that
/// provides exact_div(R, R). Row swaps are used when a pivot vanishes.
template <class R>
R bareiss_determinant(std::vector<std::vector<R>> m) {
  const std::size_t n = m.size();
  if (n == 0) return R(ExactInt(1));
  const R zero(ExactInt(0));
  R previous(ExactInt(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == zero) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == zero) ++swap_row;
      if (swap_row == n) return zero;
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], previous);
      }
      m[i][k] = zero;
    }
    previous = m[k][k];
  }
  return negate ? R(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

/// Sylvester matrix of p (degree m) and q (degree n), size (m+n) x (m+n).
template <class R>
std::vector<std::vector<R>> sylvester_matrix(const UniPoly<R>& p, const UniPoly<R>& q) {
  const auto m = static_cast<std::size_t>(p.degree());
  const auto n = static_cast<std::size_t>(q.degree());
  const std::size_t size = m + n;
  std::vector<std::vector<R>> rows(size, std::vector<R>(size, R(ExactInt(0))));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i <= m; ++i) rows[r][r + i] = p.coeff(m - i);
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i <= n; ++i) rows[n + r][r + i] = q.coeff(n - i);
  }
  return rows;
}

/// Res(p, q) as the Sylvester determinant.
template <class R>
R resultant(const UniPoly<R>& p, const UniPoly<R>& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
  return bareiss_determinant(sylvester_matrix(p, q));
}

/// Res_t(p(t), r(t, s)) as a polynomial in s, scaled to a positive leading
/// coefficient.
inline IntPoly resultant_in_t(const IntPoly& p, const BiPoly& r) {
  if (p.is_zero() || r.is_zero()) throw std::invalid_argument("resultant_in_t: zero input polynomial");
  std::vector<IntPoly> lifted;
  lifted.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) lifted.emplace_back(c);
  IntPoly res = resultant(BiPoly(std::move(lifted)), r);
  if (!res.is_zero() && res.leading() < 0) res = -res;
  return res;
}

/// s - (t^2 + t + 1), the map each characteristic root takes under the
/// trinomial transform.
inline BiPoly trinomial_root_map() {
  return BiPoly{IntPoly{ExactInt(-1), ExactInt(1)}, IntPoly{ExactInt(-1)}, IntPoly{ExactInt(-1)}};
}

/// Human-readable form, highest degree first, e.g. "t^3 - 2t^2 + 1".
inline std::string to_string(const IntPoly& p, const std::string& var = "t") {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::ptrdiff_t i = p.degree(); i >= 0; --i) {
    const ExactInt& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const ExactInt mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) out << mag;
    if (i >= 1) out << var;
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return out.str();
}

}  // namespace trinomial
