#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "trinomial/multi_poly.hpp"
#include "trinomial/ternary.hpp"
#include "trinomial/transform_triangle.hpp"

namespace trinomial {

using SymbolicCoeffs = BasicDerivedCoeffs<MultiPoly>;
using SymbolicTriangle = TransformTriangle<MultiPoly>;

inline constexpr std::size_t kSymbolicSizeCap = 8;

/// Base sequence x, y, z, alpha z + beta y + gamma x, ... over Z[alpha..z].
inline SequenceGenerator<MultiPoly> symbolic_base() {
  using V = Var;
  return SequenceGenerator<MultiPoly>::linear_recurrence(
      {MultiPoly::variable(V::alpha), MultiPoly::variable(V::beta), MultiPoly::variable(V::gamma)},
      {MultiPoly::variable(V::x), MultiPoly::variable(V::y), MultiPoly::variable(V::z)});
}

/// A, B, C, P, Q and the sum recurrences as polynomials in alpha, beta, gamma.
inline SymbolicCoeffs symbolic_coefficients() {
  return derive_coefficients(MultiPoly::variable(Var::alpha), MultiPoly::variable(Var::beta),
                             MultiPoly::variable(Var::gamma));
}

/// Triangle with entries (n,k), n <= rows, n <= k <= cols, over the generic
/// ternary base. Both sizes are capped at 8.
inline SymbolicTriangle symbolic_triangle(std::size_t rows, std::size_t cols) {
  if (rows > kSymbolicSizeCap || cols > kSymbolicSizeCap) {
    throw std::length_error("symbolic_triangle: size cap is " + std::to_string(kSymbolicSizeCap) + " rows/columns");
  }
  if (rows > cols) throw std::invalid_argument("symbolic_triangle: rows must not exceed cols");
  auto base = symbolic_base();
  return SymbolicTriangle::build(base, cols, rows);
}

/// Both sides of a polynomial identity.
struct ProofResult {
  std::string identity;
  MultiPoly lhs;
  MultiPoly rhs;

  [[nodiscard]] bool holds() const { return lhs == rhs; }
  /// lhs - rhs; zero exactly when the identity holds.
  [[nodiscard]] MultiPoly residual() const { return lhs - rhs; }
};

/// a(3, 3+l) = A a(2, 2+l) + B a(1, 1+l) + C a(0, l) for 0 <= l <= 3.
inline ProofResult verify_diagonal_base(std::size_t offset, const SymbolicCoeffs& c = symbolic_coefficients()) {
  if (offset > 3) throw std::out_of_range("verify_diagonal_base: offset must be at most 3");
  const auto t = symbolic_triangle(3, 3 + offset);
  const std::size_t l = offset;
  return {"a(3," + std::to_string(3 + l) + ") = A a(2," + std::to_string(2 + l) + ") + B a(1," + std::to_string(1 + l) +
              ") + C a(0," + std::to_string(l) + ")",
          t.at(3, 3 + l), c.A * t.at(2, 2 + l) + c.B * t.at(1, 1 + l) + c.C * t.at(0, l)};
}

/// gamma a(3,k) = P a(2,k) + Q a(1,k) + C a(0,k) for 3 <= k <= 5.
inline ProofResult verify_column_base(std::size_t k, const SymbolicCoeffs& c = symbolic_coefficients()) {
  if (k < 3 || k > 5) throw std::out_of_range("verify_column_base: column must be in 3..5");
  const auto t = symbolic_triangle(3, k);
  const std::string col = std::to_string(k);
  return {"γ a(3," + col + ") = P a(2," + col + ") + Q a(1," + col + ") + C a(0," + col + ")",
          MultiPoly::variable(Var::gamma) * t.at(3, k), c.P * t.at(2, k) + c.Q * t.at(1, k) + c.C * t.at(0, k)};
}

/// s(6) = sum_{j=1}^{6} sum6[j-1] s(6-j), with s(n) the symbolic column sums.
inline ProofResult verify_sum_base(const SymbolicCoeffs& c = symbolic_coefficients()) {
  const auto t = symbolic_triangle(6, 6);
  MultiPoly rhs;
  for (std::size_t j = 1; j <= 6; ++j) rhs += c.sum6[j - 1] * column_sum(t, 6 - j);
  return {"s(6) = sum6 · (s(5), ..., s(0))", column_sum(t, 6), rhs};
}

/// Alternating-sum counterpart of verify_sum_base with alt6.
inline ProofResult verify_alt_sum_base(const SymbolicCoeffs& c = symbolic_coefficients()) {
  const auto t = symbolic_triangle(6, 6);
  MultiPoly rhs;
  for (std::size_t j = 1; j <= 6; ++j) rhs += c.alt6[j - 1] * alt_column_sum(t, 6 - j);
  return {"s̄(6) = alt6 · (s̄(5), ..., s̄(0))", alt_column_sum(t, 6), rhs};
}

/// Assignment (alpha, beta, gamma, x, y, z) for a concrete spec.
inline Assignment assignment_for(const TernarySpec& spec) {
  return {spec.alpha(), spec.beta(), spec.gamma(), spec.a0(), spec.a1(), spec.a2()};
}

}  // namespace trinomial
