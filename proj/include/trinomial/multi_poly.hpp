#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

#include "trinomial/exact_int.hpp"

namespace trinomial {

/// Variable order of the symbolic ring Z[alpha, beta, gamma, x, y, z]:
/// three recurrence coefficients followed by three initial values.
enum class Var : std::size_t { alpha = 0, beta, gamma, x, y, z };

inline constexpr std::size_t kNumVars = 6;

using Exponents = std::array<std::uint32_t, kNumVars>;
using Assignment = std::array<ExactInt, kNumVars>;

/// Graded lexicographic order, larger terms first.
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da > db;
    return a > b;
  }
};

/// Sparse multivariate integer polynomial in canonical form: the term map
/// never stores a zero coefficient, so equality is map equality.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, ExactInt, GradedLexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(const ExactInt& constant) {
    if (constant != 0) terms_.emplace(Exponents{}, constant);
  }
  explicit MultiPoly(std::int64_t constant) : MultiPoly(ExactInt(constant)) {}

  static MultiPoly variable(Var v) {
    Exponents e{};
    e[static_cast<std::size_t>(v)] = 1;
    return term(e, 1);
  }

  static MultiPoly term(const Exponents& e, const ExactInt& coeff) {
    MultiPoly p;
    if (coeff != 0) p.terms_.emplace(e, coeff);
    return p;
  }

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  [[nodiscard]] ExactInt evaluate(const Assignment& at) const {
    ExactInt total = 0;
    for (const auto& [e, c] : terms_) {
      ExactInt value = c;
      for (std::size_t i = 0; i < kNumVars; ++i) {
        if (e[i] != 0) value *= ipow(at[i], e[i]);
      }
      total += value;
    }
    return total;
  }

  /// Coefficient of `v` as a polynomial in the remaining variables; the
  /// result keeps only terms whose exponent of `v` equals `power`.
  [[nodiscard]] MultiPoly coefficient_of(Var v, std::uint32_t power) const {
    const auto idx = static_cast<std::size_t>(v);
    MultiPoly out;
    for (const auto& [e, c] : terms_) {
      if (e[idx] != power) continue;
      Exponents rest = e;
      rest[idx] = 0;
      out.terms_.emplace(rest, c);
    }
    return out;
  }

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  MultiPoly& operator+=(const MultiPoly& q) {
    for (const auto& [e, c] : q.terms_) accumulate(e, c);
    return *this;
  }

  MultiPoly& operator-=(const MultiPoly& q) {
    for (const auto& [e, c] : q.terms_) accumulate(e, -c);
    return *this;
  }

  friend MultiPoly operator+(MultiPoly p, const MultiPoly& q) { return p += q; }
  friend MultiPoly operator-(MultiPoly p, const MultiPoly& q) { return p -= q; }

  friend MultiPoly operator-(MultiPoly p) {
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
  }

  friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
    MultiPoly out;
    for (const auto& [ep, cp] : p.terms_) {
      for (const auto& [eq, cq] : q.terms_) {
        Exponents e;
        for (std::size_t i = 0; i < kNumVars; ++i) e[i] = ep[i] + eq[i];
        out.accumulate(e, cp * cq);
      }
    }
    return out;
  }

  MultiPoly& operator*=(const MultiPoly& q) { return *this = *this * q; }

 private:
  void accumulate(const Exponents& e, const ExactInt& c) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

namespace detail {

inline const char* var_symbol(std::size_t i) {
  static constexpr std::array<const char*, kNumVars> names{"α", "β", "γ", "x", "y", "z"};
  return names[i];
}

inline std::string superscript(std::uint32_t n) {
  static constexpr std::array<const char*, 10> digits{"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  for (char c : std::to_string(n)) out += digits[static_cast<std::size_t>(c - '0')];
  return out;
}

inline std::string monomial_string(const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (e[i] == 0) continue;
    out += var_symbol(i);
    if (e[i] > 1) out += superscript(e[i]);
  }
  return out;
}

}  // namespace detail

/// Canonical text in graded-lex order, e.g. "α²+2α+β+3".
inline std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const std::string mono = detail::monomial_string(e);
    if (c < 0) {
      out << "-";
    } else if (!first) {
      out << "+";
    }
    const ExactInt mag = abs(c);
    if (mag != 1 || mono.empty()) out << mag;
    out << mono;
    first = false;
  }
  return out.str();
}

/// Groups a polynomial that is linear in the initial values x, y, z, e.g.
/// "(αγ+2γ+1)x + (αβ+2β+γ+2)y + (α²+2α+β+3)z". Falls back to to_string()
/// when the polynomial is not of that shape.
inline std::string to_grouped_string(const MultiPoly& p) {
  MultiPoly covered;
  std::ostringstream out;
  bool first = true;
  for (Var v : {Var::x, Var::y, Var::z}) {
    const MultiPoly coeff = p.coefficient_of(v, 1);
    if (coeff.is_zero()) continue;
    covered += coeff * MultiPoly::variable(v);
    if (!first) out << " + ";
    const std::string c = to_string(coeff);
    if (c != "1") out << ((coeff.size() == 1 && c.front() != '-') ? c : "(" + c + ")");
    out << detail::var_symbol(static_cast<std::size_t>(v));
    first = false;
  }
  if (first || !(covered == p)) return to_string(p);
  return out.str();
}

}  // namespace trinomial
