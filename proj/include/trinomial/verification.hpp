#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "trinomial/catalog.hpp"
#include "trinomial/reference_tables.hpp"
#include "trinomial/symbolic.hpp"
#include "trinomial/ternary.hpp"
#include "trinomial/transform_triangle.hpp"
#include "trinomial/trinomial_coefficients.hpp"

namespace trinomial {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline bool all_passed(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

/// Deterministic pseudo-random specs with every parameter in [-bound, bound],
/// gamma != 0 and initials not all zero.
inline std::vector<TernarySpec> random_specs(std::size_t count, std::uint64_t seed = 20240601, int bound = 5) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::vector<TernarySpec> specs;
  specs.reserve(count);
  while (specs.size() < count) {
    const int al = dist(rng), be = dist(rng), ga = dist(rng);
    const int a0 = dist(rng), a1 = dist(rng), a2 = dist(rng);
    if (ga == 0 || (a0 == 0 && a1 == 0 && a2 == 0)) continue;
    specs.emplace_back(al, be, ga, a0, a1, a2);
  }
  return specs;
}

inline std::string describe(const TernarySpec& s) {
  return "(" + s.alpha().str() + "," + s.beta().str() + "," + s.gamma().str() + "; " + s.a0().str() + "," +
         s.a1().str() + "," + s.a2().str() + ")";
}

/// Base cases of the diagonal, column and sum recurrences as polynomial
/// identities, plus perturbed negative controls that must fail.
inline std::vector<Check> symbolic_suite() {
  std::vector<Check> out;
  const auto record = [&out](const ProofResult& r, bool expect_hold, const std::string& label) {
    const bool ok = r.holds() == expect_hold;
    out.push_back({label + ": " + r.identity, ok,
                   r.holds() ? "HOLDS" : "FAILS (residual has " + std::to_string(r.residual().size()) + " terms)"});
  };
  for (std::size_t l = 0; l <= 3; ++l) record(verify_diagonal_base(l), true, "diagonal l=" + std::to_string(l));
  for (std::size_t k = 3; k <= 5; ++k) record(verify_column_base(k), true, "column k=" + std::to_string(k));
  record(verify_sum_base(), true, "sum n=6");
  record(verify_alt_sum_base(), true, "alternating sum n=6");

  SymbolicCoeffs bad_a = symbolic_coefficients();
  bad_a.A += MultiPoly(1);
  record(verify_diagonal_base(0, bad_a), false, "control A+1");
  SymbolicCoeffs bad_q = symbolic_coefficients();
  bad_q.Q += MultiPoly::variable(Var::gamma);
  record(verify_column_base(3, bad_q), false, "control Q+γ");
  SymbolicCoeffs bad_sum = symbolic_coefficients();
  bad_sum.sum6[0] += MultiPoly(1);
  record(verify_sum_base(bad_sum), false, "control sum6[0]+1");
  return out;
}

/// Fast recurrence paths against the triangle construction on random specs.
inline std::vector<Check> fuzz_suite(std::size_t cases = 200, std::size_t terms = 41, std::size_t column_limit = 20) {
  std::vector<Check> out;
  const auto specs = random_specs(cases);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const TernarySpec& spec = specs[i];
    auto gen = ternary_sequence(spec);
    const auto t = TransformTriangle<ExactInt>::build(gen, terms - 1 + 3);
    std::string failure;
    if (transform_fast(spec, terms) != transform(t, terms)) failure += " transform";
    for (std::size_t l = 0; l <= 3; ++l) {
      if (diagonal_fast(spec, l, terms) != diagonal(t, l, terms)) failure += " diagonal" + std::to_string(l);
    }
    const ColumnSums fast = sums_fast(spec, terms);
    for (std::size_t n = 0; n < terms; ++n) {
      if (fast.sums[n] != column_sum(t, n) || fast.alt_sums[n] != alt_column_sum(t, n)) {
        failure += " sums@" + std::to_string(n);
        break;
      }
    }
    const DerivedCoeffs d = derive(spec);
    try {
      for (std::size_t k = 3; k <= column_limit; ++k) {
        for (std::size_t n = 3; n <= k; ++n) {
          if (column_step(d, spec.gamma(), {t.at(n - 1, k), t.at(n - 2, k), t.at(n - 3, k)}) != t.at(n, k)) {
            failure += " column(" + std::to_string(n) + "," + std::to_string(k) + ")";
          }
        }
      }
    } catch (const exact_division_error& e) {
      failure += std::string(" ") + e.what();
    }
    const IntPoly expected{-d.C, -d.B, -d.A, ExactInt(1)};
    if (char_poly_transform(characteristic_polynomial(spec)) != expected) failure += " charpoly";
    out.push_back({"case " + std::to_string(i) + " " + describe(spec), failure.empty(),
                   failure.empty() ? "agrees" : "mismatch:" + failure});
  }
  return out;
}

/// Published reference triangles against computed values.
inline std::vector<Check> tables_suite() {
  std::vector<Check> out;
  for (const auto& table : reference::published_triangles()) {
    const auto t = get(std::string(table.source)).triangle(9);
    std::string failure;
    for (std::size_t n = 0; n < table.rows.size(); ++n) {
      for (std::size_t j = 0; j < table.rows[n].size(); ++j) {
        if (t.at(n, n + j) != table.rows[n][j]) failure += " a(" + std::to_string(n) + "," + std::to_string(n + j) + ")";
      }
    }
    for (std::size_t n = 0; n < table.sums.size(); ++n) {
      if (column_sum(t, n) != table.sums[n]) failure += " s" + std::to_string(n);
      if (alt_column_sum(t, n) != table.alt_sums[n]) failure += " s̄" + std::to_string(n);
    }
    out.push_back({"table " + std::string(table.source), failure.empty(), failure.empty() ? "exact" : failure});
  }
  std::string tri_failure;
  std::string sum_failure;
  for (std::size_t n = 0; n < reference::trinomial_rows().size(); ++n) {
    for (std::size_t k = 0; k < reference::trinomial_rows()[n].size(); ++k) {
      const auto kk = static_cast<std::int64_t>(k);
      if (trinomial(n, kk) != reference::trinomial_rows()[n][k]) tri_failure += " T(" + std::to_string(n) + "," + std::to_string(k) + ")";
      if (partial_sum(n, kk) != reference::partial_sum_rows()[n][k]) sum_failure += " S(" + std::to_string(n) + "," + std::to_string(k) + ")";
    }
  }
  out.push_back({"trinomial triangle rows 0..6", tri_failure.empty(), tri_failure.empty() ? "exact" : tri_failure});
  out.push_back({"partial-sum triangle rows 0..6", sum_failure.empty(), sum_failure.empty() ? "exact" : sum_failure});
  return out;
}

/// Every catalog OEIS fixture against the values computed here.
inline std::vector<Check> oeis_suite() {
  std::vector<Check> out;
  for (const auto& [name, entry] : catalog()) {
    for (const auto& fx : entry.oeis) {
      const auto computed = fx.compute(fx.terms.size());
      bool ok = computed.size() == fx.terms.size();
      for (std::size_t i = 0; ok && i < computed.size(); ++i) ok = computed[i].str() == fx.terms[i];
      out.push_back({fx.id + " (" + name + ": " + fx.role + ")", ok, ok ? "matches" : "differs"});
    }
  }
  return out;
}

/// Exploratory comparison of the row-j partial column sum reading; reports
/// agreement without asserting it.
inline std::vector<Check> j_offset_exploration(const std::string& source = "tribonacci", std::size_t max_n = 5) {
  std::vector<Check> out;
  const auto t = get(source).triangle(2 * max_n + 2);
  for (std::size_t n = 0; n <= max_n; ++n) {
    for (std::size_t j = 0; j <= n; ++j) {
      const std::size_t k = n + 1;
      const auto sides = j_offset_sides(t, n, j, k);
      out.push_back({"n=" + std::to_string(n) + " j=" + std::to_string(j) + " k=" + std::to_string(k),
                     sides.by_definition == sides.by_partial_sums,
                     sides.by_definition.str() + " vs " + sides.by_partial_sums.str()});
    }
  }
  return out;
}

}  // namespace trinomial
