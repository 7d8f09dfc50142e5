// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "trinomial/trinomial.hpp"

using namespace trinomial;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

std::string first_failure(const std::vector<Check>& checks) {
  std::size_t failed = 0;
  std::string first;
  for (const auto& c : checks) {
    if (c.passed) continue;
    if (failed++ == 0) first = c.name + " [" + c.detail + "]";
  }
  if (failed == 0) return std::to_string(checks.size()) + " checks";
  return std::to_string(failed) + "/" + std::to_string(checks.size()) + " failed, first: " + first;
}

Outcome from_checks(const std::vector<Check>& checks) { return {all_passed(checks), first_failure(checks)}; }

Outcome tables() {
  std::vector<Check> checks;
  for (auto& c : tables_suite()) {
    if (c.name.rfind("table ", 0) == 0) checks.push_back(std::move(c));
  }
  const auto fib = get("fibonacci").triangle(9);
  const auto trib = get("tribonacci").triangle(9);
  const auto nat = get("naturals").triangle(9);
  checks.push_back({"fibonacci s(9) = 1914660", column_sum(fib, 9) == 1914660, ""});
  checks.push_back({"tribonacci s̄(9) = -1972637", alt_column_sum(trib, 9) == -1972637, ""});
  checks.push_back({"naturals s(9) = 265716", column_sum(nat, 9) == 265716, ""});
  return from_checks(checks);
}

Outcome small_triangles() {
  std::vector<Check> checks;
  for (auto& c : tables_suite()) {
    if (c.name.rfind("table ", 0) != 0) checks.push_back(std::move(c));
  }
  checks.push_back({"S(6,4) = 134", partial_sum(6, 4) == 134, ""});
  return from_checks(checks);
}

Outcome row_sum_identities() {
  std::vector<Check> checks;
  for (std::size_t n = 0; n <= 200; ++n) {
    const RowSums by_table = row_sums(n);
    const bool ok = by_table == row_sums_closed_form(n);
    checks.push_back({"n=" + std::to_string(n), ok, ok ? "" : "table and closed form differ"});
  }
  for (std::size_t n = 0; n <= 30; ++n) {
    checks.push_back({"catalog column sums n=" + std::to_string(n), row_sums_via_catalog(n), ""});
  }
  return from_checks(checks);
}

Outcome fuzz() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Check> checks;
  const auto specs = random_specs(200);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const TernarySpec& spec = specs[i];
    auto gen = ternary_sequence(spec);
    const auto t = TransformTriangle<ExactInt>::build(gen, 43, 40);
    std::string failure;
    if (transform_fast(spec, 41) != transform(t, 41)) failure += " transform";
    for (std::size_t l = 0; l <= 3; ++l) {
      if (diagonal_fast(spec, l, 41) != diagonal(t, l, 41)) failure += " diagonal" + std::to_string(l);
    }
    const ColumnSums cs = sums_fast(spec, 41);
    for (std::size_t n = 0; n <= 40; ++n) {
      if (cs.sums[n] != column_sum(t, n) || cs.alt_sums[n] != alt_column_sum(t, n)) {
        failure += " sums@" + std::to_string(n);
        break;
      }
    }
    checks.push_back({"case " + std::to_string(i) + " " + describe(spec), failure.empty(), failure});
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome o = from_checks(checks);
  char buf[64];
  std::snprintf(buf, sizeof buf, " in %.2fs", seconds);
  o.detail += buf;
  return o;
}

Outcome column_recurrence() {
  std::vector<Check> checks;
  std::size_t entries = 0;
  for (const auto& spec : random_specs(200)) {
    auto gen = ternary_sequence(spec);
    const auto t = TransformTriangle<ExactInt>::build(gen, 20);
    const DerivedCoeffs d = derive(spec);
    std::string failure;
    for (std::size_t k = 3; k <= 20; ++k) {
      for (std::size_t n = 3; n <= k; ++n) {
        ++entries;
        try {
          if (column_step(d, spec.gamma(), {t.at(n - 1, k), t.at(n - 2, k), t.at(n - 3, k)}) != t.at(n, k)) {
            failure += " (" + std::to_string(n) + "," + std::to_string(k) + ")";
          }
        } catch (const exact_division_error&) {
          failure += " indivisible(" + std::to_string(n) + "," + std::to_string(k) + ")";
        }
      }
    }
    checks.push_back({describe(spec), failure.empty(), failure});
  }
  Outcome o = from_checks(checks);
  o.detail += ", " + std::to_string(entries) + " entries";
  return o;
}

Outcome resultants() {
  std::vector<Check> checks;
  for (const auto& spec : random_specs(100)) {
    const DerivedCoeffs d = derive(spec);
    const IntPoly expected{-d.C, -d.B, -d.A, ExactInt(1)};
    const IntPoly got = char_poly_transform(characteristic_polynomial(spec));
    checks.push_back({describe(spec), got == expected, to_string(got, "s")});
  }
  const IntPoly fib = char_poly_transform(IntPoly{ExactInt(-1), ExactInt(-1), ExactInt(1)});
  checks.push_back({"t^2 - t - 1", fib == IntPoly{ExactInt(4), ExactInt(-6), ExactInt(1)}, to_string(fib, "s")});
  return from_checks(checks);
}

Outcome symbolic() { return from_checks(symbolic_suite()); }

Outcome corrected_recurrences() {
  std::vector<Check> checks;
  const DerivedCoeffs d = derive(TernarySpec(1, 1, 1, 0, 0, 1));
  checks.push_back({"derive(1,1,1) = (7,-5,1)", d.A == 7 && d.B == -5 && d.C == 1, ""});

  const std::vector<ExactInt> diag{0, 1, 7, 44, 274, 1705, 10609};
  const std::vector<ExactInt> derived{7, -5, 1};
  const std::vector<ExactInt> printed{6, -4, 1};
  checks.push_back({"diagonal satisfies 7/-5/1", satisfies_recurrence(diag, derived), ""});
  checks.push_back({"diagonal violates 6/-4/1", !satisfies_recurrence(diag, printed), ""});

  const reference::PublishedTriangle* trib = nullptr;
  for (const auto& t : reference::published_triangles()) {
    if (t.source == "tribonacci") trib = &t;
  }
  std::vector<ExactInt> published_diag;
  std::vector<ExactInt> published_alt;
  for (const auto& row : trib->rows) published_diag.push_back(row.front());
  for (long long v : trib->alt_sums) published_alt.push_back(v);
  checks.push_back({"published diagonal prefix", std::equal(diag.begin(), diag.end(), published_diag.begin()), ""});

  // Correct lags n-3, n-4 give (-6, 3, 12, 13, 6, 1); the printed form
  // repeats an index, which amounts to (-6, 15, 0, 13, 6, 1).
  const std::vector<ExactInt> alt_correct(d.alt6.begin(), d.alt6.end());
  const std::vector<ExactInt> alt_printed{-6, 15, 0, 13, 6, 1};
  checks.push_back({"alt6 = (-6,3,12,13,6,1)", alt_correct == std::vector<ExactInt>{-6, 3, 12, 13, 6, 1}, ""});
  checks.push_back({"s̄ row satisfies distinct-index recurrence", satisfies_recurrence(published_alt, alt_correct), ""});
  checks.push_back({"s̄ row violates duplicate-index recurrence", !satisfies_recurrence(published_alt, alt_printed), ""});
  return from_checks(checks);
}

Outcome oeis() {
  const std::vector<std::string> wanted{"A082761", "A192806", "A036290", "A003462", "A014983", "A002378"};
  std::vector<Check> checks;
  for (const auto& id : wanted) {
    bool found = false;
    for (const auto& c : oeis_suite()) {
      if (c.name.rfind(id + " ", 0) == 0) {
        checks.push_back(c);
        found = true;
      }
    }
    if (!found) checks.push_back({id, false, "no fixture"});
  }
  return from_checks(checks);
}

Outcome two_power_fibonacci() {
  std::vector<Check> checks;
  const auto t = get("fibonacci").triangle(12);
  for (std::size_t k = 0; k <= 12; ++k) {
    for (std::size_t n = 0; n <= k; ++n) {
      const std::string at = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
      checks.push_back({"row identity " + at, fib_row_identity(t, n, k), ""});
      if (n >= 2) {
        const auto [first, second] = fib_cross_identities(n, k);
        checks.push_back({"cross identities " + at, first && second, ""});
      }
    }
  }
  return from_checks(checks);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 table reproduction (fibonacci, tribonacci, ones, naturals)", tables},
      {"2 trinomial and partial-sum triangle rows 0-6", small_triangles},
      {"3 row-sum identities n=0..200", row_sum_identities},
      {"4 fast paths vs triangle, 200 specs, n<=40", fuzz},
      {"5 column recurrence 3<=n<=k<=20", column_recurrence},
      {"6 resultant consistency", resultants},
      {"7 symbolic base cases and negative controls", symbolic},
      {"8 derived recurrences against the printed variants", corrected_recurrences},
      {"9 OEIS fixtures", oeis},
      {"10 2^n-Fibonacci identities n<=k<=12", two_power_fibonacci},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o{false, ""};
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failures;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << name << " -- " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
