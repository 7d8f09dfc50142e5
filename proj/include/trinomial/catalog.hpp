#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trinomial/exact_int.hpp"
#include "trinomial/ternary.hpp"
#include "trinomial/transform_triangle.hpp"
#include "trinomial/trinomial_coefficients.hpp"

namespace trinomial {

using IntSequence = std::function<ExactInt(std::size_t)>;

/// Closed forms for the transform b(n) and the column sums s(n), s-bar(n).
struct ClosedForms {
  IntSequence transform;
  IntSequence sums;
  IntSequence alt_sums;
};

/// An OEIS prefix and how this library reproduces it. `compute(count)`
/// returns the artifact's values aligned index-for-index with `terms`.
struct OeisFixture {
  std::string id;
  std::string role;
  std::vector<std::string> terms;
  std::function<std::vector<ExactInt>(std::size_t count)> compute;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  IntSequence term;
  std::optional<TernarySpec> ternary_embedding;
  std::optional<ClosedForms> closed_forms;
  std::vector<OeisFixture> oeis;

  [[nodiscard]] SequenceGenerator<ExactInt> generator() const { return SequenceGenerator<ExactInt>::closed_form(term); }

  /// Triangle with columns (and rows) through max_column.
  [[nodiscard]] TransformTriangle<ExactInt> triangle(std::size_t max_column) const {
    auto gen = generator();
    return TransformTriangle<ExactInt>::build(gen, max_column);
  }
};

class unknown_sequence_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// F(j), the Fibonacci numbers.
inline ExactInt fibonacci(std::size_t j) {
  ExactInt a = 0;
  ExactInt b = 1;
  for (std::size_t i = 0; i < j; ++i) {
    ExactInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

/// t(j), the Tribonacci numbers with t0 = t1 = 0, t2 = 1.
inline ExactInt tribonacci(std::size_t j) {
  std::array<ExactInt, 3> w{0, 0, 1};
  if (j < 3) return w[j];
  for (std::size_t i = 3; i <= j; ++i) {
    ExactInt next = w[0] + w[1] + w[2];
    w[0] = std::move(w[1]);
    w[1] = std::move(w[2]);
    w[2] = std::move(next);
  }
  return w[2];
}

/// The i-Fibonacci number F^[i](j) = i F(j).
inline ExactInt i_fibonacci(const ExactInt& i, std::size_t j) { return i * fibonacci(j); }

namespace detail {

inline std::vector<std::string> decimal_terms(std::initializer_list<long long> values) {
  std::vector<std::string> out;
  for (long long v : values) out.push_back(std::to_string(v));
  return out;
}

inline std::vector<ExactInt> prepend(ExactInt first, std::vector<ExactInt> rest) {
  rest.insert(rest.begin(), std::move(first));
  return rest;
}

inline std::vector<ExactInt> base_prefix(const IntSequence& term, std::size_t count) {
  std::vector<ExactInt> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(term(i));
  return out;
}

inline TransformTriangle<ExactInt> triangle_of(const IntSequence& term, std::size_t max_column) {
  auto gen = SequenceGenerator<ExactInt>::closed_form(term);
  return TransformTriangle<ExactInt>::build(gen, max_column);
}

inline std::vector<ExactInt> diagonal_of(const IntSequence& term, std::size_t offset, std::size_t count) {
  if (count == 0) return {};
  return diagonal(triangle_of(term, count - 1 + offset), offset, count);
}

inline std::vector<ExactInt> column_sums_of(const IntSequence& term, std::size_t count, bool alternating) {
  std::vector<ExactInt> out;
  if (count == 0) return out;
  const auto t = triangle_of(term, count - 1);
  for (std::size_t n = 0; n < count; ++n) out.push_back(alternating ? alt_column_sum(t, n) : column_sum(t, n));
  return out;
}

inline OeisFixture base_fixture(std::string id, IntSequence term, std::initializer_list<long long> values) {
  return {std::move(id), "base sequence", decimal_terms(values),
          [term = std::move(term)](std::size_t count) { return base_prefix(term, count); }};
}

inline std::map<std::string, CatalogEntry> build_catalog() {
  std::map<std::string, CatalogEntry> entries;

  {
    IntSequence term = [](std::size_t k) { return fibonacci(k); };
    CatalogEntry e{"fibonacci", "Fibonacci numbers F(k)", term, TernarySpec(2, 0, -1, 0, 1, 1), std::nullopt, {}};
    e.oeis.push_back(base_fixture("A000045", term, {0, 1, 1, 2, 3, 5, 8, 13, 21, 34}));
    e.oeis.push_back({"A082761", "diagonal 1 (trinomial transform of the Fibonacci numbers)",
                      decimal_terms({1, 4, 20, 104, 544, 2848, 14912, 78080, 408832, 2140672}),
                      [term](std::size_t count) { return diagonal_of(term, 1, count); }});
    entries.emplace(e.name, std::move(e));
  }
  {
    IntSequence term = [](std::size_t k) { return tribonacci(k); };
    CatalogEntry e{"tribonacci", "Tribonacci numbers t(k), t0 = t1 = 0, t2 = 1", term, TernarySpec(1, 1, 1, 0, 0, 1),
                   std::nullopt, {}};
    e.oeis.push_back(base_fixture("A000073", term, {0, 0, 1, 1, 2, 4, 7, 13, 24, 44}));
    e.oeis.push_back({"A192806", "diagonal 2 with one extra leading term",
                      decimal_terms({1, 1, 4, 24, 149, 927, 5768, 35890, 223317, 1389537}),
                      [term](std::size_t count) {
                        if (count == 0) return std::vector<ExactInt>{};
                        return prepend(1, diagonal_of(term, 2, count - 1));
                      }});
    entries.emplace(e.name, std::move(e));
  }
  {
    IntSequence term = [](std::size_t) { return ExactInt(1); };
    ClosedForms forms{
        [](std::size_t n) { return ipow(3, n); },
        [](std::size_t n) { return exact_div(ipow(3, n + 1) - 1, 2); },
        [](std::size_t n) { return exact_div(3 * ipow(-3, n) + 1, 4); },
    };
    CatalogEntry e{"ones", "constant sequence 1", term, TernarySpec(1, 1, -1, 1, 1, 1), forms, {}};
    e.oeis.push_back(base_fixture("A000012", term, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
    e.oeis.push_back({"A000244", "trinomial transform 3^n",
                      decimal_terms({1, 3, 9, 27, 81, 243, 729, 2187, 6561, 19683}),
                      [term](std::size_t count) { return diagonal_of(term, 0, count); }});
    // Both sequences start at (3^0 - 1)/2 = 0, the empty column sum s(-1).
    e.oeis.push_back({"A003462", "column sums: s(n) = a(n+1)",
                      decimal_terms({0, 1, 4, 13, 40, 121, 364, 1093, 3280, 9841}),
                      [term](std::size_t count) {
                        if (count == 0) return std::vector<ExactInt>{};
                        return prepend(0, column_sums_of(term, count - 1, false));
                      }});
    e.oeis.push_back({"A014983", "alternating column sums: s-bar(n) = a(n+1)",
                      decimal_terms({0, 1, -2, 7, -20, 61, -182, 547, -1640, 4921}),
                      [term](std::size_t count) {
                        if (count == 0) return std::vector<ExactInt>{};
                        return prepend(0, column_sums_of(term, count - 1, true));
                      }});
    entries.emplace(e.name, std::move(e));
  }
  {
    IntSequence term = [](std::size_t k) { return ExactInt(k); };
    ClosedForms forms{
        [](std::size_t n) { return ExactInt(n) * ipow(3, n); },
        [](std::size_t n) { return ExactInt(n) * exact_div(ipow(3, n + 1) - 1, 2); },
        [](std::size_t n) { return ExactInt(n) * exact_div(3 * ipow(-3, n) + 1, 4); },
    };
    CatalogEntry e{"naturals", "non-negative integers k", term, TernarySpec(3, -3, 1, 0, 1, 2), forms, {}};
    e.oeis.push_back(base_fixture("A001477", term, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}));
    e.oeis.push_back({"A036290", "trinomial transform n 3^n",
                      decimal_terms({0, 3, 18, 81, 324, 1215, 4374, 15309, 52488, 177147}),
                      [term](std::size_t count) { return diagonal_of(term, 0, count); }});
    entries.emplace(e.name, std::move(e));
  }
  {
    IntSequence term = [](std::size_t k) { return sign_power(static_cast<std::int64_t>(k)); };
    ClosedForms forms{
        [](std::size_t) { return ExactInt(1); },
        [](std::size_t n) { return n % 2 == 1 ? ExactInt(0) : ExactInt(1); },
        // a(i,n) = (-1)^(n+i), so the alternating sum is (-1)^n (n+1).
        [](std::size_t n) { return sign_power(static_cast<std::int64_t>(n)) * (n + 1); },
    };
    CatalogEntry e{"alt_sign", "(-1)^k", term, TernarySpec(-1, -1, -1, 1, -1, 1), forms, {}};
    e.oeis.push_back(base_fixture("A033999", term, {1, -1, 1, -1, 1, -1, 1, -1, 1, -1}));
    entries.emplace(e.name, std::move(e));
  }
  {
    IntSequence term = [](std::size_t k) { return sign_power(static_cast<std::int64_t>(k)) * k; };
    ClosedForms forms{
        [](std::size_t n) { return ExactInt(n); },
        [](std::size_t n) { return (n % 2 == 1 || n == 0) ? ExactInt(0) : ExactInt(n); },
        [](std::size_t n) { return sign_power(static_cast<std::int64_t>(n)) * ExactInt(n) * (n + 1); },
    };
    CatalogEntry e{"alt_sign_naturals", "(-1)^k k", term, TernarySpec(-3, -3, -1, 0, -1, 2), forms, {}};
    e.oeis.push_back(base_fixture("A038608", term, {0, -1, 2, -3, 4, -5, 6, -7, 8, -9}));
    e.oeis.push_back({"A002378", "sign-normalized alternating column sums: (-1)^n s-bar(n) = n(n+1)",
                      decimal_terms({0, 2, 6, 12, 20, 30, 42, 56, 72, 90}),
                      [term](std::size_t count) {
                        auto alt = column_sums_of(term, count, true);
                        for (std::size_t n = 0; n < alt.size(); ++n) alt[n] *= sign_power(static_cast<std::int64_t>(n));
                        return alt;
                      }});
    entries.emplace(e.name, std::move(e));
  }
  return entries;
}

}  // namespace detail

/// Read-only registry of the named base sequences.
inline const std::map<std::string, CatalogEntry>& catalog() {
  static const std::map<std::string, CatalogEntry> entries = detail::build_catalog();
  return entries;
}

inline std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& [name, entry] : catalog()) names.push_back(name);
  return names;
}

inline const CatalogEntry& get(const std::string& name) {
  const auto& entries = catalog();
  if (auto it = entries.find(name); it != entries.end()) return it->second;
  std::string known;
  for (const auto& n : catalog_names()) known += (known.empty() ? "" : ", ") + n;
  throw unknown_sequence_error("unknown sequence '" + name + "' (available: " + known + ")");
}

/// Whether the Fibonacci triangle entry a(n,k) equals 2^n F(k+n).
inline bool fib_row_identity(const TransformTriangle<ExactInt>& fib_triangle, std::size_t n, std::size_t k) {
  if (n > k || !fib_triangle.contains(n, k)) throw std::out_of_range("fib_row_identity: needs n <= k within the triangle");
  return fib_triangle.at(n, k) == i_fibonacci(ipow(2, n), k + n);
}

inline bool fib_row_identity(std::size_t n, std::size_t k) {
  if (n > k) throw std::out_of_range("fib_row_identity: needs n <= k");
  return fib_row_identity(get("fibonacci").triangle(k), n, k);
}

/// The two 2^n-Fibonacci relations for 2 <= n <= k:
///   F^[2^n](k+n) = 2 F^[2^(n-1)](k+n-1) + 4 F^[2^(n-2)](k+n-2)
///   F^[2^n](k+n) = 6 F^[2^(n-1)](k+n-2) - 4 F^[2^(n-2)](k+n-4)
inline std::pair<bool, bool> fib_cross_identities(std::size_t n, std::size_t k) {
  if (n < 2 || n > k) throw std::out_of_range("fib_cross_identities: needs 2 <= n <= k");
  const ExactInt lhs = i_fibonacci(ipow(2, n), k + n);
  const ExactInt i1 = ipow(2, n - 1);
  const ExactInt i2 = ipow(2, n - 2);
  const bool first = lhs == 2 * i_fibonacci(i1, k + n - 1) + 4 * i_fibonacci(i2, k + n - 2);
  const bool second = lhs == 6 * i_fibonacci(i1, k + n - 2) - 4 * i_fibonacci(i2, k + n - 4);
  return {first, second};
}

/// Whether the Tribonacci triangle entry a(n,k) equals t(k+2n).
inline bool tribonacci_shift_identity(std::size_t n, std::size_t k) {
  if (n > k) throw std::out_of_range("tribonacci_shift_identity: needs n <= k");
  return get("tribonacci").triangle(k).at(n, k) == tribonacci(k + 2 * n);
}

/// Whether every closed form of `name` matches the triangle at index n.
inline bool closed_form_checks(const std::string& name, std::size_t n) {
  const CatalogEntry& e = get(name);
  if (!e.closed_forms) throw std::invalid_argument("closed_form_checks: '" + name + "' has no closed forms");
  const auto t = e.triangle(n);
  return e.closed_forms->transform(n) == t.at(n, n) && e.closed_forms->sums(n) == column_sum(t, n) &&
         e.closed_forms->alt_sums(n) == alt_column_sum(t, n);
}

/// The four row sums of S recovered as column sums of the ones, (-1)^k,
/// naturals and (-1)^k k triangles, compared against row_sums(n).
inline bool row_sums_via_catalog(std::size_t n) {
  const auto s_of = [n](const char* name) { return column_sum_via_S(get(name).triangle(n), n); };
  const RowSums via_catalog{s_of("ones"), s_of("alt_sign"), s_of("naturals"), s_of("alt_sign_naturals")};
  return via_catalog == row_sums(n);
}

/// Whether the Fibonacci s and s-bar satisfy their degree-4 reductions
/// s(k) = 7s(k-1) - 9s(k-2) - 2s(k-3) + 4s(k-4) and
/// s-bar(k) = -5s-bar(k-1) + 3s-bar(k-2) + 10s-bar(k-3) + 4s-bar(k-4)
/// for 4 <= k < count.
inline bool fib_reduced_sum_recurrences_hold(std::size_t count) {
  const auto t = get("fibonacci").triangle(count == 0 ? 0 : count - 1);
  const std::array<ExactInt, 4> sum_coeffs{7, -9, -2, 4};
  const std::array<ExactInt, 4> alt_coeffs{-5, 3, 10, 4};
  for (std::size_t k = 4; k < count; ++k) {
    ExactInt s = 0;
    ExactInt sb = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      s += sum_coeffs[j] * column_sum(t, k - 1 - j);
      sb += alt_coeffs[j] * alt_column_sum(t, k - 1 - j);
    }
    if (s != column_sum(t, k) || sb != alt_column_sum(t, k)) return false;
  }
  return true;
}

}  // namespace trinomial
