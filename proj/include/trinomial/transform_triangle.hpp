#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trinomial/exact_int.hpp"
#include "trinomial/ring.hpp"
#include "trinomial/trinomial_coefficients.hpp"

namespace trinomial {

/// Memoizing index -> value generator. Terms are produced in index order and
/// each rule call sees every earlier term, so closed forms and recurrences
/// share one interface.
template <CommutativeRing R>
class SequenceGenerator {
 public:
  using Rule = std::function<R(std::size_t index, std::span<const R> earlier)>;

  explicit SequenceGenerator(Rule rule) : rule_(std::move(rule)) {}

  /// Wraps a closed form that ignores earlier terms.
  static SequenceGenerator closed_form(std::function<R(std::size_t)> f) {
    return SequenceGenerator([f = std::move(f)](std::size_t i, std::span<const R>) { return f(i); });
  }

  /// Constant-coefficient linear recurrence: for index >= initials.size(),
  /// term(i) = sum_j coeffs[j] * term(i - 1 - j).
  static SequenceGenerator linear_recurrence(std::vector<R> coeffs, std::vector<R> initials) {
    return SequenceGenerator([coeffs = std::move(coeffs), initials = std::move(initials)](
                                 std::size_t i, std::span<const R> earlier) {
      if (i < initials.size()) return initials[i];
      R acc = ring_zero<R>();
      for (std::size_t j = 0; j < coeffs.size() && j < i; ++j) acc = acc + coeffs[j] * earlier[i - 1 - j];
      return acc;
    });
  }

  const R& operator()(std::size_t index) {
    while (memo_.size() <= index) {
      const std::size_t next = memo_.size();
      R value = rule_(next, std::span<const R>(memo_.data(), memo_.size()));
      memo_.push_back(std::move(value));
    }
    return memo_[index];
  }

  std::vector<R> prefix(std::size_t count) {
    if (count > 0) (*this)(count - 1);
    return {memo_.begin(), memo_.begin() + static_cast<std::ptrdiff_t>(count)};
  }

  /// Number of terms materialized so far.
  [[nodiscard]] std::size_t computed() const { return memo_.size(); }

 private:
  Rule rule_;
  std::vector<R> memo_;
};

/// The trinomial transform triangle: row 0 is a base sequence and
/// a(n,k) = a(n-1,k-1) + a(n-1,k) + a(n-1,k+1) for 1 <= n <= k.
///
/// Entries are kept for 0 <= n <= min(k, max_row) and k <= max_column.
/// Entry (n,k) reads base indices k-n..k+n, so a triangle with columns
/// through K and rows through N pulls exactly K+N+1 base terms.
template <CommutativeRing R>
class TransformTriangle {
 public:
  static TransformTriangle build(SequenceGenerator<R>& base, std::size_t max_column,
                                 std::optional<std::size_t> max_row = std::nullopt) {
    const std::size_t rows = max_row.value_or(max_column);
    if (rows > max_column) {
      throw std::invalid_argument("TransformTriangle: max_row exceeds max_column");
    }
    TransformTriangle t;
    t.max_column_ = max_column;
    t.max_row_ = rows;
    t.base_ = base.prefix(max_column + rows + 1);

    // Row n is materialized over columns n..K+N-n so that the next row can
    // read one column further right; only columns up to K are kept.
    std::vector<R> wide = t.base_;
    t.rows_.emplace_back(wide.begin(), wide.begin() + static_cast<std::ptrdiff_t>(max_column + 1));
    for (std::size_t n = 1; n <= rows; ++n) {
      const std::size_t last = max_column + rows - n;
      std::vector<R> next;
      next.reserve(last - n + 1);
      // wide[j] holds column (n-1)+j of row n-1
      for (std::size_t k = n; k <= last; ++k) {
        const std::size_t j = k - (n - 1);
        next.push_back(wide[j - 1] + wide[j] + wide[j + 1]);
      }
      wide = std::move(next);
      t.rows_.emplace_back(wide.begin(), wide.begin() + static_cast<std::ptrdiff_t>(max_column - n + 1));
    }
    return t;
  }

  [[nodiscard]] std::size_t max_column() const { return max_column_; }
  [[nodiscard]] std::size_t max_row() const { return max_row_; }

  [[nodiscard]] bool contains(std::size_t n, std::size_t k) const {
    return n <= max_row_ && n <= k && k <= max_column_;
  }

  [[nodiscard]] const R& at(std::size_t n, std::size_t k) const {
    if (!contains(n, k)) {
      throw std::out_of_range("TransformTriangle: entry (" + std::to_string(n) + "," + std::to_string(k) +
                              ") outside the built range");
    }
    return rows_[n][k - n];
  }

  /// Row n, columns n..max_column.
  [[nodiscard]] std::span<const R> row(std::size_t n) const { return rows_.at(n); }

  /// Base term a_i for 0 <= i <= max_column + max_row.
  [[nodiscard]] const R& base(std::size_t i) const { return base_.at(i); }
  [[nodiscard]] std::span<const R> base_terms() const { return base_; }

  /// Column k, rows 0..min(k, max_row).
  [[nodiscard]] std::vector<R> column(std::size_t k) const {
    std::vector<R> out;
    for (std::size_t n = 0; n <= std::min(k, max_row_); ++n) out.push_back(at(n, k));
    return out;
  }

 private:
  TransformTriangle() = default;

  std::size_t max_column_ = 0;
  std::size_t max_row_ = 0;
  std::vector<R> base_;
  std::vector<std::vector<R>> rows_;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw std::out_of_range(what);
}

template <CommutativeRing R>
R scale(const ExactInt& c, const R& v) {
  return R(c) * v;
}

}  // namespace detail

/// a(n,k) from row 0 alone: sum_{i=k-n}^{k+n} T(n, i-k+n) a(0,i).
template <CommutativeRing R>
R entry_direct(const TransformTriangle<R>& t, std::size_t n, std::size_t k) {
  detail::require(n <= k && k <= t.max_column() && k + n < t.base_terms().size(),
                  "entry_direct: (" + std::to_string(n) + "," + std::to_string(k) + ") out of range");
  R acc = ring_zero<R>();
  for (std::size_t i = k - n; i <= k + n; ++i) {
    acc = acc + detail::scale(trinomial(n, static_cast<std::int64_t>(i + n - k)), t.base(i));
  }
  return acc;
}

/// (a(n, n+offset)) for n = 0..count-1.
template <CommutativeRing R>
std::vector<R> diagonal(const TransformTriangle<R>& t, std::size_t offset, std::size_t count) {
  detail::require(count == 0 || (count - 1 + offset <= t.max_column() && count - 1 <= t.max_row()),
                  "diagonal: " + std::to_string(count) + " terms at offset " + std::to_string(offset) +
                      " exceed the built triangle");
  std::vector<R> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) out.push_back(t.at(n, n + offset));
  return out;
}

/// Main diagonal, which is the trinomial transform of the base.
template <CommutativeRing R>
std::vector<R> transform(const TransformTriangle<R>& t, std::size_t count) {
  return diagonal(t, 0, count);
}

/// b(n) = sum_{i=0}^{2n} T(n,i) a(i), straight from the definition.
template <CommutativeRing R>
std::vector<R> trinomial_transform(std::span<const R> base, std::size_t count) {
  detail::require(count == 0 || 2 * (count - 1) < base.size(),
                  "trinomial_transform: needs " + std::to_string(2 * count - 1) + " base terms");
  std::vector<R> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    R acc = ring_zero<R>();
    for (std::size_t i = 0; i <= 2 * n; ++i) {
      acc = acc + detail::scale(trinomial(n, static_cast<std::int64_t>(i)), base[i]);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

/// s(n) = sum_{i=0}^{n} a(i,n).
template <CommutativeRing R>
R column_sum(const TransformTriangle<R>& t, std::size_t n) {
  detail::require(n <= t.max_column() && n <= t.max_row(), "column_sum: column " + std::to_string(n) + " not built");
  R acc = ring_zero<R>();
  for (std::size_t i = 0; i <= n; ++i) acc = acc + t.at(i, n);
  return acc;
}

/// s-bar(n) = sum_{i=0}^{n} (-1)^i a(i,n).
template <CommutativeRing R>
R alt_column_sum(const TransformTriangle<R>& t, std::size_t n) {
  detail::require(n <= t.max_column() && n <= t.max_row(),
                  "alt_column_sum: column " + std::to_string(n) + " not built");
  R acc = ring_zero<R>();
  for (std::size_t i = 0; i <= n; ++i) acc = (i % 2 == 0) ? acc + t.at(i, n) : acc - t.at(i, n);
  return acc;
}

/// s(n) = sum_{l=0}^{2n} S(n,l) a(0,l).
template <CommutativeRing R>
R column_sum_via_S(const TransformTriangle<R>& t, std::size_t n) {
  detail::require(2 * n < t.base_terms().size(), "column_sum_via_S: needs base terms through " + std::to_string(2 * n));
  R acc = ring_zero<R>();
  for (std::size_t l = 0; l <= 2 * n; ++l) acc = acc + detail::scale(partial_sum(n, static_cast<std::int64_t>(l)), t.base(l));
  return acc;
}

/// Both sides of the partial column sum identity for n <= k:
/// sum_{i=0}^{n} a(i,k) and sum_{l=k-n}^{k+n} S(n, l-k+n) a(0,l).
template <CommutativeRing R>
struct PartialColumnSum {
  R by_definition;
  R by_partial_sums;
};

template <CommutativeRing R>
PartialColumnSum<R> partial_column_sum_sides(const TransformTriangle<R>& t, std::size_t n, std::size_t k) {
  detail::require(n <= k && k <= t.max_column() && n <= t.max_row() && k + n < t.base_terms().size(),
                  "partial_column_sum: (" + std::to_string(n) + "," + std::to_string(k) + ") out of range");
  PartialColumnSum<R> out{ring_zero<R>(), ring_zero<R>()};
  for (std::size_t i = 0; i <= n; ++i) out.by_definition = out.by_definition + t.at(i, k);
  for (std::size_t l = k - n; l <= k + n; ++l) {
    out.by_partial_sums =
        out.by_partial_sums + detail::scale(partial_sum(n, static_cast<std::int64_t>(l + n - k)), t.base(l));
  }
  return out;
}

/// sum_{i=0}^{n} a(i,k); throws std::logic_error if the S-weighted form disagrees.
template <CommutativeRing R>
R partial_column_sum(const TransformTriangle<R>& t, std::size_t n, std::size_t k) {
  auto sides = partial_column_sum_sides(t, n, k);
  if (!(sides.by_definition == sides.by_partial_sums)) {
    throw std::logic_error("partial_column_sum: S-weighted form disagrees at (" + std::to_string(n) + "," +
                           std::to_string(k) + ")");
  }
  return sides.by_definition;
}

/// Exploratory only: both sides of the row-j generalization read as
/// sum_{i=j}^{n} a(i,k) = sum_{l=k-n+j}^{k+n-j} S(n-j, l-k+n-j) a(j,l).
/// Nothing asserts these agree.
template <CommutativeRing R>
PartialColumnSum<R> j_offset_sides(const TransformTriangle<R>& t, std::size_t n, std::size_t j, std::size_t k) {
  detail::require(j <= n && n <= k && n <= t.max_row() && k + n - j <= t.max_column(),
                  "j_offset_sides: (n,j,k) = (" + std::to_string(n) + "," + std::to_string(j) + "," +
                      std::to_string(k) + ") out of range");
  PartialColumnSum<R> out{ring_zero<R>(), ring_zero<R>()};
  for (std::size_t i = j; i <= n; ++i) out.by_definition = out.by_definition + t.at(i, k);
  const std::size_t depth = n - j;
  for (std::size_t l = k - depth; l <= k + depth; ++l) {
    if (l < j) continue;  // row j starts at column j
    out.by_partial_sums = out.by_partial_sums +
                          detail::scale(partial_sum(depth, static_cast<std::int64_t>(l + depth - k)), t.at(j, l));
  }
  return out;
}

}  // namespace trinomial
