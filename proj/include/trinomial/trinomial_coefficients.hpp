#pragma once

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "trinomial/exact_int.hpp"

namespace trinomial {

/// Rows 0..N of the trinomial triangle, T(n,k) = [x^k] (1+x+x^2)^n with
/// 0 <= k <= 2n. Built once by the additive recurrence
/// T(n,k) = T(n-1,k-2) + T(n-1,k-1) + T(n-1,k).
class TrinomialTable {
 public:
  TrinomialTable() : TrinomialTable(0) {}
  explicit TrinomialTable(std::size_t max_row) { extend_to(max_row); }

  [[nodiscard]] std::size_t max_row() const { return rows_.size() - 1; }

  /// T(n,k), zero for k outside 0..2n. Requires n <= max_row().
  [[nodiscard]] ExactInt at(std::size_t n, std::int64_t k) const {
    if (n >= rows_.size()) throw std::out_of_range("TrinomialTable: row " + std::to_string(n) + " not built");
    if (k < 0 || k > static_cast<std::int64_t>(2 * n)) return 0;
    return rows_[n][static_cast<std::size_t>(k)];
  }

  [[nodiscard]] const std::vector<ExactInt>& row(std::size_t n) const { return rows_.at(n); }

  void extend_to(std::size_t max_row) {
    if (rows_.empty()) rows_.push_back({ExactInt(1)});
    while (rows_.size() <= max_row) {
      const auto& prev = rows_.back();
      const std::size_t width = prev.size() + 2;
      std::vector<ExactInt> next(width, ExactInt(0));
      for (std::size_t j = 0; j < prev.size(); ++j) {
        next[j] += prev[j];
        next[j + 1] += prev[j];
        next[j + 2] += prev[j];
      }
      rows_.push_back(std::move(next));
    }
  }

 private:
  std::vector<std::vector<ExactInt>> rows_;
};

/// Column partial sums S(n,k) = sum_{j=0..n} T(n-j, k-j), built by
/// S(n,k) = S(n-1,k-1) + T(n,k) with S(n,0) = S(n,2n) = 1.
class PartialSumTable {
 public:
  PartialSumTable() : PartialSumTable(0) {}
  explicit PartialSumTable(std::size_t max_row) : trinomials_(max_row) { extend_to(max_row); }

  [[nodiscard]] std::size_t max_row() const { return rows_.size() - 1; }

  /// S(n,k), zero for k outside 0..2n.
  [[nodiscard]] ExactInt at(std::size_t n, std::int64_t k) const {
    if (n >= rows_.size()) throw std::out_of_range("PartialSumTable: row " + std::to_string(n) + " not built");
    if (k < 0 || k > static_cast<std::int64_t>(2 * n)) return 0;
    return rows_[n][static_cast<std::size_t>(k)];
  }

  [[nodiscard]] const std::vector<ExactInt>& row(std::size_t n) const { return rows_.at(n); }
  [[nodiscard]] const TrinomialTable& trinomials() const { return trinomials_; }

  void extend_to(std::size_t max_row) {
    trinomials_.extend_to(max_row);
    if (rows_.empty()) rows_.push_back({ExactInt(1)});
    while (rows_.size() <= max_row) {
      const std::size_t n = rows_.size();
      const auto& prev = rows_.back();
      std::vector<ExactInt> next(2 * n + 1);
      next[0] = 1;
      next[2 * n] = 1;
      for (std::size_t k = 1; k < 2 * n; ++k) {
        next[k] = prev[k - 1] + trinomials_.row(n)[k];
      }
      rows_.push_back(std::move(next));
    }
  }

 private:
  TrinomialTable trinomials_;
  std::vector<std::vector<ExactInt>> rows_;
};

namespace detail {

/// Process-wide cache behind the free functions; grows on demand.
class SharedTables {
 public:
  static SharedTables& instance() {
    static SharedTables tables;
    return tables;
  }

  ExactInt trinomial(std::size_t n, std::int64_t k) {
    std::lock_guard lock(mutex_);
    if (n > sums_.max_row()) sums_.extend_to(n);
    return sums_.trinomials().at(n, k);
  }

  ExactInt partial_sum(std::size_t n, std::int64_t k) {
    std::lock_guard lock(mutex_);
    if (n > sums_.max_row()) sums_.extend_to(n);
    return sums_.at(n, k);
  }

 private:
  std::mutex mutex_;
  PartialSumTable sums_;
};

}  // namespace detail

/// T(n,k); zero when k is outside 0..2n.
inline ExactInt trinomial(std::size_t n, std::int64_t k) { return detail::SharedTables::instance().trinomial(n, k); }

/// S(n,k); zero when k is outside 0..2n.
inline ExactInt partial_sum(std::size_t n, std::int64_t k) {
  return detail::SharedTables::instance().partial_sum(n, k);
}

/// T(n,i) from the binomial double sum sum_j C(n,j) C(j,i-j). Unlike
/// trinomial(), an index outside 0..2n is an error here.
inline ExactInt trinomial_via_binomials(std::size_t n, std::int64_t i) {
  const auto nn = static_cast<std::int64_t>(n);
  if (i < 0 || i > 2 * nn) {
    throw std::out_of_range("trinomial_via_binomials: index " + std::to_string(i) + " outside 0.." +
                            std::to_string(2 * nn));
  }
  ExactInt total = 0;
  for (std::int64_t j = 0; j <= i; ++j) total += binomial(nn, j) * binomial(j, i - j);
  return total;
}

struct RowSums {
  ExactInt sum;
  ExactInt alt_sum;
  ExactInt weighted_sum;
  ExactInt alt_weighted_sum;

  friend bool operator==(const RowSums&, const RowSums&) = default;
};

/// Sums over row n of S: plain, sign-alternating, k-weighted, and
/// sign-alternating k-weighted. Always summed directly.
inline RowSums row_sums(const PartialSumTable& sums, std::size_t n) {
  RowSums out{0, 0, 0, 0};
  const auto& row = sums.row(n);
  for (std::size_t k = 0; k < row.size(); ++k) {
    const ExactInt& v = row[k];
    const ExactInt weighted = v * k;
    out.sum += v;
    out.weighted_sum += weighted;
    if (k % 2 == 0) {
      out.alt_sum += v;
      out.alt_weighted_sum += weighted;
    } else {
      out.alt_sum -= v;
      out.alt_weighted_sum -= weighted;
    }
  }
  return out;
}

inline RowSums row_sums(std::size_t n) { return row_sums(PartialSumTable(n), n); }

/// Closed forms of the four row sums of S, for checking row_sums().
inline RowSums row_sums_closed_form(std::size_t n) {
  const ExactInt half_geometric = exact_div(ipow(3, n + 1) - 1, 2);
  const bool odd = n % 2 == 1;
  return RowSums{
      half_geometric,
      odd ? ExactInt(0) : ExactInt(1),
      half_geometric * n,
      (odd || n == 0) ? ExactInt(0) : ExactInt(n),
  };
}

}  // namespace trinomial
