#include <gtest/gtest.h>

#include "trinomial/catalog.hpp"
#include "trinomial/reference_tables.hpp"

using namespace trinomial;

namespace {

std::vector<ExactInt> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

std::vector<ExactInt> alt_sums(const std::string& name, std::size_t count) {
  const auto t = get(name).triangle(count - 1);
  std::vector<ExactInt> out;
  for (std::size_t n = 0; n < count; ++n) out.push_back(alt_column_sum(t, n));
  return out;
}

}  // namespace

TEST(Catalog, Names) {
  EXPECT_EQ(catalog_names(), (std::vector<std::string>{"alt_sign", "alt_sign_naturals", "fibonacci", "naturals", "ones",
                                                        "tribonacci"}));
  EXPECT_THROW(get("lucas"), unknown_sequence_error);
}

TEST(Catalog, EmbeddingsReproduceTheBase) {
  for (const auto& [name, entry] : catalog()) {
    ASSERT_TRUE(entry.ternary_embedding) << name;
    auto gen = ternary_sequence(*entry.ternary_embedding);
    for (std::size_t k = 0; k < 30; ++k) EXPECT_EQ(gen(k), entry.term(k)) << name << " k=" << k;
  }
}

TEST(Catalog, EmbeddedFastPathsMatchTriangles) {
  for (const auto& [name, entry] : catalog()) {
    const auto t = entry.triangle(15);
    EXPECT_EQ(transform_fast(*entry.ternary_embedding, 12), transform(t, 12)) << name;
    const ColumnSums cs = sums_fast(*entry.ternary_embedding, 16);
    for (std::size_t n = 0; n <= 15; ++n) {
      EXPECT_EQ(cs.sums[n], column_sum(t, n)) << name;
      EXPECT_EQ(cs.alt_sums[n], alt_column_sum(t, n)) << name;
    }
  }
}

TEST(Catalog, PublishedTables) {
  for (const auto& table : reference::published_triangles()) {
    const auto t = get(std::string(table.source)).triangle(9);
    for (std::size_t n = 0; n < table.rows.size(); ++n) {
      for (std::size_t j = 0; j < table.rows[n].size(); ++j) EXPECT_EQ(t.at(n, n + j), table.rows[n][j]);
    }
    for (std::size_t n = 0; n <= 9; ++n) {
      EXPECT_EQ(column_sum(t, n), table.sums[n]) << table.source;
      EXPECT_EQ(alt_column_sum(t, n), table.alt_sums[n]) << table.source;
    }
  }
}

TEST(Catalog, ClosedForms) {
  for (const char* name : {"ones", "naturals", "alt_sign", "alt_sign_naturals"}) {
    for (std::size_t n = 0; n <= 25; ++n) EXPECT_TRUE(closed_form_checks(name, n)) << name << " n=" << n;
  }
  EXPECT_THROW(closed_form_checks("fibonacci", 3), std::invalid_argument);
}

TEST(Catalog, AlternatingSignSums) {
  EXPECT_EQ(alt_sums("alt_sign", 10), ints({1, -2, 3, -4, 5, -6, 7, -8, 9, -10}));
  EXPECT_EQ(alt_sums("alt_sign_naturals", 10), ints({0, -2, 6, -12, 20, -30, 42, -56, 72, -90}));
  EXPECT_EQ(alt_sums("ones", 10), ints({1, -2, 7, -20, 61, -182, 547, -1640, 4921, -14762}));
}

TEST(Catalog, OeisFixtures) {
  for (const auto& [name, entry] : catalog()) {
    for (const auto& fx : entry.oeis) {
      const auto got = fx.compute(fx.terms.size());
      ASSERT_EQ(got.size(), fx.terms.size()) << fx.id;
      for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i].str(), fx.terms[i]) << fx.id << " term " << i;
    }
  }
}

TEST(Catalog, FixturesCoverTheRequiredIds) {
  std::vector<std::string> ids;
  for (const auto& [name, entry] : catalog()) {
    for (const auto& fx : entry.oeis) ids.push_back(fx.id);
  }
  for (const char* id : {"A082761", "A192806", "A036290", "A003462", "A014983", "A002378"}) {
    EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
  }
}

TEST(Fibonacci, PowerOfTwoRows) {
  const auto t = get("fibonacci").triangle(12);
  for (std::size_t k = 0; k <= 12; ++k) {
    for (std::size_t n = 0; n <= k; ++n) {
      EXPECT_TRUE(fib_row_identity(t, n, k));
      if (n >= 2) {
        const auto [first, second] = fib_cross_identities(n, k);
        EXPECT_TRUE(first);
        EXPECT_TRUE(second);
      }
    }
  }
  EXPECT_TRUE(fib_row_identity(3, 5));
  EXPECT_THROW(fib_row_identity(4, 3), std::out_of_range);
  EXPECT_THROW(fib_cross_identities(1, 3), std::out_of_range);
  EXPECT_EQ(i_fibonacci(4, 10), 220);
}

TEST(Fibonacci, ReducedSumRecurrences) { EXPECT_TRUE(fib_reduced_sum_recurrences_hold(30)); }

TEST(Tribonacci, RowsAreShiftedTribonacci) {
  for (std::size_t k = 0; k <= 10; ++k) {
    for (std::size_t n = 0; n <= k; ++n) EXPECT_TRUE(tribonacci_shift_identity(n, k)) << n << "," << k;
  }
}

TEST(Catalog, RowSumsFromColumnSums) {
  for (std::size_t n = 0; n <= 20; ++n) EXPECT_TRUE(row_sums_via_catalog(n)) << n;
}
