#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "counting.hpp"

using namespace tightcount;
using ncf::Slope;

TEST_CASE("binomial convention zeroes out-of-range arguments") {
  CHECK(counting::binomial(5, 2) == 10);
  CHECK(counting::binomial(0, 0) == 1);
  CHECK(counting::binomial(3, -1) == 0);
  CHECK(counting::binomial(3, 4) == 0);
  CHECK(counting::binomial(-2, 0) == 0);
}

TEST_CASE("catalan pinned values") {
  CHECK(counting::catalan(0) == 1);
  CHECK(counting::catalan(1) == 1);
  CHECK(counting::catalan(3) == 5);
  CHECK(counting::catalan(10) == 16796);
  CHECK(counting::catalan(30) == BigInt("3814986502092304"));
  CHECK_THROWS_AS(counting::catalan(-1), std::domain_error);
}

TEST_CASE("kaplansky pinned values") {
  CHECK(counting::kaplansky(1, 2) == 4);
  CHECK(counting::kaplansky(2, 2) == 2);
  CHECK(counting::kaplansky(3, 3) == 2);
  CHECK(counting::kaplansky(2, 3) == 9);
  CHECK(counting::kaplansky(1, 1) == 2);  // the degenerate 2-cycle row
  CHECK(counting::kaplansky(4, 3) == 0);  // k > n: no such tuple
  CHECK_THROWS_AS(counting::kaplansky(0, 3), std::domain_error);
}

TEST_CASE("kaplansky brute force pinned values and guard") {
  CHECK(counting::kaplansky_bruteforce(1, 2) == 4);
  CHECK(counting::kaplansky_bruteforce(2, 3) == 9);
  CHECK(counting::kaplansky_bruteforce(2, 2) == 2);
  CHECK_THROWS_AS(counting::kaplansky_bruteforce(1, 16),
                  resource_limit_error);
}

TEST_CASE("closed form matches enumeration up to 2n = 20") {
  for (std::int64_t n = 1; n <= 10; ++n) {
    for (std::int64_t k = 1; k <= n; ++k) {
      REQUIRE(counting::kaplansky(k, n) == counting::kaplansky_bruteforce(k, n));
    }
  }
}

TEST_CASE("count_closed pinned values") {
  CHECK(counting::count_closed(1, Slope(1, 1)) == 1);
  // n = 1 reproduces r for any slope.
  CHECK(counting::count_closed(1, Slope(5, 3)) == 3);
  CHECK(counting::count_closed(1, Slope(2, 1)) == 2);
  // C_2 * ((3-2)*2 + 2) = 2 * 4.
  CHECK(counting::count_closed(2, Slope(5, 3)) == 8);
  CHECK(counting::count_closed(4, Slope(1, 1)) == 14);
  CHECK_THROWS_AS(counting::count_closed(0, Slope(5, 3)), std::domain_error);
}

TEST_CASE("count_recurrence pinned values") {
  CHECK(counting::count_recurrence(0, Slope(5, 3)) == 2);  // s
  CHECK(counting::count_recurrence(1, Slope(5, 3)) == 3);  // r
  // 4*3 - 2*2 with a_{1,2} = 4, a_{2,2} = 2.
  CHECK(counting::count_recurrence(2, Slope(5, 3)) == 8);
}

TEST_CASE("closed formula equals recurrence across a sweep") {
  for (std::int64_t p = 1; p <= 20; ++p) {
    for (std::int64_t q = 1; q <= p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      Slope s(p, q);
      for (std::int64_t n = 1; n <= 30; ++n) {
        REQUIRE(counting::count_closed(n, s) == counting::count_recurrence(n, s));
      }
    }
  }
}

TEST_CASE("slope (1,1) gives Catalan numbers") {
  for (std::int64_t n = 1; n <= 14; ++n) {
    REQUIRE(counting::count_closed(n, Slope(1, 1)) == counting::catalan(n));
  }
}

TEST_CASE("alternating convolution vanishes") {
  CHECK(counting::alternating_convolution(1) == 0);
  CHECK(counting::alternating_convolution(2) == 0);
  CHECK(counting::alternating_convolution(5) == 0);
  for (std::int64_t n = 1; n <= 60; ++n) {
    REQUIRE(counting::alternating_convolution(n) == 0);
  }
  CHECK_THROWS_AS(counting::alternating_convolution(0), std::domain_error);
}

TEST_CASE("catalan recurrence rows") {
  auto rows = counting::check_catalan_recurrence(3);
  REQUIRE(rows.size() == 3);
  // n = 1 is the degenerate row: C_1 = 1 against a_{1,1} C_0 = 2.
  CHECK(rows[0].degenerate);
  CHECK(rows[0].lhs == 1);
  CHECK(rows[0].rhs == 2);
  CHECK_FALSE(rows[0].holds);
  // n = 2: 2 = 4*1 - 2*1.
  CHECK(rows[1].holds);
  CHECK(rows[1].rhs == 2);
  // n = 3: 5 = 6*2 - 9*1 + 2*1.
  CHECK(rows[2].holds);
  CHECK(rows[2].rhs == 5);
  for (const auto& row : counting::check_catalan_recurrence(100)) {
    if (!row.degenerate) REQUIRE(row.holds);
  }
}

TEST_CASE("weighted catalan recurrences") {
  // (n+1)C_n form: 3C_2 = 6 = 4*2*1 - 2*1*1; holds at n = 1 as well.
  auto np1 = counting::check_catalan_np1_recurrence(100);
  for (const auto& row : np1) REQUIRE(row.holds);
  CHECK(np1[1].lhs == 6);

  // nC_n form: 2C_2 = 4 = 4*1*C_1 - 2*0*C_0; degenerate at n = 1.
  auto nn = counting::check_catalan_n_recurrence(100);
  CHECK(nn[0].degenerate);
  CHECK(nn[0].lhs == 1);
  CHECK(nn[0].rhs == 0);
  CHECK(nn[1].lhs == 4);
  CHECK(nn[1].rhs == 4);
  for (const auto& row : nn) {
    if (!row.degenerate) REQUIRE(row.holds);
  }
  // 4C_3 = 20 = 36 - 18 + 2.
  CHECK(np1[2].lhs == 20);
  CHECK(np1[2].rhs == 20);
}

TEST_CASE("inclusion-exclusion assembly") {
  using counting::assemble_inclusion_exclusion;
  using counting::canonical_level_sizes;

  Slope s53(5, 3);
  auto sizes = canonical_level_sizes(2, s53);
  CHECK(sizes.at(1) == 3);  // N(1) = r
  CHECK(sizes.at(2) == 2);  // s
  CHECK(assemble_inclusion_exclusion(2, s53, sizes) == 8);

  Slope one(1, 1);
  CHECK(assemble_inclusion_exclusion(2, one, canonical_level_sizes(2, one)) ==
        2);

  Slope s21(2, 1);
  CHECK(assemble_inclusion_exclusion(3, s21, canonical_level_sizes(3, s21)) ==
        20);

  auto missing = canonical_level_sizes(3, s21);
  missing.erase(2);
  CHECK_THROWS_AS(assemble_inclusion_exclusion(3, s21, missing),
                  std::domain_error);
}

TEST_CASE("monotonicity in n for r > s") {
  Slope s(7, 4);
  BigInt prev = counting::count_closed(1, s);
  for (std::int64_t n = 2; n <= 25; ++n) {
    BigInt cur = counting::count_closed(n, s);
    REQUIRE(cur > prev);
    prev = cur;
  }
}
