#include "counting.hpp"

#include <bit>

#include "errors.hpp"

namespace tightcount::counting {

BigInt binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) {
    return 0;
  }
  b = std::min(b, a - b);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

BigInt catalan(std::int64_t n) {
  if (n < 0) {
    throw std::domain_error("catalan: n must be non-negative");
  }
  return binomial(2 * n, n) / (n + 1);
}

BigInt kaplansky(std::int64_t k, std::int64_t n) {
  if (k <= 0) {
    throw std::domain_error("kaplansky: k must be positive");
  }
  if (n < 1) {
    throw std::domain_error("kaplansky: n must be positive");
  }
  return binomial(2 * n - k, k) + binomial(2 * n - k - 1, k - 1);
}

BigInt kaplansky_bruteforce(std::int64_t k, std::int64_t n,
                            std::int64_t max_bits) {
  if (k <= 0) {
    throw std::domain_error("kaplansky_bruteforce: k must be positive");
  }
  if (n < 1) {
    throw std::domain_error("kaplansky_bruteforce: n must be positive");
  }
  const std::int64_t bits = 2 * n;
  if (bits > max_bits) {
    throw resource_limit_error("kaplansky_bruteforce: 2n exceeds the guard");
  }
  const std::uint64_t top = std::uint64_t{1} << bits;
  // both ends of the cycle: x_1 and x_{2n}
  const std::uint64_t wrap = (std::uint64_t{1} << (bits - 1)) | 1;
  std::int64_t count = 0;
  for (std::uint64_t mask = 0; mask < top; ++mask) {
    if (std::popcount(mask) != k) continue;
    bool adjacent = (mask & (mask >> 1)) != 0;
    if (!adjacent && (mask & wrap) == wrap) adjacent = true;
    if (!adjacent) ++count;
  }
  return count;
}

BigInt count_closed(std::int64_t n, const ncf::Slope& slope) {
  if (n < 1) {
    throw std::domain_error("count_closed: n must be positive");
  }
  auto rs = ncf::rs_invariants(ncf::expand(slope));
  return catalan(n) * ((rs.r - rs.s) * n + rs.s);
}

BigInt count_recurrence(std::int64_t n, const ncf::Slope& slope) {
  if (n < 0) {
    throw std::domain_error("count_recurrence: n must be non-negative");
  }
  auto rs = ncf::rs_invariants(ncf::expand(slope));
  std::vector<BigInt> memo;
  memo.reserve(n + 1);
  memo.push_back(rs.s);  // N(0): shorthand for the count one bypass below n = 1
  if (n >= 1) memo.push_back(rs.r);
  for (std::int64_t m = 2; m <= n; ++m) {
    BigInt total = 0;
    for (std::int64_t k = 1; k <= m; ++k) {
      BigInt term = kaplansky(k, m) * memo[m - k];
      if (k % 2 == 1) {
        total += term;
      } else {
        total -= term;
      }
    }
    memo.push_back(total);
  }
  return memo[n];
}

BigRat alternating_convolution(std::int64_t n) {
  if (n < 1) {
    throw std::domain_error("alternating_convolution: n must be positive");
  }
  BigRat sum = 0;
  for (std::int64_t k = 0; k <= n; ++k) {
    BigRat term = BigRat(binomial(n, n - k) * binomial(n + k, n), n + k);
    if ((n - k) % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

namespace {

// Shared driver: lhs(n) vs sum_{k=1}^{n} (-1)^{k+1} a_{k,n} weight(n-k) C_{n-k}.
// `weight` multiplies the Catalan number by 1, (m+1), or m per form.
enum class Weight { one, m_plus_1, m };

std::vector<RecurrenceCheck> check_recurrence(std::int64_t n_max, Weight w,
                                              bool degenerate_at_1) {
  if (n_max < 1) {
    throw std::domain_error("recurrence check: n_max must be positive");
  }
  std::vector<BigInt> cat;
  cat.reserve(n_max + 1);
  for (std::int64_t i = 0; i <= n_max; ++i) cat.push_back(catalan(i));
  auto weighted = [&](std::int64_t m) -> BigInt {
    switch (w) {
      case Weight::one:
        return cat[m];
      case Weight::m_plus_1:
        return cat[m] * (m + 1);
      case Weight::m:
        return cat[m] * m;
    }
    return 0;
  };
  std::vector<RecurrenceCheck> rows;
  rows.reserve(n_max);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    BigInt rhs = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
      BigInt term = kaplansky(k, n) * weighted(n - k);
      if (k % 2 == 1) {
        rhs += term;
      } else {
        rhs -= term;
      }
    }
    BigInt lhs = weighted(n);
    rows.push_back({n, lhs, rhs, lhs == rhs, degenerate_at_1 && n == 1});
  }
  return rows;
}

}  // namespace

std::vector<RecurrenceCheck> check_catalan_recurrence(std::int64_t n_max) {
  return check_recurrence(n_max, Weight::one, /*degenerate_at_1=*/true);
}

std::vector<RecurrenceCheck> check_catalan_np1_recurrence(std::int64_t n_max) {
  return check_recurrence(n_max, Weight::m_plus_1, /*degenerate_at_1=*/false);
}

std::vector<RecurrenceCheck> check_catalan_n_recurrence(std::int64_t n_max) {
  return check_recurrence(n_max, Weight::m, /*degenerate_at_1=*/true);
}

std::map<std::int64_t, BigInt> canonical_level_sizes(std::int64_t n,
                                                     const ncf::Slope& slope) {
  if (n < 1) {
    throw std::domain_error("canonical_level_sizes: n must be positive");
  }
  std::map<std::int64_t, BigInt> sizes;
  for (std::int64_t k = 1; k < n; ++k) {
    sizes[k] = count_recurrence(n - k, slope);
  }
  sizes[n] = ncf::rs_invariants(ncf::expand(slope)).s;
  return sizes;
}

BigInt assemble_inclusion_exclusion(
    std::int64_t n, const ncf::Slope& slope,
    const std::map<std::int64_t, BigInt>& level_sizes) {
  if (n < 1) {
    throw std::domain_error("assemble_inclusion_exclusion: n must be positive");
  }
  (void)slope;  // the slope enters through the sizes; kept for interface parity
  if (level_sizes.size() != static_cast<std::size_t>(n)) {
    throw std::domain_error(
        "assemble_inclusion_exclusion: need exactly the levels 1..n");
  }
  BigInt total = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    auto it = level_sizes.find(k);
    if (it == level_sizes.end()) {
      throw std::domain_error(
          "assemble_inclusion_exclusion: missing level " + std::to_string(k));
    }
    BigInt term = kaplansky(k, n) * it->second;
    if (k % 2 == 1) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

}  // namespace tightcount::counting
