#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ncf.hpp"
#include "numeric.hpp"

// Pure functions; the recurrence memo is call-local, so there is no shared
// state and results are deterministic under any scheduling.
namespace tightcount::counting {

// binom(a, b), with the convention that out-of-range arguments give 0
// (b < 0, b > a, or a < 0).  This makes the k = n boundary terms of the
// recurrences below well-defined without special cases.
BigInt binomial(std::int64_t a, std::int64_t b);

// n-th Catalan number binom(2n, n) / (n + 1).
BigInt catalan(std::int64_t n);

// a_{k,n} = binom(2n-k, k) + binom(2n-k-1, k-1): the number of binary
// 2n-tuples with k ones and no two ones cyclically adjacent.
// k > n yields 0; k <= 0 is a domain error.
BigInt kaplansky(std::int64_t k, std::int64_t n);

// Independent oracle for kaplansky(): exhaustive enumeration of {0,1}^{2n}.
// Guarded by 2n <= max_bits.
BigInt kaplansky_bruteforce(std::int64_t k, std::int64_t n,
                            std::int64_t max_bits = 30);

// Number of isotopy classes of tight contact structures on the solid torus
// with boundary dividing set (n, -p, q), by the closed formula
//   C_n * ((r - s) * n + s).
BigInt count_closed(std::int64_t n, const ncf::Slope& slope);

// The same count by the inclusion-exclusion recurrence
//   N(n) = sum_{k=1}^{n} (-1)^{k+1} a_{k,n} N(n-k),   n >= 2,
// seeded with N(0) = s and N(1) = r.  Exact, evaluated bottom-up.
BigInt count_recurrence(std::int64_t n, const ncf::Slope& slope);

// S_n = sum_{k=0}^{n} (-1)^{n-k} binom(n, n-k) binom(n+k, n) / (n+k),
// the convolution coefficient behind the weighted Catalan recurrence.
// Vanishes for every n >= 1.
BigRat alternating_convolution(std::int64_t n);

// One row of a recurrence verification.  `degenerate` marks the n = 1 row
// of the recurrences that break down there (the derivation needs n >= 2;
// both sides are still reported so nothing is asserted silently).
struct RecurrenceCheck {
  std::int64_t n;
  BigInt lhs;
  BigInt rhs;
  bool holds;
  bool degenerate;
};

// C_n = sum (-1)^{k+1} a_{k,n} C_{n-k}.           Degenerate at n = 1.
std::vector<RecurrenceCheck> check_catalan_recurrence(std::int64_t n_max);
// (n+1) C_n = sum (-1)^{k+1} a_{k,n} (n-k+1) C_{n-k}.  Holds for all n >= 1.
std::vector<RecurrenceCheck> check_catalan_np1_recurrence(std::int64_t n_max);
// n C_n = sum (-1)^{k+1} a_{k,n} (n-k) C_{n-k}.    Degenerate at n = 1.
std::vector<RecurrenceCheck> check_catalan_n_recurrence(std::int64_t n_max);

// |T_x| for the admissible tuple class at each level k = ||x||:
//   k < n  -> N(n-k, -p, q);   k = n -> s.
// (Tuples with two cyclically adjacent ones contribute 0 and carry no level.)
std::map<std::int64_t, BigInt> canonical_level_sizes(std::int64_t n,
                                                     const ncf::Slope& slope);

// sum_{k=1}^{n} (-1)^{k+1} a_{k,n} t_sizes[k].  Requires every level
// 1..n to be present and nothing else; equals count_closed(n, slope) when
// fed canonical_level_sizes.
BigInt assemble_inclusion_exclusion(
    std::int64_t n, const ncf::Slope& slope,
    const std::map<std::int64_t, BigInt>& level_sizes);

}  // namespace tightcount::counting
