#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

// Everything here is a pure function over immutable values; unrestricted
// concurrent use is safe.
namespace tightcount::ncf {

// Reduced slope pair: 0 < q <= p, gcd(p, q) = 1.  A dividing set written
// (n, -p, q) carries one Slope; each of its 2n components has homology
// class -p*lambda + q*mu on the boundary torus.
struct Slope {
  std::int64_t p;
  std::int64_t q;

  Slope(std::int64_t p_, std::int64_t q_);

  friend bool operator==(const Slope&, const Slope&) = default;
  friend bool operator<(const Slope& a, const Slope& b) {
    return a.p != b.p ? a.p < b.p : a.q < b.q;
  }
};

// Negative continued fraction [r0, r1, ..., rk] with every entry <= -2;
// the single-entry expansion [-1] is the exceptional case for slope (1, 1).
//
//   -p/q = r0 - 1/(r1 - 1/(... - 1/rk))
class Expansion {
 public:
  explicit Expansion(std::vector<std::int64_t> entries);

  const std::vector<std::int64_t>& entries() const { return entries_; }
  bool is_minus_one() const {
    return entries_.size() == 1 && entries_[0] == -1;
  }
  std::string to_string() const;  // e.g. "[-2,-3]"

  friend bool operator==(const Expansion&, const Expansion&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

struct RsInvariants {
  BigInt r;
  BigInt s;
  friend bool operator==(const RsInvariants&, const RsInvariants&) = default;
};

// Unique expansion of -p/q with all entries <= -2 (or [-1] for (1,1)),
// by the ceiling-division recurrence: emit -ceil(a/b), then
// (a, b) <- (b, b*ceil(a/b) - a) until b = 0.
Expansion expand(const Slope& slope);

// Exact value of the nested fraction.  Throws std::domain_error if a zero
// sub-denominator arises (cannot happen for a valid Expansion; this guards
// malformed raw entry lists).
BigRat eval(const std::vector<std::int64_t>& entries);
BigRat eval(const Expansion& expansion);

// r = |(r0+1)(r1+1)...(r_{k-1}+1) * rk|,
// s = |(r0+1)(r1+1)...(r_{k-1}+1) * (rk+1)|; (1, 1) for [-1].
RsInvariants rs_invariants(const Expansion& expansion);

// The slope whose expansion is [r0, ..., rk, -m], together with that
// expansion.  Requires all entries <= -2 and m >= 2 so the extension is
// again a valid expansion.
std::pair<Slope, Expansion> extend(const Expansion& expansion, std::int64_t m);

// Slope of an exact rational value -p/q with p >= q >= 1 (value <= -1).
Slope slope_of_value(const BigRat& value);

}  // namespace tightcount::ncf
