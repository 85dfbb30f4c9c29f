#include "ncf.hpp"

#include <limits>
#include <numeric>
#include <sstream>

namespace tightcount::ncf {

Slope::Slope(std::int64_t p_, std::int64_t q_) : p(p_), q(q_) {
  if (p <= 0 || q <= 0) {
    throw std::domain_error("slope: p and q must be positive");
  }
  if (q > p) {
    throw std::domain_error("slope: requires q <= p");
  }
  if (std::gcd(p, q) != 1) {
    throw std::domain_error("slope: p and q must be coprime");
  }
}

Expansion::Expansion(std::vector<std::int64_t> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw std::domain_error("expansion: entry list is empty");
  }
  if (is_minus_one()) {
    return;
  }
  for (std::int64_t r : entries_) {
    if (r > -2) {
      throw std::domain_error("expansion: entries must all be <= -2");
    }
  }
}

std::string Expansion::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out << ',';
    out << entries_[i];
  }
  out << ']';
  return out.str();
}

Expansion expand(const Slope& slope) {
  std::vector<std::int64_t> entries;
  std::int64_t a = slope.p;
  std::int64_t b = slope.q;
  while (b != 0) {
    std::int64_t c = (a + b - 1) / b;  // ceil(a/b), a,b > 0
    entries.push_back(-c);
    std::int64_t next = b * c - a;
    a = b;
    b = next;
  }
  return Expansion(std::move(entries));
}

BigRat eval(const std::vector<std::int64_t>& entries) {
  if (entries.empty()) {
    throw std::domain_error("eval: entry list is empty");
  }
  BigRat value = entries.back();
  for (auto it = entries.rbegin() + 1; it != entries.rend(); ++it) {
    if (value == 0) {
      throw std::domain_error("eval: zero sub-denominator");
    }
    value = BigRat(*it) - 1 / value;
  }
  return value;
}

BigRat eval(const Expansion& expansion) { return eval(expansion.entries()); }

RsInvariants rs_invariants(const Expansion& expansion) {
  if (expansion.is_minus_one()) {
    return {BigInt(1), BigInt(1)};
  }
  const auto& e = expansion.entries();
  BigInt prefix = 1;
  for (std::size_t i = 0; i + 1 < e.size(); ++i) {
    prefix *= e[i] + 1;
  }
  BigInt r = abs(prefix * e.back());
  BigInt s = abs(prefix * (e.back() + 1));
  return {r, s};
}

Slope slope_of_value(const BigRat& value) {
  if (value > -1) {
    throw std::domain_error("slope_of_value: expected a value <= -1");
  }
  BigInt num = -numerator(value);
  BigInt den = denominator(value);
  if (num > std::numeric_limits<std::int64_t>::max()) {
    throw resource_limit_error("slope_of_value: slope does not fit in 64 bits");
  }
  return Slope(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

std::pair<Slope, Expansion> extend(const Expansion& expansion,
                                   std::int64_t m) {
  if (expansion.is_minus_one()) {
    throw std::domain_error("extend: base expansion must have entries <= -2");
  }
  if (m < 2) {
    throw unsupported_error("extend: requires m >= 2");
  }
  std::vector<std::int64_t> entries = expansion.entries();
  entries.push_back(-m);
  Expansion extended(std::move(entries));
  return {slope_of_value(eval(extended)), extended};
}

}  // namespace tightcount::ncf
