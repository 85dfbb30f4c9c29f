#include "states.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "counting.hpp"

namespace tightcount::states {

State::State(std::vector<std::int32_t> partner) : partner_(std::move(partner)) {
  const auto size = static_cast<std::int32_t>(partner_.size());
  if (size < 2 || size % 2 != 0) {
    throw std::domain_error("state: needs an even number of points >= 2");
  }
  for (std::int32_t i = 1; i <= size; ++i) {
    std::int32_t j = partner_[i - 1];
    if (j < 1 || j > size || j == i || partner_[j - 1] != i) {
      throw std::domain_error("state: not a perfect matching");
    }
  }
  // Non-crossing check: chords close in last-opened-first-closed order.
  std::vector<std::int32_t> stack;
  for (std::int32_t i = 1; i <= size; ++i) {
    if (partner_[i - 1] > i) {
      stack.push_back(i);
    } else {
      if (stack.empty() || stack.back() != partner_[i - 1]) {
        throw std::domain_error("state: matching has crossing chords");
      }
      stack.pop_back();
    }
  }
}

State State::from_parentheses(const std::string& text) {
  std::vector<std::int32_t> partner(text.size(), 0);
  std::vector<std::int32_t> stack;
  for (std::size_t idx = 0; idx < text.size(); ++idx) {
    char c = text[idx];
    if (c == '(') {
      stack.push_back(static_cast<std::int32_t>(idx) + 1);
    } else if (c == ')') {
      if (stack.empty()) {
        throw std::domain_error("state: unbalanced parentheses");
      }
      std::int32_t open = stack.back();
      stack.pop_back();
      partner[open - 1] = static_cast<std::int32_t>(idx) + 1;
      partner[idx] = open;
    } else {
      throw std::domain_error("state: expected only '(' and ')'");
    }
  }
  if (!stack.empty()) {
    throw std::domain_error("state: unbalanced parentheses");
  }
  return State(std::move(partner));
}

std::string State::to_parentheses() const {
  std::string text(partner_.size(), ')');
  for (std::int32_t i = 1; i <= points(); ++i) {
    if (partner_[i - 1] > i) text[i - 1] = '(';
  }
  return text;
}

StateEnumerator::StateEnumerator(std::int64_t n, std::int64_t p,
                                 std::int64_t np_limit) {
  if (n < 1 || p < 1) {
    throw std::domain_error("enumerate_states: n and p must be positive");
  }
  if (n * p > np_limit) {
    throw resource_limit_error("enumerate_states: n*p exceeds the guard");
  }
  const auto m = static_cast<std::size_t>(n * p);
  current_ = std::string(m, '(') + std::string(m, ')');
}

std::optional<State> StateEnumerator::next() {
  if (done_) return std::nullopt;
  State result = State::from_parentheses(current_);
  ++emitted_;
  // Advance to the lexicographic successor: flip the rightmost '(' that can
  // become ')', then append the smallest valid completion.
  const auto n = static_cast<std::int32_t>(current_.size());
  std::int32_t balance = 0;
  std::vector<std::int32_t> balance_before(n);  // balance of current_[0..i-1]
  for (std::int32_t i = 0; i < n; ++i) {
    balance_before[i] = balance;
    balance += current_[i] == '(' ? 1 : -1;
  }
  for (std::int32_t i = n - 1; i >= 0; --i) {
    if (current_[i] != '(') continue;
    std::int32_t open = balance_before[i] - 1;  // balance once flipped to ')'
    std::int32_t rest = n - 1 - i;
    if (open < 0 || open > rest || (rest - open) % 2 != 0) continue;
    std::int32_t extra_opens = (rest - open) / 2;
    current_.resize(i);
    current_ += ')';
    current_.append(extra_opens, '(');
    current_.append(rest - extra_opens, ')');
    return result;
  }
  done_ = true;
  return result;
}

std::vector<std::int32_t> boundary_parallel_centers(const State& state) {
  const std::int32_t size = state.points();
  std::vector<std::int32_t> centers;
  for (std::int32_t a = 1; a <= size; ++a) {
    std::int32_t b = state.partner(a);
    if (b < a) continue;
    if (b == a + 1) {
      // Q_a and Q_{a+1} adjacent; the cut-off half-disk contains P_{a+1}.
      centers.push_back(a + 1);
    } else if (a == 1 && b == size) {
      // The wrap-around chord cuts off the half-disk through P_1.
      centers.push_back(1);
    }
  }
  std::sort(centers.begin(), centers.end());
  return centers;
}

std::vector<std::int32_t> centers_to_components(
    const std::vector<std::int32_t>& centers, std::int64_t n) {
  if (n < 1) {
    throw std::domain_error("centers_to_components: n must be positive");
  }
  std::vector<std::int32_t> components;
  for (std::int32_t i : centers) {
    components.push_back(static_cast<std::int32_t>((i - 1) % (2 * n)) + 1);
  }
  std::sort(components.begin(), components.end());
  components.erase(std::unique(components.begin(), components.end()),
                   components.end());
  return components;
}

bool admits_tuple(const State& state, const std::vector<std::uint8_t>& bits) {
  const auto two_n = static_cast<std::int64_t>(bits.size());
  if (two_n < 2 || two_n % 2 != 0 || state.points() % two_n != 0) {
    throw std::domain_error("admits_tuple: tuple length does not match state");
  }
  auto present =
      centers_to_components(boundary_parallel_centers(state), two_n / 2);
  for (std::int64_t i = 1; i <= two_n; ++i) {
    if (!bits[i - 1]) continue;
    if (!std::binary_search(present.begin(), present.end(),
                            static_cast<std::int32_t>(i))) {
      return false;
    }
  }
  return true;
}

BigInt count_admitting_states(std::int64_t n, std::int64_t p,
                              const std::vector<std::uint8_t>& bits,
                              std::int64_t np_limit) {
  if (static_cast<std::int64_t>(bits.size()) != 2 * n) {
    throw std::domain_error("count_admitting_states: tuple length must be 2n");
  }
  StateEnumerator stream(n, p, np_limit);
  BigInt count = 0;
  while (auto state = stream.next()) {
    if (admits_tuple(*state, bits)) ++count;
  }
  return count;
}

namespace {

// Piece-stitching used by disk_bypass_rewire.  Ends are encoded as:
//   >= 1  : boundary point (anchor)
//   <= -1 : loose cut end; -(1+k) = near side of slot k, -(4+k) = far side.
struct Piece {
  std::int32_t a;
  std::int32_t b;
};

constexpr std::int32_t near_end(int k) { return -(1 + k); }
constexpr std::int32_t far_end(int k) { return -(4 + k); }

}  // namespace

State disk_bypass_rewire(const State& state, std::int32_t center,
                         RewireDirection direction) {
  const std::int32_t size = state.points();
  if (size < 4) {
    throw std::domain_error("disk_bypass_rewire: needs at least 4 points");
  }
  if (center < 1 || center > size) {
    throw std::domain_error("disk_bypass_rewire: center out of range");
  }
  auto cyc = [size](std::int32_t i) {
    return static_cast<std::int32_t>(((i - 1) % size + size) % size) + 1;
  };
  const std::array<std::int32_t, 3> slot = {cyc(center - 1), center,
                                            cyc(center + 1)};

  // Cut the chords incident to the three slot points just inside those
  // endpoints.  A chord joining two slot points is cut twice and leaves a
  // free middle piece.
  std::vector<Piece> pieces;
  auto slot_of = [&](std::int32_t point) {
    for (int k = 0; k < 3; ++k) {
      if (slot[k] == point) return k;
    }
    return -1;
  };
  std::vector<std::uint8_t> cut(size + 1, 0);
  for (int k = 0; k < 3; ++k) cut[slot[k]] = 1;
  std::vector<std::uint8_t> handled(size + 1, 0);
  for (int k = 0; k < 3; ++k) {
    std::int32_t a = slot[k];
    if (handled[a]) continue;
    std::int32_t b = state.partner(a);
    int kb = slot_of(b);
    pieces.push_back({a, near_end(k)});
    if (kb >= 0) {
      pieces.push_back({b, near_end(kb)});
      pieces.push_back({far_end(k), far_end(kb)});
      handled[b] = 1;
    } else {
      pieces.push_back({far_end(k), b});
    }
    handled[a] = 1;
  }

  // Rejoin: the two non-crossing reconnections of the six cut ends.
  if (direction == RewireDirection::forward) {
    pieces.push_back({near_end(0), near_end(1)});
    pieces.push_back({far_end(1), far_end(2)});
    pieces.push_back({near_end(2), far_end(0)});
  } else {
    pieces.push_back({near_end(1), near_end(2)});
    pieces.push_back({far_end(0), far_end(1)});
    pieces.push_back({near_end(0), far_end(2)});
  }

  // Walk anchor-to-anchor through the loose ends.
  std::map<std::int32_t, std::vector<std::size_t>> at_end;
  for (std::size_t idx = 0; idx < pieces.size(); ++idx) {
    at_end[pieces[idx].a].push_back(idx);
    at_end[pieces[idx].b].push_back(idx);
  }
  std::vector<std::int32_t> partner(size, 0);
  for (std::int32_t i = 1; i <= size; ++i) {
    if (!cut[i] && slot_of(state.partner(i)) < 0) {
      partner[i - 1] = state.partner(i);  // untouched chord
    }
  }
  std::vector<std::uint8_t> used(pieces.size(), 0);
  std::vector<std::int32_t> anchors;
  for (const Piece& pc : pieces) {
    if (pc.a >= 1) anchors.push_back(pc.a);
    if (pc.b >= 1) anchors.push_back(pc.b);
  }
  for (std::int32_t start : anchors) {
    if (partner[start - 1] != 0) continue;
    std::int32_t end = start;
    std::size_t piece = at_end[start][0];
    for (;;) {
      used[piece] = 1;
      const Piece& pc = pieces[piece];
      std::int32_t other = pc.a == end ? pc.b : pc.a;
      if (other >= 1) {
        partner[start - 1] = other;
        partner[other - 1] = start;
        break;
      }
      const auto& incident = at_end[other];
      piece = incident[0] == piece ? incident[1] : incident[0];
      end = other;
    }
  }
  for (std::size_t idx = 0; idx < pieces.size(); ++idx) {
    if (!used[idx] && (pieces[idx].a < 0 && pieces[idx].b < 0)) {
      throw std::domain_error(
          "disk_bypass_rewire: move would create a closed component");
    }
  }

  try {
    return State(std::move(partner));
  } catch (const std::domain_error& e) {
    throw invariant_violation_error(
        std::string("disk_bypass_rewire: rejoined matching is invalid: ") +
        e.what());
  }
}

}  // namespace tightcount::states
