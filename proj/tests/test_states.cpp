#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "counting.hpp"
#include "states.hpp"

using namespace tightcount;
using states::State;
using states::StateEnumerator;

namespace {

State make_state(std::initializer_list<std::pair<int, int>> chords,
                 int points) {
  std::vector<std::int32_t> partner(points, 0);
  for (auto [a, b] : chords) {
    partner[a - 1] = b;
    partner[b - 1] = a;
  }
  return State(std::move(partner));
}

std::vector<std::uint8_t> bits_of(std::initializer_list<int> ones, int len) {
  std::vector<std::uint8_t> bits(len, 0);
  for (int i : ones) bits[i - 1] = 1;
  return bits;
}

}  // namespace

TEST_CASE("state validation") {
  CHECK_NOTHROW(make_state({{1, 2}, {3, 4}}, 4));
  CHECK_NOTHROW(make_state({{1, 4}, {2, 3}}, 4));
  // {1,3},{2,4} interleave.
  CHECK_THROWS_AS(make_state({{1, 3}, {2, 4}}, 4), std::domain_error);
  CHECK_THROWS_AS(State(std::vector<std::int32_t>{2, 1, 3}),
                  std::domain_error);
}

TEST_CASE("parenthesis round trip") {
  auto s = make_state({{1, 6}, {2, 3}, {4, 5}}, 6);
  CHECK(s.to_parentheses() == "(()())");
  CHECK(State::from_parentheses("(()())") == s);
  CHECK_THROWS_AS(State::from_parentheses("(()"), std::domain_error);
  CHECK_THROWS_AS(State::from_parentheses("())("), std::domain_error);
}

TEST_CASE("enumeration census and order") {
  // (1,1): a single chord.
  StateEnumerator tiny(1, 1);
  CHECK(tiny.next()->to_parentheses() == "()");
  CHECK_FALSE(tiny.next().has_value());

  // (2,1): C_2 = 2 states; (1,3): C_3 = 5 states.
  std::vector<std::string> seen;
  StateEnumerator two(2, 1);
  while (auto s = two.next()) seen.push_back(s->to_parentheses());
  CHECK(seen == std::vector<std::string>{"(())", "()()"});

  seen.clear();
  StateEnumerator five(1, 3);
  while (auto s = five.next()) seen.push_back(s->to_parentheses());
  CHECK(seen == std::vector<std::string>{"((()))", "(()())", "(())()",
                                         "()(())", "()()()"});
  // Lexicographic and duplicate-free.
  CHECK(std::is_sorted(seen.begin(), seen.end()));

  for (std::int64_t m = 1; m <= 10; ++m) {
    StateEnumerator stream(1, m);
    std::int64_t count = 0;
    while (stream.next()) ++count;
    REQUIRE(count == counting::catalan(m));
  }

  CHECK_THROWS_AS(StateEnumerator(3, 5), resource_limit_error);
}

TEST_CASE("boundary-parallel centers") {
  // A single chord reports one center.
  auto one = make_state({{1, 2}}, 2);
  CHECK(states::boundary_parallel_centers(one).size() == 1);

  // Chords {1,2} and {3,4}: centers P_2 and P_4.
  auto flat = make_state({{1, 2}, {3, 4}}, 4);
  CHECK(states::boundary_parallel_centers(flat) ==
        std::vector<std::int32_t>{2, 4});

  // Nested chords: the innermost chord and the outermost (wrap-around)
  // chord both cut off empty half-disks.
  auto rainbow = make_state({{1, 6}, {2, 5}, {3, 4}}, 6);
  CHECK(states::boundary_parallel_centers(rainbow) ==
        std::vector<std::int32_t>{1, 4});
}

TEST_CASE("centers map to components by residue") {
  CHECK(states::centers_to_components({5}, 2) ==
        std::vector<std::int32_t>{1});
  CHECK(states::centers_to_components({2, 4}, 2) ==
        std::vector<std::int32_t>{2, 4});
  CHECK(states::centers_to_components({7}, 3) ==
        std::vector<std::int32_t>{1});
}

TEST_CASE("admits_tuple") {
  auto flat = make_state({{1, 2}, {3, 4}}, 4);  // centers on components 2, 4
  CHECK(states::admits_tuple(flat, bits_of({}, 4)));
  CHECK(states::admits_tuple(flat, bits_of({2, 4}, 4)));
  CHECK_FALSE(states::admits_tuple(flat, bits_of({1}, 4)));

  // A state admitting bypasses only on component 1: chords {4,5} and the
  // wrap chord {1,8} both have centers over gamma_1 (m = 4, n = 2).
  auto lopsided = make_state({{1, 8}, {2, 7}, {3, 6}, {4, 5}}, 8);
  auto centers = states::boundary_parallel_centers(lopsided);
  CHECK(states::centers_to_components(centers, 2) ==
        std::vector<std::int32_t>{1});
  CHECK_FALSE(states::admits_tuple(lopsided, bits_of({2}, 4)));
  CHECK(states::admits_tuple(lopsided, bits_of({1}, 4)));

  CHECK_THROWS_AS(states::admits_tuple(flat, bits_of({1}, 6)),
                  std::domain_error);
}

TEST_CASE("count_admitting_states at slope (1,1)") {
  // Weight-n nonadjacent tuples are admitted by exactly one state each.
  CHECK(states::count_admitting_states(2, 1, bits_of({1, 3}, 4)) == 1);
  CHECK(states::count_admitting_states(2, 1, bits_of({2, 4}, 4)) == 1);
  // Adjacent tuples are admitted by none.
  CHECK(states::count_admitting_states(2, 1, bits_of({1, 2}, 4)) == 0);
  // Weight k < n: C_{n-k} states.
  CHECK(states::count_admitting_states(2, 1, bits_of({1}, 4)) == 1);
  for (int i = 1; i <= 6; ++i) {
    REQUIRE(states::count_admitting_states(3, 1, bits_of({i}, 6)) ==
            counting::catalan(2));
  }
}

TEST_CASE("disk bypass rewire") {
  using states::disk_bypass_rewire;
  using states::RewireDirection;

  // Generic configuration: endpoints 1, 2, 3 lie on three distinct chords.
  auto generic = make_state({{1, 6}, {2, 5}, {3, 4}}, 6);
  auto moved = disk_bypass_rewire(generic, 2, RewireDirection::forward);
  CHECK(moved == make_state({{1, 2}, {4, 5}, {3, 6}}, 6));
  auto mirrored = disk_bypass_rewire(generic, 2, RewireDirection::mirror);
  CHECK(mirrored == make_state({{2, 3}, {5, 6}, {1, 4}}, 6));

  // Trivial arc: doubling back across the adjacent chord {1,2} leaves the
  // matching unchanged.
  auto flat = make_state({{1, 2}, {3, 4}, {5, 6}}, 6);
  CHECK(disk_bypass_rewire(flat, 2, RewireDirection::forward) == flat);
  // The mirrored arc at the same spot would close a loop off the boundary.
  CHECK_THROWS_AS(disk_bypass_rewire(flat, 2, RewireDirection::mirror),
                  std::domain_error);

  // The two directions are mirror images: conjugating by the reflection
  // i -> 2m+1-i swaps them.
  auto reflect = [](const State& s) {
    const int points = s.points();
    std::vector<std::int32_t> partner(points, 0);
    for (int i = 1; i <= points; ++i) {
      partner[points - i] = points + 1 - s.partner(i);
    }
    return State(std::move(partner));
  };
  for (int center = 1; center <= 6; ++center) {
    int reflected_center = 6 + 1 - center;
    std::optional<State> lhs, rhs;
    try {
      lhs = reflect(disk_bypass_rewire(generic, center,
                                       RewireDirection::forward));
    } catch (const std::domain_error&) {
    }
    try {
      rhs = disk_bypass_rewire(reflect(generic), reflected_center,
                               RewireDirection::mirror);
    } catch (const std::domain_error&) {
    }
    REQUIRE(lhs.has_value() == rhs.has_value());
    if (lhs) REQUIRE(*lhs == *rhs);
  }
}

TEST_CASE("rewire preserves the non-crossing property and point count") {
  states::StateEnumerator stream(1, 4);
  while (auto s = stream.next()) {
    for (int center = 1; center <= 8; ++center) {
      for (auto dir :
           {states::RewireDirection::forward, states::RewireDirection::mirror}) {
        try {
          auto moved = states::disk_bypass_rewire(*s, center, dir);
          REQUIRE(moved.points() == s->points());  // ctor enforces non-crossing
        } catch (const std::domain_error&) {
          // closed-component moves are rejected; that is the contract
        }
      }
    }
  }
}
