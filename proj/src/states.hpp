#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace tightcount::states {

// Dividing set of a convex meridian disk: a non-crossing perfect matching
// on 2m cyclically ordered boundary points Q_1..Q_{2m}, with m = n*p.
// Matchings encode arcs only, so no closed component can occur.
//
// The boundary interleaving convention: Q_j sits between the torus
// crossing points P_j and P_{j+1}.  Any other convention differs by a
// global rotation, under which all counts are invariant.
class State {
 public:
  // partner[i-1] = j means {Q_i, Q_j} is a chord (1-based points).
  explicit State(std::vector<std::int32_t> partner);

  static State from_parentheses(const std::string& text);
  std::string to_parentheses() const;

  std::int32_t points() const { return static_cast<std::int32_t>(partner_.size()); }
  std::int32_t partner(std::int32_t i) const { return partner_[i - 1]; }

  friend bool operator==(const State&, const State&) = default;

 private:
  std::vector<std::int32_t> partner_;
};

// Streams every non-crossing perfect matching on 2*n*p points exactly once,
// in lexicographic order of the balanced-parenthesis encoding.  Stateless
// consumers may partition the stream and work on chunks concurrently.
class StateEnumerator {
 public:
  // Guard: n*p <= np_limit (default matches C_14 = 2674440 candidates).
  StateEnumerator(std::int64_t n, std::int64_t p, std::int64_t np_limit = 14);

  std::optional<State> next();
  std::int64_t emitted() const { return emitted_; }

 private:
  std::string current_;
  bool done_ = false;
  std::int64_t emitted_ = 0;
};

// Indices i of the boundary points P_i (1-based) lying inside the half-disk
// cut off by a chord joining cyclically adjacent endpoints.  These are the
// bypass centers the state admits.  Sorted ascending.
std::vector<std::int32_t> boundary_parallel_centers(const State& state);

// Center P_i belongs to dividing-curve component gamma_j with
// j = ((i-1) mod 2n) + 1.  Result is sorted and deduplicated.
std::vector<std::int32_t> centers_to_components(
    const std::vector<std::int32_t>& centers, std::int64_t n);

// True iff every component flagged by `bits` (length 2n) is among the
// components carrying a bypass center of the state.
bool admits_tuple(const State& state, const std::vector<std::uint8_t>& bits);

// Number of states on 2*n*p points admitting the tuple.  The count equals
// the number of tight structures in the tuple's class only for p = 1; for
// p > 1 it is exposed as a diagnostic.
BigInt count_admitting_states(std::int64_t n, std::int64_t p,
                              const std::vector<std::uint8_t>& bits,
                              std::int64_t np_limit = 14);

enum class RewireDirection { forward, mirror };

// Abstract bypass move on the disk: an arc hugging the boundary crosses the
// chords incident to endpoints center-1, center, center+1 near those
// endpoints; the three strands are cut and rejoined.  The two directions are
// the two non-crossing reconnections.  Throws std::domain_error when the
// rejoining would create a closed component (such a move is not admitted by
// any state).
State disk_bypass_rewire(const State& state, std::int32_t center,
                         RewireDirection direction);

}  // namespace tightcount::states
