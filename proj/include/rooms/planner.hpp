#pragma once

#include <optional>
#include <vector>

#include "rooms/core.hpp"

// Constructive route planning for arbitrary N and M, no search over the
// (exponential) configuration graph.  plan_path glues together the
// building blocks below; every block emits only valid edges and all
// tie-breaking is canonical (ascending / cyclic), so plans are
// deterministic functions of their inputs.

namespace rooms {

// One move of the relaxed one-at-a-time process on low profiles: the
// highest-ranked occupant of a selected room moves somewhere else.
struct AsynchMove {
  int person;
  int from_room;
  int to_room;
  bool operator==(const AsynchMove&) const = default;
};

enum class UnreachableReason {
  None,
  // Concentrated targets have no incoming edge when M <= N.
  TargetConcentrated,
  // M = 2: the unique forward orbit of f cycles without meeting g.
  DeterministicOrbitMiss,
};

struct PlanOutcome {
  std::optional<Path> path;  // front() = f, back() = g when reachable
  UnreachableReason reason = UnreachableReason::None;
  bool reachable() const { return path.has_value(); }
};

// Drives f into a spread configuration in at most min(N,M) steps; each step
// strictly grows the number of rooms the top segment occupies.
Path spread_path(const Config& f, int m);

// From spread f to spread g with equal low profiles, in at most 4 steps.
// For M != 3 the top people are rotated by whole-room derangements; M = 3
// needs to leave the spread class briefly and is solved exactly on a
// quotient of at most 81 states.
Path exchange_path(const Config& f, const Config& g, int m);

// A spread predecessor of g, i.e. f with an edge f -> g.  For concentrated
// g this exists only when M >= N+1 (everybody alone, converging on g's
// room); PreconditionError otherwise.
Config concentrate_predecessor(const Config& g, int m);

// Routes the one-at-a-time process on profiles of N' = len(h1) people from
// h1 to h2, settling persons in ascending order.  At most
// N'(N'+1)/2 + N' moves.
std::vector<AsynchMove> asynch_route(const LowProfile& h1,
                                     const LowProfile& h2, int m);

// Replays moves from h1, throwing PreconditionError on any rule violation.
LowProfile apply_asynch_route(const LowProfile& h1,
                              const std::vector<AsynchMove>& moves, int m);

// Simulates one asynch move of the low profile as exactly two steps in the
// synchronous graph, starting and ending spread: [f1, g, f2].  Requires
// 3 <= M <= N.
Path trick_lift(const Config& f1, const AsynchMove& move, int m);

// Spread-to-spread path rewriting the low profile to h2 (everything else
// preserved set-wise: the end is spread with low profile h2).
Path low_profile_path(const Config& f1, const LowProfile& h2, int m);

// End-to-end planner.  Path lengths are bounded by
// 2 N'(N'+2) + N + 6 with N' = max(N-M, 0).
PlanOutcome plan_path(const Config& f, const Config& g, int m);

}  // namespace rooms
