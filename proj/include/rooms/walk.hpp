#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rooms/core.hpp"
#include "rooms/rng.hpp"

namespace rooms {

// Uniform random successor of f: every mover independently picks one of the
// other M-1 rooms.  Draws one value from rng per mover, lowest person first.
Config random_successor(const Config& f, int m, SplitMix64& rng);

enum class WalkMode { PerState, Occupancy };

struct WalkConfig {
  Instance inst;
  Config start;
  std::uint64_t steps = 0;    // moves per walker
  std::uint64_t walkers = 1;  // independent walks, all from start
  std::uint64_t seed = 0;
  WalkMode mode = WalkMode::PerState;
  std::uint64_t max_vertices = kDefaultMaxVertices;  // PerState table bound
};

// Tallies from run_walk.  Every visited state is counted, including the
// start, so total visits = walkers * (steps + 1).
struct WalkStats {
  std::uint64_t total_visits = 0;
  std::uint64_t spread_visits = 0;
  std::uint64_t concentrated_visits = 0;
  // PerState: visit count per encoded configuration (encode_index order).
  std::vector<std::uint64_t> state_visits;
  // Occupancy: visits keyed by room-size profile, sizes sorted descending
  // and joined with '+' (e.g. "3+1+0").
  std::map<std::string, std::uint64_t> occupancy_visits;
};

// Runs `walkers` independent seeded walks.  Walker w uses the decorrelated
// stream stream_rng(seed, w), so results are reproducible and independent of
// scheduling.  PerState mode refuses instances larger than max_vertices.
WalkStats run_walk(const WalkConfig& cfg);

struct FrequencyReport {
  std::vector<double> freq;  // per encoded state, sums to 1
  std::uint64_t total_visits = 0;
};

// Normalizes PerState tallies into empirical visit frequencies.
FrequencyReport estimate_frequencies(const WalkStats& stats);

std::string occupancy_key(const Config& f, int m);

}  // namespace rooms
