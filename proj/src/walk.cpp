#include "rooms/walk.hpp"

#include <algorithm>

namespace rooms {

Config random_successor(const Config& f, int m, SplitMix64& rng) {
  Config next = f;
  for (int p : movers(f)) {
    int d = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(m - 1)));
    int r = f[p - 1];
    next[p - 1] = d + 1 < r ? d + 1 : d + 2;
  }
  return next;
}

std::string occupancy_key(const Config& f, int m) {
  std::vector<int> sizes(m, 0);
  for (int r : f) sizes[r - 1]++;
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  std::string key;
  for (int i = 0; i < m; ++i) {
    if (i) key += '+';
    key += std::to_string(sizes[i]);
  }
  return key;
}

WalkStats run_walk(const WalkConfig& cfg) {
  const int m = cfg.inst.rooms;
  check_config(cfg.start, cfg.inst);

  WalkStats stats;
  if (cfg.mode == WalkMode::PerState) {
    std::uint64_t verts = vertex_count(cfg.inst, cfg.max_vertices);
    stats.state_visits.assign(verts, 0);
  }

  auto tally = [&](const Config& f) {
    stats.total_visits++;
    switch (classify(f, m)) {
      case ConfigClass::Spread: stats.spread_visits++; break;
      case ConfigClass::Concentrated: stats.concentrated_visits++; break;
      case ConfigClass::Other: break;
    }
    if (cfg.mode == WalkMode::PerState)
      stats.state_visits[encode_index(f, cfg.inst, cfg.max_vertices)]++;
    else
      stats.occupancy_visits[occupancy_key(f, m)]++;
  };

  for (std::uint64_t w = 0; w < cfg.walkers; ++w) {
    SplitMix64 rng = stream_rng(cfg.seed, w);
    Config cur = cfg.start;
    tally(cur);
    for (std::uint64_t s = 0; s < cfg.steps; ++s) {
      cur = random_successor(cur, m, rng);
      tally(cur);
    }
  }
  return stats;
}

FrequencyReport estimate_frequencies(const WalkStats& stats) {
  if (stats.state_visits.empty())
    throw PreconditionError("frequencies need per-state tallies");
  FrequencyReport rep;
  rep.total_visits = stats.total_visits;
  rep.freq.resize(stats.state_visits.size());
  if (stats.total_visits == 0) return rep;
  const double tot = static_cast<double>(stats.total_visits);
  for (std::size_t i = 0; i < rep.freq.size(); ++i)
    rep.freq[i] = static_cast<double>(stats.state_visits[i]) / tot;
  return rep;
}

}  // namespace rooms
