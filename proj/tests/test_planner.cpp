#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "rooms/graph.hpp"
#include "rooms/planner.hpp"
#include "rooms/rng.hpp"

using namespace rooms;

namespace {

std::uint64_t plan_bound(int n, int m) {
  const std::uint64_t np = n > m ? n - m : 0;
  return 2 * np * (np + 2) + static_cast<std::uint64_t>(n) + 6;
}

Config random_config(int n, int m, SplitMix64& rng) {
  Config f(n);
  for (int& r : f) r = 1 + static_cast<int>(bounded(rng, m));
  return f;
}

int top_rooms(const Config& f, int m) {
  std::set<int> rooms;
  const int n = static_cast<int>(f.size());
  for (int p = top_first(n, m); p <= n; ++p) rooms.insert(f[p - 1]);
  return static_cast<int>(rooms.size());
}

std::vector<Config> spread_configs(int n, int m) {
  std::vector<Config> out;
  Config f(n, 1);
  for (;;) {
    if (is_spread(f, m)) out.push_back(f);
    int i = 0;
    while (i < n && f[i] == m) f[i++] = 1;
    if (i == n) return out;
    f[i]++;
  }
}

}  // namespace

TEST_CASE("spreading from a single room") {
  Path p = spread_path({1, 1, 1}, 3);
  REQUIRE(p.size() == 3);
  CHECK(p[0] == Config{1, 1, 1});
  CHECK(p[1] == Config{1, 1, 2});
  CHECK(p[2] == Config{1, 2, 3});
}

TEST_CASE("spreading properties on random configurations") {
  SplitMix64 rng = stream_rng(11, 0);
  for (int iter = 0; iter < 800; ++iter) {
    const int n = 1 + static_cast<int>(bounded(rng, 60));
    const int m = 2 + static_cast<int>(bounded(rng, 11));
    Config f = random_config(n, m, rng);
    CAPTURE(n);
    CAPTURE(m);
    CAPTURE(format_config(f));
    Path p = spread_path(f, m);
    CHECK(validate_path(p).ok);
    CHECK(p.front() == f);
    CHECK(is_spread(p.back(), m));
    CHECK(p.size() - 1 <= static_cast<std::size_t>(std::min(n, m)));
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      CHECK(top_rooms(p[i], m) < top_rooms(p[i + 1], m));
  }
}

TEST_CASE("exchanging the top people, four and more rooms") {
  SplitMix64 rng = stream_rng(12, 0);
  for (int m : {4, 5, 6, 8}) {
    for (int dn : {-2, 0, 3, 7}) {
      const int n = std::max(1, m + dn);
      CAPTURE(n);
      CAPTURE(m);
      for (int iter = 0; iter < 60; ++iter) {
        Config f = spread_path(random_config(n, m, rng), m).back();
        std::vector<int> perm(m);
        for (int r = 1; r <= m; ++r) perm[r - 1] = r;
        for (int i = m - 1; i > 0; --i)
          std::swap(perm[i], perm[bounded(rng, i + 1)]);
        Config g = f;
        for (int p = top_first(n, m); p <= n; ++p)
          g[p - 1] = perm[f[p - 1] - 1];

        Path path = exchange_path(f, g, m);
        CHECK(validate_path(path).ok);
        CHECK(path.front() == f);
        CHECK(path.back() == g);
        CHECK(path.size() - 1 <= 4);
        for (const Config& c : path) {
          CHECK(is_spread(c, m));
          CHECK(low_profile(c, m) == low_profile(f, m));
        }
      }
    }
  }
}

TEST_CASE("exchanging the top people, three rooms, exhaustive") {
  for (int n : {2, 3, 4, 5, 6}) {
    CAPTURE(n);
    auto spreads = spread_configs(n, 3);
    for (const Config& f : spreads)
      for (const Config& g : spreads) {
        if (low_profile(f, 3) != low_profile(g, 3)) continue;
        Path path = exchange_path(f, g, 3);
        CHECK(validate_path(path).ok);
        CHECK(path.front() == f);
        CHECK(path.back() == g);
        CHECK(path.size() - 1 <= 4);
        // the route may leave the spread class briefly, but only the last
        // four people ever move; everyone below them is pinned throughout
        for (const Config& c : path)
          for (int p = 1; p <= n - 4; ++p) CHECK(c[p - 1] == f[p - 1]);
      }
  }
}

TEST_CASE("exchange rejects mismatched endpoints") {
  CHECK_THROWS_AS(exchange_path({1, 2, 3}, {1, 2, 2}, 3), PreconditionError);
  CHECK_THROWS_AS(exchange_path({1, 1, 2, 3}, {2, 1, 2, 3}, 3),
                  PreconditionError);  // low profiles differ
}

TEST_CASE("predecessor of a target configuration") {
  CHECK(concentrate_predecessor({1, 2, 3}, 3) == Config{2, 3, 1});
  CHECK(concentrate_predecessor({1, 1}, 3) == Config{2, 3});
  CHECK_THROWS_AS(concentrate_predecessor({2, 2, 2}, 3), PreconditionError);
  CHECK_THROWS_AS(concentrate_predecessor({1, 2, 2, 2}, 3),
                  PreconditionError);

  SplitMix64 rng = stream_rng(13, 0);
  for (int iter = 0; iter < 1500; ++iter) {
    const int m = 3 + static_cast<int>(bounded(rng, 6));
    const int n = 1 + static_cast<int>(bounded(rng, 14));
    Config g = random_config(n, m, rng);
    CAPTURE(n);
    CAPTURE(m);
    CAPTURE(format_config(g));
    if (is_concentrated(g, m) && m <= n) {
      CHECK_THROWS_AS(concentrate_predecessor(g, m), PreconditionError);
      continue;
    }
    Config f = concentrate_predecessor(g, m);
    CHECK(is_spread(f, m));
    CHECK(is_edge(f, g));
    CHECK(low_profile(f, m) == low_profile(g, m));
  }
}

TEST_CASE("one-at-a-time routing of the low people") {
  SplitMix64 rng = stream_rng(14, 0);
  for (int iter = 0; iter < 1500; ++iter) {
    const int m = 2 + static_cast<int>(bounded(rng, 5));
    const int np = static_cast<int>(bounded(rng, 13));
    LowProfile h1 = random_config(np, m, rng);
    LowProfile h2 = random_config(np, m, rng);
    auto moves = asynch_route(h1, h2, m);
    CHECK(apply_asynch_route(h1, moves, m) == h2);
    CHECK(moves.size() <=
          static_cast<std::size_t>(np * (np + 1) / 2 + np));
  }
  CHECK(asynch_route({}, {}, 4).empty());
  CHECK_THROWS_AS(asynch_route({1}, {1, 2}, 3), PreconditionError);
}

TEST_CASE("replay rejects rule violations") {
  // person 1 may not move while person 2 shares its room
  CHECK_THROWS_AS(apply_asynch_route({1, 1}, {{1, 1, 2}}, 3),
                  PreconditionError);
  CHECK_THROWS_AS(apply_asynch_route({1, 2}, {{1, 2, 3}}, 3),
                  PreconditionError);  // wrong source room
  CHECK_THROWS_AS(apply_asynch_route({1, 2}, {{1, 1, 1}}, 3),
                  PreconditionError);  // must change rooms
  CHECK(apply_asynch_route({1, 1}, {{2, 1, 3}, {1, 1, 2}}, 3) ==
        LowProfile{2, 3});
}

TEST_CASE("two-step simulation of one low move") {
  Path p = trick_lift({1, 1, 2, 3}, {1, 1, 2}, 3);
  REQUIRE(p.size() == 3);
  CHECK(p[0] == Config{1, 1, 2, 3});
  CHECK(p[1] == Config{1, 2, 3, 2});
  CHECK(p[2] == Config{2, 2, 1, 3});

  SplitMix64 rng = stream_rng(15, 0);
  for (int iter = 0; iter < 1500; ++iter) {
    const int m = 3 + static_cast<int>(bounded(rng, 5));
    const int n = m + 1 + static_cast<int>(bounded(rng, 12));
    Config f1 = spread_path(random_config(n, m, rng), m).back();
    // highest low of a random low-occupied room
    const int lows = n - m;
    std::vector<int> by_room(m + 1, 0);
    for (int p2 = 1; p2 <= lows; ++p2) by_room[f1[p2 - 1]] = p2;
    std::vector<int> candidates;
    for (int r = 1; r <= m; ++r)
      if (by_room[r]) candidates.push_back(by_room[r]);
    const int j = candidates[bounded(rng, candidates.size())];
    const int from = f1[j - 1];
    int to = 1 + static_cast<int>(bounded(rng, m - 1));
    if (to >= from) to++;
    CAPTURE(n);
    CAPTURE(m);
    CAPTURE(format_config(f1));
    CAPTURE(j);
    CAPTURE(to);

    Path seg = trick_lift(f1, {j, from, to}, m);
    REQUIRE(seg.size() == 3);
    CHECK(validate_path(seg).ok);
    CHECK(is_spread(seg.back(), m));
    LowProfile want = low_profile(f1, m);
    want[j - 1] = to;
    CHECK(low_profile(seg.back(), m) == want);
  }
}

TEST_CASE("two-step simulation rejects bad moves") {
  CHECK_THROWS_AS(trick_lift({1, 2, 3}, {1, 1, 2}, 3), PreconditionError);
  CHECK_THROWS_AS(trick_lift({1, 1, 2, 3}, {1, 2, 3}, 3), PreconditionError);
  CHECK_THROWS_AS(trick_lift({1, 1, 2, 1, 3}, {1, 1, 2}, 3),
                  PreconditionError);  // person 2 outranks person 1 in room 1
  CHECK_THROWS_AS(trick_lift({1, 1, 2, 3}, {1, 1, 2}, 2), PreconditionError);
}

TEST_CASE("rewriting the whole low profile") {
  SplitMix64 rng = stream_rng(16, 0);
  for (int iter = 0; iter < 400; ++iter) {
    const int m = 3 + static_cast<int>(bounded(rng, 4));
    const int n = m + 1 + static_cast<int>(bounded(rng, 10));
    Config f1 = spread_path(random_config(n, m, rng), m).back();
    LowProfile h2 = random_config(n - m, m, rng);
    CAPTURE(n);
    CAPTURE(m);
    Path p = low_profile_path(f1, h2, m);
    CHECK(validate_path(p).ok);
    CHECK(p.front() == f1);
    CHECK(is_spread(p.back(), m));
    CHECK(low_profile(p.back(), m) == h2);
    CHECK(p.size() % 2 == 1);  // two synchronous steps per simulated move
  }
}

TEST_CASE("planning in the deterministic two-room regime") {
  PlanOutcome direct = plan_path({1, 1, 1}, {1, 1, 2}, 2);
  REQUIRE(direct.reachable());
  CHECK(*direct.path == Path{{1, 1, 1}, {1, 1, 2}});
  PlanOutcome two = plan_path({1, 1, 1}, {1, 2, 1}, 2);
  REQUIRE(two.reachable());
  CHECK(two.path->size() == 3);
  PlanOutcome miss = plan_path({1, 1, 1}, {2, 2, 2}, 2);
  CHECK_FALSE(miss.reachable());
  CHECK(miss.reason == UnreachableReason::DeterministicOrbitMiss);

  // the orbit is the whole reachable set, so the planner must agree with
  // breadth-first search pair by pair
  for (int n = 2; n <= 6; ++n) {
    Instance inst(n, 2);
    const std::uint64_t verts = vertex_count(inst);
    for (std::uint64_t a = 0; a < verts; ++a) {
      Config f = decode_index(a, inst);
      auto dist = bfs_all_distances(inst, f);
      for (std::uint64_t b = 0; b < verts; ++b) {
        Config g = decode_index(b, inst);
        PlanOutcome o = plan_path(f, g, 2);
        CHECK(o.reachable() == (dist[b] >= 0));
        if (o.reachable())
          CHECK(o.path->size() - 1 == static_cast<std::uint64_t>(dist[b]));
      }
    }
  }
}

TEST_CASE("planning across regimes, randomized") {
  const struct {
    int n, m;
  } cases[] = {{1, 2}, {2, 2}, {8, 2}, {1, 3}, {2, 3}, {3, 3},
               {5, 3}, {8, 3}, {4, 4}, {7, 4}, {3, 5}, {6, 5},
               {2, 6}, {10, 3}, {12, 5}, {9, 9}};
  SplitMix64 rng = stream_rng(17, 0);
  for (auto [n, m] : cases) {
    CAPTURE(n);
    CAPTURE(m);
    for (int iter = 0; iter < 100; ++iter) {
      Config f = random_config(n, m, rng);
      Config g = random_config(n, m, rng);
      CAPTURE(format_config(f));
      CAPTURE(format_config(g));
      PlanOutcome o = plan_path(f, g, m);
      if (o.reachable()) {
        CHECK(validate_path(*o.path).ok);
        CHECK(o.path->front() == f);
        CHECK(o.path->back() == g);
        CHECK(o.path->size() - 1 <= plan_bound(n, m));
      } else if (o.reason == UnreachableReason::TargetConcentrated) {
        CHECK(is_concentrated(g, m));
        CHECK(m <= n);
        CHECK(f != g);
      } else {
        CHECK(o.reason == UnreachableReason::DeterministicOrbitMiss);
        CHECK(m == 2);
      }
    }
  }
}

TEST_CASE("planning stays within bounds far beyond explicit reach") {
  SplitMix64 rng = stream_rng(18, 0);
  const struct {
    int n, m;
  } cases[] = {{150, 3}, {120, 7}, {60, 59}, {59, 60}, {200, 20}, {40, 2}};
  for (auto [n, m] : cases) {
    CAPTURE(n);
    CAPTURE(m);
    for (int iter = 0; iter < 3; ++iter) {
      Config f = random_config(n, m, rng);
      Config g = random_config(n, m, rng);
      PlanOutcome o = plan_path(f, g, m);
      if (!o.reachable()) {
        CHECK((m == 2 || (is_concentrated(g, m) && m <= n)));
        continue;
      }
      CHECK(validate_path(*o.path).ok);
      CHECK(o.path->front() == f);
      CHECK(o.path->back() == g);
      CHECK(o.path->size() - 1 <= plan_bound(n, m));
    }
  }
}

TEST_CASE("planning trivia") {
  PlanOutcome same = plan_path({2, 1, 2}, {2, 1, 2}, 3);
  REQUIRE(same.reachable());
  CHECK(*same.path == Path{{2, 1, 2}});
  CHECK_THROWS_AS(plan_path({1, 2}, {1, 2, 3}, 3), PreconditionError);
  CHECK_THROWS_AS(plan_path({1, 4}, {1, 2}, 3), RangeError);

  // concentrated targets become reachable again once M > N
  PlanOutcome o = plan_path({1, 2}, {3, 3}, 3);
  REQUIRE(o.reachable());
  CHECK(validate_path(*o.path).ok);
  CHECK(o.path->back() == Config{3, 3});
}
