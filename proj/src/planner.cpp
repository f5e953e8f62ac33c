#include "rooms/planner.hpp"

#include <algorithm>
#include <set>

#include "rooms/perm.hpp"

namespace rooms {

namespace {

void check_entries(const Config& f, int m, const char* what) {
  for (int r : f)
    if (r < 1 || r > m)
      throw RangeError(std::string(what) + ": room " + std::to_string(r) +
                       " outside [1, " + std::to_string(m) + "]");
}

void append_path(Path& acc, const Path& seg) {
  if (acc.back() != seg.front())
    throw Error("internal: path segments do not join");
  acc.insert(acc.end(), seg.begin() + 1, seg.end());
}

}  // namespace

Path spread_path(const Config& f, int m) {
  const int n = static_cast<int>(f.size());
  check_entries(f, m, "spread_path");
  const int first_top = top_first(n, m);

  Path path{f};
  Config cur = f;
  for (int round = 0; round <= std::min(n, m); ++round) {
    std::vector<int> top_count(m + 1, 0), top_max(m + 1, 0), any_max(m + 1, 0);
    for (int p = 1; p <= n; ++p) {
      any_max[cur[p - 1]] = p;
      if (p >= first_top) {
        top_count[cur[p - 1]]++;
        top_max[cur[p - 1]] = p;
      }
    }
    std::vector<int> singles, multis, fresh;
    for (int r = 1; r <= m; ++r) {
      if (top_count[r] == 0) fresh.push_back(r);
      else if (top_count[r] == 1) singles.push_back(r);
      else multis.push_back(r);
    }
    if (multis.empty()) return path;  // spread

    Config next = cur;
    std::vector<int> multi_movers;
    for (int r : multis) multi_movers.push_back(top_max[r]);
    std::sort(multi_movers.begin(), multi_movers.end());

    std::size_t fresh_at = 0;
    auto take_fresh = [&]() {
      if (fresh_at >= fresh.size())
        throw Error("internal: ran out of unoccupied rooms while spreading");
      return fresh[fresh_at++];
    };

    std::size_t first_multi = 0;
    if (singles.size() == 1) {
      // The lone singly-occupied room is vacated into a fresh room and
      // refilled by the lowest-ranked crowded-room mover.
      next[top_max[singles[0]] - 1] = take_fresh();
      next[multi_movers[0] - 1] = singles[0];
      first_multi = 1;
    } else if (singles.size() >= 2) {
      Perm d = make_derangement(singles);
      for (int r : singles) next[top_max[r] - 1] = d.apply(r);
    }
    for (std::size_t i = first_multi; i < multi_movers.size(); ++i)
      next[multi_movers[i] - 1] = take_fresh();

    // Rooms holding no top person still force their highest occupant out.
    for (int r = 1; r <= m; ++r)
      if (top_count[r] == 0 && any_max[r] != 0)
        next[any_max[r] - 1] = r == 1 ? 2 : 1;

    path.push_back(next);
    cur = std::move(next);
  }
  throw Error("internal: spreading did not terminate");
}

namespace {

// Exact solver for the M = 3 exchange on a quotient tracking the rooms of
// the last min(N,4) people; everyone below them is pinned.  For N >= 4 the
// walk is restricted to states in which every room holds a tracked person,
// so nobody pinned is ever a forced mover.
Path exchange3(const Config& f, const Config& g) {
  const int m = 3;
  const int n = static_cast<int>(f.size());
  const int tracked = std::min(n, 4);
  const int base = n - tracked;
  const bool cover_all_rooms = n >= 4;

  int pow3 = 1;
  for (int i = 0; i < tracked; ++i) pow3 *= m;

  auto encode = [&](const Config& c) {
    int code = 0;
    for (int i = tracked - 1; i >= 0; --i) code = code * m + (c[base + i] - 1);
    return code;
  };
  auto decode = [&](int code, int* rooms_out) {
    for (int i = 0; i < tracked; ++i) {
      rooms_out[i] = code % m + 1;
      code /= m;
    }
  };

  const int start = encode(f);
  const int goal = encode(g);
  std::vector<int> dist(pow3, -1), parent(pow3, -1);
  std::vector<int> queue{start};
  dist[start] = 0;
  for (std::size_t head = 0; head < queue.size() && dist[goal] < 0; ++head) {
    int code = queue[head];
    int rooms_of[4];
    decode(code, rooms_of);
    int room_top[4] = {0, 0, 0, 0};  // highest tracked occupant per room
    for (int i = 0; i < tracked; ++i) room_top[rooms_of[i]] = i + 1;
    std::vector<int> mv;  // tracked indices (1-based, ascending)
    for (int i = 1; i <= tracked; ++i)
      if (room_top[rooms_of[i - 1]] == i) mv.push_back(i);

    std::vector<int> digit(mv.size(), 0);
    for (;;) {
      int rooms_next[4];
      std::copy(rooms_of, rooms_of + tracked, rooms_next);
      for (std::size_t i = 0; i < mv.size(); ++i) {
        int r = rooms_of[mv[i] - 1];
        int d = digit[i];
        rooms_next[mv[i] - 1] = d + 1 < r ? d + 1 : d + 2;
      }
      bool ok = true;
      if (cover_all_rooms) {
        bool seen[4] = {false, false, false, false};
        for (int i = 0; i < tracked; ++i) seen[rooms_next[i]] = true;
        ok = seen[1] && seen[2] && seen[3];
      }
      if (ok) {
        int nc = 0;
        for (int i = tracked - 1; i >= 0; --i) nc = nc * m + (rooms_next[i] - 1);
        if (dist[nc] < 0) {
          dist[nc] = dist[code] + 1;
          parent[nc] = code;
          queue.push_back(nc);
        }
      }
      // lexicographic odometer, last mover fastest
      int i = static_cast<int>(mv.size()) - 1;
      while (i >= 0 && digit[i] == m - 2) digit[i--] = 0;
      if (i < 0) break;
      digit[i]++;
    }
  }
  if (dist[goal] < 0)
    throw Error("internal: quotient search found no exchange route");

  std::vector<int> codes{goal};
  while (codes.back() != start) codes.push_back(parent[codes.back()]);
  std::reverse(codes.begin(), codes.end());

  Path path;
  for (int code : codes) {
    Config c = f;
    int rooms_of[4];
    decode(code, rooms_of);
    for (int i = 0; i < tracked; ++i) c[base + i] = rooms_of[i];
    path.push_back(std::move(c));
  }
  return path;
}

}  // namespace

Path exchange_path(const Config& f, const Config& g, int m) {
  const int n = static_cast<int>(f.size());
  if (g.size() != f.size())
    throw PreconditionError("exchange endpoints differ in size");
  check_entries(f, m, "exchange_path");
  check_entries(g, m, "exchange_path");
  if (!is_spread(f, m) || !is_spread(g, m))
    throw PreconditionError("exchange endpoints must both be spread");
  if (low_profile(f, m) != low_profile(g, m))
    throw PreconditionError("exchange endpoints must share the low profile");
  if (f == g) return {f};
  if (m == 3) return exchange3(f, g);

  // The top people sit in distinct rooms on both sides, so g's top rows are
  // sigma o f's for a room permutation sigma; realize sigma as whole-room
  // derangement steps, each a single valid move of all the tops at once.
  const int first_top = top_first(n, m);
  std::vector<int> image(m + 1, 0);
  std::vector<bool> used(m + 1, false);
  for (int p = first_top; p <= n; ++p) {
    image[f[p - 1]] = g[p - 1];
    used[g[p - 1]] = true;
  }
  std::vector<int> spare;
  for (int r = 1; r <= m; ++r)
    if (!used[r]) spare.push_back(r);
  std::size_t at = 0;
  std::vector<int> domain, images;
  for (int r = 1; r <= m; ++r) {
    domain.push_back(r);
    images.push_back(image[r] != 0 ? image[r] : spare[at++]);
  }
  Perm sigma = Perm::from_images(std::move(domain), std::move(images));

  auto factors = factor_into_derangements(sigma).factors;
  Path path{f};
  Config cur = f;
  for (std::size_t i = factors.size(); i-- > 0;) {
    Config next = cur;
    for (int p = first_top; p <= n; ++p)
      next[p - 1] = factors[i].apply(cur[p - 1]);
    path.push_back(next);
    cur = std::move(next);
  }
  if (cur != g) throw Error("internal: exchange landed off target");
  return path;
}

Config concentrate_predecessor(const Config& g, int m) {
  const int n = static_cast<int>(g.size());
  check_entries(g, m, "concentrate_predecessor");
  if (is_concentrated(g, m)) {
    if (m <= n)
      throw PreconditionError(
          "concentrated configurations have no predecessor when M <= N");
    // M >= N+1: park everyone alone off g's room; all of them then being
    // forced movers, they converge on it in one step.
    const int rstar = g[n - 1];
    Config f(n);
    for (int p = 1; p <= n; ++p) f[p - 1] = p < rstar ? p : p + 1;
    return f;
  }

  const int first_top = top_first(n, m);
  std::vector<int> room_max(m + 1, 0);
  for (int p = 1; p <= n; ++p) room_max[g[p - 1]] = p;
  std::vector<int> leaders;  // tops that are the highest in their g-room
  for (int p = first_top; p <= n; ++p)
    if (room_max[g[p - 1]] == p) leaders.push_back(p);

  Perm sigma = make_derangement(leaders);
  Config f = g;
  std::vector<bool> room_used(m + 1, false);
  for (int p : leaders) {
    f[p - 1] = g[sigma.apply(p) - 1];
    room_used[g[p - 1]] = true;
  }
  std::vector<int> spare_rooms;
  for (int r = 1; r <= m; ++r)
    if (!room_used[r]) spare_rooms.push_back(r);
  std::size_t at = 0;
  for (int p = first_top; p <= n; ++p)
    if (room_max[g[p - 1]] != p) f[p - 1] = spare_rooms[at++];
  return f;
}

std::vector<AsynchMove> asynch_route(const LowProfile& h1,
                                     const LowProfile& h2, int m) {
  if (h1.size() != h2.size())
    throw PreconditionError("profiles differ in size");
  if (m < 2) throw PreconditionError("need at least two rooms");
  check_entries(h1, m, "asynch_route");
  check_entries(h2, m, "asynch_route");

  const int np = static_cast<int>(h1.size());
  LowProfile cur = h1;
  std::vector<AsynchMove> moves;
  for (int j = 1; j <= np; ++j) {
    if (cur[j - 1] == h2[j - 1]) continue;
    const int r = cur[j - 1];
    const int t = h2[j - 1];
    // Clear everyone ranked above j out of j's room, highest first, so j
    // becomes the forced mover; people below j are settled and never touched.
    for (;;) {
      int k = 0;
      for (int p = 1; p <= np; ++p)
        if (cur[p - 1] == r) k = p;
      if (k == j) break;
      int evac = 0;
      for (int c = 1; c <= m; ++c)
        if (c != r && c != t) {
          evac = c;
          break;
        }
      if (evac == 0) evac = t;  // M = 2 leaves only the target room
      moves.push_back({k, r, evac});
      cur[k - 1] = evac;
    }
    moves.push_back({j, r, t});
    cur[j - 1] = t;
  }
  return moves;
}

LowProfile apply_asynch_route(const LowProfile& h1,
                              const std::vector<AsynchMove>& moves, int m) {
  LowProfile cur = h1;
  const int np = static_cast<int>(h1.size());
  for (const AsynchMove& mv : moves) {
    if (mv.person < 1 || mv.person > np)
      throw PreconditionError("move names an unknown person");
    if (mv.to_room < 1 || mv.to_room > m || mv.to_room == mv.from_room)
      throw PreconditionError("move target is not another room");
    if (cur[mv.person - 1] != mv.from_room)
      throw PreconditionError("move starts from the wrong room");
    for (int p = mv.person + 1; p <= np; ++p)
      if (cur[p - 1] == mv.from_room)
        throw PreconditionError("mover is not the highest occupant");
    cur[mv.person - 1] = mv.to_room;
  }
  return cur;
}

Path trick_lift(const Config& f1, const AsynchMove& move, int m) {
  const int n = static_cast<int>(f1.size());
  if (m < 3 || m > n)
    throw PreconditionError("two-step simulation needs 3 <= M <= N");
  check_entries(f1, m, "trick_lift");
  if (!is_spread(f1, m))
    throw PreconditionError("two-step simulation starts from spread");
  const int lows = n - m;
  const int j = move.person;
  const int r = move.from_room;
  const int to = move.to_room;
  if (j < 1 || j > lows)
    throw PreconditionError("mover must be below the top segment");
  if (f1[j - 1] != r || to == r || to < 1 || to > m)
    throw PreconditionError("move does not fit the configuration");
  for (int p = j + 1; p <= lows; ++p)
    if (f1[p - 1] == r)
      throw PreconditionError("mover must be the highest low in its room");

  const int first_top = lows + 1;
  int k = 0;  // the (unique, f1 being spread) top person in room r
  for (int p = first_top; p <= n; ++p)
    if (f1[p - 1] == r) k = p;

  // Step 1: k vacates room r while the other tops shuffle among the other
  // rooms, leaving r topless with j as its highest occupant.
  const int s = r == 1 ? 2 : 1;
  std::vector<int> others;
  for (int c = 1; c <= m; ++c)
    if (c != r) others.push_back(c);
  Perm rho = make_derangement(others);
  Config g = f1;
  g[k - 1] = s;
  for (int p = first_top; p <= n; ++p)
    if (p != k) g[p - 1] = rho.apply(f1[p - 1]);

  // Step 2: j is forced out of r and lands on its target; the lower of the
  // two tops sharing room s sits still, everyone else rotates r -> s, which
  // restores spreadness.
  int other_top_in_s = 0;
  for (int p = first_top; p <= n; ++p)
    if (p != k && g[p - 1] == s) other_top_in_s = p;
  const int anchor = std::min(k, other_top_in_s);
  std::vector<int> all(m);
  for (int c = 1; c <= m; ++c) all[c - 1] = c;
  Perm sigma = make_derangement(all, std::make_pair(r, s));
  Config f2 = g;
  f2[j - 1] = to;
  for (int p = first_top; p <= n; ++p)
    if (p != anchor) f2[p - 1] = sigma.apply(g[p - 1]);
  return {f1, g, f2};
}

Path low_profile_path(const Config& f1, const LowProfile& h2, int m) {
  const int n = static_cast<int>(f1.size());
  if (m < 3 || m > n)
    throw PreconditionError("profile rewriting needs 3 <= M <= N");
  if (static_cast<int>(h2.size()) != n - m)
    throw PreconditionError("target profile has the wrong size");
  auto moves = asynch_route(low_profile(f1, m), h2, m);
  Path path{f1};
  for (const AsynchMove& mv : moves) {
    Path seg = trick_lift(path.back(), mv, m);
    append_path(path, seg);
  }
  return path;
}

PlanOutcome plan_path(const Config& f, const Config& g, int m) {
  const int n = static_cast<int>(f.size());
  if (f.size() != g.size())
    throw PreconditionError("endpoints differ in size");
  check_entries(f, m, "plan_path");
  check_entries(g, m, "plan_path");
  if (f == g) return {Path{f}, UnreachableReason::None};

  if (m == 2) {
    // Out-degree is identically one: follow the orbit until g or a repeat.
    Path orbit{f};
    std::set<Config> seen{f};
    Config cur = f;
    for (int step = 0; step <= 4 * n + 64; ++step) {
      Config next = cur;
      for (int p : movers(cur)) next[p - 1] = 3 - cur[p - 1];
      if (next == g) {
        orbit.push_back(next);
        return {orbit, UnreachableReason::None};
      }
      if (!seen.insert(next).second)
        return {std::nullopt, UnreachableReason::DeterministicOrbitMiss};
      orbit.push_back(next);
      cur = std::move(next);
    }
    throw Error("internal: two-room orbit failed to close");
  }

  if (is_concentrated(g, m) && m <= n)
    return {std::nullopt, UnreachableReason::TargetConcentrated};

  Path total = spread_path(f, m);
  Config g1;
  bool final_edge;
  if (is_spread(g, m)) {
    g1 = g;
    final_edge = false;
  } else {
    g1 = concentrate_predecessor(g, m);
    final_edge = true;
  }
  if (n > m) append_path(total, low_profile_path(total.back(),
                                                 low_profile(g1, m), m));
  append_path(total, exchange_path(total.back(), g1, m));
  if (final_edge) total.push_back(g);
  return {total, UnreachableReason::None};
}

}  // namespace rooms
