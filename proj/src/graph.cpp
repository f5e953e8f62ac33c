#include "rooms/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>

namespace rooms {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

inline int nth_target(int d, int r) { return d + 1 < r ? d + 1 : d + 2; }

// Resumable successor iteration over the materialized graph.
struct ExplicitCursor {
  const ExplicitGraph& g;
  std::uint64_t pos = 0;
  std::uint64_t stop = 0;

  explicit ExplicitCursor(const ExplicitGraph& graph) : g(graph) {}
  std::uint64_t size() const { return g.num_vertices; }
  void start(std::uint32_t v) {
    pos = g.offsets[v];
    stop = g.offsets[v + 1];
  }
  void restore(std::uint32_t v, std::uint64_t code) {
    pos = code;
    stop = g.offsets[v + 1];
  }
  bool valid() const { return pos < stop; }
  std::uint32_t value() const { return g.targets[pos]; }
  std::uint64_t code() const { return pos; }
  void advance() { ++pos; }
  template <class Fn>
  void for_each(std::uint32_t v, Fn&& fn) {
    for (std::uint64_t i = g.offsets[v]; i < g.offsets[v + 1]; ++i)
      fn(g.targets[i]);
  }
};

// Resumable successor iteration that regenerates edges from vertex indices.
// The odometer walks the movers' target tuples in lexicographic order; the
// current successor index doubles as the resume token, so suspended
// iterations cost no memory beyond (vertex, index).
struct ImplicitCursor {
  Instance inst;
  std::uint64_t verts;
  std::vector<std::uint64_t> pow;   // pow[k] = M^k
  std::vector<int> room_of;         // per person, for the active vertex
  std::vector<int> room_max;        // per room: highest-ranked occupant
  std::vector<int> mover_room;      // per mover, ascending by person
  std::vector<std::uint64_t> place; // per mover: M^(person-1)
  std::vector<int> digit;           // odometer
  std::uint64_t cur = 0;
  bool has = false;

  ImplicitCursor(const Instance& i, std::uint64_t max_vertices)
      : inst(i), verts(vertex_count(i, max_vertices)) {
    if (verts > std::numeric_limits<std::uint32_t>::max())
      throw OverflowError("explicit mode supports at most 2^32 vertices");
    pow.resize(inst.people + 1);
    pow[0] = 1;
    for (int k = 1; k <= inst.people; ++k)
      pow[k] = pow[k - 1] * static_cast<std::uint64_t>(inst.rooms);
    room_of.resize(inst.people);
    room_max.resize(inst.rooms);
  }

  std::uint64_t size() const { return verts; }

  void decode_active(std::uint32_t v) {
    std::uint64_t x = v;
    const auto m = static_cast<std::uint64_t>(inst.rooms);
    for (int k = 0; k < inst.people; ++k) {
      room_of[k] = static_cast<int>(x % m) + 1;
      x /= m;
    }
    std::fill(room_max.begin(), room_max.end(), 0);
    for (int k = 0; k < inst.people; ++k) room_max[room_of[k] - 1] = k + 1;
    mover_room.clear();
    place.clear();
    digit.clear();
    // Collecting by ascending person keeps the canonical mover order.
    for (int p = 1; p <= inst.people; ++p) {
      if (room_max[room_of[p - 1] - 1] != p) continue;
      mover_room.push_back(room_of[p - 1]);
      place.push_back(pow[p - 1]);
      digit.push_back(0);
    }
  }

  void start(std::uint32_t v) {
    decode_active(v);
    std::int64_t e = static_cast<std::int64_t>(v);
    for (std::size_t i = 0; i < mover_room.size(); ++i)
      e += static_cast<std::int64_t>(nth_target(0, mover_room[i]) -
                                     mover_room[i]) *
           static_cast<std::int64_t>(place[i]);
    cur = static_cast<std::uint64_t>(e);
    has = true;
  }

  void restore(std::uint32_t v, std::uint64_t code) {
    decode_active(v);
    cur = code;
    has = true;
    for (std::size_t i = 0; i < mover_room.size(); ++i) {
      int t = static_cast<int>((code / place[i]) %
                               static_cast<std::uint64_t>(inst.rooms)) +
              1;
      digit[i] = t < mover_room[i] ? t - 1 : t - 2;
    }
  }

  bool valid() const { return has; }
  std::uint32_t value() const { return static_cast<std::uint32_t>(cur); }
  std::uint64_t code() const { return cur; }

  void advance() {
    for (int i = static_cast<int>(digit.size()) - 1; i >= 0; --i) {
      int r = mover_room[i];
      int d = digit[i];
      if (d + 1 < inst.rooms - 1) {
        digit[i] = d + 1;
        cur += static_cast<std::uint64_t>(nth_target(d + 1, r) -
                                          nth_target(d, r)) *
               place[static_cast<std::size_t>(i)];
        return;
      }
      digit[i] = 0;
      cur -= static_cast<std::uint64_t>(nth_target(inst.rooms - 2, r) -
                                        nth_target(0, r)) *
             place[static_cast<std::size_t>(i)];
    }
    has = false;
  }

  template <class Fn>
  void for_each(std::uint32_t v, Fn&& fn) {
    start(v);
    while (has) {
      fn(static_cast<std::uint32_t>(cur));
      advance();
    }
  }
};

// Iterative Tarjan over a cursor graph.  Suspended frames keep only
// (vertex, resume token); the shared cursor is re-pointed on descent and on
// return, which happens O(V) times in total.
template <class Cursor>
void tarjan(Cursor& g, std::vector<std::uint32_t>& comp,
            std::uint32_t& comp_count) {
  const std::uint64_t n = g.size();
  std::vector<std::uint32_t> index(n, kUnset);
  std::vector<std::uint32_t> lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> scc_stack;
  comp.assign(n, kUnset);
  comp_count = 0;
  std::uint32_t counter = 0;

  struct Frame {
    std::uint32_t v;
    std::uint64_t code;
  };
  std::vector<Frame> call;

  auto enter = [&](std::uint32_t v) {
    index[v] = lowlink[v] = counter++;
    scc_stack.push_back(v);
    on_stack[v] = true;
    call.push_back({v, 0});
    g.start(v);
  };

  for (std::uint64_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    enter(static_cast<std::uint32_t>(root));
    while (!call.empty()) {
      std::uint32_t v = call.back().v;
      bool descended = false;
      while (g.valid()) {
        std::uint32_t w = g.value();
        if (index[w] == kUnset) {
          call.back().code = g.code();
          enter(w);
          descended = true;
          break;
        }
        if (on_stack[w]) lowlink[v] = std::min(lowlink[v], index[w]);
        g.advance();
      }
      if (descended) continue;
      if (lowlink[v] == index[v]) {
        std::uint32_t id = comp_count++;
        for (;;) {
          std::uint32_t w = scc_stack.back();
          scc_stack.pop_back();
          on_stack[w] = false;
          comp[w] = id;
          if (w == v) break;
        }
      }
      call.pop_back();
      if (!call.empty()) {
        std::uint32_t parent = call.back().v;
        g.restore(parent, call.back().code);
        lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
        g.advance();
      }
    }
  }
}

template <class Cursor>
SccReport scc_impl(Cursor& g) {
  SccReport r;
  r.vertices = g.size();
  tarjan(g, r.component, r.count);
  // Relabel components by the smallest vertex they contain.
  std::vector<std::uint32_t> remap(r.count, kUnset);
  std::uint32_t next = 0;
  for (std::uint64_t v = 0; v < r.vertices; ++v)
    if (remap[r.component[v]] == kUnset) remap[r.component[v]] = next++;
  for (std::uint64_t v = 0; v < r.vertices; ++v)
    r.component[v] = remap[r.component[v]];
  r.sizes.assign(r.count, 0);
  for (std::uint64_t v = 0; v < r.vertices; ++v) r.sizes[r.component[v]]++;
  for (std::uint64_t s : r.sizes) {
    r.giant_size = std::max(r.giant_size, s);
    if (s == 1) r.singleton_count++;
  }
  return r;
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::uint64_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

template <class Cursor>
WeakReport weak_impl(Cursor& g) {
  WeakReport r;
  r.vertices = g.size();
  UnionFind uf(r.vertices);
  for (std::uint64_t v = 0; v < r.vertices; ++v)
    g.for_each(static_cast<std::uint32_t>(v),
               [&](std::uint32_t w) { uf.unite(static_cast<std::uint32_t>(v), w); });
  // Roots are the smallest vertex of their component, so ascending root
  // order is the canonical component order.
  std::vector<std::uint32_t> id(r.vertices, kUnset);
  for (std::uint64_t v = 0; v < r.vertices; ++v) {
    std::uint32_t root = uf.find(static_cast<std::uint32_t>(v));
    if (id[root] == kUnset) {
      id[root] = r.count++;
      r.sizes.push_back(0);
    }
    r.sizes[id[root]]++;
  }
  return r;
}

template <class Cursor>
std::vector<std::uint32_t> indeg_impl(Cursor& g) {
  std::vector<std::uint32_t> deg(g.size(), 0);
  for (std::uint64_t v = 0; v < g.size(); ++v)
    g.for_each(static_cast<std::uint32_t>(v),
               [&](std::uint32_t w) { deg[w]++; });
  return deg;
}

}  // namespace

ExplicitGraph build_graph(const Instance& inst, std::uint64_t max_vertices) {
  ExplicitGraph g{inst, vertex_count(inst, max_vertices), {}, {}};
  ImplicitCursor scan(inst, max_vertices);
  g.offsets.assign(g.num_vertices + 1, 0);
  for (std::uint64_t v = 0; v < g.num_vertices; ++v) {
    scan.decode_active(static_cast<std::uint32_t>(v));
    std::uint64_t d = 1;
    for (std::size_t i = 0; i < scan.mover_room.size(); ++i)
      d *= static_cast<std::uint64_t>(inst.rooms - 1);
    g.offsets[v + 1] = g.offsets[v] + d;
  }
  g.targets.resize(g.offsets[g.num_vertices]);
  for (std::uint64_t v = 0; v < g.num_vertices; ++v) {
    std::uint64_t at = g.offsets[v];
    scan.for_each(static_cast<std::uint32_t>(v),
                  [&](std::uint32_t w) { g.targets[at++] = w; });
  }
  return g;
}

SccReport scc_decompose(const ExplicitGraph& g) {
  ExplicitCursor c(g);
  return scc_impl(c);
}

SccReport scc_decompose(const Instance& inst, std::uint64_t max_vertices) {
  ImplicitCursor c(inst, max_vertices);
  return scc_impl(c);
}

WeakReport weak_components(const ExplicitGraph& g) {
  ExplicitCursor c(g);
  return weak_impl(c);
}

WeakReport weak_components(const Instance& inst, std::uint64_t max_vertices) {
  ImplicitCursor c(inst, max_vertices);
  return weak_impl(c);
}

std::vector<std::uint32_t> in_degrees(const ExplicitGraph& g) {
  ExplicitCursor c(g);
  return indeg_impl(c);
}

std::vector<std::uint32_t> in_degrees(const Instance& inst,
                                      std::uint64_t max_vertices) {
  ImplicitCursor c(inst, max_vertices);
  return indeg_impl(c);
}

namespace {

struct BfsRun {
  std::vector<std::int32_t> dist;
  std::vector<std::uint32_t> parent;
};

BfsRun bfs_run(const Instance& inst, const Config& from,
               std::uint64_t max_vertices, bool want_parents,
               std::optional<std::uint32_t> stop_at) {
  ImplicitCursor g(inst, max_vertices);
  check_config(from, inst);
  auto src = static_cast<std::uint32_t>(encode_index(from, inst, max_vertices));
  BfsRun r;
  r.dist.assign(g.size(), -1);
  if (want_parents) r.parent.assign(g.size(), kUnset);
  std::vector<std::uint32_t> queue;
  queue.push_back(src);
  r.dist[src] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::uint32_t v = queue[head];
    if (stop_at && v == *stop_at) break;
    g.for_each(v, [&](std::uint32_t w) {
      if (r.dist[w] != -1) return;
      r.dist[w] = r.dist[v] + 1;
      if (want_parents) r.parent[w] = v;
      queue.push_back(w);
    });
  }
  return r;
}

}  // namespace

std::optional<std::uint64_t> bfs_distance(const Instance& inst,
                                          const Config& from, const Config& to,
                                          std::uint64_t max_vertices) {
  check_config(to, inst);
  auto target = static_cast<std::uint32_t>(encode_index(to, inst, max_vertices));
  BfsRun r = bfs_run(inst, from, max_vertices, false, target);
  if (r.dist[target] < 0) return std::nullopt;
  return static_cast<std::uint64_t>(r.dist[target]);
}

std::optional<Path> bfs_path(const Instance& inst, const Config& from,
                             const Config& to, std::uint64_t max_vertices) {
  check_config(to, inst);
  auto target = static_cast<std::uint32_t>(encode_index(to, inst, max_vertices));
  BfsRun r = bfs_run(inst, from, max_vertices, true, target);
  if (r.dist[target] < 0) return std::nullopt;
  std::vector<std::uint32_t> ids{target};
  while (r.parent[ids.back()] != kUnset) ids.push_back(r.parent[ids.back()]);
  Path path;
  for (auto it = ids.rbegin(); it != ids.rend(); ++it)
    path.push_back(decode_index(*it, inst, max_vertices));
  return path;
}

std::vector<std::int32_t> bfs_all_distances(const Instance& inst,
                                            const Config& from,
                                            std::uint64_t max_vertices) {
  return bfs_run(inst, from, max_vertices, false, std::nullopt).dist;
}

TheoremReport verify_theorems(const Instance& inst,
                              std::uint64_t max_vertices) {
  TheoremReport r{inst};
  r.vertices = vertex_count(inst, max_vertices);
  const int n = inst.people;
  const int m = inst.rooms;

  SccReport scc = scc_decompose(inst, max_vertices);
  WeakReport weak = weak_components(inst, max_vertices);
  std::vector<std::uint32_t> indeg = in_degrees(inst, max_vertices);

  r.strongly_connected = scc.strongly_connected();
  r.weakly_connected = weak.weakly_connected();
  r.scc_count = scc.count;
  r.giant_size = scc.giant_size;
  r.singleton_sccs = scc.singleton_count;

  bool zero_is_concentrated = true;
  bool singletons_are_concentrated = true;
  Config f;
  for (std::uint64_t v = 0; v < r.vertices; ++v) {
    f = decode_index(v, inst, max_vertices);
    bool conc = is_concentrated(f, m);
    if (conc) r.concentrated_vertices++;
    if (indeg[v] == 0) r.zero_in_degree++;
    if ((indeg[v] == 0) != conc) zero_is_concentrated = false;
    if ((scc.sizes[scc.component[v]] == 1) != conc)
      singletons_are_concentrated = false;
  }

  r.predicted_strong = m >= n + 1;
  r.verdict_strong = r.strongly_connected == r.predicted_strong;
  r.verdict_zero_in_degree =
      m <= n ? zero_is_concentrated : r.zero_in_degree == 0;

  r.size_laws_apply = m >= 3 && m <= n;
  if (r.size_laws_apply) {
    std::uint64_t small = 1;
    for (int i = 0; i < n - m + 1; ++i)
      small *= static_cast<std::uint64_t>(m);
    r.predicted_giant = r.vertices - small;
    r.predicted_singletons = small;
    r.verdict_weakly_connected = r.weakly_connected;
    r.verdict_giant = r.giant_size == r.predicted_giant &&
                      scc.count == 1 + r.predicted_singletons;
    r.verdict_singletons = r.singleton_sccs == r.predicted_singletons;
    r.verdict_singletons_concentrated = singletons_are_concentrated;
  }

  r.all_pass = r.verdict_strong && r.verdict_zero_in_degree &&
               r.verdict_weakly_connected && r.verdict_giant &&
               r.verdict_singletons && r.verdict_singletons_concentrated;
  return r;
}

namespace {

const char* class_name(ConfigClass c) {
  switch (c) {
    case ConfigClass::Spread: return "spread";
    case ConfigClass::Concentrated: return "concentrated";
    default: return "other";
  }
}

const char* class_shape(ConfigClass c) {
  switch (c) {
    case ConfigClass::Spread: return "circle";
    case ConfigClass::Concentrated: return "box";
    default: return "diamond";
  }
}

}  // namespace

void export_dot(const Instance& inst, std::ostream& os,
                std::uint64_t max_vertices) {
  std::uint64_t verts = vertex_count(inst, max_vertices);
  ImplicitCursor scan(inst, max_vertices);
  os << "digraph rooms {\n  label=\"G(" << inst.people << "," << inst.rooms
     << ")\";\n";
  for (std::uint64_t v = 0; v < verts; ++v) {
    Config f = decode_index(v, inst, max_vertices);
    ConfigClass c = classify(f, inst.rooms);
    os << "  n" << v << " [label=\"" << format_config(f) << "\", shape="
       << class_shape(c) << ", class=\"" << class_name(c) << "\"];\n";
  }
  for (std::uint64_t v = 0; v < verts; ++v)
    scan.for_each(static_cast<std::uint32_t>(v), [&](std::uint32_t w) {
      os << "  n" << v << " -> n" << w << ";\n";
    });
  os << "}\n";
}

void export_jsonl(const Instance& inst, std::ostream& os,
                  std::uint64_t max_vertices) {
  std::uint64_t verts = vertex_count(inst, max_vertices);
  SccReport scc = scc_decompose(inst, max_vertices);
  std::vector<std::uint32_t> indeg = in_degrees(inst, max_vertices);
  for (std::uint64_t v = 0; v < verts; ++v) {
    Config f = decode_index(v, inst, max_vertices);
    os << "{\"id\":" << v << ",\"config\":\"" << format_config(f)
       << "\",\"scc\":" << scc.component[v] << ",\"in_deg\":" << indeg[v]
       << ",\"out_deg\":" << out_degree(f, inst.rooms) << ",\"class\":\""
       << class_name(classify(f, inst.rooms)) << "\"}\n";
  }
}

}  // namespace rooms
